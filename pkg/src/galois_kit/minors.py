"""Minor formation schemes, Skolem exhaustion, and conjunctive-minor predicates.

A scheme is a family of index maps h_j from source coordinates into
target coordinates plus named indeterminates; a Skolem map assigns
domain values to the indeterminates.  On a finite domain every
existential is exhausted outright, so relation minors are computed
exactly; the repetition-function minor predicates quantify over all
matrix widths and are therefore checked up to an explicit column cap.
"""

from dataclasses import dataclass
from itertools import product

from .errors import GaloisKitError
from .extnat import INF, ext_add
from .multisets import TupleMatrix, columns_multiset, enumerate_matrices_leq
from .repetition import RepetitionFunction

__all__ = [
    "MinorScheme",
    "MinorVerdict",
    "apply_scheme_map",
    "compose_schemes",
    "is_conjunctive_minor_constraint",
    "is_extensive_rf_minor",
    "is_restrictive_rf_minor",
    "rf_minor_sum_check",
    "scheme_fixture",
    "tight_relation_minor",
]


@dataclass(frozen=True)
class MinorScheme:
    """Scheme with target m, named indeterminates, and maps h_j.

    Each map is a tuple whose entries are either 0-based target indices
    (ints < target) or indeterminate names (strings).
    """

    target: int
    indeterminates: tuple
    maps: tuple

    def __post_init__(self):
        if self.target < 1:
            raise GaloisKitError("scheme target must be positive")
        object.__setattr__(self, "indeterminates", tuple(self.indeterminates))
        object.__setattr__(self, "maps", tuple(tuple(h) for h in self.maps))
        if not self.maps:
            raise GaloisKitError("a scheme needs at least one map")
        names = set(self.indeterminates)
        if len(names) != len(self.indeterminates):
            raise GaloisKitError("duplicate indeterminate names")
        for h in self.maps:
            if not h:
                raise GaloisKitError("source arities must be positive")
            for e in h:
                if isinstance(e, int):
                    if not 0 <= e < self.target:
                        raise GaloisKitError(f"index {e} out of target range")
                elif e not in names:
                    raise GaloisKitError(f"unknown indeterminate {e!r}")

    @property
    def source_arities(self):
        return tuple(len(h) for h in self.maps)

    @classmethod
    def identity(cls, m):
        return cls(m, (), (tuple(range(m)),))


def apply_scheme_map(a, sigma, h):
    """(a + sigma) h: component i is a[h(i)] for an index, sigma[h(i)] for a var."""
    return tuple(a[e] if isinstance(e, int) else sigma[e] for e in h)


def skolem_maps(indeterminates, k):
    """All assignments of domain values to the indeterminates, deterministic order."""
    names = tuple(indeterminates)
    for values in product(range(k), repeat=len(names)):
        yield dict(zip(names, values))


def compose_schemes(outer, inner_schemes):
    """The composite scheme: one inner scheme per outer map.

    Entry i of the composite map for (j, i) resolves the inner entry
    through the outer map h_j; inner indeterminates are kept and renamed
    with a deterministic "~j" suffix on collision.
    """
    inner_schemes = list(inner_schemes)
    if len(inner_schemes) != len(outer.maps):
        raise GaloisKitError("need exactly one inner scheme per outer map")
    for h, inner in zip(outer.maps, inner_schemes):
        if inner.target != len(h):
            raise GaloisKitError("inner scheme target must equal the outer source arity")
    used = set(outer.indeterminates)
    all_vars = list(outer.indeterminates)
    renamings = []
    for j, inner in enumerate(inner_schemes):
        ren = {}
        for v in inner.indeterminates:
            name = v
            while name in used:
                name = f"{name}~{j}"
            ren[v] = name
            used.add(name)
            all_vars.append(name)
        renamings.append(ren)
    maps = []
    for j, (h, inner) in enumerate(zip(outer.maps, inner_schemes)):
        ren = renamings[j]
        for hi in inner.maps:
            maps.append(
                tuple(h[e] if isinstance(e, int) else ren[e] for e in hi)
            )
    return MinorScheme(outer.target, tuple(all_vars), tuple(maps))


def tight_relation_minor(scheme, relations, domain_size):
    """R = { a : exists sigma, forall j, (a + sigma) h_j in R_j }, exact."""
    relations = [frozenset(map(tuple, r)) for r in relations]
    if len(relations) != len(scheme.maps):
        raise GaloisKitError("need one relation per scheme map")
    out = set()
    for a in product(range(domain_size), repeat=scheme.target):
        for sigma in skolem_maps(scheme.indeterminates, domain_size):
            if all(
                apply_scheme_map(a, sigma, h) in r
                for h, r in zip(scheme.maps, relations)
            ):
                out.add(a)
                break
    return frozenset(out)


@dataclass(frozen=True)
class MinorVerdict:
    """Outcome of a bounded minor predicate check.

    The underlying condition quantifies over matrices of every width;
    this verdict is conclusive only for widths up to col_cap and is
    always labeled bounded.
    """

    holds: bool
    col_cap: int
    counterexample: object = None
    bounded: bool = True

    def __bool__(self):
        return self.holds


def default_col_cap(scheme):
    return max(scheme.source_arities) + 2


def _mapped_matrix(m, sigmas, h):
    cols = tuple(
        apply_scheme_map(col, sigma, h) for col, sigma in zip(m.columns, sigmas)
    )
    return TupleMatrix(len(h), cols)


def _family_respected(m, sigmas, scheme, phis):
    for h, phi in zip(scheme.maps, phis):
        mapped = _mapped_matrix(m, sigmas, h)
        if any(
            c > phi.value(t) for t, c in columns_multiset(mapped).counts.items()
        ):
            return False
    return True


def _exists_sigmas(m, scheme, phis, k):
    n = m.column_count
    per_column = list(skolem_maps(scheme.indeterminates, k))
    for sigmas in product(per_column, repeat=n):
        if _family_respected(m, sigmas, scheme, phis):
            return True
    return False


def is_restrictive_rf_minor(phi, phis, scheme, col_cap=None):
    """Bounded check: M < phi implies Skolem maps exist mapping M into the family."""
    phis = list(phis)
    if len(phis) != len(scheme.maps):
        raise GaloisKitError("need one repetition function per scheme map")
    if col_cap is None:
        col_cap = default_col_cap(scheme)
    k = phi.domain_size
    for n in range(1, col_cap + 1):
        for m in enumerate_matrices_leq(phi, n):
            if not _exists_sigmas(m, scheme, phis, k):
                return MinorVerdict(False, col_cap, m)
    return MinorVerdict(True, col_cap)


def is_extensive_rf_minor(phi, phis, scheme, col_cap=None):
    """Bounded check: whenever Skolem maps exist for M, M < phi holds."""
    phis = list(phis)
    if len(phis) != len(scheme.maps):
        raise GaloisKitError("need one repetition function per scheme map")
    if col_cap is None:
        col_cap = default_col_cap(scheme)
    k = phi.domain_size
    everything = RepetitionFunction.constant(phi.arity, k, INF)
    for n in range(1, col_cap + 1):
        for m in enumerate_matrices_leq(everything, n):
            if _exists_sigmas(m, scheme, phis, k):
                if any(
                    c > phi.value(t)
                    for t, c in columns_multiset(m).counts.items()
                ):
                    return MinorVerdict(False, col_cap, m)
    return MinorVerdict(True, col_cap)


def rf_minor_sum_check(phi, phis, scheme, direction="restrictive"):
    """Necessary sum condition on equivalence classes of target tuples.

    For each target tuple a and map h_j, compares the phi-mass of the
    tuples indistinguishable from a under h_j with the phi_j-mass of the
    reachable source tuples.  Restrictive minors need <=, extensive
    minors need >=.  Returns the first violating (a, j) or None.
    """
    if direction not in ("restrictive", "extensive"):
        raise GaloisKitError("direction must be 'restrictive' or 'extensive'")
    phis = list(phis)
    k = phi.domain_size
    m = scheme.target
    for j, (h, phi_j) in enumerate(zip(scheme.maps, phis)):
        used = sorted({e for e in h if isinstance(e, int)})
        free = [i for i in range(m) if i not in used]
        for a in product(range(k), repeat=m):
            cls_sum = 0
            for fill in product(range(k), repeat=len(free)):
                b = list(a)
                for i, v in zip(free, fill):
                    b[i] = v
                cls_sum = ext_add(cls_sum, phi.value(tuple(b)))
            reach = {
                apply_scheme_map(a, sigma, h)
                for sigma in skolem_maps(scheme.indeterminates, k)
            }
            reach_sum = 0
            for c in sorted(reach):
                reach_sum = ext_add(reach_sum, phi_j.value(c))
            if direction == "restrictive" and not cls_sum <= reach_sum:
                return (a, j)
            if direction == "extensive" and not cls_sum >= reach_sum:
                return (a, j)
    return None


def is_conjunctive_minor_constraint(c, family, scheme, col_cap=None):
    """Bounded conjunctive-minor predicate for generalized constraints.

    Restrictive (bounded) on the antecedents; exact extensive test on the
    consequents via containment of the tight relation minor.
    """
    family = list(family)
    if len(family) != len(scheme.maps):
        raise GaloisKitError("need one constraint per scheme map")
    if scheme.target != c.arity:
        raise GaloisKitError("scheme target must equal the constraint arity")
    ante = is_restrictive_rf_minor(
        c.antecedent, [g.antecedent for g in family], scheme, col_cap
    )
    if not ante:
        return MinorVerdict(False, ante.col_cap, ante.counterexample)
    tight = tight_relation_minor(
        scheme, [g.consequent for g in family], c.codomain_size
    )
    if not tight <= c.consequent:
        missing = sorted(tight - c.consequent)[0]
        return MinorVerdict(False, ante.col_cap, missing)
    return MinorVerdict(True, ante.col_cap)


def scheme_fixture(kind, m):
    """The named schemes used to rebuild the distinguished constraints.

    Returns (scheme, family_arities).  Kinds:
      - trivial_from_equality(m): h: 2 -> m constant 0 (identify then spread);
        rebuilds the m-ary trivial constraint from the binary equality one.
      - equality_chain(m): h_i(0) = i, h_i(1) = i + 1 for i in 0..m-2;
        rebuilds the m-ary equality constraint from binary copies (m >= 2).
      - empty_spread(m): h: 1 -> m with h(0) = 0;
        rebuilds the m-ary empty constraint from the unary one.
      - dummy_add(m): the same 1 -> m map as a generic dummy-adder.
      - identify(m): h: m -> 1 collapsing every coordinate to 0.
    """
    if m < 1:
        raise GaloisKitError("arity must be positive")
    if kind == "trivial_from_equality":
        return MinorScheme(m, (), ((0, 0),)), (2,)
    if kind == "equality_chain":
        if m < 2:
            raise GaloisKitError("equality_chain needs m >= 2")
        maps = tuple((i, i + 1) for i in range(m - 1))
        return MinorScheme(m, (), maps), (2,) * (m - 1)
    if kind == "empty_spread":
        return MinorScheme(m, (), ((0,),)), (1,)
    if kind == "dummy_add":
        return MinorScheme(m, (), ((0,),)), (1,)
    if kind == "identify":
        return MinorScheme(1, (), ((0,) * m,)), (m,)
    raise GaloisKitError(f"unknown scheme fixture kind {kind!r}")
