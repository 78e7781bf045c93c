"""Clusters: downward-closed families of finite multisets of m-tuples.

A cluster is presented as a finite union of boxed generators: a
repetition-function box bounding per-tuple multiplicities plus a
cardinality cap.  The presentation is closed under union, intersection,
quotient, and breadth restriction with closed-form generator
arithmetic, and explicit antichains (box = the multiset itself) cover
everything else.  Membership equivalence, not generator identity, is
the contract.
"""

from dataclasses import dataclass
from itertools import product

from .errors import BudgetExceededError, GaloisKitError
from .extnat import INF, ext_min, ext_sub, format_extnat, is_extnat
from .multisets import FiniteMultiset, TupleMatrix, apply_op_rows, ms_join, split_enumerate
from .repetition import RepetitionFunction
from .minors import apply_scheme_map, skolem_maps

__all__ = [
    "BoxedGenerator",
    "Cluster",
    "ClusterVerdict",
    "breadth",
    "breadth_restrict",
    "cluster_intersect",
    "cluster_member",
    "cluster_minor_member",
    "cluster_union",
    "empty_cluster",
    "enumerate_cluster_members",
    "equality_cluster",
    "materialize_minor",
    "order_cluster",
    "quotient",
    "relation_cluster",
    "satisfies_cluster",
    "trivial_cluster",
]

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class BoxedGenerator:
    """A multiplicity box (repetition function) plus a cardinality cap."""

    box: RepetitionFunction
    cap: object  # int or INF

    def __post_init__(self):
        if not is_extnat(self.cap):
            raise GaloisKitError(f"invalid generator cap {self.cap!r}")

    def admits(self, s):
        if s.cardinality > self.cap:
            return False
        return all(c <= self.box.value(t) for t, c in s.counts.items())

    def dominated_by(self, other):
        from .repetition import rf_leq

        return self.cap <= other.cap and rf_leq(self.box, other.box)


@dataclass(frozen=True)
class Cluster:
    """Finite union of boxed generators; denotes a downward-closed family."""

    arity: int
    domain_size: int
    generators: frozenset

    def __post_init__(self):
        object.__setattr__(self, "generators", frozenset(self.generators))
        for g in self.generators:
            if g.box.arity != self.arity or g.box.domain_size != self.domain_size:
                raise GaloisKitError("generator arity/domain mismatch with cluster")

    def sorted_generators(self):
        return sorted(
            self.generators,
            key=lambda g: (
                g.cap == INF,
                g.cap if g.cap != INF else 0,
                g.box.default == INF,
                g.box.default if g.box.default != INF else 0,
                sorted(g.box.exceptions.items(), key=lambda kv: (kv[0], kv[1] == INF, kv[1] if kv[1] != INF else 0)),
            ),
        )

    def normalize(self):
        """Drop generators dominated pointwise-and-cap by another."""
        gens = list(self.generators)
        kept = [
            g
            for g in gens
            if not any(h != g and g.dominated_by(h) for h in gens)
        ]
        # Equal generators were already merged by the frozenset.
        return Cluster(self.arity, self.domain_size, frozenset(kept))

    def __repr__(self):
        return (
            f"Cluster(m={self.arity}, k={self.domain_size}, "
            f"{len(self.generators)} generators)"
        )


def cluster_member(s, cluster):
    """True iff some generator boxes-and-caps the multiset."""
    if s.arity != cluster.arity:
        raise GaloisKitError("multiset arity does not match the cluster")
    return any(g.admits(s) for g in cluster.generators)


def _generator_members(gen, limit, budget):
    box = gen.box
    if box.default > 0:
        space = box.domain_size ** box.arity
        if space > budget:
            raise BudgetExceededError(space, budget, "cluster member enumeration")
    support = box.positive_support()
    total_cap = ext_min(gen.cap, limit)
    if total_cap == INF:
        raise GaloisKitError("member enumeration needs a finite cardinality limit")

    def rec(idx, remaining, counts):
        yield FiniteMultiset(box.arity, dict(counts))
        if remaining == 0:
            return
        for i in range(idx, len(support)):
            t = support[i]
            if counts.get(t, 0) < box.value(t):
                counts[t] = counts.get(t, 0) + 1
                yield from rec(i, remaining - 1, counts)
                counts[t] -= 1
                if not counts[t]:
                    del counts[t]

    yield from rec(0, int(total_cap), {})


def enumerate_cluster_members(cluster, limit, budget=DEFAULT_BUDGET):
    """All members of cardinality <= limit, deduplicated, deterministic order."""
    seen = set()
    for gen in cluster.sorted_generators():
        for s in _generator_members(gen, limit, budget):
            if s not in seen:
                seen.add(s)
    return sorted(seen, key=lambda s: (s.cardinality, sorted(s.counts.items())))


@dataclass(frozen=True)
class ClusterVerdict:
    """Satisfaction up to a breadth bound, with a concrete violating split."""

    satisfied: bool
    breadth_cap: int
    witness: object = None  # (m1, m2, output multiset)

    def __bool__(self):
        return self.satisfied


def satisfies_cluster(f, cluster, breadth_cap, budget=DEFAULT_BUDGET):
    """Exhaustive cluster satisfaction at the given breadth bound.

    Checks every member S with |S| <= breadth_cap and every ordered
    selection [M1 | M2] with n = arity(f) columns in M1; the verdict
    equals exact satisfaction of the breadth restriction of the cluster.
    """
    if f.domain_size != cluster.domain_size or f.codomain_size != cluster.domain_size:
        raise GaloisKitError("operation alphabet does not match the cluster")
    if breadth_cap < f.arity:
        raise GaloisKitError(
            f"breadth cap {breadth_cap} is below the arity {f.arity}: no split exists"
        )
    for s in enumerate_cluster_members(cluster, breadth_cap, budget):
        if s.cardinality < f.arity:
            continue
        for m1, m2 in split_enumerate(s, f.arity):
            image = apply_op_rows(f, m1)
            out = ms_join(FiniteMultiset.from_tuples(cluster.arity, [image]), m2)
            if not cluster_member(out, cluster):
                return ClusterVerdict(False, breadth_cap, (m1, m2, out))
    return ClusterVerdict(True, breadth_cap)


def _rf_minus_counts(box, s):
    """box - nu_S pointwise, with inf - n = inf."""
    exc = dict(box.exceptions)
    keys = set(exc) | set(s.counts)
    new_exc = {t: ext_sub(box.value(t), s.multiplicity(t)) for t in keys}
    return RepetitionFunction(box.arity, box.domain_size, box.default, new_exc)


def quotient(cluster, s):
    """Phi / S: the multisets whose join with S stays in the cluster."""
    if s.arity != cluster.arity:
        raise GaloisKitError("multiset arity does not match the cluster")
    gens = set()
    for g in cluster.generators:
        if g.admits(s):
            gens.add(
                BoxedGenerator(_rf_minus_counts(g.box, s), ext_sub(g.cap, s.cardinality))
            )
    return Cluster(cluster.arity, cluster.domain_size, frozenset(gens))


def cluster_union(family):
    family = list(family)
    if not family:
        raise GaloisKitError("union of an empty family")
    first = family[0]
    gens = set()
    for c in family:
        if (c.arity, c.domain_size) != (first.arity, first.domain_size):
            raise GaloisKitError("cluster arity mismatch in union")
        gens |= c.generators
    return Cluster(first.arity, first.domain_size, frozenset(gens))


def cluster_intersect(c1, c2):
    """Pairwise generator intersection: pointwise-min boxes, min caps."""
    if (c1.arity, c1.domain_size) != (c2.arity, c2.domain_size):
        raise GaloisKitError("cluster arity mismatch in intersection")
    from .repetition import rf_pointwise_inf

    gens = set()
    for g in c1.generators:
        for h in c2.generators:
            gens.add(
                BoxedGenerator(
                    rf_pointwise_inf([g.box, h.box]), ext_min(g.cap, h.cap)
                )
            )
    return Cluster(c1.arity, c1.domain_size, frozenset(gens))


def breadth_restrict(cluster, p):
    """Cap every generator's cardinality at p."""
    gens = frozenset(
        BoxedGenerator(g.box, ext_min(g.cap, p)) for g in cluster.generators
    )
    return Cluster(cluster.arity, cluster.domain_size, gens)


def breadth(cluster):
    """Max member cardinality: max over generators of min(cap, box mass)."""
    best = 0
    for g in cluster.generators:
        best = max(best, ext_min(g.cap, g.box.total()))
    return best


def trivial_cluster(m, p, domain_size):
    """All multisets of cardinality at most p (p = 0 still contains epsilon)."""
    if p < 0:
        raise GaloisKitError("breadth must be nonnegative")
    box = RepetitionFunction.constant(m, domain_size, INF)
    return Cluster(m, domain_size, frozenset({BoxedGenerator(box, p)}))


def empty_cluster(m, domain_size):
    """The empty family: not even the empty multiset is a member."""
    return Cluster(m, domain_size, frozenset())


def equality_cluster(domain_size):
    """Binary cluster of multisets supported on the diagonal only."""
    exc = {(a, a): INF for a in range(domain_size)}
    box = RepetitionFunction(2, domain_size, 0, exc)
    return Cluster(2, domain_size, frozenset({BoxedGenerator(box, INF)}))


def relation_cluster(relation, m, domain_size):
    """Multisets supported inside the relation, unbounded cardinality."""
    exc = {tuple(t): INF for t in relation}
    for t in exc:
        if len(t) != m or any(not 0 <= x < domain_size for x in t):
            raise GaloisKitError(f"relation tuple {t!r} invalid")
    box = RepetitionFunction(m, domain_size, 0, exc)
    return Cluster(m, domain_size, frozenset({BoxedGenerator(box, INF)}))


def _validate_poset(leq, domain_size):
    pairs = {tuple(p) for p in leq}
    elements = range(domain_size)
    for a in elements:
        if (a, a) not in pairs:
            raise GaloisKitError("order must be reflexive")
    for a, b in pairs:
        if a != b and (b, a) in pairs:
            raise GaloisKitError("order must be antisymmetric")
    for a, b in pairs:
        for c in elements:
            if (b, c) in pairs and (a, c) not in pairs:
                raise GaloisKitError("order must be transitive")
    return pairs


def order_cluster(leq, domain_size):
    """Quaternary cluster characterizing per-variable monotone-or-antitone operations.

    A quadruple (a, b, c, d) is forbidden when the two pairs move in
    opposite directions or are incomparable, free when both pairs are
    constant, and a strict witness otherwise; at most one strict witness
    may appear in a member.
    """
    pairs = _validate_poset(leq, domain_size)

    def le(a, b):
        return (a, b) in pairs

    forbidden, strict, free = [], [], []
    for t in product(range(domain_size), repeat=4):
        a, b, c, d = t
        if not (le(a, b) or le(b, a)) or not (le(c, d) or le(d, c)):
            forbidden.append(t)
        elif (le(a, b) and not le(b, a) and le(d, c) and not le(c, d)) or (
            le(b, a) and not le(a, b) and le(c, d) and not le(d, c)
        ):
            forbidden.append(t)
        elif a == b and c == d:
            free.append(t)
        else:
            strict.append(t)

    gens = set()
    base = {t: 0 for t in forbidden}
    for x in strict:
        exc = dict(base)
        for y in strict:
            exc[y] = 1 if y == x else 0
        gens.add(
            BoxedGenerator(RepetitionFunction(4, domain_size, INF, exc), INF)
        )
    exc = dict(base)
    for y in strict:
        exc[y] = 0
    gens.add(BoxedGenerator(RepetitionFunction(4, domain_size, INF, exc), INF))
    return Cluster(4, domain_size, frozenset(gens))


def cluster_minor_member(m, clusters, scheme):
    """Membership oracle for the conjunctive minor of a cluster family.

    True iff per-column Skolem maps exist sending every mapped matrix
    into its cluster; exhausted over all |A|^(|V| * n) assignments.
    """
    clusters = list(clusters)
    if len(clusters) != len(scheme.maps):
        raise GaloisKitError("need one cluster per scheme map")
    if m.row_count != scheme.target:
        raise GaloisKitError("matrix row count must equal the scheme target")
    k = clusters[0].domain_size
    n = m.column_count
    per_column = list(skolem_maps(scheme.indeterminates, k))
    for sigmas in product(per_column, repeat=n):
        ok = True
        for h, phi_cluster in zip(scheme.maps, clusters):
            cols = tuple(
                apply_scheme_map(col, sigma, h)
                for col, sigma in zip(m.columns, sigmas)
            )
            mapped = FiniteMultiset.from_tuples(len(h), cols) if cols else FiniteMultiset.empty(len(h))
            if not cluster_member(mapped, phi_cluster):
                ok = False
                break
        if ok:
            return True
    return False


def _all_multisets(arity, domain_size, max_card):
    tuples = sorted(product(range(domain_size), repeat=arity))

    def rec(idx, remaining, counts):
        yield FiniteMultiset(arity, dict(counts))
        if remaining == 0:
            return
        for i in range(idx, len(tuples)):
            t = tuples[i]
            counts[t] = counts.get(t, 0) + 1
            yield from rec(i, remaining - 1, counts)
            counts[t] -= 1
            if not counts[t]:
                del counts[t]

    yield from rec(0, max_card, {})


def materialize_minor(clusters, scheme, breadth_cap, budget=DEFAULT_BUDGET):
    """Explicit antichain presentation of a cluster conjunctive minor.

    Enumerates every multiset up to the breadth cap through the
    membership oracle and stores the maximal members as boxed
    generators (box = the multiset, cap = its cardinality).
    """
    clusters = list(clusters)
    k = clusters[0].domain_size
    m = scheme.target
    space = k ** m
    estimate = space ** breadth_cap if breadth_cap else 1
    if estimate > budget:
        raise BudgetExceededError(estimate, budget, "cluster minor materialization")
    from .multisets import ms_sub

    members = []
    for s in _all_multisets(m, k, breadth_cap):
        matrix = TupleMatrix(m, tuple(s.elements()))
        if cluster_minor_member(matrix, clusters, scheme):
            members.append(s)
    maximal = [
        s
        for s in members
        if not any(t != s and ms_sub(s, t) for t in members)
    ]
    gens = frozenset(
        BoxedGenerator(
            RepetitionFunction.from_counts(m, k, s.counts), s.cardinality
        )
        for s in maximal
    )
    return Cluster(m, k, gens)


def format_cap(cap):
    return format_extnat(cap)
