"""The two Galois connections at bounded parameters.

Functions vs generalized constraints (f_pol / gc_inv) and operations vs
clusters (c_pol / cl_inv), plus the separating-object constructions: on
a finite domain the disagreement row set can always be taken to be the
whole input space, which makes both separators exact at the arity of
the function being excluded.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .errors import BudgetExceededError, GaloisKitError
from .operations import OperationClass, all_operations, close_composition, close_perm_dummy
from .multisets import (
    FiniteMultiset,
    TupleMatrix,
    apply_op_rows,
    columns_multiset,
    ms_diff,
    ms_join,
    ms_partitions,
    ms_sub,
)
from .repetition import RepetitionFunction
from .constraints import GeneralizedConstraint, satisfies_constraint
from .clusters import (
    BoxedGenerator,
    Cluster,
    cluster_member,
    satisfies_cluster,
)

__all__ = [
    "GaloisConfig",
    "c_pol",
    "cl_inv",
    "class_image",
    "f_pol",
    "gc_inv",
    "separating_cluster",
    "separating_constraint",
]


@dataclass(frozen=True)
class GaloisConfig:
    """Caps that make the unbounded connections effective.

    n_max bounds function arities, m_max bounds constraint arities,
    col_max bounds matrix widths in gc_inv (defaults to n_max), breadth
    bounds cluster member cardinalities, budget bounds enumeration work.
    """

    domain_size: int
    n_max: int
    m_max: int
    breadth: int
    codomain_size: int = None
    col_max: int = None
    budget: int = 2_000_000

    def __post_init__(self):
        if self.codomain_size is None:
            object.__setattr__(self, "codomain_size", self.domain_size)
        if self.col_max is None:
            object.__setattr__(self, "col_max", self.n_max)
        for name in ("domain_size", "n_max", "m_max", "breadth", "codomain_size", "col_max"):
            if getattr(self, name) < 1:
                raise GaloisKitError(f"{name} must be at least 1")


def class_image(cls_, m):
    """C M: the set of row-wise images f M over the matching arity part."""
    return frozenset(
        apply_op_rows(f, m) for f in cls_.arity_part(m.column_count)
    )


def gc_inv(cls_, cfg):
    """The proof-canonical invariant constraints of a class.

    One constraint (chi_M, C M) per matrix M with distinct rows, for
    every width n <= min(n_max, col_max) and row count m <= m_max.  The
    class is closed under permutation and dummy variables first, which
    is exactly the hypothesis making every emitted constraint satisfied
    by every member.
    """
    closed = close_perm_dummy(cls_, max(cfg.n_max, cls_.max_arity or 1))
    k = cls_.domain_size
    out = []
    for n in range(1, min(cfg.n_max, cfg.col_max) + 1):
        all_rows = sorted(product(range(k), repeat=n))
        for m in range(1, cfg.m_max + 1):
            for rows in combinations(all_rows, m):
                matrix = TupleMatrix.from_rows(rows)
                chi = RepetitionFunction.from_counts(
                    m, k, columns_multiset(matrix).counts
                )
                out.append(
                    GeneralizedConstraint(
                        chi, class_image(closed, matrix), cls_.codomain_size
                    )
                )
    return out


def f_pol(constraints, cfg):
    """All operations of arity <= n_max satisfying every constraint."""
    constraints = list(constraints)
    candidates = sum(
        cfg.codomain_size ** (cfg.domain_size ** n) for n in range(1, cfg.n_max + 1)
    )
    if candidates > cfg.budget:
        raise BudgetExceededError(candidates, cfg.budget, "operation enumeration")
    out = OperationClass(cfg.domain_size, cfg.codomain_size)
    for n in range(1, cfg.n_max + 1):
        for op in all_operations(cfg.domain_size, n, cfg.codomain_size):
            if all(
                satisfies_constraint(op, c, cfg.budget) for c in constraints
            ):
                out.add(op)
    return out


def _inv_cluster_for_arity(closed, n, k):
    """The separating cluster built from the all-rows matrix of width n.

    Members are generated as X joined with one class image per block of
    a partition of the remaining columns; the cluster is the downward
    closure of those generators, stored as an explicit antichain.
    """
    all_rows = sorted(product(range(k), repeat=n))
    matrix = TupleMatrix.from_rows(all_rows)
    m = matrix.row_count
    mstar = columns_multiset(matrix)

    def submultisets(s):
        items = sorted(s.counts.items())
        for counts in product(*[range(c + 1) for _, c in items]):
            yield FiniteMultiset(
                s.arity, {t: c for (t, _), c in zip(items, counts) if c}
            )

    members = set()
    for x in submultisets(mstar):
        rest = ms_diff(mstar, x)
        for blocks in ms_partitions(rest):
            image_sets = []
            for block in blocks:
                block_matrix = TupleMatrix(m, tuple(block.elements()))
                image_sets.append(sorted(class_image(closed, block_matrix)))
            for d in product(*image_sets):
                members.add(ms_join(x, FiniteMultiset.from_tuples(m, d)))
    members = sorted(members, key=lambda s: (s.cardinality, sorted(s.counts.items())))
    maximal = [
        s for s in members if not any(t != s and ms_sub(s, t) for t in members)
    ]
    gens = frozenset(
        BoxedGenerator(RepetitionFunction.from_counts(m, k, s.counts), s.cardinality)
        for s in maximal
    )
    return Cluster(m, k, gens)


def cl_inv(cls_, cfg):
    """The proof-canonical invariant clusters of a class, one per arity <= n_max."""
    closed = close_composition(cls_, max(cfg.n_max, cls_.max_arity or 1))
    k = cls_.domain_size
    return [
        _inv_cluster_for_arity(closed, n, k) for n in range(1, cfg.n_max + 1)
    ]


def c_pol(clusters, cfg):
    """All operations of arity <= n_max satisfying every cluster at the breadth cap."""
    clusters = list(clusters)
    if cfg.breadth < cfg.n_max:
        raise GaloisKitError("breadth cap must be at least n_max")
    candidates = sum(
        cfg.domain_size ** (cfg.domain_size ** n) for n in range(1, cfg.n_max + 1)
    )
    if candidates > cfg.budget:
        raise BudgetExceededError(candidates, cfg.budget, "operation enumeration")
    out = OperationClass(cfg.domain_size, cfg.domain_size)
    for n in range(1, cfg.n_max + 1):
        for op in all_operations(cfg.domain_size, n):
            if all(
                satisfies_cluster(op, phi, cfg.breadth, cfg.budget)
                for phi in clusters
            ):
                out.add(op)
    return out


def separating_constraint(cls_, g):
    """A constraint satisfied by the whole class but violated by g.

    Uses the all-rows matrix of g's arity, so f M is the value table of
    f and the separation is exact: it exists iff g is outside the
    permutation-and-dummy closure at g's arity.
    """
    if len(cls_) == 0:
        raise GaloisKitError("cannot separate from the empty class")
    n = g.arity
    closed = close_perm_dummy(cls_, max(n, cls_.max_arity))
    k = cls_.domain_size
    all_rows = sorted(product(range(k), repeat=n))
    matrix = TupleMatrix.from_rows(all_rows)
    consequent = class_image(closed, matrix)
    if apply_op_rows(g, matrix) in consequent:
        raise GaloisKitError(
            "no separating constraint: g is in the closed class at its arity"
        )
    chi = RepetitionFunction.from_counts(
        matrix.row_count, k, columns_multiset(matrix).counts
    )
    return GeneralizedConstraint(chi, consequent, cls_.codomain_size)


def separating_cluster(cls_, g, cfg):
    """A cluster satisfied by the whole class but violated by g.

    The class is composition-closed first; the postcondition is verified
    on both sides before returning (members at arities <= n_max checked
    at the configured breadth, g checked on the all-rows witness).
    """
    n = g.arity
    closed = close_composition(cls_, max(n, cls_.max_arity or 1, cfg.n_max))
    if g in closed:
        raise GaloisKitError("no separating cluster: g is in the closed class")
    k = cls_.domain_size
    cluster = _inv_cluster_for_arity(closed, n, k)
    all_rows = sorted(product(range(k), repeat=n))
    matrix = TupleMatrix.from_rows(all_rows)
    image = FiniteMultiset.from_tuples(
        matrix.row_count, [apply_op_rows(g, matrix)]
    )
    if cluster_member(image, cluster):
        raise GaloisKitError("separation failed: g image unexpectedly admitted")
    for f in closed:
        if f.arity <= cfg.n_max:
            verdict = satisfies_cluster(f, cluster, max(cfg.breadth, f.arity), cfg.budget)
            if not verdict:
                raise GaloisKitError(
                    f"separation failed: class member {f} violates the cluster"
                )
    return cluster
