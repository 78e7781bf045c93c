import random

import pytest
from itertools import permutations, product

from galois_kit import (
    BoxedGenerator,
    BudgetExceededError,
    Cluster,
    FiniteMultiset,
    GaloisKitError,
    INF,
    MinorScheme,
    Operation,
    RepetitionFunction,
    all_operations,
    breadth,
    breadth_restrict,
    cluster_intersect,
    cluster_member,
    cluster_minor_member,
    cluster_union,
    empty_cluster,
    enumerate_cluster_members,
    equality_cluster,
    materialize_minor,
    ms_join,
    order_cluster,
    quotient,
    relation_cluster,
    satisfies_cluster,
    trivial_cluster,
    TupleMatrix,
)


def all_multisets(m, k, card):
    tuples = sorted(product(range(k), repeat=m))
    out = []

    def rec(idx, remaining, counts):
        out.append(FiniteMultiset(m, dict(counts)))
        if remaining == 0:
            return
        for i in range(idx, len(tuples)):
            t = tuples[i]
            counts[t] = counts.get(t, 0) + 1
            rec(i, remaining - 1, counts)
            counts[t] -= 1
            if not counts[t]:
                del counts[t]

    rec(0, card, {})
    return out


def naive_satisfies(f, cluster, b):
    """Independent oracle for cluster satisfaction, written from the
    definition with no shared enumeration code."""
    m = cluster.arity
    for s in all_multisets(m, cluster.domain_size, b):
        if not cluster_member(s, cluster) or s.cardinality < f.arity:
            continue
        for sel in set(permutations(s.elements(), f.arity)):
            rest = dict(s.counts)
            for col in sel:
                rest[col] -= 1
            rest = {t: c for t, c in rest.items() if c}
            image = tuple(
                f(*[sel[j][i] for j in range(f.arity)]) for i in range(m)
            )
            out = dict(rest)
            out[image] = out.get(image, 0) + 1
            if not cluster_member(FiniteMultiset(m, out), cluster):
                return False
    return True


def random_cluster(rng, m, k=2):
    gens = set()
    for _ in range(rng.randint(1, 3)):
        exc = {}
        for _ in range(rng.randint(1, 3)):
            t = tuple(rng.randrange(k) for _ in range(m))
            exc[t] = rng.choice([0, 1, 2, INF])
        gens.add(
            BoxedGenerator(
                RepetitionFunction(m, k, 0, exc),
                rng.choice([0, 1, 2, 3, INF]),
            )
        )
    return Cluster(m, k, frozenset(gens))


class TestMembership:
    def test_generator_box_and_cap(self):
        gen = BoxedGenerator(RepetitionFunction(1, 2, 0, {(0,): 2, (1,): 1}), 2)
        cluster = Cluster(1, 2, frozenset({gen}))
        ok = FiniteMultiset.from_tuples(1, [(0,), (1,)])
        assert cluster_member(ok, cluster)
        over_cap = FiniteMultiset.from_tuples(1, [(0,), (0,), (1,)])
        assert not cluster_member(over_cap, cluster)
        over_box = FiniteMultiset.from_tuples(1, [(1,), (1,)])
        assert not cluster_member(over_box, cluster)

    def test_downward_closure(self):
        rng = random.Random(3)
        for _ in range(20):
            cluster = random_cluster(rng, 2)
            for s in all_multisets(2, 2, 3):
                if not cluster_member(s, cluster):
                    continue
                for t in s.counts:
                    smaller = FiniteMultiset(
                        2, {**s.counts, t: s.counts[t] - 1}
                    )
                    assert cluster_member(smaller, cluster)

    def test_enumerate_members_matches_filter(self):
        rng = random.Random(5)
        for _ in range(20):
            cluster = random_cluster(rng, 2)
            got = set(enumerate_cluster_members(cluster, 3))
            expected = {
                s for s in all_multisets(2, 2, 3) if cluster_member(s, cluster)
            }
            assert got == expected

    def test_empty_cluster_has_no_members(self):
        c = empty_cluster(2, 2)
        assert not cluster_member(FiniteMultiset.empty(2), c)
        assert enumerate_cluster_members(c, 3) == []

    def test_normalize_drops_dominated_generators(self):
        lo = BoxedGenerator(RepetitionFunction(1, 2, 0, {(0,): 1}), 1)
        hi = BoxedGenerator(RepetitionFunction(1, 2, 0, {(0,): 2}), 2)
        c = Cluster(1, 2, frozenset({lo, hi})).normalize()
        assert c.generators == frozenset({hi})


class TestSatisfaction:
    def test_agrees_with_naive_oracle(self):
        rng = random.Random(9)
        ops = list(all_operations(2, 1)) + list(all_operations(2, 2))
        for _ in range(15):
            cluster = random_cluster(rng, 2)
            for f in ops:
                assert bool(satisfies_cluster(f, cluster, 3)) == naive_satisfies(
                    f, cluster, 3
                )

    def test_breadth_below_arity_rejected(self):
        c = trivial_cluster(2, 3, 2)
        f = Operation(2, 2, 2, (0, 0, 0, 1))
        with pytest.raises(GaloisKitError):
            satisfies_cluster(f, c, 1)

    def test_witness_is_a_real_violation(self):
        leq = {(0, 0), (0, 1), (1, 1)}
        c = order_cluster(leq, 2)
        lxor = Operation(2, 2, 2, (0, 1, 1, 0))
        verdict = satisfies_cluster(lxor, c, 4)
        assert not verdict
        m1, m2, out = verdict.witness
        assert cluster_member(
            ms_join(FiniteMultiset.from_tuples(4, m1.columns), m2), c
        )
        assert not cluster_member(out, c)

    def test_budget_guard_on_broad_boxes(self):
        wide = Cluster(
            3, 2,
            frozenset({BoxedGenerator(RepetitionFunction.constant(3, 2, 1), 2)}),
        )
        f = Operation(2, 2, 1, (0, 1))
        with pytest.raises(BudgetExceededError):
            satisfies_cluster(f, wide, 2, budget=3)


class TestAlgebra:
    def test_quotient_law_exhaustive(self):
        rng = random.Random(13)
        for _ in range(20):
            cluster = random_cluster(rng, 2)
            for s in enumerate_cluster_members(cluster, 2)[:4]:
                q = quotient(cluster, s)
                for s2 in all_multisets(2, 2, 2):
                    assert cluster_member(s2, q) == cluster_member(
                        ms_join(s, s2), cluster
                    )

    def test_union_and_intersection_laws(self):
        rng = random.Random(17)
        for _ in range(20):
            a = random_cluster(rng, 2)
            b = random_cluster(rng, 2)
            u = cluster_union([a, b])
            i = cluster_intersect(a, b)
            for s in all_multisets(2, 2, 3):
                assert cluster_member(s, u) == (
                    cluster_member(s, a) or cluster_member(s, b)
                )
                assert cluster_member(s, i) == (
                    cluster_member(s, a) and cluster_member(s, b)
                )

    def test_breadth_restrict_caps_cardinality(self):
        c = trivial_cluster(1, 5, 2)
        r = breadth_restrict(c, 2)
        assert cluster_member(FiniteMultiset.from_tuples(1, [(0,)] * 2), r)
        assert not cluster_member(FiniteMultiset.from_tuples(1, [(0,)] * 3), r)

    def test_breadth_value(self):
        assert breadth(trivial_cluster(1, 5, 2)) == 5
        tight = Cluster(
            1, 2,
            frozenset({BoxedGenerator(RepetitionFunction(1, 2, 0, {(0,): 2}), INF)}),
        )
        assert breadth(tight) == 2
        assert breadth(equality_cluster(2)) == INF


class TestDistinguishedClusters:
    def test_trivial_cluster_members(self):
        c = trivial_cluster(1, 2, 2)
        assert cluster_member(FiniteMultiset.from_tuples(1, [(0,), (1,)]), c)
        assert not cluster_member(
            FiniteMultiset.from_tuples(1, [(0,), (0,), (1,)]), c
        )

    def test_equality_cluster_diagonal_support(self):
        c = equality_cluster(2)
        assert cluster_member(
            FiniteMultiset.from_tuples(2, [(0, 0), (1, 1), (1, 1)]), c
        )
        assert not cluster_member(FiniteMultiset.from_tuples(2, [(0, 1)]), c)

    def test_relation_cluster_membership(self):
        leq = {(0, 0), (0, 1), (1, 1)}
        c = relation_cluster(leq, 2, 2)
        assert cluster_member(
            FiniteMultiset.from_tuples(2, [(0, 1)] * 4), c
        )
        assert not cluster_member(FiniteMultiset.from_tuples(2, [(1, 0)]), c)

    def test_relation_cluster_satisfaction_is_preservation(self):
        leq = {(0, 0), (0, 1), (1, 1)}
        c = relation_cluster(leq, 2, 2)
        land = Operation(2, 2, 2, (0, 0, 0, 1))
        lxor = Operation(2, 2, 2, (0, 1, 1, 0))
        assert satisfies_cluster(land, c, 3)
        assert not satisfies_cluster(lxor, c, 3)

    def test_order_cluster_poset_validated(self):
        with pytest.raises(GaloisKitError):
            order_cluster({(0, 1), (1, 1)}, 2)  # not reflexive
        with pytest.raises(GaloisKitError):
            order_cluster({(0, 0), (1, 1), (0, 1), (1, 0)}, 2)  # not antisym

    def test_order_cluster_classifies_boolean_ops(self):
        c = order_cluster({(0, 0), (0, 1), (1, 1)}, 2)
        monotone_or_antitone_each_var = []
        for f in all_operations(2, 2):
            per_var = []
            for var in (0, 1):
                dirs = set()
                for fixed in (0, 1):
                    args0 = [fixed, fixed]
                    args1 = [fixed, fixed]
                    args0[var] = 0
                    args1[var] = 1
                    lo, hi = f(*args0), f(*args1)
                    if lo < hi:
                        dirs.add("up")
                    elif lo > hi:
                        dirs.add("down")
                per_var.append(len(dirs) <= 1)
            monotone_or_antitone_each_var.append(all(per_var))
        for f, expected in zip(all_operations(2, 2), monotone_or_antitone_each_var):
            assert bool(satisfies_cluster(f, c, 4)) == expected


class TestClusterMinors:
    def test_intersection_via_shared_target_scheme(self):
        rng = random.Random(23)
        scheme = MinorScheme(2, (), ((0, 1), (0, 1)))
        for _ in range(10):
            a = random_cluster(rng, 2)
            b = random_cluster(rng, 2)
            i = cluster_intersect(a, b)
            for s in all_multisets(2, 2, 3):
                matrix = TupleMatrix(2, tuple(s.elements()))
                assert cluster_minor_member(
                    matrix, [a, b], scheme
                ) == cluster_member(s, i)

    def test_materialize_minor_agrees_with_oracle(self):
        rng = random.Random(29)
        scheme = MinorScheme(1, ("u",), ((0, "u"),))
        for _ in range(5):
            a = random_cluster(rng, 2)
            minor = materialize_minor([a], scheme, 3)
            for s in all_multisets(1, 2, 3):
                matrix = TupleMatrix(1, tuple(s.elements()))
                assert cluster_member(s, minor) == cluster_minor_member(
                    matrix, [a], scheme
                )
