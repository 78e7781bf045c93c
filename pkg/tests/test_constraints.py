import pytest
from hypothesis import given, settings, strategies as st
from itertools import product

from galois_kit import (
    BudgetExceededError,
    GaloisKitError,
    GeneralizedConstraint,
    INF,
    Operation,
    RepetitionFunction,
    TupleMatrix,
    empty_constraint,
    equality_constraint,
    extend_consequent,
    finite_restriction,
    intersect_consequents,
    maximal_elements,
    precedes,
    restrict_antecedent,
    rf_leq,
    satisfies_constraint,
    trivial_constraint,
    all_operations,
)


def naive_satisfies(f, c):
    """Independent oracle: filter the full matrix space, no incremental
    enumeration, no witness logic."""
    phi = c.antecedent
    tuples = list(product(range(phi.domain_size), repeat=phi.arity))
    for cols in product(tuples, repeat=f.arity):
        counts = {}
        for col in cols:
            counts[col] = counts.get(col, 0) + 1
        if any(v > phi.value(t) for t, v in counts.items()):
            continue
        image = tuple(
            f(*[cols[j][i] for j in range(f.arity)])
            for i in range(phi.arity)
        )
        if image not in c.consequent:
            return False
    return True


small_rfs = st.dictionaries(
    st.tuples(st.integers(0, 1), st.integers(0, 1)),
    st.sampled_from([0, 1, 2, INF]),
    max_size=3,
).map(lambda d: RepetitionFunction(2, 2, 0, d))

binary_ops = st.tuples(*[st.integers(0, 1)] * 4).map(
    lambda t: Operation(2, 2, 2, t)
)

consequents = st.frozensets(
    st.tuples(st.integers(0, 1), st.integers(0, 1)), max_size=4
)


class TestRepetitionFunctionCanonical:
    def test_default_entries_dropped(self):
        phi = RepetitionFunction(1, 2, 3, {(0,): 3, (1,): 1})
        assert phi.exceptions == {(1,): 1}

    def test_covering_exceptions_rederive_default(self):
        a = RepetitionFunction(1, 2, 0, {(0,): INF, (1,): INF})
        b = RepetitionFunction.constant(1, 2, INF)
        assert a == b and a.default == INF and not a.exceptions

    def test_pointwise_equality_is_structural(self):
        a = RepetitionFunction(1, 2, 1, {(0,): 2})
        b = RepetitionFunction(1, 2, 2, {(1,): 1})
        assert a == b

    def test_total_closed_form(self):
        phi = RepetitionFunction(2, 2, 1, {(0, 0): 5, (1, 1): 0})
        assert phi.total() == 5 + 0 + 1 + 1
        assert RepetitionFunction(1, 2, INF).total() == INF


class TestPrecedes:
    def test_counts_bounded_by_values(self):
        phi = RepetitionFunction(2, 2, 0, {(0, 1): 2})
        m = TupleMatrix(2, ((0, 1), (0, 1)))
        assert precedes(m, phi)
        m3 = TupleMatrix(2, ((0, 1), (0, 1), (0, 1)))
        assert not precedes(m3, phi)

    def test_row_count_validated(self):
        phi = RepetitionFunction(2, 2, 1)
        with pytest.raises(GaloisKitError):
            precedes(TupleMatrix(3, ((0, 0, 0),)), phi)


class TestSatisfiesConstraint:
    @settings(max_examples=60, deadline=None)
    @given(small_rfs, consequents, binary_ops)
    def test_agrees_with_naive_oracle(self, phi, s, f):
        c = GeneralizedConstraint(phi, s, 2)
        assert bool(satisfies_constraint(f, c)) == naive_satisfies(f, c)

    def test_witness_is_a_real_violation(self):
        lnot = Operation(2, 2, 1, (1, 0))
        assert satisfies_constraint(lnot, equality_constraint(2, 2))
        bad = GeneralizedConstraint(
            RepetitionFunction(1, 2, 1), frozenset({(0,)}), 2
        )
        ident = Operation(2, 2, 1, (0, 1))
        verdict = satisfies_constraint(ident, bad)
        assert not verdict
        m = verdict.witness
        assert precedes(m, bad.antecedent)
        image = tuple(ident(*m.row(i)) for i in range(m.row_count))
        assert image not in bad.consequent

    def test_every_op_satisfies_equality_and_trivial(self):
        for n in (1, 2):
            for f in all_operations(2, n):
                assert satisfies_constraint(f, equality_constraint(3, 2))
                assert satisfies_constraint(f, trivial_constraint(2, 2))

    def test_empty_constraint_vacuously_satisfied(self):
        # the antecedent admits no matrix at all
        for f in all_operations(2, 1):
            assert satisfies_constraint(f, empty_constraint(2, 2))

    def test_budget_refusal(self):
        c = trivial_constraint(2, 2)
        f = Operation(2, 2, 2, (0, 0, 0, 1))
        with pytest.raises(BudgetExceededError):
            satisfies_constraint(f, c, budget=3)

    def test_alphabet_mismatch_rejected(self):
        c = equality_constraint(2, 3)
        with pytest.raises(GaloisKitError):
            satisfies_constraint(Operation(2, 2, 1, (0, 1)), c)


class TestRelaxations:
    @settings(max_examples=40, deadline=None)
    @given(small_rfs, consequents, binary_ops)
    def test_relaxation_preserves_satisfaction(self, phi, s, f):
        c = GeneralizedConstraint(phi, s, 2)
        if not satisfies_constraint(f, c):
            return
        smaller = RepetitionFunction(
            2, 2, 0, {t: v for t, v in phi.exceptions.items() if v != INF}
        )
        if rf_leq(smaller, phi):
            assert satisfies_constraint(f, restrict_antecedent(c, smaller))
        bigger = extend_consequent(c, set(s) | {(0, 0)})
        assert satisfies_constraint(f, bigger)

    def test_restrict_antecedent_validated(self):
        c = equality_constraint(2, 2)
        with pytest.raises(GaloisKitError):
            restrict_antecedent(c, RepetitionFunction.constant(2, 2, INF))

    def test_extend_consequent_validated(self):
        c = equality_constraint(2, 2)
        with pytest.raises(GaloisKitError):
            extend_consequent(c, {(0, 0)})

    def test_intersect_consequents(self):
        phi = RepetitionFunction.constant(2, 2, 1)
        a = GeneralizedConstraint(phi, {(0, 0), (0, 1)}, 2)
        b = GeneralizedConstraint(phi, {(0, 1), (1, 1)}, 2)
        assert intersect_consequents([a, b]).consequent == frozenset({(0, 1)})

    def test_intersect_requires_shared_antecedent(self):
        a = equality_constraint(2, 2)
        b = trivial_constraint(2, 2)
        with pytest.raises(GaloisKitError):
            intersect_consequents([a, b])

    def test_finite_restriction_zeroes_outside(self):
        c = trivial_constraint(2, 2)
        r = finite_restriction(c, {(0, 1)})
        assert r.antecedent.value((0, 1)) == INF
        assert r.antecedent.value((1, 1)) == 0


class TestMaximalElements:
    def test_dominated_functions_removed(self):
        lo = RepetitionFunction(1, 2, 0, {(0,): 1})
        hi = RepetitionFunction(1, 2, 0, {(0,): 2})
        other = RepetitionFunction(1, 2, 0, {(1,): 1})
        assert set(maximal_elements([lo, hi, other])) == {hi, other}
