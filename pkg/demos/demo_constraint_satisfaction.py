"""Generalized constraints: exhaustive satisfaction with witnesses.

A constraint pairs a repetition function (how often each column may be
used) with a consequent relation (where row-wise images must land).

Run as: python3 demos/demo_constraint_satisfaction.py
"""

from galois_kit import (
    GeneralizedConstraint,
    Operation,
    RepetitionFunction,
    equality_constraint,
    satisfies_constraint,
)

AND = Operation(2, 2, 2, (0, 0, 0, 1))
XOR = Operation(2, 2, 2, (0, 1, 1, 0))

LEQ = frozenset({(0, 0), (0, 1), (1, 1)})


def main():
    # the order constraint: columns from <=, images must stay in <=
    phi = RepetitionFunction(2, 2, 0, {t: 99 for t in LEQ})
    order = GeneralizedConstraint(phi, LEQ, 2)

    for f, label in ((AND, "AND"), (XOR, "XOR")):
        verdict = satisfies_constraint(f, order)
        print(f"{label} satisfies the order constraint: {bool(verdict)}")
        if not verdict:
            m = verdict.witness
            print(f"  witness columns: {m.columns}")
            image = tuple(f(*m.row(i)) for i in range(m.row_count))
            print(f"  row-wise image {image} is outside the consequent")

    # every operation satisfies generalized equality
    eq = equality_constraint(3, 2)
    print(f"\nXOR satisfies 3-ary equality: {bool(satisfies_constraint(XOR, eq))}")


if __name__ == "__main__":
    main()
