"""Walk through the five table rewrites on small Boolean operations.

Run as: python3 demos/demo_table_rewrites.py
"""

from galois_kit import (
    Operation,
    OperationClass,
    close_composition,
    delta,
    nabla,
    projection,
    star,
    tau,
)

AND = Operation(2, 2, 2, (0, 0, 0, 1))
OR = Operation(2, 2, 2, (0, 1, 1, 1))
NOT = Operation(2, 2, 1, (1, 0))


def show(label, f):
    print(f"{label:28s} arity={f.arity}  table={f.table}")


def main():
    print("The five rewrites act on value tables directly.\n")
    show("AND", AND)
    show("tau AND (swap arguments)", tau(AND))
    show("nabla AND (dummy first)", nabla(AND))
    show("delta nabla AND", delta(nabla(AND)))
    assert delta(nabla(AND)) == AND

    print("\nSubstitution into the first argument:")
    g = star(AND, OR)
    show("AND * OR = AND(OR(x,y), z)", g)

    print("\nComposition closure of {NOT} up to arity 2:")
    cls_ = close_composition(OperationClass(2, members=[NOT]), 2)
    for f in cls_:
        show("member", f)
    # projections, NOT, and the negated projections
    assert projection(2, 1, 2) in cls_
    print(f"\n{len(cls_)} operations total.")


if __name__ == "__main__":
    main()
