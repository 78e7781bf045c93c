"""Clusters: downward-closed multiset families and their satisfaction.

The order cluster on 4-tuples characterizes the Boolean operations that
are order-preserving or order-reversing in each variable; XOR is the
classic outsider.

Run as: python3 demos/demo_clusters.py
"""

from galois_kit import (
    FiniteMultiset,
    Operation,
    all_operations,
    breadth_restrict,
    cluster_member,
    order_cluster,
    quotient,
    satisfies_cluster,
)

LEQ = {(0, 0), (0, 1), (1, 1)}


def main():
    cluster = order_cluster(LEQ, 2)
    print(f"order cluster: {len(cluster.generators)} generators\n")

    names = {
        (0, 0, 0, 1): "AND", (0, 1, 1, 1): "OR",
        (0, 1, 1, 0): "XOR", (1, 0, 0, 1): "XNOR",
    }
    for f in all_operations(2, 2):
        verdict = satisfies_cluster(f, cluster, 4)
        label = names.get(f.table, str(f.table))
        if label in names.values() or not verdict:
            print(f"  {label:14s} satisfies: {bool(verdict)}")

    # quotient by a member: what can still be added
    s = FiniteMultiset.from_tuples(4, [(0, 1, 0, 1)])
    q = quotient(cluster, s)
    again = cluster_member(s, q)
    print(f"\na second strict witness after using one: allowed = {again}")

    # breadth restriction keeps small members only
    small = breadth_restrict(cluster, 1)
    print(f"pair of strict witnesses in the 1-restriction: "
          f"{cluster_member(FiniteMultiset.from_tuples(4, [(0, 1, 0, 1), (0, 0, 1, 1)]), small)}")


if __name__ == "__main__":
    main()
