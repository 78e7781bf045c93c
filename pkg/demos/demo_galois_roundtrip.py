"""Round trips through both Galois connections at bounded caps.

Run as: python3 demos/demo_galois_roundtrip.py
"""

from galois_kit import (
    GaloisConfig,
    Operation,
    OperationClass,
    c_pol,
    cl_inv,
    linear_class_fixture,
    projection,
    separating_cluster,
    satisfies_cluster,
)

AND = Operation(2, 2, 2, (0, 0, 0, 1))


def main():
    proj = OperationClass(2, members=[
        projection(1, 1, 2), projection(2, 1, 2), projection(2, 2, 2),
    ])
    cfg = GaloisConfig(2, n_max=2, m_max=1, breadth=4)

    clusters = cl_inv(proj, cfg)
    print(f"cl_inv(projections) emits {len(clusters)} clusters")
    back = c_pol(clusters, cfg)
    print(f"c_pol of those clusters: {len(back)} ops, equal to the "
          f"projections: {back == proj}")

    cluster = separating_cluster(proj, AND, cfg)
    print(f"\nseparating cluster for AND: "
          f"AND satisfies = {bool(satisfies_cluster(AND, cluster, 4))}, "
          f"p21 satisfies = {bool(satisfies_cluster(projection(2, 1, 2), cluster, 4))}")

    lin = linear_class_fixture(3, 2, 2)
    cfg3 = GaloisConfig(3, n_max=2, m_max=1, breadth=2)
    back3 = c_pol(cl_inv(lin, cfg3), cfg3)
    print(f"\nlinear fixture over GF(3): round trip exact = {back3 == lin} "
          f"({len(lin)} ops)")


if __name__ == "__main__":
    main()
