"""Point counts over finite fields: orbits, stable-flag fibers, and the
polynomial-in-q evidence for evenness.

Run from the repository root:  python3 demos/point_counts_and_evenness.py
"""

from quiver_orders import (
    adapted_order,
    enumerate_kp,
    fiber_point_count,
    galois_field,
    interpolate_fiber_polynomial,
    orbit_point_count,
    prime_powers,
    quiver,
    rep_of_kp,
    rep_space_dim,
    z_point_count,
)


def orbit_table(Q, nu, qs):
    datum = Q.datum
    order = adapted_order(Q)
    kps = enumerate_kp(datum, nu, order)
    print(f"orbits on the representation space of nu={nu} ({Q.datum.label}):")
    header = "  counts      " + "".join(f"q={q:<8}" for q in qs)
    print(header)
    for lam in kps:
        counts = " ".join(str(c) for c in lam.counts)
        cells = "".join(f"{orbit_point_count(lam, q):<10}" for q in qs)
        print(f"  {counts:12}{cells}")
    for q in qs:
        total = sum(orbit_point_count(lam, q) for lam in kps)
        assert total == q ** rep_space_dim(Q, nu)
    print(f"  column sums equal q^{rep_space_dim(Q, nu)} exactly")
    print()


def fiber_table(Q, nu, qs):
    datum = Q.datum
    order = adapted_order(Q)
    print(f"complete stable-flag fiber counts for nu={nu}:")
    for lam in enumerate_kp(datum, nu, order):
        counts = " ".join(str(c) for c in lam.counts)
        values = [fiber_point_count(rep_of_kp(lam, galois_field(q))) for q in qs]
        print(f"  {counts:12}" + "".join(f"{v:<10}" for v in values))
    print()


def z_table(Q, nu, qs):
    datum = Q.datum
    print(f"fibre-square point counts for nu={nu}: ", end="")
    print(", ".join(f"q={q}: {z_point_count(datum, Q, nu, q)}" for q in qs))
    print()


def interpolation_demo(Q, nu):
    datum = Q.datum
    order = adapted_order(Q)
    qs = prime_powers(9)
    print(f"interpolating fiber counts as polynomials in q, nu={nu}:")
    for lam in enumerate_kp(datum, nu, order):
        report = interpolate_fiber_polynomial(lam, qs)
        counts = " ".join(str(c) for c in lam.counts)
        coeffs = report.integer_coefficients
        print(f"  {counts:12}coefficients {coeffs}   verdict: {report.verdict}")
    print("  (ascending coefficients; checked against held-out prime powers)")


def main():
    Q = quiver("A2", ((1, 2),))
    qs = (2, 3, 4, 5)
    orbit_table(Q, (1, 1), qs)
    fiber_table(Q, (1, 1), qs)
    z_table(Q, (1, 1), (2, 3, 5, 7))
    interpolation_demo(Q, (2, 1))


if __name__ == "__main__":
    main()
