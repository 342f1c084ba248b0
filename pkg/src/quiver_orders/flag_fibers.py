"""Point counts of complete graded flag fibers over finite fields.

For a representation x with dimension vector nu over F_q, count the complete
chains of graded subspaces, each step dropping one dimension at one vertex,
with every member stable under all arrow maps.  The recursion picks the top
step: a stable graded hyperplane must contain the image subspace
U_i = sum of images of the arrows into i, so the choices at vertex i are the
hyperplanes through U_i, enumerated by projective classes of functionals
vanishing on U_i; the representation restricts to the hyperplane and the
count recurses.

When every arrow matrix is zero there is no stability constraint and the
count has the closed form multinomial(|d|; d) * prod_i [d_i]_q!.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .convex_order import adapted_order
from .fields import galois_field
from .kostant import KostantPartition, enumerate_kp
from .linalg import nullspace
from .quivers import Quiver
from .reps import QuiverRep, orbit_point_count, rep_of_kp, rep_space_dim


def q_factorial(d: int, q: int) -> int:
    """[d]_q! = prod_{m=1}^{d} (1 + q + ... + q^(m-1))."""
    total = 1
    for m in range(1, d + 1):
        total *= (q**m - 1) // (q - 1)
    return total


def shuffle_flag_count(dims: tuple[int, ...], q: int) -> int:
    """Complete graded flags of a graded space with no stability constraint."""
    total = math.factorial(sum(dims))
    for d in dims:
        total //= math.factorial(d)
    for d in dims:
        total *= q_factorial(d, q)
    return total


def _projective_coefficients(F, c: int):
    """One representative per projective class of nonzero vectors in F^c,
    normalized so the first nonzero coefficient is 1."""
    for lead in range(c):
        for tail in itertools.product(F.elements(), repeat=c - 1 - lead):
            yield (F.zero,) * lead + (F.one,) + tail


def fiber_point_count(M: QuiverRep) -> int:
    """Number of complete stable graded flags of M (finite field only)."""
    F = M.field
    if F.order is None:
        raise ValueError("point counts need a finite field")
    return _count(M.quiver, F, M.dims, M.mats)


def _count(Q: Quiver, F, dims: tuple[int, ...], mats) -> int:
    if all(d == 0 for d in dims):
        return 1
    if all(x == F.zero for m in mats for row in m for x in row):
        return shuffle_flag_count(dims, F.order)
    total = 0
    for i in Q.datum.vertices():
        d = dims[i - 1]
        if d == 0:
            continue
        in_idx = Q.arrows_into(i)
        out_idx = Q.arrows_out_of(i)
        image_rows = []
        for a in in_idx:
            src_dim = dims[Q.arrows[a][0] - 1]
            m = mats[a]
            for c in range(src_dim):
                image_rows.append(tuple(m[r][c] for r in range(d)))
        functionals = nullspace(F, tuple(image_rows), ncols=d)
        if not functionals:
            continue
        for coeffs in _projective_coefficients(F, len(functionals)):
            phi = [F.zero] * d
            for s, cf in enumerate(coeffs):
                if cf != F.zero:
                    basis = functionals[s]
                    for j in range(d):
                        phi[j] = F.add(phi[j], F.mul(cf, basis[j]))
            jstar = next(j for j in range(d) if phi[j] != F.zero)
            inv = F.inv(phi[jstar])
            ratio = [F.mul(inv, phi[j]) for j in range(d)]
            new_dims = tuple(d - 1 if v == i - 1 else dims[v] for v in range(Q.datum.n))
            new_mats = list(mats)
            for a in in_idx:
                m = mats[a]
                new_mats[a] = tuple(m[r] for r in range(d) if r != jstar)
            for a in out_idx:
                m = mats[a]
                new_mats[a] = tuple(
                    tuple(
                        F.sub(row[j], F.mul(ratio[j], row[jstar]))
                        for j in range(d)
                        if j != jstar
                    )
                    for row in m
                )
            total += _count(Q, F, new_dims, tuple(new_mats))
    return total


def flag_degree_bound(nu: tuple[int, ...]) -> int:
    """Dimension of the complete graded flag variety: an upper bound for the
    degree of any fiber point-count polynomial."""
    return sum(d * (d - 1) // 2 for d in nu)


def lagrange_coefficients(points) -> tuple[Fraction, ...]:
    """Coefficients (ascending) of the interpolating polynomial, exact."""
    points = list(points)
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        num = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            shifted = [Fraction(0)] + num
            num = [a - xj * b for a, b in zip(shifted, num + [Fraction(0)])]
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k in range(len(num)):
            coeffs[k] += scale * num[k]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class InterpolationReport:
    counts: tuple[tuple[int, int], ...]
    degree_bound: int
    coefficients: tuple[Fraction, ...]
    held_out: tuple[int, ...]
    verdict: str

    @property
    def integer_coefficients(self) -> tuple[int, ...] | None:
        if any(c.denominator != 1 for c in self.coefficients):
            return None
        return tuple(int(c) for c in self.coefficients)


def _poly_eval(coeffs, x: int) -> Fraction:
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


def _interpolation_verdict(
    counts: list[tuple[int, int]], bound: int
) -> InterpolationReport:
    counts = sorted(counts)
    nodes = counts[: bound + 1]
    held = counts[bound + 1 :]
    coeffs = lagrange_coefficients(nodes)
    ok = all(c.denominator == 1 and c >= 0 for c in coeffs)
    ok = ok and all(_poly_eval(coeffs, q) == y for q, y in held)
    return InterpolationReport(
        counts=tuple(counts),
        degree_bound=bound,
        coefficients=coeffs,
        held_out=tuple(q for q, _ in held),
        verdict="consistent-with-even" if ok else "evidence-against",
    )


def interpolate_fiber_polynomial(lam: KostantPartition, q_list) -> InterpolationReport:
    """Interpolate the fiber count of M(lam) as a polynomial in q and check it.

    Uses the first degree_bound+1 of the sorted q values as nodes and
    verifies the polynomial on all remaining ones; the verdict is
    "consistent-with-even" when the coefficients are non-negative integers
    and every held-out value matches.
    """
    qs = sorted(set(q_list))
    bound = flag_degree_bound(lam.nu)
    if len(qs) < bound + 1:
        raise ValueError(
            f"insufficient q values: need at least {bound + 1}, got {len(qs)}"
        )
    counts = [
        (q, fiber_point_count(rep_of_kp(lam, galois_field(q)))) for q in qs
    ]
    return _interpolation_verdict(counts, bound)


def y_total_count(datum, Q: Quiver, nu: tuple[int, ...], q: int) -> int:
    """Points of the total space of stable-flag pairs: sum of orbit * fiber."""
    order = adapted_order(Q)
    total = 0
    for lam in enumerate_kp(datum, nu, order):
        fib = fiber_point_count(rep_of_kp(lam, galois_field(q)))
        total += orbit_point_count(lam, q) * fib
    return total


def z_point_count(datum, Q: Quiver, nu: tuple[int, ...], q: int) -> int:
    """Points of the fibre square: sum over partitions of orbit * fiber^2."""
    order = adapted_order(Q)
    total = 0
    for lam in enumerate_kp(datum, nu, order):
        fib = fiber_point_count(rep_of_kp(lam, galois_field(q)))
        total += orbit_point_count(lam, q) * fib * fib
    return total


def z_degree_bound(Q: Quiver, nu: tuple[int, ...]) -> int:
    return rep_space_dim(Q, nu) + 2 * flag_degree_bound(nu)


def z_polynomial_report(datum, Q: Quiver, nu: tuple[int, ...], q_list) -> InterpolationReport:
    """Interpolation verdict for the fibre-square count as a polynomial in q."""
    qs = sorted(set(q_list))
    bound = z_degree_bound(Q, nu)
    if len(qs) < bound + 1:
        raise ValueError(
            f"insufficient q values: need at least {bound + 1}, got {len(qs)}"
        )
    counts = [(q, z_point_count(datum, Q, nu, q)) for q in qs]
    return _interpolation_verdict(counts, bound)


def prime_powers(count: int) -> tuple[int, ...]:
    """The first `count` prime powers, ascending, starting at 2."""
    from .fields import factor_prime_power

    out: list[int] = []
    q = 2
    while len(out) < count:
        try:
            factor_prime_power(q)
        except ValueError:
            pass
        else:
            out.append(q)
        q += 1
    return tuple(out)
