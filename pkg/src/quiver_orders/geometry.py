"""Orbit-closure order on representation varieties and convention calibration.

Three conventions are fixed empirically, once, on desk-sized evidence:

* hom_formula_direction: dim Hom(M(beta_k), M(beta_l)) agrees with
  max(C[k][l], 0) either as written or with the indices transposed; the
  computed Hom matrix decides.
* order_direction: the prefix-statistic partition order either equals the
  orbit-closure order (closed orbits minimal) as written or after reversing
  its arguments; comparing both relations on small dimension vectors decides.
* res_large_side: which factor of the blockwise decompositions in
  kostant.achievable_prefix_sums carries the suffix block; the side whose
  achievable partitions all satisfy the dominance inequality decides.

calibrate records the result in an OrientationLedger and fails loudly if no
assignment is consistent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .convex_order import ConvexOrder
from .errors import CalibrationError
from .fields import RATIONALS
from .kostant import (
    HOM_DIRECTIONS,
    ORDER_DIRECTIONS,
    RES_SIDES,
    KostantPartition,
    OrientationLedger,
    achievable_prefix_sums,
    enumerate_kp,
    kp_leq,
    kp_leq_printed,
    restriction_dominates,
)
from .quivers import Quiver, is_adapted
from .reps import all_indecomposables, hom_dim


@dataclass(frozen=True)
class RingelReport:
    order: ConvexOrder
    hom: tuple[tuple[int, ...], ...]
    matches_printed: bool
    matches_transposed: bool

    @property
    def direction(self) -> str:
        if self.matches_printed and self.matches_transposed:
            return "both"
        return "as-printed" if self.matches_printed else "transposed"


def ringel_check(datum, Q: Quiver, order: ConvexOrder) -> RingelReport:
    """Compare the Hom matrix of the indecomposables with max(C, 0).

    Raises CalibrationError when the Hom matrix matches in neither index
    direction; every entry must agree, not just the sign pattern.
    """
    if order.datum != datum or Q.datum != datum:
        raise ValueError("mismatched Cartan data")
    if not is_adapted(order.word, Q):
        raise ValueError("order is not adapted to the quiver")
    reps = all_indecomposables(Q, RATIONALS)
    N = order.length
    H = tuple(
        tuple(hom_dim(reps[order.beta[k]], reps[order.beta[l]]) for l in range(N))
        for k in range(N)
    )
    C = order.pairings
    printed = all(
        H[k][l] == max(C[k][l], 0) for k in range(N) for l in range(N)
    )
    transposed = all(
        H[k][l] == max(C[l][k], 0) for k in range(N) for l in range(N)
    )
    if not printed and not transposed:
        raise CalibrationError(
            f"Hom matrix matches neither direction:\nH = {H}\nC = {C}"
        )
    return RingelReport(
        order=order, hom=H, matches_printed=printed, matches_transposed=transposed
    )


def hom_profile(lam: KostantPartition, field=RATIONALS) -> tuple[int, ...]:
    """dim Hom(M(lam), M(beta_l)) for each l, via additivity in the first slot."""
    Q = lam.order.quiver
    if Q is None:
        raise ValueError("partition's order has no quiver attached")
    from .reps import hom_matrix

    G = hom_matrix(Q, field)
    N = lam.order.length
    return tuple(
        sum(lam.counts[k] * G[k][l] for k in range(N)) for l in range(N)
    )


def closure_leq(lam: KostantPartition, mu: KostantPartition, field=RATIONALS) -> bool:
    """Orbit-closure order, closed orbits minimal: the orbit of M(lam) lies in
    the closure of the orbit of M(mu).

    Decided by Hom counts against every indecomposable: degeneration can only
    increase them, and for Dynkin quivers the comparison is exact.
    """
    if lam.order != mu.order:
        raise ValueError("partitions live over different convex orders")
    if lam.nu != mu.nu:
        raise ValueError("partitions have different dimension vectors")
    pl = hom_profile(lam, field)
    pm = hom_profile(mu, field)
    return all(a >= b for a, b in zip(pl, pm))


def baumann_check(
    datum, Q: Quiver, order: ConvexOrder, nu: tuple[int, ...], ledger: OrientationLedger
) -> bool:
    """Whether the calibrated partition order equals the closure order on KP(nu)."""
    kps = enumerate_kp(datum, nu, order)
    for a in kps:
        for b in kps:
            if kp_leq(a, b, ledger) != closure_leq(a, b):
                return False
    return True


def default_test_nus(datum, max_total: int = 3) -> tuple[tuple[int, ...], ...]:
    """All dimension vectors with 1 <= |nu| <= max_total, ascending."""
    import itertools

    n = datum.n
    out = []
    for total in range(1, max_total + 1):
        for nu in itertools.product(range(total + 1), repeat=n):
            if sum(nu) == total:
                out.append(nu)
    return tuple(out)


def calibrate(
    datum, Q: Quiver, order: ConvexOrder, test_nus
) -> OrientationLedger:
    """Fix the three conventions on the given evidence and freeze them.

    The evidence must contain at least one dimension vector with two or more
    partitions; survivors in each convention slot are intersected across all
    evidence and ties are broken toward the earlier-listed value.
    """
    test_nus = tuple(tuple(nu) for nu in test_nus)
    report = ringel_check(datum, Q, order)
    hom_alive = {
        d
        for d, ok in (
            ("as-printed", report.matches_printed),
            ("transposed", report.matches_transposed),
        )
        if ok
    }

    order_alive = set(ORDER_DIRECTIONS)
    side_alive = set(RES_SIDES)
    nontrivial = False
    for nu in test_nus:
        kps = enumerate_kp(datum, nu, order)
        if len(kps) >= 2:
            nontrivial = True
        printed = {
            (a.counts, b.counts)
            for a in kps
            for b in kps
            if kp_leq_printed(a, b)
        }
        closure = {
            (a.counts, b.counts) for a in kps for b in kps if closure_leq(a, b)
        }
        if printed != closure:
            order_alive.discard("as-printed")
        if {(b, a) for (a, b) in printed} != closure:
            order_alive.discard("reversed")
        for side in tuple(side_alive):
            for m in kps:
                S = achievable_prefix_sums(m, side)
                for n in kps:
                    prefix = [0] * datum.n
                    achievable = True
                    for k in range(order.length):
                        for j in range(datum.n):
                            prefix[j] += n.counts[k] * order.beta[k][j]
                        if tuple(prefix) not in S:
                            achievable = False
                            break
                    if achievable and not restriction_dominates(n, m):
                        side_alive.discard(side)
                        break
                if side not in side_alive:
                    break
    if not nontrivial:
        raise ValueError("calibration evidence has no comparable pairs")
    if not hom_alive or not order_alive or not side_alive:
        raise CalibrationError(
            "no consistent convention assignment: "
            f"hom={sorted(hom_alive)} order={sorted(order_alive)} side={sorted(side_alive)}"
        )
    pick = lambda alive, listed: next(v for v in listed if v in alive)
    return OrientationLedger(
        order_direction=pick(order_alive, ORDER_DIRECTIONS),
        hom_formula_direction=pick(hom_alive, HOM_DIRECTIONS),
        res_large_side=pick(side_alive, RES_SIDES),
    )
