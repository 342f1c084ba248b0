"""Kostant partitions in a convex order, their prefix-sum order, and
restriction dominance.

A Kostant partition of a dimension vector nu is a multiplicity vector
(n_1, ..., n_N) over the beta-enumeration of a convex order, with
sum_k n_k beta_k = nu.  The partial order compares, for every k, the prefix
statistics T_k(n) = sum_{t<=k} C[k][t] n_t built from the order's pairing
matrix.

Two printed-vs-geometric convention choices (order direction and the Hom
formula direction) plus one genuinely ambiguous convention (which tensor
factor of a restriction carries the suffix block) are recorded in an
OrientationLedger, produced once by orders_geometry.calibrate and treated as
immutable afterwards.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass

from .convex_order import ConvexOrder
from .errors import CapExceeded
from .root_system import Root

ORDER_DIRECTIONS = ("as-printed", "reversed")
HOM_DIRECTIONS = ("as-printed", "transposed")
RES_SIDES = ("first-factor", "second-factor")


@dataclass(frozen=True)
class OrientationLedger:
    """Calibrated convention choices, frozen after calibration.

    order_direction: "as-printed" keeps T_k(lam) <= T_k(mu) as the meaning of
    lam <= mu; "reversed" flips the arguments, which is the normalization that
    makes closed orbits minimal in the orbit-closure order.

    hom_formula_direction: whether dim Hom(M(beta_k), M(beta_l)) equals
    max(C[k][l], 0) as written ("as-printed") or max(C[l][k], 0)
    ("transposed").

    res_large_side: in each local decomposition m_t beta_t = x_t + y_t of a
    restriction, which factor ranges over the suffix block
    N-span{beta_t, ..., beta_N}: the x factor ("first-factor", the one whose
    sums build achievable prefixes) or the y factor ("second-factor").
    """

    order_direction: str
    hom_formula_direction: str
    res_large_side: str

    def __post_init__(self) -> None:
        if self.order_direction not in ORDER_DIRECTIONS:
            raise ValueError(f"bad order_direction: {self.order_direction!r}")
        if self.hom_formula_direction not in HOM_DIRECTIONS:
            raise ValueError(f"bad hom_formula_direction: {self.hom_formula_direction!r}")
        if self.res_large_side not in RES_SIDES:
            raise ValueError(f"bad res_large_side: {self.res_large_side!r}")

    def to_json(self) -> str:
        return json.dumps(
            {
                "order_direction": self.order_direction,
                "hom_formula_direction": self.hom_formula_direction,
                "res_large_side": self.res_large_side,
            },
            indent=2,
        )

    @staticmethod
    def from_json(text: str) -> "OrientationLedger":
        data = json.loads(text)
        try:
            return OrientationLedger(
                order_direction=data["order_direction"],
                hom_formula_direction=data["hom_formula_direction"],
                res_large_side=data["res_large_side"],
            )
        except KeyError as missing:
            raise ValueError(f"ledger is missing field {missing}") from None


@dataclass(frozen=True)
class KostantPartition:
    """A multiplicity vector over the beta-enumeration of a convex order."""

    order: ConvexOrder
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.order.length:
            raise ValueError("multiplicity vector length does not match the order")
        if any(c < 0 for c in self.counts):
            raise ValueError("multiplicities must be non-negative")

    @property
    def nu(self) -> tuple[int, ...]:
        n = self.order.datum.n
        total = [0] * n
        for c, b in zip(self.counts, self.order.beta):
            for j in range(n):
                total[j] += c * b[j]
        return tuple(total)

    def parts(self) -> tuple[Root, ...]:
        """The roots of the partition with multiplicity, in order position."""
        out: list[Root] = []
        for c, b in zip(self.counts, self.order.beta):
            out.extend([b] * c)
        return tuple(out)

    def support_multiset(self) -> tuple[tuple[Root, int], ...]:
        """Canonical word-independent form: sorted (root, multiplicity) pairs."""
        return tuple(
            sorted((b, c) for c, b in zip(self.counts, self.order.beta) if c > 0)
        )


def enumerate_kp(
    datum, nu: tuple[int, ...], order: ConvexOrder
) -> tuple[KostantPartition, ...]:
    """All Kostant partitions of nu, ascending in the multiplicity vector."""
    if datum != order.datum:
        raise ValueError("datum does not match the order")
    if len(nu) != datum.n or any(x < 0 for x in nu):
        raise ValueError(f"bad dimension vector {nu}")
    N = order.length
    beta = order.beta
    out: list[KostantPartition] = []
    counts = [0] * N

    def search(k: int, remaining: tuple[int, ...]) -> None:
        if k == N:
            if all(x == 0 for x in remaining):
                out.append(KostantPartition(order, tuple(counts)))
            return
        b = beta[k]
        top = min(
            (rem // c for rem, c in zip(remaining, b) if c > 0), default=0
        )
        for c in range(top + 1):
            counts[k] = c
            search(k + 1, tuple(r - c * x for r, x in zip(remaining, b)))
        counts[k] = 0

    search(0, tuple(nu))
    return tuple(out)


def kpf(datum, nu: tuple[int, ...], order: ConvexOrder) -> int:
    """Number of Kostant partitions of nu."""
    return len(enumerate_kp(datum, nu, order))


def prefix_statistics(lam: KostantPartition) -> tuple[int, ...]:
    """T_k(lam) = sum_{t<=k} C[k][t] lam_t for each k."""
    C = lam.order.pairings
    n = lam.counts
    return tuple(
        sum(C[k][t] * n[t] for t in range(k + 1)) for k in range(len(n))
    )


def _require_comparable(lam: KostantPartition, mu: KostantPartition) -> None:
    if lam.order != mu.order:
        raise ValueError("partitions live over different convex orders")
    if lam.nu != mu.nu:
        raise ValueError("partitions have different dimension vectors")


def kp_leq_printed(lam: KostantPartition, mu: KostantPartition) -> bool:
    """The prefix-statistic order exactly as written: T_k(lam) <= T_k(mu) for all k."""
    _require_comparable(lam, mu)
    return all(a <= b for a, b in zip(prefix_statistics(lam), prefix_statistics(mu)))


def kp_leq(lam: KostantPartition, mu: KostantPartition, ledger: OrientationLedger) -> bool:
    """The partition order in the calibrated direction."""
    if ledger.order_direction == "as-printed":
        return kp_leq_printed(lam, mu)
    return kp_leq_printed(mu, lam)


def cover_relations(
    kps: tuple[KostantPartition, ...], leq
) -> list[tuple[KostantPartition, KostantPartition]]:
    """Covers a -> b of the strict order induced by the predicate `leq`."""
    strict = {
        (a.counts, b.counts)
        for a in kps
        for b in kps
        if a.counts != b.counts and leq(a, b)
    }
    covers = []
    for a in kps:
        for b in kps:
            if (a.counts, b.counts) not in strict:
                continue
            if any(
                (a.counts, c.counts) in strict and (c.counts, b.counts) in strict
                for c in kps
            ):
                continue
            covers.append((a, b))
    return covers


def hasse_dot(
    datum,
    nu: tuple[int, ...],
    order: ConvexOrder,
    ledger: OrientationLedger,
    cap: int = 200,
) -> str:
    """Hasse diagram of the partition order on KP(nu), as DOT text.

    Edges point from lower to higher element; nodes are labelled by their
    multiplicity vectors.
    """
    kps = enumerate_kp(datum, nu, order)
    if len(kps) > cap:
        raise CapExceeded(f"KP({nu}) has {len(kps)} elements, over the cap {cap}")
    name = lambda lam: " ".join(str(c) for c in lam.counts)
    lines = ["digraph kostant {", "  rankdir=BT;"]
    for lam in kps:
        lines.append(f'  "{name(lam)}";')
    for a, b in cover_relations(kps, lambda x, y: kp_leq(x, y, ledger)):
        lines.append(f'  "{name(a)}" -> "{name(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def order_invariant_on_class(datum, nu: tuple[int, ...], w, cap: int = 10_000) -> bool:
    """Whether the partition order on KP(nu) is identical for every word in
    the commutation class of w, after identifying partitions by their root
    multisets."""
    from .convex_order import build_order
    from .quivers import commutation_class

    words = commutation_class(datum, tuple(w), cap=cap)
    reference: set[tuple] | None = None
    for word in words:
        order = build_order(datum, word)
        kps = enumerate_kp(datum, nu, order)
        relation = {
            (a.support_multiset(), b.support_multiset())
            for a in kps
            for b in kps
            if kp_leq_printed(a, b)
        }
        if reference is None:
            reference = relation
        elif relation != reference:
            return False
    return True


# --- restriction dominance -------------------------------------------------


@functools.cache
def _nat_span_contains(v: tuple[int, ...], roots: tuple[Root, ...]) -> bool:
    """Whether v is a sum of the given roots with non-negative multiplicities."""
    if all(x == 0 for x in v):
        return True
    for r in roots:
        if all(x >= y for x, y in zip(v, r)):
            if _nat_span_contains(tuple(x - y for x, y in zip(v, r)), roots):
                return True
    return False


def decomposition_first_parts(
    order: ConvexOrder, t: int, mult: int, side: str
) -> tuple[tuple[int, ...], ...]:
    """All x with mult*beta_t = x + y, x and y constrained to the two blocks.

    `side` is a res_large_side value: "first-factor" puts x in the suffix
    block N-span{beta_t, ..., beta_N} and y in the prefix block
    N-span{beta_1, ..., beta_t}; "second-factor" swaps the two constraints.
    Index t is 0-based.
    """
    if side not in RES_SIDES:
        raise ValueError(f"bad side {side!r}")
    target = tuple(mult * c for c in order.beta[t])
    if mult == 0:
        return (tuple(0 for _ in target),)
    prefix = tuple(order.beta[: t + 1])
    suffix = tuple(order.beta[t:])
    x_block, y_block = (suffix, prefix) if side == "first-factor" else (prefix, suffix)
    options = []
    for x in itertools.product(*(range(c + 1) for c in target)):
        y = tuple(a - b for a, b in zip(target, x))
        if _nat_span_contains(x, x_block) and _nat_span_contains(y, y_block):
            options.append(x)
    return tuple(options)


def achievable_prefix_sums(
    m: KostantPartition, side: str, cap: int = 1_000_000
) -> frozenset[tuple[int, ...]]:
    """Attainable values of sum_t x_t over blockwise decompositions of m."""
    n = m.order.datum.n
    sums: set[tuple[int, ...]] = {tuple(0 for _ in range(n))}
    work = 0
    for t, mult in enumerate(m.counts):
        if mult == 0:
            continue
        options = decomposition_first_parts(m.order, t, mult, side)
        new_sums: set[tuple[int, ...]] = set()
        for s in sums:
            for x in options:
                work += 1
                if work > cap:
                    raise CapExceeded("restriction decomposition sweep over cap")
                new_sums.add(tuple(a + b for a, b in zip(s, x)))
        sums = new_sums
    return frozenset(sums)


def restriction_dominates(n: KostantPartition, m: KostantPartition) -> bool:
    """Dominance conclusion for partitions achievable from a restriction of m.

    This is the prefix-statistic inequality in its native direction
    (T_k(n) <= T_k(m)); under a calibrated ledger with order_direction
    "reversed" it coincides with kp_leq(m, n), i.e. achievable partitions sit
    at or above m in the closure-normalized order.
    """
    return kp_leq_printed(n, m)


@dataclass(frozen=True)
class MackeyRow:
    counts: tuple[int, ...]
    prefix_flags: tuple[bool, ...]
    achievable: bool
    dominates: bool
    kp_leq_ledger: bool


@dataclass(frozen=True)
class MackeyReport:
    m: KostantPartition
    side: str
    rows: tuple[MackeyRow, ...]

    @property
    def violations(self) -> tuple[MackeyRow, ...]:
        return tuple(r for r in self.rows if r.achievable and not r.dominates)

    def to_tsv(self) -> str:
        lines = ["n\tprefixes-achievable\tdominates"]
        for r in self.rows:
            flags = "".join("1" if f else "0" for f in r.prefix_flags)
            lines.append(
                "{}\t{}\t{}".format(
                    " ".join(str(c) for c in r.counts),
                    flags,
                    "yes" if r.dominates else "no",
                )
            )
        return "\n".join(lines) + "\n"


def mackey_dominance_check(
    m: KostantPartition, ledger: OrientationLedger, cap: int = 1_000_000
) -> MackeyReport:
    """Compare restriction-achievable partitions of m against the dominance order.

    For each Kostant partition n of the same dimension vector, records
    whether every prefix sum_{t<=k} n_t beta_t is an achievable first-part
    sum, and whether n dominates per restriction_dominates.  The
    kp_leq_ledger column is the raw kp_leq(n, m) under the ledger direction,
    kept for audit; the verdict column is `dominates`.
    """
    S = achievable_prefix_sums(m, ledger.res_large_side, cap=cap)
    datum = m.order.datum
    beta = m.order.beta
    rows = []
    for n in enumerate_kp(datum, m.nu, m.order):
        prefix = [0] * datum.n
        flags = []
        for k in range(m.order.length):
            for j in range(datum.n):
                prefix[j] += n.counts[k] * beta[k][j]
            flags.append(tuple(prefix) in S)
        rows.append(
            MackeyRow(
                counts=n.counts,
                prefix_flags=tuple(flags),
                achievable=all(flags),
                dominates=restriction_dominates(n, m),
                kp_leq_ledger=kp_leq(n, m, ledger),
            )
        )
    return MackeyReport(m=m, side=ledger.res_large_side, rows=tuple(rows))
