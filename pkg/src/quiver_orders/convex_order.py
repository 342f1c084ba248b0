"""Convex enumerations of the positive roots from reduced words of w0.

A reduced word (i_1, ..., i_N) of the longest element lists each positive
root exactly once via beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}).  The
companion coweights gamma_k = -s_{i_1}...s_{i_k}(omega_{i_k}^vee) pair
against the betas with a fixed sign pattern: the matrix
C[k][l] = <gamma_k, beta_l> has unit diagonal, non-positive entries strictly
above it and non-negative entries strictly below it.  Prefix sums of rows of
C drive the partition order in kostant.py.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .quivers import Quiver, adapted_word_of_w0, is_adapted
from .root_system import (
    CartanDatum,
    Coweight,
    Root,
    Word,
    beta_sequence,
    is_reduced,
    num_positive_roots,
    pairing,
    positive_roots,
    reflect_coweight,
)


@dataclass(frozen=True)
class ConvexOrder:
    """A reduced word of w0 together with its beta, gamma and pairing data."""

    datum: CartanDatum
    word: Word
    beta: tuple[Root, ...]
    gamma: tuple[Coweight, ...]
    pairings: tuple[tuple[int, ...], ...]
    quiver: Quiver | None = None

    @property
    def length(self) -> int:
        return len(self.word)

    def index_of(self, root: Root) -> int:
        """Position (0-based) of a positive root in the enumeration."""
        return self.beta.index(root)


def build_order(datum: CartanDatum, word: Word, quiver: Quiver | None = None) -> ConvexOrder:
    """Build the convex-order data of a reduced word of w0.

    If a quiver is supplied the word must be adapted to it; passing the
    quiver marks the order as usable for representation-theoretic ops.
    """
    word = tuple(word)
    if not is_reduced(datum, word):
        raise ValueError(f"word {word} is not reduced")
    if len(word) != num_positive_roots(datum):
        raise ValueError("word is reduced but not a word of the longest element")
    beta = beta_sequence(datum, word)
    if sorted(beta) != sorted(positive_roots(datum)):
        raise ValueError("beta sequence does not enumerate the positive roots")
    if quiver is not None:
        if quiver.datum != datum:
            raise ValueError("quiver type does not match the Cartan datum")
        if not is_adapted(word, quiver):
            raise ValueError(f"word {word} is not adapted to the quiver")
    gamma = []
    for k, i in enumerate(word):
        x = datum.omega(i)
        for j in reversed(word[: k + 1]):
            x = reflect_coweight(datum, j, x)
        gamma.append(tuple(-c for c in x))
    pairings = tuple(
        tuple(pairing(datum, g, b) for b in beta) for g in gamma
    )
    for k in range(len(word)):
        if pairings[k][k] != 1:
            raise ValueError(f"pairing <gamma_{k+1}, beta_{k+1}> is not 1")
    return ConvexOrder(
        datum=datum,
        word=word,
        beta=beta,
        gamma=tuple(gamma),
        pairings=pairings,
        quiver=quiver,
    )


@functools.cache
def adapted_order(Q: Quiver) -> ConvexOrder:
    """The convex order of the canonical adapted word of a quiver."""
    return build_order(Q.datum, adapted_word_of_w0(Q), quiver=Q)


@dataclass(frozen=True)
class SignReport:
    """Off-diagonal sign violations of a pairing matrix, if any."""

    order: ConvexOrder
    violations: tuple[tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def pairing_sign_report(order: ConvexOrder) -> SignReport:
    """Check C[k][k] = 1, C[k][l] <= 0 for k < l, C[k][l] >= 0 for k > l.

    Violations are reported as (k, l, value) with 0-based indices.
    """
    bad: list[tuple[int, int, int]] = []
    C = order.pairings
    for k in range(order.length):
        for l in range(order.length):
            v = C[k][l]
            if k == l and v != 1:
                bad.append((k, l, v))
            elif k < l and v > 0:
                bad.append((k, l, v))
            elif k > l and v < 0:
                bad.append((k, l, v))
    return SignReport(order=order, violations=tuple(bad))
