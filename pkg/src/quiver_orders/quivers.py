"""Orientations of simply-laced diagrams and sink-adapted words."""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import CapExceeded
from .root_system import CartanDatum, Word, cartan_datum, num_positive_roots


@dataclass(frozen=True)
class Quiver:
    """An orientation of the diagram of a Cartan datum.

    `arrows` is a tuple of (source, target) vertex pairs; each diagram edge
    appears exactly once.  Arrow order is preserved by quiver reflections so
    that representation matrices can stay aligned with it.
    """

    datum: CartanDatum
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        undirected = sorted(tuple(sorted(a)) for a in self.arrows)
        if undirected != sorted(self.datum.edges):
            raise ValueError("arrows do not orient the diagram edges exactly once")
        for s, t in self.arrows:
            if s == t:
                raise ValueError("loops are not allowed")

    def arrows_into(self, i: int) -> tuple[int, ...]:
        """Indices into `arrows` of the arrows with target i."""
        return tuple(k for k, (_, t) in enumerate(self.arrows) if t == i)

    def arrows_out_of(self, i: int) -> tuple[int, ...]:
        return tuple(k for k, (s, _) in enumerate(self.arrows) if s == i)


def sinks(Q: Quiver) -> tuple[int, ...]:
    """Vertices with no outgoing arrow, ascending."""
    out = {s for s, _ in Q.arrows}
    return tuple(i for i in Q.datum.vertices() if i not in out)


def sources(Q: Quiver) -> tuple[int, ...]:
    inc = {t for _, t in Q.arrows}
    return tuple(i for i in Q.datum.vertices() if i not in inc)


def reflect_quiver(i: int, Q: Quiver) -> Quiver:
    """Reverse every arrow incident to vertex i (valid at sinks and sources)."""
    if i not in sinks(Q) and i not in sources(Q):
        raise ValueError(f"vertex {i} is neither a sink nor a source")
    flipped = tuple((t, s) if s == i or t == i else (s, t) for s, t in Q.arrows)
    return Quiver(Q.datum, flipped)


def linear_quiver(datum: CartanDatum | str) -> Quiver:
    """The orientation pointing every edge from its lower to its higher vertex."""
    if isinstance(datum, str):
        datum = cartan_datum(datum)
    return Quiver(datum, tuple(datum.edges))


def quiver(label: str, arrows: list[tuple[int, int]] | tuple[tuple[int, int], ...]) -> Quiver:
    return Quiver(cartan_datum(label), tuple(arrows))


def is_adapted(w: Word, Q: Quiver) -> bool:
    """True iff each letter i_k is a sink of sigma_{i_{k-1}}...sigma_{i_1}(Q)."""
    current = Q
    for i in w:
        if i not in sinks(current):
            return False
        current = reflect_quiver(i, current)
    return True


@functools.cache
def adapted_word_of_w0(Q: Quiver) -> Word:
    """The lexicographically least reduced word of w0 adapted to Q.

    Depth-first search over sink choices; a candidate sink i is only viable
    when the current prefix sends alpha_i to a positive root (so the word
    stays reduced), and the search backtracks from dead ends.  The result is
    verified to be reduced and adapted before it is returned.
    """
    datum = Q.datum
    n = datum.n
    total = num_positive_roots(datum)
    cols: list[list[int]] = [[1 if r == j else 0 for r in range(n)] for j in range(n)]

    def search(current: Quiver, cols: list[list[int]], word: list[int]) -> Word | None:
        if len(word) == total:
            return tuple(word)
        for i in sinks(current):
            ci = cols[i - 1]
            if not (any(c != 0 for c in ci) and all(c >= 0 for c in ci)):
                continue
            a = datum.cartan[i - 1]
            new_cols = []
            for j in range(n):
                if j == i - 1:
                    new_cols.append([-c for c in ci])
                else:
                    new_cols.append([cols[j][r] - a[j] * ci[r] for r in range(n)])
            word.append(i)
            found = search(reflect_quiver(i, current), new_cols, word)
            if found is not None:
                return found
            word.pop()
        return None

    word = search(Q, cols, [])
    if word is None:
        raise RuntimeError(f"no adapted reduced word of w0 found for {Q}")
    from .root_system import is_reduced, beta_sequence, positive_roots

    if not is_reduced(datum, word) or not is_adapted(word, Q):
        raise RuntimeError("adapted word failed verification")
    if sorted(beta_sequence(datum, word)) != sorted(positive_roots(datum)):
        raise RuntimeError("adapted word does not enumerate the positive roots")
    return word


def commutation_class(datum: CartanDatum, w: Word, cap: int = 10_000) -> tuple[Word, ...]:
    """All words reachable from w by swapping adjacent commuting letters, sorted."""
    seen = {tuple(w)}
    frontier = [tuple(w)]
    while frontier:
        u = frontier.pop()
        for k in range(len(u) - 1):
            a, b = u[k], u[k + 1]
            if a != b and datum.cartan[a - 1][b - 1] == 0:
                v = u[:k] + (b, a) + u[k + 2 :]
                if v not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(f"commutation class larger than {cap}")
                    seen.add(v)
                    frontier.append(v)
    return tuple(sorted(seen))


def parse_quiver_file(text: str) -> Quiver:
    """Parse a quiver description.

    Format: a line "type A3", then either one "i -> j" line per edge or the
    single line "orientation linear".  Blank lines and #-comments ignored.
    """
    label: str | None = None
    arrows: list[tuple[int, int]] = []
    linear = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "type" and len(parts) == 2:
            label = parts[1]
        elif parts[0] == "orientation" and parts[1:] == ["linear"]:
            linear = True
        elif len(parts) == 3 and parts[1] == "->":
            try:
                arrows.append((int(parts[0]), int(parts[2])))
            except ValueError as exc:
                raise ValueError(f"bad arrow line: {raw!r}") from exc
        else:
            raise ValueError(f"unrecognized line: {raw!r}")
    if label is None:
        raise ValueError("missing 'type' line")
    datum = cartan_datum(label)
    if linear:
        if arrows:
            raise ValueError("give either 'orientation linear' or arrow lines, not both")
        return linear_quiver(datum)
    return Quiver(datum, tuple(arrows))
