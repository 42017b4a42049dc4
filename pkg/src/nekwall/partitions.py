"""Young diagrams and the index sets of the instanton sums."""

from __future__ import annotations

from functools import lru_cache


class YoungDiagram:
    """A weakly decreasing tuple of positive integers, possibly empty."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        self.parts = parts

    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """lambda_i with lambda = 0 beyond the diagram; i is 1-based."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def transpose(self) -> "YoungDiagram":
        if not self.parts:
            return self
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return YoungDiagram(cols)

    def cells(self):
        """All (i, j) with 1 <= i, 1 <= j <= lambda_i."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def to_text(self) -> str:
        return "[%s]" % ",".join(str(p) for p in self.parts)

    @staticmethod
    def from_text(s: str) -> "YoungDiagram":
        s = s.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError("diagram text must look like [3,1,1]")
        body = s[1:-1].strip()
        if not body:
            return YoungDiagram()
        return YoungDiagram(int(p) for p in body.split(","))

    def __eq__(self, other):
        if not isinstance(other, YoungDiagram):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "YoungDiagram(%s)" % (self.parts,)


def arm(Y: YoungDiagram, i: int, j: int) -> int:
    """a_Y(i, j) = lambda_i - j, for any i, j >= 1 (negatives off the diagram)."""
    _check_cell(i, j)
    return Y.part(i) - j


def leg(Y: YoungDiagram, i: int, j: int) -> int:
    """l_Y(i, j) = (transpose lambda)_j - i."""
    _check_cell(i, j)
    count = 0
    for p in Y.parts:
        if p >= j:
            count += 1
        else:
            break
    return count - i


def coarm(Y: YoungDiagram, i: int, j: int) -> int:
    """a'(i, j) = j - 1; the diagram is irrelevant."""
    _check_cell(i, j)
    return j - 1


def coleg(Y: YoungDiagram, i: int, j: int) -> int:
    """l'(i, j) = i - 1."""
    _check_cell(i, j)
    return i - 1


def _check_cell(i, j):
    if i < 1 or j < 1:
        raise ValueError("cells have 1-based coordinates")


class DiagramPair:
    __slots__ = ("first", "second")

    def __init__(self, first: YoungDiagram, second: YoungDiagram):
        self.first = first
        self.second = second

    def total(self) -> int:
        return self.first.size() + self.second.size()

    def component(self, alpha: int) -> YoungDiagram:
        if alpha == 1:
            return self.first
        if alpha == 2:
            return self.second
        raise ValueError("component index must be 1 or 2")

    def __eq__(self, other):
        if not isinstance(other, DiagramPair):
            return NotImplemented
        return self.first == other.first and self.second == other.second

    def __hash__(self):
        return hash((self.first, self.second))

    def __repr__(self):
        return "DiagramPair(%s, %s)" % (self.first.parts, self.second.parts)


@lru_cache(maxsize=None)
def _partitions(n: int, bound: int = None):
    """All partitions of n as tuples, ascending lexicographic order.

    The largest part comes first inside each tuple; the recursion keeps
    the remaining parts bounded by it, so every tuple is produced once.
    """
    if bound is None:
        bound = n
    if n == 0:
        return ((),)
    out = []
    for first in range(1, min(n, bound) + 1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int):
    """Partitions of n as YoungDiagrams, ascending lex on the parts tuple."""
    return [YoungDiagram(p) for p in _partitions(n)]


def pairs_of_total(n: int):
    """Every DiagramPair with |first| + |second| = n, exactly once.

    Order: ascending in |first|, then lexicographic in the parts of the
    first and of the second diagram.  Deterministic, so sums over pairs
    and caches keyed by position are reproducible.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for k in range(n + 1):
        for y1 in partitions_of(k):
            for y2 in partitions_of(n - k):
                out.append(DiagramPair(y1, y2))
    return out


def tuples_of_total(chi: int, n: int):
    """All chi-tuples of DiagramPairs with totals summing to n.

    Compositions of n are walked with the first slot ascending, each slot
    expanded by pairs_of_total, so the stream is deterministic.
    """
    if chi < 1:
        raise ValueError("chi must be positive")
    if chi == 1:
        return [(p,) for p in pairs_of_total(n)]
    out = []
    for k in range(n + 1):
        for head in pairs_of_total(k):
            for tail in tuples_of_total(chi - 1, n - k):
                out.append((head,) + tail)
    return out
