"""Skew diagrams: normal form, rotation, conjugation, decay, row overlaps
and maximal rectangle placements."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InnerNotContained, ParseError
from .partition import (
    Partition,
    Rectangle,
    conjugate,
    contains,
    format_partition,
    parse_partition,
)


def _normalize(outer: Partition, inner: Partition) -> tuple[Partition, Partition]:
    rows = [(outer[i], inner[i]) for i in range(len(outer))]
    while rows and rows[0][0] == rows[0][1]:
        rows.pop(0)
    while rows and rows[-1][0] == rows[-1][1]:
        rows.pop()
    if not rows:
        return Partition(), Partition()
    shift = min(mu for _, mu in rows)
    rows = [[lam - shift, mu - shift] for lam, mu in rows]
    # an empty middle row may sit anywhere between its neighbours; pin it
    # to the row below so equal box sets give equal shapes
    for i in range(len(rows) - 2, 0, -1):
        if rows[i][0] == rows[i][1]:
            rows[i] = [rows[i + 1][0]] * 2
    return (Partition(lam for lam, _ in rows), Partition(mu for _, mu in rows))


@dataclass(frozen=True)
class SkewShape:
    """The skew diagram outer/inner, kept in normal form.

    Empty rows at the top or bottom and empty columns on the left are
    removed on construction, so two diagrams that agree up to translation
    compare equal.  Empty rows strictly inside the diagram are kept (they
    separate components) with both parts set to the outer part of the row
    below.
    """

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        outer, inner = Partition(self.outer), Partition(self.inner)
        if not contains(outer, inner):
            raise InnerNotContained(
                f"{format_partition(inner)} is not contained in {format_partition(outer)}")
        outer, inner = _normalize(outer, inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    @property
    def num_rows(self) -> int:
        return len(self.outer)

    def __len__(self) -> int:
        return self.size

    def row_lengths(self) -> list[int]:
        return [self.outer[i] - self.inner[i] for i in range(self.num_rows)]

    def boxes(self) -> list[tuple[int, int]]:
        """Boxes as 1-based (row, column) pairs in reading order."""
        return [(i + 1, j + 1)
                for i in range(self.num_rows)
                for j in range(self.inner[i], self.outer[i])]

    def is_partition(self) -> bool:
        return not self.inner

    def __str__(self) -> str:
        return format_skew(self)


def make_skew(outer: Partition, inner: Partition = Partition()) -> SkewShape:
    return SkewShape(Partition(outer), Partition(inner))


def rotate(a: SkewShape) -> SkewShape:
    """Turn the diagram by 180 degrees."""
    n, w = a.num_rows, a.outer[0]
    outer = [w - a.inner[n - 1 - i] for i in range(n)]
    inner = [w - a.outer[n - 1 - i] for i in range(n)]
    return SkewShape(Partition(outer), Partition(inner))


def conjugate_skew(a: SkewShape) -> SkewShape:
    return SkewShape(conjugate(a.outer), conjugate(a.inner))


def disjoint_union(p: Partition, q: Partition) -> SkewShape:
    """A diagram decaying into ``q`` (upper right) and ``p`` (lower left)."""
    p, q = Partition(p), Partition(q)
    outer = [x + p[0] for x in q] + list(p)
    inner = [p[0]] * len(q)
    return SkewShape(Partition(outer), Partition(inner))


def decay(a: SkewShape) -> list[SkewShape]:
    """Connected components, top-right first.

    Consecutive rows belong to the same component exactly when their column
    ranges overlap; an empty row always separates.
    """
    comps: list[list[int]] = []
    current: list[int] = []
    for i in range(a.num_rows):
        if a.outer[i] == a.inner[i]:
            if current:
                comps.append(current)
            current = []
            continue
        if current and a.outer[i] <= a.inner[i - 1]:
            comps.append(current)
            current = []
        current.append(i)
    if current:
        comps.append(current)
    return [SkewShape(Partition(a.outer[i] for i in rows),
                      Partition(a.inner[i] for i in rows)) for rows in comps]


def rho(a: SkewShape, i: int) -> list[int]:
    """Row lengths of the diagram left after deleting the top ``i - 1`` boxes
    of every column, as a descending list with zeros dropped."""
    if i < 1:
        raise ValueError("rho needs i >= 1")
    lam, mu = a.outer, a.inner
    rows = (lam[i + j - 1] - mu[j] for j in range(a.num_rows - i + 1))
    return sorted((x for x in rows if x > 0), reverse=True)


def row_lengths_partition(a: SkewShape) -> Partition:
    return Partition(sorted((x for x in a.row_lengths() if x > 0), reverse=True))


@dataclass(frozen=True)
class RectanglePlacement:
    rect: Rectangle
    top_row: int
    left_col: int

    def boxes(self) -> list[tuple[int, int]]:
        return [(self.top_row + r, self.left_col + c)
                for r in range(self.rect.height) for c in range(self.rect.width)]


def max_rectangle_placements(a: SkewShape) -> list[RectanglePlacement]:
    """Rectangles inside ``a`` that cannot grow by a row or column.

    A rectangle spanning rows r..e fits iff its width is at most
    outer[e] - inner[r].  It is stuck at the top iff r is the first row or
    inner drops between rows r-1 and r, and stuck at the bottom iff e is the
    last row or outer drops between rows e and e+1.
    """
    lam, mu, n = a.outer, a.inner, a.num_rows
    tops = [r for r in range(n) if r == 0 or mu[r - 1] > mu[r]]
    bottoms = [e for e in range(n) if e == n - 1 or lam[e + 1] < lam[e]]
    out = []
    for r in tops:
        for e in bottoms:
            if e < r:
                continue
            width = lam[e] - mu[r]
            if width > 0:
                out.append(RectanglePlacement(Rectangle(width, e - r + 1), r + 1, mu[r] + 1))
    return out


def parse_skew(text: str) -> SkewShape:
    """Parse ``"OUTER/INNER"``; a bare partition means an empty inner part."""
    outer, sep, inner = text.partition("/")
    if sep and "/" in inner:
        raise ParseError(f"too many '/' in {text!r}")
    return make_skew(parse_partition(outer), parse_partition(inner))


def format_skew(a: SkewShape) -> str:
    return f"{format_partition(a.outer)}/{format_partition(a.inner)}"


def render(a: SkewShape) -> str:
    """ASCII picture: '.' for cells of the inner partition, '#' for boxes."""
    return "\n".join("." * a.inner[i] + "#" * (a.outer[i] - a.inner[i])
                     for i in range(a.num_rows))
