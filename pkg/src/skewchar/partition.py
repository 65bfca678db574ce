"""Integer partitions and the lattice operations on them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import ParseError, ShapeDoesNotFit


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((3, 1, 0))``
    equals ``Partition((3, 1))``.  Integer reads past the end return 0,
    which lets formulas index rows freely without padding::

        >>> p = Partition((4, 2))
        >>> p[5]
        0

    Ordering is plain tuple ordering, which agrees with lexicographic order
    on zero-padded parts.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, x in enumerate(parts):
            if x < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and x > parts[i - 1]:
                raise ValueError(f"partition parts must weakly decrease: {parts}")
        return super().__new__(cls, parts)

    def __getitem__(self, index):
        if isinstance(index, int) and index >= len(self):
            return 0
        return tuple.__getitem__(self, index)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def padded(self, n: int) -> tuple[int, ...]:
        return tuple(self[i] for i in range(max(n, len(self))))


@dataclass(frozen=True)
class Rectangle:
    """The partition (width^height)."""

    width: int
    height: int

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"rectangle sides must be positive: {self.width}x{self.height}")

    @property
    def partition(self) -> Partition:
        return Partition((self.width,) * self.height)

    @property
    def area(self) -> int:
        return self.width * self.height

    def __str__(self) -> str:
        return f"{self.width}x{self.height}"


def conjugate(p: Partition) -> Partition:
    p = Partition(p)
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    outer, inner = Partition(outer), Partition(inner)
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def union(*parts: Partition) -> Partition:
    """Row-wise maximum of any number of partitions."""
    parts = [Partition(p) for p in parts]
    n = max((len(p) for p in parts), default=0)
    return Partition(max((p[i] for p in parts), default=0) for i in range(n))


def intersect(*parts: Partition) -> Partition:
    """Row-wise minimum.  Needs at least one argument."""
    parts = [Partition(p) for p in parts]
    if not parts:
        raise ValueError("intersect() needs at least one partition")
    n = min(len(p) for p in parts)
    return Partition(min(p[i] for p in parts) for i in range(n))


def durfee(p: Partition) -> int:
    p = Partition(p)
    d = 0
    while p[d] >= d + 1:
        d += 1
    return d


def complement_in_rectangle(p: Partition, rect: Rectangle) -> Partition:
    """Boxes of ``rect`` outside ``p``, turned 180 degrees into a partition."""
    p = Partition(p)
    if not contains(rect.partition, p):
        raise ShapeDoesNotFit(f"{format_partition(p)} does not fit in {rect}")
    return Partition(rect.width - p[rect.height - 1 - i] for i in range(rect.height))


def rectangle_decomposition(p: Partition) -> list[Rectangle]:
    """The maximal rectangles ((p_i)^i) whose union is ``p``, top first."""
    p = Partition(p)
    return [Rectangle(p[i], i + 1) for i in range(len(p)) if p[i] > p[i + 1]]


_TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"9^3,7^2,4"`` style text.  ``"-"`` and ``""`` are empty."""
    text = text.strip()
    if text in ("", "-"):
        return Partition()
    parts: list[int] = []
    for term in text.split(","):
        m = _TERM.match(term.strip())
        if not m:
            raise ParseError(f"bad partition term {term.strip()!r} in {text!r}")
        value, exp = int(m.group(1)), int(m.group(2) or 1)
        parts.extend([value] * exp)
    try:
        return Partition(parts)
    except ValueError as err:
        raise ParseError(str(err)) from None


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p) if len(p) else "-"


def partitions_of(n: int, max_part: int | None = None):
    """All partitions of ``n`` in descending lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def partitions_in_rectangle(rect: Rectangle):
    """All partitions fitting inside ``rect``."""

    def rec(rows_left, cap):
        if rows_left == 0:
            yield ()
            return
        for x in range(cap, -1, -1):
            if x == 0:
                yield ()
            else:
                for rest in rec(rows_left - 1, x):
                    yield (x,) + rest

    for parts in rec(rect.height, rect.width):
        yield Partition(parts)
