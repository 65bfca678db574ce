"""Littlewood-Richardson tableaux by exhaustive enumeration.

This is the ground truth the closed forms in :mod:`skewchar.basecover` are
checked against.  Boxes are filled in reverse row word order (rows top to
bottom, each row right to left), so both the lattice condition and the
column condition can be checked the moment a box is filled.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping

from .errors import EmptyDecomposition, FactorOutsideRectangle, InstanceTooLarge
from .partition import (
    Partition,
    Rectangle,
    contains,
    durfee,
    format_partition,
    intersect,
    union,
)
from .skew import SkewShape, disjoint_union

DEFAULT_MAX_BOXES = 22


def is_lattice(word) -> bool:
    counts: Counter[int] = Counter()
    for x in word:
        counts[x] += 1
        if x > 1 and counts[x] > counts[x - 1]:
            return False
    return True


@dataclass(frozen=True)
class LRTableau:
    shape: SkewShape
    entries: Mapping[tuple[int, int], int]

    def reverse_row_word(self) -> list[int]:
        rows: dict[int, list[tuple[int, int]]] = {}
        for (r, c), v in self.entries.items():
            rows.setdefault(r, []).append((c, v))
        return [v for r in sorted(rows) for _, v in sorted(rows[r], reverse=True)]

    def content(self) -> Partition:
        counts = Counter(self.entries.values())
        return Partition(counts[v] for v in range(1, len(counts) + 1))

    def is_semistandard(self) -> bool:
        e = self.entries
        for (r, c), v in e.items():
            if (r, c + 1) in e and e[(r, c + 1)] < v:
                return False
            if (r + 1, c) in e and e[(r + 1, c)] <= v:
                return False
        return True

    def is_lr(self) -> bool:
        return self.is_semistandard() and is_lattice(self.reverse_row_word())


@dataclass(frozen=True)
class Decomposition:
    """A character written as ``{partition: multiplicity}``.

    Zero multiplicities are dropped.  Iteration and :meth:`items` run in
    descending lexicographic order of the partitions.
    """

    terms: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        terms = {Partition(k): int(v) for k, v in self.terms.items() if v}
        if any(v < 0 for v in terms.values()):
            raise ValueError("multiplicities must be nonnegative")
        if len({k.weight for k in terms}) > 1:
            raise ValueError("constituents of a decomposition must share a weight")
        object.__setattr__(self, "terms", dict(sorted(terms.items(), reverse=True)))

    @property
    def weight(self) -> int:
        return next(iter(self.terms)).weight if self.terms else 0

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __getitem__(self, p) -> int:
        return self.terms.get(Partition(p), 0)

    def __contains__(self, p) -> bool:
        return Partition(p) in self.terms

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self):
        return self.terms.items()

    def keys(self):
        return self.terms.keys()

    def total(self) -> int:
        return sum(self.terms.values())

    def to_text(self) -> str:
        return "\n".join(f"{format_partition(p)}\t{m}" for p, m in self.items())

    def to_records(self) -> list[dict]:
        return [{"partition": list(p), "multiplicity": m} for p, m in self.items()]


def _check_size(boxes: int, max_boxes: int | None):
    limit = DEFAULT_MAX_BOXES if max_boxes is None else max_boxes
    if boxes > limit:
        raise InstanceTooLarge(f"{boxes} boxes exceeds the limit of {limit}")


def count_contents(outer, inner, cap: Partition | None = None) -> Counter:
    """Count LR tableaux of ``outer/inner`` by content.

    Works on any nested pair, normalized or not.  ``cap`` bounds how often
    each value may occur, which prunes the search when only one content is
    wanted.
    """
    outer, inner = Partition(outer), Partition(inner)
    n = len(outer)
    spans = [(inner[r], outer[r]) for r in range(n)]
    width = n + 1  # entries in row r never exceed r + 1
    if cap is not None:
        cap_vec = tuple(cap[v] for v in range(width))
    else:
        cap_vec = None

    @lru_cache(maxsize=None)
    def from_row(r: int, above: tuple[int, ...], content: tuple[int, ...]):
        if r == n:
            return Counter({content: 1})
        lo, hi = spans[r]
        alo = spans[r - 1][0] if r else 0
        ahi = spans[r - 1][1] if r else 0
        result: Counter = Counter()
        row = [0] * (hi - lo)
        counts = list(content)

        def fill(c: int, ceiling: int):
            # c runs from hi - 1 down to lo; values weakly decrease leftwards
            if c < lo:
                sub = from_row(r + 1, tuple(row), tuple(counts))
                result.update(sub)
                return
            floor = above[c - alo] + 1 if alo <= c < ahi else 1
            for v in range(floor, ceiling + 1):
                i = v - 1
                if i >= width:
                    break
                if i and counts[i] + 1 > counts[i - 1]:
                    continue
                if cap_vec is not None and counts[i] + 1 > cap_vec[i]:
                    continue
                counts[i] += 1
                row[c - lo] = v
                fill(c - 1, v)
                counts[i] -= 1

        fill(hi - 1, width)
        return result

    totals = from_row(0, (), (0,) * width)
    out: Counter = Counter()
    for content, m in totals.items():
        out[Partition(content)] += m
    return out


def lr_tableaux(a: SkewShape) -> Iterator[LRTableau]:
    """Yield every LR tableau of ``a``, box by box in reverse row word order."""
    order = [(r, c) for r in range(1, a.num_rows + 1)
             for c in range(a.outer[r - 1], a.inner[r - 1], -1)]
    entries: dict[tuple[int, int], int] = {}
    counts: Counter[int] = Counter()
    bound = a.num_rows

    def rec(k: int):
        if k == len(order):
            yield LRTableau(a, dict(entries))
            return
        r, c = order[k]
        lo = entries.get((r - 1, c), 0) + 1
        hi = entries.get((r, c + 1), bound)
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            entries[(r, c)] = v
            counts[v] += 1
            yield from rec(k + 1)
            counts[v] -= 1
            del entries[(r, c)]

    yield from rec(0)


def decompose(a: SkewShape, max_boxes: int | None = None) -> Decomposition:
    _check_size(a.size, max_boxes)
    return Decomposition(count_contents(a.outer, a.inner))


def lr_coefficient(lam, mu, nu, max_boxes: int | None = None) -> int:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not contains(lam, mu) or nu.weight != lam.weight - mu.weight:
        return 0
    _check_size(nu.weight, max_boxes)
    return count_contents(lam, mu, cap=nu)[nu]


def outer_product(mu, nu, max_boxes: int | None = None) -> Decomposition:
    mu, nu = Partition(mu), Partition(nu)
    _check_size(mu.weight + nu.weight, max_boxes)
    return decompose(disjoint_union(mu, nu), max_boxes)


def schubert_product(mu, nu, rect: Rectangle, max_boxes: int | None = None) -> Decomposition:
    """The outer product restricted to constituents inside ``rect``."""
    mu, nu = Partition(mu), Partition(nu)
    box = rect.partition
    for name, p in (("first", mu), ("second", nu)):
        if not contains(box, p):
            raise FactorOutsideRectangle(
                f"{name} factor {format_partition(p)} does not fit in {rect}")
    if mu.weight + nu.weight > rect.area:
        return Decomposition()
    full = outer_product(mu, nu, max_boxes)
    return Decomposition({p: m for p, m in full.items() if contains(box, p)})


def base_of(d: Decomposition) -> Partition:
    if not d:
        raise EmptyDecomposition("base of an empty decomposition")
    return intersect(*d)


def cover_of(d: Decomposition) -> Partition:
    if not d:
        raise EmptyDecomposition("cover of an empty decomposition")
    return union(*d)


def durfee_of(d: Decomposition) -> int:
    return max((durfee(p) for p in d), default=0)
