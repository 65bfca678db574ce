"""Seeded random cross-checks of the closed forms against the LR oracle.

All randomness comes from one ``random.Random(seed)``; the generators below
consume it in a fixed order, so a report is reproducible from
``(scope, max_boxes, seed, count)`` alone.

Generators
----------
``random_partition(rng, n)``
    Parts drawn largest first: each part is uniform in ``1..min(previous
    part, remaining weight)``.
``random_partition_in(rng, rect)``
    Row by row, each part uniform in ``0..previous part`` (the first row
    uses ``rect.width``); stops at the first zero or after ``rect.height``
    rows.
``random_skew(rng, max_boxes)``
    Inner partition of weight uniform in ``0..max_boxes``, then a box count
    uniform in ``1..max_boxes`` added one addable corner at a time, the
    corner chosen uniformly.
``random_subpartition(rng, p)``
    Row by row, each part uniform in ``0..min(previous part, p_i)``; stops
    at the first zero.
``random_rectangle(rng, max_area)``
    Width uniform in ``1..max_area``, then height uniform in
    ``1..max_area // width``.

Every scope starts from a fresh ``random.Random(seed)``, so ``all`` runs the
same instances as the individual scopes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import lr
from .basecover import (
    base_product,
    base_skew,
    cover_product,
    cover_skew,
    durfee_schubert,
    union_partition,
)
from .errors import InstanceTooLarge, OverlappingBlocks
from .partition import (
    Partition,
    Rectangle,
    complement_in_rectangle,
    conjugate,
    contains,
    format_partition,
)
from .skew import (
    SkewShape,
    conjugate_skew,
    format_skew,
    max_rectangle_placements,
    rho,
    rotate,
    row_lengths_partition,
)

SCOPES = ("thm34", "thm42", "thm43", "thm45", "symmetries")


def random_partition(rng: random.Random, n: int) -> Partition:
    parts, cap = [], n
    while n:
        x = rng.randint(1, min(cap, n))
        parts.append(x)
        n -= x
        cap = x
    return Partition(parts)


def random_partition_in(rng: random.Random, rect: Rectangle) -> Partition:
    parts, cap = [], rect.width
    for _ in range(rect.height):
        x = rng.randint(0, cap)
        if x == 0:
            break
        parts.append(x)
        cap = x
    return Partition(parts)


def add_random_boxes(rng: random.Random, p: Partition, n: int) -> Partition:
    parts = list(p)
    for _ in range(n):
        corners = [i for i in range(len(parts)) if i == 0 or parts[i - 1] > parts[i]]
        corners.append(len(parts))
        i = rng.choice(corners)
        if i == len(parts):
            parts.append(1)
        else:
            parts[i] += 1
    return Partition(parts)


def random_skew(rng: random.Random, max_boxes: int) -> SkewShape:
    inner = random_partition(rng, rng.randint(0, max_boxes))
    outer = add_random_boxes(rng, inner, rng.randint(1, max_boxes))
    return SkewShape(outer, inner)


def random_rectangle(rng: random.Random, max_area: int) -> Rectangle:
    width = rng.randint(1, max_area)
    return Rectangle(width, rng.randint(1, max_area // width))


def random_product(rng: random.Random, max_boxes: int) -> tuple[Partition, Partition]:
    n = rng.randint(0, max_boxes)
    a = rng.randint(0, n)
    return random_partition(rng, a), random_partition(rng, n - a)


def random_subpartition(rng: random.Random, p: Partition) -> Partition:
    parts, cap = [], p[0]
    for x in p:
        y = rng.randint(0, min(cap, x))
        if y == 0:
            break
        parts.append(y)
        cap = y
    return Partition(parts)


def random_cover_shape(rng: random.Random, max_boxes: int) -> SkewShape:
    """A nonempty lam/mu with lam = (lam_1^n, ...), mu_1 <= lam_l, l(mu) <= n.

    Width, height and n are drawn first, the rows below the first n come
    from ``random_partition_in`` and mu from ``random_partition_in`` of the
    (lam_l x n) box; draws that exceed ``max_boxes`` are rejected.
    """
    while True:
        width = rng.randint(1, max_boxes)
        height = rng.randint(1, max(1, max_boxes // width))
        n = rng.randint(1, height)
        tail = random_partition_in(rng, Rectangle(width, height - n)) if height > n else ()
        lam = Partition([width] * n + list(tail))
        mu = random_partition_in(rng, Rectangle(lam[-1], n))
        if 0 < lam.weight - mu.weight <= max_boxes:
            return SkewShape(lam, mu)


@dataclass
class PropertyResult:
    scope: str
    name: str
    instances: int = 0
    failures: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, describe: Callable[[], str]):
        self.instances += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = describe()

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.scope}.{self.name} [{self.instances} instances]"
        if not self.passed:
            text += f" {self.failures} failed; first: {self.counterexample}"
        return text

    def to_record(self) -> dict:
        return {"scope": self.scope, "property": self.name, "passed": self.passed,
                "instances": self.instances, "failures": self.failures,
                "counterexample": self.counterexample}


@dataclass
class Report:
    scope: str
    max_boxes: int
    seed: int
    count: int
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_text(self) -> str:
        head = (f"verify scope={self.scope} max_boxes={self.max_boxes} "
                f"seed={self.seed} count={self.count}")
        lines = [head] + [r.line() for r in self.results]
        failed = sum(not r.passed for r in self.results)
        lines.append(f"{len(self.results) - failed}/{len(self.results)} properties passed")
        return "\n".join(lines)

    def to_record(self) -> dict:
        return {"scope": self.scope, "max_boxes": self.max_boxes, "seed": self.seed,
                "count": self.count, "passed": self.passed,
                "properties": [r.to_record() for r in self.results]}


class _Props:
    def __init__(self, scope: str):
        self.scope = scope
        self.by_name: dict[str, PropertyResult] = {}

    def __call__(self, name: str) -> PropertyResult:
        if name not in self.by_name:
            self.by_name[name] = PropertyResult(self.scope, name)
        return self.by_name[name]

    def results(self) -> list[PropertyResult]:
        return list(self.by_name.values())


def _fmt(p) -> str:
    return format_partition(Partition(p))


def check_thm34(rng: random.Random, count: int, max_boxes: int) -> list[PropertyResult]:
    prop = _Props("thm34")
    for _ in range(count):
        a = random_skew(rng, max_boxes)
        d = lr.decompose(a)
        base = base_skew(a)
        desc = lambda: f"A={format_skew(a)}"  # noqa: E731
        prop("base_equals_union").record(base == union_partition(a), desc)
        prop("base_equals_oracle").record(base == lr.base_of(d), desc)
        prop("rho_max_is_base_row").record(
            all(max(rho(a, i), default=0) == base[i - 1]
                for i in range(1, a.num_rows + 2)), desc)
        prop("base_below_constituents").record(all(contains(nu, base) for nu in d), desc)
        prop("sorted_rows_constituent").record(row_lengths_partition(a) in d, desc)
        placements = max_rectangle_placements(a)
        prop("placements_fit").record(
            all(set(pl.boxes()) <= set(a.boxes()) for pl in placements), desc)
    return prop.results()


def check_thm42(rng: random.Random, count: int, max_area: int) -> list[PropertyResult]:
    prop = _Props("thm42")
    for _ in range(count):
        rect = random_rectangle(rng, max_area)
        lam = random_partition_in(rng, rect)
        mu = random_subpartition(rng, lam)
        skew = lr.decompose(SkewShape(lam, mu))
        lam_inv = complement_in_rectangle(lam, rect)
        sch = lr.schubert_product(mu, lam_inv, rect)
        dual = {complement_in_rectangle(alpha, rect): m for alpha, m in skew.items()}
        desc = lambda: (f"mu={_fmt(mu)} lam={_fmt(lam)} rect={rect}")  # noqa: E731
        prop("coefficients_match").record(dual == dict(sch.items()), desc)
    return prop.results()


def check_thm43(rng: random.Random, count: int, max_boxes: int,
                max_area: int | None = None) -> list[PropertyResult]:
    prop = _Props("thm43")
    max_area = max_boxes if max_area is None else max_area
    for _ in range(count):
        mu, nu = random_product(rng, max_boxes)
        d = lr.outer_product(mu, nu)
        desc = lambda: f"mu={_fmt(mu)} nu={_fmt(nu)}"  # noqa: E731
        cover, base = cover_product(mu, nu), base_product(mu, nu)
        prop("outer_cover").record(cover == lr.cover_of(d), desc)
        prop("outer_base").record(base == lr.base_of(d), desc)
        prop("outer_bounds_attained").record(
            all(any(g[i] == base[i] for g in d) and any(g[i] == cover[i] for g in d)
                for i in range(len(cover))), desc)

        rect = random_rectangle(rng, max_area)
        mu, nu = random_partition_in(rng, rect), random_partition_in(rng, rect)
        sch = lr.schubert_product(mu, nu, rect)
        desc = lambda: f"mu={_fmt(mu)} nu={_fmt(nu)} rect={rect}"  # noqa: E731
        try:
            cover = cover_product(mu, nu, rect)
        except OverlappingBlocks:
            prop("schubert_overlap_means_empty").record(not sch, desc)
            continue
        prop("schubert_nonempty").record(bool(sch), desc)
        if sch:
            prop("schubert_cover").record(cover == lr.cover_of(sch), desc)
            prop("schubert_durfee").record(
                durfee_schubert(mu, nu, rect) == lr.durfee_of(sch), desc)
            prop("schubert_base_above_outer_base").record(
                contains(lr.base_of(sch), base_product(mu, nu)), desc)
    return prop.results()


def check_thm45(rng: random.Random, count: int, max_boxes: int) -> list[PropertyResult]:
    prop = _Props("thm45")
    for _ in range(count):
        a = random_cover_shape(rng, max_boxes)
        d = lr.decompose(a)
        cover = cover_skew(a)
        desc = lambda: f"A={format_skew(a)}"  # noqa: E731
        prop("cover_equals_oracle").record(cover == lr.cover_of(d), desc)
        prop("constituents_below_cover").record(all(contains(cover, nu) for nu in d), desc)
    return prop.results()


def _translated_counts(a: SkewShape, right: int, down: int):
    # pad a with `down` empty rows on top and `right` empty columns on the left
    w = a.outer[0] + right
    outer = [w] * down + [x + right for x in a.outer]
    inner = [w] * down + [a.inner[i] + right for i in range(a.num_rows)]
    return lr.count_contents(outer, inner)


def check_symmetries(rng: random.Random, count: int, max_boxes: int) -> list[PropertyResult]:
    prop = _Props("symmetries")
    for _ in range(count):
        a = random_skew(rng, max_boxes)
        d = lr.decompose(a)
        desc = lambda: f"A={format_skew(a)}"  # noqa: E731
        lam, mu = a.outer, a.inner
        nu = rng.choice(list(d))
        c = d[nu]
        prop("commutativity").record(
            c == lr.lr_coefficient(lam, nu, mu), lambda: desc() + f" nu={_fmt(nu)}")
        prop("conjugation").record(
            c == lr.lr_coefficient(conjugate(lam), conjugate(mu), conjugate(nu)),
            lambda: desc() + f" nu={_fmt(nu)}")
        rot = rotate(a)
        prop("rotation").record(lr.decompose(rot) == d, desc)
        conj = lr.decompose(conjugate_skew(a))
        prop("conjugate_shape").record(
            dict(conj.items()) == {conjugate(k): m for k, m in d.items()}, desc)
        right, down = rng.randint(0, 3), rng.randint(0, 3)
        prop("translation").record(
            _translated_counts(a, right, down) == dict(d.items()),
            lambda: desc() + f" shift=({right},{down})")
        prop("rho_equal_under_rotation").record(
            all(rho(a, i) == rho(rot, i) for i in range(1, a.num_rows + 1)), desc)
        b = random_skew(rng, max_boxes)
        if b.size == a.size and lr.decompose(b) == d:
            prop("rho_equal_for_equal_characters").record(
                all(rho(a, i) == rho(b, i)
                    for i in range(1, max(a.num_rows, b.num_rows) + 1)),
                lambda: desc() + f" B={format_skew(b)}")
    return prop.results()


def run_verify(scope: str, max_boxes: int, seed: int, count: int) -> Report:
    if max_boxes > lr.DEFAULT_MAX_BOXES:
        raise InstanceTooLarge(
            f"max boxes {max_boxes} exceeds the oracle limit of {lr.DEFAULT_MAX_BOXES}")
    if scope != "all" and scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    report = Report(scope, max_boxes, seed, count)
    checks = {
        "thm34": check_thm34,
        "thm42": check_thm42,
        "thm43": check_thm43,
        "thm45": check_thm45,
        "symmetries": check_symmetries,
    }
    for name in (SCOPES if scope == "all" else (scope,)):
        rng = random.Random(seed)
        report.results.extend(checks[name](rng, count, max_boxes))
    return report
