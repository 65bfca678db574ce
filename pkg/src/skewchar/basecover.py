"""Closed forms for base partitions, cover partitions and Durfee sizes.

Nothing in this module enumerates tableaux.  The base partition of a skew
character is read off the diagram (row i of the base is the longest row
left after deleting the top i-1 boxes of every column), and covers of
products come from the base of a complementary skew diagram inside the
bounding rectangle.
"""

from __future__ import annotations

from .errors import (
    ConstraintViolated,
    EmptyShape,
    FactorOutsideRectangle,
    OverlappingBlocks,
)
from .partition import (
    Partition,
    Rectangle,
    complement_in_rectangle,
    contains,
    durfee,
    format_partition,
    union,
)
from .skew import SkewShape, disjoint_union, max_rectangle_placements


def base_skew(a: SkewShape) -> Partition:
    """Row-wise minimum over all constituents of the skew character of ``a``.

    Row i is ``max_j (outer[i+j-1] - inner[j])``, clipped at zero.
    """
    if a.size == 0:
        raise EmptyShape("the empty diagram has no base partition")
    lam, mu, n = a.outer, a.inner, a.num_rows
    return Partition(
        max(max(lam[i + j] - mu[j], 0) for j in range(n - i))
        for i in range(n)
    )


def union_partition(a: SkewShape) -> Partition:
    """Union of all rectangles that fit inside ``a``."""
    if a.size == 0:
        raise EmptyShape("the empty diagram contains no rectangle")
    return union(*(pl.rect.partition for pl in max_rectangle_placements(a)))


def base_product(mu, nu) -> Partition:
    shape = disjoint_union(mu, nu)
    if shape.size == 0:
        return Partition()
    return base_skew(shape)


def default_rectangle(mu, nu) -> Rectangle | None:
    """Bounding box in which the Schubert product equals the outer product.

    ``None`` when both factors are empty.
    """
    mu, nu = Partition(mu), Partition(nu)
    k, l = mu[0] + nu[0], len(mu) + len(nu)
    return Rectangle(k, l) if k and l else None


def product_shape(mu, nu, rect: Rectangle) -> SkewShape:
    """``rect`` with ``nu`` cut from the top left and ``mu``, rotated, cut
    from the bottom right."""
    mu, nu = Partition(mu), Partition(nu)
    box = rect.partition
    for name, p in (("first", mu), ("second", nu)):
        if not contains(box, p):
            raise FactorOutsideRectangle(
                f"{name} factor {format_partition(p)} does not fit in {rect}")
    outer = complement_in_rectangle(mu, rect)
    if not contains(outer, nu):
        raise OverlappingBlocks(
            f"{format_partition(mu)} and {format_partition(nu)} overlap inside {rect}")
    return SkewShape(outer, nu)


def cover_product(mu, nu, rect: Rectangle | None = None) -> Partition:
    """Row-wise maximum over the constituents of the product of ``mu`` and
    ``nu``, restricted to ``rect`` when given (the Schubert product)."""
    if rect is None:
        rect = default_rectangle(mu, nu)
        if rect is None:
            return Partition()
    shape = product_shape(mu, nu, rect)
    # an empty shape means the product is the single constituent rect
    base = base_skew(shape) if shape.size else Partition()
    return complement_in_rectangle(base, rect)


def durfee_schubert(mu, nu, rect: Rectangle | None = None) -> int:
    return durfee(cover_product(mu, nu, rect))


def check_cover_constraints(a: SkewShape) -> None:
    """Raise :class:`ConstraintViolated` unless ``a`` = lam/mu has lam
    starting with n equal parts, mu[0] <= lam[-1] and len(mu) <= n."""
    lam, mu = a.outer, a.inner
    n = sum(1 for x in lam if x == lam[0])
    if mu[0] > lam[-1]:
        raise ConstraintViolated(
            f"first part of inner ({mu[0]}) exceeds last part of outer ({lam[-1]})")
    if len(mu) > n:
        raise ConstraintViolated(
            f"inner has {len(mu)} parts but outer starts with only {n} equal parts")


def cover_skew(a: SkewShape) -> Partition:
    """Cover partition of a skew character whose associated Schubert product
    is an ordinary product; see :func:`check_cover_constraints`."""
    if a.size == 0:
        return Partition()
    check_cover_constraints(a)
    lam, mu = a.outer, a.inner
    rect = Rectangle(lam[0], len(lam))
    lam_inv = complement_in_rectangle(lam, rect)
    return complement_in_rectangle(base_product(mu, lam_inv), rect)
