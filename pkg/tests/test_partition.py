import pytest
from hypothesis import given, strategies as st

from skewchar import (
    ParseError,
    Partition,
    Rectangle,
    ShapeDoesNotFit,
    complement_in_rectangle,
    conjugate,
    contains,
    durfee,
    format_partition,
    intersect,
    parse_partition,
    rectangle_decomposition,
    union,
)
from strategies import boxes, partitions


def test_partition_normalizes_trailing_zeros():
    assert Partition((3, 1, 0, 0)) == Partition((3, 1))
    assert Partition(()).weight == 0
    assert Partition((4, 2))[7] == 0


@pytest.mark.parametrize("bad", [(1, 2), (3, -1), (2, 0, 1)])
def test_partition_rejects_non_partitions(bad):
    with pytest.raises(ValueError):
        Partition(bad)


def test_order_is_descending_lex_when_reversed():
    ps = [Partition(p) for p in [(2, 1), (3,), (1, 1, 1), (2, 2), (3, 1)]]
    assert sorted(ps, reverse=True) == [(3, 1), (3,), (2, 2), (2, 1), (1, 1, 1)]


def _columns_oracle(p):
    cells = boxes(p)
    cols = {}
    for _, c in cells:
        cols[c] = cols.get(c, 0) + 1
    return Partition(sorted(cols.values(), reverse=True))


@pytest.mark.parametrize("p, expected", [
    ((), ()),
    ((3,), (1, 1, 1)),
    ((5, 3, 3, 2, 1), (5, 4, 3, 1, 1)),
])
def test_conjugate_examples(p, expected):
    assert conjugate(p) == Partition(expected)
    assert _columns_oracle(p) == Partition(expected)


def test_contains_examples():
    assert contains((5, 3, 2), (5, 3, 2))
    assert contains((9, 6, 5, 3, 2, 1), (5, 3, 2))
    assert not contains((5, 3, 2), (5, 4))


def test_union_of_rectangles():
    rects = [(5,), (3, 3), (3, 3, 3), (2, 2, 2, 2), (1,) * 5]
    assert union(*rects) == (5, 3, 3, 2, 1)


def test_union_intersect_examples():
    assert intersect((4, 2), ()) == ()
    assert union((4, 2), (3, 3, 1)) == (4, 3, 1)


def test_durfee_examples():
    assert durfee(()) == 0
    assert durfee((7, 6, 5, 3)) == 3
    p = Partition((5, 3, 3, 2, 1))
    assert contains(p, (3, 3, 3)) and not contains(p, (4,) * 4)
    assert durfee(p) == 3


def _complement_oracle(p, rect):
    # boxes of the rectangle not in p, rotated, counted by row
    rest = {(rect.height - 1 - i, rect.width - 1 - j)
            for i in range(rect.height) for j in range(rect.width)
            if (i, j) not in boxes(p)}
    return Partition(sum(1 for (i, _) in rest if i == r) for r in range(rect.height))


@pytest.mark.parametrize("p, rect, expected", [
    ((4, 3, 1), Rectangle(7, 4), (7, 6, 4, 3)),
    ((), Rectangle(3, 2), (3, 3)),
    ((4, 2, 1), Rectangle(7, 4), (7, 6, 5, 3)),
])
def test_complement_examples(p, rect, expected):
    assert complement_in_rectangle(p, rect) == expected
    assert _complement_oracle(p, rect) == expected


def test_complement_requires_fit():
    with pytest.raises(ShapeDoesNotFit):
        complement_in_rectangle((5,), Rectangle(4, 2))
    with pytest.raises(ShapeDoesNotFit):
        complement_in_rectangle((1, 1, 1), Rectangle(4, 2))


def test_rectangle_decomposition_examples():
    assert rectangle_decomposition((5, 3, 3, 2, 1)) == [
        Rectangle(5, 1), Rectangle(3, 3), Rectangle(2, 4), Rectangle(1, 5)]
    assert rectangle_decomposition(()) == []
    assert rectangle_decomposition((2, 2)) == [Rectangle(2, 2)]


@pytest.mark.parametrize("text, parts", [
    ("9^3,7^2,4", (9, 9, 9, 7, 7, 4)),
    (" 3 , 1^2 ", (3, 1, 1)),
    ("-", ()),
    ("", ()),
])
def test_parse(text, parts):
    assert parse_partition(text) == parts


@pytest.mark.parametrize("text", ["3,4", "a", "3^", "3,,1", "0^2,1"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_partition(text)


@given(partitions())
def test_format_round_trip(p):
    assert parse_partition(format_partition(p)) == p


@given(partitions())
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p) == _columns_oracle(p)


@given(partitions(), partitions(), partitions())
def test_lattice_laws(a, b, c):
    assert union(a, b) == union(b, a)
    assert intersect(a, b) == intersect(b, a)
    assert union(union(a, b), c) == union(a, union(b, c))
    assert intersect(intersect(a, b), c) == intersect(a, intersect(b, c))
    assert union(a, a) == a == intersect(a, a)
    assert contains(a, intersect(a, b))
    assert contains(union(a, b), a)


@given(partitions())
def test_durfee_conjugate(p):
    assert durfee(p) == durfee(conjugate(p))


@given(st.integers(1, 10), st.integers(1, 10), st.data())
def test_complement_involution(k, l, data):
    rect = Rectangle(k, l)
    p = data.draw(partitions(max_weight=k * l, max_part=k, max_len=l))
    q = complement_in_rectangle(p, rect)
    assert q.weight == k * l - p.weight
    assert complement_in_rectangle(q, rect) == p


@given(partitions())
def test_rectangle_decomposition_union(p):
    rects = rectangle_decomposition(p)
    assert union(*(r.partition for r in rects)) == p
    for r in rects:
        for s in rects:
            assert r == s or not contains(s.partition, r.partition)
