import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzy2crisp.miner import rule_supports
from fuzzy2crisp.regions import (
    EMPTY,
    INF,
    Hyperrectangle,
    Interval,
    Region,
    box_intersect,
    disjoint_decomposition,
    elementary_intervals,
    interval_intersect,
    region_contains,
    region_difference,
    region_intersect,
    region_is_empty,
    region_union,
    same_point_set,
    union_of_boxes,
)


def box(*dims):
    return Hyperrectangle(tuple(dims))


def test_interval_normalisation():
    assert Interval(2, 1) == EMPTY
    assert Interval(1, 1, True, False) == EMPTY
    assert Interval(-INF, 3, True, True) == Interval(-INF, 3, False, True)
    assert Interval.point(2).is_singleton
    assert not EMPTY.is_singleton and EMPTY.is_empty
    with pytest.raises(ValueError):
        Interval(float("nan"), 1)


def test_interval_intersect_examples():
    assert interval_intersect(Interval.open(-INF, 4.96), Interval.open(1.12, INF)) == Interval.open(1.12, 4.96)
    assert interval_intersect(Interval(0, 2, False, True), Interval(2, 3, True, False)) == Interval.point(2)
    assert interval_intersect(Interval.open(0, 2), Interval(2, 3, True, False)) == EMPTY


def test_interval_containment_at_endpoints():
    iv = Interval(0, 2, False, True)
    assert 0 not in iv and 2 in iv and 1 in iv
    assert 5 not in EMPTY
    assert list(iv.contains_array(np.array([0.0, 1.0, 2.0, 3.0]))) == [False, True, True, False]


def test_open_minus_open_keeps_closed_boundary():
    (piece,) = Interval.open(0, 2).difference(Interval.open(1, 2))
    assert piece == Interval(0, 1, False, True)
    assert 1 in piece
    r = region_difference(box(Interval.open(0, 2)), box(Interval.open(1, 2)))
    assert r.boxes == (box(Interval(0, 1, False, True)),)
    assert region_contains(r, (1.0,))


@pytest.mark.parametrize("text", ["(-inf, 4.96]", "[2.0, 2.0]", "(1.12, +inf)", "(-inf, +inf)", "{}", "[0.5, 3.0)"])
def test_parse_str_round_trip(text):
    iv = Interval.parse(text)
    assert Interval.parse(str(iv)) == iv


def test_box_intersect_examples(frb):
    s1, s2, s3 = rule_supports(frb)
    assert box_intersect(s1, s2) == box(Interval.open(-INF, 4.96), Interval.open(1.19, INF))
    assert box_intersect(s1, s3).is_empty
    assert box_intersect(s2, s2) == s2
    with pytest.raises(ValueError):
        box_intersect(s1, Hyperrectangle.full(3))


def test_region_union_examples(frb):
    a = Region.from_box(box(Interval.open(0, 1)))
    assert region_union(a, Region.empty(1)) == a.canonical()
    u = region_union(a, box(Interval.open(0.5, 2)))
    assert u.boxes == (box(Interval.open(0, 2)),)
    with pytest.raises(ValueError):
        region_union(a, Region.empty(2))


def test_union_of_supports_misses_only_the_boundary_ray(frb):
    supports = rule_supports(frb)
    u = union_of_boxes(supports, 2)
    rng = np.random.default_rng(1)
    pts = np.vstack([
        rng.uniform(-10, 15, size=(2000, 2)),
        [[4.96, y] for y in (-5.0, 0.0, 1.19, 1.2, 7.0)],
        [[x, 1.19] for x in (4.9, 4.96, 5.0)],
    ])
    direct = np.zeros(len(pts), dtype=bool)
    for s in supports:
        direct |= s.contains_points(pts)
    assert np.array_equal(u.contains_points(pts), direct)
    assert not u.contains((4.96, 1.19))
    assert not u.contains((4.96, -3.0))
    assert u.contains((4.96, 1.2))


def test_region_difference_examples(frb):
    s1, s2, s3 = rule_supports(frb)
    b1 = region_difference(s1, union_of_boxes([s2, s3], 2))
    assert b1.boxes == (box(Interval.open(-INF, 4.96), Interval(-INF, 1.19, False, True)),)
    assert str(b1) == "(-inf, 4.96) x (-inf, 1.19]"
    assert region_difference(s1, s1).is_empty
    assert region_difference(s1, Region.empty(2)).boxes == (s1,)


def test_region_is_empty_and_contains_examples(frb):
    s1, s2, s3 = rule_supports(frb)
    others = union_of_boxes([s2, s3], 2)
    b1 = region_difference(s1, others)
    b12 = region_difference(box_intersect(s1, s2), s3)
    assert region_is_empty(Region.empty(2))
    assert region_is_empty(box_intersect(s1, s3))
    assert not region_is_empty(b12)
    assert region_contains(b1, (0, 1.19))
    assert not region_contains(b12, (0, 1.19))
    with pytest.raises(ValueError):
        region_contains(b1, (float("nan"), 0))
    with pytest.raises(ValueError):
        region_contains(b1, (0.0,))


def test_disjoint_decomposition_examples(frb):
    one = box(Interval(0, 1, True, False), Interval.open(2, 3))
    assert disjoint_decomposition([one]).boxes == (one,)
    assert disjoint_decomposition([one, one]).boxes == (one,)
    supports = rule_supports(frb)
    d = disjoint_decomposition(supports)
    _assert_disjoint(d)
    xs = sorted({v for s in supports for iv in s.dims for v in (iv.lo, iv.hi) if np.isfinite(v)})
    probe = _probe_values(xs)
    pts = np.array(list(itertools.product(probe, repeat=2)))
    direct = np.zeros(len(pts), dtype=bool)
    for s in supports:
        direct |= s.contains_points(pts)
    assert np.array_equal(d.contains_points(pts), direct)
    with pytest.raises(ValueError):
        disjoint_decomposition([])


def test_elementary_intervals_partition_the_line():
    cells = elementary_intervals([2.0, 0.0, 2.0])
    assert [str(c) for c in cells] == ["(-inf, 0.0)", "[0.0, 0.0]", "(0.0, 2.0)", "[2.0, 2.0]", "(2.0, +inf)"]
    assert elementary_intervals([]) == [Interval.full()]


def test_canonical_merges_only_exact_neighbours():
    left = box(Interval(0, 1, False, True))
    right = box(Interval.open(1, 2))
    gap = box(Interval.open(1.5, 3))
    assert Region(1, (left, right)).canonical().boxes == (box(Interval.open(0, 2)),)
    assert len(Region(1, (box(Interval.open(0, 1)), right)).canonical()) == 2
    assert len(Region(1, (left, box(Interval(1, 2, True, False))))) == 2  # overlapping input left alone
    assert len(Region(1, (left, gap)).canonical()) == 2


# --- properties against a raw list-of-boxes oracle -------------------------

GRID = (0.0, 1.0, 2.0, 3.0)
ENDS = st.sampled_from((-INF,) + GRID + (INF,))


@st.composite
def intervals(draw):
    lo, hi = sorted((draw(ENDS), draw(ENDS)))
    return Interval(lo, hi, draw(st.booleans()), draw(st.booleans()))


def boxes_of(m):
    return st.lists(st.tuples(*[intervals()] * m).map(Hyperrectangle), min_size=0, max_size=4)


def _probe_values(values):
    values = sorted(set(values))
    if not values:
        return [0.0]
    mids = [(a + b) / 2 for a, b in zip(values, values[1:])]
    return values + mids + [values[0] - 1, values[-1] + 1]


def _probe(m):
    return np.array(list(itertools.product(_probe_values(GRID), repeat=m)))


def _raw_contains(boxes, pts):
    mask = np.zeros(len(pts), dtype=bool)
    for b in boxes:
        mask |= b.contains_points(pts)
    return mask


def _assert_disjoint(region):
    for p, q in itertools.combinations(region.boxes, 2):
        assert box_intersect(p, q).is_empty, (p, q)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from((1, 2, 3)).flatmap(lambda m: st.tuples(st.just(m), boxes_of(m), boxes_of(m))))
def test_set_operations_match_pointwise_logic(case):
    m, raw_a, raw_b = case
    pts = _probe(m)
    a = disjoint_decomposition(raw_a) if raw_a else Region.empty(m)
    b = disjoint_decomposition(raw_b) if raw_b else Region.empty(m)
    in_a, in_b = _raw_contains(raw_a, pts), _raw_contains(raw_b, pts)
    assert np.array_equal(a.contains_points(pts), in_a)
    for result, expected in (
        (region_union(a, b), in_a | in_b),
        (region_intersect(a, b), in_a & in_b),
        (region_difference(a, b), in_a & ~in_b),
    ):
        _assert_disjoint(result)
        assert np.array_equal(result.contains_points(pts), expected)
        assert result.is_empty == (not result.boxes)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from((1, 2, 3)).flatmap(lambda m: st.tuples(st.just(m), boxes_of(m).filter(bool))))
def test_decomposition_preserves_point_set(case):
    m, raw = case
    pts = _probe(m)
    d = disjoint_decomposition(raw)
    _assert_disjoint(d)
    assert np.array_equal(d.contains_points(pts), _raw_contains(raw, pts))
    if d.boxes:
        assert disjoint_decomposition(list(d.boxes)) == d


@given(intervals(), intervals(), st.sampled_from(_probe_values(GRID)))
def test_interval_operations_pointwise(p, q, x):
    assert (x in interval_intersect(p, q)) == (x in p and x in q)
    pieces = p.difference(q)
    assert sum(x in piece for piece in pieces) == (x in p and x not in q)
    if p.issubset(q):
        assert x not in p or x in q


def test_same_point_set_ignores_box_layout():
    whole = region(Interval.open(0, 2), Interval.open(0, 2))
    split = Region(2, (
        Hyperrectangle((Interval(0, 1, False, True), Interval.open(0, 2))),
        Hyperrectangle((Interval.open(1, 2), Interval.open(0, 2))),
    ))
    assert split != whole and same_point_set(split, whole)
    assert not same_point_set(whole, region(Interval.closed(0, 2), Interval.open(0, 2)))


def region(*dims):
    return Region.from_box(Hyperrectangle(tuple(dims)))
