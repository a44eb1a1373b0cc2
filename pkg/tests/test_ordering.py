"""Vertical order of live segments, insertion order, below relation."""

import random
from fractions import Fraction

import pytest

from nestpoly import OverlapDetected, make_polygon
from nestpoly.ordering import Rel, VerticalRel, cmp_at, insertion_cmp, is_below

from conftest import segments_of, square, top_bottom


def test_cmp_at_nested_squares_chain(nested_squares):
    o, i = nested_squares
    top_o, bot_o = top_bottom(o)
    top_i, bot_i = top_bottom(i)
    chain = [top_o, top_i, bot_i, bot_o]  # y-values 10 > 8 > 2 > 0 at x=3
    for a_idx, a in enumerate(chain):
        for b in chain[a_idx + 1:]:
            assert cmp_at(3, a, b) is Rel.BEFORE
            assert cmp_at(3, b, a) is Rel.AFTER


def test_cmp_at_shared_bottom_edge_area_tiebreak(bottom_edge_pair):
    o, i = bottom_edge_pair
    _, bot_o = top_bottom(o)
    bot_i = next(s for s in segments_of(i) if s.parity == 0)
    # Same height and slope at x=1, both with interior above: the smaller
    # polygon comes first.
    assert o.area == 16 and i.area == 4
    assert cmp_at(1, bot_i, bot_o) is Rel.BEFORE
    assert cmp_at(1, bot_o, bot_i) is Rel.AFTER


def test_cmp_at_identity():
    top, _ = top_bottom(square("S", 0, 0, 4))
    assert cmp_at(2, top, top) is Rel.SAME


def test_insertion_cmp_disjoint_extents():
    a = square("A", 0, 0, 4)
    b = square("B", 10, 0, 4)
    for sa in segments_of(a):
        for sb in segments_of(b):
            assert insertion_cmp(sa, sb) is Rel.BEFORE
            assert insertion_cmp(sb, sa) is Rel.AFTER


def test_insertion_cmp_shared_min_x(vertex_touch_pair):
    o, i = vertex_touch_pair
    top_o, _ = top_bottom(o)
    top_i = next(s for s in segments_of(i) if s.parity == 1)
    assert top_o.min_v.x == top_i.min_v.x == 0
    assert insertion_cmp(top_o, top_i) is Rel.BEFORE
    assert insertion_cmp(top_i, top_i) is Rel.SAME


def test_is_below_nested(nested_squares):
    o, i = nested_squares
    top_o, _ = top_bottom(o)
    top_i, _ = top_bottom(i)
    assert is_below(top_i, top_o) is VerticalRel.BELOW
    assert is_below(top_o, top_i) is VerticalRel.ABOVE


def test_is_below_disjoint(shared_edge_squares):
    a, b = shared_edge_squares
    top_a, _ = top_bottom(a)
    top_b, _ = top_bottom(b)
    assert is_below(top_a, top_b) is VerticalRel.DISJOINT


def test_is_below_crossing_raises(crossing_pair):
    p, q = crossing_pair
    top_p, _ = top_bottom(p)
    top_q, _ = top_bottom(q)
    with pytest.raises(OverlapDetected):
        is_below(top_p, top_q)


def _live_pairs(polygons, rng, count):
    """Random (xi, a, b) with xi in both half-open x-extents."""
    segs = [s for p in polygons for s in segments_of(p)]
    out = []
    while len(out) < count:
        a, b = rng.sample(segs, 2)
        lo = max(a.min_v.x, b.min_v.x)
        hi = min(a.max_v.x, b.max_v.x)
        if lo >= hi:
            continue
        xi = lo + Fraction(rng.randint(0, 999), 1000) * (hi - lo)
        out.append((xi, a, b))
    return out


def test_cmp_at_order_laws(small_corpus):
    rng = random.Random(23)
    polygons = small_corpus[0]
    for xi, a, b in _live_pairs(polygons, rng, 400):
        ab = cmp_at(xi, a, b)
        ba = cmp_at(xi, b, a)
        assert ab in (Rel.BEFORE, Rel.AFTER)
        assert ba is (Rel.AFTER if ab is Rel.BEFORE else Rel.BEFORE)


def test_cmp_at_transitive(small_corpus):
    rng = random.Random(29)
    segs = [s for p in small_corpus[1] for s in segments_of(p)]
    done = 0
    while done < 300:
        a, b, c = rng.sample(segs, 3)
        lo = max(s.min_v.x for s in (a, b, c))
        hi = min(s.max_v.x for s in (a, b, c))
        if lo >= hi:
            continue
        xi = lo + Fraction(rng.randint(0, 999), 1000) * (hi - lo)
        trio = sorted(
            [a, b, c],
            key=lambda s: sum(
                1 for t in (a, b, c) if t is not s and cmp_at(xi, t, s) is Rel.BEFORE
            ),
        )
        assert cmp_at(xi, trio[0], trio[1]) is Rel.BEFORE
        assert cmp_at(xi, trio[1], trio[2]) is Rel.BEFORE
        assert cmp_at(xi, trio[0], trio[2]) is Rel.BEFORE
        done += 1


def test_cmp_at_xi_consistency(small_corpus):
    rng = random.Random(31)
    polygons = small_corpus[2]
    for _, a, b in _live_pairs(polygons, rng, 200):
        lo = max(a.min_v.x, b.min_v.x)
        hi = min(a.max_v.x, b.max_v.x)
        answers = set()
        for _ in range(10):
            xi = lo + Fraction(rng.randint(0, 999), 1000) * (hi - lo)
            answers.add(cmp_at(xi, a, b))
        assert len(answers) == 1


def test_slope_tiebreak_matches_below(small_corpus):
    # When two segments meet at a shared left endpoint, the smaller slope
    # belongs to the lower segment just right of the meeting point.
    rng = random.Random(37)
    from nestpoly.ordering import cmp_slopes

    segs = [s for p in small_corpus[3] for s in segments_of(p)]
    checked = 0
    for a in segs:
        for b in segs:
            if a is b or a.min_v != b.min_v:
                continue
            ea, eb = a.span_edges[0], b.span_edges[0]
            c = cmp_slopes(ea, eb)
            if c == 0:
                continue
            rel = is_below(a, b)
            assert rel is (VerticalRel.BELOW if c < 0 else VerticalRel.ABOVE)
            checked += 1
    _ = rng
