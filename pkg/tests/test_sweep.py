"""Event construction, sweep status, and the nesting forest itself."""

import pytest

from nestpoly import (
    NestingForest,
    OverlapDetected,
    make_polygon,
    nesting_forest,
)
from nestpoly.errors import OutOfDomain
from nestpoly.sweep import (
    StatusEntry,
    SweepStatus,
    advance_current_edge,
    build_events,
    status_predecessor,
)

from conftest import segments_of, square, top_bottom


def all_segments(polygons):
    return [s for p in polygons for s in segments_of(p)]


def test_build_events_single_square():
    p = square("S", 0, 0, 4)
    top, bottom = top_bottom(p)
    events = build_events([top, bottom])
    assert [(e.kind, e.xi) for e in events] == [
        ("insert", 0),
        ("insert", 0),
        ("remove", 4),
        ("remove", 4),
    ]
    assert events[0].segment is top  # top first: y 4 > 0
    assert events[1].segment is bottom
    assert events[0].first and not events[1].first


def test_build_events_removal_before_insertion(shared_edge_squares):
    events = build_events(all_segments(shared_edge_squares))
    at2 = [e for e in events if e.xi == 2]
    kinds = [e.kind for e in at2]
    assert kinds == ["remove", "remove", "insert", "insert"]
    assert {e.segment.polygon_id for e in at2[:2]} == {"A"}
    assert {e.segment.polygon_id for e in at2[2:]} == {"B"}


def test_build_events_properties(small_corpus):
    for polygons in small_corpus[:8]:
        segments = all_segments(polygons)
        events = build_events(segments)
        assert len(events) == 2 * len(segments)
        assert [e.xi for e in events] == sorted(e.xi for e in events)
        for prev, cur in zip(events, events[1:]):
            if prev.xi == cur.xi:
                # At one abscissa no remove may follow an insert.
                assert not (prev.kind == "insert" and cur.kind == "remove")
        firsts = [e.segment.polygon_id for e in events if e.first]
        assert sorted(firsts) == sorted(p.id for p in polygons)


def test_status_predecessor_square_alone():
    top, bottom = top_bottom(square("S", 0, 0, 4))
    status = SweepStatus()
    e_top = status.insert(top, 0)
    e_bottom = status.insert(bottom, 0)
    assert status_predecessor(status, e_bottom) is e_top
    assert status_predecessor(status, e_top) is None


def test_status_predecessor_nested(nested_squares):
    o, i = nested_squares
    top_o, bot_o = top_bottom(o)
    top_i, bot_i = top_bottom(i)
    status = SweepStatus()
    status.insert(top_o, 0)
    status.insert(bot_o, 0)
    e_top_i = status.insert(top_i, 2)
    status.insert(bot_i, 2)
    assert status_predecessor(status, e_top_i).segment is top_o
    order = [e.segment for e in status.in_order()]
    assert order == [top_o, top_i, bot_i, bot_o]


def test_status_remove_keeps_order(nested_squares):
    o, i = nested_squares
    top_o, bot_o = top_bottom(o)
    top_i, bot_i = top_bottom(i)
    status = SweepStatus()
    for seg, xi in ((top_o, 0), (bot_o, 0), (top_i, 2), (bot_i, 2)):
        status.insert(seg, xi)
    status.remove(top_i)
    status.remove(bot_i)
    assert [e.segment for e in status.in_order()] == [top_o, bot_o]
    assert len(status) == 2


def test_advance_current_edge_staircase():
    p = make_polygon("Z", [(0, 0), (4, 0), (4, 2), (6, 2), (6, 6), (0, 6)])
    bottom = next(s for s in segments_of(p) if len(s.span_edges) == 2)
    entry = StatusEntry(bottom)
    assert entry.current_edge().a.y == 0
    advance_current_edge(entry, 5)
    assert entry.current_edge().a == (4, 2)
    # Forward-only and idempotent: a smaller xi on the same edge is a no-op.
    advance_current_edge(entry, 5)
    assert entry.current_edge().a == (4, 2)
    with pytest.raises(OutOfDomain):
        advance_current_edge(entry, 7)


def test_advance_current_edge_postcondition(small_corpus):
    import random
    from fractions import Fraction

    rng = random.Random(13)
    for polygons in small_corpus[:5]:
        for p in polygons:
            for s in segments_of(p):
                entry = StatusEntry(s)
                lo, hi = s.min_v.x, s.max_v.x
                xs = sorted(
                    lo + Fraction(rng.randint(0, 1000), 1000) * (hi - lo)
                    for _ in range(5)
                )
                for xi in xs:
                    advance_current_edge(entry, xi)
                    e = entry.current_edge()
                    if xi == hi:
                        assert e is s.span_edges[-1]
                    else:
                        assert e.a.x <= xi < e.b.x


def test_forest_nested(nested_squares):
    forest = nesting_forest(nested_squares, debug=True)
    assert forest.parent == {"O": None, "I": "O"}
    assert forest.depths() == {"O": 0, "I": 1}


def test_forest_shared_edge_siblings(shared_edge_squares):
    forest = nesting_forest(shared_edge_squares, debug=True)
    assert forest.parent == {"A": None, "B": None}


def test_forest_vertex_touch(vertex_touch_pair):
    forest = nesting_forest(vertex_touch_pair, debug=True)
    assert forest.parent == {"O": None, "I": "O"}


def test_forest_bottom_edge_tiebreak(bottom_edge_pair):
    forest = nesting_forest(bottom_edge_pair, debug=True)
    assert forest.parent == {"O": None, "I": "O"}


def test_forest_crossing_is_rejected(crossing_pair):
    # The crossing pair violates the overlap-free precondition. The sweep
    # itself only compares at insertion abscissas and may not notice, but
    # the validator must flag the pair before it is ever swept.
    from nestpoly import validate

    report = validate(crossing_pair)
    assert not report.ok
    assert any(v.kind == "interior_overlap" for v in report.violations)


def test_forest_three_levels():
    polygons = [square("A", 0, 0, 30), square("B", 5, 5, 18), square("C", 8, 8, 6)]
    forest = nesting_forest(polygons, debug=True)
    assert forest.parent == {"A": None, "B": "A", "C": "B"}
    assert forest.roots() == ["A"]
    assert forest.children()["B"] == ["C"]


def test_forest_api():
    forest = NestingForest({"a": None, "b": "a", "c": "a", "d": None})
    assert forest.roots() == ["a", "d"]
    assert forest.children()["a"] == ["b", "c"]
    assert forest.depth("c") == 1
    assert forest.depths() == {"a": 0, "b": 1, "c": 1, "d": 0}
