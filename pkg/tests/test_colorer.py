"""
Tests for the well-coloring of H.
FILE: tests/test_colorer.py
"""

from itertools import product

from core.colorer import (
    ActiveSquare, Coloring, _propagation_order, _try, active_edges, check_well_coloring, color_well,
    complete_greedily, disable_caps, disable_squares, disable_two_cycles, find_short_monochromatic_cycles,
    invariant2_violations, preprocess, short_cycles,
)
from core.graph_data import COLORS, Color, Multigraph

from .conftest import random_core


def _k5() -> Multigraph:
    return Multigraph.from_edges(range(5), [(u, v, 1) for u in range(5) for v in range(u + 1, 5)])


def test_coloring_tracks_counts():
    coloring = Coloring(_k5())
    assert all(coloring.count(v, Color.BLANK) == 4 for v in range(5))

    coloring.set_color(0, Color.RED)  # 0-1
    assert coloring.count(0, Color.RED) == 1
    assert coloring.count(1, Color.BLANK) == 3

    coloring.remove(0)
    assert coloring.count(0, Color.RED) == 0
    assert 0 not in coloring.as_dict()
    assert 0 not in coloring.blank_edges()


def test_snapshot_and_restore():
    coloring = Coloring(_k5())
    snap = coloring.snapshot()
    coloring.set_color(3, Color.BLUE)
    coloring.remove(4)
    coloring.restore(snap)
    assert coloring.color_of(3) is Color.BLANK
    assert coloring.removed == set()
    assert all(coloring.count(v, Color.BLANK) == 4 for v in range(5))


def test_can_color_refuses_short_cycles():
    coloring = Coloring(_k5())
    coloring.set_color(0, Color.RED)   # 0-1
    coloring.set_color(4, Color.RED)   # 1-2
    # 0-2 would close a red triangle
    assert not coloring.can_color(1, Color.RED)
    assert coloring.can_color(1, Color.BLUE)


def test_short_cycles_of_k5():
    found = short_cycles(_k5())
    assert sum(len(c.vertices) == 3 for c in found) == 10
    assert sum(len(c.vertices) == 4 for c in found) == 15


def test_short_cycles_expand_parallel_copies(doubled_pentagon):
    assert short_cycles(doubled_pentagon) == []
    triangle = Multigraph.from_edges(range(3), [(0, 1, 1), (0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert len(short_cycles(triangle)) == 2


def test_disable_two_cycles(doubled_pentagon):
    coloring = disable_two_cycles(doubled_pentagon)
    assert coloring.color_class(Color.RED) == [0, 1, 2, 3, 4]
    assert coloring.color_class(Color.BLUE) == [5, 6, 7, 8, 9]
    assert coloring.report.stats['two_cycles'] == 5


def test_disable_two_cycles_ignores_simple_graphs():
    coloring = disable_two_cycles(_k5())
    assert len(coloring.blank_edges()) == 10


def test_disable_caps_splits_ribbons(square_cap_graph):
    coloring = disable_two_cycles(square_cap_graph)
    disable_caps(square_cap_graph, coloring)
    first, second = coloring.color_of(7), coloring.color_of(8)
    assert first in COLORS and second in COLORS
    assert first is not second


def test_color_well_on_doubled_pentagon(doubled_pentagon):
    coloring, report = color_well(doubled_pentagon)
    assert coloring.blank_edges() == []
    assert coloring.removed == set()
    assert check_well_coloring(doubled_pentagon, coloring) == []
    assert report.stats['two_cycles'] == 5


def test_color_well_breaks_every_short_cycle_of_k5():
    graph = _k5()
    coloring, _ = color_well(graph, debug_checks=True)
    assert find_short_monochromatic_cycles(graph, coloring) == []
    for v in graph.vertices:
        assert coloring.count(v, Color.RED) <= 2
        assert coloring.count(v, Color.BLUE) <= 2


def test_color_well_on_random_cores():
    checked = 0
    for seed in range(30):
        graph = random_core(7 + seed % 4, seed)
        if graph is None:
            continue
        coloring, _ = color_well(graph)
        assert find_short_monochromatic_cycles(graph, coloring) == []
        for v in graph.vertices:
            assert coloring.count(v, Color.RED) <= 2
            assert coloring.count(v, Color.BLUE) <= 2

        classes = coloring.color_class(Color.RED) + coloring.color_class(Color.BLUE) + coloring.blank_edges()
        assert sorted(classes + sorted(coloring.removed)) == graph.edge_ids
        checked += 1
    assert checked > 0


def test_color_well_is_deterministic(double_edge_triangle_graph):
    first, _ = color_well(double_edge_triangle_graph)
    second, _ = color_well(double_edge_triangle_graph)
    assert first.to_dict() == second.to_dict()


def test_disable_squares_on_k5():
    graph = _k5()
    coloring = disable_two_cycles(graph)
    disable_squares(graph, coloring)
    assert coloring.report.stats['squares'] > 0
    assert find_short_monochromatic_cycles(graph, coloring) == []
    for v in graph.vertices:
        assert coloring.count(v, Color.RED) <= 2
        assert coloring.count(v, Color.BLUE) <= 2


def test_complete_greedily_leaves_a_blank_matching():
    graph = _k5()
    coloring = complete_greedily(graph, Coloring(graph))
    touched = [x for e in coloring.blank_edges() for x in (graph.edge(e).u, graph.edge(e).v)]
    assert len(touched) == len(set(touched))
    for v in graph.vertices:
        assert coloring.count(v, Color.RED) <= 2
        assert coloring.count(v, Color.BLUE) <= 2


def test_preprocess_without_blanks_is_a_no_op(doubled_pentagon):
    coloring = disable_two_cycles(doubled_pentagon)
    before = coloring.to_dict()
    preprocess(doubled_pentagon, coloring)
    assert coloring.report.stats['preprocess_iterations'] == 0
    assert coloring.report.stats['preprocess_bound'] == 2
    assert coloring.report.events == []
    assert coloring.to_dict() == before


def _octahedron() -> Multigraph:
    missing = {(0, 1), (2, 3), (4, 5)}
    return Multigraph.from_edges(range(6), [(u, v, 1) for u in range(6) for v in range(u + 1, 6) if (u, v) not in missing])


def _disabled(graph: Multigraph) -> Coloring:
    coloring = disable_two_cycles(graph)
    disable_caps(graph, coloring)
    disable_squares(graph, coloring)
    return coloring


def test_invariant1_is_kept_when_an_option_allows_it():
    coloring = Coloring(_k5())
    same, mixed = {0: Color.RED, 1: Color.RED}, {0: Color.RED, 1: Color.BLUE}
    assert _try(coloring, [same, mixed], keep_invariant1=True)
    assert coloring.color_of(1) is Color.BLUE
    assert coloring.report.stats['invariant1_relaxed'] == 0

    coloring = Coloring(_k5())
    assert _try(coloring, [same], keep_invariant1=True)
    assert coloring.color_of(1) is Color.RED
    assert coloring.invariant1_violations([0]) == [0]
    assert coloring.report.stats['invariant1_relaxed'] == 1


def test_invariant2_flags_active_edges():
    graph = _k5()
    squares = short_cycles(graph)
    coloring = Coloring(graph)
    coloring.set_color(0, Color.RED)   # 0-1
    assert active_edges(coloring, squares) == {0}
    # a lone colored edge at each endpoint
    assert invariant2_violations(coloring, squares) == [0]

    coloring.set_color(1, Color.BLUE)  # 0-2
    coloring.set_color(5, Color.BLUE)  # 1-3
    assert {0, 1} <= active_edges(coloring, squares)
    assert 0 in invariant2_violations(coloring, squares)


def test_invariant2_holds_without_short_cycles(doubled_pentagon):
    coloring = disable_two_cycles(doubled_pentagon)
    squares = short_cycles(doubled_pentagon)
    assert active_edges(coloring, squares) == set()
    assert invariant2_violations(coloring, squares) == []


def test_propagation_visits_neighbours_before_the_opposite_edge():
    square = ActiveSquare(vertices=(0, 1, 2, 3), edges=(10, 11, 12, 13))
    assert _propagation_order(square) == [10, 11, 13, 12]
    triangle = ActiveSquare(vertices=(0, 1, 2), edges=(4, 5, 6))
    assert _propagation_order(triangle) == [4, 5, 6]


def test_debug_checks_report_invariant_breaks():
    _, report = color_well(_k5(), debug_checks=True)
    assert 'squares_left_active' in report.stats
    for key, text in (('invariant1_violations', 'two equal colors'), ('invariant2_violations', 'two-or-four')):
        assert (report.stats[key] > 0) == any(text in event for event in report.events)

    _, quiet = color_well(_k5())
    assert quiet.stats['invariant1_violations'] == 0
    assert quiet.stats['invariant2_violations'] == 0


def test_no_blank_completion_closes_a_short_cycle(doubled_pentagon):
    graphs = [doubled_pentagon, _k5(), _octahedron()]
    for seed in range(40):
        graph = random_core(5 + seed % 2, seed)
        if graph is not None and graph.num_edges <= 12:
            graphs.append(graph)

    checked = 0
    for graph in graphs:
        coloring = _disabled(graph)
        if coloring.report.stats['squares_left_active']:
            continue
        blanks = coloring.blank_edges()
        assert len(blanks) <= 12
        snap = coloring.snapshot()
        for colors in product(COLORS, repeat=len(blanks)):
            coloring.restore(snap)
            for edge_id, color in zip(blanks, colors):
                coloring.set_color(edge_id, color)
            if any(coloring.count(v, c) > 2 for v in graph.vertices for c in COLORS):
                continue
            assert find_short_monochromatic_cycles(graph, coloring) == []
        coloring.restore(snap)
        checked += 1
    assert checked > 0


def test_disabling_and_preprocessing_leave_no_short_cycles():
    checked = 0
    for seed in range(30):
        graph = random_core(7 + seed % 4, seed)
        if graph is None:
            continue
        coloring = _disabled(graph)
        complete_greedily(graph, coloring)
        preprocess(graph, coloring)
        assert find_short_monochromatic_cycles(graph, coloring) == []
        assert check_well_coloring(graph, coloring) == []

        _, report = color_well(graph)
        assert report.stats['safety_breaks'] == 0
        checked += 1
    assert checked > 0
