"""
Tests for instances, multigraphs, cycle covers and alternating arithmetic.
FILE: tests/test_graph_data.py
"""

import random
from decimal import Decimal
from fractions import Fraction

import pytest

from core.errors import DegreeViolation, InstanceFormatError, StructureViolation
from core.graph_data import (
    Color, CycleCover, EdgeMultiset, Instance, Multigraph, alternating_decomposition,
    alternating_weight, apply_alternating, canonical_cycle, enumerate_cycle_covers,
    format_weight, is_good_cycle_cover, pair_key, to_weight,
)
from utils.validation import validate_multigraph

from .conftest import A, B, C, D, E, F, G, H, I


def _two_triangles() -> Instance:
    """Triangles 012 and 345 at weight 4, plus 0-3 = 3 and 1-4 = 1"""
    weights = {(0, 1): 4, (1, 2): 4, (0, 2): 4, (3, 4): 4, (4, 5): 4, (3, 5): 4, (0, 3): 3, (1, 4): 1}
    return Instance.from_pairs(6, weights)


# ==================== WEIGHTS ====================

def test_to_weight_parses_decimals_exactly():
    assert to_weight("2.3") == Fraction(23, 10)
    assert to_weight(7) == Fraction(7)
    assert to_weight("1/3") == Fraction(1, 3)
    assert to_weight(0.1) == Fraction(1, 10)


def test_to_weight_rejects_garbage():
    with pytest.raises(InstanceFormatError):
        to_weight("abc")
    with pytest.raises(InstanceFormatError):
        to_weight(True)


@pytest.mark.parametrize("value", ["inf", "-Infinity", "nan", "sNaN", float("inf"), float("nan"), Decimal("Infinity")])
def test_to_weight_rejects_non_finite_values(value):
    with pytest.raises(InstanceFormatError):
        to_weight(value)


def test_format_weight():
    assert format_weight(Fraction(7)) == "7"
    assert format_weight(Fraction(1, 2)) == "0.5"
    assert format_weight(Fraction(-5, 4)) == "-1.25"
    assert format_weight(Fraction(1, 40)) == "0.025"
    assert format_weight(Fraction(1, 3)) == "1/3"


def test_color_other():
    assert Color.RED.other is Color.BLUE
    assert Color.BLUE.other is Color.RED
    assert Color.BLANK.other is Color.BLANK


# ==================== INSTANCE ====================

def test_instance_rejects_asymmetric_matrix():
    with pytest.raises(InstanceFormatError):
        Instance.from_rows([[0, 1, 2], [1, 0, 3], [2, 4, 0]])


def test_instance_rejects_nonzero_diagonal():
    with pytest.raises(InstanceFormatError):
        Instance.from_rows([[1, 1], [1, 0]])


def test_instance_rejects_negative_weight():
    with pytest.raises(InstanceFormatError):
        Instance.from_rows([[0, -1], [-1, 0]])


def test_instance_round_trips_through_dict(figure_instance):
    assert Instance.from_dict(figure_instance.to_dict()) == figure_instance


# ==================== MULTIGRAPH ====================

def test_multigraph_limits_pair_multiplicity():
    graph = Multigraph(range(2))
    graph.add_edge(0, 1, 1)
    graph.add_edge(0, 1, 2)
    with pytest.raises(StructureViolation):
        graph.add_edge(1, 0, 3)


def test_multigraph_rejects_loops_and_negative_weights():
    graph = Multigraph(range(3))
    with pytest.raises(StructureViolation):
        graph.add_edge(1, 1, 1)
    with pytest.raises(StructureViolation):
        graph.add_edge(0, 1, -1)
    auxiliary = Multigraph(range(2), auxiliary=True)
    assert auxiliary.add_edge(0, 1, -1).weight == -1


def test_copy_never_reuses_edge_ids():
    graph = Multigraph.from_edges(range(3), [(0, 1, 1), (1, 2, 1)])
    clone = graph.copy()
    clone.remove_edge(1)
    assert clone.add_edge(1, 2, 5).id == 2
    assert graph.has_edge(1)


def test_parallel_edge_and_components(doubled_pentagon):
    first = doubled_pentagon.edges_between(0, 1)
    assert len(first) == 2
    assert doubled_pentagon.parallel_edge(first[0].id).id == first[1].id
    assert doubled_pentagon.components() == [frozenset(range(5))]
    assert doubled_pentagon.total_weight() == 30


def test_validate_multigraph_examples(doubled_pentagon):
    assert validate_multigraph(doubled_pentagon, degree=4, min_component=5).passed

    triangle = Multigraph.from_edges(range(3), [(0, 1, 1), (1, 2, 1), (0, 2, 1)] * 2)
    report = validate_multigraph(triangle, degree=4, min_component=5)
    assert not report.passed
    assert report.checks['component_sizes'] == [3]


def test_edge_multiset_counts():
    s = EdgeMultiset([(1, 0), (0, 1), (2, 3)])
    assert s.multiplicity(0, 1) == 2
    assert len(s) == 3
    with pytest.raises(StructureViolation):
        s.add(0, 1)


# ==================== CYCLE COVERS ====================

def test_canonical_cycle():
    assert canonical_cycle((3, 1, 2)) == (1, 2, 3)
    assert canonical_cycle((2, 0, 1, 3)) == (0, 1, 3, 2)


def test_cycle_cover_from_pairs(figure_instance):
    cover = CycleCover.from_cycles(figure_instance, [(A, B, C), (D, E, F), (G, H, I)])
    again = CycleCover.from_pairs(figure_instance, cover.pairs())
    assert again == cover
    assert cover.weight == 45
    assert not cover.is_hamiltonian()


def test_cycle_cover_rejects_missing_vertex(figure_instance):
    with pytest.raises(DegreeViolation):
        CycleCover.from_cycles(figure_instance, [(A, B, C), (D, E, F)])


# ==================== ALTERNATING ARITHMETIC ====================

def test_alternating_weight_examples(figure_instance):
    six = Instance.from_pairs(6, {(0, 1): 1, (1, 2): 1, (0, 2): 1, (0, 3): 5})
    cover = CycleCover.from_cycles(six, [(0, 1, 2), (3, 4, 5)])
    assert alternating_weight([], cover, six) == 0
    assert alternating_weight([(0, 1), (0, 3)], cover, six) == 4

    C_fig = CycleCover.from_cycles(figure_instance, [(A, B, C), (D, E, F), (G, H, I)])
    left = [(A, D), (D, F), (F, B), (B, A)]
    right = [(D, G), (G, I), (I, E), (E, D)]
    assert alternating_weight(left, C_fig, figure_instance) == -4
    assert alternating_weight(right, C_fig, figure_instance) == -2
    assert alternating_weight(left + right, C_fig, figure_instance) == -6


def test_apply_alternating_swaps_edges(figure_instance):
    C_fig = CycleCover.from_cycles(figure_instance, [(A, B, C), (D, E, F), (G, H, I)])
    result = apply_alternating(C_fig, [(A, D), (D, F), (F, B), (B, A)], figure_instance)
    assert result.multiplicity(A, D) == 1
    assert result.multiplicity(B, F) == 1
    assert result.multiplicity(A, B) == 0
    assert result.multiplicity(D, F) == 0
    assert set(result.degree_sequence().values()) == {2}

    unchanged = apply_alternating(C_fig, [], figure_instance)
    assert sorted(e.pair for e in unchanged.edges()) == C_fig.pairs()


def test_apply_alternating_rejects_unbalanced_set(figure_instance):
    C_fig = CycleCover.from_cycles(figure_instance, [(A, B, C), (D, E, F), (G, H, I)])
    with pytest.raises(DegreeViolation):
        apply_alternating(C_fig, [(A, D)], figure_instance)


def test_cover_difference_identity_on_random_instances():
    rng = random.Random(7)
    for _ in range(10):
        n = 7
        inst = Instance.from_pairs(n, {(u, v): rng.randint(0, 20) for u in range(n) for v in range(u + 1, n)})
        covers = list(enumerate_cycle_covers(inst))
        C1, C2 = rng.choice(covers), rng.choice(covers)
        walks = alternating_decomposition(C1, C2, inst)
        assert sum((w.weight for w in walks), Fraction(0)) == C2.weight - C1.weight
        xor = sorted(C1.pair_set ^ C2.pair_set)
        assert C1.weight + alternating_weight(xor, C1, inst) == C2.weight


def test_enumerate_cycle_covers_counts_small_cases():
    four = Instance.from_pairs(4, {})
    five = Instance.from_pairs(5, {})
    # K4 has three Hamiltonian cycles; K5 has twelve and no 3+2 split
    assert len(list(enumerate_cycle_covers(four))) == 3
    assert len(list(enumerate_cycle_covers(five))) == 12
    six = Instance.from_pairs(6, {})
    # 60 Hamiltonian cycles plus 10 ways to split into two triangles
    assert len(list(enumerate_cycle_covers(six))) == 70


def test_is_good_cycle_cover():
    inst = _two_triangles()
    bad = [(0, 1, 2), (3, 4, 5)]
    cover = CycleCover.from_cycles(inst, bad)
    assert not is_good_cycle_cover(cover, bad)

    mixed = CycleCover.from_cycles(inst, [(0, 1, 3), (2, 4, 5)])
    assert is_good_cycle_cover(mixed, bad)

    tour = CycleCover.from_cycles(inst, [(0, 2, 1, 4, 5, 3)])
    assert is_good_cycle_cover(tour, bad)
    assert tour.weight == 20


def test_pair_key_sorts():
    assert pair_key(5, 2) == (2, 5)
