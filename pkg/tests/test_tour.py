"""
Tests for the exact oracles, small components and tour extraction.
FILE: tests/test_tour.py
"""

import pytest

from core.errors import InstanceTooSmall, NotPathCollection, TooLarge
from core.graph_data import Color, Instance, Multigraph
from core.tour import (
    Tour, canonical_order, exact_small_component, extract_tour, oracle_opt, permutation_opt,
)
from utils.file_utils import generate_instance
from utils.validation import is_path_collection, validate_tour


def _doubled_cycle(k: int) -> Multigraph:
    edges = [(i, (i + 1) % k, 1) for i in range(k)] * 2
    return Multigraph.from_edges(range(k), edges)


# ==================== TOURS ====================

def test_canonical_order():
    assert canonical_order((2, 0, 1, 3)) == (0, 1, 3, 2)
    assert canonical_order((3, 1, 0, 2)) == (0, 1, 3, 2)
    assert canonical_order((1, 0)) == (0, 1)


def test_tour_from_order(pentagon_instance):
    tour = Tour.from_order(pentagon_instance, [4, 3, 2, 1, 0])
    assert tour.order == (0, 1, 2, 3, 4)
    assert tour.weight == 15
    assert len(tour.pairs()) == 5
    assert tour.to_dict() == {'order': [0, 1, 2, 3, 4], 'weight': "15"}


def test_two_vertex_tour_uses_the_edge_twice():
    inst = Instance.from_pairs(2, {(0, 1): 4})
    assert oracle_opt(inst).weight == 8


# ==================== ORACLES ====================

def test_oracle_on_a_triangle():
    inst = Instance.from_pairs(3, {(0, 1): 1, (1, 2): 2, (0, 2): 3})
    assert oracle_opt(inst).weight == 6


def test_oracle_all_equal_weights():
    inst = Instance.from_pairs(7, {(u, v): 4 for u in range(7) for v in range(u + 1, 7)})
    assert oracle_opt(inst).weight == 28


def test_oracle_finds_the_planted_cycle(pentagon_instance):
    tour = oracle_opt(pentagon_instance)
    assert tour.weight == 15
    assert validate_tour(pentagon_instance, tour.order, tour.weight).passed


def test_oracle_matches_permutations():
    for seed in range(40):
        inst = generate_instance(4 + seed % 5, 50, seed)
        assert oracle_opt(inst).weight == permutation_opt(inst).weight


def test_oracles_are_capped():
    inst = generate_instance(13, 10, seed=0)
    with pytest.raises(TooLarge):
        oracle_opt(inst)
    with pytest.raises(TooLarge):
        permutation_opt(inst)


# ==================== SMALL COMPONENTS ====================

def test_exact_small_component_on_a_doubled_triangle():
    graph = _doubled_cycle(3)
    solution = exact_small_component(graph)
    best = max(solution.class_weight(graph, c) for c in (Color.RED, Color.BLUE))
    assert best == 2
    for color in (Color.RED, Color.BLUE):
        assert is_path_collection(graph, [e for e, c in solution.colors.items() if c is color])


def test_exact_small_component_on_a_doubled_square():
    graph = _doubled_cycle(4)
    solution = exact_small_component(graph)
    assert max(solution.class_weight(graph, c) for c in (Color.RED, Color.BLUE)) == 3


def test_exact_small_component_edge_cases():
    assert exact_small_component(Multigraph()).colors == {}
    with pytest.raises(TooLarge):
        exact_small_component(_doubled_cycle(7))


# ==================== EXTRACTION ====================

def test_extract_tour_from_doubled_pentagon(pentagon_instance, doubled_pentagon):
    colors = {e: Color.RED for e in (1, 2, 3, 4)}
    colors.update({e: Color.BLUE for e in (6, 7, 8, 9)})
    result = extract_tour(pentagon_instance, doubled_pentagon, {0, 5}, colors)
    assert result.chosen == [1, 2, 3, 4]
    assert result.chosen_weight == 14
    assert result.class_weights == {'red': 14, 'blue': 14}
    assert result.patch_pairs == [(0, 1)]
    assert result.tour.weight == 15


def test_extract_tour_patches_isolated_vertices():
    inst = generate_instance(6, 20, seed=4)
    result = extract_tour(inst, Multigraph(range(6)), set(), {})
    assert result.chosen == []
    assert validate_tour(inst, result.tour.order, result.tour.weight).passed
    assert len(result.patch_pairs) == 6


def test_extract_tour_rejects_bad_classes(pentagon_instance, doubled_pentagon):
    colors = {e: Color.RED for e in doubled_pentagon.edge_ids}
    with pytest.raises(NotPathCollection):
        extract_tour(pentagon_instance, doubled_pentagon, set(), colors)


def test_extract_tour_needs_three_vertices():
    inst = Instance.from_pairs(2, {(0, 1): 1})
    with pytest.raises(InstanceTooSmall):
        extract_tour(inst, Multigraph(range(2)), set(), {})
