"""
Tests for the perfect matching, b-matching and cycle cover engines.
FILE: tests/test_matching_engine.py
"""

import random
from fractions import Fraction

import pytest

from core.errors import Infeasible, InstanceTooSmall, StructureViolation, TooLarge
from core.graph_data import Instance
from core.matching_engine import (
    BMatchingProblem, MatchingProblem, brute_force_b_matching, brute_force_cycle_cover,
    brute_force_perfect_matching, max_weight_cycle_cover, max_weight_perfect_matching,
    solve_b_matching,
)
from utils.file_utils import generate_instance

from .conftest import A, B, C, D, E, F, G, H, I


def _weight(edges):
    return sum((w for _, _, w in edges), Fraction(0))


# ==================== PERFECT MATCHING ====================

def test_single_edge_matching():
    result = max_weight_perfect_matching(MatchingProblem(2, [(0, 1, Fraction(7))]))
    assert result == [(0, 1, Fraction(7))]


def test_k4_unique_optimum():
    edges = [(u, v, Fraction(5 if {u, v} in ({0, 1}, {2, 3}) else 1)) for u in range(4) for v in range(u + 1, 4)]
    result = max_weight_perfect_matching(MatchingProblem(4, edges))
    assert sorted((u, v) for u, v, _ in result) == [(0, 1), (2, 3)]
    assert _weight(result) == 10


def test_perfect_matching_prefers_cardinality_over_weight():
    # a heavy middle edge must give way to a perfect matching
    edges = [(0, 1, Fraction(1)), (1, 2, Fraction(100)), (2, 3, Fraction(1))]
    result = max_weight_perfect_matching(MatchingProblem(4, edges))
    assert sorted((u, v) for u, v, _ in result) == [(0, 1), (2, 3)]


def test_perfect_matching_infeasible():
    with pytest.raises(Infeasible):
        max_weight_perfect_matching(MatchingProblem(3, [(0, 1, Fraction(1)), (1, 2, Fraction(1))]))
    with pytest.raises(Infeasible):
        max_weight_perfect_matching(MatchingProblem(4, [(0, 1, Fraction(1)), (0, 2, Fraction(1))]))


def test_matching_problem_rejects_parallel_edges():
    with pytest.raises(StructureViolation):
        MatchingProblem(2, [(0, 1, Fraction(1)), (1, 0, Fraction(2))])


def test_perfect_matching_matches_enumeration():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.choice((2, 4, 6, 8, 10))
        edges = [
            (u, v, Fraction(rng.randint(-20, 20), rng.choice((1, 2, 4))))
            for u in range(n) for v in range(u + 1, n) if rng.random() < 0.8
        ]
        problem = MatchingProblem(n, edges)
        try:
            expected, _ = brute_force_perfect_matching(problem)
        except Infeasible:
            with pytest.raises(Infeasible):
                max_weight_perfect_matching(problem)
            continue
        assert _weight(max_weight_perfect_matching(problem)) == expected


def test_brute_force_matching_cap():
    with pytest.raises(TooLarge):
        brute_force_perfect_matching(MatchingProblem(16, []))


# ==================== B-MATCHING ====================

def test_b_matching_degenerates_to_matching():
    result = solve_b_matching(BMatchingProblem({0: 1, 1: 1}, [(0, 1, Fraction(3))]))
    assert result.pairs() == [(0, 1)]
    assert result.weight == 3


def test_b_matching_on_five_cycle():
    edges = [(i, (i + 1) % 5, Fraction(1)) for i in range(5)]
    result = solve_b_matching(BMatchingProblem({v: 2 for v in range(5)}, edges))
    assert len(result.edges) == 5
    assert all(result.degree(v) == 2 for v in range(5))


def test_b_matching_rejects_odd_requirement_sum():
    with pytest.raises(Infeasible):
        BMatchingProblem({0: 1, 1: 1, 2: 1}, [(0, 1, Fraction(1)), (1, 2, Fraction(1))])


def test_b_matching_matches_enumeration():
    rng = random.Random(5)
    for _ in range(200):
        n = 6
        edges = [(u, v, Fraction(rng.randint(-5, 30))) for u in range(n) for v in range(u + 1, n)]
        b = {v: rng.choice((1, 2)) for v in range(n)}
        if sum(b.values()) % 2:
            b[0] = 3 - b[0]
        problem = BMatchingProblem(b, edges)
        expected, _ = brute_force_b_matching(problem)
        result = solve_b_matching(problem)
        assert result.weight == expected
        assert all(result.degree(v) == b[v] for v in range(n))


# ==================== CYCLE COVER ====================

def test_cycle_cover_all_equal_weights():
    inst = Instance.from_pairs(5, {(u, v): 1 for u in range(5) for v in range(u + 1, 5)})
    assert max_weight_cycle_cover(inst).weight == 5


def test_cycle_cover_of_figure_instance(figure_instance):
    cover = max_weight_cycle_cover(figure_instance)
    assert cover.cycles == ((A, B, C), (D, E, F), (G, H, I))
    assert cover.weight == 45


def test_cycle_cover_needs_three_vertices():
    with pytest.raises(InstanceTooSmall):
        max_weight_cycle_cover(Instance.from_pairs(2, {(0, 1): 1}))


def test_cycle_cover_matches_enumeration():
    for seed in range(100):
        n = 3 + seed % 6
        inst = generate_instance(n, 100, seed)
        assert max_weight_cycle_cover(inst).weight == brute_force_cycle_cover(inst).weight
