"""
Tests for building H, the weight audit and small-component routing.
FILE: tests/test_h_builder.py
"""

from collections import Counter

import pytest

from core.errors import NotFourRegular
from core.gadgets import solve_gprime
from core.graph_data import CycleCover, Instance, alternating_weight, pair_key
from core.h_builder import H_BOUND_FACTOR, build_H, check_theorem1, split_small_components
from core.matching_engine import max_weight_cycle_cover
from core.tour import oracle_opt
from utils.file_utils import generate_instance

from .conftest import A, B, C, D, E, F, G, H, I


def _figure_cover(instance):
    return CycleCover.from_cycles(instance, [(A, B, C), (D, E, F), (G, H, I)])


def test_empty_sb_doubles_the_cover(figure_instance):
    cover = _figure_cover(figure_instance)
    Hg = build_H(cover, [], figure_instance)
    assert Hg.weight == 2 * cover.weight
    assert all(Hg.graph.multiplicity(u, v) == 2 for u, v in cover.pairs())
    assert sorted(Hg.component_sizes()) == [3, 3, 3]


def test_worked_example_multiset(figure_instance):
    cover = _figure_cover(figure_instance)
    sb = [(A, D), (D, F), (F, B), (B, A), (D, G), (G, I), (I, E), (E, D)]
    Hg = build_H(cover, sb, figure_instance)

    expected = Counter(pair_key(u, v) for u, v in [
        (A, C), (A, C), (C, B), (C, B), (A, B), (A, D), (B, F), (D, F), (D, E),
        (F, E), (F, E), (E, I), (D, G), (G, I), (I, H), (I, H), (H, G), (H, G),
    ])
    assert Counter(e.pair for e in Hg.graph.edges()) == expected
    assert Hg.weight == 84
    assert Hg.weight == 2 * cover.weight - 6
    assert Hg.component_sizes() == [9]
    assert check_theorem1(Hg, oracle_opt(figure_instance).weight).passed


def test_provenance_labels(figure_instance):
    cover = _figure_cover(figure_instance)
    Hg = build_H(cover, [(A, D), (D, F), (F, B), (B, A)], figure_instance)
    labels = Counter(Hg.provenance.values())
    assert labels['sb'] == 2
    assert labels['cover-1'] + labels['cover-2'] == Hg.graph.num_edges - 2


def test_sb_removing_too_much_is_rejected(figure_instance):
    cover = _figure_cover(figure_instance)
    with pytest.raises(NotFourRegular):
        build_H(cover, [(A, B), (A, B), (A, B)], figure_instance)


def test_random_h_is_four_regular():
    for seed in range(10):
        inst = generate_instance(8, 100, seed)
        cover = max_weight_cycle_cover(inst)
        if cover.is_hamiltonian():
            continue
        solution = solve_gprime(inst, cover)
        Hg = build_H(cover, solution.sb.pairs(), inst)
        degrees = Counter()
        for edge in Hg.graph.edges():
            degrees[edge.u] += 1
            degrees[edge.v] += 1
        assert all(degrees[v] == 4 for v in range(8))


def test_all_equal_weights_meet_the_bound():
    inst = Instance.from_pairs(6, {(u, v): 3 for u in range(6) for v in range(u + 1, 6)})
    cover = max_weight_cycle_cover(inst)
    Hg = build_H(cover, [], inst)
    opt = oracle_opt(inst).weight
    assert cover.weight == opt
    assert Hg.weight >= H_BOUND_FACTOR * opt


def test_bound_holds_on_random_instances():
    for seed in range(20):
        inst = generate_instance(5 + seed % 5, 100, seed)
        cover = max_weight_cycle_cover(inst)
        if cover.is_hamiltonian():
            continue
        solution = solve_gprime(inst, cover)
        Hg = build_H(cover, solution.sb.pairs(), inst)
        assert Hg.weight >= H_BOUND_FACTOR * oracle_opt(inst).weight


def test_doubled_triangle_is_flagged_and_split():
    # two non-bad triangles: one heavy side each
    weights = {(0, 1): 10, (1, 2): 1, (0, 2): 1, (3, 4): 10, (4, 5): 1, (3, 5): 1}
    inst = Instance.from_pairs(6, weights)
    cover = CycleCover.from_cycles(inst, [(0, 1, 2), (3, 4, 5)])
    Hg = build_H(cover, [], inst)

    report = check_theorem1(Hg, oracle_opt(inst).weight)
    assert not report.passed
    assert report.checks['component_sizes'] == [3, 3]

    core, pieces = split_small_components(Hg)
    assert core.graph.num_vertices == 0
    assert [p.num_vertices for p in pieces] == [3, 3]
    assert core.small_components == [frozenset({0, 1, 2}), frozenset({3, 4, 5})]


def test_split_keeps_large_components(figure_instance):
    cover = _figure_cover(figure_instance)
    Hg = build_H(cover, [(A, D), (D, F), (F, B), (B, A), (D, G), (G, I), (I, E), (E, D)], figure_instance)
    core, pieces = split_small_components(Hg)
    assert core is Hg
    assert pieces == []


def test_split_routes_a_doubled_square():
    weights = {(i, (i + 1) % 5): 1 for i in range(5)}
    weights.update({(5, 6): 1, (6, 7): 1, (7, 8): 1, (8, 5): 1})
    inst = Instance.from_pairs(9, weights)
    cover = CycleCover.from_cycles(inst, [range(5), (5, 6, 7, 8)])
    core, pieces = split_small_components(build_H(cover, [], inst))
    assert core.graph.vertices == [0, 1, 2, 3, 4]
    assert [p.vertices for p in pieces] == [[5, 6, 7, 8]]


def _tripled_pair_case():
    """Triangles 0-1-2 and 3-4-5 where S_B adds 0-3 three times"""
    weights = {(u, v): 1 for u in range(6) for v in range(u + 1, 6)}
    weights.update({(0, 1): 10, (0, 2): 10, (1, 2): 10, (3, 4): 10, (3, 5): 10, (4, 5): 10})
    weights.update({(0, 3): 10, (1, 4): 4, (2, 5): 4})
    inst = Instance.from_pairs(6, weights)
    cover = CycleCover.from_cycles(inst, [(0, 1, 2), (3, 4, 5)])
    sb = [(0, 3)] * 3 + [(0, 1), (0, 1), (0, 2), (3, 4), (3, 4), (3, 5), (1, 4), (1, 4), (2, 5)]
    return inst, cover, sb


def test_tripled_pair_is_switched_away():
    inst, cover, sb = _tripled_pair_case()
    Hg = build_H(cover, sb, inst)
    (switch,) = Hg.switches
    assert switch['pair'] == [0, 3]
    assert switch['partner'] == [1, 4]
    assert switch['added'] == [[0, 1], [3, 4]]
    assert Hg.switch_gain == 6
    assert max(Hg.graph.multiplicity(u, v) for u, v in Hg.graph.pairs()) == 2
    assert all(Hg.graph.degree(v) == 4 for v in Hg.graph.vertices)
    assert Hg.weight == 108
    assert Hg.weight == 2 * cover.weight + alternating_weight(sb, cover, inst) + Hg.switch_gain
    assert Hg.to_dict()['switch_gain'] == "6"
