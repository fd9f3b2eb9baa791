"""
Shared fixtures for the solver test suite.
FILE: tests/conftest.py
"""

import sys
from pathlib import Path

import pytest

# Add the src directory to Python path
src_path = Path(__file__).parent.parent / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from core.graph_data import Color, Instance, Multigraph  # noqa: E402
from utils.validation import is_path_collection  # noqa: E402

# vertex names of the three-triangle example
A, B, C, D, E, F, G, H, I = range(9)


def _figure_instance() -> Instance:
    """Triangles ABC, DEF, GHI with sides 5, joined by AD, BF, IE = 3 and DG = 5"""
    weights = {}
    for tri in ((A, B, C), (D, E, F), (G, H, I)):
        for k in range(3):
            weights[(tri[k], tri[(k + 1) % 3])] = 5
    weights.update({(A, D): 3, (B, F): 3, (I, E): 3, (D, G): 5})
    return Instance.from_pairs(9, weights)


@pytest.fixture
def figure_instance() -> Instance:
    return _figure_instance()


@pytest.fixture
def pentagon_instance() -> Instance:
    """5-cycle with weights 1..5, every chord 0"""
    return Instance.from_pairs(5, {(i, (i + 1) % 5): i + 1 for i in range(5)})


@pytest.fixture
def doubled_pentagon() -> Multigraph:
    """Two copies of the 5-cycle with weights 1..5"""
    edges = []
    for _ in range(2):
        edges.extend((i, (i + 1) % 5, i + 1) for i in range(5))
    return Multigraph.from_edges(range(5), edges)


@pytest.fixture
def double_edge_triangle_graph() -> Multigraph:
    """4-regular 7-vertex graph: A=0, B=1, C=2 with A-C doubled.

    Edge ids: 0, 1 = A-C (2, 2); 2 = A-B (3); 3 = C-B (4); 4 = A-3; 5 = C-4;
    6 = B-5; 7 = B-6; 8..13 = K4 on {3, 4, 5, 6}; all outer weights 1.
    """
    edges = [(0, 2, 2), (0, 2, 2), (0, 1, 3), (2, 1, 4), (0, 3, 1), (2, 4, 1), (1, 5, 1), (1, 6, 1)]
    edges += [(3, 4, 1), (3, 5, 1), (3, 6, 1), (4, 5, 1), (4, 6, 1), (5, 6, 1)]
    return Multigraph.from_edges(range(7), edges)


@pytest.fixture
def single_edge_triangle_graph() -> Multigraph:
    """K5 with the triangle A=1, B=2, C=0 at weight 1, CD = 0 (D=3), CE = 2 (E=4).

    Edge ids: 0 = AC, 1 = BC, 2 = AB, 3 = CD, 4 = CE, 5..9 = the rest at weight 1.
    """
    edges = [(1, 0, 1), (2, 0, 1), (1, 2, 1), (0, 3, 0), (0, 4, 2)]
    edges += [(1, 3, 1), (1, 4, 1), (2, 3, 1), (2, 4, 1), (3, 4, 1)]
    return Multigraph.from_edges(range(5), edges)


@pytest.fixture
def square_cap_graph() -> Multigraph:
    """Cap v1=0 = x=1 = y=2 = v2=3 with single 0-3 and ribbons 0-4, 3-5.

    4, 5, 6, 7 close the graph to 4-regular with 6-7 doubled.
    """
    edges = [(0, 1, 1), (0, 1, 1), (1, 2, 1), (1, 2, 1), (2, 3, 1), (2, 3, 1), (0, 3, 1)]
    edges += [(0, 4, 1), (3, 5, 1), (4, 5, 1), (4, 6, 1), (4, 7, 1), (5, 6, 1), (5, 7, 1), (6, 7, 1), (6, 7, 1)]
    return Multigraph.from_edges(range(8), edges)


def greedy_path_coloring(graph: Multigraph, removed=()):
    """Red if red stays a path collection, else blue, else removed"""
    removed = set(removed)
    colors = {}
    for edge_id in graph.edge_ids:
        if edge_id in removed:
            continue
        for color in (Color.RED, Color.BLUE):
            members = [e for e, c in colors.items() if c is color] + [edge_id]
            if is_path_collection(graph, members):
                colors[edge_id] = color
                break
        else:
            removed.add(edge_id)
    return removed, colors


@pytest.fixture
def greedy_coloring():
    return greedy_path_coloring


def random_core(n: int, seed: int):
    """Reduced 4-regular core of H for a generated instance, or None when it is empty"""
    from core.gadgets import solve_gprime
    from core.h_builder import build_H, split_small_components
    from core.matching_engine import max_weight_cycle_cover
    from core.reducer import reduce_to_fixpoint
    from utils.file_utils import generate_instance

    inst = generate_instance(n, 100, seed)
    cover = max_weight_cycle_cover(inst)
    if cover.is_hamiltonian():
        return None
    core, _ = split_small_components(build_H(cover, solve_gprime(inst, cover).sb.pairs(), inst))
    if not core.graph.num_edges:
        return None
    return reduce_to_fixpoint(core.graph).graph
