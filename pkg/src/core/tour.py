"""
Tours: extraction from a 2-path-colored multigraph, exact small components
and exact oracles.
FILE: src/core/tour.py
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Any, Dict, List, Mapping, Optional, Sequence, Set, Tuple
import logging

from networkx.utils import UnionFind

from utils.validation import is_path_collection, require_path_collection

from .errors import InstanceTooSmall, TooLarge
from .graph_data import COLORS, Color, Instance, Multigraph, Pair, format_weight, pair_key

logger = logging.getLogger(__name__)

ORACLE_CAP = 12
PERMUTATION_CAP = 9
SMALL_COMPONENT_EDGE_CAP = 12


def canonical_order(order: Sequence[int]) -> Tuple[int, ...]:
    """Start at the smallest vertex and walk toward its smaller neighbour"""
    order = list(order)
    if len(order) < 3:
        return tuple(sorted(order))
    start = order.index(min(order))
    rotated = order[start:] + order[:start]
    if rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


@dataclass(frozen=True)
class Tour:
    order: Tuple[int, ...]
    weight: Fraction

    @classmethod
    def from_order(cls, instance: Instance, order: Sequence[int]) -> 'Tour':
        order = canonical_order(order)
        if len(order) >= 3:
            weight = instance.cycle_weight(order)
        elif len(order) == 2:
            weight = 2 * instance.w(order[0], order[1])
        else:
            weight = Fraction(0)
        return cls(order=order, weight=weight)

    def pairs(self) -> List[Pair]:
        n = len(self.order)
        if n < 3:
            return [pair_key(*self.order)] if n == 2 else []
        return [pair_key(self.order[i], self.order[(i + 1) % n]) for i in range(n)]

    def to_dict(self) -> Dict[str, Any]:
        return {'order': list(self.order), 'weight': format_weight(self.weight)}


# ==================== ORACLES ====================

def oracle_opt(instance: Instance, cap: int = ORACLE_CAP) -> Tour:
    """Maximum tour by dynamic programming over vertex subsets"""
    n = instance.n
    if n > cap:
        raise TooLarge(f"Exact oracle capped at n = {cap}, got {n}")
    if n <= 3:
        return Tour.from_order(instance, range(n))

    rest = n - 1
    full = (1 << rest) - 1
    best: Dict[Tuple[int, int], Fraction] = {}
    parent: Dict[Tuple[int, int], int] = {}
    for j in range(rest):
        best[(1 << j, j)] = instance.w(0, j + 1)

    for mask in range(1, full + 1):
        for j in range(rest):
            key = (mask, j)
            if key not in best:
                continue
            value = best[key]
            for k in range(rest):
                if mask & (1 << k):
                    continue
                target = (mask | (1 << k), k)
                candidate = value + instance.w(j + 1, k + 1)
                if target not in best or candidate > best[target]:
                    best[target] = candidate
                    parent[target] = j

    end, total = None, None
    for j in range(rest):
        candidate = best[(full, j)] + instance.w(j + 1, 0)
        if total is None or candidate > total:
            end, total = j, candidate

    order, mask, j = [], full, end
    while True:
        order.append(j + 1)
        previous = parent.get((mask, j))
        mask ^= 1 << j
        if previous is None:
            break
        j = previous
    tour = Tour.from_order(instance, [0] + order[::-1])
    logger.debug("Exact oracle: n = %d, opt = %s", n, format_weight(tour.weight))
    return tour


def permutation_opt(instance: Instance, cap: int = PERMUTATION_CAP) -> Tour:
    """Maximum tour by enumerating permutations; cross-check for oracle_opt"""
    n = instance.n
    if n > cap:
        raise TooLarge(f"Permutation oracle capped at n = {cap}, got {n}")
    if n <= 3:
        return Tour.from_order(instance, range(n))
    best: Optional[Tour] = None
    for perm in permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue
        weight = instance.cycle_weight((0,) + perm)
        if best is None or weight > best.weight:
            best = Tour(order=(0,) + perm, weight=weight)
    return Tour.from_order(instance, best.order)


# ==================== SMALL COMPONENTS ====================

@dataclass
class PathColoring:
    """Removed edges plus a red/blue coloring whose classes are path collections"""
    removed: Set[int] = field(default_factory=set)
    colors: Dict[int, Color] = field(default_factory=dict)

    def class_weight(self, graph: Multigraph, color: Color) -> Fraction:
        return sum((graph.edge(e).weight for e, c in self.colors.items() if c is color), Fraction(0))


def exact_small_component(component: Multigraph) -> PathColoring:
    """Best pair of path collections on a component too small for the main pipeline.

    The heavier class is maximised first, then the total kept weight.
    """
    edges = component.edges()
    if len(edges) > SMALL_COMPONENT_EDGE_CAP:
        raise TooLarge(f"Exhaustive component search capped at {SMALL_COMPONENT_EDGE_CAP} edges, got {len(edges)}")
    if not edges:
        return PathColoring()

    best: Optional[Tuple[Tuple[Fraction, Fraction], PathColoring]] = None
    for values in product((Color.RED, Color.BLUE, None), repeat=len(edges)):
        red = [e.id for e, c in zip(edges, values) if c is Color.RED]
        blue = [e.id for e, c in zip(edges, values) if c is Color.BLUE]
        red_w = sum((component.edge(e).weight for e in red), Fraction(0))
        blue_w = sum((component.edge(e).weight for e in blue), Fraction(0))
        score = (max(red_w, blue_w), red_w + blue_w)
        if best is not None and score <= best[0]:
            continue
        if is_path_collection(component, red) and is_path_collection(component, blue):
            solution = PathColoring(
                removed={e.id for e, c in zip(edges, values) if c is None},
                colors={e.id: c for e, c in zip(edges, values) if c is not None},
            )
            best = (score, solution)
    return best[1]


# ==================== EXTRACTION ====================

@dataclass
class TourExtraction:
    tour: Tour
    chosen: List[int]                  # edge ids of the heavier class per component
    chosen_weight: Fraction
    class_weights: Dict[str, Fraction]
    patch_pairs: List[Pair]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'chosen_weight': format_weight(self.chosen_weight),
            'class_weights': {k: format_weight(v) for k, v in sorted(self.class_weights.items())},
            'patch_pairs': [list(p) for p in self.patch_pairs],
        }


def extract_tour(
    instance: Instance, H: Multigraph, removed: Set[int], colors: Mapping[int, Color]
) -> TourExtraction:
    """Heavier color class per component, patched into a Hamiltonian cycle"""
    if instance.n < 3:
        raise InstanceTooSmall(f"Tour extraction needs n >= 3, got {instance.n}")

    kept = {e: c for e, c in colors.items() if e not in removed and H.has_edge(e) and c in COLORS}
    chosen: List[int] = []
    class_weights = {Color.RED.value: Fraction(0), Color.BLUE.value: Fraction(0)}
    for component in H.components():
        members = {e: c for e, c in kept.items() if H.edge(e).u in component}
        weight = {c: sum((H.edge(e).weight for e, x in members.items() if x is c), Fraction(0)) for c in COLORS}
        heavy = Color.BLUE if weight[Color.BLUE] > weight[Color.RED] else Color.RED
        chosen.extend(e for e, c in members.items() if c is heavy)
        class_weights[Color.RED.value] += weight[heavy]
        class_weights[Color.BLUE.value] += weight[heavy.other]
    chosen.sort()
    require_path_collection(H, chosen, label="Chosen color class")
    chosen_weight = sum((H.edge(e).weight for e in chosen), Fraction(0))

    degree = {v: 0 for v in instance.vertices}
    adjacency: Dict[int, List[int]] = {v: [] for v in instance.vertices}
    forest = UnionFind(instance.vertices)
    joined = 0
    for e in chosen:
        edge = H.edge(e)
        degree[edge.u] += 1
        degree[edge.v] += 1
        adjacency[edge.u].append(edge.v)
        adjacency[edge.v].append(edge.u)
        forest.union(edge.u, edge.v)
        joined += 1

    patches: List[Pair] = []
    for u, v in sorted(instance.pairs(), key=lambda p: (-instance.w(*p), p)):
        if joined == instance.n - 1:
            break
        if degree[u] < 2 and degree[v] < 2 and forest[u] != forest[v]:
            forest.union(u, v)
            degree[u] += 1
            degree[v] += 1
            adjacency[u].append(v)
            adjacency[v].append(u)
            patches.append((u, v))
            joined += 1

    ends = [v for v in instance.vertices if degree[v] < 2]
    patches.append(pair_key(ends[0], ends[-1]))
    adjacency[ends[0]].append(ends[-1])
    adjacency[ends[-1]].append(ends[0])

    order, seen, current = [0], {0}, 0
    while len(order) < instance.n:
        current = next(x for x in adjacency[current] if x not in seen)
        seen.add(current)
        order.append(current)
    tour = Tour.from_order(instance, order)
    logger.info("🧭 Tour weight %s from class weight %s with %d patch edges",
                format_weight(tour.weight), format_weight(chosen_weight), len(patches))
    return TourExtraction(
        tour=tour, chosen=chosen, chosen_weight=chosen_weight,
        class_weights=class_weights, patch_pairs=patches,
    )


__all__ = [
    'ORACLE_CAP',
    'PERMUTATION_CAP',
    'Tour',
    'PathColoring',
    'TourExtraction',
    'canonical_order',
    'oracle_opt',
    'permutation_opt',
    'exact_small_component',
    'extract_tour',
]
