"""
Matching engine: perfect matchings, perfect b-matchings and cycle covers.
FILE: src/core/matching_engine.py

Maximum-weight perfect matching runs on networkx's blossom implementation over
integer-scaled weights. Perfect b-matchings reduce to perfect matchings through
vertex clones and edge-node pairs. Exhaustive oracles for all three problems are
kept next to the solvers so tests and the CLI share them.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
import logging
import math

import networkx as nx

from .errors import Infeasible, InstanceTooSmall, StructureViolation, TooLarge
from .graph_data import CycleCover, Instance, Pair, enumerate_cycle_covers, is_good_cycle_cover, pair_key

logger = logging.getLogger(__name__)

WeightedEdge = Tuple[int, int, Fraction]

BRUTE_FORCE_MATCHING_CAP = 14
BRUTE_FORCE_COVER_CAP = 9


# ==================== PROBLEM TYPES ====================

@dataclass
class MatchingProblem:
    """Simple graph on vertices 0..num_vertices-1; weights may be negative"""
    num_vertices: int
    edges: List[WeightedEdge] = field(default_factory=list)
    perfect: bool = True

    def __post_init__(self):
        seen = set()
        for u, v, _ in self.edges:
            if u == v:
                raise StructureViolation(f"Loop at {u} in matching problem")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise StructureViolation(f"Edge {u}-{v} leaves the vertex range")
            key = pair_key(u, v)
            if key in seen:
                raise StructureViolation(f"Parallel edge {key} in matching problem")
            seen.add(key)


@dataclass
class BMatchingProblem:
    """Degree requirements b(v) >= 1 over a simple edge list; each edge usable once"""
    b: Dict[int, int]
    edges: List[WeightedEdge] = field(default_factory=list)

    def __post_init__(self):
        for v, req in self.b.items():
            if req < 1:
                raise StructureViolation(f"Requirement b({v}) = {req} must be at least 1")
        degree: Dict[int, int] = {v: 0 for v in self.b}
        seen = set()
        for u, v, _ in self.edges:
            if u == v:
                raise StructureViolation(f"Loop at {u} in b-matching problem")
            if u not in self.b or v not in self.b:
                raise StructureViolation(f"Edge {u}-{v} touches a vertex without requirement")
            key = pair_key(u, v)
            if key in seen:
                raise StructureViolation(f"Parallel edge {key} in b-matching problem")
            seen.add(key)
            degree[u] += 1
            degree[v] += 1
        if sum(self.b.values()) % 2:
            raise Infeasible("Sum of degree requirements is odd")
        short = [v for v, req in self.b.items() if degree[v] < req]
        if short:
            raise Infeasible(f"Vertices {short[:10]} have fewer edges than required")

    @property
    def vertices(self) -> List[int]:
        return sorted(self.b)


@dataclass(frozen=True)
class BMatching:
    """Solution of a b-matching problem"""
    edges: Tuple[WeightedEdge, ...]
    weight: Fraction

    def pairs(self) -> List[Pair]:
        return sorted(pair_key(u, v) for u, v, _ in self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for a, b, _ in self.edges if v in (a, b))


# ==================== PERFECT MATCHING ====================

def _scale_to_integers(weights: Iterable[Fraction]) -> int:
    scale = 1
    for w in weights:
        scale = scale * w.denominator // math.gcd(scale, w.denominator)
    return scale


def max_weight_perfect_matching(problem: MatchingProblem) -> List[WeightedEdge]:
    """Maximum-weight perfect matching; deterministic for a fixed edge order"""
    n = problem.num_vertices
    if n == 0:
        return []
    if n % 2:
        raise Infeasible(f"Odd vertex count {n} has no perfect matching")

    scale = _scale_to_integers(w for _, _, w in problem.edges)
    scaled = [(u, v, int(w * scale)) for u, v, w in problem.edges]
    # every perfect matching has n/2 edges, so a uniform shift keeps the optimum
    shift = max((abs(w) for _, _, w in scaled), default=0) + 1

    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for u, v, w in scaled:
        graph.add_edge(u, v, weight=w + shift)

    mate = nx.max_weight_matching(graph, maxcardinality=True, weight='weight')
    if 2 * len(mate) != n:
        raise Infeasible(f"No perfect matching: best has {len(mate)} of {n // 2} edges")

    by_pair = {pair_key(u, v): (u, v, w) for u, v, w in problem.edges}
    result = sorted(by_pair[pair_key(u, v)] for u, v in mate)
    logger.debug("Perfect matching on %d vertices, %d edges -> %d pairs", n, len(problem.edges), len(result))
    return result


# ==================== B-MATCHING REDUCTION ====================

def solve_b_matching(problem: BMatchingProblem) -> BMatching:
    """Maximum-weight perfect b-matching through the clone / edge-node reduction"""
    clones: Dict[int, List[int]] = {}
    next_node = 0
    for v in problem.vertices:
        clones[v] = list(range(next_node, next_node + problem.b[v]))
        next_node += problem.b[v]

    reduced: List[WeightedEdge] = []
    direct: Dict[Pair, int] = {}
    edge_nodes: Dict[int, Tuple[int, int]] = {}
    for index, (u, v, w) in enumerate(problem.edges):
        if problem.b[u] == 1 and problem.b[v] == 1:
            direct[pair_key(clones[u][0], clones[v][0])] = index
            reduced.append((clones[u][0], clones[v][0], w))
            continue
        eu, ev = next_node, next_node + 1
        next_node += 2
        edge_nodes[index] = (eu, ev)
        half = w / 2
        reduced.extend((c, eu, half) for c in clones[u])
        reduced.append((eu, ev, Fraction(0)))
        reduced.extend((ev, c, half) for c in clones[v])

    matching = max_weight_perfect_matching(MatchingProblem(next_node, reduced))
    matched = {}
    for a, b, _ in matching:
        matched[a] = b
        matched[b] = a

    chosen = []
    for index, (u, v, w) in enumerate(problem.edges):
        if index in edge_nodes:
            eu, ev = edge_nodes[index]
            if matched[eu] != ev:
                chosen.append((u, v, w))
        elif direct.get(pair_key(clones[u][0], clones[v][0])) == index and \
                matched.get(clones[u][0]) == clones[v][0]:
            chosen.append((u, v, w))

    degree = {v: 0 for v in problem.b}
    for u, v, _ in chosen:
        degree[u] += 1
        degree[v] += 1
    wrong = {v: d for v, d in degree.items() if d != problem.b[v]}
    if wrong:
        raise Infeasible("Reduced matching does not decode to a perfect b-matching", details={'degrees': wrong})

    weight = sum((w for _, _, w in chosen), Fraction(0))
    reduced_weight = sum((w for _, _, w in matching), Fraction(0))
    if reduced_weight != weight:
        raise Infeasible(f"Reduction weight mismatch: {reduced_weight} != {weight}")
    logger.debug("b-matching: %d vertices, %d edges chosen, weight %s", len(problem.b), len(chosen), weight)
    return BMatching(edges=tuple(chosen), weight=weight)


def max_weight_cycle_cover(instance: Instance) -> CycleCover:
    """Maximum-weight cycle cover as a perfect 2-matching of the complete graph"""
    if instance.n < 3:
        raise InstanceTooSmall(f"Cycle cover needs n >= 3, got {instance.n}")
    problem = BMatchingProblem(
        b={v: 2 for v in instance.vertices},
        edges=[(u, v, instance.w(u, v)) for u, v in instance.pairs()],
    )
    solution = solve_b_matching(problem)
    cover = CycleCover.from_pairs(instance, solution.pairs())
    logger.info("🔄 Cycle cover: %d cycles, weight %s", len(cover.cycles), cover.weight)
    return cover


# ==================== EXHAUSTIVE ORACLES ====================

def brute_force_perfect_matching(problem: MatchingProblem) -> Tuple[Fraction, List[WeightedEdge]]:
    """Best perfect matching by enumeration"""
    n = problem.num_vertices
    if n > BRUTE_FORCE_MATCHING_CAP:
        raise TooLarge(f"Enumeration capped at {BRUTE_FORCE_MATCHING_CAP} vertices, got {n}")
    adjacency: Dict[int, List[WeightedEdge]] = {v: [] for v in range(n)}
    for edge in problem.edges:
        adjacency[edge[0]].append(edge)
        adjacency[edge[1]].append(edge)

    best: List[Optional[Tuple[Fraction, List[WeightedEdge]]]] = [None]

    def search(free: frozenset, chosen: List[WeightedEdge], weight: Fraction) -> None:
        if not free:
            if best[0] is None or weight > best[0][0]:
                best[0] = (weight, list(chosen))
            return
        v = min(free)
        for edge in adjacency[v]:
            other = edge[1] if edge[0] == v else edge[0]
            if other in free and other != v:
                chosen.append(edge)
                search(free - {v, other}, chosen, weight + edge[2])
                chosen.pop()

    search(frozenset(range(n)), [], Fraction(0))
    if best[0] is None:
        raise Infeasible("No perfect matching exists")
    return best[0][0], sorted(best[0][1])


def brute_force_b_matching(problem: BMatchingProblem) -> Tuple[Fraction, List[WeightedEdge]]:
    """Best perfect b-matching by enumerating edge subsets with degree pruning"""
    edges = list(problem.edges)
    remaining_incident = {v: 0 for v in problem.b}
    for u, v, _ in edges:
        remaining_incident[u] += 1
        remaining_incident[v] += 1
    need = dict(problem.b)
    best: List[Optional[Tuple[Fraction, List[WeightedEdge]]]] = [None]

    def search(index: int, chosen: List[WeightedEdge], weight: Fraction) -> None:
        if any(need[v] > remaining_incident[v] for v in need):
            return
        if index == len(edges):
            if all(req == 0 for req in need.values()):
                if best[0] is None or weight > best[0][0]:
                    best[0] = (weight, list(chosen))
            return
        u, v, w = edges[index]
        remaining_incident[u] -= 1
        remaining_incident[v] -= 1
        if need[u] > 0 and need[v] > 0:
            need[u] -= 1
            need[v] -= 1
            chosen.append(edges[index])
            search(index + 1, chosen, weight + w)
            chosen.pop()
            need[u] += 1
            need[v] += 1
        search(index + 1, chosen, weight)
        remaining_incident[u] += 1
        remaining_incident[v] += 1

    search(0, [], Fraction(0))
    if best[0] is None:
        raise Infeasible("No perfect b-matching exists")
    return best[0][0], sorted(best[0][1])


def brute_force_cycle_cover(instance: Instance) -> CycleCover:
    """Heaviest cycle cover by enumeration"""
    if instance.n > BRUTE_FORCE_COVER_CAP:
        raise TooLarge(f"Cycle cover enumeration capped at {BRUTE_FORCE_COVER_CAP}, got {instance.n}")
    if instance.n < 3:
        raise InstanceTooSmall(f"Cycle cover needs n >= 3, got {instance.n}")
    return max(enumerate_cycle_covers(instance), key=lambda c: c.weight)


def brute_force_good_cycle_cover(
    instance: Instance, bad_cycles: Sequence[Sequence[int]]
) -> Optional[CycleCover]:
    """Heaviest cycle cover that is good with respect to the given bad cycles"""
    if instance.n > BRUTE_FORCE_COVER_CAP:
        raise TooLarge(f"Cycle cover enumeration capped at {BRUTE_FORCE_COVER_CAP}, got {instance.n}")
    best = None
    for cover in enumerate_cycle_covers(instance):
        if is_good_cycle_cover(cover, bad_cycles) and (best is None or cover.weight > best.weight):
            best = cover
    return best


__all__ = [
    'MatchingProblem',
    'BMatchingProblem',
    'BMatching',
    'max_weight_perfect_matching',
    'solve_b_matching',
    'max_weight_cycle_cover',
    'brute_force_perfect_matching',
    'brute_force_b_matching',
    'brute_force_cycle_cover',
    'brute_force_good_cycle_cover',
]
