"""
Structural validators for multigraphs, colorings and tours.
FILE: src/utils/validation.py

Validators never raise; they return report objects with a pass flag and the
list of failures, so callers decide whether a failure is fatal.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence
import logging

import networkx as nx
from networkx.utils import UnionFind

from core.errors import NotPathCollection
from core.graph_data import COLORS, Color, Instance, Multigraph

logger = logging.getLogger(__name__)


@dataclass
class ValidationReport:
    """Outcome of a structural check"""
    passed: bool = True
    failures: List[str] = field(default_factory=list)
    checks: Dict[str, Any] = field(default_factory=dict)

    def fail(self, message: str) -> None:
        self.passed = False
        self.failures.append(message)

    def to_dict(self) -> Dict[str, Any]:
        return {'passed': self.passed, 'failures': list(self.failures), 'checks': dict(self.checks)}


# ==================== MULTIGRAPH ====================

def validate_multigraph(H: Multigraph, degree: int = 4, min_component: int = 5) -> ValidationReport:
    """Regularity, looplessness, pair multiplicity and component sizes"""
    report = ValidationReport()

    wrong_degree = {v: d for v, d in H.degree_sequence().items() if d != degree}
    report.checks['regular'] = not wrong_degree
    if wrong_degree:
        report.fail(f"Not {degree}-regular at {sorted(wrong_degree)[:10]}")

    loops = [e.id for e in H.edges() if e.u == e.v]
    report.checks['loopless'] = not loops
    if loops:
        report.fail(f"Loops on edges {loops}")

    multiplicity = Counter(e.pair for e in H.edges())
    worst = max(multiplicity.values(), default=0)
    report.checks['max_multiplicity'] = worst
    if worst > Multigraph.MAX_MULTIPLICITY:
        report.fail(f"Pair multiplicity {worst} exceeds {Multigraph.MAX_MULTIPLICITY}")

    sizes = [len(c) for c in H.components()]
    report.checks['component_sizes'] = sizes
    small = [s for s in sizes if s < min_component]
    if small:
        report.fail(f"{len(small)} component(s) with fewer than {min_component} vertices: {small}")
    return report


# ==================== COLOR CLASSES ====================

def color_class_edges(
    graph: Multigraph, colors: Mapping[int, Color], color: Color, removed: Iterable[int] = ()
) -> List[int]:
    skip = set(removed)
    return sorted(e for e, c in colors.items() if c is color and e not in skip and graph.has_edge(e))


def path_collection_problems(graph: Multigraph, edge_ids: Iterable[int]) -> List[str]:
    """Degree and cycle problems that stop an edge set from being vertex-disjoint paths"""
    problems = []
    degree: Counter = Counter()
    forest = UnionFind()
    for edge_id in sorted(edge_ids):
        edge = graph.edge(edge_id)
        degree[edge.u] += 1
        degree[edge.v] += 1
        if forest[edge.u] == forest[edge.v]:
            problems.append(f"edge {edge_id} closes a cycle")
        else:
            forest.union(edge.u, edge.v)
    problems.extend(f"vertex {v} has degree {d}" for v, d in sorted(degree.items()) if d > 2)
    return problems


def is_path_collection(graph: Multigraph, edge_ids: Iterable[int]) -> bool:
    return not path_collection_problems(graph, edge_ids)


def require_path_collection(graph: Multigraph, edge_ids: Iterable[int], label: str = "") -> None:
    problems = path_collection_problems(graph, edge_ids)
    if problems:
        raise NotPathCollection(f"{label or 'Edge set'} is not a path collection: {problems[0]}",
                                details={'problems': problems})


def validate_two_path_coloring(
    graph: Multigraph, colors: Mapping[int, Color], removed: Iterable[int] = ()
) -> ValidationReport:
    """Both color classes of graph minus `removed` must be collections of simple paths"""
    removed = set(removed)
    report = ValidationReport()
    uncolored = [e for e in graph.edge_ids if e not in removed and colors.get(e) not in COLORS]
    if uncolored:
        report.fail(f"{len(uncolored)} kept edge(s) without a color: {uncolored[:10]}")
    for color in COLORS:
        problems = path_collection_problems(graph, color_class_edges(graph, colors, color, removed))
        report.checks[color.value] = not problems
        for problem in problems:
            report.fail(f"{color.value}: {problem}")
    return report


def monochromatic_cycles(graph: Multigraph, edge_ids: Iterable[int]) -> List[List[int]]:
    """Cycles among the given edges, as edge-id lists in walk order.

    Only components in which every vertex has degree two are reported; the
    caller guarantees maximum degree two inside a color class.
    """
    sub = nx.MultiGraph()
    for edge_id in sorted(edge_ids):
        edge = graph.edge(edge_id)
        sub.add_edge(edge.u, edge.v, key=edge_id)

    cycles = []
    for component in sorted(nx.connected_components(sub), key=min):
        if any(sub.degree(v) != 2 for v in component):
            continue
        start = min(component)
        order, seen, current = [], set(), start
        while True:
            step = min(
                (k for _, nxt, k in sub.edges(current, keys=True) if k not in seen),
                default=None,
            )
            if step is None:
                break
            seen.add(step)
            order.append(step)
            current = graph.edge(step).other(current)
        cycles.append(order)
    return cycles


# ==================== TOURS ====================

def validate_tour(instance: Instance, order: Sequence[int], weight: Optional[Fraction] = None) -> ValidationReport:
    report = ValidationReport()
    if sorted(order) != list(range(instance.n)):
        report.fail("Tour does not visit every vertex exactly once")
        return report
    actual = instance.cycle_weight(order) if instance.n > 2 else 2 * instance.w(order[0], order[1])
    report.checks['weight'] = str(actual)
    if weight is not None and actual != weight:
        report.fail(f"Recorded tour weight {weight} != recomputed {actual}")
    return report


__all__ = [
    'ValidationReport',
    'validate_multigraph',
    'color_class_edges',
    'path_collection_problems',
    'is_path_collection',
    'require_path_collection',
    'validate_two_path_coloring',
    'monochromatic_cycles',
    'validate_tour',
]
