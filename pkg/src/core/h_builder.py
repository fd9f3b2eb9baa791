"""
Assembly of the 4-regular multigraph H.
FILE: src/core/h_builder.py

H starts as two copies of the cycle cover C; the quasi-alternating multiset
S_B is then applied to the second copy. Components with fewer than five
vertices are split off for exact handling.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Tuple
import logging

from utils.validation import ValidationReport, validate_multigraph

from .errors import NotFourRegular
from .graph_data import CycleCover, Instance, Multigraph, Pair, alternating_counts, alternating_weight, format_weight, pair_key

logger = logging.getLogger(__name__)

H_BOUND_FACTOR = Fraction(35, 18)


@dataclass
class HGraph:
    """The multigraph H with the origin of every edge"""
    graph: Multigraph
    provenance: Dict[int, str]            # edge id -> 'cover-1' | 'cover-2' | 'sb' | 'switch'
    switches: List[Dict[str, Any]] = field(default_factory=list)
    switch_gain: Fraction = Fraction(0)   # signed weight change of all 2-switches
    small_components: List[FrozenSet[int]] = field(default_factory=list)

    @property
    def weight(self) -> Fraction:
        return self.graph.total_weight()

    def component_sizes(self) -> List[int]:
        return [len(c) for c in self.graph.components()]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'weight': format_weight(self.weight),
            'component_sizes': self.component_sizes(),
            'small_components': [sorted(c) for c in self.small_components],
            'switches': list(self.switches),
            'switch_gain': format_weight(self.switch_gain),
        }


def _resolve_triple(
    counts: Counter, pair: Pair, instance: Instance
) -> Tuple[Fraction, Dict[str, Any]]:
    """Lower a multiplicity-3 pair u-v by one with the best degree-preserving 2-switch.

    One copy of u-v and one pair a-b are traded for u-x and v-y with
    {x, y} = {a, b}, among the trades that keep both new pairs at
    multiplicity two or less. The signed weight change is returned with
    the event; it may be negative.
    """
    u, v = pair
    best: Optional[Tuple[Fraction, Pair, Pair, Pair]] = None
    for (a, b), count in sorted(counts.items()):
        if count <= 0 or {a, b} & {u, v}:
            continue
        for x, y in ((a, b), (b, a)):
            first, second = pair_key(u, x), pair_key(v, y)
            if counts[first] >= 2 or counts[second] >= 2:
                continue
            gain = instance.w(u, x) + instance.w(v, y) - instance.w(u, v) - instance.w(a, b)
            if best is None or gain > best[0]:
                best = (gain, (a, b), first, second)
    if best is None:
        raise NotFourRegular(f"Pair {pair} has multiplicity 3 and no 2-switch repairs it")
    gain, removed, first, second = best
    counts[pair] -= 1
    counts[removed] -= 1
    counts[first] += 1
    counts[second] += 1
    return gain, {
        'pair': list(pair),
        'partner': list(removed),
        'added': [list(first), list(second)],
        'gain': format_weight(gain),
    }


def build_H(C: CycleCover, sb_pairs: Iterable[Pair], instance: Instance) -> HGraph:
    """H = 2C with the C-pairs of S_B removed and the other pairs added"""
    sb_pairs = list(sb_pairs)
    counts = alternating_counts(C, sb_pairs, copies=2)
    negative = {p: c for p, c in counts.items() if c < 0}
    if negative:
        raise NotFourRegular(f"S_B removes pairs more often than 2C holds them: {sorted(negative)}",
                             details={'sb': [list(p) for p in sb_pairs]})

    switches = []
    switch_gain = Fraction(0)
    for pair in sorted(p for p, c in counts.items() if c > 2):
        while counts[pair] > 2:
            gain, event = _resolve_triple(counts, pair, instance)
            switch_gain += gain
            logger.warning("⚠️ H pair %s reached multiplicity 3; 2-switch applied: %s", pair, event)
            switches.append(event)

    graph = Multigraph(range(instance.n))
    provenance: Dict[int, str] = {}
    switched = Counter()
    for event in switches:
        for added in event['added']:
            switched[tuple(added)] += 1
    for pair, count in sorted(counts.items()):
        for copy in range(count):
            edge = graph.add_edge(pair[0], pair[1], instance.w(*pair))
            if C.contains_pair(*pair):
                provenance[edge.id] = 'cover-1' if copy == 0 else 'cover-2'
            elif switched[pair] > 0:
                switched[pair] -= 1
                provenance[edge.id] = 'switch'
            else:
                provenance[edge.id] = 'sb'

    report = validate_multigraph(graph, degree=4, min_component=0)
    if not report.passed:
        logger.error("H failed validation: %s", report.failures)
        raise NotFourRegular(report.failures[0], details={'sb': [list(p) for p in sb_pairs]})

    expected = 2 * C.weight + alternating_weight(sb_pairs, C, instance) + switch_gain
    if graph.total_weight() != expected:
        raise NotFourRegular(
            f"w(H) = {graph.total_weight()} but 2 w(C) + w'(S_B) + switch gain = {expected}",
            details={'sb': [list(p) for p in sb_pairs]},
        )

    logger.info("🔄 Built H: %d edges, weight %s", graph.num_edges, format_weight(graph.total_weight()))
    return HGraph(graph=graph, provenance=provenance, switches=switches, switch_gain=switch_gain)


@dataclass
class HBoundReport(ValidationReport):
    weight: Fraction = Fraction(0)
    bound: Fraction = Fraction(0)
    ratio: Optional[Fraction] = None

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data.update({
            'weight': format_weight(self.weight),
            'bound': format_weight(self.bound),
            'ratio': None if self.ratio is None else format_weight(self.ratio),
        })
        return data


def check_theorem1(H: HGraph, opt_lb: Fraction, min_component: int = 5) -> HBoundReport:
    """w(H) >= 35/18 opt together with the structural claims"""
    structure = validate_multigraph(H.graph, degree=4, min_component=min_component)
    report = HBoundReport(
        passed=structure.passed,
        failures=list(structure.failures),
        checks=dict(structure.checks),
        weight=H.weight,
        bound=H_BOUND_FACTOR * opt_lb,
        ratio=(H.weight / opt_lb) if opt_lb else None,
    )
    if report.weight < report.bound:
        report.fail(f"w(H) = {format_weight(report.weight)} < 35/18 opt = {format_weight(report.bound)}")
    return report


def split_small_components(H: HGraph, min_component: int = 5) -> Tuple[HGraph, List[Multigraph]]:
    """Route components with fewer than `min_component` vertices to exact handling"""
    components = H.graph.components()
    small = [c for c in components if len(c) < min_component]
    if not small:
        return H, []

    keep = [v for c in components if len(c) >= min_component for v in c]
    core = H.graph.subgraph(keep)
    pieces = [H.graph.subgraph(c) for c in small]
    logger.info("📋 Split off %d small component(s): sizes %s", len(small), [len(c) for c in small])
    core_h = HGraph(
        graph=core,
        provenance={e: p for e, p in H.provenance.items() if core.has_edge(e)},
        switches=H.switches,
        switch_gain=H.switch_gain,
        small_components=list(small),
    )
    return core_h, pieces


__all__ = [
    'HGraph',
    'HBoundReport',
    'H_BOUND_FACTOR',
    'build_H',
    'check_theorem1',
    'split_small_components',
]
