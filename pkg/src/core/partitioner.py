"""
Five-phase partition of a well-colored multigraph.
FILE: src/core/partitioner.py

Every blank edge is colored red in phases R1 and R2, blue in B1 and B2 and
removed in the Blank phase. Each phase owns a set of removed edges; the
sets are kept pairwise disjoint so the lightest of them weighs at most a
fifth of the graph. That set is E'.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Set, Tuple
import logging

import networkx as nx
from networkx.algorithms import bipartite
from networkx.utils import UnionFind

from utils.validation import monochromatic_cycles, validate_two_path_coloring

from .colorer import Coloring, blank_heads
from .errors import BudgetExceeded, ContractViolated, MatchingDeficient
from .graph_data import COLORS, Color, Multigraph, format_weight

logger = logging.getLogger(__name__)

BUDGET_FRACTION = Fraction(1, 5)


class Phase(Enum):
    R1 = "R1"
    R2 = "R2"
    B1 = "B1"
    B2 = "B2"
    BLANK = "Blank"

    @property
    def color(self) -> Optional[Color]:
        if self in (Phase.R1, Phase.R2):
            return Color.RED
        if self in (Phase.B1, Phase.B2):
            return Color.BLUE
        return None


PHASES = (Phase.R1, Phase.R2, Phase.B1, Phase.B2, Phase.BLANK)


def first_phase(color: Color) -> Phase:
    return Phase.R1 if color is Color.RED else Phase.B1


def second_phase(color: Color) -> Phase:
    return Phase.R2 if color is Color.RED else Phase.B2


@dataclass
class BlankEdgeRecord:
    edge_id: int
    endpoints: Tuple[int, int]
    heads: Dict[Color, List[Tuple[int, Tuple[int, int]]]] = field(default_factory=dict)
    tails: Dict[Color, List[int]] = field(default_factory=dict)
    comheads: List[int] = field(default_factory=list)
    postponed: Optional[Color] = None
    safe: bool = True

    @property
    def twinny(self) -> bool:
        return bool(self.comheads)

    def head_ids(self, color: Color) -> List[int]:
        return [h for _, pair in self.heads.get(color, []) for h in pair]

    def colored_in(self, phase: Phase) -> Optional[Color]:
        """Color the edge carries in `phase`, None when it is removed there"""
        if phase is Phase.BLANK:
            return self.postponed
        if self.postponed is phase.color and phase is second_phase(phase.color):
            return None
        return phase.color

    def to_dict(self) -> Dict[str, Any]:
        return {
            'edge': self.edge_id,
            'endpoints': list(self.endpoints),
            'heads': {c.value: [[p, list(pair)] for p, pair in hs] for c, hs in sorted(self.heads.items(), key=lambda kv: kv[0].value)},
            'tails': {c.value: list(ts) for c, ts in sorted(self.tails.items(), key=lambda kv: kv[0].value)},
            'comheads': list(self.comheads),
            'postponed': self.postponed.value if self.postponed else None,
            'safe': self.safe,
        }


@dataclass
class PhasePartition:
    sets: Dict[Phase, Set[int]] = field(default_factory=lambda: {p: set() for p in PHASES})
    records: Dict[int, BlankEdgeRecord] = field(default_factory=dict)
    charged: Set[int] = field(default_factory=set)
    decycled: Dict[Phase, List[int]] = field(default_factory=lambda: {p: [] for p in PHASES})
    static_cycles: List[List[int]] = field(default_factory=list)
    events: List[str] = field(default_factory=list)
    strict: bool = False

    def owner(self, edge_id: int) -> Optional[Phase]:
        return next((p for p in PHASES if edge_id in self.sets[p]), None)

    def add(self, phase: Phase, edge_id: int) -> None:
        """Put an edge into one set; a second owner raises when strict and is reported otherwise"""
        owner = self.owner(edge_id)
        if owner is not None and owner is not phase:
            message = f"edge {edge_id} placed in {phase.value} while already in {owner.value}"
            if self.strict:
                raise ContractViolated(message, details={'edge': edge_id, 'phases': [owner.value, phase.value]})
            self.event(message)
        self.sets[phase].add(edge_id)

    def event(self, message: str) -> None:
        logger.warning("⚠️ %s", message)
        self.events.append(message)

    def is_disjoint(self) -> bool:
        seen: Set[int] = set()
        for phase in PHASES:
            if seen & self.sets[phase]:
                return False
            seen |= self.sets[phase]
        return True

    def weight(self, phase: Phase, graph: Multigraph) -> Fraction:
        return sum((graph.edge(e).weight for e in self.sets[phase]), Fraction(0))

    def weights(self, graph: Multigraph) -> Dict[Phase, Fraction]:
        return {p: self.weight(p, graph) for p in PHASES}

    def to_dict(self, graph: Multigraph) -> Dict[str, Any]:
        return {
            'sets': {p.value: sorted(self.sets[p]) for p in PHASES},
            'weights': {p.value: format_weight(w) for p, w in self.weights(graph).items()},
            'disjoint': self.is_disjoint(),
            'postponed': sorted(r.edge_id for r in self.records.values() if r.postponed),
            'static_cycles': len(self.static_cycles),
            'decycled': {p.value: len(self.decycled[p]) for p in PHASES},
            'events': list(self.events),
        }


# ==================== HEADS ====================

def _records(coloring: Coloring) -> Dict[int, BlankEdgeRecord]:
    H = coloring.graph
    records: Dict[int, BlankEdgeRecord] = {}
    for blank in coloring.blank_edges():
        edge = H.edge(blank)
        record = BlankEdgeRecord(edge_id=blank, endpoints=(edge.u, edge.v))
        for p, color, pair in blank_heads(coloring, blank):
            record.heads.setdefault(color, []).append((p, pair))
        for p in (edge.u, edge.v):
            for color in COLORS:
                single = coloring.edges_of(p, color)
                if len(single) == 1:
                    record.tails.setdefault(color, []).append(single[0].id)
        records[blank] = record

    holders: Dict[int, List[int]] = {}
    for record in records.values():
        for color in COLORS:
            for head in record.head_ids(color):
                holders.setdefault(head, []).append(record.edge_id)
    for head, blanks in holders.items():
        if len(set(blanks)) > 1:
            for blank in set(blanks):
                records[blank].comheads.append(head)
    for record in records.values():
        record.comheads.sort()
    return records


class _HeadAssigner:
    """Splits every head pair of one color between the two phases of that color.

    Pairs are colored one at a time. A pair fed by the tail of an unsafe
    colored edge goes first, then one fed by an exposed edge, then the
    lowest remaining pair. `strict` turns a forbidden cycle or a second
    unsafe edge into ContractViolated.
    """

    def __init__(self, coloring: Coloring, color: Color, partition: PhasePartition, strict: bool = False):
        self.coloring = coloring
        self.graph = coloring.graph
        self.color = color
        self.partition = partition
        self.strict = strict
        self.first = first_phase(color)
        self.second = second_phase(color)
        self.label: Dict[int, Phase] = {}
        self.pairs: List[Tuple[int, int, int, int]] = []
        self.pairs_of: Dict[int, List[int]] = {}
        self.tail: List[Optional[int]] = []
        self.tailed_by: Dict[int, List[int]] = {}
        self.done: Set[int] = set()
        self.order: List[int] = []
        for record in sorted(partition.records.values(), key=lambda r: r.edge_id):
            for p, (h1, h2) in record.heads.get(color, []):
                index = len(self.pairs)
                self.pairs.append((record.edge_id, p, h1, h2))
                self.pairs_of.setdefault(h1, []).append(index)
                self.pairs_of.setdefault(h2, []).append(index)
                q = record.endpoints[1] if p == record.endpoints[0] else record.endpoints[0]
                singles = coloring.edges_of(q, color)
                tail = singles[0].id if len(singles) == 1 else None
                self.tail.append(tail)
                if tail is not None:
                    self.tailed_by.setdefault(tail, []).append(index)
        self._rebuild()

    # ---- forbidden cycle bookkeeping ----

    def _present(self, phase: Phase) -> List[int]:
        """Charged edges of this color kept in `phase` under the current labels"""
        edges = [r.edge_id for r in self.partition.records.values() if r.colored_in(phase) is self.color]
        edges += [h for h, label in self.label.items() if label is not phase]
        return sorted(edges)

    def _rebuild(self) -> bool:
        self.forest: Dict[Phase, UnionFind] = {}
        clean = True
        for phase in (self.first, self.second):
            forest = UnionFind()
            for edge_id in self._present(phase):
                edge = self.graph.edge(edge_id)
                if forest[edge.u] == forest[edge.v]:
                    clean = False
                forest.union(edge.u, edge.v)
            self.forest[phase] = forest
        return clean

    def _would_close(self, phase: Phase, edge_ids: Iterable[int]) -> bool:
        """Keeping all of `edge_ids` in `phase` closes a cycle"""
        forest = self.forest[phase]
        local = UnionFind()
        for edge_id in edge_ids:
            edge = self.graph.edge(edge_id)
            ru, rv = forest[edge.u], forest[edge.v]
            if local[ru] == local[rv]:
                return True
            local.union(ru, rv)
        return False

    def _place(self, head: int, phase: Phase) -> bool:
        """Label a head; True when keeping it closed a cycle somewhere"""
        self.label[head] = phase
        edge = self.graph.edge(head)
        closed = False
        for other in (self.first, self.second):
            if other is not phase:
                forest = self.forest[other]
                closed |= forest[edge.u] == forest[edge.v]
                forest.union(edge.u, edge.v)
        return closed

    def _partner(self, index: int) -> Phase:
        record = self.partition.records[self.pairs[index][0]]
        return Phase.BLANK if record.postponed is self.color else self.second

    # ---- chains of tails and heads ----

    def _children(self, index: int) -> List[int]:
        tail = self.tail[index]
        if tail is None:
            return []
        return [j for j in self.pairs_of.get(tail, []) if j != index]

    def _descendants(self, index: int) -> Set[int]:
        seen: Set[int] = set()
        stack = self._children(index)
        while stack:
            j = stack.pop()
            if j in seen or j == index:
                continue
            seen.add(j)
            stack.extend(self._children(j))
        return seen

    def _unprocessed(self, index: int) -> bool:
        return any(j not in self.done for j in self._children(index))

    def _plainly_safe(self, index: int) -> bool:
        tail = self.tail[index]
        if tail is None or self.label.get(tail) is self.second or not self._children(index):
            return True
        kept = [h for h in self.pairs[index][2:] if self.label.get(h) is self.first]
        if any(len(self.pairs_of[h]) > 1 for h in kept):
            # twins joined by a comhead kept in the second phase
            return True
        return not any(h in self.tailed_by for h in kept)

    def _safe(self, index: int) -> bool:
        if self._plainly_safe(index):
            return True
        return any(j in self.done and self._plainly_safe(j) for j in self._descendants(index))

    def _exposed(self, index: int) -> bool:
        if not self._unprocessed(index):
            return False
        below = self._descendants(index) | {index}
        for j in sorted(self.done):
            family = self._descendants(j)
            if j == index or index not in family:
                continue
            if any(k not in self.done for k in family - below):
                continue
            moved = [h for h in self.pairs[j][2:] if self.label.get(h) is not self.first]
            if any(k not in self.done for h in moved for k in self.tailed_by.get(h, [])):
                return True
        return False

    def _next(self) -> Tuple[int, Optional[int]]:
        """Next pair to color and the head it shares with a tail, if any"""
        frontier = [i for i in sorted(self.done) if self._unprocessed(i)]
        for feeds in (lambda i: not self._safe(i), self._exposed):
            for i in frontier:
                if feeds(i):
                    tail = self.tail[i]
                    return min(j for j in self.pairs_of[tail] if j not in self.done), tail
        return min(j for j in range(len(self.pairs)) if j not in self.done), None

    # ---- main loop ----

    def run(self) -> None:
        while len(self.done) < len(self.pairs):
            index, chained = self._next()
            self._assign(index, chained)
            if self.strict:
                self._check_claim()

    def _check_claim(self) -> None:
        unsafe = [i for i in sorted(self.done) if not self._safe(i)]
        if len(unsafe) > 1 or any(not self._unprocessed(i) for i in unsafe):
            raise ContractViolated(
                f"{self.color.value} head assignment left unsafe blank edges "
                f"{sorted({self.pairs[i][0] for i in unsafe})}",
                details={'pairs': unsafe},
            )

    def _closed(self, blanks: Iterable[int]) -> None:
        blanks = sorted(set(blanks))
        for blank in blanks:
            self.partition.records[blank].safe = False
        if self.strict:
            raise ContractViolated(
                f"{self.color.value} head assignment closed a forbidden cycle at blank edges {blanks}"
            )
        logger.debug("Forbidden %s cycle closed at blank edges %s", self.color.value, blanks)

    def _assign(self, index: int, chained: Optional[int]) -> None:
        blank, p, a, b = self.pairs[index]
        self.done.add(index)
        self.order.append(blank)
        h1, h2 = (b, a) if chained == b else (a, b)
        known = [h for h in (h1, h2) if h in self.label]

        if len(known) == 2:
            if {self.label[h1], self.label[h2]} != {self.first, self._partner(index)}:
                self.partition.event(
                    f"head pair {sorted((h1, h2))} of blank {blank} at {p} is not split in {self.color.value}"
                )
                self.partition.records[blank].safe = False
            return

        if len(known) == 1:
            free = h2 if known[0] == h1 else h1
            target = self.first if self.label[known[0]] is not self.first else self._partner(index)
            if self._place(free, target):
                self._closed([blank])
            return

        twin = self._twin(index, h1, h2)
        if twin is None:
            # h2 goes into the first phase unless keeping h1 there closes a cycle
            if self._would_close(self.first, [h1]):
                h1, h2 = h2, h1
            closed = self._place(h2, self.first)
            closed |= self._place(h1, self._partner(index))
            if closed:
                self._closed([blank])
            return
        self._assign_twins(index, *twin)

    def _twin(self, index: int, h1: int, h2: int) -> Optional[Tuple[int, int, int, int]]:
        """(twin pair, comhead, own other head, twin other head) when a head is shared with an uncolored pair"""
        blank = self.pairs[index][0]
        for comhead, mine in ((h2, h1), (h1, h2)):
            for k in self.pairs_of[comhead]:
                if k == index or k in self.done or self.pairs[k][0] == blank:
                    continue
                theirs = next((h for h in self.pairs[k][2:] if h != comhead), None)
                if theirs is None or theirs in self.label or theirs == mine:
                    continue
                return k, comhead, mine, theirs
        return None

    def _assign_twins(self, index: int, twin: int, h2: int, h1: int, h3: int) -> None:
        self.done.add(twin)
        self.order.append(self.pairs[twin][0])
        blanks = [self.pairs[index][0], self.pairs[twin][0]]
        if not self._would_close(self.first, [h1, h3]):
            closed = self._place(h2, self.first)
            closed |= self._place(h1, self._partner(index))
            closed |= self._place(h3, self._partner(twin))
            if closed:
                self._closed(blanks)
            return

        postpone = self._would_close(self.second, [h1, h3]) and self._can_postpone(blanks)
        closed = self._place(h1, self.first)
        closed |= self._place(h3, self.first)
        if not postpone:
            if self._place(h2, self.second) or closed:
                self._closed(blanks)
            return
        for edge_id in blanks:
            self.partition.records[edge_id].postponed = self.color
        self.label[h2] = Phase.BLANK
        logger.debug("Postponed %s and %s in %s around comhead %s", blanks[0], blanks[1], self.color.value, h2)
        if not self._rebuild():
            self._closed(blanks)

    def _can_postpone(self, blanks: List[int]) -> bool:
        for edge_id in blanks:
            record = self.partition.records[edge_id]
            if record.postponed is not None or len(record.heads.get(self.color, [])) != 1:
                return False
        return True

    def commit(self) -> None:
        for head, phase in sorted(self.label.items()):
            self.partition.add(phase, head)


def assign_heads(coloring: Coloring, strict: bool = False) -> PhasePartition:
    """Records for every blank edge and the head split of both colors"""
    partition = PhasePartition(records=_records(coloring), strict=strict)
    for color in COLORS:
        assigner = _HeadAssigner(coloring, color, partition, strict)
        assigner.run()
        assigner.commit()
    for record in partition.records.values():
        partition.charged.add(record.edge_id)
        for color in COLORS:
            partition.charged.update(record.head_ids(color))
        if record.postponed is not None:
            partition.add(second_phase(record.postponed), record.edge_id)
        else:
            partition.add(Phase.BLANK, record.edge_id)
    return partition


# ==================== PHASES ====================

def phase_coloring(
    H: Multigraph, coloring: Coloring, partition: PhasePartition, phase: Phase
) -> Tuple[List[int], Dict[int, Color]]:
    """Kept edges and their colors in one phase"""
    gone = partition.sets[phase] | coloring.removed
    colors: Dict[int, Color] = {}
    for edge_id in H.edge_ids:
        if edge_id in gone:
            continue
        color = coloring.color_of(edge_id)
        if color is Color.BLANK:
            record = partition.records.get(edge_id)
            color = record.colored_in(phase) if record else None
            if color is None:
                continue
        colors[edge_id] = color
    return sorted(colors), colors


def _phase_cycles(H: Multigraph, coloring: Coloring, partition: PhasePartition, phase: Phase) -> List[List[int]]:
    _, colors = phase_coloring(H, coloring, partition, phase)
    cycles = []
    for color in COLORS:
        cycles.extend(monochromatic_cycles(H, [e for e, c in colors.items() if c is color]))
    return cycles


def forbidden_cycles(H: Multigraph, coloring: Coloring, partition: PhasePartition, phase: Phase) -> List[List[int]]:
    """Phase cycles made only of charged edges"""
    return [c for c in _phase_cycles(H, coloring, partition, phase) if all(e in partition.charged for e in c)]


def distribute_static_cycles(H: Multigraph, coloring: Coloring, partition: PhasePartition) -> List[List[int]]:
    """Put the five lightest edges of every uncharged colored cycle into the five sets"""
    static = []
    for color in COLORS:
        for cycle in monochromatic_cycles(H, coloring.color_class(color)):
            if any(e in partition.charged for e in cycle):
                continue
            static.append(cycle)
            lightest = sorted(cycle, key=lambda e: (H.edge(e).weight, e))
            if len(lightest) < len(PHASES):
                partition.event(f"static cycle {cycle} is shorter than {len(PHASES)}")
            for i, phase in enumerate(PHASES):
                partition.add(phase, lightest[i % len(lightest)])
    partition.static_cycles = static
    return static


def decycle_phase(
    H: Multigraph, coloring: Coloring, partition: PhasePartition, phases: Iterable[Phase]
) -> Dict[Phase, List[int]]:
    """Break the cycles of the given phases with distinct uncharged edges.

    Cycles of all given phases share one bipartite matching against the
    uncharged edges that no set owns yet. An unmatched cycle raises
    MatchingDeficient on a strict partition and otherwise falls back to
    its lightest unowned edge.
    """
    phases = list(phases)
    owned = set().union(*partition.sets.values())
    cycles: List[Tuple[Phase, List[int]]] = [(p, c) for p in phases for c in _phase_cycles(H, coloring, partition, p)]
    added: Dict[Phase, List[int]] = {p: [] for p in phases}
    if not cycles:
        return added

    graph = nx.Graph()
    top = []
    for index, (phase, cycle) in enumerate(cycles):
        node = -(index + 1)
        top.append(node)
        graph.add_node(node)
        for edge_id in cycle:
            if edge_id not in partition.charged and edge_id not in owned:
                graph.add_edge(node, edge_id)
    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=top)

    used: Set[int] = set()
    for index, (phase, cycle) in enumerate(cycles):
        edge_id = matching.get(-(index + 1))
        if edge_id is None:
            message = f"{phase.value} cycle {cycle} has no matched uncharged edge"
            if partition.strict:
                raise MatchingDeficient(message, details={'phase': phase.value, 'cycle': cycle})
            free = [e for e in cycle if e not in owned and e not in used]
            pool = free or [e for e in cycle if e not in used] or cycle
            edge_id = min(pool, key=lambda e: (H.edge(e).weight, e))
            partition.event(f"{message}; {'lightest unowned' if free else 'lightest'} edge {edge_id} used")
        used.add(edge_id)
        partition.add(phase, edge_id)
        partition.decycled[phase].append(edge_id)
        added[phase].append(edge_id)
    return added


def _repair_phase(H: Multigraph, coloring: Coloring, partition: PhasePartition, phase: Phase) -> None:
    """Last resort for a phase that still has a degree excess or a cycle"""
    for _ in range(H.num_edges):
        kept, colors = phase_coloring(H, coloring, partition, phase)
        excess = None
        for v in H.vertices:
            for color in COLORS:
                at_v = [e.id for e in H.incident(v) if colors.get(e.id) is color]
                if len(at_v) > 2:
                    excess = (v, color, at_v)
                    break
            if excess:
                break
        if excess is not None:
            v, color, at_v = excess
            edge_id = min(at_v, key=lambda e: (partition.owner(e) is not None, H.edge(e).weight, e))
            partition.event(f"{phase.value}: {color.value} degree {len(at_v)} at {v}; edge {edge_id} removed")
            partition.add(phase, edge_id)
            continue
        cycles = _phase_cycles(H, coloring, partition, phase)
        if not cycles:
            return
        edge_id = min(cycles[0], key=lambda e: (partition.owner(e) is not None, H.edge(e).weight, e))
        partition.event(f"{phase.value}: cycle {cycles[0]} survived; edge {edge_id} removed")
        partition.add(phase, edge_id)


def relegated_heads_on_cycles(H: Multigraph, coloring: Coloring, partition: PhasePartition) -> List[int]:
    """Heads of postponed blank edges that lie on a cycle of their second phase"""
    offending: Set[int] = set()
    for color in COLORS:
        heads = {
            h for r in partition.records.values() if r.postponed is color for h in r.head_ids(color)
        }
        if not heads:
            continue
        for cycle in _phase_cycles(H, coloring, partition, second_phase(color)):
            offending |= heads & set(cycle)
    return sorted(offending)


def partition(H: Multigraph, coloring: Coloring, strict: bool = False) -> PhasePartition:
    """Head split, static cycles and decycling of all five phases.

    `strict` raises on overlapping sets, a deficient decycling matching and
    a relegated head that still sits on a second-phase cycle.
    """
    result = assign_heads(coloring, strict)
    for phase in (Phase.R1, Phase.R2, Phase.B1, Phase.B2):
        for cycle in forbidden_cycles(H, coloring, result, phase):
            for edge_id in cycle:
                if edge_id in result.records:
                    result.records[edge_id].safe = False
    unsafe = sum(not r.safe for r in result.records.values())
    if unsafe:
        logger.warning("⚠️ %d blank edge(s) lie on forbidden cycles after head assignment", unsafe)

    distribute_static_cycles(H, coloring, result)
    relegated = relegated_heads_on_cycles(H, coloring, result)
    if relegated:
        message = f"relegated heads {relegated} lie on second-phase cycles"
        if strict:
            raise ContractViolated(message, details={'heads': relegated})
        result.event(message)
    for group in ((Phase.R1, Phase.R2), (Phase.B1, Phase.B2), (Phase.BLANK,)):
        for _ in range(H.num_edges):
            if not any(decycle_phase(H, coloring, result, group).values()):
                break
    for phase in PHASES:
        _repair_phase(H, coloring, result, phase)

    logger.info("📋 Partition: %s", {p.value: format_weight(w) for p, w in result.weights(H).items()})
    return result


# ==================== CHOICE OF E' ====================

@dataclass
class EPrimeChoice:
    phase: Phase
    removed: Set[int]
    colors: Dict[int, Color]
    weight: Fraction
    graph_weight: Fraction
    phase_weights: Dict[Phase, Fraction]

    @property
    def budget_ok(self) -> bool:
        return self.weight <= BUDGET_FRACTION * self.graph_weight

    def class_weight(self, graph: Multigraph, color: Color) -> Fraction:
        return sum((graph.edge(e).weight for e, c in self.colors.items() if c is color), Fraction(0))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'phase': self.phase.value,
            'weight': format_weight(self.weight),
            'graph_weight': format_weight(self.graph_weight),
            'phase_weights': {p.value: format_weight(w) for p, w in self.phase_weights.items()},
            'budget_ok': self.budget_ok,
        }


def choose_Eprime(p: PhasePartition, H: Multigraph, coloring: Coloring, strict: bool = False) -> EPrimeChoice:
    """The lightest phase set together with the 2-path-coloring of H minus it"""
    weights = {phase: sum((H.edge(e).weight for e in p.sets[phase] | coloring.removed), Fraction(0)) for phase in PHASES}
    phase = min(PHASES, key=lambda ph: (weights[ph], PHASES.index(ph)))
    removed = set(p.sets[phase]) | set(coloring.removed)
    _, colors = phase_coloring(H, coloring, p, phase)

    report = validate_two_path_coloring(H, colors, removed)
    if not report.passed:
        p.event(f"phase {phase.value} coloring failed validation: {report.failures[0]}")

    choice = EPrimeChoice(
        phase=phase, removed=removed, colors=colors, weight=weights[phase],
        graph_weight=H.total_weight(), phase_weights=weights,
    )
    if not choice.budget_ok:
        message = f"w(E') = {format_weight(choice.weight)} exceeds w(H)/5 = {format_weight(BUDGET_FRACTION * choice.graph_weight)}"
        if strict:
            raise BudgetExceeded(message, details=choice.to_dict())
        p.event(message)
    logger.info("✂️ E' from phase %s: weight %s of %s", phase.value, format_weight(choice.weight), format_weight(choice.graph_weight))
    return choice




def repair_two_path_coloring(
    graph: Multigraph, colors: Dict[int, Color], removed: Set[int]
) -> List[str]:
    """Make both classes path collections again by removing offending edges.

    Each class is rebuilt heaviest edge first; an edge that would give a
    vertex a third edge of its color or close a cycle is moved to `removed`.
    Uncolored kept edges are removed too. `colors` and `removed` are
    updated in place; the returned list describes every removal.
    """
    events = []
    for edge_id in graph.edge_ids:
        if edge_id not in removed and colors.get(edge_id) not in COLORS:
            removed.add(edge_id)
            events.append(f"edge {edge_id} had no color and was removed")
    for color in COLORS:
        members = sorted(
            (e for e, c in colors.items() if c is color and e not in removed and graph.has_edge(e)),
            key=lambda e: (-graph.edge(e).weight, e),
        )
        degree: Dict[int, int] = {}
        forest = UnionFind()
        for edge_id in members:
            edge = graph.edge(edge_id)
            if degree.get(edge.u, 0) >= 2 or degree.get(edge.v, 0) >= 2 or forest[edge.u] == forest[edge.v]:
                removed.add(edge_id)
                events.append(f"{color.value} edge {edge_id} ({format_weight(edge.weight)}) removed by repair")
                continue
            forest.union(edge.u, edge.v)
            degree[edge.u] = degree.get(edge.u, 0) + 1
            degree[edge.v] = degree.get(edge.v, 0) + 1
    for message in events:
        logger.warning("⚠️ %s", message)
    return events


__all__ = [
    'BUDGET_FRACTION',
    'Phase',
    'PHASES',
    'first_phase',
    'second_phase',
    'BlankEdgeRecord',
    'PhasePartition',
    'EPrimeChoice',
    'assign_heads',
    'phase_coloring',
    'forbidden_cycles',
    'distribute_static_cycles',
    'decycle_phase',
    'relegated_heads_on_cycles',
    'partition',
    'choose_Eprime',
    'repair_two_path_coloring',
]
