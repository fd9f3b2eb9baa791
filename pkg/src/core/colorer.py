"""
Well 2-almost-cycle-coloring of the reduced multigraph.
FILE: src/core/colorer.py

Double edges get one red and one blue copy, cap ribbons get different
colors, short cycles are disabled one at a time, the rest is colored
greedily and the blank edges are then thinned by the two preprocessing
eliminations. A final scan breaks any monochromatic cycle shorter than five.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, Iterable, List, Mapping, Optional, Set, Tuple
import logging

from utils.validation import monochromatic_cycles

from .graph_data import COLORS, Color, Edge, Multigraph
from .reducer import find_caps

logger = logging.getLogger(__name__)

MIN_CYCLE = 5


@dataclass
class ColoringReport:
    stats: Counter = field(default_factory=Counter)
    events: List[str] = field(default_factory=list)

    def event(self, message: str) -> None:
        logger.warning("⚠️ %s", message)
        self.events.append(message)

    def to_dict(self) -> Dict[str, Any]:
        return {'stats': dict(sorted(self.stats.items())), 'events': list(self.events)}


class Coloring:
    """Edge id -> Red/Blue/Blank with per-vertex color counters.

    Edges in `removed` were taken out by the safety net and count as part
    of E' in every phase.
    """

    def __init__(self, graph: Multigraph, colors: Optional[Mapping[int, Color]] = None):
        self.graph = graph
        self._colors: Dict[int, Color] = {e: Color.BLANK for e in graph.edge_ids}
        self._counts: Dict[int, Counter] = {v: Counter() for v in graph.vertices}
        for e in graph.edges():
            self._counts[e.u][Color.BLANK] += 1
            self._counts[e.v][Color.BLANK] += 1
        self.removed: Set[int] = set()
        self.locked: Set[int] = set()
        self.report = ColoringReport()
        for edge_id, color in (colors or {}).items():
            self.set_color(edge_id, color)

    # ---- state ----

    def color_of(self, edge_id: int) -> Color:
        return self._colors[edge_id]

    def set_color(self, edge_id: int, color: Color) -> None:
        old = self._colors[edge_id]
        if old is color:
            return
        edge = self.graph.edge(edge_id)
        if edge_id not in self.removed:
            for x in (edge.u, edge.v):
                self._counts[x][old] -= 1
                self._counts[x][color] += 1
        self._colors[edge_id] = color

    def remove(self, edge_id: int) -> None:
        if edge_id in self.removed:
            return
        edge = self.graph.edge(edge_id)
        for x in (edge.u, edge.v):
            self._counts[x][self._colors[edge_id]] -= 1
        self.removed.add(edge_id)

    def count(self, v: int, color: Color) -> int:
        return self._counts[v][color]

    def edges_of(self, v: int, color: Color) -> List[Edge]:
        return [e for e in self.graph.incident(v) if e.id not in self.removed and self._colors[e.id] is color]

    def blank_at(self, v: int) -> List[int]:
        return [e.id for e in self.edges_of(v, Color.BLANK)]

    def blank_edges(self) -> List[int]:
        return [e for e in self.graph.edge_ids if e not in self.removed and self._colors[e] is Color.BLANK]

    def color_class(self, color: Color) -> List[int]:
        return [e for e in self.graph.edge_ids if e not in self.removed and self._colors[e] is color]

    def as_dict(self) -> Dict[int, Color]:
        return {e: c for e, c in self._colors.items() if e not in self.removed}

    def snapshot(self) -> Tuple[Dict[int, Color], Set[int]]:
        return dict(self._colors), set(self.removed)

    def restore(self, snap: Tuple[Dict[int, Color], Set[int]]) -> None:
        colors, removed = snap
        self.removed = set(removed)
        self._colors = dict(colors)
        self._counts = {v: Counter() for v in self.graph.vertices}
        for e in self.graph.edges():
            if e.id in self.removed:
                continue
            for x in (e.u, e.v):
                self._counts[x][self._colors[e.id]] += 1

    # ---- short cycle queries ----

    def path_distance(self, u: int, v: int, color: Color, skip: Iterable[int] = (), limit: int = MIN_CYCLE - 2) -> Optional[int]:
        """Edges on the shortest `color` path from u to v within `limit` steps"""
        skip = set(skip)
        frontier, seen = [u], {u}
        for depth in range(1, limit + 1):
            nxt = []
            for x in frontier:
                for e in self.edges_of(x, color):
                    if e.id in skip:
                        continue
                    y = e.other(x)
                    if y == v:
                        return depth
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return None

    def closes_short_cycle(self, edge_id: int, color: Color) -> bool:
        edge = self.graph.edge(edge_id)
        return self.path_distance(edge.u, edge.v, color, skip=(edge_id,)) is not None

    def can_color(self, edge_id: int, color: Color) -> bool:
        if edge_id in self.removed:
            return False
        edge = self.graph.edge(edge_id)
        current = self._colors[edge_id]
        for x in (edge.u, edge.v):
            if self.count(x, color) - (current is color) >= 2:
                return False
        return not self.closes_short_cycle(edge_id, color)

    def locally_valid(self, edge_ids: Iterable[int]) -> bool:
        """Degree, blank and short-cycle rules around the given edges"""
        for edge_id in edge_ids:
            edge = self.graph.edge(edge_id)
            for x in (edge.u, edge.v):
                if any(self.count(x, c) > 2 for c in COLORS) or self.count(x, Color.BLANK) > 1:
                    return False
            color = self._colors[edge_id]
            if color in COLORS and self.closes_short_cycle(edge_id, color):
                return False
        return True

    def invariant1_violations(self, vertices: Iterable[int]) -> List[int]:
        bad = []
        for v in vertices:
            colored = [self._colors[e.id] for e in self.graph.incident(v)
                       if e.id not in self.removed and self._colors[e.id] in COLORS]
            if len(colored) == 2 and colored[0] is colored[1]:
                bad.append(v)
        return bad

    def to_dict(self) -> Dict[str, Any]:
        return {
            'colors': {str(e): c.value for e, c in sorted(self._colors.items()) if e not in self.removed},
            'removed': sorted(self.removed),
        }


# ==================== SHORT CYCLES ====================

@dataclass(frozen=True)
class ActiveSquare:
    """A triangle or square at edge level; edges[k] joins vertices[k] and vertices[k+1]"""
    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]

    def blanks(self, coloring: Coloring) -> List[int]:
        return [e for e in self.edges if coloring.color_of(e) is Color.BLANK]

    def colored(self, coloring: Coloring) -> List[int]:
        return [e for e in self.edges if coloring.color_of(e) in COLORS]

    def is_active(self, coloring: Coloring) -> bool:
        """Some coloring of the blank edges could still make it monochromatic"""
        if any(e in coloring.removed for e in self.edges):
            return False
        blanks = self.blanks(coloring)
        present = {coloring.color_of(e) for e in self.colored(coloring)}
        if not blanks or len(present) > 1:
            return False
        load: Counter = Counter()
        for e in blanks:
            edge = coloring.graph.edge(e)
            load[edge.u] += 1
            load[edge.v] += 1
        return any(
            all(coloring.count(x, c) + k <= 2 for x, k in load.items())
            for c in (present or COLORS)
        )


def short_cycles(graph: Multigraph) -> List[ActiveSquare]:
    """Every triangle and square on distinct vertices, one entry per choice of parallel copies"""
    found = []

    def expand(vertices: Tuple[int, ...]) -> None:
        sides = [graph.edges_between(vertices[k], vertices[(k + 1) % len(vertices)]) for k in range(len(vertices))]
        choices = [[]]
        for side in sides:
            choices = [c + [e.id] for c in choices for e in side]
        for edges in choices:
            found.append(ActiveSquare(vertices=vertices, edges=tuple(edges)))

    for a in graph.vertices:
        higher = [x for x in graph.neighbors(a) if x > a]
        for b, c in combinations(higher, 2):
            if graph.multiplicity(b, c):
                expand((a, b, c))
        for b in higher:
            for c in graph.neighbors(b):
                if c <= a or c == b:
                    continue
                for d in graph.neighbors(c):
                    if d <= b or d in (a, c) or not graph.multiplicity(d, a):
                        continue
                    expand((a, b, c, d))
    return found


def find_short_monochromatic_cycles(H: Multigraph, coloring: Coloring, max_len: int = MIN_CYCLE - 1) -> List[List[int]]:
    cycles = []
    for color in COLORS:
        cycles.extend(c for c in monochromatic_cycles(H, coloring.color_class(color)) if len(c) <= max_len)
    return cycles


# ==================== DISABLING ====================

def _touched(coloring: Coloring, edge_ids: Iterable[int]) -> List[int]:
    return sorted({x for e in edge_ids for x in (coloring.graph.edge(e).u, coloring.graph.edge(e).v)})


def _try(coloring: Coloring, options: Iterable[Mapping[int, Color]], keep_invariant1: bool = False) -> bool:
    """Apply the first assignment whose edges can all be colored in order.

    With `keep_invariant1` an option that leaves exactly two equal colors at
    a vertex is only taken when no other option applies.
    """
    options = list(options)
    for guarded in ((True, False) if keep_invariant1 else (False,)):
        for option in options:
            touched = _touched(coloring, option)
            before = set(coloring.invariant1_violations(touched))
            snap = coloring.snapshot()
            ok = True
            for edge_id, color in option.items():
                if coloring.color_of(edge_id) is not Color.BLANK or not coloring.can_color(edge_id, color):
                    ok = False
                    break
                coloring.set_color(edge_id, color)
            if ok and guarded and set(coloring.invariant1_violations(touched)) - before:
                ok = False
            if ok:
                coloring.locked.update(option)
                if keep_invariant1 and not guarded:
                    coloring.report.stats['invariant1_relaxed'] += 1
                return True
            coloring.restore(snap)
    return False


def active_edges(coloring: Coloring, squares: Iterable[ActiveSquare]) -> Set[int]:
    """Colored edges lying on an active square"""
    return {e for sq in squares if sq.is_active(coloring) for e in sq.colored(coloring)}


def invariant2_violations(coloring: Coloring, squares: Iterable[ActiveSquare]) -> List[int]:
    """Active edges breaking the two-or-four rule, or single ones meeting an active edge of the other color"""
    graph = coloring.graph
    active = active_edges(coloring, squares)
    bad = []
    for edge_id in sorted(active):
        edge = graph.edge(edge_id)
        color = coloring.color_of(edge_id)
        ends = (edge.u, edge.v)
        if any(sum(coloring.count(x, c) for c in COLORS) not in (2, 4) for x in ends):
            bad.append(edge_id)
            continue
        if graph.is_double(edge_id):
            continue
        if any(f.id in active and coloring.color_of(f.id) is color.other for x in ends for f in graph.incident(x)):
            bad.append(edge_id)
    return bad


def _audit(coloring: Coloring, edge_ids: Iterable[int], squares: Iterable[ActiveSquare], debug_checks: bool) -> None:
    """Count both disabling invariants after a step; only runs with debug_checks"""
    if not debug_checks:
        return
    edge_ids = list(edge_ids)
    first = coloring.invariant1_violations(_touched(coloring, edge_ids))
    second = [e for e in invariant2_violations(coloring, squares) if e in edge_ids]
    if first:
        coloring.report.stats['invariant1_violations'] += len(first)
        coloring.report.event(f"two equal colors are the only colored edges at {first}")
    if second:
        coloring.report.stats['invariant2_violations'] += len(second)
        coloring.report.event(f"active edges {second} break the two-or-four rule or meet an active edge of the other color")


def disable_two_cycles(H: Multigraph) -> Coloring:
    """Red on the lower id of every double edge, blue on the higher"""
    coloring = Coloring(H)
    for pair in H.pairs():
        copies = H.edges_between(*pair)
        if len(copies) == 2:
            coloring.set_color(copies[0].id, Color.RED)
            coloring.set_color(copies[1].id, Color.BLUE)
            coloring.locked.update(e.id for e in copies)
            coloring.report.stats['two_cycles'] += 1
    return coloring


def disable_caps(H: Multigraph, coloring: Coloring, debug_checks: bool = False) -> Coloring:
    """Give the two ribbons of every cap different colors"""
    for cap in find_caps(H):
        r1, r2 = cap.ribbons
        c1, c2 = coloring.color_of(r1), coloring.color_of(r2)
        if c1 in COLORS and c2 in COLORS:
            if c1 is c2:
                coloring.report.stats['caps_stuck'] += 1
                logger.debug("Cap %s has ribbons of one color", cap.vertices)
            continue
        if c1 in COLORS:
            options = [{r2: c1.other}]
        elif c2 in COLORS:
            options = [{r1: c2.other}]
        else:
            options = [{r1: Color.RED, r2: Color.BLUE}, {r1: Color.BLUE, r2: Color.RED}]
        if _try(coloring, options):
            coloring.report.stats['caps'] += 1
            _audit(coloring, cap.ribbons, (), debug_checks)
        else:
            coloring.report.stats['caps_stuck'] += 1
    return coloring


def _extend_single(coloring: Coloring, sq: ActiveSquare, k: int) -> bool:
    """One colored edge edges[k]: neighbours keep its color, the opposite edge takes the other"""
    c = coloring.color_of(sq.edges[k])
    size = len(sq.edges)
    after, before = sq.edges[(k + 1) % size], sq.edges[(k - 1) % size]
    if size == 4:
        opposite = sq.edges[(k + 2) % size]
        options = [
            {after: c, before: c, opposite: c.other},
            {after: c.other},
            {before: c.other},
            {opposite: c.other},
        ]
    else:
        options = [{after: c, before: c.other}, {after: c.other, before: c}, {after: c.other}, {before: c.other}]
    return _try(coloring, options, keep_invariant1=size == 4)


def _propagation_order(sq: ActiveSquare) -> List[int]:
    """First edge, its two neighbours, then the opposite edge"""
    if len(sq.edges) == 4:
        return [sq.edges[0], sq.edges[1], sq.edges[3], sq.edges[2]]
    return list(sq.edges)


def _propagate(coloring: Coloring, squares: List[ActiveSquare], by_edge: Dict[int, List[int]],
               edge_ids: Iterable[int], stuck: Set[int]) -> None:
    for edge_id in edge_ids:
        for index in by_edge.get(edge_id, ()):
            other = squares[index]
            if index in stuck or not other.is_active(coloring):
                continue
            colored = other.colored(coloring)
            if colored == [edge_id]:
                _extend_single(coloring, other, other.edges.index(edge_id))


def disable_squares(H: Multigraph, coloring: Coloring, debug_checks: bool = False) -> Coloring:
    """Disable active triangles and squares until none is left.

    Squares with two or more colored edges go first, then squares with one,
    then all-blank ones. A square whose branch cannot be applied under the
    degree rules is parked; `squares_left_active` counts the parked ones
    that are still active at the end.
    """
    squares = short_cycles(H)
    quads = [sq for sq in squares if len(sq.edges) == 4]
    by_edge: Dict[int, List[int]] = {}
    for index, sq in enumerate(squares):
        for e in sq.edges:
            by_edge.setdefault(e, []).append(index)

    stuck: Set[int] = set()
    pending = [i for i, sq in enumerate(squares) if sq.is_active(coloring)]
    while pending:
        pending = [i for i in pending if i not in stuck and squares[i].is_active(coloring)]
        if not pending:
            break
        ranked = sorted(pending, key=lambda i: (-min(len(squares[i].colored(coloring)), 2), i))
        index = ranked[0]
        sq = squares[index]
        colored = sq.colored(coloring)
        blanks = sq.blanks(coloring)
        quad = len(sq.edges) == 4

        if len(colored) >= 2:
            c = coloring.color_of(colored[0])
            if len(blanks) == 1:
                options = [{blanks[0]: c.other}]
            else:
                options = [
                    {blanks[0]: Color.RED, blanks[1]: Color.BLUE},
                    {blanks[0]: Color.BLUE, blanks[1]: Color.RED},
                    {blanks[0]: c.other, blanks[1]: c.other},
                ]
            ok = _try(coloring, options, keep_invariant1=quad)
        elif len(colored) == 1:
            e = colored[0]
            ok = _extend_single(coloring, sq, sq.edges.index(e))
            parallel = H.parallel_edge(e)
            if ok and parallel is not None:
                _propagate(coloring, squares, by_edge, [parallel.id], stuck)
        else:
            red, blue = Color.RED, Color.BLUE
            if quad:
                options = [dict(zip(sq.edges, (red, blue, red, blue))), dict(zip(sq.edges, (blue, red, blue, red)))]
            else:
                options = [dict(zip(sq.edges, pattern)) for pattern in
                           ((red, blue, red), (blue, red, blue), (red, blue, blue), (blue, red, red))]
            ok = _try(coloring, options, keep_invariant1=quad)
            if ok:
                _propagate(coloring, squares, by_edge, _propagation_order(sq), stuck)

        if ok:
            coloring.report.stats['squares'] += 1
            if quad:
                _audit(coloring, sq.edges, quads, debug_checks)
        else:
            stuck.add(index)
            coloring.report.stats['squares_stuck'] += 1
            logger.debug("Parked short cycle %s", sq.vertices)

    left = sorted(i for i in stuck if squares[i].is_active(coloring))
    coloring.report.stats['squares_left_active'] = len(left)
    if left and debug_checks:
        coloring.report.event(f"short cycles {[squares[i].vertices for i in left]} are still active after disabling")
    return coloring


# ==================== COMPLETION ====================

def _flip_chain(coloring: Coloring, start: int, color: Color) -> Optional[List[int]]:
    """Alternating recolor walk that lowers the `color` count at `start` by one"""
    flipped: List[int] = []
    vertex, want = start, color
    while len(flipped) <= coloring.graph.num_edges:
        options = [e for e in coloring.edges_of(vertex, want) if e.id not in coloring.locked and e.id not in flipped]
        if not options:
            return None
        edge = options[0]
        coloring.set_color(edge.id, want.other)
        flipped.append(edge.id)
        vertex = edge.other(vertex)
        if coloring.count(vertex, want.other) <= 2:
            return flipped
        want = want.other
    return None


def _kempe_repair(coloring: Coloring, edge_id: int, color: Color) -> bool:
    edge = coloring.graph.edge(edge_id)
    snap = coloring.snapshot()
    flipped: List[int] = []
    for x in (edge.u, edge.v):
        if coloring.count(x, color) >= 2:
            chain = _flip_chain(coloring, x, color)
            if chain is None:
                coloring.restore(snap)
                return False
            flipped.extend(chain)
    if coloring.can_color(edge_id, color):
        coloring.set_color(edge_id, color)
        if coloring.locally_valid(flipped + [edge_id]):
            return True
    coloring.restore(snap)
    return False


def complete_greedily(H: Multigraph, coloring: Coloring) -> Coloring:
    """Color the remaining edges by id, leaving an edge blank only where no blank touches it"""
    blank_vertices: Set[int] = set()
    for edge_id in coloring.blank_edges():
        if coloring.color_of(edge_id) is not Color.BLANK:
            continue
        edge = H.edge(edge_id)
        order = sorted(COLORS, key=lambda c: (coloring.count(edge.u, c) + coloring.count(edge.v, c), c.value))
        chosen = next((c for c in order if coloring.can_color(edge_id, c)), None)
        if chosen is not None:
            coloring.set_color(edge_id, chosen)
            coloring.report.stats['greedy_colored'] += 1
            continue
        if edge.u not in blank_vertices and edge.v not in blank_vertices:
            blank_vertices.update((edge.u, edge.v))
            coloring.report.stats['greedy_blank'] += 1
            continue
        if any(_kempe_repair(coloring, edge_id, c) for c in order):
            coloring.report.stats['kempe_repairs'] += 1
            continue
        coloring.remove(edge_id)
        coloring.report.stats['forced_removals'] += 1
        coloring.report.event(f"edge {edge_id} could not be colored or left blank; removed")
    return coloring


# ==================== PREPROCESSING ====================

def blank_heads(coloring: Coloring, edge_id: int) -> List[Tuple[int, Color, Tuple[int, int]]]:
    """(endpoint, color, head pair) for every endpoint holding two edges of one color"""
    edge = coloring.graph.edge(edge_id)
    found = []
    for p in (edge.u, edge.v):
        for color in COLORS:
            heads = coloring.edges_of(p, color)
            if len(heads) == 2:
                found.append((p, color, (heads[0].id, heads[1].id)))
    return found


def charges(coloring: Coloring) -> Dict[int, List[int]]:
    """Head id -> blank edges it is a head of"""
    charged: Dict[int, List[int]] = {}
    for blank in coloring.blank_edges():
        for _, _, pair in blank_heads(coloring, blank):
            for head in pair:
                charged.setdefault(head, []).append(blank)
    return charged


def _head_flip_step(coloring: Coloring) -> bool:
    for head, blanks in sorted(charges(coloring).items()):
        distinct = sorted(set(blanks))
        if len(distinct) != 2 or coloring.graph.is_double(head):
            continue
        color = coloring.color_of(head)
        snap = coloring.snapshot()
        coloring.set_color(head, color.other)
        for blank in distinct:
            coloring.set_color(blank, color)
        if coloring.locally_valid([head] + distinct):
            coloring.report.stats['head_flips'] += 1
            logger.debug("Flipped head %s to color blanks %s", head, distinct)
            return True
        coloring.restore(snap)
    return False


def _cycle_step(coloring: Coloring) -> bool:
    H = coloring.graph
    on_cycle: Dict[int, int] = {}
    for color in COLORS:
        for index, cycle in enumerate(monochromatic_cycles(H, coloring.color_class(color))):
            for e in cycle:
                on_cycle[e] = index
    if not on_cycle:
        return False
    charged = charges(coloring)
    for blank in coloring.blank_edges():
        for p, color, (h1, h2) in blank_heads(coloring, blank):
            if h1 not in on_cycle or on_cycle.get(h1) != on_cycle.get(h2):
                continue
            for head in sorted((h1, h2), key=lambda e: (H.edge(e).weight, e)):
                if H.is_double(head) or set(charged.get(head, ())) != {blank}:
                    continue
                if coloring.blank_at(H.edge(head).other(p)):
                    continue
                snap = coloring.snapshot()
                coloring.set_color(blank, color)
                coloring.set_color(head, Color.BLANK)
                if coloring.locally_valid([blank, head]):
                    coloring.report.stats['cycle_eliminations'] += 1
                    return True
                coloring.restore(snap)
    return False


def preprocess(H: Multigraph, coloring: Coloring) -> Coloring:
    """Flip doubly charged heads while possible, then break one colored cycle, and repeat"""
    cycles = sum(len(monochromatic_cycles(H, coloring.color_class(c))) for c in COLORS)
    bound = len(coloring.blank_edges()) + cycles
    iterations = 0
    while iterations < bound + H.num_edges:
        if _head_flip_step(coloring) or _cycle_step(coloring):
            iterations += 1
            continue
        break
    coloring.report.stats['preprocess_iterations'] = iterations
    coloring.report.stats['preprocess_bound'] = bound
    if iterations > bound:
        coloring.report.event(f"preprocessing took {iterations} steps, above the bound {bound}")
    return coloring


# ==================== SAFETY NET ====================

def break_short_cycles(H: Multigraph, coloring: Coloring) -> int:
    """Blank (or remove) the lightest edge of every monochromatic cycle shorter than five"""
    broken = 0
    while True:
        short = find_short_monochromatic_cycles(H, coloring)
        if not short:
            return broken
        cycle = sorted(short[0], key=lambda e: (H.edge(e).weight, e))
        for edge_id in cycle:
            edge = H.edge(edge_id)
            if not coloring.blank_at(edge.u) and not coloring.blank_at(edge.v):
                coloring.set_color(edge_id, Color.BLANK)
                coloring.report.event(f"short monochromatic cycle {short[0]}: edge {edge_id} blanked")
                break
        else:
            coloring.remove(cycle[0])
            coloring.report.stats['forced_removals'] += 1
            coloring.report.event(f"short monochromatic cycle {short[0]}: edge {cycle[0]} removed")
        broken += 1


def check_well_coloring(H: Multigraph, coloring: Coloring) -> List[str]:
    problems = []
    for v in H.vertices:
        for color in COLORS:
            if coloring.count(v, color) > 2:
                problems.append(f"{color.value} degree {coloring.count(v, color)} at {v}")
        if coloring.count(v, Color.BLANK) > 1:
            problems.append(f"blank edges meet at {v}")
    problems.extend(f"short monochromatic cycle {c}" for c in find_short_monochromatic_cycles(H, coloring))
    return problems


def color_well(H: Multigraph, debug_checks: bool = False) -> Tuple[Coloring, ColoringReport]:
    coloring = disable_two_cycles(H)
    disable_caps(H, coloring, debug_checks)
    disable_squares(H, coloring, debug_checks)
    complete_greedily(H, coloring)
    preprocess(H, coloring)
    coloring.report.stats['safety_breaks'] = break_short_cycles(H, coloring)

    problems = check_well_coloring(H, coloring)
    for problem in problems:
        coloring.report.event(f"coloring check: {problem}")
    coloring.report.stats['blank_edges'] = len(coloring.blank_edges())
    logger.info("🎨 Colored %d edges, %d blank, %d removed",
                H.num_edges - len(coloring.blank_edges()) - len(coloring.removed),
                len(coloring.blank_edges()), len(coloring.removed))
    return coloring, coloring.report


__all__ = [
    'MIN_CYCLE',
    'Coloring',
    'ColoringReport',
    'ActiveSquare',
    'short_cycles',
    'find_short_monochromatic_cycles',
    'active_edges',
    'invariant2_violations',
    'disable_two_cycles',
    'disable_caps',
    'disable_squares',
    'complete_greedily',
    'blank_heads',
    'charges',
    'preprocess',
    'break_short_cycles',
    'check_well_coloring',
    'color_well',
]
