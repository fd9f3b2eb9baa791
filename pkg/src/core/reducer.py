"""
Triangle and cap eliminations with invertible transforms.
FILE: src/core/reducer.py

Each elimination turns a 4-regular multigraph J into a smaller K of equal
weight and records what is needed to turn a removal set E'_K plus a
2-path-coloring of K minus E'_K back into the same kind of solution on J.
Every lift is validated; when the case analysis does not give a valid
coloring within budget, the local edges are searched exhaustively.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from typing import Any, Dict, FrozenSet, Iterator, List, Mapping, Optional, Set, Tuple
import logging

from networkx.utils import UnionFind

from .errors import InvalidInputColoring, PreconditionViolation
from .graph_data import COLORS, Color, Edge, Multigraph, format_weight

logger = logging.getLogger(__name__)

REMOVED = None  # local assignment value for an edge that goes into E'

Assignment = Dict[int, Optional[Color]]


class TransformKind(Enum):
    DOUBLE_EDGE_TRIANGLE = "double-edge-triangle"
    SINGLE_EDGE_TRIANGLE = "single-edge-triangle"
    CAP = "cap"


@dataclass
class Transform:
    """One elimination J -> K.

    removed holds the J edges that do not survive in K, added the K edges
    that do not exist in J, both keyed by their role in the construction.
    """
    kind: TransformKind
    roles: Dict[str, int]
    removed: Dict[str, Edge]
    added: Dict[str, Edge]
    before: Multigraph = field(repr=False, compare=False)
    removed_vertices: Tuple[int, ...] = ()

    @property
    def weight_delta(self) -> Fraction:
        return (sum((e.weight for e in self.added.values()), Fraction(0))
                - sum((e.weight for e in self.removed.values()), Fraction(0)))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind.value,
            'roles': dict(self.roles),
            'removed': {k: [e.id, e.u, e.v, format_weight(e.weight)] for k, e in sorted(self.removed.items())},
            'added': {k: [e.id, e.u, e.v, format_weight(e.weight)] for k, e in sorted(self.added.items())},
        }


@dataclass
class TransformStack:
    transforms: List[Transform] = field(default_factory=list)

    def push(self, transform: Transform) -> None:
        self.transforms.append(transform)

    def __len__(self) -> int:
        return len(self.transforms)

    def __iter__(self) -> Iterator[Transform]:
        return iter(self.transforms)

    def replay_order(self) -> List[Transform]:
        return list(reversed(self.transforms))


# ==================== STRUCTURE QUERIES ====================

def _touches_double(graph: Multigraph, v: int) -> bool:
    return any(graph.multiplicity(v, x) == 2 for x in graph.neighbors(v))


def triangles(graph: Multigraph) -> Iterator[Tuple[int, int, int]]:
    """Vertex triangles in lexicographic order"""
    for a in graph.vertices:
        higher = [x for x in graph.neighbors(a) if x > a]
        for b, c in combinations(higher, 2):
            if graph.multiplicity(b, c):
                yield (a, b, c)


def _double_count(graph: Multigraph, tri: Tuple[int, int, int]) -> int:
    a, b, c = tri
    return sum(graph.multiplicity(x, y) == 2 for x, y in ((a, b), (b, c), (a, c)))


def _leaves_small_component(before: Multigraph, after: Multigraph, v: int, min_component: int) -> bool:
    """Some component of `after` carved out of the component of v in `before` is below min_component"""
    seen: Set[int] = set()
    for x in sorted(before.component_of(v)):
        if x in seen or not after.has_vertex(x):
            continue
        piece = after.component_of(x)
        if len(piece) < min_component:
            return True
        seen |= piece
    return False


# ==================== DOUBLE-EDGE TRIANGLE ====================

def eliminate_double_edge_triangle(J: Multigraph, T: Tuple[int, int, int]) -> Tuple[Multigraph, Transform]:
    """Shrink the double edge A-C of a triangle with exactly one double edge"""
    if len(set(T)) != 3 or _double_count(J, T) != 1 or any(
        J.multiplicity(x, y) == 0 for x, y in combinations(T, 2)
    ):
        raise PreconditionViolation(f"Triangle {T} does not have exactly one double edge")
    for x, y in combinations(T, 2):
        if J.multiplicity(x, y) == 2:
            a, c = min(x, y), max(x, y)
    b = next(v for v in T if v not in (a, c))

    e1a, e1b = J.edges_between(a, c)
    (e2,) = J.edges_between(a, b)
    (e3,) = J.edges_between(c, b)
    outside_a = [e for e in J.incident(a) if e.id not in (e1a.id, e1b.id, e2.id)]
    outside_c = [e for e in J.incident(c) if e.id not in (e1a.id, e1b.id, e3.id)]
    if len(outside_a) != 1 or len(outside_c) != 1:
        raise PreconditionViolation(f"Triangle {T} does not sit in a 4-regular neighbourhood")
    g, f = outside_a[0], outside_c[0]

    K = J.copy()
    for edge in (e1a, e1b, e2, e3, f):
        K.remove_edge(edge.id)
    K.remove_vertex(c)
    x = f.other(c)
    K.add_edge(a, x, f.weight, edge_id=f.id)
    e4 = K.add_edge(a, b, e1a.weight + e2.weight)
    e5 = K.add_edge(a, b, e1b.weight + e3.weight)

    transform = Transform(
        kind=TransformKind.DOUBLE_EDGE_TRIANGLE,
        roles={'A': a, 'B': b, 'C': c, 'X': x, 'Y': g.other(a), 'g': g.id, 'f': f.id},
        removed={'e1a': e1a, 'e1b': e1b, 'e2': e2, 'e3': e3},
        added={'e4': e4, 'e5': e5},
        before=J.copy(),
        removed_vertices=(c,),
    )
    logger.debug("Shrunk double edge %s-%s of triangle %s", a, c, T)
    return K, transform


# ==================== SINGLE-EDGE TRIANGLE ====================

def _single_edge_orientation(J: Multigraph, T: Tuple[int, int, int]) -> Optional[Tuple[int, int, int, bool]]:
    """(A, B, C, variant) for a removable triangle of single edges, or None"""
    w = lambda x, y: J.edges_between(x, y)[0].weight
    for c in T:
        if _touches_double(J, c):
            continue
        a, b = [v for v in T if v != c]
        # orient so that a = w(BC) <= b = w(AC)
        if w(b, c) > w(a, c):
            a, b = b, a
        if w(a, b) >= w(b, c):
            return a, b, c, False
        if _touches_double(J, a) and _touches_double(J, b):
            return a, b, c, True
    return None


def eliminate_single_edge_triangle(J: Multigraph, T: Tuple[int, int, int]) -> Tuple[Multigraph, Transform]:
    """Remove the vertex C of an all-single triangle, joining D-E and doubling A-B"""
    if len(set(T)) != 3 or any(J.multiplicity(x, y) != 1 for x, y in combinations(T, 2)):
        raise PreconditionViolation(f"Triangle {T} is not made of single edges")
    orientation = _single_edge_orientation(J, T)
    if orientation is None:
        raise PreconditionViolation(f"No vertex of {T} qualifies for removal")
    a, b, c, variant = orientation

    (ab,) = J.edges_between(a, b)
    (ac,) = J.edges_between(a, c)
    (bc,) = J.edges_between(b, c)
    outside = [e for e in J.incident(c) if e.id not in (ac.id, bc.id)]
    if len(outside) != 2:
        raise PreconditionViolation(f"Vertex {c} is not 4-regular")
    cd, ce = sorted(outside, key=lambda e: (e.weight, e.id))
    d, e = cd.other(c), ce.other(c)
    if d == e or J.multiplicity(d, e) >= 2:
        raise PreconditionViolation(f"Joining {d}-{e} would exceed multiplicity 2")

    K = J.copy()
    for edge in (ab, ac, bc, cd, ce):
        K.remove_edge(edge.id)
    K.remove_vertex(c)
    de = K.add_edge(d, e, cd.weight)
    ab_cb = K.add_edge(a, b, ab.weight + ac.weight)
    ab_av = K.add_edge(a, b, bc.weight + ce.weight)

    transform = Transform(
        kind=TransformKind.SINGLE_EDGE_TRIANGLE,
        roles={'A': a, 'B': b, 'C': c, 'D': d, 'E': e, 'variant': int(variant)},
        removed={'AB': ab, 'AC': ac, 'BC': bc, 'CD': cd, 'CE': ce},
        added={'DE': de, 'AB_cb': ab_cb, 'AB_av': ab_av},
        before=J.copy(),
        removed_vertices=(c,),
    )
    logger.debug("Removed vertex %s of single-edge triangle %s", c, T)
    return K, transform


# ==================== CAPS ====================

@dataclass(frozen=True)
class Cap:
    """Triangle with two double edges or square with three; s is its single edge"""
    vertices: Tuple[int, ...]    # v1, (x, (y,)) v2 along the doubles
    single: int                  # edge id of s = v1-v2
    ribbons: Tuple[int, int]     # edge ids at v1 and v2

    @property
    def is_square(self) -> bool:
        return len(self.vertices) == 4


def find_caps(graph: Multigraph) -> List[Cap]:
    """All caps in deterministic order; a ribbon may appear in two caps"""
    caps = []
    seen: Set[FrozenSet[int]] = set()
    for s in graph.edges():
        if graph.is_double(s.id):
            continue
        for v1, v2 in ((s.u, s.v), (s.v, s.u)):
            for x in graph.neighbors(v1):
                if x == v2 or graph.multiplicity(v1, x) != 2:
                    continue
                paths = []
                if graph.multiplicity(x, v2) == 2:
                    paths.append((v1, x, v2))
                for y in graph.neighbors(x):
                    if y not in (v1, v2) and graph.multiplicity(x, y) == 2 and graph.multiplicity(y, v2) == 2:
                        paths.append((v1, x, y, v2))
                for path in paths:
                    key = frozenset(path) | {(-1 - s.id)}
                    if key in seen:
                        continue
                    ribbons = []
                    for end in (v1, v2):
                        others = [e.id for e in graph.incident(end) if e.id != s.id and not graph.is_double(e.id)]
                        if len(others) != 1:
                            break
                        ribbons.append(others[0])
                    if len(ribbons) != 2:
                        continue
                    seen.add(key)
                    caps.append(Cap(vertices=path, single=s.id, ribbons=(ribbons[0], ribbons[1])))
    return caps


def cap_is_eliminable(graph: Multigraph, cap: Cap) -> bool:
    """Square cap whose ribbons share no vertex and are not joined by a double edge"""
    if not cap.is_square:
        return False
    r1, r2 = graph.edge(cap.ribbons[0]), graph.edge(cap.ribbons[1])
    p, q = r1.other(cap.vertices[0]), r2.other(cap.vertices[-1])
    if p == q or {p, q} & set(cap.vertices):
        return False
    return graph.multiplicity(p, q) < 2


def eliminate_cap(J: Multigraph, cap: Cap) -> Tuple[Multigraph, Transform]:
    """Contract the middle double edge x=y of a square cap into x"""
    if not cap_is_eliminable(J, cap):
        raise PreconditionViolation(f"Cap {cap.vertices} cannot be eliminated")
    v1, x, y, v2 = cap.vertices
    a1, a2 = J.edges_between(v1, x)
    b1, b2 = J.edges_between(x, y)
    c1, c2 = J.edges_between(y, v2)

    K = J.copy()
    for edge in (a1, a2, b1, b2, c1, c2):
        K.remove_edge(edge.id)
    K.remove_vertex(y)
    a1k = K.add_edge(v1, x, a1.weight + c1.weight)
    a2k = K.add_edge(v1, x, a2.weight + c2.weight)
    b1k = K.add_edge(x, v2, b1.weight)
    b2k = K.add_edge(x, v2, b2.weight)

    transform = Transform(
        kind=TransformKind.CAP,
        roles={'v1': v1, 'x': x, 'y': y, 'v2': v2},
        removed={'a1': a1, 'a2': a2, 'b1': b1, 'b2': b2, 'c1': c1, 'c2': c2},
        added={'a1k': a1k, 'a2k': a2k, 'b1k': b1k, 'b2k': b2k},
        before=J.copy(),
        removed_vertices=(y,),
    )
    logger.debug("Contracted cap %s", cap.vertices)
    return K, transform


# ==================== FIXPOINT ====================

@dataclass
class ReductionResult:
    graph: Multigraph
    stack: TransformStack
    exempt: List[Dict[str, Any]] = field(default_factory=list)

    def counts(self) -> Dict[str, int]:
        tally = Counter(t.kind.value for t in self.stack)
        return {kind.value: tally.get(kind.value, 0) for kind in TransformKind}


def _eliminations(graph: Multigraph) -> Iterator[Tuple[Tuple[Any, ...], str, Any, Any]]:
    """Applicable eliminations in priority order as (key, kind, function, target)"""
    for tri in triangles(graph):
        if _double_count(graph, tri) == 1:
            yield ('tri1', tri), TransformKind.DOUBLE_EDGE_TRIANGLE.value, eliminate_double_edge_triangle, tri
    for tri in triangles(graph):
        if all(graph.multiplicity(x, y) == 1 for x, y in combinations(tri, 2)):
            orientation = _single_edge_orientation(graph, tri)
            if orientation is None:
                continue
            c = orientation[2]
            others = [e.other(c) for e in graph.incident(c) if e.other(c) not in tri]
            if len(others) != 2 or others[0] == others[1] or graph.multiplicity(*others) >= 2:
                continue
            yield ('tri0', tri), TransformKind.SINGLE_EDGE_TRIANGLE.value, eliminate_single_edge_triangle, tri
    for cap in find_caps(graph):
        if cap_is_eliminable(graph, cap):
            yield ('cap', cap.vertices), TransformKind.CAP.value, eliminate_cap, cap


def reduce_to_fixpoint(H: Multigraph, min_component: int = 5) -> ReductionResult:
    """Apply eliminations lowest-vertex-first until none applies.

    An elimination that would leave any piece of its component with fewer
    than `min_component` vertices is skipped and reported as exempt, so
    every component of the result keeps at least that many vertices when
    the input does.
    """
    graph = H.copy()
    stack = TransformStack()
    exempt: Dict[Any, Dict[str, Any]] = {}
    blocked: Set[Any] = set()
    while True:
        for key, kind, eliminate, target in _eliminations(graph):
            if key in blocked:
                continue
            vertices = target.vertices if isinstance(target, Cap) else target
            try:
                reduced, transform = eliminate(graph, target)
            except PreconditionViolation as e:
                logger.debug("Skipping %s at %s: %s", kind, vertices, e)
                blocked.add(key)
                continue
            if _leaves_small_component(graph, reduced, vertices[0], min_component):
                exempt.setdefault(key, {'kind': kind, 'vertices': list(vertices)})
                continue
            if reduced.total_weight() != graph.total_weight():
                raise PreconditionViolation(f"{kind} changed the total weight")
            graph = reduced
            stack.push(transform)
            break
        else:
            break

    result = ReductionResult(graph=graph, stack=stack, exempt=list(exempt.values()))
    logger.info("🔄 Reducer: %d transforms %s, %d exempt", len(stack), result.counts(), len(result.exempt))
    return result


# ==================== LIFTING ====================

@dataclass
class LiftOutcome:
    removed: Set[int]
    colors: Dict[int, Color]
    used_search: bool = False
    overspend: Fraction = Fraction(0)


class _LocalChecker:
    """Validates assignments of a few local edges against fixed base color classes"""

    def __init__(self, graph: Multigraph, base_colors: Mapping[int, Color]):
        self.graph = graph
        self.degree = {c: Counter() for c in COLORS}
        self.root: Dict[Color, Dict[int, Any]] = {}
        self.problems: List[str] = []
        for color in COLORS:
            forest = UnionFind()
            for edge_id, assigned in base_colors.items():
                if assigned is not color:
                    continue
                edge = graph.edge(edge_id)
                self.degree[color][edge.u] += 1
                self.degree[color][edge.v] += 1
                if forest[edge.u] == forest[edge.v]:
                    self.problems.append(f"{color.value} cycle through edge {edge_id}")
                forest.union(edge.u, edge.v)
            self.root[color] = {v: forest[v] for v in graph.vertices}
        for color in COLORS:
            self.problems.extend(
                f"{color.value} degree {d} at {v}" for v, d in self.degree[color].items() if d > 2
            )

    def valid(self, assignment: Mapping[int, Optional[Color]]) -> bool:
        for color in COLORS:
            extra: Counter = Counter()
            merged = UnionFind()
            for edge_id, assigned in assignment.items():
                if assigned is not color:
                    continue
                edge = self.graph.edge(edge_id)
                extra[edge.u] += 1
                extra[edge.v] += 1
                ru, rv = self.root[color][edge.u], self.root[color][edge.v]
                if merged[ru] == merged[rv]:
                    return False
                merged.union(ru, rv)
            if any(self.degree[color][v] + k > 2 for v, k in extra.items()):
                return False
        return True


def _removed_weight(graph: Multigraph, assignment: Mapping[int, Optional[Color]]) -> Fraction:
    return sum((graph.edge(e).weight for e, c in assignment.items() if c is REMOVED), Fraction(0))


def _double_edge_candidates(t: Transform, k_state: Mapping[str, Optional[Color]], base: Mapping[int, Color]) -> List[Assignment]:
    e1a, e1b, e2, e3 = (t.removed[k].id for k in ('e1a', 'e1b', 'e2', 'e3'))
    c4, c5 = k_state['e4'], k_state['e5']
    g_color, f_color = base.get(t.roles['g']), base.get(t.roles['f'])
    if c4 is not REMOVED and c5 is not REMOVED:
        candidates = []
        if g_color is not None:
            candidates.append({e1a: g_color, e3: g_color, e1b: g_color.other, e2: g_color.other})
        if f_color is not None:
            candidates.append({e1b: f_color, e2: f_color, e1a: f_color.other, e3: f_color.other})
        candidates.append({e1a: c4, e2: c4, e1b: c5, e3: c5})
        return candidates
    if c4 is REMOVED and c5 is not REMOVED:
        return [{e1a: REMOVED, e2: REMOVED, e1b: c5, e3: c5}]
    if c5 is REMOVED and c4 is not REMOVED:
        return [{e1b: REMOVED, e3: REMOVED, e1a: c4, e2: c4}]
    return [{e1a: REMOVED, e1b: REMOVED, e2: REMOVED, e3: REMOVED}]


def _count_at(graph: Multigraph, base: Mapping[int, Color], v: int, color: Color) -> int:
    return sum(1 for e in graph.incident(v) if base.get(e.id) is color)


def _single_edge_candidates(t: Transform, k_state: Mapping[str, Optional[Color]], base: Mapping[int, Color]) -> List[Assignment]:
    J = t.before
    ab, ac, bc, cd, ce = (t.removed[k].id for k in ('AB', 'AC', 'BC', 'CD', 'CE'))
    a, d, e = t.roles['A'], t.roles['D'], t.roles['E']
    z, x1, y2 = k_state['DE'], k_state['AB_cb'], k_state['AB_av']

    if z is not REMOVED and x1 is not REMOVED and y2 is not REMOVED:
        return [{cd: z, ce: z, ab: z, ac: z.other, bc: z.other}]

    if z is REMOVED and x1 is not REMOVED and y2 is not REMOVED:
        candidates = []
        for end, keep, drop in ((e, ce, cd), (d, cd, ce)):
            for w in COLORS:
                if _count_at(J, base, end, w) <= 1:
                    candidates.append({keep: w, drop: REMOVED, ab: w, ac: w.other, bc: w.other})
        return candidates

    if z is not REMOVED and x1 is REMOVED and y2 is REMOVED:
        return [{cd: z, ce: z, ab: REMOVED, ac: REMOVED, bc: REMOVED}]

    if z is not REMOVED and x1 is not REMOVED and y2 is REMOVED:
        if x1 is not z:
            return [
                {ab: x1, ac: x1, cd: z, bc: REMOVED, ce: REMOVED},
                {ab: x1, ac: z, cd: z, bc: REMOVED, ce: REMOVED},
                {ab: x1, ac: z, ce: z, bc: REMOVED, cd: REMOVED},
            ]
        return [
            {ab: x1, ac: x1.other, cd: z, bc: REMOVED, ce: REMOVED},
            {ab: z, ac: z, ce: z, bc: REMOVED, cd: REMOVED},
            {ab: z, ac: z, cd: z, bc: REMOVED, ce: REMOVED},
        ]

    if z is not REMOVED and x1 is REMOVED and y2 is not REMOVED:
        return [
            {ab: y2, cd: z, ce: z, ac: REMOVED, bc: REMOVED},
            {ab: y2, cd: z, ce: z, ac: REMOVED, bc: z.other},
        ]
    return []


def _cap_candidates(t: Transform, k_state: Mapping[str, Optional[Color]], base: Mapping[int, Color]) -> List[Assignment]:
    r = {k: e.id for k, e in t.removed.items()}
    return [{
        r['a1']: k_state['a1k'], r['c1']: k_state['a1k'],
        r['a2']: k_state['a2k'], r['c2']: k_state['a2k'],
        r['b1']: k_state['b1k'], r['b2']: k_state['b2k'],
    }]


_CANDIDATES = {
    TransformKind.DOUBLE_EDGE_TRIANGLE: _double_edge_candidates,
    TransformKind.SINGLE_EDGE_TRIANGLE: _single_edge_candidates,
    TransformKind.CAP: _cap_candidates,
}


def lift_coloring(
    t: Transform, removed_K: Set[int], colors_K: Mapping[int, Color]
) -> LiftOutcome:
    """Turn a solution on K into one on J with w(E'_J) <= w(E'_K) whenever possible"""
    J = t.before
    local_ids = sorted(e.id for e in t.removed.values())
    local = set(local_ids)

    base: Dict[int, Color] = {}
    removed_J: Set[int] = set()
    for edge in J.edges():
        if edge.id in local:
            continue
        if edge.id in removed_K:
            removed_J.add(edge.id)
            continue
        color = colors_K.get(edge.id)
        if color not in COLORS:
            raise InvalidInputColoring(f"Kept edge {edge.id} has no color in the reduced solution")
        base[edge.id] = color

    checker = _LocalChecker(J, base)
    if checker.problems:
        raise InvalidInputColoring(f"Reduced coloring is not a 2-path-coloring: {checker.problems[0]}")

    k_state: Dict[str, Optional[Color]] = {}
    for role, edge in t.added.items():
        if edge.id in removed_K:
            k_state[role] = REMOVED
        else:
            color = colors_K.get(edge.id)
            if color not in COLORS:
                raise InvalidInputColoring(f"Kept edge {edge.id} has no color in the reduced solution")
            k_state[role] = color
    budget = sum((e.weight for role, e in t.added.items() if k_state[role] is REMOVED), Fraction(0))

    chosen: Optional[Assignment] = None
    for candidate in _CANDIDATES[t.kind](t, k_state, base):
        if set(candidate) == local and checker.valid(candidate) and _removed_weight(J, candidate) <= budget:
            chosen = candidate
            break

    used_search = False
    if chosen is None:
        used_search = True
        best_weight = None
        for values in product((Color.RED, Color.BLUE, REMOVED), repeat=len(local_ids)):
            candidate = dict(zip(local_ids, values))
            weight = _removed_weight(J, candidate)
            if best_weight is not None and weight >= best_weight:
                continue
            if checker.valid(candidate):
                chosen, best_weight = candidate, weight

    overspend = max(Fraction(0), _removed_weight(J, chosen) - budget)
    if overspend:
        logger.warning("⚠️ Lift of %s spends %s more than the reduced removal", t.kind.value, format_weight(overspend))

    colors_J = dict(base)
    for edge_id, color in chosen.items():
        if color is REMOVED:
            removed_J.add(edge_id)
        else:
            colors_J[edge_id] = color
    return LiftOutcome(removed=removed_J, colors=colors_J, used_search=used_search, overspend=overspend)


@dataclass
class LiftReport:
    searches: int = 0
    overspend: Fraction = Fraction(0)
    events: List[str] = field(default_factory=list)


def lift_solution(
    stack: TransformStack, removed_K: Set[int], colors_K: Mapping[int, Color]
) -> Tuple[Set[int], Dict[int, Color], LiftReport]:
    """Replay lift_coloring over the stack in reverse application order"""
    removed, colors = set(removed_K), dict(colors_K)
    report = LiftReport()
    for transform in stack.replay_order():
        outcome = lift_coloring(transform, removed, colors)
        removed, colors = outcome.removed, outcome.colors
        if outcome.used_search:
            report.searches += 1
        if outcome.overspend:
            report.overspend += outcome.overspend
            report.events.append(
                f"lift of {transform.kind.value} at {transform.roles} overspent {format_weight(outcome.overspend)}"
            )
    return removed, colors, report


__all__ = [
    'TransformKind',
    'Transform',
    'TransformStack',
    'Cap',
    'ReductionResult',
    'LiftOutcome',
    'LiftReport',
    'triangles',
    'find_caps',
    'cap_is_eliminable',
    'eliminate_double_edge_triangle',
    'eliminate_single_edge_triangle',
    'eliminate_cap',
    'reduce_to_fixpoint',
    'lift_coloring',
    'lift_solution',
]
