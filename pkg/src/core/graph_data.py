"""
Core graph data structures for the Max-TSP solver.
FILE: src/core/graph_data.py

Instances are complete graphs with exact rational weights. Multigraphs carry
explicit edge ids so the two copies of a double edge stay distinguishable.
Cycle covers, edge multisets and the alternating-weight arithmetic used by
every later stage live here as well.
"""

from collections import Counter
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from enum import Enum
from fractions import Fraction
from functools import cached_property
from itertools import combinations, permutations
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union
import logging
import math

import networkx as nx

from .errors import DegreeViolation, InstanceFormatError, StructureViolation

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]
WeightLike = Union[int, str, float, Decimal, Fraction]


# ==================== WEIGHT HELPERS ====================

def to_weight(value: WeightLike) -> Fraction:
    """Convert an integer, decimal string, Decimal or Fraction into an exact Fraction"""
    if isinstance(value, bool):
        raise InstanceFormatError(f"Boolean is not a weight: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InstanceFormatError(f"Weight is not finite: {value!r}")
        # repr keeps the shortest decimal that round-trips
        return Fraction(repr(value))
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise InstanceFormatError(f"Weight is not finite: {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            try:
                number = Decimal(text)
            except (InvalidOperation, ValueError) as e:
                raise InstanceFormatError(f"Not a decimal weight: {value!r}") from e
            if not number.is_finite():
                raise InstanceFormatError(f"Weight is not finite: {value!r}")
            try:
                return Fraction(number)
            except (OverflowError, ValueError) as e:
                raise InstanceFormatError(f"Not a decimal weight: {value!r}") from e
    raise InstanceFormatError(f"Unsupported weight type {type(value).__name__}: {value!r}")


def format_weight(value: Fraction) -> str:
    """Exact decimal string when the denominator divides a power of ten, otherwise 'p/q'"""
    value = Fraction(value)
    denominator = value.denominator
    twos = fives = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    if denominator != 1:
        return f"{value.numerator}/{value.denominator}"

    places = max(twos, fives)
    scaled = value * (10 ** places)
    digits = str(abs(scaled.numerator))
    sign = '-' if value < 0 else ''
    if places == 0:
        return f"{sign}{digits}"
    digits = digits.rjust(places + 1, '0')
    whole, frac = digits[:-places], digits[-places:].rstrip('0')
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"


def pair_key(u: int, v: int) -> Pair:
    """Unordered vertex pair as a sorted tuple"""
    return (u, v) if u <= v else (v, u)


class Color(Enum):
    """Edge colors of a (partial) 2-path-coloring"""
    RED = "red"
    BLUE = "blue"
    BLANK = "blank"

    @property
    def other(self) -> 'Color':
        if self is Color.RED:
            return Color.BLUE
        if self is Color.BLUE:
            return Color.RED
        return Color.BLANK


COLORS = (Color.RED, Color.BLUE)


# ==================== INSTANCE ====================

@dataclass(frozen=True)
class Instance:
    """Complete graph on n vertices with a symmetric nonnegative weight matrix"""
    n: int
    weights: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        """Validate the matrix after initialization"""
        if self.n < 2:
            raise InstanceFormatError(f"Instance needs at least 2 vertices, got {self.n}")
        if len(self.weights) != self.n:
            raise InstanceFormatError(f"Expected {self.n} rows, got {len(self.weights)}")
        for i, row in enumerate(self.weights):
            if len(row) != self.n:
                raise InstanceFormatError(f"Row {i} has {len(row)} entries, expected {self.n}")
        for i in range(self.n):
            if self.weights[i][i] != 0:
                raise InstanceFormatError(f"Diagonal entry ({i},{i}) must be zero")
            for j in range(i + 1, self.n):
                if self.weights[i][j] != self.weights[j][i]:
                    raise InstanceFormatError(
                        f"Matrix is not symmetric at ({i},{j}): "
                        f"{format_weight(self.weights[i][j])} != {format_weight(self.weights[j][i])}"
                    )
                if self.weights[i][j] < 0:
                    raise InstanceFormatError(f"Negative weight at ({i},{j})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[WeightLike]]) -> 'Instance':
        """Build an instance from any nested sequence of weights"""
        converted = tuple(tuple(to_weight(x) for x in row) for row in rows)
        return cls(n=len(converted), weights=converted)

    @classmethod
    def from_pairs(cls, n: int, weights: Dict[Pair, WeightLike]) -> 'Instance':
        """Build an instance from {(u, v): weight}; missing pairs weigh zero"""
        matrix = [[Fraction(0)] * n for _ in range(n)]
        for (u, v), w in weights.items():
            matrix[u][v] = matrix[v][u] = to_weight(w)
        return cls(n=n, weights=tuple(tuple(row) for row in matrix))

    def w(self, u: int, v: int) -> Fraction:
        return self.weights[u][v]

    @property
    def vertices(self) -> range:
        return range(self.n)

    def pairs(self) -> Iterator[Pair]:
        """All unordered vertex pairs in lexicographic order"""
        return combinations(range(self.n), 2)

    def cycle_weight(self, cycle: Sequence[int]) -> Fraction:
        """Weight of the closed walk through the given vertex sequence"""
        k = len(cycle)
        return sum((self.weights[cycle[i]][cycle[(i + 1) % k]] for i in range(k)), Fraction(0))

    def pair_weight(self, pairs: Iterable[Pair]) -> Fraction:
        return sum((self.weights[u][v] for u, v in pairs), Fraction(0))

    def denominator_lcm(self) -> int:
        """Least common multiple of all weight denominators"""
        lcm = 1
        for u, v in self.pairs():
            d = self.weights[u][v].denominator
            lcm = lcm * d // math.gcd(lcm, d)
        return lcm

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'weights': [[format_weight(x) for x in row] for row in self.weights]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Instance':
        return cls.from_rows(data['weights'])


# ==================== MULTIGRAPH ====================

@dataclass(frozen=True)
class Edge:
    """A single edge with a stable id"""
    id: int
    u: int
    v: int
    weight: Fraction

    @property
    def pair(self) -> Pair:
        return pair_key(self.u, self.v)

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise StructureViolation(f"Vertex {x} is not an endpoint of edge {self.id}")

    def touches(self, x: int) -> bool:
        return x == self.u or x == self.v

    def __str__(self) -> str:
        return f"e{self.id}({self.u}-{self.v}, {format_weight(self.weight)})"


class Multigraph:
    """Loopless multigraph with at most two edges per vertex pair.

    Edge ids are unique over the lifetime of a graph and of its copies, so a
    graph derived by copy() never reuses an id of its ancestor.
    """

    MAX_MULTIPLICITY = 2

    def __init__(self, vertices: Iterable[int] = (), auxiliary: bool = False):
        self.auxiliary = auxiliary
        self._edges: Dict[int, Edge] = {}
        self._incident: Dict[int, List[int]] = {v: [] for v in vertices}
        self._pairs: Dict[Pair, List[int]] = {}
        self._next_id = 0

    @classmethod
    def from_edges(
        cls, vertices: Iterable[int], edges: Iterable[Tuple[int, int, WeightLike]],
        auxiliary: bool = False
    ) -> 'Multigraph':
        graph = cls(vertices, auxiliary=auxiliary)
        for u, v, w in edges:
            graph.add_edge(u, v, to_weight(w))
        return graph

    def copy(self) -> 'Multigraph':
        clone = Multigraph(auxiliary=self.auxiliary)
        clone._edges = dict(self._edges)
        clone._incident = {v: list(ids) for v, ids in self._incident.items()}
        clone._pairs = {p: list(ids) for p, ids in self._pairs.items()}
        clone._next_id = self._next_id
        return clone

    # ---- vertices ----

    @property
    def vertices(self) -> List[int]:
        return sorted(self._incident)

    def has_vertex(self, v: int) -> bool:
        return v in self._incident

    def add_vertex(self, v: int) -> None:
        self._incident.setdefault(v, [])

    def remove_vertex(self, v: int) -> None:
        if self._incident.get(v):
            raise StructureViolation(f"Vertex {v} still has {len(self._incident[v])} edges")
        self._incident.pop(v, None)

    @property
    def num_vertices(self) -> int:
        return len(self._incident)

    # ---- edges ----

    @property
    def next_edge_id(self) -> int:
        return self._next_id

    def add_edge(self, u: int, v: int, weight: WeightLike, edge_id: Optional[int] = None) -> Edge:
        """Add an edge, enforcing looplessness, multiplicity and sign rules"""
        if u == v:
            raise StructureViolation(f"Loop at vertex {u}")
        for x in (u, v):
            if x not in self._incident:
                raise StructureViolation(f"Unknown vertex {x}")
        weight = to_weight(weight)
        if weight < 0 and not self.auxiliary:
            raise StructureViolation(f"Negative weight {format_weight(weight)} on {u}-{v}")
        key = pair_key(u, v)
        if len(self._pairs.get(key, ())) >= self.MAX_MULTIPLICITY:
            raise StructureViolation(f"Pair {key} already has {self.MAX_MULTIPLICITY} edges")

        if edge_id is None:
            edge_id = self._next_id
        elif edge_id in self._edges:
            raise StructureViolation(f"Edge id {edge_id} already in use")
        self._next_id = max(self._next_id, edge_id + 1)

        edge = Edge(edge_id, u, v, weight)
        self._edges[edge_id] = edge
        self._incident[u].append(edge_id)
        self._incident[v].append(edge_id)
        self._pairs.setdefault(key, []).append(edge_id)
        return edge

    def remove_edge(self, edge_id: int) -> Edge:
        edge = self._edges.pop(edge_id)
        self._incident[edge.u].remove(edge_id)
        self._incident[edge.v].remove(edge_id)
        ids = self._pairs[edge.pair]
        ids.remove(edge_id)
        if not ids:
            del self._pairs[edge.pair]
        return edge

    def set_weight(self, edge_id: int, weight: WeightLike) -> Edge:
        old = self._edges[edge_id]
        weight = to_weight(weight)
        if weight < 0 and not self.auxiliary:
            raise StructureViolation(f"Negative weight {format_weight(weight)} on edge {edge_id}")
        edge = Edge(old.id, old.u, old.v, weight)
        self._edges[edge_id] = edge
        return edge

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._edges

    def edge(self, edge_id: int) -> Edge:
        return self._edges[edge_id]

    def edges(self) -> List[Edge]:
        return [self._edges[i] for i in sorted(self._edges)]

    @property
    def edge_ids(self) -> List[int]:
        return sorted(self._edges)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def incident(self, v: int) -> List[Edge]:
        return [self._edges[i] for i in sorted(self._incident[v])]

    def degree(self, v: int) -> int:
        return len(self._incident[v])

    def neighbors(self, v: int) -> List[int]:
        return sorted({self._edges[i].other(v) for i in self._incident[v]})

    def edges_between(self, u: int, v: int) -> List[Edge]:
        return [self._edges[i] for i in sorted(self._pairs.get(pair_key(u, v), ()))]

    def multiplicity(self, u: int, v: int) -> int:
        return len(self._pairs.get(pair_key(u, v), ()))

    def is_double(self, edge_id: int) -> bool:
        return len(self._pairs[self._edges[edge_id].pair]) == 2

    def parallel_edge(self, edge_id: int) -> Optional[Edge]:
        """The other copy of a double edge, if any"""
        for other in self._pairs[self._edges[edge_id].pair]:
            if other != edge_id:
                return self._edges[other]
        return None

    def pairs(self) -> List[Pair]:
        return sorted(self._pairs)

    def total_weight(self) -> Fraction:
        return sum((e.weight for e in self._edges.values()), Fraction(0))

    # ---- structure ----

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges():
            graph.add_edge(edge.u, edge.v, key=edge.id, weight=edge.weight)
        return graph

    def components(self) -> List[FrozenSet[int]]:
        """Connected components ordered by their smallest vertex"""
        comps = [frozenset(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps, key=min)

    def component_of(self, v: int) -> FrozenSet[int]:
        return frozenset(nx.node_connected_component(self.to_networkx(), v))

    def subgraph(self, vertices: Iterable[int]) -> 'Multigraph':
        """Induced subgraph keeping the original edge ids"""
        keep = set(vertices)
        sub = Multigraph(sorted(keep), auxiliary=self.auxiliary)
        for edge in self.edges():
            if edge.u in keep and edge.v in keep:
                sub.add_edge(edge.u, edge.v, edge.weight, edge_id=edge.id)
        sub._next_id = max(sub._next_id, self._next_id)
        return sub

    def degree_sequence(self) -> Dict[int, int]:
        return {v: len(ids) for v, ids in sorted(self._incident.items())}

    def to_dict(self) -> Dict[str, Any]:
        return {
            'vertices': self.vertices,
            'edges': [[e.id, e.u, e.v, format_weight(e.weight)] for e in self.edges()],
        }

    def __repr__(self) -> str:
        return f"Multigraph(|V|={self.num_vertices}, |E|={self.num_edges})"


# ==================== EDGE MULTISET ====================

class EdgeMultiset:
    """Multiset of vertex pairs, each with multiplicity at most two"""

    def __init__(self, pairs: Iterable[Pair] = (), limit: int = 2):
        self.limit = limit
        self._counts: Counter = Counter()
        for u, v in pairs:
            self.add(u, v)

    def add(self, u: int, v: int, count: int = 1) -> None:
        key = pair_key(u, v)
        if u == v:
            raise StructureViolation(f"Loop {key} in edge multiset")
        if self._counts[key] + count > self.limit:
            raise StructureViolation(
                f"Pair {key} would reach multiplicity {self._counts[key] + count} > {self.limit}"
            )
        self._counts[key] += count

    def multiplicity(self, u: int, v: int) -> int:
        return self._counts.get(pair_key(u, v), 0)

    def items(self) -> List[Tuple[Pair, int]]:
        return sorted((p, c) for p, c in self._counts.items() if c > 0)

    def __iter__(self) -> Iterator[Pair]:
        for pair, count in self.items():
            for _ in range(count):
                yield pair

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeMultiset):
            return NotImplemented
        return self.items() == other.items()

    def __add__(self, other: 'EdgeMultiset') -> 'EdgeMultiset':
        merged = EdgeMultiset(limit=max(self.limit, other.limit))
        for pair, count in self.items() + other.items():
            merged.add(pair[0], pair[1], count)
        return merged

    def weight(self, instance: Instance) -> Fraction:
        return sum((instance.w(u, v) * c for (u, v), c in self.items()), Fraction(0))

    def split(self, cover: 'CycleCover') -> Tuple['EdgeMultiset', 'EdgeMultiset']:
        """(pairs of the cover, pairs outside the cover), multiplicities kept"""
        inside, outside = EdgeMultiset(limit=self.limit), EdgeMultiset(limit=self.limit)
        for (u, v), count in self.items():
            (inside if cover.contains_pair(u, v) else outside).add(u, v, count)
        return inside, outside

    def to_list(self) -> List[List[int]]:
        return [list(pair) for pair in self]

    def __repr__(self) -> str:
        return f"EdgeMultiset({list(self)})"


# ==================== CYCLE COVER ====================

def canonical_cycle(cycle: Sequence[int]) -> Tuple[int, ...]:
    """Rotate to start at the smallest vertex and orient towards the smaller neighbour"""
    k = len(cycle)
    start = min(range(k), key=lambda i: cycle[i])
    forward = tuple(cycle[(start + i) % k] for i in range(k))
    backward = (forward[0],) + tuple(reversed(forward[1:]))
    return min(forward, backward)


@dataclass(frozen=True)
class CycleCover:
    """Vertex-disjoint simple cycles covering every vertex"""
    cycles: Tuple[Tuple[int, ...], ...]
    weight: Fraction = field(compare=False)

    def __post_init__(self):
        seen = set()
        for cycle in self.cycles:
            if len(cycle) < 3:
                raise DegreeViolation(f"Cycle {cycle} has fewer than 3 vertices")
            for v in cycle:
                if v in seen:
                    raise DegreeViolation(f"Vertex {v} appears in more than one cycle position")
                seen.add(v)

    @classmethod
    def from_cycles(cls, instance: Instance, cycles: Iterable[Sequence[int]]) -> 'CycleCover':
        ordered = tuple(sorted(canonical_cycle(c) for c in cycles))
        covered = sorted(v for c in ordered for v in c)
        if covered != list(range(instance.n)):
            raise DegreeViolation(f"Cycles do not cover vertices 0..{instance.n - 1} exactly once")
        weight = sum((instance.cycle_weight(c) for c in ordered), Fraction(0))
        return cls(cycles=ordered, weight=weight)

    @classmethod
    def from_pairs(cls, instance: Instance, pairs: Iterable[Pair]) -> 'CycleCover':
        """Recover the cycles of a simple 2-regular spanning edge set"""
        adjacency: Dict[int, List[int]] = {v: [] for v in range(instance.n)}
        for u, v in pairs:
            adjacency[u].append(v)
            adjacency[v].append(u)
        bad = [v for v, nbrs in adjacency.items() if len(nbrs) != 2 or nbrs[0] == nbrs[1]]
        if bad:
            raise DegreeViolation(f"Edge set is not simple 2-regular at vertices {bad}")

        cycles, visited = [], set()
        for start in range(instance.n):
            if start in visited:
                continue
            cycle, prev, cur = [start], None, start
            visited.add(start)
            while True:
                a, b = adjacency[cur]
                nxt = a if a != prev else b
                if nxt == start:
                    break
                cycle.append(nxt)
                visited.add(nxt)
                prev, cur = cur, nxt
            cycles.append(cycle)
        return cls.from_cycles(instance, cycles)

    @cached_property
    def pair_set(self) -> FrozenSet[Pair]:
        return frozenset(self.pairs())

    @cached_property
    def _cycle_index(self) -> Dict[int, int]:
        return {v: i for i, c in enumerate(self.cycles) for v in c}

    def pairs(self) -> List[Pair]:
        out = []
        for c in self.cycles:
            k = len(c)
            out.extend(pair_key(c[i], c[(i + 1) % k]) for i in range(k))
        return sorted(out)

    def contains_pair(self, u: int, v: int) -> bool:
        return pair_key(u, v) in self.pair_set

    def cycle_of(self, v: int) -> int:
        return self._cycle_index[v]

    @property
    def vertices(self) -> List[int]:
        return sorted(self._cycle_index)

    def is_hamiltonian(self) -> bool:
        return len(self.cycles) == 1

    def edge_multiset(self) -> EdgeMultiset:
        return EdgeMultiset(self.pairs())

    def to_multigraph(self, instance: Instance, copies: int = 1) -> Multigraph:
        graph = Multigraph(range(instance.n))
        for _ in range(copies):
            for u, v in self.pairs():
                graph.add_edge(u, v, instance.w(u, v))
        return graph

    def to_dict(self) -> Dict[str, Any]:
        return {'cycles': [list(c) for c in self.cycles], 'weight': format_weight(self.weight)}


# ==================== ALTERNATING ARITHMETIC ====================

def alternating_weight(S: Iterable[Pair], C: CycleCover, instance: Instance) -> Fraction:
    """w'(S): + weight for pairs outside C, - weight for pairs of C, with multiplicity"""
    total = Fraction(0)
    for u, v in S:
        w = instance.w(u, v)
        total += -w if C.contains_pair(u, v) else w
    return total


def alternating_counts(C: CycleCover, S: Iterable[Pair], copies: int = 1) -> Counter:
    """Pair multiplicities of copies*C with the C-pairs of S removed and the others added"""
    counts: Counter = Counter()
    for pair in C.pairs():
        counts[pair] += copies
    for u, v in S:
        key = pair_key(u, v)
        counts[key] += -1 if C.contains_pair(u, v) else 1
    return counts


def apply_alternating(
    C: CycleCover, S: Iterable[Pair], instance: Instance, copies: int = 1
) -> Multigraph:
    """Apply S to `copies` stacked copies of C and return the resulting regular multigraph"""
    counts = alternating_counts(C, S, copies)
    expected = 2 * copies
    degree: Counter = Counter()
    for (u, v), count in counts.items():
        if count < 0:
            raise DegreeViolation(f"Pair {(u, v)} removed more often than present")
        if count > Multigraph.MAX_MULTIPLICITY:
            raise DegreeViolation(f"Pair {(u, v)} reaches multiplicity {count}")
        degree[u] += count
        degree[v] += count
    wrong = {v: degree[v] for v in range(instance.n) if degree[v] != expected}
    if wrong:
        raise DegreeViolation(f"Result is not {expected}-regular", details={'degrees': wrong})

    graph = Multigraph(range(instance.n))
    for (u, v), count in sorted(counts.items()):
        for _ in range(count):
            graph.add_edge(u, v, instance.w(u, v))
    return graph


@dataclass(frozen=True)
class AlternatingCycle:
    """Closed walk alternating between edges of a first and a second cover"""
    steps: Tuple[Tuple[Pair, bool], ...]  # (pair, belongs to the first cover)
    weight: Fraction

    @property
    def pairs(self) -> List[Pair]:
        return [p for p, _ in self.steps]

    @property
    def vertices(self) -> List[int]:
        return sorted({v for p, _ in self.steps for v in p})

    def __len__(self) -> int:
        return len(self.steps)


def alternating_decomposition(
    C1: CycleCover, C2: CycleCover, instance: Instance
) -> List[AlternatingCycle]:
    """Split C1 xor C2 into closed walks that alternate between C1- and C2-edges.

    The alternating weight of each walk is taken relative to C1, so the weights
    sum to w(C2) - w(C1).
    """
    first = sorted(C1.pair_set - C2.pair_set)
    second = sorted(C2.pair_set - C1.pair_set)
    unused: Dict[bool, Dict[int, List[Pair]]] = {True: {}, False: {}}
    for side, pairs in ((True, first), (False, second)):
        for u, v in pairs:
            unused[side].setdefault(u, []).append((u, v))
            unused[side].setdefault(v, []).append((u, v))

    def take(side: bool, vertex: int) -> Pair:
        pair = unused[side][vertex].pop(0)
        other = pair[1] if pair[0] == vertex else pair[0]
        unused[side][other].remove(pair)
        return pair

    walks = []
    for start_pair in first:
        a = start_pair[0]
        if start_pair not in unused[True].get(a, []):
            continue
        start = a
        first_pair = take(True, a)
        steps = [(first_pair, True)]
        current = first_pair[1] if first_pair[0] == a else first_pair[0]
        side = False
        while not (current == start and side):
            pair = take(side, current)
            steps.append((pair, side))
            current = pair[1] if pair[0] == current else pair[0]
            side = not side
        weight = sum((instance.w(*p) * (-1 if in_first else 1) for p, in_first in steps), Fraction(0))
        walks.append(AlternatingCycle(steps=tuple(steps), weight=weight))
    return walks


def is_good_cycle_cover(candidate: CycleCover, bad_cycles: Iterable[Sequence[int]]) -> bool:
    """A cover is good if it misses an edge of every bad cycle and has no cycle inside one"""
    for bad in bad_cycles:
        k = len(bad)
        bad_pairs = {pair_key(bad[i], bad[(i + 1) % k]) for i in range(k)}
        if bad_pairs <= candidate.pair_set:
            return False
        members = set(bad)
        if any(set(c) <= members for c in candidate.cycles):
            return False
    return True


def enumerate_cycle_covers(instance: Instance) -> Iterator[CycleCover]:
    """Every cycle cover of the complete graph (exhaustive; meant for n <= 8)"""

    def covers(pool: Tuple[int, ...]) -> Iterator[List[Tuple[int, ...]]]:
        if not pool:
            yield []
            return
        head, rest = pool[0], pool[1:]
        for size in range(2, len(rest) + 1):
            for chosen in combinations(rest, size):
                remaining = tuple(v for v in rest if v not in chosen)
                if len(remaining) in (1, 2):
                    continue
                for order in permutations(chosen):
                    if order[0] > order[-1]:
                        continue
                    for tail in covers(remaining):
                        yield [(head,) + order] + tail

    for cycles in covers(tuple(range(instance.n))):
        yield CycleCover.from_cycles(instance, cycles)


__all__ = [
    'Pair',
    'to_weight',
    'format_weight',
    'pair_key',
    'Color',
    'COLORS',
    'Instance',
    'Edge',
    'Multigraph',
    'EdgeMultiset',
    'canonical_cycle',
    'CycleCover',
    'alternating_weight',
    'alternating_counts',
    'apply_alternating',
    'AlternatingCycle',
    'alternating_decomposition',
    'is_good_cycle_cover',
    'enumerate_cycle_covers',
]
