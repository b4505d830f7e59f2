"""Simple graphs on at most 64 vertices, stored as adjacency bitmasks.

A :class:`Graph` is immutable.  Row ``v`` is an integer whose bit ``u`` is set
exactly when ``uv`` is an edge.  Use :class:`GraphBuilder` (or the algebra
helpers below) to create graphs.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError

MAX_ORDER = 64
INFINITE = math.inf


def _check_order(n):
    if n < 0:
        raise ValueError(f"graph order must be non-negative, got {n}")
    if n > MAX_ORDER:
        raise CapacityError(f"graph order {n} exceeds the {MAX_ORDER}-vertex capacity")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GraphBuilder:
    """Mutable edge accumulator; :meth:`seal` produces the immutable graph."""

    def __init__(self, n: int):
        _check_order(n)
        self.n = n
        self._rows = [0] * n
        self._sealed = False

    def add_edge(self, u: int, v: int) -> "GraphBuilder":
        if self._sealed:
            raise RuntimeError("builder already sealed")
        if u == v:
            raise ValueError(f"loops are not allowed (vertex {u})")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"edge ({u}, {v}) out of range for order {self.n}")
        self._rows[u] |= 1 << v
        self._rows[v] |= 1 << u
        return self

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "GraphBuilder":
        for u, v in edges:
            self.add_edge(u, v)
        return self

    def add_clique(self, vertices: Iterable[int]) -> "GraphBuilder":
        vs = list(vertices)
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                self.add_edge(u, v)
        return self

    def seal(self) -> "Graph":
        self._sealed = True
        return Graph._from_rows(self.n, tuple(self._rows))


class Graph:
    """Immutable simple graph with vertices ``0..n-1``.

    Equality and hashing are *labelled*; use :func:`satlab.canon.canonical_form`
    to compare isomorphism classes.
    """

    __slots__ = ("n", "rows", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        b = GraphBuilder(n).add_edges(edges)
        self.n = n
        self.rows = tuple(b._rows)
        self._m = None

    @classmethod
    def _from_rows(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        g._m = None
        return g

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from adjacency bitmasks, validating symmetry and loops."""
        n = len(rows)
        _check_order(n)
        rows = tuple(int(r) & ((1 << n) - 1) for r in rows)
        for v, r in enumerate(rows):
            if r >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(r):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return cls._from_rows(n, rows)

    # -- basic queries -------------------------------------------------
    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def num_edges(self) -> int:
        if self._m is None:
            self._m = sum(r.bit_count() for r in self.rows) // 2
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.rows[v] & ((1 << v) - 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        full = (1 << self.n) - 1
        return [
            (u, v)
            for v in range(self.n)
            for u in iter_bits(~self.rows[v] & full & ((1 << v) - 1))
        ]

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    # -- derived graphs ------------------------------------------------
    def add_edge(self, u: int, v: int) -> "Graph":
        """Return ``G + uv``."""
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"invalid edge ({u}, {v})")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._from_rows(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._from_rows(self.n, tuple(rows))

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph._from_rows(
            self.n, tuple((~r & full) & ~(1 << v) for v, r in enumerate(self.rows))
        )

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph whose vertex ``i`` is old vertex ``perm[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of the vertices")
        pos = [0] * self.n
        for i, old in enumerate(perm):
            pos[old] = i
        rows = []
        for old in perm:
            r = 0
            for u in iter_bits(self.rows[old]):
                r |= 1 << pos[u]
            rows.append(r)
        return Graph._from_rows(self.n, tuple(rows))

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on ``vertices``, relabelled in ascending order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            r = 0
            for u in iter_bits(self.rows[v]):
                if u in index:
                    r |= 1 << index[u]
            rows.append(r)
        return Graph._from_rows(len(vs), tuple(rows))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = 0
        for v in vs:
            mask |= 1 << v
        return all((self.rows[v] | (1 << v)) & mask == mask for v in vs)

    # -- connectivity --------------------------------------------------
    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self.rows[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(iter_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        comp = 1
        frontier = 1
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= self.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        return comp == self.vertex_mask

    def distances_from(self, source: int) -> list[float]:
        dist: list[float] = [INFINITE] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in iter_bits(self.rows[v]):
                if dist[u] == INFINITE:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    def is_cut_vertex(self, v: int) -> bool:
        """True when deleting ``v`` increases the number of components."""
        before = len(self.components())
        rest = [u for u in range(self.n) if u != v]
        return len(self.induced_subgraph(rest).components()) > before

    def to_dot(self) -> str:
        lines = ["graph {"]
        lines += [f"  {v};" for v in range(self.n) if not self.rows[v]]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GraphMetrics:
    degrees: tuple[int, ...]
    min_degree: int
    component_count: int
    component_sizes: tuple[int, ...]
    is_connected: bool
    diameter: float
    eccentricities: tuple[float, ...]


def graph_metrics(g: Graph) -> GraphMetrics:
    """Degrees, components, eccentricities and diameter via BFS from every vertex."""
    degrees = tuple(g.degrees())
    comps = g.components()
    ecc = tuple(max(g.distances_from(v)) for v in range(g.n))
    connected = len(comps) == 1
    return GraphMetrics(
        degrees=degrees,
        min_degree=min(degrees) if degrees else 0,
        component_count=len(comps),
        component_sizes=tuple(len(c) for c in comps),
        is_connected=connected,
        diameter=max(ecc) if connected and ecc else (0 if g.n == 0 else INFINITE),
        eccentricities=ecc,
    )


# -- graph algebra ------------------------------------------------------

def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph._from_rows(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    _check_order(n)
    return Graph._from_rows(n, (0,) * n)


def union(*graphs: Graph) -> Graph:
    """Disjoint union; vertices of later operands are shifted past earlier ones."""
    total = sum(g.n for g in graphs)
    _check_order(total)
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph._from_rows(total, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """``g1 ∨ g2``: disjoint union plus every edge between the two sides."""
    total = g1.n + g2.n
    _check_order(total)
    left = (1 << g1.n) - 1
    right = ((1 << g2.n) - 1) << g1.n
    rows = [r | right for r in g1.rows] + [(r << g1.n) | left for r in g2.rows]
    return Graph._from_rows(total, tuple(rows))


def copies(k: int, g: Graph) -> Graph:
    if k < 0:
        raise ValueError("copy count must be non-negative")
    return union(*([g] * k)) if k else empty(0)


def star(leaves: int) -> Graph:
    return join(complete(1), empty(leaves))


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])
