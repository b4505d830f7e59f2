"""Detection of the virus pattern K^s_t as a (not necessarily induced) subgraph.

A copy of K^s_t is a t-clique (the *center*) together with ``s`` distinct
outside vertices (the *leaves*), each adjacent to its own center vertex.
Finding one reduces to clique enumeration followed by a bipartite matching
between center vertices and their outside neighbours.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .graph import Graph, iter_bits


@dataclass(frozen=True)
class VirusPattern:
    s: int
    t: int

    def __post_init__(self):
        if self.s < 0:
            raise ValueError(f"leaf count must be >= 0, got {self.s}")
        if self.t < max(3, self.s):
            raise ValueError(f"need t >= max(3, s); got s={self.s}, t={self.t}")

    @property
    def order(self) -> int:
        return self.s + self.t

    @classmethod
    def parse(cls, text: str) -> "VirusPattern":
        """Parse ``"s,t"``."""
        s, t = (int(x) for x in text.split(","))
        return cls(s, t)

    def __str__(self) -> str:
        return f"K^{self.s}_{self.t}"

    def graph(self) -> Graph:
        """The pattern itself: center ``0..t-1``, leaf ``t+i`` hangs on center ``i``."""
        edges = [(i, j) for j in range(self.t) for i in range(j)]
        edges += [(i, self.t + i) for i in range(self.s)]
        return Graph(self.order, edges)


@dataclass(frozen=True)
class VirusEmbedding:
    center: tuple[int, ...]
    leaves: tuple[tuple[int, int], ...]  # (center vertex, leaf vertex)

    def vertices(self) -> set[int]:
        return set(self.center) | {leaf for _, leaf in self.leaves}

    def degree_in_copy(self, v: int) -> int:
        """Degree of ``v`` inside the embedded copy (0 if ``v`` is not used)."""
        if v in self.center:
            return len(self.center) - 1 + sum(1 for c, _ in self.leaves if c == v)
        return sum(1 for _, leaf in self.leaves if leaf == v)

    def is_valid(self, g: Graph, pattern: VirusPattern | None = None) -> bool:
        center = list(self.center)
        if pattern is not None and (len(center) != pattern.t or len(self.leaves) != pattern.s):
            return False
        if len(set(center)) != len(center) or not g.is_clique(center):
            return False
        holders = [c for c, _ in self.leaves]
        leaves = [leaf for _, leaf in self.leaves]
        if len(set(holders)) != len(holders) or len(set(leaves)) != len(leaves):
            return False
        if set(leaves) & set(center) or not set(holders) <= set(center):
            return False
        return all(g.has_edge(c, leaf) for c, leaf in self.leaves)


def _cliques_within(rows, k: int, mask: int) -> Iterator[tuple[int, ...]]:
    """k-cliques inside ``mask``, each as an ascending tuple, in lexicographic order."""

    def extend(clique, cand):
        need = k - len(clique)
        if need == 0:
            yield tuple(clique)
            return
        while cand and cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            clique.append(v)
            yield from extend(clique, cand & rows[v])
            clique.pop()

    yield from extend([], mask)


def enumerate_cliques(g: Graph, t: int) -> Iterator[tuple[int, ...]]:
    """All t-cliques as sorted tuples, in lexicographic order."""
    if t < 1 or t > g.n:
        return
    yield from _cliques_within(g.rows, t, g.vertex_mask)


def _cliques_touching(g: Graph, t: int, seeds: int) -> Iterator[tuple[int, ...]]:
    """t-cliques that contain at least one seed vertex (each yielded once)."""
    done = 0
    for u in iter_bits(seeds):
        for rest in _cliques_within(g.rows, t - 1, g.rows[u] & ~done):
            yield tuple(sorted((u,) + rest))
        done |= 1 << u


def _leaf_matching(g: Graph, center: tuple[int, ...], s: int, exclude: int = 0) -> Optional[list[tuple[int, int]]]:
    """Augmenting-path matching of ``s`` center vertices to distinct outside neighbours.

    Center vertices in ``exclude`` (a bitmask) may not hold a leaf.
    """
    if s == 0:
        return []
    cmask = 0
    for c in center:
        cmask |= 1 << c
    avail = {c: g.rows[c] & ~cmask for c in center if not exclude >> c & 1}
    match_of_leaf: dict[int, int] = {}

    def augment(c, seen):
        for leaf in iter_bits(avail[c] & ~seen[0]):
            seen[0] |= 1 << leaf
            owner = match_of_leaf.get(leaf)
            if owner is None or augment(owner, seen):
                match_of_leaf[leaf] = c
                return True
        return False

    size = 0
    for c in center:
        if c in avail and avail[c] and augment(c, [0]):
            size += 1
            if size == s:
                pairs = sorted((c2, leaf) for leaf, c2 in match_of_leaf.items())
                return pairs
    return None


def find_virus(g: Graph, pattern: VirusPattern) -> Optional[VirusEmbedding]:
    """First copy of the pattern in ``g`` (cliques scanned in lexicographic order)."""
    for center in enumerate_cliques(g, pattern.t):
        pairs = _leaf_matching(g, center, pattern.s)
        if pairs is not None:
            return VirusEmbedding(center, tuple(pairs))
    return None


def contains_virus(g: Graph, pattern: VirusPattern) -> bool:
    if g.n < pattern.order:
        return False
    return find_virus(g, pattern) is not None


def is_virus_free(g: Graph, pattern: VirusPattern) -> bool:
    return not contains_virus(g, pattern)


def contains_virus_through(g: Graph, pattern: VirusPattern, u: int, v: int) -> bool:
    """Does ``g`` contain a copy that uses vertex ``u`` or ``v``?

    When ``g`` is ``H + uv`` for a pattern-free ``H``, every copy in ``g``
    uses the new edge, so only cliques touching ``u`` or ``v`` can serve.
    A copy whose center misses both endpoints would need ``uv`` as a
    leaf edge, impossible since leaves hang on center vertices.
    """
    if g.n < pattern.order:
        return False
    seeds = (1 << u) | (1 << v)
    for center in _cliques_touching(g, pattern.t, seeds):
        if _leaf_matching(g, center, pattern.s) is not None:
            return True
    return False


def iter_virus_embeddings(g: Graph, pattern: VirusPattern) -> Iterator[VirusEmbedding]:
    """Every distinct copy (center set plus leaf assignment) of the pattern."""
    s = pattern.s
    for center in enumerate_cliques(g, pattern.t):
        cmask = 0
        for c in center:
            cmask |= 1 << c
        for holders in combinations(center, s):
            options = [list(iter_bits(g.rows[c] & ~cmask)) for c in holders]

            def assign(i, used, chosen):
                if i == s:
                    yield VirusEmbedding(center, tuple(zip(holders, chosen)))
                    return
                for leaf in options[i]:
                    if not used >> leaf & 1:
                        yield from assign(i + 1, used | (1 << leaf), chosen + [leaf])

            yield from assign(0, 0, [])


def virus_roles(g: Graph, pattern: VirusPattern) -> dict[int, set[int]]:
    """For each vertex, the set of degrees it takes across all copies in ``g``.

    Center vertices take degree ``t`` (holding a leaf) or ``t-1`` (not);
    leaves take degree 1.  Computed per clique by constrained matchings.
    """
    s, t = pattern.s, pattern.t
    roles: dict[int, set[int]] = {v: set() for v in range(g.n)}
    if g.n < pattern.order:
        return roles
    for center in enumerate_cliques(g, t):
        if _leaf_matching(g, center, s) is None:
            continue
        cmask = 0
        for c in center:
            cmask |= 1 << c
        for c in center:
            # c without a leaf: the other t-1 center vertices must carry all s leaves
            if s < t and _leaf_matching(g, center, s, exclude=1 << c) is not None:
                roles[c].add(t - 1)
            if s > 0 and _holds_leaf(g, center, s, c):
                roles[c].add(t)
        if s > 0:
            for x in iter_bits(_outside_neighbours(g, center) & ~cmask):
                if _can_be_leaf(g, center, s, x):
                    roles[x].add(1)
    return roles


def _outside_neighbours(g: Graph, center) -> int:
    m = 0
    for c in center:
        m |= g.rows[c]
    return m


def _holds_leaf(g: Graph, center, s, c) -> bool:
    cmask = 0
    for x in center:
        cmask |= 1 << x
    for leaf in iter_bits(g.rows[c] & ~cmask):
        reduced = _without_vertex(g, leaf)
        if s == 1 or _leaf_matching(reduced, center, s - 1, exclude=1 << c) is not None:
            return True
    return False


def _can_be_leaf(g: Graph, center, s, x) -> bool:
    for c in center:
        if g.has_edge(c, x):
            reduced = _without_vertex(g, x)
            if s == 1 or _leaf_matching(reduced, center, s - 1, exclude=1 << c) is not None:
                return True
    return False


def _without_vertex(g: Graph, x: int) -> Graph:
    """Same labels, with every edge at ``x`` deleted."""
    bit = 1 << x
    rows = tuple(0 if v == x else r & ~bit for v, r in enumerate(g.rows))
    return Graph._from_rows(g.n, rows)
