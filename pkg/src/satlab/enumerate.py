"""Isomorph-free enumeration of graphs of a fixed order by orderly generation.

Every isomorphism class is represented by the labelling whose column-major
upper-triangle code (x(0,1), x(0,2), x(1,2), x(0,3), ...) is lexicographically
largest.  Deleting the last edge of such a maximal labelling leaves a maximal
labelling, so each class is reached exactly once by adding edges after the
last one and keeping only maximal results.
"""
from __future__ import annotations

from typing import Iterator

import numpy as np

from ._jit import jit
from .config import max_enumeration_order
from .errors import CapacityError
from .graph import Graph


@jit
def _is_max_code(rows, n):
    one = np.int64(1)
    # twin_lower[x]: vertices y < x whose transposition with x is an automorphism
    twin_lower = np.zeros(n, np.int64)
    for x in range(n):
        bx = one << x
        for y in range(x):
            by = one << y
            if (rows[x] & ~by) == (rows[y] & ~bx):
                twin_lower[x] |= by
    w = np.zeros(n, np.int64)
    nxt = np.zeros(n + 1, np.int64)
    used = np.int64(0)
    depth = 0
    while depth >= 0:
        if depth == n:
            depth -= 1
            used &= ~(one << w[depth])
            continue
        x = nxt[depth]
        found = -1
        while x < n:
            if (used >> x) & 1 == 0 and (twin_lower[x] & ~used) == 0:
                cmp = 0
                for i in range(depth):
                    b = (rows[w[i]] >> x) & 1
                    gb = (rows[i] >> depth) & 1
                    if b != gb:
                        cmp = 1 if b > gb else -1
                        break
                if cmp > 0:
                    return False
                if cmp == 0:
                    found = x
                    break
            x += 1
        if found >= 0:
            nxt[depth] = found + 1
            w[depth] = found
            used |= one << found
            depth += 1
            nxt[depth] = 0
        else:
            depth -= 1
            if depth >= 0:
                used &= ~(one << w[depth])
    return True


@jit
def _children(rows, n, start, pair_i, pair_j, out, out_pos):
    one = np.int64(1)
    count = 0
    for pos in range(start, pair_i.shape[0]):
        i = pair_i[pos]
        j = pair_j[pos]
        rows[i] |= one << j
        rows[j] |= one << i
        if _is_max_code(rows, n):
            for k in range(n):
                out[count, k] = rows[k]
            out_pos[count] = pos
            count += 1
        rows[i] &= ~(one << j)
        rows[j] &= ~(one << i)
    return count


def pair_order(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Vertex pairs in column-major order: position ``j(j-1)/2 + i`` holds ``(i, j)``."""
    pi, pj = [], []
    for j in range(1, n):
        for i in range(j):
            pi.append(i)
            pj.append(j)
    return np.array(pi, dtype=np.int64), np.array(pj, dtype=np.int64)


def is_max_code(g: Graph) -> bool:
    """True when ``g`` is the lexicographically largest labelling of its class."""
    return bool(_is_max_code(rows_array(g), g.n))


def rows_array(g: Graph) -> np.ndarray:
    """Adjacency rows as int64 (bit 63 wraps to the sign bit)."""
    return np.array(
        [r - (1 << 64) if r >> 63 else r for r in g.rows], dtype=np.int64
    ).reshape(g.n)


def rows_to_graph(rows: np.ndarray) -> Graph:
    n = rows.shape[0]
    mask = (1 << 64) - 1
    return Graph._from_rows(n, tuple(int(r) & mask for r in rows))


class OrderlyTree:
    """The orderly generation tree for one order ``n``.

    Nodes are ``(rows, last_pos)`` pairs.  The root is the empty graph; the
    children of a node add one edge at a position after ``last_pos``.
    """

    def __init__(self, n: int):
        self.n = n
        self.pair_i, self.pair_j = pair_order(n)
        npairs = len(self.pair_i)
        self._out = np.zeros((max(npairs, 1), max(n, 1)), dtype=np.int64)
        self._out_pos = np.zeros(max(npairs, 1), dtype=np.int64)

    def root(self):
        return np.zeros(self.n, dtype=np.int64), -1

    def children(self, rows, last):
        count = _children(
            rows.copy(), self.n, last + 1, self.pair_i, self.pair_j, self._out, self._out_pos
        )
        return [(self._out[k].copy(), int(self._out_pos[k])) for k in range(count)]

    def walk(self, rows, last) -> Iterator[np.ndarray]:
        """Depth-first pre-order walk of the subtree rooted at a node."""
        stack = [(rows, last)]
        while stack:
            rows, last = stack.pop()
            yield rows
            stack.extend(reversed(self.children(rows, last)))

    def split(self, depth: int):
        """Nodes with fewer than ``depth`` edges, and the subtree roots at ``depth``."""
        shallow = []
        frontier = [self.root()]
        for _ in range(depth):
            nxt = []
            for node in frontier:
                shallow.append(node[0])
                nxt.extend(self.children(*node))
            frontier = nxt
        return shallow, frontier


def _check_limit(n: int, limit: int | None):
    limit = max_enumeration_order() if limit is None else limit
    if n < 0:
        raise ValueError("order must be non-negative")
    if n > limit:
        raise CapacityError(
            f"exhaustive enumeration is limited to n <= {limit} (requested {n}); "
            "supply a graph6 stream instead or raise SATLAB_MAX_N"
        )


def iter_canonical_rows(n: int, limit: int | None = None) -> Iterator[np.ndarray]:
    """Yield int64 adjacency rows, one maximal labelling per isomorphism class."""
    _check_limit(n, limit)
    if n == 0:
        yield np.zeros(0, dtype=np.int64)
        return
    tree = OrderlyTree(n)
    yield from tree.walk(*tree.root())


def _connected_rows(rows) -> bool:
    n = rows.shape[0]
    if n <= 1:
        return True
    full = (1 << n) - 1
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= int(rows[low.bit_length() - 1])
            f ^= low
        frontier = nxt & full & ~comp
        comp |= frontier
    return comp == full


def enumerate_graphs(n: int, connected_only: bool = False, limit: int | None = None) -> Iterator[Graph]:
    """One graph per isomorphism class of order ``n``, in a fixed order."""
    for rows in iter_canonical_rows(n, limit):
        if connected_only and not _connected_rows(rows):
            continue
        yield rows_to_graph(rows)
