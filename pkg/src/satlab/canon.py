"""Canonical labelling by partition refinement and pruned backtracking.

The canonical code of a graph is the graph6 string of its canonically
relabelled copy, so codes are totally ordered, deterministic, and decodable.
Two graphs receive the same code exactly when they are isomorphic.
"""
from __future__ import annotations

from .graph import Graph
from .graph6 import encode

CanonicalCode = str


def _refine(rows, cells):
    """Equitable refinement; sub-cells are ordered by their neighbour signature."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                r = rows[v]
                sig = tuple((r & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _leaf_code(rows, perm):
    """Column-major upper-triangle code of the relabelled graph as an integer."""
    n = len(perm)
    code = 0
    for j in range(1, n):
        rj = rows[perm[j]]
        for i in range(j):
            code = (code << 1) | (rj >> perm[i] & 1)
    return code


def _twins(rows, x, y):
    bx = 1 << x
    by = 1 << y
    return (rows[x] & ~by) == (rows[y] & ~bx)


class _Search:
    def __init__(self, g: Graph):
        self.rows = g.rows
        self.n = g.n
        self.best_code = -1
        self.best_perm: list[int] | None = None
        self.automorphisms: list[list[int]] = []

    def run(self):
        self._visit([list(range(self.n))], [])
        return self.best_perm

    def _visit(self, cells, prefix):
        cells = _refine(self.rows, cells)
        if len(cells) == self.n:
            perm = [c[0] for c in cells]
            code = _leaf_code(self.rows, perm)
            if code > self.best_code:
                self.best_code = code
                self.best_perm = perm
            elif code == self.best_code:
                # both leaves give the same graph: best_perm[i] -> perm[i] is an automorphism
                gamma = [0] * self.n
                for a, b in zip(self.best_perm, perm):
                    gamma[a] = b
                self.automorphisms.append(gamma)
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[idx]
        tried: list[int] = []
        for v in target:
            if any(_twins(self.rows, u, v) for u in tried):
                continue
            if tried and self._same_orbit(v, tried, prefix):
                continue
            tried.append(v)
            rest = [u for u in target if u != v]
            self._visit(cells[:idx] + [[v], rest] + cells[idx + 1:], prefix + [v])

    def _same_orbit(self, v, tried, prefix):
        gens = [g for g in self.automorphisms if all(g[p] == p for p in prefix)]
        if not gens:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return any(u in orbit for u in tried)


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation ``perm`` such that ``g.relabel(perm)`` is the canonical graph."""
    if g.n == 0:
        return []
    return _Search(g).run()


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph) -> CanonicalCode:
    return encode(canonical_graph(g))


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


__all__ = [
    "CanonicalCode",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "is_isomorphic",
]
