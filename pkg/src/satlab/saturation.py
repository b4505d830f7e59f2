"""The saturation predicate and exhaustive minimum-saturation search."""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from ._jit import jit
from .canon import canonical_form
from .enumerate import OrderlyTree, _check_limit, _connected_rows, rows_array, rows_to_graph
from .graph import Graph
from .graph6 import decode
from .virus import VirusPattern, contains_virus, contains_virus_through

ALL = "all"
CONNECTED = "connected"
NONE_FOUND = "NONE_FOUND"
SCHEMA_VERSION = 1


@dataclass(frozen=True)
class SaturationVerdict:
    is_free: bool
    completing_nonedges: int
    total_nonedges: int
    is_saturated: bool
    below_order: bool
    is_connected: bool = True
    failing_nonedge: Optional[tuple[int, int]] = None


def check_saturation(g: Graph, pattern: VirusPattern, require_connected: bool = False) -> SaturationVerdict:
    """Count the non-edges whose addition creates the pattern.

    A graph below the pattern order is never saturated.  With
    ``require_connected`` the graph must also be connected (CSAT membership).
    """
    below = g.n < pattern.order
    free = not contains_virus(g, pattern)
    non_edges = g.non_edges()
    completing = 0
    failing = None
    for u, v in non_edges:
        h = g.add_edge(u, v)
        hit = contains_virus_through(h, pattern, u, v) if free else contains_virus(h, pattern)
        if hit:
            completing += 1
        elif failing is None:
            failing = (u, v)
    connected = g.is_connected()
    saturated = (not below) and free and completing == len(non_edges)
    if require_connected:
        saturated = saturated and connected
    return SaturationVerdict(
        is_free=free,
        completing_nonedges=completing,
        total_nonedges=len(non_edges),
        is_saturated=saturated,
        below_order=below,
        is_connected=connected,
        failing_nonedge=failing,
    )


def is_saturated(g: Graph, pattern: VirusPattern, require_connected: bool = False) -> bool:
    """Fast predicate (compiled kernel); agrees with ``check_saturation``."""
    if require_connected and not g.is_connected():
        return False
    return bool(_is_saturated(rows_array(g), g.n, pattern.s, pattern.t))


# -- compiled kernels ------------------------------------------------------

@jit
def _popcount(x):
    c = 0
    while x != 0:
        x &= x - 1
        c += 1
    return c


@jit
def _low_index(x):
    i = 0
    while (x >> i) & 1 == 0:
        i += 1
    return i


@jit
def _has_leaf_matching(rows, clique, t, s, n):
    if s == 0:
        return True
    one = np.int64(1)
    cmask = np.int64(0)
    for k in range(t):
        cmask |= one << clique[k]
    avail = np.empty(t, np.int64)
    for k in range(t):
        avail[k] = rows[clique[k]] & ~cmask
    match_left = np.full(t, -1, np.int64)
    match_right = np.full(n, -1, np.int64)
    prev_left = np.full(n, -1, np.int64)
    queue = np.empty(t, np.int64)
    size = 0
    for start in range(t):
        if avail[start] == 0:
            continue
        head = 0
        tail = 1
        queue[0] = start
        seen = np.int64(0)
        found = -1
        while head < tail and found < 0:
            left = queue[head]
            head += 1
            m = avail[left] & ~seen
            while m != 0:
                r = _low_index(m)
                m &= m - 1
                seen |= one << r
                prev_left[r] = left
                if match_right[r] < 0:
                    found = r
                    break
                queue[tail] = match_right[r]
                tail += 1
        if found >= 0:
            r = found
            while True:
                left = prev_left[r]
                old = match_left[left]
                match_left[left] = r
                match_right[r] = left
                if old < 0:
                    break
                r = old
            size += 1
            if size >= s:
                return True
    return False


@jit
def _contains_virus_seeded(rows, n, s, t, seeds):
    """Is there a copy whose center contains a vertex of ``seeds``?"""
    if n < s + t:
        return False
    one = np.int64(1)
    clique = np.empty(t, np.int64)
    cand = np.empty(t + 1, np.int64)
    done = np.int64(0)
    for u in range(n):
        if (seeds >> u) & 1 == 0:
            continue
        clique[0] = u
        depth = 1
        cand[1] = rows[u] & ~done
        while depth >= 1:
            if depth == t:
                if _has_leaf_matching(rows, clique, t, s, n):
                    return True
                depth -= 1
                continue
            c = cand[depth]
            if _popcount(c) < t - depth:
                depth -= 1
                continue
            v = _low_index(c)
            cand[depth] = c & ~(one << v)
            clique[depth] = v
            cand[depth + 1] = cand[depth] & rows[v]
            depth += 1
        done |= one << u
    return False


@jit
def _is_saturated(rows, n, s, t):
    if n < s + t:
        return False
    one = np.int64(1)
    full = np.int64(-1)
    if not n == 64:
        full = (one << n) - 1
    if _contains_virus_seeded(rows, n, s, t, full):
        return False
    for j in range(1, n):
        for i in range(j):
            if (rows[i] >> j) & 1:
                continue
            rows[i] |= one << j
            rows[j] |= one << i
            ok = _contains_virus_seeded(rows, n, s, t, (one << i) | (one << j))
            rows[i] &= ~(one << j)
            rows[j] &= ~(one << i)
            if not ok:
                return False
    return True


# -- search ----------------------------------------------------------------

@dataclass
class SaturationReport:
    n: int
    pattern: VirusPattern
    mode: str
    sat_value: object  # int or NONE_FOUND
    extremal_codes: list[str]
    graphs_scanned: int
    saturated_count: int
    elapsed: float = 0.0
    saturated_by_edges: dict[int, int] = field(default_factory=dict)

    def to_dict(self, stable: bool = False) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "n": self.n,
            "pattern": {"s": self.pattern.s, "t": self.pattern.t},
            "mode": self.mode,
            "sat_value": self.sat_value,
            "extremal_codes": list(self.extremal_codes),
            "graphs_scanned": self.graphs_scanned,
            "saturated_count": self.saturated_count,
            "saturated_by_edges": {str(k): v for k, v in sorted(self.saturated_by_edges.items())},
        }
        if not stable:
            out["elapsed"] = round(self.elapsed, 6)
        return out

    def to_json(self, stable: bool = False) -> str:
        return json.dumps(self.to_dict(stable=stable))

    def extremal_graphs(self) -> list[Graph]:
        return [decode(c) for c in self.extremal_codes]


@dataclass
class _Partial:
    """Mergeable scan result: counts plus all saturated graphs found."""

    scanned: int = 0
    saturated: list = field(default_factory=list)  # adjacency row tuples

    def merge(self, other: "_Partial") -> "_Partial":
        return _Partial(self.scanned + other.scanned, self.saturated + other.saturated)


def _scan_rows(rows_iter, s, t, connected_only) -> _Partial:
    part = _Partial()
    for rows in rows_iter:
        if connected_only and not _connected_rows(rows):
            continue
        part.scanned += 1
        if _is_saturated(rows, rows.shape[0], s, t):
            part.saturated.append(tuple(int(x) for x in rows))
    return part


def _scan_subtrees(args) -> _Partial:
    n, s, t, connected_only, roots = args
    tree = OrderlyTree(n)
    part = _Partial()
    for rows, last in roots:
        rows = np.array(rows, dtype=np.int64)
        part = part.merge(_scan_rows(tree.walk(rows, last), s, t, connected_only))
    return part


SPLIT_DEPTH = 4


def _scan_enumeration(n, pattern, connected_only, jobs) -> _Partial:
    s, t = pattern.s, pattern.t
    if n == 0:
        return _scan_rows([np.zeros(0, np.int64)], s, t, connected_only)
    tree = OrderlyTree(n)
    if jobs <= 1:
        return _scan_rows(tree.walk(*tree.root()), s, t, connected_only)
    shallow, frontier = tree.split(SPLIT_DEPTH)
    part = _scan_rows(shallow, s, t, connected_only)
    buckets = [[] for _ in range(jobs)]
    for k, (rows, last) in enumerate(frontier):
        buckets[k % jobs].append((tuple(int(x) for x in rows), last))
    tasks = [(n, s, t, connected_only, b) for b in buckets if b]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for sub in pool.map(_scan_subtrees, tasks):
            part = part.merge(sub)
    return part


def find_saturated_graphs(
    n: int,
    pattern: VirusPattern,
    mode: str = ALL,
    jobs: int = 1,
    graphs: Optional[Iterable[Graph]] = None,
    limit: Optional[int] = None,
) -> tuple[list[Graph], int]:
    """All saturated graphs among the scanned classes, sorted by canonical code.

    Returns ``(graphs, scanned_count)``.  ``graphs`` replaces the built-in
    enumeration (e.g. a graph6 stream); duplicates in it are collapsed.
    """
    connected_only = mode == CONNECTED
    if graphs is None:
        _check_limit(n, limit)
        part = _scan_enumeration(n, pattern, connected_only, jobs)
    else:
        part = _scan_rows(
            (rows_array(g) for g in graphs if g.n == n), pattern.s, pattern.t, connected_only
        )
    found = {}
    for rows in part.saturated:
        g = rows_to_graph(np.array(rows, dtype=np.int64))
        found.setdefault(canonical_form(g), g)
    return [decode(code) for code in sorted(found)], part.scanned


def saturation_search(
    n: int,
    pattern: VirusPattern,
    mode: str = ALL,
    jobs: int = 1,
    graphs: Optional[Iterable[Graph]] = None,
    limit: Optional[int] = None,
) -> SaturationReport:
    """Minimum edge count over saturated graphs of order ``n`` and its minimisers."""
    if mode not in (ALL, CONNECTED):
        raise ValueError(f"mode must be {ALL!r} or {CONNECTED!r}")
    start = time.perf_counter()
    saturated, scanned = find_saturated_graphs(n, pattern, mode, jobs, graphs, limit)
    by_edges: dict[int, int] = {}
    for g in saturated:
        by_edges[g.num_edges] = by_edges.get(g.num_edges, 0) + 1
    if saturated:
        best = min(by_edges)
        codes = sorted(canonical_form(g) for g in saturated if g.num_edges == best)
        sat_value: object = best
    else:
        codes, sat_value = [], NONE_FOUND
    return SaturationReport(
        n=n,
        pattern=pattern,
        mode=mode,
        sat_value=sat_value,
        extremal_codes=codes,
        graphs_scanned=scanned,
        saturated_count=len(saturated),
        elapsed=time.perf_counter() - start,
        saturated_by_edges=by_edges,
    )
