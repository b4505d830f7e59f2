"""Structural classifiers and audits for saturated graphs.

Everything here is computed from degree, cut-vertex and distance evidence
in the graph itself, so the structural claims about saturated graphs
become checks that can fail with a concrete witness.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .canon import canonical_form
from .errors import PreconditionError
from .graph import Graph, graph_metrics, iter_bits
from .saturation import is_saturated
from .virus import VirusPattern, enumerate_cliques, virus_roles

TYPE_I = "TYPE_I"
TYPE_II = "TYPE_II"
NONE = "NONE"


@dataclass(frozen=True)
class KtClassification:
    vertices: tuple[int, ...]
    kind: str
    lucky_vertex: Optional[int] = None
    apex: Optional[int] = None


def _classify(g: Graph, clique: tuple[int, ...], t: int) -> KtClassification:
    low = [v for v in clique if g.degree(v) == t - 1]
    rest = [v for v in clique if g.degree(v) != t - 1]
    if len(low) == t - 1:
        lucky = rest[0]
        if g.is_cut_vertex(lucky):
            return KtClassification(clique, TYPE_I, lucky_vertex=lucky)
    if len(low) == 2 and all(g.degree(v) == t for v in rest):
        cmask = sum(1 << v for v in clique)
        outside = 0
        for v in rest:
            outside |= g.rows[v] & ~cmask
        if outside and outside & (outside - 1) == 0:
            return KtClassification(clique, TYPE_II, apex=outside.bit_length() - 1)
    return KtClassification(clique, NONE)


def classify_kt_copies(g: Graph, t: int) -> list[KtClassification]:
    """One record per t-clique, in lexicographic clique order."""
    return [_classify(g, c, t) for c in enumerate_cliques(g, t)]


@dataclass(frozen=True)
class CoreResult:
    core: Graph
    kept: tuple[int, ...]  # original labels of the core vertices, ascending
    removed: int
    unlucky_count: int
    type2_count: int
    disjoint: bool  # the removed vertex sets were pairwise disjoint

    def edge_gap(self, g: Graph, t: int) -> int:
        """2e(G) - 2e(core) - t*removed; zero exactly when the edge bound is tight."""
        return 2 * g.num_edges - 2 * self.core.num_edges - t * self.removed


def derive_core(g: Graph, t: int) -> CoreResult:
    """Delete every type-II K_t and every unlucky K_{t-1} (clique minus lucky vertex)."""
    sets = []
    b = c = 0
    for rec in classify_kt_copies(g, t):
        if rec.kind == TYPE_I:
            sets.append(set(rec.vertices) - {rec.lucky_vertex})
            b += 1
        elif rec.kind == TYPE_II:
            sets.append(set(rec.vertices))
            c += 1
    gone = set().union(*sets) if sets else set()
    disjoint = sum(len(s) for s in sets) == len(gone)
    kept = tuple(v for v in range(g.n) if v not in gone)
    return CoreResult(g.induced_subgraph(kept), kept, len(gone), b, c, disjoint)


def role_avoiding_vertex(g: Graph, pattern: VirusPattern, forbidden_degree: int) -> Optional[int]:
    """Smallest vertex that no copy of ``pattern`` uses with ``forbidden_degree``."""
    roles = virus_roles(g, pattern)
    for v in range(g.n):
        if forbidden_degree not in roles[v]:
            return v
    return None


# -- degree-2 vertex types and neighbourhood paths --------------------------

def degree2_types(g: Graph, v: int) -> set[str]:
    """Which of the types I-IV the degree-2 vertex ``v`` satisfies (any labelling of its neighbours)."""
    if g.degree(v) != 2:
        return set()
    a, b = g.neighbors(v)
    found = set()
    for v1, v2 in ((a, b), (b, a)):
        if g.degree(v1) != 2:
            continue
        if g.degree(v2) >= 3:
            for v3 in g.neighbors(v1):
                if v3 != v and g.has_edge(v3, v2) and g.degree(v3) >= 3:
                    found.add("I")
            if set(g.neighbors(v1)) == {v, v2}:
                found.add("II")
    if g.degree(a) >= 3 and g.degree(b) >= 3:
        if not g.has_edge(a, b):
            found.add("III")
        else:
            skip = {v, a, b}
            pa = [x for x in g.neighbors(a) if x not in skip]
            pb = [x for x in g.neighbors(b) if x not in skip]
            if any(x != y for x in pa for y in pb):
                found.add("IV")
    return found


def find_p4(g: Graph, mask: int) -> Optional[tuple[int, int, int, int]]:
    """A path on four vertices (not necessarily induced) inside ``mask``."""
    rows = g.rows
    for b in iter_bits(mask):
        for c in iter_bits(rows[b] & mask):
            for a in iter_bits(rows[b] & mask & ~(1 << c)):
                for d in iter_bits(rows[c] & mask & ~(1 << a) & ~(1 << b)):
                    return (a, b, c, d)
    return None


# -- audits -------------------------------------------------------------------

@dataclass(frozen=True)
class AuditContext:
    name: str
    s: int
    t: int
    connected: bool

    @property
    def pattern(self) -> VirusPattern:
        return VirusPattern(self.s, self.t)


K33_CONNECTED = AuditContext("K33_CONNECTED", 3, 3, True)
K33_DISCONNECTED = AuditContext("K33_DISCONNECTED", 3, 3, False)


def K2T_CONNECTED(t: int) -> AuditContext:
    return AuditContext("K2T_CONNECTED", 2, t, True)


def K2T_DISCONNECTED(t: int) -> AuditContext:
    return AuditContext("K2T_DISCONNECTED", 2, t, False)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: object = None
    detail: str = ""


@dataclass
class StructuralAudit:
    context: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "context": self.context,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "witness": c.witness, "detail": c.detail}
                for c in self.checks
            ],
        }


def _check_diameter(g: Graph) -> CheckResult:
    m = graph_metrics(g)
    d = m.diameter
    far = None
    for u in range(g.n):
        dist = g.distances_from(u)
        for v in range(g.n):
            if dist[v] == d:
                far = (u, v)
                break
        if far:
            break
    return CheckResult("diameter_in_2_4", 2 <= d <= 4, None if 2 <= d <= 4 else far, f"diameter {d}")


def _check_p4(g: Graph) -> CheckResult:
    for v in range(g.n):
        path = find_p4(g, g.rows[v])
        if path is not None:
            return CheckResult("p4_free_neighborhoods", False, {"vertex": v, "path": list(path)})
    return CheckResult("p4_free_neighborhoods", True)


def _check_degree2(g: Graph) -> CheckResult:
    if min(g.degrees()) != 2:
        return CheckResult("degree2_types_total", True, detail="minimum degree is not 2")
    for v in range(g.n):
        if g.degree(v) == 2:
            kinds = degree2_types(g, v)
            if len(kinds) != 1:
                return CheckResult(
                    "degree2_types_total", False, {"vertex": v, "types": sorted(kinds)}
                )
    return CheckResult("degree2_types_total", True)


def _check_pendant_shape(g: Graph) -> CheckResult:
    from .constructions import k33_extremal

    if min(g.degrees()) != 1:
        return CheckResult("min_degree_one_shape", True, detail="minimum degree is not 1")
    ok = g.n % 3 == 2 and g.n >= 8 and canonical_form(g) == canonical_form(k33_extremal(g.n, "pendant"))
    return CheckResult("min_degree_one_shape", ok, None if ok else canonical_form(g))


def _check_roles(g: Graph, pattern: VirusPattern, forbidden: int) -> CheckResult:
    v = role_avoiding_vertex(g, pattern, forbidden)
    return CheckResult(
        "role_avoiding_vertex",
        v is not None,
        v if v is not None else canonical_form(g),
        f"pattern {pattern}, forbidden degree {forbidden}",
    )


def _check_classification(g: Graph, t: int) -> CheckResult:
    for rec in classify_kt_copies(g, t):
        if rec.kind == NONE:
            return CheckResult("kt_classification_total", False, {"clique": list(rec.vertices)})
    return CheckResult("kt_classification_total", True)


def _core_checks(g: Graph, t: int) -> list[CheckResult]:
    res = derive_core(g, t)
    out = [CheckResult("removed_sets_disjoint", res.disjoint)]
    core = res.core
    out.append(CheckResult("core_connected", core.is_connected(), None if core.is_connected() else list(res.kept)))
    clique = next(enumerate_cliques(core, t), None)
    out.append(
        CheckResult(
            "core_kt_free",
            clique is None,
            None if clique is None else [res.kept[i] for i in clique],
        )
    )
    gap = res.edge_gap(g, t)
    exact = gap == res.type2_count * (t - 4)
    tight = gap == 0
    ok = gap >= 0 and exact and tight == (t == 4 or res.type2_count == 0)
    out.append(
        CheckResult(
            "core_edge_identity",
            ok,
            None if ok else {"gap": gap, "type2": res.type2_count},
            f"2e(G) - 2e(core) - t*removed = {gap}",
        )
    )
    return out


def _check_decomposition(g: Graph, pattern: VirusPattern) -> CheckResult:
    big = pattern.order - 1
    comps = g.components()
    odd = [c for c in comps if not (len(c) == big and g.is_clique(c))]
    ok = len(odd) <= 1
    if ok and odd:
        sub = g.induced_subgraph(odd[0])
        ok = g.is_clique(odd[0]) or is_saturated(sub, pattern)
    return CheckResult(
        "disconnected_decomposition",
        ok,
        None if ok else [sorted(c) for c in comps],
        f"{len(comps) - len(odd)} components are K_{big}",
    )


def structural_audit(g: Graph, context: AuditContext) -> StructuralAudit:
    """Run the checks bound to ``context`` after confirming its hypotheses."""
    pattern = context.pattern
    if context.connected and not g.is_connected():
        raise PreconditionError("connected", "graph is disconnected")
    if not context.connected and g.is_connected():
        raise PreconditionError("disconnected", "graph is connected")
    if not is_saturated(g, pattern):
        raise PreconditionError("saturated", f"graph is not {pattern}-saturated")
    audit = StructuralAudit(context.name)
    if context.name == K33_CONNECTED.name:
        audit.checks += [
            _check_diameter(g),
            _check_p4(g),
            _check_degree2(g),
            _check_pendant_shape(g),
            _check_roles(g, VirusPattern(2, 3), 2),
        ]
    elif context.name == "K2T_CONNECTED":
        t = context.t
        if t < 4:
            raise PreconditionError("t >= 4", f"got t={t}")
        if g.n < t + 2:
            raise PreconditionError("n >= t + 2", f"got n={g.n}")
        audit.checks.append(_check_classification(g, t))
        audit.checks += _core_checks(g, t)
        audit.checks.append(_check_roles(g, VirusPattern(1, t), t - 1))
    else:
        audit.checks.append(_check_decomposition(g, pattern))
    return audit
