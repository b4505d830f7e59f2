"""Builders for the extremal saturated families.

The attachment family M^t_n(H): start from a connected base ``H`` and, at
each base vertex ``v_i``, hang ``p_i`` copies of K_{t-1} joined to ``v_i``
completely and ``q_i`` copies of K_t joined to ``v_i`` at exactly ``t-2`` of
their vertices.  SM^t_n(H) is the subfamily with every ``q_i = 0``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator, Sequence

from .canon import canonical_form
from .errors import ConstraintViolation, HypothesisError, InternalConsistencyError
from .formulas import k2t_threshold, residue
from .graph import Graph, GraphBuilder, complete, copies, empty, join, union

_BASE_RE = re.compile(r"^K(\d+)(?:vK1x(\d+))?$")


def parse_base(base_id: str) -> Graph:
    """``"K3"`` -> K_3; ``"K2vK1x3"`` -> K_2 ∨ 3K_1."""
    m = _BASE_RE.match(base_id)
    if not m:
        raise ValueError(f"unknown base identifier {base_id!r} (expected K<r> or K<a>vK1x<b>)")
    a = int(m.group(1))
    if m.group(2) is None:
        return complete(a)
    return join(complete(a), empty(int(m.group(2))))


def ehm_graph(n: int, alpha: int) -> Graph:
    """K_{alpha-2} ∨ (n-alpha+2)K_1, the unique minimum K_alpha-saturated graph."""
    if not 3 <= alpha <= n:
        raise HypothesisError(f"need 3 <= alpha <= n, got alpha={alpha}, n={n}")
    return join(complete(alpha - 2), empty(n - alpha + 2))


@lru_cache(maxsize=None)
def _code_of(base_id: str) -> str:
    return canonical_form(parse_base(base_id))


@dataclass(frozen=True)
class AttachmentSpec:
    base: Graph
    t: int
    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "q", tuple(self.q))

    @property
    def simple(self) -> bool:
        return not any(self.q)

    @property
    def order(self) -> int:
        return self.base.n + (self.t - 1) * sum(self.p) + self.t * sum(self.q)

    @property
    def edge_count(self) -> int:
        t = self.t
        return (
            self.base.num_edges
            + sum(self.p) * (comb(t - 1, 2) + (t - 1))
            + sum(self.q) * (comb(t, 2) + (t - 2))
        )

    def validate(self) -> None:
        h, t = self.base, self.t
        if t < 3:
            raise ValueError(f"clique size t must be >= 3, got {t}")
        if len(self.p) != h.n or len(self.q) != h.n:
            raise ValueError("p and q must have one entry per base vertex")
        if any(x < 0 for x in self.p + self.q):
            raise ValueError("attachment counts must be non-negative")
        if not h.is_connected():
            raise ValueError("the base graph must be connected")
        code = canonical_form(h)
        loaded = [i for i in range(h.n) if self.p[i] + self.q[i]]
        if code == _code_of("K2"):
            for i in range(h.n):
                if self.q[i] == 0 and self.p[i] == 1:
                    raise ConstraintViolation(1, f"base K_2, vertex {i} has q=0 and p=1")
        if t >= 4 and code == _code_of(f"K{t - 2}vK1x2") and len(loaded) < 2:
            raise ConstraintViolation(
                2, f"base K_{t - 2} ∨ 2K_1 needs attachments at two distinct vertices"
            )
        if code == _code_of("K2vK1x3") and len(loaded) < 2:
            if not any(h.degree(i) == 4 for i in loaded):
                raise ConstraintViolation(
                    3, "base K_2 ∨ 3K_1 needs two loaded vertices or a loaded degree-4 vertex"
                )


def build_family_member(spec: AttachmentSpec) -> Graph:
    """Construct the member described by ``spec`` after validating it."""
    spec.validate()
    h, t = spec.base, spec.t
    b = GraphBuilder(spec.order)
    b.add_edges(h.edges())
    nxt = h.n
    for i in range(h.n):
        for _ in range(spec.p[i]):
            block = list(range(nxt, nxt + t - 1))
            b.add_clique(block)
            b.add_edges((i, x) for x in block)
            nxt += t - 1
        for _ in range(spec.q[i]):
            block = list(range(nxt, nxt + t))
            b.add_clique(block)
            b.add_edges((i, x) for x in block[: t - 2])
            nxt += t
    return b.seal()


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def iter_attachment_specs(base: Graph, t: int, order: int, simple_only: bool = False) -> Iterator[AttachmentSpec]:
    """Every valid spec of the given total order (labelled, not deduplicated)."""
    extra = order - base.n
    if extra < 0:
        return
    for big in range(0, extra // t + 1):
        if simple_only and big:
            break
        rest = extra - big * t
        if rest % (t - 1):
            continue
        small = rest // (t - 1)
        for p in _compositions(small, base.n):
            for q in _compositions(big, base.n):
                spec = AttachmentSpec(base, t, p, q)
                try:
                    spec.validate()
                except ConstraintViolation:
                    continue
                yield spec


def _as_base(base: Graph | str) -> Graph:
    return parse_base(base) if isinstance(base, str) else base


def enumerate_family_members(
    base: Graph | str, t: int, n: int, simple_only: bool = False, pad: bool = False
) -> list[Graph]:
    """Members of order ``n`` up to isomorphism, sorted by canonical code.

    With ``pad`` the members of every smaller order ``m`` with
    ``(n - m)`` divisible by ``t + 1`` are included, each completed by
    ``(n - m)/(t + 1)`` disjoint copies of K_{t+1}.
    """
    h = _as_base(base)
    orders = [n]
    if pad:
        orders = [m for m in range(h.n, n + 1) if (n - m) % (t + 1) == 0]
    found: dict[str, Graph] = {}
    for m in orders:
        filler = copies((n - m) // (t + 1), complete(t + 1))
        for spec in iter_attachment_specs(h, t, m, simple_only):
            g = union(build_family_member(spec), filler)
            found.setdefault(canonical_form(g), g)
    return [found[c] for c in sorted(found)]


def k24_extremal_family(n: int) -> dict[str, Graph]:
    """The extremal K^2_4-saturated family of order ``n``, keyed by canonical code.

    Union of M_q(K_2) and M_q(K_3), each padded with K_5 copies, and
    M_p(K_2 ∨ (k-2)K_1) for 6 <= p <= n, 4 <= k <= p, padded likewise.
    """
    if n < 6:
        raise HypothesisError(f"need n >= 6, got n={n}")
    out: dict[str, Graph] = {}
    for base_id in ("K2", "K3"):
        for g in enumerate_family_members(base_id, 4, n, pad=True):
            out.setdefault(canonical_form(g), g)
    for p in range(6, n + 1):
        if (n - p) % 5:
            continue
        filler = copies((n - p) // 5, complete(5))
        for k in range(4, p + 1):
            for g in enumerate_family_members(f"K2vK1x{k - 2}", 4, p):
                h = union(g, filler)
                out.setdefault(canonical_form(h), h)
    return dict(sorted(out.items()))


def csat_family(n: int, t: int) -> list[Graph]:
    """SM^t_n on the base named for CSAT(n, K^2_t)."""
    from .formulas import csat_extremal_family_id

    return enumerate_family_members(csat_extremal_family_id(n, t), t, n, simple_only=True)


@dataclass(frozen=True)
class BetaGamma:
    beta: int
    gamma: int
    k: int  # number of K_{t-1} attached to the K_gamma base
    f: int
    k1: int
    case: str


def _quarter(num: int) -> int:
    q, rem = divmod(num, 4)
    if rem or q < 0:
        raise InternalConsistencyError(f"(beta, gamma) bookkeeping produced {num}/4")
    return q


def beta_gamma(n: int, t: int) -> BetaGamma:
    """Number of K_{t+1} components and base clique size for the K^2_t construction."""
    if t < 5:
        raise HypothesisError(f"need t >= 5, got t={t}")
    low = k2t_threshold(t)
    if n < low:
        raise HypothesisError(f"need n >= ((t+3)(t-1)+t+1)/2 = {low}, got n={n}")
    f = residue(n, t)
    k1 = (n - f) // (t - 1)
    if t % 2 == 0:
        h = t // 2
        even = (f + h) % 2 == 0
        if f >= h + 2 and even:
            beta, gamma, case = _quarter(2 * f - t), h, "f >= t/2+2, f+t/2 even"
        elif f >= h + 2:
            beta, gamma, case = _quarter(2 * f - t - 2), h + 1, "f >= t/2+2, f+t/2 odd"
        elif f == h + 1:
            beta, gamma, case = h, h, "f = t/2+1"
        elif f == h:
            beta, gamma, case = h - 1, h + 1, "f = t/2"
        elif even:
            beta, gamma, case = _quarter(2 * f + t - 4), h + 1, "f <= t/2-1, f+t/2 even"
        else:
            beta, gamma, case = _quarter(2 * f + t - 2), h, "f <= t/2-1, f+t/2 odd"
    else:
        h = (t + 1) // 2
        even = (f + h) % 2 == 0
        if f >= h + 1 and even:
            beta, gamma, case = _quarter(2 * f - t - 1), h, "f >= (t+1)/2+1, f+(t+1)/2 even"
        elif f >= h + 1:
            beta, gamma, case = _quarter(2 * f - t + 1), h - 1, "f >= (t+1)/2+1, f+(t+1)/2 odd"
        elif f == h:
            beta, gamma, case = h - 1, h, "f = (t+1)/2"
        elif even:
            beta, gamma, case = _quarter(2 * f + t - 3), h, "f <= (t+1)/2-1, f+(t+1)/2 even"
        else:
            beta, gamma, case = _quarter(2 * f + t - 5), h + 1, "f <= (t+1)/2-1, f+(t+1)/2 odd"
    rest = n - beta * (t + 1) - gamma
    k, rem = divmod(rest, t - 1)
    if rem or k < 0 or gamma < 1:
        raise InternalConsistencyError(
            f"(beta, gamma) = ({beta}, {gamma}) leaves {rest} vertices, not a multiple of t-1"
        )
    return BetaGamma(beta, gamma, k, f, k1, case)


def theorem4_construction(n: int, t: int) -> Graph:
    """SM^t_{n-beta(t+1)}(K_gamma) ∪ beta K_{t+1}, all cliques hung on base vertex 0."""
    bg = beta_gamma(n, t)
    if bg.gamma == 2 and bg.k == 1:
        raise InternalConsistencyError("K_2 base with a single attached clique violates constraint (1)")
    p = (bg.k,) + (0,) * (bg.gamma - 1)
    spec = AttachmentSpec(complete(bg.gamma), t, p, (0,) * bg.gamma)
    return union(build_family_member(spec), copies(bg.beta, complete(t + 1)))


ODD, EVEN, PENDANT = "odd", "even", "pendant"


def k33_extremal(n: int, variant: str) -> Graph:
    """The K^3_3-saturated graphs: K_1 ∨ (n-1)/2 K_2, K_1 ∨ ((n-4)/2 K_2 ∪ K_3), K_1 ∨ (K_1 ∪ (n-2)/3 K_3)."""
    variant = variant.lower()
    k1, k2, k3 = complete(1), complete(2), complete(3)
    if variant == ODD:
        if n < 7 or n % 2 == 0:
            raise HypothesisError(f"odd variant needs odd n >= 7, got {n}")
        return join(k1, copies((n - 1) // 2, k2))
    if variant == EVEN:
        if n < 8 or n % 2:
            raise HypothesisError(f"even variant needs even n >= 8, got {n}")
        return join(k1, union(copies((n - 4) // 2, k2), k3))
    if variant == PENDANT:
        if n < 8 or n % 3 != 2:
            raise HypothesisError(f"pendant variant needs n = 2 (mod 3), n >= 8, got {n}")
        return join(k1, union(k1, copies((n - 2) // 3, k3)))
    raise ValueError(f"unknown variant {variant!r}; expected odd, even or pendant")


def k33_extremal_edges(n: int, variant: str) -> int:
    variant = variant.lower()
    if variant == ODD:
        return (3 * n - 3) // 2
    if variant == EVEN:
        return 3 * n // 2
    return 2 * n - 3


def family_codes(graphs: Sequence[Graph]) -> list[str]:
    return sorted({canonical_form(g) for g in graphs})


def attachment_product(base: Graph, t: int, max_count: int) -> Iterator[AttachmentSpec]:
    """All specs with per-vertex counts in ``0..max_count`` (for randomised sweeps)."""
    rng = range(max_count + 1)
    for p in product(rng, repeat=base.n):
        for q in product(rng, repeat=base.n):
            yield AttachmentSpec(base, t, p, q)
