"""Closed-form saturation numbers, evaluated in exact integer arithmetic."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from math import comb

from .errors import HypothesisError, InternalConsistencyError

SAT_COMPLETE = "SAT_COMPLETE"
SAT_K24 = "SAT_K24"
CSAT_K2T = "CSAT_K2T"
SAT_K2T = "SAT_K2T"
SAT_K33 = "SAT_K33"
FAMILIES = (SAT_COMPLETE, SAT_K24, CSAT_K2T, SAT_K2T, SAT_K33)


@dataclass(frozen=True)
class FormulaResult:
    family: str
    value: int
    branch: str
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def _div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise InternalConsistencyError(f"non-integral formula value {num}/{den}")
    return q


def residue(n: int, t: int) -> int:
    """``n mod (t-1)`` mapped into ``1..t-1`` (0 becomes ``t-1``)."""
    return (n - 1) % (t - 1) + 1


def k2t_threshold(t: int) -> int:
    """Smallest order covered by the general K^2_t formula: ((t+3)(t-1)+t+1)/2."""
    return _div((t + 3) * (t - 1) + t + 1, 2)


def _require(cond: bool, message: str):
    if not cond:
        raise HypothesisError(message)


def sat_complete(n: int, alpha: int) -> FormulaResult:
    _require(3 <= alpha <= n, f"need 3 <= alpha <= n, got alpha={alpha}, n={n}")
    value = comb(alpha - 2, 2) + (alpha - 2) * (n - alpha + 2)
    return FormulaResult(SAT_COMPLETE, value, "e(K_{a-2} v (n-a+2)K_1)", {"n": n, "alpha": alpha})


def sat_k24(n: int) -> FormulaResult:
    _require(n >= 6, f"need n >= 6, got n={n}")
    return FormulaResult(SAT_K24, 2 * n - 3, "2n-3", {"n": n})


def csat_k2t(n: int, t: int) -> FormulaResult:
    _require(t >= 5, f"need t + 2 >= 7 (t >= 5), got t={t}")
    _require(n >= t + 2, f"need n >= t + 2 = {t + 2}, got n={n}")
    r = residue(n, t)
    params = {"n": n, "t": t, "r": r}
    if n == 2 * t - 1:
        return FormulaResult(CSAT_K2T, t * t - t, "n = 2t-1: t^2-t", params)
    if r == 1:
        return FormulaResult(CSAT_K2T, _div(t * n - (t + 2), 2), "n = 1 mod (t-1): tn/2-(t+2)/2", params)
    value = _div(t * n - r * (t - r + 1), 2)
    return FormulaResult(CSAT_K2T, value, "n = r mod (t-1): tn/2-r(t-r+1)/2", params)


def sat_k2t(n: int, t: int) -> FormulaResult:
    _require(t >= 5, f"need t >= 5, got t={t}")
    low = k2t_threshold(t)
    _require(n >= low, f"need n >= ((t+3)(t-1)+t+1)/2 = {low}, got n={n}")
    f = residue(n, t)
    k1 = _div(n - f, t - 1)
    params = {"n": n, "t": t, "f": f, "k1": k1, "f_from": "n mod (t-1) in 1..t-1"}
    if t % 2 == 0:
        return FormulaResult(SAT_K2T, _div(4 * t * n - t * (t + 2), 8), "t even: tn/2-t(t+2)/8", params)
    if (f + (t + 1) // 2) % 2 == 0:
        return FormulaResult(
            SAT_K2T, _div(4 * t * n - (t + 1) ** 2, 8), "t odd, f+(t+1)/2 even: tn/2-(t+1)^2/8", params
        )
    return FormulaResult(
        SAT_K2T, _div(4 * t * n - (t + 3) * (t - 1), 8), "t odd, f+(t+1)/2 odd: tn/2-(t+3)(t-1)/8", params
    )


def sat_k33(n: int) -> FormulaResult:
    _require(n >= 7, f"need n >= 7, got n={n}")
    if n % 2:
        return FormulaResult(SAT_K33, _div(3 * n - 3, 2), "n odd: (3n-3)/2", {"n": n})
    return FormulaResult(SAT_K33, _div(3 * n, 2), "n even: 3n/2", {"n": n})


def evaluate(family: str, **params) -> FormulaResult:
    """Dispatch on the family identifier; parameters are keyword arguments."""
    if family == SAT_COMPLETE:
        return sat_complete(params["n"], params["alpha"])
    if family == SAT_K24:
        return sat_k24(params["n"])
    if family == CSAT_K2T:
        return csat_k2t(params["n"], params["t"])
    if family == SAT_K2T:
        return sat_k2t(params["n"], params["t"])
    if family == SAT_K33:
        return sat_k33(params["n"])
    raise ValueError(f"unknown formula family {family!r}; expected one of {FAMILIES}")


def sat_formula(family: str, **params) -> int:
    return evaluate(family, **params).value


def csat_extremal_family_id(n: int, t: int) -> str:
    """Base graph of the SM family named for CSAT(n, K^2_t), as a base identifier."""
    _require(t >= 5 and n >= t + 2, f"need n >= t + 2 >= 7, got n={n}, t={t}")
    if n == 2 * t - 1:
        return "K1"
    r = residue(n, t)
    if r == 1:
        return f"K{t - 2}vK1x2"
    return f"K{r}"
