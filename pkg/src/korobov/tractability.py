"""Tractability classification for L2 approximation on weighted Korobov spaces.

Strong polynomial and polynomial tractability hold exactly when the weights
decay polynomially, i.e. ``delta = liminf ln(1/gamma_j)/ln(j) > 0``; the
exponent of strong tractability is then ``2 max(1/delta, 1/(2 alpha_1))``.
(t1, t2)-weak tractability holds for every t1 > 1 regardless of the
sequences, and weights tending to 1 bring the curse of dimensionality.

Only closed-form weight specs yield certified answers.  Explicit lists are
treated as finite samples of an unknown sequence and classified as
``EMPIRICAL_ONLY``.

The constant-smoothness literature results (WT iff inf gamma_j < 1, the
EC-tractability conditions) are not implemented here.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from .complexity import info_complexity
from .exceptions import NotApplicable, ValidationError
from .params import DeltaEstimate, KorobovParams, delta as compute_delta

INF = math.inf


class Trivalent(str, enum.Enum):
    YES = "yes"
    NO = "no"
    EMPIRICAL_ONLY = "empirical-only"


@dataclass(frozen=True)
class TractabilityReport:
    delta: DeltaEstimate
    alpha_1: float
    spt: Trivalent
    pt: Trivalent
    p_str: Optional[float]
    curse: Trivalent
    wt_t1_gt_1: Trivalent = Trivalent.YES
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "delta": self.delta.value,
            "delta_exact": self.delta.exact,
            "delta_window": list(self.delta.window) if self.delta.window else None,
            "alpha_1": self.alpha_1,
            "spt": self.spt.value,
            "pt": self.pt.value,
            "p_str": self.p_str,
            "curse": self.curse.value,
            "wt_t1_gt_1": self.wt_t1_gt_1.value,
            "notes": self.notes,
        }


def _exponent(delta_value: float, alpha_1: float) -> float:
    inv_delta = 0.0 if delta_value == INF else 1.0 / delta_value
    return 2.0 * max(inv_delta, 1.0 / (2.0 * alpha_1))


def spt_exponent(params: KorobovParams) -> float:
    """2 max(1/delta, 1/(2 alpha_1)); needs an exact, positive delta."""
    est = compute_delta(params)
    if not est.exact:
        raise NotApplicable("delta is only estimated for explicit weights; no exponent certified")
    if est.value == 0.0:
        raise NotApplicable("delta = 0: the problem is not strongly polynomially tractable")
    return _exponent(est.value, params.alpha(1))


def classify(params: KorobovParams) -> TractabilityReport:
    est = compute_delta(params)
    alpha_1 = params.alpha(1)
    notes = []
    if est.exact:
        spt = Trivalent.YES if est.value > 0 else Trivalent.NO
        p_str = _exponent(est.value, alpha_1) if est.value > 0 else None
        limit = params.weights.limit()
        curse = Trivalent.YES if limit == 1.0 else Trivalent.NO
        if curse is Trivalent.NO:
            notes.append(
                "curse=no reflects lim gamma_j < 1; absence of the curse in that case "
                "is not itself a proven statement"
            )
    else:
        spt = Trivalent.EMPIRICAL_ONLY
        p_str = _exponent(est.value, alpha_1) if est.value > 0 else INF
        curse = Trivalent.EMPIRICAL_ONLY
        notes.append(
            f"explicit weights: delta estimated over j in [{est.window[0]}, {est.window[1]}]; "
            "spt, p_str and curse are empirical"
        )
    notes.append("(t1,t2)-WT holds for every t1 > 1 and t2 > 0; t1 < 1 is not covered")
    return TractabilityReport(est, alpha_1, spt, spt, p_str, curse, Trivalent.YES, "; ".join(notes))


def curse_witness(params: KorobovParams, epsilon: float, d: int, verify: bool = True):
    """``(3**d, True)`` when gamma_1 = ... = gamma_d = 1, else ``(0, False)``.

    Every k in {-1, 0, 1}^d then has eigenvalue 1 > eps**2.  With
    ``verify`` the exact count is computed and checked against 3**d.
    """
    if not 0.0 < epsilon < 1.0:
        raise ValidationError(f"epsilon must lie in (0, 1), got {epsilon}")
    if any(g != 1.0 for g in params.gammas(d)):
        return 0, False
    bound = 3**d
    if verify:
        count = info_complexity(params, d, epsilon).count
        if count < bound:
            raise AssertionError(f"n({epsilon}, {d}) = {count} < 3^{d}")
    return bound, True


@dataclass(frozen=True)
class ExponentFit:
    d: int
    epsilons: List[float]
    counts: List[int]
    slope: float
    intercept: float
    residual: float

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "epsilons": self.epsilons,
            "counts": self.counts,
            "slope": self.slope,
            "intercept": self.intercept,
            "residual": self.residual,
        }


def fit_exponent(params: KorobovParams, d: int, epsilon_grid: Sequence[float], counter=None) -> ExponentFit:
    """Least-squares slope of ln n(eps, d) against ln(1/eps).

    ``counter`` maps an epsilon to its count; by default the exact lattice
    count is used.  The CLI passes a threaded version.
    """
    eps = [float(e) for e in epsilon_grid]
    if len(eps) < 4:
        raise ValidationError("the epsilon grid needs at least 4 points")
    if any(b >= a for a, b in zip(eps, eps[1:])):
        raise ValidationError("the epsilon grid must be strictly decreasing")
    if counter is None:
        counts = [info_complexity(params, d, e).count for e in eps]
    else:
        counts = list(counter(eps))
    x = np.log(1.0 / np.asarray(eps))
    y = np.log(np.asarray(counts, dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    return ExponentFit(
        d, eps, counts, float(slope), float(intercept), float(np.sqrt(np.mean(resid**2)))
    )


def weak_tractability_ratios(
    params: KorobovParams, dims: Sequence[int], epsilon: float, t1: float = 1.5, t2: float = 1.0
) -> List[float]:
    """ln n(eps, d) / (d**t1 + eps**-t2) along ``dims``; a finite-sample trend only."""
    return [
        math.log(info_complexity(params, d, epsilon).count) / (d**t1 + epsilon ** (-t2))
        for d in dims
    ]
