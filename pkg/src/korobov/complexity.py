"""Information complexity as a lattice-point count.

``n(eps, d)`` is the number of frequencies k in Z^d whose eigenvalue
strictly exceeds eps**2.  The exact count walks the coordinates in order
of decreasing weight (the natural order, since weights are nonincreasing),
carrying the partial product and stopping a branch as soon as the next
weight cannot keep the product above the threshold.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .exceptions import InsufficientBox, ResourceLimit, ValidationError
from .params import KorobovParams
from .spectrum import _box_axes, _box_extents, box_escape_bound, certifying_box, eigen_sum_tau, univariate_r

DEFAULT_NODE_BUDGET = 10**9
BOX_ORACLE_BUDGET = 10**8


@dataclass(frozen=True)
class ComplexityQuery:
    params: KorobovParams
    d: int
    epsilon: float

    def __post_init__(self):
        if not isinstance(self.d, (int, np.integer)) or self.d < 1:
            raise ValidationError(f"dimension d must be a positive integer, got {self.d!r}")
        if not 0.0 < self.epsilon < 1.0:
            raise ValidationError(f"epsilon must lie in (0, 1), got {self.epsilon}")

    @property
    def threshold(self) -> float:
        return self.epsilon * self.epsilon


@dataclass
class ComplexityResult:
    count: int
    epsilon: float
    d: int
    nodes_visited: int
    threshold: float
    upper_bound: Optional[float] = field(default=None)
    tau: Optional[float] = field(default=None)

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "epsilon": self.epsilon,
            "threshold": self.threshold,
            "count": self.count,
            "nodes_visited": self.nodes_visited,
            "tau": self.tau,
            "upper_bound": self.upper_bound,
        }


def info_complexity(
    params: KorobovParams,
    d: int,
    epsilon: float,
    tau: Optional[float] = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ComplexityResult:
    """Exact n(eps, APP_d); optionally attach the analytic bound for ``tau``."""
    query = ComplexityQuery(params, int(d), float(epsilon))
    thr = query.threshold
    d = query.d
    alphas, gammas = params.alphas(d), params.gammas(d)
    nodes = 0

    def count_from(j: int, partial: float) -> int:
        # partial > thr holds on entry; k_j = ... = k_d = 0 is always a point
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimit(f"lattice count visited more than {node_budget} nodes")
        if j == d or not partial * gammas[j] > thr:
            return 1
        a, g = alphas[j], gammas[j]
        total = count_from(j + 1, partial)
        k = 1
        while True:
            p = partial * univariate_r(k, a, g)
            if not p > thr:
                break
            total += 2 * count_from(j + 1, p)
            k += 1
        return total

    count = count_from(0, 1.0)
    result = ComplexityResult(count, query.epsilon, d, nodes, thr)
    if tau is not None:
        result.tau = float(tau)
        result.upper_bound = info_complexity_upper_bound(params, d, epsilon, tau)
    return result


def count_box_oracle(params: KorobovParams, d: int, epsilon: float, kmax) -> int:
    """Naive count of box points |k_j| <= kmax with eigenvalue > eps**2.

    ``kmax`` is a single half-width or one per coordinate.  Raises
    InsufficientBox unless every point outside the box is provably below
    the threshold.
    """
    query = ComplexityQuery(params, int(d), float(epsilon))
    d, thr = query.d, query.threshold
    extents = _box_extents(d, kmax)
    size = math.prod(2 * m + 1 for m in extents)
    if size > BOX_ORACLE_BUDGET:
        raise ResourceLimit(f"box with half-widths {extents} has {size} points, budget {BOX_ORACLE_BUDGET}")
    if box_escape_bound(params, d, kmax) > thr:
        raise InsufficientBox(f"kmax={kmax} leaves qualifying points outside the box")
    _, axes = _box_axes(params, d, extents)
    if d == 1:
        return int(np.count_nonzero(axes[0] > thr))
    count = 0
    # slice over the first coordinate; products are formed left to right
    for r1 in axes[0]:
        prod = np.array([r1])
        for ax in axes[1:]:
            prod = np.multiply.outer(prod, ax).ravel()
        count += int(np.count_nonzero(prod > thr))
    return count


def minimal_box(params: KorobovParams, d: int, epsilon: float) -> Tuple[int, ...]:
    """Smallest per-coordinate half-widths certifying the box oracle."""
    return certifying_box(params, d, float(epsilon) ** 2)


def info_complexity_upper_bound(params: KorobovParams, d: int, epsilon: float, tau: float) -> float:
    """2 eps^(-2 tau) prod_j (1 + 2 gamma_j^tau zeta(2 alpha_j tau))."""
    query = ComplexityQuery(params, int(d), float(epsilon))
    return 2.0 * query.epsilon ** (-2.0 * tau) * eigen_sum_tau(params, query.d, tau)


@dataclass(frozen=True)
class CTauQ:
    value: float
    argmax_d: int
    d_max: int
    still_increasing: bool
    terms: List[float]


def C_tau_q(params: KorobovParams, tau: float, q: float, d_max: int, rtol: float = 1e-6) -> CTauQ:
    """Truncation of sup_d (sum_j lambda_{d,j}^tau)^(1/tau) d^-q to d <= d_max.

    ``still_increasing`` is set when the last step still raised the sequence
    by more than ``rtol`` relative, meaning the supremum may lie beyond
    ``d_max``.  With ``d_max = 1`` there is no step to judge and the flag is
    set conservatively.
    """
    if d_max < 1:
        raise ValidationError(f"d_max must be >= 1, got {d_max}")
    if q < 0:
        raise ValidationError(f"q must be >= 0, got {q}")
    terms = []
    for d in range(1, d_max + 1):
        terms.append(eigen_sum_tau(params, d, tau) ** (1.0 / tau) * d ** (-q))
    best = max(range(d_max), key=lambda i: terms[i])
    increasing = d_max == 1 or terms[-1] > terms[-2] * (1.0 + rtol)
    return CTauQ(terms[best], best + 1, d_max, increasing, terms)
