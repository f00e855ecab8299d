"""Eigenvalues of the embedding of a weighted Korobov space into L2.

The eigenvalue attached to a frequency ``k`` in Z^d is the product of the
univariate values ``r(k_j) = 1`` (k_j = 0) or ``gamma_j / |k_j|**(2 alpha_j)``.
The sorted spectrum is produced lazily by a best-first search over vectors
of absolute frequencies; each popped vector is expanded into its sign
patterns on emission.

Ties are broken by a fixed total order so every output is reproducible:
value descending, then total degree sum|k_j| ascending, then the vector
(|k_1|, ..., |k_d|) lexicographically ascending, then sign pattern with
``+`` before ``-`` coordinate by coordinate.
"""
from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from .exceptions import DimensionMismatch, DomainError, ResourceLimit, ValidationError
from .params import KorobovParams
from .zeta import riemann_zeta

DEFAULT_FRONTIER_CAP = 10**7
DEFAULT_BOX_BUDGET = 10**7


@dataclass(frozen=True)
class EigenEntry:
    index: Tuple[int, ...]
    value: float

    @property
    def sqrt_value(self) -> float:
        return math.sqrt(self.value)


def univariate_r(k: int, alpha: float, gamma: float) -> float:
    if k == 0:
        return 1.0
    return gamma / abs(k) ** (2.0 * alpha)


def _coords(params: KorobovParams, d: int):
    if d < 1:
        raise ValidationError(f"dimension d must be >= 1, got {d}")
    return params.alphas(d), params.gammas(d)


def product_r(kvec: Sequence[int], params: KorobovParams, d: int) -> float:
    """Multiply the univariate values left to right, coordinate 1 first.

    Every module multiplies in this same order so eigenvalues computed
    along different paths are bit-identical.
    """
    if len(kvec) != d:
        raise DimensionMismatch(f"frequency vector has length {len(kvec)}, expected d={d}")
    alphas, gammas = _coords(params, d)
    value = 1.0
    for k, a, g in zip(kvec, alphas, gammas):
        value *= univariate_r(k, a, g)
    return value


def sort_key(index: Sequence[int], value: float):
    """Total order used for every spectrum listing (smaller key first)."""
    absk = tuple(abs(k) for k in index)
    return (-value, sum(absk), absk, tuple(k < 0 for k in index))


def _sign_patterns(absk: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    nonzero = [j for j, k in enumerate(absk) if k]
    for signs in itertools.product((1, -1), repeat=len(nonzero)):
        vec = list(absk)
        for j, s in zip(nonzero, signs):
            vec[j] = s * vec[j]
        yield tuple(vec)


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Nonnegative vectors with the given sum, lexicographically ascending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class SpectrumIterator:
    """Yields ``EigenEntry`` objects in the package's total order, forever.

    Coordinates with ``gamma_j = 0`` are left out of the search: only
    ``k_j = 0`` gives them a nonzero factor.  If every coordinate has zero
    weight the positive part is just ``k = 0`` and the iterator continues
    with the zero eigenvalues by increasing degree.
    """

    def __init__(self, params: KorobovParams, d: int, frontier_cap: int = DEFAULT_FRONTIER_CAP):
        self.params = params
        self.d = d
        self.frontier_cap = frontier_cap
        self.alphas, self.gammas = _coords(params, d)
        self.active = [j for j in range(d) if self.gammas[j] > 0.0]
        self._ladders: List[List[float]] = [[1.0] for _ in range(d)]
        origin = (0,) * d
        self.frontier = [self._key(origin)]
        self.visited = {origin}
        self.emitted = 0
        self._pending: Iterator[EigenEntry] = iter(())
        self._zero_tail = None

    def _rung(self, j: int, m: int) -> float:
        ladder = self._ladders[j]
        while len(ladder) <= m:
            ladder.append(univariate_r(len(ladder), self.alphas[j], self.gammas[j]))
        return ladder[m]

    def _key(self, absk: Tuple[int, ...]):
        value = 1.0
        for j, m in enumerate(absk):
            value *= self._rung(j, m)
        return (-value, sum(absk), absk)

    def __iter__(self):
        return self

    def __next__(self) -> EigenEntry:
        entry = next(self._pending, None)
        if entry is None:
            self._pending = self._expand_next()
            entry = next(self._pending)
        self.emitted += 1
        return entry

    def _expand_next(self) -> Iterator[EigenEntry]:
        if self.frontier:
            neg_value, _, absk = heapq.heappop(self.frontier)
            for j in self.active:
                child = absk[:j] + (absk[j] + 1,) + absk[j + 1:]
                if child not in self.visited:
                    self.visited.add(child)
                    heapq.heappush(self.frontier, self._key(child))
            if len(self.frontier) > self.frontier_cap:
                raise ResourceLimit(
                    f"spectrum frontier exceeded {self.frontier_cap} entries after "
                    f"{self.emitted} emitted eigenvalues"
                )
            value = -neg_value
            return (EigenEntry(k, value) for k in _sign_patterns(absk))
        return self._zero_entries()

    def _zero_entries(self) -> Iterator[EigenEntry]:
        # reached only when every gamma_j is 0; k = 0 has already been emitted
        if self._zero_tail is None:
            self._zero_tail = (
                EigenEntry(k, 0.0)
                for degree in itertools.count(1)
                for absk in _compositions(degree, self.d)
                for k in _sign_patterns(absk)
            )
        return self._zero_tail


def iter_spectrum(params: KorobovParams, d: int, frontier_cap: int = DEFAULT_FRONTIER_CAP) -> SpectrumIterator:
    return SpectrumIterator(params, d, frontier_cap)


def enumerate_top(
    params: KorobovParams, d: int, n: int, frontier_cap: int = DEFAULT_FRONTIER_CAP
) -> List[EigenEntry]:
    """The ``n`` largest eigenvalues with their frequencies, nonincreasing."""
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    return list(itertools.islice(SpectrumIterator(params, d, frontier_cap), n))


def nth_eigenvalue(params: KorobovParams, d: int, n: int, frontier_cap: int = DEFAULT_FRONTIER_CAP) -> float:
    """lambda_{d,n}, 1-based."""
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    return enumerate_top(params, d, n, frontier_cap)[-1].value


def worst_case_error(params: KorobovParams, d: int, n: int, frontier_cap: int = DEFAULT_FRONTIER_CAP) -> float:
    """n-th minimal worst-case error sqrt(lambda_{d,n+1}); equals 1 for n = 0."""
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    return math.sqrt(nth_eigenvalue(params, d, n + 1, frontier_cap))


def _box_extents(d: int, kmax) -> Tuple[int, ...]:
    extents = (int(kmax),) * d if np.ndim(kmax) == 0 else tuple(int(k) for k in kmax)
    if len(extents) != d:
        raise DimensionMismatch(f"got {len(extents)} box half-widths for d={d}")
    if min(extents) < 0:
        raise ValidationError(f"box half-widths must be >= 0, got {extents}")
    return extents


def _box_axes(params: KorobovParams, d: int, kmax):
    alphas, gammas = _coords(params, d)
    extents = _box_extents(d, kmax)
    ranges = [np.arange(-m, m + 1) for m in extents]
    # scalar evaluation keeps the doubles identical to product_r
    axes = [
        np.array([univariate_r(int(k), a, g) for k in ks])
        for ks, a, g in zip(ranges, alphas, gammas)
    ]
    return ranges, axes


def brute_force_spectrum(
    params: KorobovParams,
    d: int,
    kmax,
    top: int | None = None,
    budget: int = DEFAULT_BOX_BUDGET,
) -> List[EigenEntry]:
    """Every frequency in the box ``|k_j| <= kmax``, sorted by the total order.

    ``kmax`` is one half-width for all coordinates or a sequence of d
    half-widths.  Only a prefix is trustworthy as a piece of the full
    spectrum: see ``certified_prefix_length``.  ``top`` limits how many
    entries are materialized.
    """
    extents = _box_extents(d, kmax)
    size = d * math.prod(2 * m + 1 for m in extents)
    if size > budget:
        raise ResourceLimit(f"box with half-widths {extents} needs {size} cells, budget {budget}")
    ranges, axes = _box_axes(params, d, extents)
    grids = np.meshgrid(*ranges, indexing="ij")
    idx = np.stack([g.ravel() for g in grids], axis=1)
    values = np.ones(idx.shape[0])
    for j in range(d):
        values = values * axes[j][idx[:, j] + extents[j]]
    absk = np.abs(idx)
    keys = [idx[:, j] < 0 for j in reversed(range(d))]
    keys += [absk[:, j] for j in reversed(range(d))]
    keys += [absk.sum(axis=1), -values]
    order = np.lexsort(keys)
    if top is not None:
        order = order[:top]
    return [EigenEntry(tuple(int(k) for k in idx[i]), float(values[i])) for i in order]


def box_escape_bound(params: KorobovParams, d: int, kmax) -> float:
    """Largest eigenvalue of any frequency outside the box |k_j| <= kmax_j."""
    alphas, gammas = _coords(params, d)
    extents = _box_extents(d, kmax)
    return max(univariate_r(m + 1, a, g) for m, a, g in zip(extents, alphas, gammas))


def certified_prefix_length(entries: Sequence[EigenEntry], params: KorobovParams, d: int, kmax) -> int:
    """Length m of the prefix of a box listing that is the true top-m.

    A prefix is certified when its last value strictly exceeds every
    eigenvalue living outside the box.
    """
    bound = box_escape_bound(params, d, kmax)
    m = 0
    for e in entries:
        if not e.value > bound:
            break
        m += 1
    return m


def certifying_box(params: KorobovParams, d: int, level: float) -> Tuple[int, ...]:
    """Smallest per-coordinate half-widths whose outside lies at or below ``level``."""
    if not level > 0:
        raise ValidationError(f"level must be positive, got {level}")
    alphas, gammas = _coords(params, d)
    extents = []
    for a, g in zip(alphas, gammas):
        m = 0
        if g > level:
            m = max(0, int((g / level) ** (1.0 / (2.0 * a))) - 1)
        while univariate_r(m + 1, a, g) > level:
            m += 1
        extents.append(m)
    return tuple(extents)


def eigen_sum_tau(params: KorobovParams, d: int, tau: float) -> float:
    """sum_k r(k)**tau over Z^d in closed product form with zeta factors."""
    alphas, gammas = _coords(params, d)
    if not 2.0 * alphas[0] * tau > 1.0:
        raise DomainError(
            f"sum of lambda^tau diverges: 2*alpha_1*tau = {2.0 * alphas[0] * tau} <= 1"
        )
    total = 1.0
    for a, g in zip(alphas, gammas):
        total *= 1.0 + 2.0 * g**tau * riemann_zeta(2.0 * a * tau).value
    return total
