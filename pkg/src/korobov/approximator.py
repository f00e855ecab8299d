"""The optimal linear algorithm: keep the Fourier coefficients of the top-n
eigenvalues and drop everything else.

Functions live in coefficient space only.  Since the exponentials are
orthogonal in both the Korobov norm and L2, truncation is the orthogonal
projection in both, and its worst case error over the unit ball equals
sqrt(lambda_{n+1}).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from ._validation import check_fourier_poly, check_params, check_positive_int
from .exceptions import DimensionMismatch, ValidationError
from .params import KorobovParams
from .spectrum import DEFAULT_FRONTIER_CAP, enumerate_top, product_r

Frequency = Tuple[int, ...]


@dataclass(frozen=True)
class FourierPoly:
    """Trigonometric polynomial on [0,1]^d stored as {frequency: coefficient}."""

    d: int
    terms: Dict[Frequency, complex] = field(default_factory=dict)

    def __post_init__(self):
        if self.d < 1:
            raise ValidationError(f"dimension must be >= 1, got {self.d}")
        clean = {}
        for k, c in self.terms.items():
            k = tuple(int(x) for x in k)
            if len(k) != self.d:
                raise DimensionMismatch(f"frequency {k} has length {len(k)}, expected {self.d}")
            clean[k] = complex(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, d: int) -> "FourierPoly":
        return cls(d, {})

    def coefficient(self, k: Sequence[int]) -> complex:
        return self.terms.get(tuple(k), 0j)

    @property
    def support(self) -> List[Frequency]:
        return [k for k, c in self.terms.items() if c != 0]

    def restrict(self, keep: Iterable[Frequency]) -> "FourierPoly":
        keep = set(keep)
        return FourierPoly(self.d, {k: c for k, c in self.terms.items() if k in keep})

    def __eq__(self, other):
        if not isinstance(other, FourierPoly) or other.d != self.d:
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(k) == other.coefficient(k) for k in keys)

    @classmethod
    def from_json_dict(cls, data: dict, d: int | None = None) -> "FourierPoly":
        """Parse ``{"k1,...,kd": [re, im]}``; a bare number is a real coefficient."""
        terms = {}
        for key, val in data.items():
            k = tuple(int(x) for x in str(key).split(","))
            if isinstance(val, (list, tuple)):
                if len(val) != 2:
                    raise ValidationError(f"coefficient for {key!r} must be [re, im]")
                c = complex(float(val[0]), float(val[1]))
            else:
                c = complex(float(val))
            terms[k] = c
        if d is None:
            if not terms:
                raise ValidationError("cannot infer d from an empty coefficient map")
            d = len(next(iter(terms)))
        return cls(d, terms)

    def to_json_dict(self) -> dict:
        return {",".join(map(str, k)): [c.real, c.imag] for k, c in self.terms.items()}

    @classmethod
    def load(cls, path, d: int | None = None) -> "FourierPoly":
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh), d)


def h_norm(f: FourierPoly, params: KorobovParams) -> float:
    """Korobov-space norm; +inf if f uses a frequency with zero eigenvalue."""
    total = 0.0
    for k, c in f.terms.items():
        mag2 = abs(c) ** 2
        if mag2 == 0.0:
            continue
        r = product_r(k, params, f.d)
        if r == 0.0:
            return math.inf
        total += mag2 / r
    return math.sqrt(total)


def l2_error(f: FourierPoly, g: FourierPoly) -> float:
    if f.d != g.d:
        raise DimensionMismatch(f"cannot compare d={f.d} with d={g.d}")
    keys = set(f.terms) | set(g.terms)
    return math.sqrt(math.fsum(abs(f.coefficient(k) - g.coefficient(k)) ** 2 for k in keys))


def optimal_index_set(
    params: KorobovParams, d: int, n: int, frontier_cap: int = DEFAULT_FRONTIER_CAP
) -> List[Frequency]:
    """Frequencies of the n largest eigenvalues, in spectrum order."""
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    return [e.index for e in enumerate_top(params, d, n, frontier_cap)]


def approximate(
    f: FourierPoly, params: KorobovParams, n: int, frontier_cap: int = DEFAULT_FRONTIER_CAP
) -> FourierPoly:
    return f.restrict(optimal_index_set(params, f.d, n, frontier_cap))


def worst_case_witness(
    params: KorobovParams, d: int, n: int, frontier_cap: int = DEFAULT_FRONTIER_CAP
) -> Tuple[FourierPoly, float]:
    """Unit-norm eigenfunction for rank n+1 and the error the algorithm makes on it.

    Within a tie block the first frequency in spectrum order is used.
    """
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    entries = enumerate_top(params, d, n + 1, frontier_cap)
    star = entries[n]
    f = FourierPoly(d, {star.index: math.sqrt(star.value)})
    kept = f.restrict(e.index for e in entries[:n])
    return f, l2_error(f, kept)


class KorobovApproximator(TransformerMixin, BaseEstimator):
    """Optimal n-term approximation as a scikit-learn style transformer.

    Parameters
    ----------
    gamma : str or WeightSpec, default="const:1"
        Weight sequence, e.g. ``"poly:2"``.
    alpha : str or SmoothnessSpec, default="const:1"
        Smoothness sequence, e.g. ``"const:1"``.
    n_functionals : int, default=1
        Number of Fourier coefficients the algorithm may use.
    frontier_cap : int, default=10**7
        Budget for the spectrum search.

    Attributes
    ----------
    params_ : KorobovParams
    d_ : int
    index_set_ : list of tuple
        Frequencies kept by :meth:`transform`.
    worst_case_error_ : float
        sqrt(lambda_{n+1}), the error bound over the unit ball.
    """

    def __init__(self, gamma="const:1", alpha="const:1", n_functionals=1, frontier_cap=DEFAULT_FRONTIER_CAP):
        self.gamma = gamma
        self.alpha = alpha
        self.n_functionals = n_functionals
        self.frontier_cap = frontier_cap

    @staticmethod
    def _as_list(X) -> List[FourierPoly]:
        if isinstance(X, FourierPoly):
            return [X]
        X = list(X)
        if not X:
            raise ValidationError("expected at least one FourierPoly")
        return X

    def fit(self, X, y=None):
        """Compute the index set for the dimension of ``X``.

        ``X`` is a FourierPoly, a list of them, or an int giving d directly.
        """
        params = check_params(self.gamma, self.alpha)
        n = check_positive_int(self.n_functionals, "n_functionals", minimum=0)
        if isinstance(X, int):
            d = check_positive_int(X, "d")
        else:
            polys = self._as_list(X)
            d = polys[0].d
            for f in polys:
                check_fourier_poly(f, d)
        entries = enumerate_top(params, d, n + 1, self.frontier_cap)
        self.params_ = params
        self.d_ = d
        self.index_set_ = [e.index for e in entries[:n]]
        self.eigenvalues_ = [e.value for e in entries[:n]]
        self.worst_case_error_ = math.sqrt(entries[n].value)
        return self

    def _check_fitted(self):
        if not hasattr(self, "index_set_"):
            raise NotFittedError("call fit before using this KorobovApproximator")

    def transform(self, X):
        self._check_fitted()
        single = isinstance(X, FourierPoly)
        out = [check_fourier_poly(f, self.d_).restrict(self.index_set_) for f in self._as_list(X)]
        return out[0] if single else out

    def errors(self, X) -> List[float]:
        self._check_fitted()
        return [l2_error(f, g) for f, g in zip(self._as_list(X), self.transform(self._as_list(X)))]

    def score(self, X, y=None) -> float:
        """Negative largest L2 error over ``X`` (greater is better)."""
        return -max(self.errors(X))
