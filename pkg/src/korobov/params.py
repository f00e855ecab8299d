"""Weight and smoothness sequences of a weighted Korobov space.

A space is described by a nonincreasing weight sequence ``gamma_j`` in
``[0, 1]`` and a nondecreasing smoothness sequence ``alpha_j`` with
``alpha_1 > 1/2``.  Both are given either in closed form or as an explicit
finite list whose last value is repeated forever.

Specs can be written compactly as strings, which is what the CLI and the
``key=value`` config files use::

    poly:2            gamma_j = j**-2
    geom:0.5          gamma_j = 0.5**j
    const:1           constant sequence
    list:0.5,0.25     explicit, tail repeats 0.25
    logaffine:1,0.5   alpha_j = 1 + 0.5*ln(j)
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Tuple

from .exceptions import MonotonicityViolation, RangeViolation, ValidationError

INF = math.inf

WEIGHT_KINDS = ("const", "poly", "geom", "list")
SMOOTHNESS_KINDS = ("const", "logaffine", "list")


def _floats(values) -> Tuple[float, ...]:
    try:
        out = tuple(float(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"expected real numbers, got {values!r}") from exc
    if any(math.isnan(v) for v in out):
        raise ValidationError("NaN is not a valid parameter")
    return out


@dataclass(frozen=True)
class WeightSpec:
    """Weight sequence gamma_j; build it with the classmethod constructors."""

    kind: str
    values: Tuple[float, ...]

    def __post_init__(self):
        if self.kind not in WEIGHT_KINDS:
            raise ValidationError(f"unknown weight kind {self.kind!r}")
        object.__setattr__(self, "values", _floats(self.values))
        _check_weights(self)

    @classmethod
    def constant(cls, c: float) -> "WeightSpec":
        return cls("const", (c,))

    @classmethod
    def poly(cls, a: float) -> "WeightSpec":
        return cls("poly", (a,))

    @classmethod
    def geometric(cls, q: float) -> "WeightSpec":
        return cls("geom", (q,))

    @classmethod
    def explicit(cls, values: Sequence[float]) -> "WeightSpec":
        return cls("list", tuple(values))

    @classmethod
    def parse(cls, text: str) -> "WeightSpec":
        kind, args = _split_spec(text)
        if kind in ("const", "poly", "geom") and len(args) != 1:
            raise ValidationError(f"{kind} weights take exactly one value: {text!r}")
        return cls(kind, args)

    @property
    def is_closed_form(self) -> bool:
        return self.kind != "list"

    def __call__(self, j: int) -> float:
        if self.kind == "const":
            return self.values[0]
        if self.kind == "poly":
            return float(j) ** -self.values[0]
        if self.kind == "geom":
            return self.values[0] ** j
        vals = self.values
        return vals[j - 1] if j <= len(vals) else vals[-1]

    def limit(self) -> float:
        """lim gamma_j (exists because the sequence is monotone and bounded)."""
        if self.kind == "const":
            return self.values[0]
        if self.kind == "poly":
            return 1.0 if self.values[0] == 0 else 0.0
        if self.kind == "geom":
            return 1.0 if self.values[0] == 1 else 0.0
        return self.values[-1]

    def __str__(self) -> str:
        return f"{self.kind}:" + ",".join(repr(v) for v in self.values)


@dataclass(frozen=True)
class SmoothnessSpec:
    """Smoothness sequence alpha_j."""

    kind: str
    values: Tuple[float, ...]

    def __post_init__(self):
        if self.kind not in SMOOTHNESS_KINDS:
            raise ValidationError(f"unknown smoothness kind {self.kind!r}")
        object.__setattr__(self, "values", _floats(self.values))
        _check_smoothness(self)

    @classmethod
    def constant(cls, alpha: float) -> "SmoothnessSpec":
        return cls("const", (alpha,))

    @classmethod
    def log_affine(cls, alpha: float, b: float) -> "SmoothnessSpec":
        return cls("logaffine", (alpha, b))

    @classmethod
    def explicit(cls, values: Sequence[float]) -> "SmoothnessSpec":
        return cls("list", tuple(values))

    @classmethod
    def parse(cls, text: str) -> "SmoothnessSpec":
        kind, args = _split_spec(text)
        if kind == "const" and len(args) != 1:
            raise ValidationError(f"const smoothness takes one value: {text!r}")
        if kind == "logaffine" and len(args) != 2:
            raise ValidationError(f"logaffine smoothness takes two values: {text!r}")
        return cls(kind, args)

    def __call__(self, j: int) -> float:
        if self.kind == "const":
            return self.values[0]
        if self.kind == "logaffine":
            alpha, b = self.values
            return alpha + b * math.log(j)
        vals = self.values
        return vals[j - 1] if j <= len(vals) else vals[-1]

    def __str__(self) -> str:
        return f"{self.kind}:" + ",".join(repr(v) for v in self.values)


def _split_spec(text: str):
    kind, sep, rest = text.strip().partition(":")
    kind = kind.strip().lower()
    if not sep or not rest.strip():
        raise ValidationError(f"expected 'kind:values', got {text!r}")
    args = [a for a in (s.strip() for s in rest.split(",")) if a]
    return kind, tuple(args)


def _check_weights(spec: WeightSpec) -> None:
    vals = spec.values
    if spec.kind == "list":
        if not vals:
            raise ValidationError("explicit weight list is empty")
        for j, v in enumerate(vals, start=1):
            if not 0.0 <= v <= 1.0:
                raise RangeViolation(f"gamma_{j} = {v} is outside [0, 1]")
        for j in range(1, len(vals)):
            if vals[j] > vals[j - 1]:
                raise MonotonicityViolation("gamma", j + 1)
        return
    (v,) = vals
    if spec.kind == "const" and not 0.0 <= v <= 1.0:
        raise RangeViolation(f"constant weight {v} is outside [0, 1]")
    if spec.kind == "poly" and not 0.0 <= v < INF:
        raise RangeViolation(f"polynomial decay rate {v} must be finite and >= 0")
    if spec.kind == "geom" and not 0.0 <= v <= 1.0:
        raise RangeViolation(f"geometric ratio {v} is outside [0, 1]")


def _check_smoothness(spec: SmoothnessSpec) -> None:
    vals = spec.values
    if any(math.isinf(v) for v in vals):
        raise RangeViolation("smoothness parameters must be finite")
    if spec.kind == "list":
        if not vals:
            raise ValidationError("explicit smoothness list is empty")
        for j in range(1, len(vals)):
            if vals[j] < vals[j - 1]:
                raise MonotonicityViolation("alpha", j + 1)
    elif spec.kind == "logaffine" and vals[1] < 0:
        raise RangeViolation(f"logaffine slope b={vals[1]} must be >= 0")
    if not vals[0] > 0.5:
        raise RangeViolation(f"alpha_1 = {vals[0]} must exceed 1/2")


@dataclass(frozen=True)
class KorobovParams:
    """Validated pair of sequences; immutable and safe to share."""

    weights: WeightSpec
    smoothness: SmoothnessSpec

    def gamma(self, j: int) -> float:
        return self.weights(j)

    def alpha(self, j: int) -> float:
        return self.smoothness(j)

    def gammas(self, d: int) -> Tuple[float, ...]:
        return tuple(self.weights(j) for j in range(1, d + 1))

    def alphas(self, d: int) -> Tuple[float, ...]:
        return tuple(self.smoothness(j) for j in range(1, d + 1))

    @classmethod
    def from_strings(cls, gamma: str, alpha: str) -> "KorobovParams":
        return validate(WeightSpec.parse(gamma), SmoothnessSpec.parse(alpha))

    def to_dict(self) -> dict:
        return {"gamma": str(self.weights), "alpha": str(self.smoothness)}


def validate(weights: WeightSpec, smoothness: SmoothnessSpec) -> KorobovParams:
    """Check both monotonicity chains and return the params.

    Specs check themselves on construction, so this mostly re-runs those
    checks on objects that may have been built by other means.
    """
    if not isinstance(weights, WeightSpec):
        raise ValidationError(f"expected WeightSpec, got {type(weights).__name__}")
    if not isinstance(smoothness, SmoothnessSpec):
        raise ValidationError(f"expected SmoothnessSpec, got {type(smoothness).__name__}")
    _check_weights(weights)
    _check_smoothness(smoothness)
    return KorobovParams(weights, smoothness)


def gamma(params: KorobovParams, j: int) -> float:
    if j < 1:
        raise ValidationError(f"index j must be >= 1, got {j}")
    return params.weights(j)


def alpha(params: KorobovParams, j: int) -> float:
    if j < 1:
        raise ValidationError(f"index j must be >= 1, got {j}")
    return params.smoothness(j)


@dataclass(frozen=True)
class DeltaEstimate:
    """liminf of ln(1/gamma_j) / ln(j), exact or estimated over a window."""

    value: float
    exact: bool
    window: Optional[Tuple[int, int]] = field(default=None)

    def __post_init__(self):
        if self.exact and self.window is not None:
            raise ValidationError("an exact delta carries no window")
        if not self.value >= 0:
            raise ValidationError(f"delta must be >= 0, got {self.value}")


def _log_ratio(g: float, j: int) -> float:
    if g == 0.0:
        return INF
    return math.log(1.0 / g) / math.log(j)


def delta(params: KorobovParams, window: Optional[Tuple[int, int]] = None) -> DeltaEstimate:
    """Polynomial decay exponent of the weights.

    Closed-form weights give the exact liminf.  Explicit weights, or any
    weights when ``window`` is passed, give ``min`` of the ratio over the
    window with ``exact=False``.  The default window for explicit lists is
    ``(2, max(3, len(list)))``.
    """
    w = params.weights
    if window is None and w.is_closed_form:
        (v,) = w.values
        if w.kind == "poly":
            value = v
        elif w.kind == "geom":
            value = 0.0 if v == 1.0 else INF
        else:
            value = INF if v == 0.0 else 0.0
        return DeltaEstimate(float(value), True)

    if window is None:
        window = (2, max(3, len(w.values)))
    j_min, j_max = (int(window[0]), int(window[1]))
    if not 2 <= j_min < j_max:
        raise ValidationError(f"window must satisfy 2 <= j_min < j_max, got {window}")
    ratios = [_log_ratio(w(j), j) for j in range(j_min, j_max + 1)]
    finite = [r for r in ratios if r != INF]
    value = min(finite) if finite else INF
    return DeltaEstimate(max(value, 0.0), False, (j_min, j_max))


def load_config(path) -> KorobovParams:
    """Read ``gamma=...`` / ``alpha=...`` lines from a plain-text config."""
    entries = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValidationError(f"{path}:{lineno}: expected key=value")
        entries[key.strip().lower()] = value.strip()
    unknown = set(entries) - {"gamma", "alpha"}
    if unknown:
        raise ValidationError(f"{path}: unknown keys {sorted(unknown)}")
    return KorobovParams.from_strings(entries.get("gamma", "const:1"), entries.get("alpha", "const:1"))
