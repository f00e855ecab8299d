"""Input checking helpers shared by the estimator and the CLI."""
from __future__ import annotations

import numbers

from .exceptions import ValidationError
from .params import KorobovParams, SmoothnessSpec, WeightSpec, validate


def check_positive_int(value, name: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ValidationError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ValidationError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def check_epsilon(value) -> float:
    eps = float(value)
    if not 0.0 < eps < 1.0:
        raise ValidationError(f"epsilon must lie in (0, 1), got {value}")
    return eps


def check_params(gamma, alpha) -> KorobovParams:
    """Accept specs or their string forms and return validated params."""
    if isinstance(gamma, str):
        gamma = WeightSpec.parse(gamma)
    if isinstance(alpha, str):
        alpha = SmoothnessSpec.parse(alpha)
    return validate(gamma, alpha)


def check_fourier_poly(f, d: int | None = None):
    from .approximator import FourierPoly

    if not isinstance(f, FourierPoly):
        raise ValidationError(f"expected FourierPoly, got {type(f).__name__}")
    if d is not None and f.d != d:
        raise ValidationError(f"FourierPoly has d={f.d}, expected d={d}")
    return f
