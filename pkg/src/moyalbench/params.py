"""Deformation parameter and oscillator model parameters."""

from __future__ import annotations

from dataclasses import dataclass

from .backend import ONE, Q, is_rational, rational_str
from .errors import DomainError


@dataclass(frozen=True)
class DeformParam:
    """Rational deformation parameter lambda.

    The canonical range is [0, 1/2] (0 = normal ordering, 1/2 = the
    Groenewold-Moyal skew form); the full open interval (0, 1) is allowed so
    that the dual parameter 1 - lambda stays representable.
    """

    value: object

    def __post_init__(self):
        v = _coerce(self.value)
        if not (0 <= v < 1):
            raise DomainError(f"lambda must lie in [0, 1), got {rational_str(v)}")
        object.__setattr__(self, "value", v)

    @property
    def dual(self) -> "DeformParam":
        return DeformParam(ONE - self.value)

    @property
    def is_canonical(self) -> bool:
        return self.value <= Q(1, 2)

    def __str__(self):
        return rational_str(self.value)


def _coerce(x):
    if isinstance(x, DeformParam):
        return x.value
    if isinstance(x, str):
        return Q(x)
    if is_rational(x):
        return Q(x)
    raise TypeError(f"not an exact rational: {x!r}")


def as_lambda(x, *, lo=Q(0), hi=ONE, lo_open=False, hi_open=True):
    """Coerce to an exact rational lambda and validate its range."""
    v = _coerce(x)
    if (v < lo or (lo_open and v == lo)) or (v > hi or (hi_open and v == hi)):
        left = "(" if lo_open else "["
        right = ")" if hi_open else "]"
        raise DomainError(
            f"lambda={rational_str(v)} outside {left}{rational_str(lo)}, "
            f"{rational_str(hi)}{right}"
        )
    return v


@dataclass(frozen=True)
class ModelParams:
    """Oscillator constants: positive rational hbar and omega (defaults 1)."""

    hbar: object = ONE
    omega: object = ONE

    def __post_init__(self):
        for name in ("hbar", "omega"):
            v = _coerce(getattr(self, name))
            if v <= 0:
                raise DomainError(f"{name} must be positive")
            object.__setattr__(self, name, v)

    @property
    def dimensionless(self) -> bool:
        return self.hbar == 1 and self.omega == 1
