"""Dense univariate polynomials over exact scalars (rational or Gaussian).

Coefficients are stored by ascending degree with the trailing (leading)
coefficient nonzero; the zero polynomial is the empty tuple and has degree -1.
Arithmetic never rounds: whatever scalar type goes in comes out.
"""

from __future__ import annotations

from .backend import Q, ZERO, is_rational


def _trim(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(list(coeffs)))

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((Q(0), Q(1)))

    @classmethod
    def monomial(cls, k: int, c=Q(1)) -> "Poly":
        return cls((ZERO,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    @property
    def leading(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly()
            out = [ZERO] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if not ca:
                    continue
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] = out[i + j] + ca * cb
            return Poly(out)
        return Poly([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Poly([c / scalar for c in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly.const(Q(1)), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if is_rational(other):
            return self == Poly.const(Q(other))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; exact for rational x, float for float x."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return ZERO if not isinstance(x, float) else 0.0
        return acc

    def scale_arg(self, c) -> "Poly":
        """p(c*x) as a new polynomial."""
        power = Q(1) if is_rational(c) else c
        out = []
        for k, a in enumerate(self.coeffs):
            out.append(a * power)
            power = power * c
        return Poly(out)

    def shift(self, k: int) -> "Poly":
        """p(x) * x^k."""
        if self.is_zero:
            return self
        return Poly((ZERO,) * k + self.coeffs)

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self / self.leading

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"({c})*x^{k}" if k else f"({c})")
        return "Poly(" + " + ".join(parts) + ")"


def _as_poly(x):
    if isinstance(x, Poly):
        return x
    if is_rational(x):
        return Poly.const(Q(x))
    try:
        return Poly.const(x)  # GaussScalar and friends
    except Exception:
        return NotImplemented


def divmod_poly(num: Poly, den: Poly):
    """Exact (quotient, remainder) over the rationals."""
    if den.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    q = [ZERO] * max(num.degree - den.degree + 1, 0)
    rem = list(num.coeffs)
    d, lead = den.degree, den.leading
    while len(rem) - 1 >= d and any(rem):
        k = len(rem) - 1
        if not rem[k]:
            rem.pop()
            continue
        f = rem[k] / lead
        q[k - d] = f
        for j, c in enumerate(den.coeffs):
            rem[k - d + j] = rem[k - d + j] - f * c
        rem.pop()
    return Poly(q), Poly(rem)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over the rationals (Euclid with per-step normalization)."""
    a, b = a.monic() if not a.is_zero else a, b.monic() if not b.is_zero else b
    while not b.is_zero:
        _, r = divmod_poly(a, b)
        a, b = b, r.monic() if not r.is_zero else r
    return a
