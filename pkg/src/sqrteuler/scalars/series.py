"""Truncated Laurent series in one formal variable ``s``.

A :class:`PowerSeries` is known modulo ``s^(order+1)``: coefficients of
degrees up to and including ``order`` are exact, everything above is
unknown.  Finitely many negative degrees are allowed so that fixed-point
factors such as ``1/(1 - e^-s)`` can be represented.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Mapping, Optional

from ..errors import NotUnitSeries, UnsupportedRank
from .gaussian import canonical, format_scalar, real_part, imag_part
from .laurent import LaurentPoly
from .ratfunc import RatFunc, root_one_multiplicity

ZERO = Fraction(0)
ONE = Fraction(1)


class PowerSeries:
    """Immutable truncated series ``sum c_d s^d + O(s^(order+1))``."""

    __slots__ = ("order", "_c")

    def __init__(self, coeffs: Mapping[int, object] | Iterable = (), order: int = 0):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        c: Dict[int, object] = {}
        for d, v in items:
            d = int(d)
            v = canonical(v)
            if d <= order and v != 0:
                c[d] = v
        object.__setattr__(self, "order", int(order))
        object.__setattr__(self, "_c", c)

    @classmethod
    def _raw(cls, c: Dict[int, object], order: int) -> "PowerSeries":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "_c", {d: v for d, v in c.items() if d <= order and v != 0})
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls._raw({0: ONE}, order)

    @classmethod
    def monomial(cls, degree: int, c, order: int) -> "PowerSeries":
        return cls._raw({degree: canonical(c)}, order)

    # -- inspection -------------------------------------------------------
    def __getitem__(self, d: int):
        if d > self.order:
            raise IndexError(f"degree {d} is beyond the precision O(s^{self.order + 1})")
        return self._c.get(d, ZERO)

    coefficient = __getitem__

    def valuation(self) -> Optional[int]:
        """Lowest degree with a nonzero coefficient (``None`` if zero)."""
        return min(self._c) if self._c else None

    def _low(self) -> int:
        v = self.valuation()
        return self.order + 1 if v is None else v

    @property
    def coefficients(self) -> List:
        """Coefficients from ``min(0, valuation)`` through ``order``."""
        lo = min(0, self._low())
        return [self._c.get(d, ZERO) for d in range(lo, self.order + 1)]

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    # -- arithmetic -------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, PowerSeries):
            return other
        try:
            return PowerSeries._raw({0: canonical(other)}, self.order)
        except TypeError:
            return NotImplemented

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries._raw(self._c, min(order, self.order))

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        out = dict(self._c)
        for d, v in other._c.items():
            out[d] = out.get(d, ZERO) + v
        return PowerSeries._raw(out, order)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries._raw({d: -v for d, v in self._c.items()}, self.order)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            try:
                c = canonical(other)
            except TypeError:
                return NotImplemented
            return PowerSeries._raw({d: v * c for d, v in self._c.items()}, self.order)
        order = min(self.order + other._low(), other.order + self._low())
        out: Dict[int, object] = {}
        for da, va in self._c.items():
            for db, vb in other._c.items():
                d = da + db
                if d <= order:
                    out[d] = out.get(d, ZERO) + va * vb
        return PowerSeries._raw(out, order)

    __rmul__ = __mul__

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by ``s^k``."""
        return PowerSeries._raw({d + k: v for d, v in self._c.items()}, self.order + k)

    def inverse(self) -> "PowerSeries":
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("inverse of a series that is zero to working precision")
        # self = s^v * unit, unit known through order - v
        n = self.order - v
        a = [self._c.get(v + k, ZERO) for k in range(n + 1)]
        inv0 = ONE / a[0]
        b = [inv0]
        for k in range(1, n + 1):
            acc = ZERO
            for j in range(1, k + 1):
                if a[j] != 0:
                    acc = acc + a[j] * b[k - j]
            b.append(-acc * inv0)
        return PowerSeries._raw({k - v: c for k, c in enumerate(b)}, n - v)

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.inverse()
        try:
            c = canonical(other)
        except TypeError:
            return NotImplemented
        return self * (ONE / c)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = PowerSeries.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """``self(inner(s))`` for ``inner`` with zero constant term."""
        if inner._low() < 1:
            raise ValueError("inner series must have zero constant term")
        if self._low() < 0:
            raise ValueError("outer series must have no negative powers")
        order = min(self.order, inner.order) if self.order >= 1 else self.order
        # Horner evaluation
        result = PowerSeries._raw({}, order)
        for d in range(self.order, -1, -1):
            result = result * inner + self._c.get(d, ZERO)
            result = result.truncate(order)
        return result.truncate(order)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.order == other.order and self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash((self.order, frozenset(self._c.items())))

    def agrees_with(self, other: "PowerSeries", order: Optional[int] = None) -> bool:
        """Coefficients agree through ``order`` (default: common precision)."""
        if order is None:
            order = min(self.order, other.order)
        if order > self.order or order > other.order:
            return False
        lo = min(self._low(), other._low(), 0)
        return all(self._c.get(d, ZERO) == other._c.get(d, ZERO) for d in range(lo, order + 1))

    # -- rendering --------------------------------------------------------
    def render(self, var: str = "s") -> str:
        parts = []
        for d, c in self.items():
            re_c, im_c = real_part(c), imag_part(c)
            neg = (im_c == 0 and re_c < 0) or (re_c == 0 and im_c < 0)
            mag = -c if neg else c
            cs = format_scalar(mag)
            if re_c != 0 and im_c != 0:
                cs = f"({cs})"
            if d == 0:
                body = cs
            else:
                mono = var if d == 1 else f"{var}^{d}"
                body = mono if cs == "1" else f"{cs}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        tail = f"O({var}^{self.order + 1})"
        if not parts:
            return tail
        return "".join(parts) + " + " + tail

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"PowerSeries({self.render()!r})"


def series_sqrt_unit(p: PowerSeries) -> PowerSeries:
    """The square root of a series with constant term 1, with constant term 1."""
    if p._low() < 0 or p[0] != 1:
        raise NotUnitSeries("series square root needs constant term 1")
    n = p.order
    q = [ONE]
    for k in range(1, n + 1):
        acc = p[k]
        for j in range(1, k):
            acc = acc - q[j] * q[k - j]
        q.append(acc / 2)
    return PowerSeries(q, n)


def _exp_laurent(f: LaurentPoly, order: int) -> PowerSeries:
    # u^e = exp(e*s/2)
    out = [ZERO] * (order + 1)
    for (e,), c in f.items():
        x = Fraction(e, 2)
        p = ONE
        for k in range(order + 1):
            out[k] = out[k] + c * p / factorial(k)
            p = p * x
    return PowerSeries(out, order)


def _require_rank1(f):
    if f.rank != 1:
        raise UnsupportedRank("series expansion is only defined for a rank-1 torus")


def exp_substitute(f, order: int) -> PowerSeries:
    """Expand ``f`` under ``t = e^s`` (so ``t^(1/2) = e^(s/2)``) through ``s^order``.

    Poles at ``s = 0`` are kept as negative powers of ``s``.
    """
    _require_rank1(f)
    if isinstance(f, LaurentPoly):
        return _exp_laurent(f, order)
    if f.is_zero():
        return PowerSeries({}, order)
    if f.den.is_constant():
        return _exp_laurent(f.num, order) / f.den.constant_value()
    m = root_one_multiplicity(f.den)
    num = _exp_laurent(f.num, order + m)
    den = _exp_laurent(f.den, order + 2 * m)
    return (num / den).truncate(order)


def _poly_in_t(f: LaurentPoly, order: int) -> PowerSeries:
    terms: Dict[int, object] = {}
    for (e,), c in f.items():
        if e % 2:
            raise ValueError("Chow classes have integer powers of t")
        terms[e // 2] = c
    return PowerSeries._raw(terms, order)


def chow_to_series(f, order: int) -> PowerSeries:
    """Read a rank-1 Chow class as a Laurent series in ``s`` via ``t = s``."""
    _require_rank1(f)
    if isinstance(f, LaurentPoly):
        return _poly_in_t(f, order)
    if f.den.is_constant():
        return _poly_in_t(f.num, order) / f.den.constant_value()
    # a canonical denominator has a nonzero constant term, so it is a unit
    num = _poly_in_t(f.num, order)
    den = _poly_in_t(f.den, order - min(num.valuation() or 0, 0))
    return (num / den).truncate(order)
