"""Exact Gaussian rationals, the field Q(i).

Real elements of Q(i) are carried as plain :class:`fractions.Fraction`
values; only elements with a nonzero imaginary part are
:class:`GaussianRational` instances.  Arithmetic between a
``GaussianRational`` and a ``Fraction``/``int`` works in both directions and
demotes to ``Fraction`` whenever the imaginary part cancels, so the two
representations of a real number compare and hash equal.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Optional, Union

Scalar = Union[int, Fraction, "GaussianRational"]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def make(re_part, im_part=0):
    """Return ``re + im*i`` in the package's canonical representation."""
    re_part = _frac(re_part)
    im_part = _frac(im_part)
    if im_part == 0:
        return re_part
    return GaussianRational(re_part, im_part)


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re_part=0, im_part=0):
        object.__setattr__(self, "re", _frac(re_part))
        object.__setattr__(self, "im", _frac(im_part))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- construction -----------------------------------------------------
    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        """Wrap any exact scalar as a ``GaussianRational`` instance."""
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, str):
            return cls.coerce(parse_gaussian(x))
        return cls(_frac(x), 0)

    # -- predicates -------------------------------------------------------
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return self.re != 0 or self.im != 0

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return make(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return make(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return make(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return make(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return make(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return make(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)
        if isinstance(other, (int, Fraction)):
            return make(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return make(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            return make(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Fraction(1)
        base = self
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- rendering --------------------------------------------------------
    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"


def real_part(x) -> Fraction:
    return x.re if isinstance(x, GaussianRational) else _frac(x)


def imag_part(x) -> Fraction:
    return x.im if isinstance(x, GaussianRational) else Fraction(0)


def is_real(x) -> bool:
    return not isinstance(x, GaussianRational) or x.im == 0


def conjugate(x):
    return x.conjugate() if isinstance(x, GaussianRational) else x


def canonical(x):
    """Coerce an exact scalar to its canonical internal representation."""
    if isinstance(x, GaussianRational):
        return make(x.re, x.im)
    return _frac(x)


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def gaussian_sqrt_pair(x):
    """Both square roots of ``x`` in Q(i), smaller first; ``None`` if none.

    Roots are ordered lexicographically by ``(re, im)`` so that callers can
    make a deterministic choice.
    """
    a, b = real_part(x), imag_part(x)
    if a == 0 and b == 0:
        return (Fraction(0), Fraction(0))
    modulus = _rational_sqrt(a * a + b * b)
    if modulus is None:
        return None
    xr = _rational_sqrt((a + modulus) / 2)
    if xr is None:
        return None
    if xr != 0:
        yr = b / (2 * xr)
    else:
        yr = _rational_sqrt((modulus - a) / 2)
        if yr is None:
            return None
    root = make(xr, yr)
    if make(xr, yr) * make(xr, yr) != canonical(x):
        return None
    other = -root
    key = lambda z: (real_part(z), imag_part(z))
    return tuple(sorted((root, other), key=key))


def gaussian_sqrt(x):
    """A square root of ``x`` in Q(i), or ``None``.

    The root returned has positive real part, or zero real part and
    nonnegative imaginary part.
    """
    pair = gaussian_sqrt_pair(x)
    if pair is None:
        return None
    return pair[1]


def _fmt_frac(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Canonical text form: ``3/2``, ``-i``, ``2*i``, ``1/2-3*i``."""
    a, b = real_part(x), imag_part(x)
    if b == 0:
        return _fmt_frac(a)
    if b == 1:
        imag = "i"
    elif b == -1:
        imag = "-i"
    else:
        imag = f"{_fmt_frac(b)}*i"
    if a == 0:
        return imag
    if imag.startswith("-"):
        return f"{_fmt_frac(a)}{imag}"
    return f"{_fmt_frac(a)}+{imag}"


def parse_gaussian(text: str):
    """Parse the canonical text form (``"p/q+r/s*i"`` and its variants)."""
    if not isinstance(text, str):
        return canonical(text)
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ValueError(f"not a Gaussian rational: {text!r}")
    re_part, im_part = Fraction(0), Fraction(0)
    for term in terms:
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        m = re.fullmatch(r"(\d+(?:/\d+)?)?(\*?i)?", body)
        if m is None or not body or (m.group(1) is None and not m.group(2)):
            raise ValueError(f"not a Gaussian rational: {text!r}")
        if m.group(2) and m.group(2) == "*i" and m.group(1) is None:
            raise ValueError(f"not a Gaussian rational: {text!r}")
        mag = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        if m.group(2):
            im_part += sign * mag
        else:
            re_part += sign * mag
    return make(re_part, im_part)


I = GaussianRational(0, 1)
