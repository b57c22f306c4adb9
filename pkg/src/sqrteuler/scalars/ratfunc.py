"""Rational functions in the ``u = t^(1/2)`` variables, kept in canonical form.

Canonical form of ``num/den``:

* ``num`` and ``den`` are coprime (polynomial gcd divided out);
* ``den`` is a genuine polynomial not divisible by any variable, i.e. its
  minimal exponent in each variable is 0 (monomials are units and are
  pushed into the numerator);
* the coefficient of the lexicographically greatest exponent of ``den``
  is exactly 1.

Zero is ``0/1``.  Every arithmetic result is canonical, so ``==`` is
structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from ..errors import InvalidRatFunc
from . import polyalg
from .gaussian import canonical
from .laurent import LaurentPoly

ONE = Fraction(1)
ZERO = Fraction(0)


@dataclass(frozen=True)
class PoleReport:
    """A limit that does not exist: the surviving pole has order ``order``.

    ``indeterminate`` marks a multivariate ``0/0`` point whose value depends
    on the direction of approach; ``order`` is then measured along the
    diagonal.
    """

    order: Union[int, Fraction]
    indeterminate: bool = False

    def __str__(self):
        kind = "indeterminate" if self.indeterminate else "pole"
        return f"{kind} of order {self.order}"


# ------------------------------------------------------ polynomial helpers
def _shift_to_poly(p: LaurentPoly) -> Tuple[LaurentPoly, Tuple[int, ...]]:
    m = p.min_exponents()
    if all(x == 0 for x in m):
        return p, m
    return p.scale_shift(ONE, tuple(-x for x in m)), m


def _dense(p: LaurentPoly):
    out = [ZERO] * (max(e[0] for e, _ in p.items()) + 1)
    for e, c in p.items():
        out[e[0]] = c
    return out


def _undense(a, rank=1) -> LaurentPoly:
    return LaurentPoly._raw(rank, {(k,): c for k, c in enumerate(a) if c != 0})


def poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Gcd of two Laurent polynomials, as a normalised polynomial.

    Both arguments must already have minimal exponent 0 in every variable.
    """
    if p.rank == 1:
        if p.is_zero():
            return _undense(polyalg.dense_monic(_dense(q))) if q else p
        if q.is_zero():
            return _undense(polyalg.dense_monic(_dense(p)))
        return _undense(polyalg.dense_gcd(_dense(p), _dense(q)))
    return LaurentPoly._raw(p.rank, polyalg.gcd(p.terms(), q.terms(), p.rank))


def poly_divexact(p: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if g.is_constant():
        c = g.constant_value()
        return p if c == 1 else p * (ONE / c)
    if p.rank == 1:
        q, r = polyalg.dense_divmod(_dense(p), _dense(g))
        if r:
            raise ArithmeticError("inexact polynomial division")
        return _undense(q)
    return LaurentPoly._raw(p.rank, polyalg.divexact(p.terms(), g.terms()))


def poly_divmod(p: LaurentPoly, g: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    """Univariate division with remainder on polynomials (rank 1 only)."""
    if p.rank != 1:
        q, r = polyalg.divmod_lex(p.terms(), g.terms())
        return LaurentPoly._raw(p.rank, q), LaurentPoly._raw(p.rank, r)
    if p.is_zero():
        return p, p
    q, r = polyalg.dense_divmod(_dense(p), _dense(g))
    return _undense(q), _undense(r)


def root_one_multiplicity(p: LaurentPoly) -> int:
    """Order of vanishing of a rank-1 Laurent polynomial at ``u = 1``."""
    if p.rank != 1:
        raise ValueError("rank-1 polynomial required")
    s, _ = _shift_to_poly(p)
    return polyalg.dense_root_multiplicity(_dense(s), ONE)


def _is_unit_poly(g: LaurentPoly) -> bool:
    return g.is_constant()


# ---------------------------------------------------------------- RatFunc
class RatFunc:
    """An element of ``Q(i)(u_1, ..., u_r)``; immutable and canonical."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, normalize: bool = True):
        if not isinstance(num, LaurentPoly):
            raise TypeError("numerator must be a LaurentPoly")
        if den is None:
            den = LaurentPoly.one(num.rank)
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.const(num.rank, den)
        if den.rank != num.rank:
            raise ValueError("numerator and denominator ranks differ")
        if den.is_zero():
            raise InvalidRatFunc("zero denominator")
        if normalize:
            num, den = _canonicalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _canon(cls, num, den) -> "RatFunc":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @property
    def rank(self) -> int:
        return self.num.rank

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, rank: int, c=1) -> "RatFunc":
        return cls._canon(LaurentPoly.const(rank, c), LaurentPoly.one(rank))

    @classmethod
    def zero(cls, rank: int) -> "RatFunc":
        return cls.const(rank, 0)

    @classmethod
    def one(cls, rank: int) -> "RatFunc":
        return cls.const(rank, 1)

    @classmethod
    def coerce(cls, x, rank: int) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, LaurentPoly):
            return cls(x)
        return cls.const(rank, x)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        """True when the value is a Laurent polynomial (denominator 1)."""
        return self.den.is_constant()

    def is_real(self) -> bool:
        return self.num.is_real() and self.den.is_real()

    def is_canonical(self) -> bool:
        n, d = _canonicalize(self.num, self.den)
        return n == self.num and d == self.den

    # -- arithmetic -------------------------------------------------------
    def _other(self, other):
        if isinstance(other, RatFunc):
            if other.rank != self.rank:
                raise ValueError("rank mismatch")
            return other
        if isinstance(other, LaurentPoly):
            if other.rank != self.rank:
                raise ValueError("rank mismatch")
            return RatFunc(other)
        try:
            return RatFunc.const(self.rank, other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            t = a + c
            if b.is_constant():
                return RatFunc._canon(t, b)
            return RatFunc(t, b)
        g = poly_gcd(b, d)
        b1, d1 = poly_divexact(b, g), poly_divexact(d, g)
        t = a * d1 + c * b1
        if t.is_zero():
            return RatFunc.zero(self.rank)
        if _is_unit_poly(g):
            return _finish(t, b * d)
        ts, tm = _shift_to_poly(t)
        g2 = poly_gcd(ts, g)
        if not _is_unit_poly(g2):
            t = poly_divexact(ts, g2).scale_shift(ONE, tm)
            d = poly_divexact(d, g2)
        return _finish(t, b1 * d)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._canon(-self.num, self.den)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc.zero(self.rank)
        a, b, c, d = self.num, self.den, other.num, other.den
        a, d = _cancel(a, d)
        c, b = _cancel(c, b)
        return _finish(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return _finish(self.den, self.num, coprime=True)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        # coprime factors stay coprime under powers
        num = self.num ** k
        den = self.den ** k
        return _finish(num, den, coprime=True)

    def dual(self) -> "RatFunc":
        """Substitute ``t -> t^-1``."""
        return RatFunc(self.num.dual(), self.den.dual())

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, LaurentPoly):
            return self.den.is_constant() and self.num == other
        try:
            return self == RatFunc.const(self.rank, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    # -- rendering --------------------------------------------------------
    def render(self, names=None) -> str:
        num = self.num.render(names)
        if self.den.is_constant():
            return num
        den = self.den.render(names)
        if len(self.num) > 1:
            num = f"({num})"
        if len(self.den) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RatFunc({self.render()!r})"


def _cancel(p: LaurentPoly, q: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    """Divide out gcd(p, q); ``q`` is a canonical denominator-like polynomial."""
    if p.is_monomial() or q.is_constant():
        return p, q
    ps, pm = _shift_to_poly(p)
    qs, qm = _shift_to_poly(q)
    if p.rank > 1 and len(qs) <= len(ps):
        # q | p is common (exact quotients); it skips the gcd entirely
        quo, rem = polyalg.divmod_lex(ps.terms(), qs.terms())
        if not rem:
            one = LaurentPoly.one(p.rank)
            return LaurentPoly._raw(p.rank, quo).scale_shift(ONE, pm), one.scale_shift(ONE, qm)
    g = poly_gcd(ps, qs)
    if _is_unit_poly(g):
        return p, q
    return (poly_divexact(ps, g).scale_shift(ONE, pm),
            poly_divexact(qs, g).scale_shift(ONE, qm))


def _finish(num: LaurentPoly, den: LaurentPoly, coprime: bool = True):
    """Canonical shift and scaling of an already-coprime pair."""
    if den.is_zero():
        raise InvalidRatFunc("zero denominator")
    rank = num.rank
    if num.is_zero():
        return RatFunc._canon(num, LaurentPoly.one(rank))
    if not coprime:
        num, den = _canonicalize(num, den)
        return RatFunc._canon(num, den)
    dm = den.min_exponents()
    neg = tuple(-x for x in dm)
    if any(dm):
        den = den.scale_shift(ONE, neg)
        num = num.scale_shift(ONE, neg)
    _, lc = den.lead()
    if lc != 1:
        inv = ONE / lc
        den = den * inv
        num = num * inv
    return RatFunc._canon(num, den)


def _canonicalize(num: LaurentPoly, den: LaurentPoly):
    if den.is_zero():
        raise InvalidRatFunc("zero denominator")
    rank = num.rank
    if num.is_zero():
        return num, LaurentPoly.one(rank)
    num, den = _cancel(num, den)
    r = _finish(num, den)
    return r.num, r.den


def normalize(f: RatFunc) -> RatFunc:
    """Return the canonical representative of ``f`` (idempotent)."""
    if not isinstance(f, RatFunc):
        raise TypeError("RatFunc expected")
    if f.den.is_zero():
        raise InvalidRatFunc("zero denominator")
    num, den = _canonicalize(f.num, f.den)
    return RatFunc._canon(num, den)


def limit_at_identity(f: RatFunc):
    """Nonequivariant limit ``t^(1/2) -> 1``: a scalar or a :class:`PoleReport`."""
    f = f if f.is_canonical() else normalize(f)
    d1 = f.den.evaluate_at_one()
    n1 = f.num.evaluate_at_one()
    if d1 != 0:
        return canonical(n1 / d1)
    if f.rank == 1:
        return PoleReport(root_one_multiplicity(f.den) - root_one_multiplicity(f.num))
    nd, dd = f.num.diagonal(), f.den.diagonal()
    if nd.is_zero():
        return PoleReport(0, indeterminate=True)
    order = root_one_multiplicity(dd) - root_one_multiplicity(nd)
    if n1 != 0:
        return PoleReport(order)
    return PoleReport(order, indeterminate=True)


def limit_at_zero(f: RatFunc):
    """Specialisation ``t -> 0`` (all variables), or a :class:`PoleReport`.

    This is the numerical specialisation of equivariant Chow invariants.
    """
    f = f if f.is_canonical() else normalize(f)
    if f.is_zero():
        return ZERO
    d0 = f.den.constant_value()
    mins = f.num.min_exponents()
    if d0 != 0 and all(x >= 0 for x in mins):
        return canonical(f.num.constant_value() / d0)
    if f.rank == 1:
        (e, _), = [min(f.num.items())]
        dval = f.den.min_exponents()[0]
        pole_u = -e[0]
        # the canonical denominator has a nonzero constant term unless it
        # vanishes at 0 (impossible: min exponent 0 means nonzero constant)
        return PoleReport(Fraction(pole_u + dval, 2) if (pole_u + dval) % 2 else (pole_u + dval) // 2)
    return PoleReport(Fraction(-min(sum(e) for e, _ in f.num.items()), 2))
