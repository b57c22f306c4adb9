"""Equivariant characteristic classes of torus representations.

A representation is a multiset of weights in ``Z^r``.  Chow classes are
rational functions in ``t_1..t_r`` (a weight ``w`` contributes the linear
form ``<w, t>``), K-theory classes are rational functions in
``t^(1/2)`` (a weight contributes the character ``t^w``).  Both are
:class:`~sqrteuler.scalars.RatFunc` values.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, List, Sequence, Tuple

from .errors import NotUnipotent, OddRankUnsupported, UnsupportedRank, ValidationError
from .scalars.gaussian import canonical
from .scalars.laurent import LaurentPoly
from .scalars.ratfunc import RatFunc
from .scalars.series import PowerSeries, exp_substitute, series_sqrt_unit

KClass = RatFunc
ChowClass = RatFunc

Weight = Tuple[int, ...]

ONE = Fraction(1)
ZERO = Fraction(0)
HALF = Fraction(1, 2)


def _weight(w, rank: int) -> Weight:
    if isinstance(w, int):
        w = (w,)
    w = tuple(int(x) for x in w)
    if len(w) != rank:
        raise ValidationError("RankMismatch", f"weight {list(w)} is not of length {rank}")
    return w


def _neg(w: Weight) -> Weight:
    return tuple(-x for x in w)


def _lex_positive(w: Weight) -> bool:
    return next((x for x in w if x != 0), 0) > 0


@dataclass(frozen=True)
class WeightRep:
    """A multiset of torus weights (order is kept but irrelevant)."""

    rank: int
    weights: Tuple[Weight, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValidationError("RankMismatch", "torus rank must be positive")
        object.__setattr__(self, "weights", tuple(_weight(w, self.rank) for w in self.weights))

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __add__(self, other: "WeightRep") -> "WeightRep":
        if other.rank != self.rank:
            raise ValidationError("RankMismatch", "cannot add representations of different rank")
        return WeightRep(self.rank, self.weights + other.weights)

    def dual(self) -> "WeightRep":
        return WeightRep(self.rank, tuple(_neg(w) for w in self.weights))

    def total(self) -> Weight:
        return tuple(sum(w[j] for w in self.weights) for j in range(self.rank))

    def multiset(self) -> Counter:
        return Counter(self.weights)


@dataclass(frozen=True)
class OrthWeightRep:
    """A self-dual weight multiset with a chosen half and a sign.

    The orientation is the one for which the maximal isotropic spanned by
    the ``positive_half`` weight spaces has sign ``sign``.
    """

    rank: int
    weights: Tuple[Weight, ...]
    positive_half: Tuple[Weight, ...]
    sign: int = 1

    def __post_init__(self):
        ws = tuple(_weight(w, self.rank) for w in self.weights)
        half = tuple(_weight(w, self.rank) for w in self.positive_half)
        object.__setattr__(self, "weights", ws)
        object.__setattr__(self, "positive_half", half)
        if len(ws) % 2:
            raise OddRankUnsupported("odd-rank orthogonal representations are not supported")
        problems = orth_problems(self.rank, ws, half, self.sign)
        if problems:
            code, msg = problems[0]
            raise ValidationError(code, msg)
        object.__setattr__(self, "sign", int(self.sign))

    @classmethod
    def unchecked(cls, rank: int, weights, positive_half, sign=1) -> "OrthWeightRep":
        """Build without validation, so that bad input can be reported later."""
        obj = cls.__new__(cls)
        object.__setattr__(obj, "rank", rank)
        object.__setattr__(obj, "weights", tuple(tuple(w) for w in weights))
        object.__setattr__(obj, "positive_half", tuple(tuple(w) for w in positive_half))
        object.__setattr__(obj, "sign", sign)
        return obj

    def problems(self) -> List[Tuple[str, str]]:
        return orth_problems(self.rank, self.weights, self.positive_half, self.sign)

    @classmethod
    def from_half(cls, rank: int, half: Iterable, sign: int = 1) -> "OrthWeightRep":
        half = tuple(_weight(w, rank) for w in half)
        return cls(rank, half + tuple(_neg(w) for w in half), half, sign)

    @classmethod
    def with_default_half(cls, rank: int, weights: Iterable, sign: int = 1) -> "OrthWeightRep":
        """Orient by the lexicographically positive weights."""
        ws = tuple(_weight(w, rank) for w in weights)
        return cls(rank, ws, tuple(w for w in ws if _lex_positive(w)), sign)

    @classmethod
    def empty(cls, rank: int) -> "OrthWeightRep":
        return cls(rank, (), (), 1)

    @property
    def n(self) -> int:
        return len(self.positive_half)

    def all_weights(self) -> WeightRep:
        return WeightRep(self.rank, self.weights)

    def half_rep(self) -> WeightRep:
        return WeightRep(self.rank, self.positive_half)

    def flip_distance(self, half: Sequence[Weight]) -> int:
        """Number of pair swaps taking ``positive_half`` to ``half``."""
        old, new = Counter(self.positive_half), Counter(_weight(w, self.rank) for w in half)
        return sum(abs(old[w] - new[w]) for w in set(old) | set(new) if _lex_positive(w))

    def rehalf(self, half: Iterable) -> "OrthWeightRep":
        """The same orientation described through another half."""
        half = tuple(_weight(w, self.rank) for w in half)
        d = self.flip_distance(half)
        return OrthWeightRep(self.rank, self.weights, half, self.sign * (-1) ** d)

    def negated_half(self) -> "OrthWeightRep":
        return self.rehalf(_neg(w) for w in self.positive_half)

    def flipped(self) -> "OrthWeightRep":
        return OrthWeightRep(self.rank, self.weights, self.positive_half, -self.sign)

    def __add__(self, other: "OrthWeightRep") -> "OrthWeightRep":
        if other.rank != self.rank:
            raise ValidationError("RankMismatch", "cannot add representations of different rank")
        return OrthWeightRep(self.rank, self.weights + other.weights,
                             self.positive_half + other.positive_half, self.sign * other.sign)

    def reduced(self, k_weights: Iterable) -> "OrthWeightRep":
        """Remove the isotropic ``K`` (a sub-multiset of the half) and ``-K``."""
        k = Counter(_weight(w, self.rank) for w in k_weights)
        half = Counter(self.positive_half)
        if any(half[w] < m for w, m in k.items()):
            raise ValidationError("InvalidHalf", "K must be a sub-multiset of the positive half")
        rest = Counter(self.weights)
        rest.subtract(k)
        rest.subtract(Counter({_neg(w): m for w, m in k.items()}))
        half.subtract(k)
        return OrthWeightRep(self.rank, tuple(rest.elements()), tuple(half.elements()), self.sign)


def orth_problems(rank: int, weights, half, sign) -> List[Tuple[str, str]]:
    """Everything wrong with the given orthogonal weight data."""
    out = []
    if any(all(x == 0 for x in w) for w in weights):
        out.append(("ZeroWeight", "orthogonal weights must be nonzero"))
    ms = Counter(weights)
    if any(ms[w] != ms[_neg(w)] for w in ms):
        out.append(("NotNegationClosed", "weights are not closed under negation"))
    elif len(weights) % 2:
        out.append(("OddRank", "odd-rank orthogonal representations are not supported"))
    h = Counter(half)
    doubled = h + Counter({_neg(w): m for w, m in h.items()})
    if len(half) * 2 != len(weights) or doubled != ms:
        out.append(("InvalidHalf", "positive_half must pick one weight from each {w, -w} pair"))
    if sign not in (1, -1):
        out.append(("InvalidSign", "sign must be +1 or -1"))
    return out


# ---------------------------------------------------------------- factors
def linear_form(w: Weight) -> LaurentPoly:
    """``<w, t>`` as a polynomial in ``t_1..t_r``."""
    r = len(w)
    terms = {}
    for j, x in enumerate(w):
        if x:
            e = [0] * r
            e[j] = 2
            terms[tuple(e)] = x
    return LaurentPoly(r, terms)


def character(w: Weight) -> LaurentPoly:
    return LaurentPoly.character(w)


def _k_factor(w: Weight) -> LaurentPoly:
    # 1 - t^-w
    return LaurentPoly.one(len(w)) - LaurentPoly.character(_neg(w))


def _product(factors, rank: int) -> LaurentPoly:
    out = LaurentPoly.one(rank)
    for f in factors:
        out = out * f
    return out


# ---------------------------------------------------------------- classes
def euler(rep: WeightRep) -> ChowClass:
    return RatFunc(_product((linear_form(w) for w in rep), rep.rank))


def sqrt_euler(rep: OrthWeightRep) -> ChowClass:
    return RatFunc(_product((linear_form(w) for w in rep.positive_half), rep.rank) * rep.sign)


def k_euler(rep: WeightRep) -> KClass:
    return RatFunc(_product((_k_factor(w) for w in rep), rep.rank))


def sqrt_det(rep: WeightRep) -> KClass:
    """``t^(sum of weights / 2)``."""
    return RatFunc(LaurentPoly.monomial(rep.total()))


def k_sqrt_euler(rep: OrthWeightRep) -> KClass:
    half = rep.half_rep()
    body = _product((_k_factor(w) for w in half), rep.rank)
    return RatFunc(body * LaurentPoly.monomial(half.total(), rep.sign))


def k_chern_poly(rep: WeightRep, x) -> KClass:
    """``prod (1 + x (1 - t^-w))``."""
    x = canonical(x)
    one = LaurentPoly.one(rep.rank)
    return RatFunc(_product((one + _k_factor(w) * x for w in rep), rep.rank))


def anderson_epsilon(rep: OrthWeightRep) -> KClass:
    half = rep.half_rep()
    return k_chern_poly(half.dual(), -HALF) * k_euler(half) * rep.sign


def anderson_correction(rep: OrthWeightRep) -> KClass:
    """``prod_half (t^(w/2) + t^(-w/2)) / 2``, the square root of ``c(E, -1/2)^-1`` inverted."""
    out = LaurentPoly.one(rep.rank)
    for w in rep.positive_half:
        out = out * (LaurentPoly.monomial(w) + LaurentPoly.monomial(_neg(w))) * HALF
    return RatFunc(out)


def k_sqrt_euler_from_anderson(rep: OrthWeightRep) -> KClass:
    return anderson_epsilon(rep) / anderson_correction(rep)


# ------------------------------------------------------ Catalan square root
def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def catalan_coefficient(i: int) -> Fraction:
    """``a_i = 2^(1-2i) C_(i-1)``, minus the ``i``-th Taylor coefficient of ``(1-y)^(1/2)``."""
    if i < 1:
        raise ValueError("Catalan coefficients start at i = 1")
    return Fraction(catalan(i - 1), 2 ** (2 * i - 1))


def _dense_mul(a, b):
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _dense_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def sq_poly_in_y(k: int) -> List[Fraction]:
    """``1 - sum_{i<=k} a_i y^i`` (coefficients, lowest degree first), ``y = 1 - x``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return [ONE] + [-catalan_coefficient(i) for i in range(1, k + 1)]


def sq_poly(k: int) -> List[Fraction]:
    """``Sq_k(x) = 1 - sum_{i<=k} a_i (1-x)^i`` expanded in ``x`` (lowest degree first)."""
    out = [ZERO] * (k + 1)
    for i, c in enumerate(sq_poly_in_y(k)):
        # (1-x)^i
        for j in range(i + 1):
            out[j] += c * comb(i, j) * (-1) ** j
    return _dense_trim(out)


def render_sq(k: int) -> str:
    """``Sq_k`` in the ``(1-x)`` basis, e.g. ``1 - 1/2*(1-x) - 1/8*(1-x)^2``."""
    parts = ["1"]
    for i in range(1, k + 1):
        a = catalan_coefficient(i)
        coeff = str(a)
        power = "(1-x)" if i == 1 else f"(1-x)^{i}"
        parts.append(f" - {coeff}*{power}")
    return "".join(parts)


def xhalf_defect(k: int) -> List[Fraction]:
    """``(1 - sum_{i<=k} a_i y^i)^2 - (1 - y)`` as coefficients in ``y``."""
    p = sq_poly_in_y(k)
    sq = _dense_mul(p, p)
    sq[0] -= 1
    sq[1] += 1
    return _dense_trim(sq)


def check_xhalf(k: int) -> bool:
    """The square differs from ``1-y`` by ``2 a_(k+1) y^(k+1) + O(y^(k+2))``."""
    d = xhalf_defect(k)
    low_ok = all(c == 0 for c in d[: k + 1])
    return low_ok and len(d) > k + 1 and d[k + 1] == 2 * catalan_coefficient(k + 1)


def check_sq12(k: int) -> bool:
    """``(1-v)^(k+1)`` divides ``Sq_k(v^2) - v`` in ``Q[v]``."""
    sq = sq_poly(k)
    poly = [ZERO] * (2 * len(sq) + 1)
    for i, c in enumerate(sq):
        poly[2 * i] += c
    poly[1] -= 1
    poly = _dense_trim(poly)
    # repeated synthetic division by (v - 1)
    for _ in range(k + 1):
        if not poly:
            return True
        q = [ZERO] * (len(poly) - 1)
        acc = ZERO
        for j in range(len(poly) - 1, 0, -1):
            acc = poly[j] + acc
            q[j - 1] = acc
        if poly[0] + acc != 0:
            return False
        poly = q
    return True


def nilpotent_sqrt(element: PowerSeries) -> PowerSeries:
    """Square root in ``Q(i)[x]/(x^N)`` by the finite Catalan sum, ``N = order + 1``.

    Uses ``sqrt(E) = 1 - sum_i a_i (1 - E)^i``; the sum stops because ``1 - E``
    is nilpotent.
    """
    if (element.valuation() or 0) < 0 or element[0] != 1:
        raise NotUnipotent("element must be 1 plus a nilpotent")
    n = element.order
    m = (PowerSeries.one(n) - element)
    out = PowerSeries.one(n)
    power = PowerSeries.one(n)
    for i in range(1, n + 1):
        power = (power * m).truncate(n)
        if power.is_zero():
            break
        out = out - power * catalan_coefficient(i)
    return out.truncate(n)


# ------------------------------------------------------------------ series
def _rank1(rep):
    if rep.rank != 1:
        raise UnsupportedRank("series classes are only defined for a rank-1 torus")


def todd_factor(w: int, order: int) -> PowerSeries:
    """``w s / (1 - e^(-w s))``."""
    if w == 0:
        return PowerSeries.one(order)
    # (1 - e^(-ws))/(ws) = sum_k (-w s)^k / (k+1)!
    coeffs = [Fraction((-w) ** k, factorial(k + 1)) for k in range(order + 1)]
    return PowerSeries(coeffs, order).inverse()


def todd_series(rep: WeightRep, order: int) -> PowerSeries:
    _rank1(rep)
    out = PowerSeries.one(order)
    for (w,) in rep:
        out = out * todd_factor(w, order)
    return out


def sqrt_todd_series(rep: WeightRep, order: int) -> PowerSeries:
    return series_sqrt_unit(todd_series(rep, order))


def sqrt_todd_virtual(plus: WeightRep, minus: WeightRep, order: int) -> PowerSeries:
    """``sqrt(td)`` of the virtual representation ``plus - minus``."""
    return series_sqrt_unit(todd_series(plus, order) / todd_series(minus, order))


def ch_series(kclass: KClass, order: int) -> PowerSeries:
    return exp_substitute(kclass, order)
