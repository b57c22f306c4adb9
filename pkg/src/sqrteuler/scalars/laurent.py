"""Multivariate Laurent polynomials in half-integer torus powers.

A ``LaurentPoly`` of rank ``r`` lives in ``Q(i)[u_1^±1, ..., u_r^±1]`` where
``u_j`` stands for ``t_j^(1/2)``.  The torus character ``t^w`` of a weight
``w`` in ``Z^r`` is therefore the monomial with exponent vector ``2w``.
All stored exponent vectors are in the ``u`` variables.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from . import polyalg
from .gaussian import canonical, format_scalar, is_real, real_part, imag_part

Exps = Tuple[int, ...]

ONE = Fraction(1)
ZERO = Fraction(0)


class LaurentPoly:
    """Immutable sparse Laurent polynomial; no zero coefficients are stored."""

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Mapping[Exps, object] | None = None):
        if rank < 0:
            raise ValueError("rank must be nonnegative")
        clean: Dict[Exps, object] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if len(e) != rank:
                    raise ValueError(f"exponent {e} does not have length {rank}")
                c = canonical(c)
                if c != 0:
                    clean[e] = clean.get(e, ZERO) + c
                    if clean[e] == 0:
                        del clean[e]
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, rank: int, terms: Dict[Exps, object]) -> "LaurentPoly":
        # trusted constructor: terms already canonical, nonzero, correct length
        obj = cls.__new__(cls)
        object.__setattr__(obj, "rank", rank)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, rank: int) -> "LaurentPoly":
        return cls._raw(rank, {})

    @classmethod
    def const(cls, rank: int, c=1) -> "LaurentPoly":
        c = canonical(c)
        return cls._raw(rank, {(0,) * rank: c} if c != 0 else {})

    @classmethod
    def one(cls, rank: int) -> "LaurentPoly":
        return cls.const(rank, 1)

    @classmethod
    def monomial(cls, u_exps: Sequence[int], c=1) -> "LaurentPoly":
        """The monomial ``c * u^u_exps`` (exponents in ``u = t^(1/2)``)."""
        rank = len(u_exps)
        return cls(rank, {tuple(u_exps): c})

    @classmethod
    def t_power(cls, t_exps: Sequence, c=1) -> "LaurentPoly":
        """The monomial ``c * t^t_exps`` with integer or half-integer exponents."""
        u = []
        for x in t_exps:
            d = Fraction(x) * 2
            if d.denominator != 1:
                raise ValueError(f"exponent {x} is not a half-integer")
            u.append(d.numerator)
        return cls.monomial(u, c)

    @classmethod
    def character(cls, weight: Sequence[int]) -> "LaurentPoly":
        """The torus character ``t^weight``."""
        return cls.monomial([2 * int(w) for w in weight])

    @classmethod
    def variable(cls, rank: int, j: int) -> "LaurentPoly":
        """The variable ``t_j`` (0-based), i.e. ``u_j^2``."""
        e = [0] * rank
        e[j] = 2
        return cls.monomial(e)

    # -- inspection -------------------------------------------------------
    def terms(self) -> Dict[Exps, object]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exps, object]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (
            len(self._terms) == 1 and all(x == 0 for x in next(iter(self._terms))))

    def constant_value(self):
        return self._terms.get((0,) * self.rank, ZERO)

    def coeff(self, u_exps: Sequence[int]):
        return self._terms.get(tuple(u_exps), ZERO)

    def has_integer_t_powers(self) -> bool:
        return all(x % 2 == 0 for e in self._terms for x in e)

    def is_real(self) -> bool:
        return all(is_real(c) for c in self._terms.values())

    def min_exponents(self) -> Exps:
        if not self._terms:
            return (0,) * self.rank
        return tuple(min(e[j] for e in self._terms) for j in range(self.rank))

    def lead(self) -> Tuple[Exps, object]:
        """The term with lexicographically greatest exponent vector."""
        e = max(self._terms)
        return e, self._terms[e]

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "LaurentPoly"):
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        try:
            return LaurentPoly.const(self.rank, other)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        polyalg.add_into(out, other._terms)
        return LaurentPoly._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.rank, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        polyalg.add_into(out, other._terms, -ONE)
        return LaurentPoly._raw(self.rank, out)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            self._check(other)
            if len(other._terms) == 1:
                (e, c), = other._terms.items()
                return self.scale_shift(c, e)
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                return other.scale_shift(c, e)
            return LaurentPoly._raw(self.rank, polyalg.mul(self._terms, other._terms))
        try:
            c = canonical(other)
        except TypeError:
            return NotImplemented
        return self.scale_shift(c, (0,) * self.rank)

    __rmul__ = __mul__

    def scale_shift(self, c, u_shift: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial ``c * u^u_shift``."""
        if c == 0:
            return LaurentPoly.zero(self.rank)
        if all(x == 0 for x in u_shift):
            if c == 1:
                return self
            return LaurentPoly._raw(self.rank, {e: v * c for e, v in self._terms.items()})
        return LaurentPoly._raw(
            self.rank,
            {tuple(a + b for a, b in zip(e, u_shift)): v * c for e, v in self._terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ZeroDivisionError("only monomials are invertible Laurent polynomials")
            (e, c), = self._terms.items()
            return LaurentPoly._raw(self.rank, {tuple(k * x for x in e): canonical(c ** k)})
        result = LaurentPoly.one(self.rank)
        base = self
        while True:
            if k & 1:
                result = result * base
            k >>= 1
            if not k:
                return result
            base = base * base

    def monomial_inverse(self) -> "LaurentPoly":
        return self ** -1

    def dual(self) -> "LaurentPoly":
        """Substitute ``t -> t^-1`` (the dual representation)."""
        return LaurentPoly._raw(self.rank, {tuple(-x for x in e): c for e, c in self._terms.items()})

    def conjugate(self) -> "LaurentPoly":
        from .gaussian import conjugate
        return LaurentPoly._raw(self.rank, {e: conjugate(c) for e, c in self._terms.items()})

    # -- evaluation -------------------------------------------------------
    def evaluate_at_one(self):
        """Value at ``u_1 = ... = u_r = 1``."""
        total = ZERO
        for c in self._terms.values():
            total = total + c
        return canonical(total)

    def diagonal(self) -> "LaurentPoly":
        """Restrict to the diagonal one-parameter subgroup ``u_j = u``."""
        out: Dict[Exps, object] = {}
        for e, c in self._terms.items():
            key = (sum(e),)
            w = out.get(key, ZERO) + c
            if w == 0:
                out.pop(key, None)
            else:
                out[key] = w
        return LaurentPoly._raw(1, out)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.rank == other.rank and self._terms == other._terms
        try:
            return self == LaurentPoly.const(self.rank, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.rank, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- rendering --------------------------------------------------------
    def sorted_terms(self):
        """Terms in descending graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda it: (sum(it[0]), it[0]), reverse=True)

    def render(self, names: Sequence[str] | None = None) -> str:
        return render_terms(self.sorted_terms(), self.rank, names)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentPoly({self.render()!r})"


def variable_names(rank: int):
    if rank == 1:
        return ("t",)
    return tuple(f"t{j + 1}" for j in range(rank))


def _fmt_exp(u: int) -> str:
    if u % 2 == 0:
        return str(u // 2)
    return f"({u}/2)"


def render_monomial(e: Exps, names: Sequence[str]) -> str:
    parts = []
    for name, u in zip(names, e):
        if u == 0:
            continue
        if u == 2:
            parts.append(name)
        else:
            parts.append(f"{name}^{_fmt_exp(u)}")
    return "*".join(parts)


def render_terms(terms, rank: int, names: Sequence[str] | None = None) -> str:
    """Canonical rendering of ``(exponent, coefficient)`` pairs, in order."""
    if names is None:
        names = variable_names(rank)
    if not terms:
        return "0"
    out = []
    for idx, (e, c) in enumerate(terms):
        mono = render_monomial(e, names)
        negative = False
        re_c, im_c = real_part(c), imag_part(c)
        if im_c == 0:
            negative = re_c < 0
            mag = -re_c if negative else re_c
            cs = format_scalar(mag)
        elif re_c == 0:
            negative = im_c < 0
            cs = format_scalar(-c if negative else c)
        else:
            cs = f"({format_scalar(c)})"
        if mono:
            body = mono if cs == "1" else f"{cs}*{mono}"
        else:
            body = cs
        if idx == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def product(factors: Iterable[LaurentPoly], rank: int) -> LaurentPoly:
    result = LaurentPoly.one(rank)
    for f in factors:
        result = result * f
    return result
