"""Torus localization from fixed-point data.

Each isolated fixed point carries the moving weights of ``T^m`` (the
degree -2 term of the self-dual complex ``T^m -> E^m -> (T^m)*``, not a
3-fold tangent space; use :func:`dt3_double` for 3-fold data) and the
oriented moving part ``E^m``.  The contribution of ``[M^T]^vir`` at the
point is a user-supplied scalar ``fixed_contribution``; its sign convention
must match the orientation chosen on ``E^m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from .classcalc import (ChowClass, KClass, OrthWeightRep, WeightRep, euler, k_euler,
                        k_sqrt_euler, sqrt_det, sqrt_euler, sqrt_todd_virtual)
from .errors import UnsupportedRank, ValidationError
from .scalars.gaussian import canonical
from .scalars.laurent import LaurentPoly
from .scalars.ratfunc import RatFunc, limit_at_identity, limit_at_zero
from .scalars.series import PowerSeries, chow_to_series, exp_substitute

CHOW = "chow"
KTHEORY = "ktheory"


@dataclass(frozen=True)
class Issue:
    code: str
    message: str
    point: str = ""

    def __str__(self):
        where = f"{self.point}: " if self.point else ""
        return f"{where}{self.code}: {self.message}"


@dataclass(frozen=True)
class FixedComponentDatum:
    name: str
    t_moving: WeightRep
    e_moving: OrthWeightRep
    fixed_contribution: object = 1
    fixed_k_contribution: Optional[RatFunc] = None
    insertion: Optional[RatFunc] = None

    def __post_init__(self):
        object.__setattr__(self, "fixed_contribution", canonical(self.fixed_contribution))

    @property
    def rank(self) -> int:
        return self.t_moving.rank

    def k_fixed(self) -> RatFunc:
        if self.fixed_k_contribution is not None:
            return self.fixed_k_contribution
        return RatFunc.const(self.rank, self.fixed_contribution)

    def with_e_moving(self, e_moving: OrthWeightRep) -> "FixedComponentDatum":
        return FixedComponentDatum(self.name, self.t_moving, e_moving, self.fixed_contribution,
                                   self.fixed_k_contribution, self.insertion)


@dataclass(frozen=True)
class DT3Datum:
    """3-fold localization data: moving weights of ``F_0`` and ``F_1``."""

    f0_moving: WeightRep
    f1_moving: WeightRep
    fixed_contribution: object = 1
    name: str = "P"

    def __post_init__(self):
        object.__setattr__(self, "fixed_contribution", canonical(self.fixed_contribution))


@dataclass(frozen=True)
class LocalizationResult:
    per_point: Tuple[Tuple[str, RatFunc], ...]
    total: RatFunc
    theory: str

    @cached_property
    def limit(self):
        """``t^(1/2) -> 1`` in K-theory, ``t -> 0`` in Chow; may be a PoleReport."""
        if self.theory == KTHEORY:
            return limit_at_identity(self.total)
        return limit_at_zero(self.total)


# -------------------------------------------------------------- validation
def validate_datum(d: FixedComponentDatum) -> List[Issue]:
    """All problems with ``d``; an empty list means the datum is usable."""
    issues: List[Issue] = []
    r = d.rank
    if d.e_moving.rank != r or any(len(w) != r for w in d.t_moving.weights) \
            or any(len(w) != r for w in d.e_moving.weights + d.e_moving.positive_half):
        return [Issue("RankMismatch", "weights do not match the torus rank", d.name)]
    if any(all(x == 0 for x in w) for w in d.t_moving.weights):
        issues.append(Issue("ZeroMovingWeight", "t_moving contains a zero weight", d.name))
    for code, msg in d.e_moving.problems():
        if code == "ZeroWeight":
            code, msg = "ZeroMovingWeight", "e_moving contains a zero weight"
        issues.append(Issue(code, msg, d.name))
    for cls in (d.fixed_k_contribution, d.insertion):
        if cls is not None and cls.rank != r:
            issues.append(Issue("RankMismatch", "class rank does not match the torus rank", d.name))
    if d.insertion is not None and not d.insertion.num.has_integer_t_powers():
        issues.append(Issue("HalfIntegerInsertion", "Chow insertions need integer powers of t",
                            d.name))
    return issues


def _require_valid(data: Sequence[FixedComponentDatum]):
    issues = [i for d in data for i in validate_datum(d)]
    if issues:
        raise ValidationError(issues[0].code, "; ".join(map(str, issues)))


# --------------------------------------------------------- normal bundles
def sqrt_euler_normal(d: FixedComponentDatum) -> ChowClass:
    """``e(T^m) / sqrt(e)(E^m)``."""
    _require_valid([d])
    return euler(d.t_moving) / sqrt_euler(d.e_moving)


def k_sqrt_euler_normal(d: FixedComponentDatum) -> KClass:
    """``c(T^m) sqrt(det T^m) / e^(E^m)``, the K-theoretic square-root Euler class."""
    _require_valid([d])
    return k_euler(d.t_moving) * sqrt_det(d.t_moving) / k_sqrt_euler(d.e_moving)


def chow_contribution(d: FixedComponentDatum) -> ChowClass:
    ins = d.insertion if d.insertion is not None else RatFunc.one(d.rank)
    return sqrt_euler(d.e_moving) * ins * d.fixed_contribution / euler(d.t_moving)


def k_contribution(d: FixedComponentDatum) -> KClass:
    return d.k_fixed() * k_sqrt_euler(d.e_moving) / (k_euler(d.t_moving) * sqrt_det(d.t_moving))


def _rank_of(data, rank):
    if rank is not None:
        return rank
    return data[0].rank if data else 1


def _sum(values: List[RatFunc], rank: int) -> RatFunc:
    # balanced pairwise summation keeps intermediate denominators small
    if not values:
        return RatFunc.zero(rank)
    vals = list(values)
    while len(vals) > 1:
        nxt = [vals[i] + vals[i + 1] for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    return vals[0]


def _invariant(data, theory, contribution, virtual_dimension, rank):
    data = list(data)
    _require_valid(data)
    rank = _rank_of(data, rank)
    if any(d.rank != rank for d in data):
        raise ValidationError("RankMismatch", "fixed points have different torus ranks")
    if virtual_dimension is not None and virtual_dimension % 2:
        # odd virtual dimension: the virtual class is zero by definition
        zero = RatFunc.zero(rank)
        return LocalizationResult(tuple((d.name, zero) for d in data), zero, theory)
    per = [(d.name, contribution(d)) for d in data]
    return LocalizationResult(tuple(per), _sum([v for _, v in per], rank), theory)


def chow_invariant(data: Sequence[FixedComponentDatum], virtual_dimension: Optional[int] = None,
                   rank: Optional[int] = None) -> LocalizationResult:
    """``sum_P fixed_P * insertion_P / sqrt(e)(N^vir_P)``."""
    return _invariant(data, CHOW, chow_contribution, virtual_dimension, rank)


def k_invariant(data: Sequence[FixedComponentDatum], virtual_dimension: Optional[int] = None,
                rank: Optional[int] = None) -> LocalizationResult:
    """``sum_P fixed_P / e^(N^vir_P)``."""
    return _invariant(data, KTHEORY, k_contribution, virtual_dimension, rank)


# ------------------------------------------------------ Riemann-Roch check
@dataclass(frozen=True)
class RRCheck:
    lhs: PowerSeries
    rhs: PowerSeries
    consistent: bool

    def __iter__(self):
        return iter((self.lhs, self.rhs, self.consistent))


def rr_consistency(d: FixedComponentDatum, order: int) -> RRCheck:
    """Compare both sides of virtual Riemann-Roch at one fixed point.

    The left side expands the K-theory contribution under ``t = e^s``.  The
    right side is ``sqrt(td)(T^m + (T^m)* - E^m)`` times the Chow
    contribution read with ``t = s``.
    """
    _require_valid([d])
    if d.rank != 1:
        raise UnsupportedRank("Riemann-Roch comparison needs a rank-1 torus")
    lhs = exp_substitute(k_contribution(d), order)
    plain = FixedComponentDatum(d.name, d.t_moving, d.e_moving, 1)
    chow = chow_to_series(chow_contribution(plain), order)
    fixed = exp_substitute(d.k_fixed(), order)
    extra = -min(chow.valuation() or 0, 0) - min(fixed.valuation() or 0, 0)
    if extra:
        chow = chow_to_series(chow_contribution(plain), order + extra)
        fixed = exp_substitute(d.k_fixed(), order + extra)
    td = sqrt_todd_virtual(d.t_moving + d.t_moving.dual(), d.e_moving.all_weights(),
                           order + extra)
    rhs = (td * chow * fixed).truncate(order)
    return RRCheck(lhs, rhs, lhs.agrees_with(rhs, order))


# -------------------------------------------------------------- local CY4
def dt3_double(d3: DT3Datum) -> FixedComponentDatum:
    """``E = F (+) F^vee[2]``: ``T^m = F_0``, ``E^m = F_1 + F_1*`` with ``F_1`` positive."""
    r = d3.f0_moving.rank
    e = OrthWeightRep.from_half(r, d3.f1_moving.weights, 1)
    return FixedComponentDatum(d3.name, d3.f0_moving, e, d3.fixed_contribution)


def dt3_chow(d3: DT3Datum) -> ChowClass:
    """The 3-fold contribution ``e(F_1) / e(F_0)``."""
    return euler(d3.f1_moving) * d3.fixed_contribution / euler(d3.f0_moving)


def dt3_k(d3: DT3Datum) -> KClass:
    """The twisted 3-fold contribution ``c(F_1)/c(F_0) * sqrt(det(F_1 - F_0))``."""
    virt = WeightRep(d3.f0_moving.rank,
                     d3.f1_moving.weights + tuple(tuple(-x for x in w) for w in d3.f0_moving))
    return k_euler(d3.f1_moving) * sqrt_det(virt) * d3.fixed_contribution / k_euler(d3.f0_moving)


@dataclass(frozen=True)
class DT3Check:
    chow_4fold: ChowClass
    chow_3fold: ChowClass
    k_4fold: KClass
    k_3fold: KClass

    @property
    def chow_ok(self) -> bool:
        return self.chow_4fold == self.chow_3fold

    @property
    def k_ok(self) -> bool:
        return self.k_4fold == self.k_3fold

    def __iter__(self):
        return iter((self.chow_ok, self.k_ok))


def _dt3_problems(d3: DT3Datum) -> List[Issue]:
    out = []
    r = d3.f0_moving.rank
    if d3.f1_moving.rank != r:
        out.append(Issue("RankMismatch", "f0 and f1 have different ranks", d3.name))
    for label, rep in (("f0_moving", d3.f0_moving), ("f1_moving", d3.f1_moving)):
        if any(all(x == 0 for x in w) for w in rep):
            out.append(Issue("ZeroMovingWeight", f"{label} contains a zero weight", d3.name))
    return out


def dt3_check(d3: DT3Datum) -> DT3Check:
    issues = _dt3_problems(d3)
    if issues:
        raise ValidationError(issues[0].code, "; ".join(map(str, issues)))
    d4 = dt3_double(d3)
    return DT3Check(chow_contribution(d4), dt3_chow(d3), k_contribution(d4), dt3_k(d3))


def sqrt_star(weight: int, kclass: KClass) -> KClass:
    """``kclass * t^(w/2)``, the square-root twist at a fixed point."""
    if kclass.rank != 1:
        raise UnsupportedRank("sqrt_star is defined for a rank-1 torus")
    return kclass * LaurentPoly.monomial((int(weight),))
