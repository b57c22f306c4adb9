"""Acceptance criteria 1-9, each with its wall-clock budget.

Every criterion records one ``criterion N: PASS|FAIL`` line, printed at the
end of the pytest run (see ``conftest.py``) or directly when this file is
run as a script.
"""

import random
import time
from fractions import Fraction

import pytest

from sqrteuler import testkit
from sqrteuler.classcalc import (OrthWeightRep, WeightRep, catalan_coefficient, check_sq12,
                                 check_xhalf, euler, k_euler, k_sqrt_euler,
                                 k_sqrt_euler_from_anderson, nilpotent_sqrt, sqrt_det,
                                 sqrt_euler)
from sqrteuler.frontend.parser import parse_ratfunc
from sqrteuler.localizer import (DT3Datum, FixedComponentDatum, chow_invariant, dt3_check,
                                 k_invariant, rr_consistency)
from sqrteuler.quadspace import QuadraticSpace, Orientation, Subspace, isotropic_sign
from sqrteuler.scalars import PowerSeries, RatFunc, limit_at_identity
from sqrteuler.scalars.gaussian import I

F = Fraction
RESULTS = {}


def criterion(number, budget, title):
    def wrap(fn):
        def run():
            start = time.perf_counter()
            try:
                fn()
            except BaseException:
                RESULTS[number] = (False, time.perf_counter() - start, budget, title)
                raise
            elapsed = time.perf_counter() - start
            ok = budget is None or elapsed < budget
            RESULTS[number] = (ok, elapsed, budget, title)
            assert ok, f"criterion {number} took {elapsed:.2f}s (budget {budget}s)"
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


def summary_lines():
    out = []
    for number in sorted(RESULTS):
        ok, elapsed, budget, title = RESULTS[number]
        limit = f" < {budget}s" if budget else ""
        out.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} "
                   f"({elapsed:.2f}s{limit}) {title}")
    return out


def W(*ws):
    return WeightRep(1, tuple((w,) for w in ws))


def rf(src):
    return parse_ratfunc(src, 1)


def _rep(rng, max_pairs):
    return testkit.gen_orth_rep(rng, rng.randint(0, max_pairs), rng.randint(1, 4))


@criterion(1, 5, "squaring identity on 300 reps")
def test_criterion_1_squaring():
    rng = random.Random(101)
    for _ in range(300):
        rep = _rep(rng, 6)
        sign = (-1) ** rep.n
        assert k_sqrt_euler(rep) ** 2 == k_euler(rep.all_weights()) * sign
        assert sqrt_euler(rep) ** 2 == euler(rep.all_weights()) * sign


@criterion(2, 10, "half-choice independence, all halves, 100 reps")
def test_criterion_2_half_choice():
    rng = random.Random(202)
    for _ in range(100):
        rep = _rep(rng, 5)
        ke, ce = k_sqrt_euler(rep), sqrt_euler(rep)
        for half, d in testkit.enumerate_halves(rep):
            other = OrthWeightRep(rep.rank, rep.weights, half, rep.sign * (-1) ** d)
            assert k_sqrt_euler(other) == ke and sqrt_euler(other) == ce


@criterion(3, 5, "Whitney and reduction identities on 200 instances")
def test_criterion_3_whitney_reduction():
    rng = random.Random(303)
    for _ in range(200):
        rank = rng.randint(1, 4)
        a = testkit.gen_orth_rep(rng, rng.randint(0, 3), rank)
        b = testkit.gen_orth_rep(rng, rng.randint(0, 3), rank)
        s = a + b
        assert sqrt_euler(s) == sqrt_euler(a) * sqrt_euler(b)
        assert k_sqrt_euler(s) == k_sqrt_euler(a) * k_sqrt_euler(b)
        if s.n == 0:
            continue
        pairs = rng.sample(range(s.n), rng.randint(0, min(s.n, 4)))
        kk = WeightRep(rank, tuple(s.positive_half[j] for j in pairs))
        red = s.reduced(kk.weights)
        assert sqrt_euler(s) == sqrt_euler(red) * euler(kk)
        assert k_sqrt_euler(s) == k_sqrt_euler(red) * k_euler(kk) * sqrt_det(kk)
        if s.n <= 4:
            space, ro, image = testkit.reduce_bridge(s, pairs)
            got = isotropic_sign(space, ro, image) if image.k else ro.scalar
            assert got == red.sign


@criterion(4, 1, "Catalan square roots for k <= 12")
def test_criterion_4_catalan():
    assert catalan_coefficient(1) == F(1, 2) and catalan_coefficient(2) == F(1, 8)
    for k in range(1, 13):
        assert check_xhalf(k) and check_sq12(k)
    r = nilpotent_sqrt(PowerSeries([1, -1], 2))
    assert r.coefficients == [1, F(-1, 2), F(-1, 8)]


@criterion(5, 10, "Riemann-Roch bridge to order 8 on 100 data")
def test_criterion_5_riemann_roch():
    sinh = PowerSeries({1: 1, 3: F(1, 24), 5: F(1, 1920)}, 6)
    e11 = OrthWeightRep.from_half(1, [(1,)])
    lhs, rhs, ok = rr_consistency(FixedComponentDatum("P", W(), e11), 6)
    assert ok and lhs.agrees_with(sinh, 6) and rhs.agrees_with(sinh, 6)
    rng = random.Random(505)
    for _ in range(100):
        d = testkit.gen_datum(rng, max_t=4, max_pairs=4, max_weight=4)
        assert rr_consistency(d, 8).consistent


@criterion(6, 10, "local CY4 reduction on 500 DT3 data")
def test_criterion_6_dt3():
    c = dt3_check(DT3Datum(W(1, 1), W(3)))
    assert c.chow_4fold == c.chow_3fold == rf("3/t")
    assert c.chow_ok and c.k_ok
    rng = random.Random(606)
    for _ in range(500):
        chow_ok, k_ok = dt3_check(testkit.gen_dt3(rng, max_size=5, max_weight=6))
        assert chow_ok and k_ok


@criterion(7, None, "sign conventions and bridge soundness for n <= 4")
def test_criterion_7_signs():
    space, o = QuadraticSpace.identity(2), Orientation(1)
    assert isotropic_sign(space, o, Subspace.span((1, -I))) == 1
    assert isotropic_sign(space, o, Subspace.span((1, I))) == -1
    rng = random.Random(707)
    for _ in range(100):
        rep = testkit.gen_orth_rep(rng, rng.randint(0, 4), rng.randint(1, 4))
        space, o, lam = testkit.weightrep_to_quadspace(rep)
        assert isotropic_sign(space, o, lam) == rep.sign
        for mask, (_, d) in enumerate(testkit.enumerate_halves(rep)):
            assert isotropic_sign(space, o, testkit.flip_subspace(rep.n, mask)) == \
                rep.sign * (-1) ** d


@criterion(8, 5, "Anderson relation on 200 reps")
def test_criterion_8_anderson():
    rng = random.Random(808)
    for _ in range(200):
        rep = _rep(rng, 6)
        assert k_sqrt_euler_from_anderson(rep) == k_sqrt_euler(rep)


@criterion(9, 30, "localization engine end to end, 1000 points")
def test_criterion_9_engine():
    e22 = OrthWeightRep.from_half(1, [(2,)])
    pair = [FixedComponentDatum("P1", W(1), e22, 1), FixedComponentDatum("P2", W(1), e22, -1)]
    assert chow_invariant(pair).total.is_zero()
    assert limit_at_identity(rf("(t - t^-1)/(t^(1/2) - t^(-1/2))")) == 2
    rng = random.Random(909)
    small = [testkit.gen_datum(rng, name=f"Q{k}") for k in range(12)]
    shuffled = list(small)
    rng.shuffle(shuffled)
    assert k_invariant(small).total == k_invariant(shuffled).total
    assert chow_invariant(small).total == chow_invariant(shuffled).total
    data = [testkit.gen_datum(rng, max_t=12, max_pairs=12, max_weight=4, name=f"P{k}")
            for k in range(1000)]
    k_total = k_invariant(data).total
    c_total = chow_invariant(data).total
    assert k_total.is_canonical() and c_total.is_canonical()


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(summary_lines()))
