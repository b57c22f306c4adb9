import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sqrteuler import testkit
from sqrteuler.classcalc import (OrthWeightRep, WeightRep, anderson_epsilon, catalan_coefficient,
                                 ch_series, check_sq12, check_xhalf, euler, k_chern_poly, k_euler,
                                 k_sqrt_euler, k_sqrt_euler_from_anderson, nilpotent_sqrt,
                                 render_sq, sq_poly, sqrt_det, sqrt_euler, sqrt_todd_series,
                                 todd_series, xhalf_defect)
from sqrteuler.errors import NotUnipotent, OddRankUnsupported, UnsupportedRank, ValidationError
from sqrteuler.frontend.parser import parse_ratfunc
from sqrteuler.quadspace import isotropic_sign
from sqrteuler.scalars import PowerSeries, RatFunc

F = Fraction


def rf(src, rank=1):
    return parse_ratfunc(src, rank)


def W(*ws, rank=1):
    return WeightRep(rank, tuple(w if isinstance(w, tuple) else (w,) for w in ws))


def rep1(weights, half, sign=1):
    return OrthWeightRep(1, tuple((w,) for w in weights), tuple((w,) for w in half), sign)


E22 = rep1([2, -2], [2])


class TestTypes:
    def test_validation_codes(self):
        with pytest.raises(OddRankUnsupported):
            rep1([1, -1, 2], [1])
        for weights, half, sign, code in [
            ([1, 2], [1], 1, "NotNegationClosed"),
            ([0, 0], [0], 1, "ZeroWeight"),
            ([1, -1], [2], 1, "InvalidHalf"),
            ([1, -1], [1], 2, "InvalidSign"),
        ]:
            with pytest.raises(ValidationError) as exc:
                rep1(weights, half, sign)
            assert exc.value.code == code

    def test_mixed_multiplicity_half(self):
        r = rep1([1, 1, -1, -1], [1, -1])
        assert r.n == 2
        assert r.flip_distance(((1,), (1,))) == 1

    def test_default_half(self):
        r = OrthWeightRep.with_default_half(2, [(1, -1), (-1, 1), (0, -2), (0, 2)])
        assert r.positive_half == ((1, -1), (0, 2))


class TestClasses:
    def test_euler(self):
        assert euler(W(1, 2)) == rf("2*t^2")
        assert euler(W((1, 0), (0, 1), rank=2)) == rf("t1*t2", 2)
        assert euler(W(0)).is_zero()

    def test_sqrt_euler(self):
        assert sqrt_euler(rep1([3, -3], [3])) == rf("3*t")
        assert sqrt_euler(rep1([3, -3], [3], -1)) == rf("-3*t")
        assert sqrt_euler(rep1([1, -1, 2, -2], [1, 2])) == rf("2*t^2")

    def test_k_euler(self):
        assert k_euler(W(1)) == rf("1 - t^-1")
        assert k_euler(W(1, -1)) == rf("(1 - t^-1)*(1 - t)")
        assert k_euler(W(0)).is_zero()

    def test_sqrt_det(self):
        assert sqrt_det(W(1, 3)) == rf("t^2")
        assert sqrt_det(W(1)) == rf("t^(1/2)")
        assert sqrt_det(W()) == RatFunc.one(1)

    def test_k_sqrt_euler(self):
        assert k_sqrt_euler(E22) == rf("t - t^-1")
        assert k_sqrt_euler(E22) ** 2 == -k_euler(E22.all_weights())
        assert k_sqrt_euler(OrthWeightRep.empty(1)) == RatFunc.one(1)

    def test_k_chern_poly(self):
        assert k_chern_poly(W(3), F(-1, 2)) == rf("1/2*(1 + t^-3)")
        assert k_chern_poly(W(1, -1), 0) == RatFunc.one(1)
        assert k_chern_poly(W(1, -1), F(-1, 2)) == rf("1/4*(1 + t^-1)*(1 + t)")

    def test_anderson(self):
        assert anderson_epsilon(E22) == rf("1/2*(1 + t^2)*(1 - t^-2)")
        assert k_sqrt_euler_from_anderson(E22) == k_sqrt_euler(E22)
        assert anderson_epsilon(OrthWeightRep.empty(1)) == RatFunc.one(1)


def _rand_rep(seed):
    rng = random.Random(seed)
    return testkit.gen_orth_rep(rng, rng.randint(0, 5), rng.randint(1, 3))


class TestIdentities:
    @pytest.mark.parametrize("seed", range(60))
    def test_squaring(self, seed):
        r = _rand_rep(seed)
        sign = (-1) ** r.n
        assert k_sqrt_euler(r) ** 2 == k_euler(r.all_weights()) * sign
        assert sqrt_euler(r) ** 2 == euler(r.all_weights()) * sign

    @pytest.mark.parametrize("seed", range(40))
    def test_half_choice_independence(self, seed):
        r = testkit.gen_orth_rep(seed, seed % 5, 1 + seed % 3, max_weight=2)
        ke, ce = k_sqrt_euler(r), sqrt_euler(r)
        for half, d in testkit.enumerate_halves(r):
            other = OrthWeightRep(r.rank, r.weights, half, r.sign * (-1) ** d)
            assert k_sqrt_euler(other) == ke
            assert sqrt_euler(other) == ce
            assert r.rehalf(half).sign == other.sign

    @pytest.mark.parametrize("seed", range(40))
    def test_whitney(self, seed):
        a, b = _rand_rep(seed), _rand_rep(seed + 500)
        if a.rank != b.rank:
            b = testkit.gen_orth_rep(seed, b.n, a.rank)
        s = a + b
        assert sqrt_euler(s) == sqrt_euler(a) * sqrt_euler(b)
        assert k_sqrt_euler(s) == k_sqrt_euler(a) * k_sqrt_euler(b)

    @pytest.mark.parametrize("seed", range(40))
    def test_reduction(self, seed):
        rng = random.Random(seed)
        rep = testkit.gen_orth_rep(rng, rng.randint(1, 4), rng.randint(1, 3))
        pairs = rng.sample(range(rep.n), rng.randint(0, rep.n))
        kk = WeightRep(rep.rank, tuple(rep.positive_half[j] for j in pairs))
        red = rep.reduced(kk.weights)
        assert sqrt_euler(rep) == sqrt_euler(red) * euler(kk)
        assert k_sqrt_euler(rep) == k_sqrt_euler(red) * k_euler(kk) * sqrt_det(kk)
        # the induced orientation computed by linear algebra has the same sign
        space, ro, image = testkit.reduce_bridge(rep, pairs)
        got = isotropic_sign(space, ro, image) if image.k else ro.scalar
        assert got == red.sign

    @pytest.mark.parametrize("seed", range(30))
    def test_dual_isotropic(self, seed):
        r = _rand_rep(seed)
        d = r.negated_half()
        assert d.sign == r.sign * (-1) ** r.n
        assert k_sqrt_euler(d) == k_sqrt_euler(r)
        assert sqrt_euler(d) == sqrt_euler(r)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(-5, 5), max_size=6))
    def test_dual_k_euler(self, ws):
        rep = W(*ws)
        total = sum(ws)
        expected = k_euler(rep) * sqrt_det(W(2 * total)) * (-1) ** len(ws)
        assert k_euler(rep.dual()) == expected

    @pytest.mark.parametrize("seed", range(30))
    def test_anderson_relation(self, seed):
        r = _rand_rep(seed)
        assert k_sqrt_euler_from_anderson(r) == k_sqrt_euler(r)


class TestCatalan:
    def test_coefficients(self):
        assert [catalan_coefficient(i) for i in (1, 2, 3)] == [F(1, 2), F(1, 8), F(1, 16)]

    def test_sq_poly(self):
        assert render_sq(2) == "1 - 1/2*(1-x) - 1/8*(1-x)^2"
        assert sq_poly(1) == [F(1, 2), F(1, 2)]
        # 1 - 1/2 y - 1/8 y^2 at y = 1 - x
        assert sq_poly(2) == [F(3, 8), F(3, 4), F(-1, 8)]

    @pytest.mark.parametrize("k", range(1, 13))
    def test_xhalf_and_sq12(self, k):
        assert check_xhalf(k) and check_sq12(k)
        assert xhalf_defect(k)[k + 1] == 2 * catalan_coefficient(k + 1)

    def test_nilpotent_sqrt(self):
        r = nilpotent_sqrt(PowerSeries([1, -1], 2))
        assert r.coefficients == [1, F(-1, 2), F(-1, 8)]
        assert nilpotent_sqrt(PowerSeries.one(3)) == PowerSeries.one(3)
        assert nilpotent_sqrt(PowerSeries([1, 2, 1], 3)).agrees_with(PowerSeries([1, 1], 3))
        with pytest.raises(NotUnipotent):
            nilpotent_sqrt(PowerSeries([2, 1], 3))

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.builds(F, st.integers(-9, 9), st.integers(1, 9)), min_size=7,
                    max_size=7),
           st.integers(1, 7), st.builds(F, st.integers(1, 9), st.integers(1, 9)))
    def test_nilpotent_sqrt_uniqueness(self, tail, k, bump):
        e = PowerSeries([1] + tail, 7)
        m = nilpotent_sqrt(e)
        assert (m * m).agrees_with(e, 7)
        # any other unipotent candidate fails to square to e
        other = m + PowerSeries.monomial(k, bump, 7)
        assert not (other * other).agrees_with(e, 7)

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.builds(F, st.integers(-9, 9), st.integers(1, 9)), min_size=5, max_size=5),
           st.lists(st.builds(F, st.integers(-9, 9), st.integers(1, 9)), min_size=5, max_size=5))
    def test_nilpotent_sqrt_multiplicative(self, a, b):
        ea, eb = PowerSeries([1] + a, 5), PowerSeries([1] + b, 5)
        lhs = nilpotent_sqrt((ea * eb).truncate(5))
        assert lhs.agrees_with(nilpotent_sqrt(ea) * nilpotent_sqrt(eb), 5)


class TestSeriesClasses:
    def test_todd(self):
        t = todd_series(W(1), 2)
        assert t.coefficients == [1, F(1, 2), F(1, 12)]

    def test_ch(self):
        s = ch_series(rf("t^(1/2) - t^(-1/2)"), 3)
        assert s.agrees_with(PowerSeries({1: 1, 3: F(1, 24)}, 3))

    def test_str_witness(self):
        rep = rep1([1, -1], [1])
        lhs = ch_series(k_sqrt_euler(rep), 8)
        rhs = sqrt_todd_series(W(1, -1), 8).inverse() * PowerSeries({1: 1}, 9)
        assert lhs.agrees_with(rhs, 8)
        assert lhs[5] == F(1, 1920)

    def test_rank_guard(self):
        with pytest.raises(UnsupportedRank):
            todd_series(W((1, 0), rank=2), 3)
