import random
from fractions import Fraction

import pytest

from sqrteuler import testkit
from sqrteuler.classcalc import OrthWeightRep, WeightRep
from sqrteuler.errors import UnsupportedRank, ValidationError
from sqrteuler.frontend.parser import parse_ratfunc
from sqrteuler.localizer import (DT3Datum, FixedComponentDatum, chow_invariant, dt3_check,
                                 dt3_double, k_invariant, k_sqrt_euler_normal, rr_consistency,
                                 sqrt_euler_normal, sqrt_star, validate_datum)
from sqrteuler.scalars import PoleReport, PowerSeries, RatFunc

F = Fraction


def rf(src, rank=1):
    return parse_ratfunc(src, rank)


def W(*ws):
    return WeightRep(1, tuple((w,) for w in ws))


def E(weights, half, sign=1):
    return OrthWeightRep(1, tuple((w,) for w in weights), tuple((w,) for w in half), sign)


def point(t=(), e=None, fixed=1, name="P", **kw):
    return FixedComponentDatum(name, W(*t), e if e is not None else OrthWeightRep.empty(1), fixed,
                               **kw)


E22 = E([2, -2], [2])
E11 = E([1, -1], [1])


class TestValidation:
    def test_ok(self):
        assert validate_datum(point((1,), E22)) == []

    def test_zero_weight(self):
        codes = [i.code for i in validate_datum(point((0,), E22))]
        assert codes == ["ZeroMovingWeight"]

    def test_not_negation_closed(self):
        bad = OrthWeightRep.unchecked(1, [(3,), (-3,), (3,)], [(3,)], 1)
        codes = [i.code for i in validate_datum(point((), bad))]
        assert "NotNegationClosed" in codes

    def test_half_integer_insertion(self):
        d = point((1,), insertion=rf("t^(1/2)"))
        assert [i.code for i in validate_datum(d)] == ["HalfIntegerInsertion"]

    def test_invariant_raises(self):
        with pytest.raises(ValidationError) as exc:
            chow_invariant([point((0,))])
        assert exc.value.code == "ZeroMovingWeight"


class TestNormalClasses:
    def test_chow(self):
        assert sqrt_euler_normal(point((1,), E22)) == RatFunc.const(1, F(1, 2))
        assert sqrt_euler_normal(point((), E11)) == rf("t^-1")
        assert sqrt_euler_normal(point((1,))) == rf("t")

    def test_k(self):
        assert k_sqrt_euler_normal(point((1,), E22)) == rf("t^(1/2)/(t + 1)")
        assert k_sqrt_euler_normal(point((), E11)) == rf("1/(t^(1/2) - t^(-1/2))")
        assert k_sqrt_euler_normal(point((1,))) == rf("(1 - t^-1)*t^(1/2)")


class TestInvariants:
    def test_two_point_cancellation(self):
        res = chow_invariant([point((1,), E22, 1, "P1"), point((1,), E22, -1, "P2")])
        assert [v for _, v in res.per_point] == [RatFunc.const(1, 2), RatFunc.const(1, -2)]
        assert res.total.is_zero()

    def test_insertion(self):
        res = chow_invariant([point((1,), insertion=rf("t^2"))])
        assert res.total == rf("t")

    def test_empty(self):
        assert chow_invariant([]).total.is_zero()
        assert k_invariant([]).total.is_zero()

    def test_k_single(self):
        res = k_invariant([point((), E11)])
        assert res.total == rf("t^(1/2) - t^(-1/2)")
        assert res.limit == 0

    def test_mirror_points(self):
        # the half {-1} describes the same orientation as half {1} only with sign -1
        a = point((), E11, name="A")
        b = point((), E([1, -1], [-1], -1), name="B")
        res = k_invariant([a, b])
        assert res.per_point[0][1] == res.per_point[1][1]
        assert res.total == rf("2*(t^(1/2) - t^(-1/2))")
        # keeping sign +1 on both halves gives opposite orientations
        c = point((), E([1, -1], [-1], 1), name="C")
        assert k_invariant([a, c]).total.is_zero()

    def test_chow_limit_pole(self):
        assert chow_invariant([point((), E11)]).limit == 0
        res = chow_invariant([point((1,))])
        assert isinstance(res.limit, PoleReport) and res.limit.order == 1

    def test_odd_virtual_dimension(self):
        res = k_invariant([point((), E11)], virtual_dimension=3)
        assert res.total.is_zero()

    @pytest.mark.parametrize("seed", range(15))
    def test_orientation_coherence(self, seed):
        rng = random.Random(seed)
        data = [testkit.gen_datum(rng, name=f"P{k}") for k in range(4)]
        j = rng.randrange(4)
        flipped = list(data)
        flipped[j] = data[j].with_e_moving(data[j].e_moving.flipped())
        for engine in (chow_invariant, k_invariant):
            before, after = engine(data).per_point, engine(flipped).per_point
            for k, ((_, x), (_, y)) in enumerate(zip(before, after)):
                assert y == (-x if k == j else x)

    @pytest.mark.parametrize("seed", range(15))
    def test_half_choice_invariance(self, seed):
        rng = random.Random(seed)
        d = testkit.gen_datum(rng, max_pairs=4)
        base_c, base_k = chow_invariant([d]).total, k_invariant([d]).total
        for half, parity in testkit.enumerate_halves(d.e_moving):
            rep = d.e_moving
            alt = d.with_e_moving(OrthWeightRep(1, rep.weights, half, rep.sign * (-1) ** parity))
            assert chow_invariant([alt]).total == base_c
            assert k_invariant([alt]).total == base_k

    @pytest.mark.parametrize("seed", range(10))
    def test_permutation_invariance(self, seed):
        rng = random.Random(seed)
        data = [testkit.gen_datum(rng, name=f"P{k}") for k in range(8)]
        shuffled = list(data)
        rng.shuffle(shuffled)
        for engine in (chow_invariant, k_invariant):
            assert engine(data).total == engine(shuffled).total

    def test_total_is_sum(self):
        rng = random.Random(5)
        data = [testkit.gen_datum(rng, name=f"P{k}") for k in range(5)]
        res = k_invariant(data)
        acc = RatFunc.zero(1)
        for _, v in res.per_point:
            acc = acc + v
        assert acc == res.total

    def test_rank_two(self):
        e = OrthWeightRep.from_half(2, [(1, 0)])
        d = FixedComponentDatum("P", WeightRep(2, ((0, 1),)), e)
        assert chow_invariant([d]).total == rf("t1/t2", 2)


class TestRiemannRoch:
    def test_sinh(self):
        lhs, rhs, ok = rr_consistency(point((), E11), 6)
        expected = PowerSeries({1: 1, 3: F(1, 24), 5: F(1, 1920)}, 6)
        assert ok and lhs.agrees_with(expected, 6) and rhs.agrees_with(expected, 6)

    def test_empty(self):
        lhs, rhs, ok = rr_consistency(point(), 6)
        assert ok and lhs.agrees_with(PowerSeries.one(6), 6)

    def test_pole_case(self):
        assert rr_consistency(point((1,), E22), 6).consistent

    def test_rank_guard(self):
        d = FixedComponentDatum("P", WeightRep(2, ()), OrthWeightRep.empty(2))
        with pytest.raises(UnsupportedRank):
            rr_consistency(d, 4)

    @pytest.mark.parametrize("seed", range(20))
    def test_random(self, seed):
        d = testkit.gen_datum(seed, max_t=3, max_pairs=3)
        assert rr_consistency(d, 8).consistent


class TestDT3:
    def test_double(self):
        d = dt3_double(DT3Datum(W(1, 1), W(3)))
        assert d.t_moving == W(1, 1)
        assert sorted(d.e_moving.weights) == [(-3,), (3,)]
        assert d.e_moving.positive_half == ((3,),) and d.e_moving.sign == 1
        d = dt3_double(DT3Datum(W(), W(2, 2)))
        assert sorted(d.e_moving.weights) == [(-2,), (-2,), (2,), (2,)]

    def test_check(self):
        c = dt3_check(DT3Datum(W(1, 1), W(3)))
        assert c.chow_4fold == c.chow_3fold == rf("3*t^-1")
        assert c.chow_ok and c.k_ok
        c = dt3_check(DT3Datum(W(), W()))
        assert c.chow_4fold == RatFunc.one(1) and c.k_ok
        c = dt3_check(DT3Datum(W(2), W(2)))
        assert c.chow_4fold == RatFunc.one(1) and c.k_4fold == RatFunc.one(1)

    @pytest.mark.parametrize("seed", range(30))
    def test_random(self, seed):
        assert all(dt3_check(testkit.gen_dt3(seed)))

    def test_sqrt_star(self):
        assert sqrt_star(2, RatFunc.one(1)) == rf("t")
        assert sqrt_star(1, rf("1 - t^-1")) == rf("t^(1/2) - t^(-1/2)")
        f = rf("t + 3")
        assert sqrt_star(0, f) == f
