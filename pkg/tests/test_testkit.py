import pytest

from sqrteuler import testkit
from sqrteuler.classcalc import OrthWeightRep
from sqrteuler.errors import SizeLimit
from sqrteuler.quadspace import QuadraticSpace, isotropic_sign, orientation_validate
from sqrteuler.scalars.gaussian import I


class TestGenerators:
    def test_shape(self):
        r = testkit.gen_orth_rep(1, 1)
        (w,) = r.positive_half
        assert w != (0,) and sorted(r.weights) == sorted([w, (-w[0],)])
        assert testkit.gen_orth_rep(1, 0) == OrthWeightRep.empty(1)

    @pytest.mark.parametrize("seed", range(5))
    def test_determinism(self, seed):
        assert testkit.gen_orth_rep(seed, 4, 3) == testkit.gen_orth_rep(seed, 4, 3)
        assert testkit.gen_datum(seed) == testkit.gen_datum(seed)
        assert testkit.gen_dt3(seed) == testkit.gen_dt3(seed)
        a, b = testkit.random_signed_isotropic(seed, 3), testkit.random_signed_isotropic(seed, 3)
        assert a == b

    @pytest.mark.parametrize("seed", range(20))
    def test_bounds(self, seed):
        r = testkit.gen_orth_rep(seed, 6, 4, max_weight=3)
        assert r.n == 6 and r.rank == 4
        assert all(abs(x) <= 3 for w in r.weights for x in w)


class TestHalves:
    def test_small(self):
        r = testkit.gen_orth_rep(3, 1)
        halves = testkit.enumerate_halves(r)
        assert [d for _, d in halves] == [0, 1]
        assert len(testkit.enumerate_halves(testkit.gen_orth_rep(3, 2))) == 4

    @pytest.mark.parametrize("n", range(6))
    def test_declared_half_first(self, n):
        r = testkit.gen_orth_rep(n, n)
        assert testkit.enumerate_halves(r)[0] == (r.positive_half, 0)

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            testkit.enumerate_halves(testkit.gen_orth_rep(0, 6))


class TestBridge:
    def test_plane(self):
        r = OrthWeightRep(1, ((2,), (-2,)), ((2,),), 1)
        space, o, lam = testkit.weightrep_to_quadspace(r)
        assert space.gram == QuadraticSpace.hyperbolic(1).gram
        assert o.scalar == -I and isotropic_sign(space, o, lam) == 1
        space, o, lam = testkit.weightrep_to_quadspace(r.flipped())
        assert o.scalar == I and isotropic_sign(space, o, lam) == -1

    def test_two_pairs(self):
        r = OrthWeightRep.from_half(1, [(1,), (3,)])
        space, _, _ = testkit.weightrep_to_quadspace(r)
        assert space.gram == QuadraticSpace.hyperbolic(2).gram

    @pytest.mark.parametrize("seed", range(60))
    def test_soundness(self, seed):
        r = testkit.gen_orth_rep(seed, seed % 5, 1 + seed % 4)
        space, o, lam = testkit.weightrep_to_quadspace(r)
        assert orientation_validate(space, o)
        assert isotropic_sign(space, o, lam) == r.sign
        for mask, (half, d) in enumerate(testkit.enumerate_halves(r)):
            sign = isotropic_sign(space, o, testkit.flip_subspace(r.n, mask))
            assert sign == r.sign * (-1) ** d == r.rehalf(half).sign
