"""Seeded generators and brute-force oracles for the property suites."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from . import linalg
from .classcalc import OrthWeightRep, WeightRep
from .errors import SizeLimit
from .localizer import DT3Datum, FixedComponentDatum
from .quadspace import (Orientation, QuadraticSpace, Subspace, canonical_orientation,
                        reduce_with_basis)
from .scalars.gaussian import make

ONE = Fraction(1)
ZERO = Fraction(0)
MAX_ENUMERATION_PAIRS = 5

Seed = Union[int, random.Random]


@dataclass(frozen=True)
class Bounds:
    max_rank: int = 4
    max_weight: int = 4
    max_pairs: int = 6


def rng_for(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def gen_weight(rng: random.Random, rank: int, max_weight: int, nonzero: bool = True):
    while True:
        w = tuple(rng.randint(-max_weight, max_weight) for _ in range(rank))
        if not nonzero or any(w):
            return w


def gen_weight_rep(seed: Seed, size: int, rank: int = 1, max_weight: int = 4,
                   nonzero: bool = True) -> WeightRep:
    rng = rng_for(seed)
    return WeightRep(rank, tuple(gen_weight(rng, rank, max_weight, nonzero) for _ in range(size)))


def gen_orth_rep(seed: Seed, n: int, rank: int = 1, max_weight: int = 4) -> OrthWeightRep:
    """``n`` pairs ``{w, -w}`` with a uniformly random half and sign."""
    rng = rng_for(seed)
    half = []
    for _ in range(n):
        w = gen_weight(rng, rank, max_weight)
        half.append(w if rng.random() < 0.5 else tuple(-x for x in w))
    sign = rng.choice((1, -1))
    weights = list(half) + [tuple(-x for x in w) for w in half]
    rng.shuffle(weights)
    return OrthWeightRep(rank, tuple(weights), tuple(half), sign)


def gen_datum(seed: Seed, rank: int = 1, max_t: int = 4, max_pairs: int = 4,
              max_weight: int = 4, name: str = "P") -> FixedComponentDatum:
    rng = rng_for(seed)
    t = gen_weight_rep(rng, rng.randint(0, max_t), rank, max_weight)
    e = gen_orth_rep(rng, rng.randint(0, max_pairs), rank, max_weight)
    return FixedComponentDatum(name, t, e, rng.choice((1, -1)))


def gen_dt3(seed: Seed, rank: int = 1, max_size: int = 5, max_weight: int = 6) -> DT3Datum:
    rng = rng_for(seed)
    f0 = gen_weight_rep(rng, rng.randint(0, max_size), rank, max_weight)
    f1 = gen_weight_rep(rng, rng.randint(0, max_size), rank, max_weight)
    return DT3Datum(f0, f1, rng.choice((1, -1)))


def gen_gaussian(rng: random.Random, bound: int = 3, complex_part: bool = True):
    re = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    im = Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) if complex_part else 0
    return make(re, im)


# --------------------------------------------------------- half choices
def _flip(w):
    return tuple(-x for x in w)


def enumerate_halves(rep: OrthWeightRep) -> List[Tuple[Tuple, int]]:
    """Every half reachable by flipping a subset of pairs, with the flip count.

    Entry ``mask`` of the list flips the pairs set in the bitmask ``mask``;
    ``mask = 0`` is the declared half with ``d = 0``.
    """
    n = rep.n
    if n > MAX_ENUMERATION_PAIRS:
        raise SizeLimit(f"refusing to enumerate 2^{n} halves (limit n <= {MAX_ENUMERATION_PAIRS})")
    out = []
    for mask in range(2 ** n):
        half = tuple(_flip(w) if mask >> k & 1 else w for k, w in enumerate(rep.positive_half))
        out.append((half, bin(mask).count("1")))
    return out


# ----------------------------------------------------- quadspace bridge
def weightrep_to_quadspace(rep: OrthWeightRep) -> Tuple[QuadraticSpace, Orientation, Subspace]:
    """One hyperbolic block per pair; ``b_(2k-1)`` is the half weight, ``b_(2k)`` its negative."""
    space = QuadraticSpace.hyperbolic(rep.n)
    lam = flip_subspace(rep.n, 0)
    o = canonical_orientation(space, lam) if rep.n else Orientation(1)
    return space, Orientation(o.scalar * rep.sign), lam


def flip_subspace(n: int, mask: int) -> Subspace:
    """Coordinate isotropic: the half weight slot of each pair, or the other slot if flipped."""
    cols = []
    for k in range(n):
        v = [ZERO] * (2 * n)
        v[2 * k + (mask >> k & 1)] = ONE
        cols.append(tuple(v))
    return Subspace(tuple(cols))


def reduce_bridge(rep: OrthWeightRep, pairs: Sequence[int]):
    """Reduce the bridged space by the half slots of ``pairs``.

    Returns ``(reduced space, induced orientation, image of the half)`` with
    the image of ``span(positive_half)`` written in the quotient coordinates.
    """
    space, o, lam = weightrep_to_quadspace(rep)
    chosen = set(pairs)
    k_cols = tuple(c for j, c in enumerate(lam.columns) if j in chosen)
    reduced, ro, w_cols = reduce_with_basis(space, o, Subspace(k_cols))
    m = len(w_cols)
    if m == 0:
        return reduced, ro, Subspace(())
    a = linalg.columns_to_matrix(list(w_cols) + list(k_cols), space.dim)
    image = []
    for j, v in enumerate(lam.columns):
        if j in chosen:
            continue
        x = linalg.solve(a, v)
        image.append(tuple(x[:m]))
    return reduced, ro, Subspace(tuple(image))


# ------------------------------------------- random isotropic subspaces
@dataclass(frozen=True)
class SignedIsotropic:
    space: QuadraticSpace
    orientation: Orientation
    subspace: Subspace
    expected_sign: int


def random_signed_isotropic(seed: Seed, n: int, bound: int = 2) -> SignedIsotropic:
    """A maximal isotropic of known sign in a randomly coordinatised space.

    Starting from the standard frame of ``n`` hyperbolic planes with the
    orientation making ``span(e_i)`` positive, apply a random permutation of
    pairs, ``d`` swaps ``e_i <-> f_i`` (sign ``(-1)^d``) and an antisymmetric
    shear ``e_i -> e_i + sum_j A_ij f_j`` (sign unchanged), then change
    coordinates by a random unipotent upper-triangular matrix ``P``.
    """
    rng = rng_for(seed)
    r = 2 * n
    base = QuadraticSpace.hyperbolic(n)
    unit = lambda i: [ONE if j == i else ZERO for j in range(r)]
    es = [unit(2 * k) for k in range(n)]
    fs = [unit(2 * k + 1) for k in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    es, fs = [es[p] for p in perm], [fs[p] for p in perm]
    d = 0
    for k in range(n):
        if rng.random() < 0.5:
            es[k], fs[k] = fs[k], es[k]
            d += 1
    a = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = gen_gaussian(rng, bound)
            a[i][j], a[j][i] = x, -x
    sheared = []
    for i in range(n):
        v = list(es[i])
        for j in range(n):
            if a[i][j] != 0:
                v = linalg.vec_axpy(a[i][j], fs[j], v)
        sheared.append(v)
    o = canonical_orientation(base, Subspace(tuple(tuple(u) for u in
                                                   [unit(2 * k) for k in range(n)]))) if n else \
        Orientation(1)
    # change of coordinates x = P y: Gram P^T G P, vectors P^-1 v, scalar c det P
    p = [[ONE if i == j else (gen_gaussian(rng, bound) if j > i else ZERO) for j in range(r)]
         for i in range(r)]
    g = linalg.matmul(linalg.matmul(linalg.transpose(p), base.matrix()), p)
    space = QuadraticSpace(tuple(tuple(row) for row in g))
    cols = []
    for v in sheared:
        y = linalg.solve(p, v)
        cols.append(tuple(y))
    # b_1^...^b_r = det(P) * b'_1^...^b'_r with b'_j = P e_j, so c' = c * det P
    orientation = Orientation(o.scalar * linalg.det(p))
    return SignedIsotropic(space, orientation, Subspace(tuple(cols)), (-1) ** d)


def random_basis_change(seed: Seed, sub: Subspace, bound: int = 2) -> Subspace:
    """The same subspace with a random invertible ``k x k`` change of basis."""
    rng = rng_for(seed)
    k = sub.k
    while True:
        m = [[gen_gaussian(rng, bound) for _ in range(k)] for _ in range(k)]
        if linalg.det(m) != 0:
            break
    cols = []
    for j in range(k):
        v = [ZERO] * len(sub.columns[0])
        for i in range(k):
            v = linalg.vec_axpy(m[i][j], sub.columns[i], v)
        cols.append(tuple(v))
    return Subspace(tuple(cols))
