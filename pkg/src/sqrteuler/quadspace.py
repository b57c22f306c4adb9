"""Complex quadratic spaces over Q(i): hyperbolic frames, orientations, signs.

Conventions.  A space is ``C^r`` with ambient basis ``b_1..b_r`` and form
``q(x, y) = x^T G y``.  An orientation is stored as the scalar ``c`` in
``o = c * b_1 ^ ... ^ b_r``.  Top forms are paired through ``q`` with the
reversal rule ``(a_r* ^ ... ^ a_1*)(a_1 ^ ... ^ a_r) = 1``, so that
``(c b_1^...^b_r)^2`` pairs to ``c^2 det(G) (-1)^(r(r-1)/2)``; an
orientation must pair to ``(-1)^(r(r-1)/2)``, which is ``c^2 det(G) = 1``.

For a maximal isotropic ``L`` with hyperbolic frame ``e_i, f_i`` the sign of
``L`` is the ``s`` in ``o = s (-i)^n e_1^f_1^...^e_n^f_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .errors import (InternalConventionError, InvalidOrientation, NormalFormObstruction,
                     NotIsotropic, NotMaximalIsotropic, ShapeError)
from .scalars.gaussian import I, canonical, gaussian_sqrt, gaussian_sqrt_pair

ZERO = Fraction(0)
ONE = Fraction(1)
MINUS_I = -I


def _vec(v) -> Tuple:
    return tuple(canonical(x) for x in v)


@dataclass(frozen=True)
class QuadraticSpace:
    """``C^r`` with a nondegenerate symmetric Gram matrix over Q(i)."""

    gram: Tuple[Tuple, ...]

    def __post_init__(self):
        g = tuple(_vec(row) for row in self.gram)
        r = len(g)
        if any(len(row) != r for row in g):
            raise ShapeError("Gram matrix must be square")
        for i in range(r):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ShapeError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", g)
        if linalg.det(self.matrix()) == 0:
            raise ShapeError("Gram matrix is degenerate")

    @classmethod
    def hyperbolic(cls, n: int) -> "QuadraticSpace":
        """``n`` orthogonal hyperbolic planes ``[[0,1],[1,0]]``."""
        r = 2 * n
        g = [[ZERO] * r for _ in range(r)]
        for k in range(n):
            g[2 * k][2 * k + 1] = ONE
            g[2 * k + 1][2 * k] = ONE
        return cls(tuple(map(tuple, g)))

    @classmethod
    def identity(cls, r: int) -> "QuadraticSpace":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(r)) for i in range(r)))

    @property
    def dim(self) -> int:
        return len(self.gram)

    def matrix(self) -> List[List]:
        return [list(row) for row in self.gram]

    def det(self):
        return linalg.det(self.matrix())

    def q(self, x: Sequence, y: Sequence):
        return linalg.bilinear(x, self.gram, y)


@dataclass(frozen=True)
class Orientation:
    """The top form ``scalar * b_1 ^ ... ^ b_r``."""

    scalar: object

    def __post_init__(self):
        object.__setattr__(self, "scalar", canonical(self.scalar))

    def __neg__(self):
        return Orientation(-self.scalar)


@dataclass(frozen=True)
class Subspace:
    """The span of linearly independent column vectors."""

    columns: Tuple[Tuple, ...]

    def __post_init__(self):
        cols = tuple(_vec(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if cols and len({len(c) for c in cols}) != 1:
            raise ShapeError("subspace columns have different lengths")
        if linalg.column_rank(cols) != len(cols):
            raise ShapeError("subspace columns are linearly dependent")

    @classmethod
    def span(cls, *vectors) -> "Subspace":
        return cls(tuple(tuple(v) for v in vectors))

    @property
    def k(self) -> int:
        return len(self.columns)

    def basis(self, r: int) -> List[List]:
        """The ``r x k`` basis matrix."""
        return linalg.columns_to_matrix(self.columns, r)


@dataclass(frozen=True)
class HyperbolicFrame:
    e_basis: Tuple[Tuple, ...]
    f_basis: Tuple[Tuple, ...]
    unit: Optional[Tuple] = None

    @property
    def n(self) -> int:
        return len(self.e_basis)

    def interleaved(self) -> List[Tuple]:
        """Columns ``e_1, f_1, ..., e_n, f_n`` (then ``unit`` if present)."""
        cols: List[Tuple] = []
        for e, f in zip(self.e_basis, self.f_basis):
            cols += [e, f]
        if self.unit is not None:
            cols.append(self.unit)
        return cols

    def violations(self, space: QuadraticSpace) -> List[str]:
        """Frame identities that fail in ``space`` (empty when the frame is valid)."""
        bad = []
        q = space.q
        n = self.n
        for i in range(n):
            for j in range(n):
                if q(self.e_basis[i], self.e_basis[j]) != 0:
                    bad.append(f"q(e{i + 1},e{j + 1}) != 0")
                if q(self.f_basis[i], self.f_basis[j]) != 0:
                    bad.append(f"q(f{i + 1},f{j + 1}) != 0")
                if q(self.e_basis[i], self.f_basis[j]) != (1 if i == j else 0):
                    bad.append(f"q(e{i + 1},f{j + 1}) != delta")
        if self.unit is not None:
            if q(self.unit, self.unit) != 1:
                bad.append("q(e,e) != 1")
            for i in range(n):
                if q(self.unit, self.e_basis[i]) != 0 or q(self.unit, self.f_basis[i]) != 0:
                    bad.append(f"unit not orthogonal to pair {i + 1}")
        return bad


# --------------------------------------------------------------- helpers
def _check_sub(space: QuadraticSpace, sub: Subspace):
    if any(len(c) != space.dim for c in sub.columns):
        raise ShapeError(f"subspace vectors must have length {space.dim}")


def is_isotropic(space: QuadraticSpace, sub: Subspace) -> bool:
    _check_sub(space, sub)
    cols = sub.columns
    return all(space.q(x, y) == 0 for a, x in enumerate(cols) for y in cols[a:])


def _extend_frame(space: QuadraticSpace, es: Sequence[Tuple], span: Sequence[Sequence]):
    """Hyperbolic partners for the isotropic ``es`` inside ``span``.

    Lifts of the dual basis are the first-pivot solutions of ``(E^T G P) x = I``,
    then corrected by ``f_j -> f_j - q(f_j,f_j)/2 e_j - sum_{i<j} q(f_i,f_j) e_i``.
    """
    g = space.matrix()
    k = len(es)
    p = linalg.columns_to_matrix(list(span), space.dim)
    a = linalg.matmul(linalg.matmul([list(e) for e in es], g), p)
    lifts = []
    for j in range(k):
        x = linalg.solve(a, [ONE if i == j else ZERO for i in range(k)])
        if x is None:
            raise NotMaximalIsotropic("isotropic vectors have no dual in the given span")
        lifts.append([sum((p[r][c] * x[c] for c in range(len(x))), ZERO) for r in range(space.dim)])
    fs: List[List] = []
    for j, f in enumerate(lifts):
        new = linalg.vec_axpy(-space.q(f, f) / 2, es[j], f)
        for i in range(j):
            new = linalg.vec_axpy(-space.q(fs[i], f), es[i], new)
        fs.append(new)
    return [tuple(canonical(x) for x in f) for f in fs]


def hyperbolic_extend(space: QuadraticSpace, lam: Subspace) -> HyperbolicFrame:
    _check_sub(space, lam)
    r = space.dim
    if r % 2 or lam.k != r // 2 or not is_isotropic(space, lam):
        raise NotMaximalIsotropic(
            f"need an isotropic subspace of dimension {r // 2} in an even-dimensional space")
    ident = [tuple(ONE if i == j else ZERO for i in range(r)) for j in range(r)]
    fs = _extend_frame(space, lam.columns, ident)
    return HyperbolicFrame(tuple(lam.columns), tuple(fs))


def _complement(space: QuadraticSpace, basis: List[List], e, f) -> List[List]:
    # project the basis onto span(e, f)^perp and keep an independent subset
    projected = []
    for b in basis:
        v = linalg.vec_axpy(-space.q(b, f), e, b)
        v = linalg.vec_axpy(-space.q(b, e), f, v)
        projected.append(v)
    return linalg.greedy_independent(projected)


def _find_isotropic(space: QuadraticSpace, basis: List[List]):
    q = space.q
    for b in basis:
        if q(b, b) == 0:
            return list(b)
    # orthogonalise; a null residual vector is itself isotropic
    ortho: List[List] = []
    rest = [list(b) for b in basis]
    while rest:
        v = None
        for idx, w in enumerate(rest):
            if q(w, w) != 0:
                v = rest.pop(idx)
                break
        if v is None:
            return rest[0]
        qv = q(v, v)
        ortho.append(v)
        new_rest = []
        for w in rest:
            w2 = linalg.vec_axpy(-q(v, w) / qv, v, w)
            if not linalg.is_zero_vector(w2):
                if q(w2, w2) == 0:
                    return w2
                new_rest.append(w2)
        rest = new_rest
    # complete squares pairwise: a1 x^2 + a2 y^2 = 0 with x = 1
    for i in range(len(ortho)):
        for j in range(i + 1, len(ortho)):
            a1, a2 = q(ortho[i], ortho[i]), q(ortho[j], ortho[j])
            roots = gaussian_sqrt_pair(-a1 / a2)
            if roots is not None:
                return linalg.vec_axpy(roots[0], ortho[j], ortho[i])
    return None


def hyperbolic_normal_form(space: QuadraticSpace) -> HyperbolicFrame:
    r = space.dim
    basis = [[ONE if i == j else ZERO for i in range(r)] for j in range(r)]
    es, fs = [], []
    while len(basis) >= 2:
        e = _find_isotropic(space, basis)
        if e is None:
            raise NormalFormObstruction(
                f"no isotropic vector over Q(i) found in a {len(basis)}-dimensional block")
        pair = next(b for b in basis if space.q(e, b) != 0)
        f = linalg.vec_scale(ONE / space.q(e, pair), pair)
        f = linalg.vec_axpy(-space.q(f, f) / 2, e, f)
        es.append(tuple(e))
        fs.append(tuple(f))
        basis = _complement(space, basis, e, f)
    unit = None
    if basis:
        b = basis[0]
        root = gaussian_sqrt(space.q(b, b))
        if root is None:
            raise NormalFormObstruction(
                f"residual value {space.q(b, b)} is not a square in Q(i)")
        unit = tuple(canonical(x) for x in linalg.vec_scale(ONE / root, b))
    frame = HyperbolicFrame(tuple(es), tuple(fs), unit)
    bad = frame.violations(space)
    if bad:
        raise InternalConventionError("normal form failed: " + "; ".join(bad))
    return frame


# ----------------------------------------------------------- orientations
def _reversal_sign(r: int):
    # determinant of the order-reversing permutation matrix
    perm = [[ONE if j == r - 1 - i else ZERO for j in range(r)] for i in range(r)]
    return linalg.det(perm)


def orientation_square(space: QuadraticSpace, o: Orientation):
    """The pairing of ``o (x) o`` under ``q``, computed from the reversal rule.

    ``b_1^...^b_r`` maps to ``q(b_1)^...^q(b_r)``, which evaluates on
    ``b_1^...^b_r`` as ``det(q(b_(r+1-i), b_j))``.
    """
    g = space.matrix()
    reversed_rows = g[::-1]
    return o.scalar * o.scalar * linalg.det(reversed_rows)


def orientation_validate(space: QuadraticSpace, o: Orientation) -> bool:
    r = space.dim
    ok = orientation_square(space, o) == _reversal_sign(r)
    closed = o.scalar * o.scalar * space.det() == 1
    if ok != closed:
        raise InternalConventionError("orientation closed form disagrees with the pairing")
    return ok


def wedge_coordinate(space: QuadraticSpace, cols: Sequence[Sequence]):
    """The scalar ``w`` with ``v_1^...^v_r = w b_1^...^b_r``."""
    return linalg.det(linalg.columns_to_matrix(list(cols), space.dim))


def canonical_orientation(space: QuadraticSpace, lam: Subspace) -> Orientation:
    frame = hyperbolic_extend(space, lam)
    return Orientation(MINUS_I ** frame.n * wedge_coordinate(space, frame.interleaved()))


def isotropic_sign(space: QuadraticSpace, o: Orientation, lam: Subspace) -> int:
    if not orientation_validate(space, o):
        raise InvalidOrientation(f"c^2 det(G) = {o.scalar * o.scalar * space.det()} != 1")
    frame = hyperbolic_extend(space, lam)
    w = wedge_coordinate(space, frame.interleaved())
    sigma = o.scalar / (MINUS_I ** frame.n * w)
    if sigma == 1:
        return 1
    if sigma == -1:
        return -1
    raise InternalConventionError(f"isotropic sign evaluated to {sigma}")


def reduce(space: QuadraticSpace, o: Orientation, k_sub: Subspace):
    """``(K^perp/K, induced orientation)``; see :func:`reduce_with_basis`."""
    reduced, ro, _ = reduce_with_basis(space, o, k_sub)
    return reduced, ro


def reduce_with_basis(space: QuadraticSpace, o: Orientation, k_sub: Subspace):
    """The space ``K^perp/K`` with its induced orientation.

    ``K^perp/K`` is modelled by a complement ``W`` of ``K`` in ``K^perp``.  Then
    ``E = W (+) W^perp`` with ``K`` maximal isotropic in ``W^perp``, which carries
    the orientation making ``K`` positive; the orientation on ``W`` is the one
    whose product with it is ``o``.  Also returns the basis of ``W`` used as
    coordinates on the quotient.
    """
    _check_sub(space, k_sub)
    if not is_isotropic(space, k_sub):
        raise NotIsotropic("reduction needs an isotropic subspace")
    k = k_sub.k
    r = space.dim
    if k == 0:
        return space, o, [[ONE if i == j else ZERO for i in range(r)] for j in range(r)]
    g = space.matrix()
    kmat = [list(c) for c in k_sub.columns]
    k_perp = linalg.nullspace(linalg.matmul(kmat, g), r)
    w_cols = linalg.greedy_independent(k_perp, start=kmat)
    if len(w_cols) != r - 2 * k:
        raise InternalConventionError("complement of K in K^perp has the wrong dimension")
    w_perp = linalg.nullspace(linalg.matmul(w_cols, g), r) if w_cols else \
        [[ONE if i == j else ZERO for i in range(r)] for j in range(r)]
    fs = _extend_frame(space, k_sub.columns, w_perp)
    split: List[Sequence] = list(w_cols)
    for e, f in zip(k_sub.columns, fs):
        split += [e, f]
    scale = MINUS_I ** k * wedge_coordinate(space, split)
    reduced_gram = tuple(tuple(space.q(a, b) for b in w_cols) for a in w_cols)
    reduced = QuadraticSpace(reduced_gram)
    ro = Orientation(o.scalar / scale)
    if ro.scalar * ro.scalar * reduced.det() != o.scalar * o.scalar * space.det():
        raise InternalConventionError("induced orientation is not valid")
    return reduced, ro, [list(c) for c in w_cols]
