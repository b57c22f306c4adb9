"""Exact dense linear algebra over Q(i).

Matrices are lists of rows; vectors are lists.  Everything is exact and
deterministic: pivots are always the first usable entry in column order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .scalars.gaussian import canonical

Vector = List
Matrix = List[List]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[canonical(x) for x in row] for row in rows]


def transpose(a: Matrix) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def columns_to_matrix(cols: Sequence[Sequence], nrows: int) -> Matrix:
    return [[cols[j][i] for j in range(len(cols))] for i in range(nrows)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        r = []
        for j in range(ncols):
            acc = ZERO
            for k in range(inner):
                x = row[k]
                if x != 0:
                    y = b[k][j]
                    if y != 0:
                        acc = acc + x * y
            r.append(acc)
        out.append(r)
    return out


def bilinear(x: Sequence, g: Matrix, y: Sequence):
    """``x^T g y``."""
    acc = ZERO
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row = g[i]
        s = ZERO
        for j, yj in enumerate(y):
            if yj != 0 and row[j] != 0:
                s = s + row[j] * yj
        acc = acc + xi * s
    return acc


def det(a: Matrix):
    n = len(a)
    if n == 0:
        return ONE
    m = [list(row) for row in a]
    result = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        piv = m[c][c]
        result = result * piv
        inv = ONE / piv
        for r in range(c + 1, n):
            f = m[r][c]
            if f != 0:
                f = f * inv
                for k in range(c, n):
                    if m[c][k] != 0:
                        m[r][k] = m[r][k] - f * m[c][k]
    return canonical(result)


def rref(a: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form with first-available pivots."""
    m = [list(row) for row in a]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def column_rank(cols: Sequence[Sequence]) -> int:
    if not cols:
        return 0
    return rank([list(c) for c in cols])


def nullspace(a: Matrix, ncols: int) -> List[Vector]:
    """Basis of ``{x : a x = 0}``, one vector per free column (in column order)."""
    if not a:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for row, pc in zip(m, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def solve(a: Matrix, b: Sequence) -> Vector | None:
    """A solution of ``a x = b`` with free variables set to 0, or ``None``."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [canonical(bi)] for row, bi in zip(a, b)]
    m, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for row, pc in zip(m, pivots):
        x[pc] = row[ncols]
    return x


def vec_add(x: Sequence, y: Sequence) -> Vector:
    return [a + b for a, b in zip(x, y)]


def vec_scale(c, x: Sequence) -> Vector:
    return [c * a for a in x]


def vec_axpy(c, x: Sequence, y: Sequence) -> Vector:
    """``c*x + y``."""
    return [c * a + b for a, b in zip(x, y)]


def is_zero_vector(x: Sequence) -> bool:
    return all(a == 0 for a in x)


def greedy_independent(cols: Sequence[Sequence], start: Sequence[Sequence] = ()) -> List[Vector]:
    """Columns of ``cols`` that, taken in order, enlarge the span of ``start``."""
    chosen: List[Vector] = []
    current = [list(c) for c in start]
    r = column_rank(current)
    for c in cols:
        trial = current + [list(c)]
        rt = column_rank(trial)
        if rt > r:
            chosen.append(list(c))
            current = trial
            r = rt
    return chosen
