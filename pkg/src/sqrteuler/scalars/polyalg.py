"""Polynomial algorithms over Q(i) on plain ``{exponent tuple: coeff}`` dicts.

Exponents here are nonnegative.  Laurent polynomials are shifted into this
form by the caller.  The gcd is normalised by making the coefficient of the
lexicographically greatest exponent equal to 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Tuple

Exps = Tuple[int, ...]
PolyDict = Dict[Exps, object]

ONE = Fraction(1)
ZERO = Fraction(0)


# ---------------------------------------------------------------- dense 1-var
def trim(a: List) -> List:
    while a and a[-1] == 0:
        a.pop()
    return a


def dense_mul(a: List, b: List) -> List:
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return trim(out)


def dense_divmod(a: List, b: List) -> Tuple[List, List]:
    """Quotient and remainder of dense coefficient lists (low degree first)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], trim(a)
    inv_lead = ONE / b[-1]
    q = [ZERO] * (len(a) - db)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv_lead
        s = len(a) - 1 - db
        q[s] = c
        for k in range(db):
            if b[k]:
                a[s + k] -= c * b[k]
        a.pop()
        trim(a)
    return trim(q), a


def dense_monic(a: List) -> List:
    if not a:
        return []
    inv = ONE / a[-1]
    return [c * inv for c in a]


def dense_gcd(a: List, b: List) -> List:
    a, b = trim(list(a)), trim(list(b))
    while b:
        _, r = dense_divmod(a, b)
        a, b = b, (dense_monic(r) if r else r)
    return dense_monic(a)


def dense_root_multiplicity(a: List, root) -> int:
    """Multiplicity of ``root`` as a zero of the dense polynomial ``a``."""
    if not a:
        raise ValueError("zero polynomial has infinite multiplicity")
    m = 0
    a = list(a)
    while True:
        # synthetic division by (x - root)
        n = len(a) - 1
        if n == 0:
            return m
        q = [ZERO] * n
        acc = a[-1]
        q[n - 1] = acc
        for k in range(n - 1, 0, -1):
            acc = a[k] + acc * root
            q[k - 1] = acc
        remainder = a[0] + acc * root
        if remainder != 0:
            return m
        m += 1
        a = q


# ------------------------------------------------------------- sparse n-var
def lead_exp(a: PolyDict) -> Exps:
    return max(a)


def scale(a: PolyDict, c) -> PolyDict:
    if c == 0:
        return {}
    return {e: v * c for e, v in a.items()}


def monic(a: PolyDict) -> PolyDict:
    if not a:
        return {}
    lc = a[lead_exp(a)]
    if lc == 1:
        return dict(a)
    return scale(a, ONE / lc)


def add_into(acc: PolyDict, a: PolyDict, c=ONE) -> None:
    for e, v in a.items():
        w = acc.get(e, ZERO) + v * c
        if w == 0:
            acc.pop(e, None)
        else:
            acc[e] = w


def sub(a: PolyDict, b: PolyDict) -> PolyDict:
    out = dict(a)
    add_into(out, b, -ONE)
    return out


def mul(a: PolyDict, b: PolyDict) -> PolyDict:
    out: PolyDict = {}
    for ea, va in a.items():
        for eb, vb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            w = out.get(e, ZERO) + va * vb
            if w == 0:
                out.pop(e, None)
            else:
                out[e] = w
    return out


def divmod_lex(a: PolyDict, b: PolyDict) -> Tuple[PolyDict, PolyDict]:
    """Multivariate division by ``b`` with respect to lex order.

    Returns ``(q, r)`` with ``a = q*b + r``; ``r`` is zero exactly when the
    division is exact.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lb = lead_exp(b)
    inv = ONE / b[lb]
    rem = dict(a)
    q: PolyDict = {}
    r: PolyDict = {}
    while rem:
        le = lead_exp(rem)
        diff = tuple(x - y for x, y in zip(le, lb))
        if min(diff, default=0) < 0:
            r[le] = rem.pop(le)
            continue
        c = rem[le] * inv
        q[diff] = c
        for e, v in b.items():
            key = tuple(x + y for x, y in zip(e, diff))
            w = rem.get(key, ZERO) - c * v
            if w == 0:
                rem.pop(key, None)
            else:
                rem[key] = w
    return q, r


def divexact(a: PolyDict, b: PolyDict) -> PolyDict:
    q, r = divmod_lex(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def _to_dense(a: PolyDict) -> List:
    if not a:
        return []
    n = max(e[0] for e in a)
    out = [ZERO] * (n + 1)
    for e, v in a.items():
        out[e[0]] = v
    return out


def _from_dense(a: List) -> PolyDict:
    return {(k,): v for k, v in enumerate(a) if v != 0}


def _split_last(a: PolyDict) -> Dict[int, PolyDict]:
    out: Dict[int, PolyDict] = {}
    for e, v in a.items():
        out.setdefault(e[-1], {})[e[:-1]] = v
    return out


def _join_last(u: Dict[int, PolyDict]) -> PolyDict:
    out: PolyDict = {}
    for d, c in u.items():
        for e, v in c.items():
            out[e + (d,)] = v
    return out


def _content(u: Dict[int, PolyDict], k: int) -> PolyDict:
    g: PolyDict = {}
    for c in u.values():
        g = gcd(g, c, k) if g else monic(c)
        if len(g) == 1 and all(x == 0 for x in next(iter(g))):
            break
    return g


def _prem(a: Dict[int, PolyDict], b: Dict[int, PolyDict]) -> Dict[int, PolyDict]:
    """Pseudo-remainder of ``a`` by ``b`` as polynomials in the last variable."""
    db = max(b)
    lcb = b[db]
    r = {d: dict(c) for d, c in a.items()}
    while r and max(r) >= db:
        dr = max(r)
        lcr = r.pop(dr)
        shift = dr - db
        new: Dict[int, PolyDict] = {}
        for d, c in r.items():
            new[d] = mul(c, lcb)
        for d, c in b.items():
            if d == db:
                continue
            t = new.setdefault(d + shift, {})
            add_into(t, mul(c, lcr), -ONE)
        r = {d: c for d, c in new.items() if c}
    return r


def _evaluate(c: PolyDict, point: Tuple[int, ...]):
    total = ZERO
    for e, v in c.items():
        term = v
        for x, k in zip(point, e):
            term = term * x ** k
        total += term
    return total


def _coprime_in_last(a: Dict[int, PolyDict], b: Dict[int, PolyDict], nvars: int) -> bool:
    """Cheap certificate that ``gcd(a, b)`` has degree 0 in the last variable.

    Specialising the other variables at a point where neither leading
    coefficient vanishes can only raise the degree of the gcd, so a constant
    specialised gcd proves the claim.  ``False`` means "unknown".
    """
    la, lb = a[max(a)], b[max(b)]
    for k in range(4):
        point = tuple(2 + k + 3 * j for j in range(nvars - 1))
        if _evaluate(la, point) == 0 or _evaluate(lb, point) == 0:
            continue
        da = trim([_evaluate(a.get(d, {}), point) for d in range(max(a) + 1)])
        db = trim([_evaluate(b.get(d, {}), point) for d in range(max(b) + 1)])
        return len(dense_gcd(da, db)) <= 1
    return False


def gcd(a: PolyDict, b: PolyDict, nvars: int) -> PolyDict:
    """Greatest common divisor over Q(i), normalised to leading coefficient 1."""
    if not a:
        return monic(b)
    if not b:
        return monic(a)
    if nvars == 0:
        return {(): ONE}
    if nvars == 1:
        return _from_dense(dense_gcd(_to_dense(a), _to_dense(b)))
    ua, ub = _split_last(a), _split_last(b)
    ca, cb = _content(ua, nvars - 1), _content(ub, nvars - 1)
    c = gcd(ca, cb, nvars - 1)
    pa = {d: divexact(v, ca) for d, v in ua.items()}
    pb = {d: divexact(v, cb) for d, v in ub.items()}
    if max(pa) < max(pb):
        pa, pb = pb, pa
    if _coprime_in_last(pa, pb, nvars):
        pb, pa = {}, {0: {(0,) * (nvars - 1): ONE}}
    while pb:
        if max(pb) == 0:
            pa = {0: {(0,) * (nvars - 1): ONE}}
            break
        r = _prem(pa, pb)
        if not r:
            pa = pb
            break
        cr = _content(r, nvars - 1)
        r = {d: divexact(v, cr) for d, v in r.items()}
        # over a field the scalar content is free; keep the leading coefficient 1
        top = r[max(r)]
        inv = ONE / top[lead_exp(top)]
        pa, pb = pb, {d: scale(v, inv) for d, v in r.items()}
    g = {d: mul(v, c) for d, v in pa.items()}
    return monic(_join_last(g))
