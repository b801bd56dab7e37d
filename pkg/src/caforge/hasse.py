"""Hasse-Schmidt derivations, the total derivation D_k and its powers."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

from .fields import QQ, CoeffField
from .poly import MPoly, UPoly, _reduce_coeff


def hs_uni(f: UPoly, i: int) -> UPoly:
    """i-th Hasse-Schmidt derivative: a_m X^m -> C(m, i) a_m X^(m-i)."""
    if i < 0:
        raise ValueError("order must be non-negative")
    F = f.field
    return UPoly(F, [F.mul(F.from_int(comb(m, i)), c) for m, c in enumerate(f.coeffs) if m >= i])


@lru_cache(maxsize=4096)
def _compositions(i: int, bounds: tuple) -> tuple:
    """All (j_1..j_s) with sum i and 0 <= j_t <= bounds[t]."""
    if not bounds:
        return ((),) if i == 0 else ()
    head, rest = bounds[0], bounds[1:]
    cap = sum(rest)
    out = []
    for j in range(min(head, i), -1, -1):
        if i - j > cap:
            break
        for tail in _compositions(i - j, rest):
            out.append((j,) + tail)
    return tuple(out)


def hs_multi(p: MPoly, i: int) -> MPoly:
    """Multivariate Hasse-Schmidt derivation of order i.

    On a monomial x^a it is the sum over j_1+...+j_k = i of
    prod C(a_t, j_t) x^(a-j); compositions only range over variables that
    occur in the monomial.
    """
    if i < 0:
        raise ValueError("order must be non-negative")
    if i == 0:
        return p
    F = p.field
    res: dict = {}
    for e, c in p.terms.items():
        support = tuple(t for t, a in enumerate(e) if a)
        bounds = tuple(e[t] for t in support)
        for js in _compositions(i, bounds):
            coef = c
            new = list(e)
            for t, j in zip(support, js):
                if j:
                    coef = coef * comb(e[t], j)
                    new[t] -= j
            key = tuple(new)
            res[key] = res.get(key, 0) + coef
    return _finish(F, p.nvars, res)


def _finish(F: CoeffField, nvars: int, res: dict) -> MPoly:
    out = {}
    for e, c in res.items():
        c = _reduce_coeff(F, c)
        if c:
            out[e] = c
    return MPoly._raw(F, nvars, out)


def total_derivation(p: MPoly) -> MPoly:
    """D_k = sum of all partial derivatives."""
    F = p.field
    res: dict = {}
    for e, c in p.terms.items():
        for t, a in enumerate(e):
            if a:
                key = e[:t] + (a - 1,) + e[t + 1:]
                res[key] = res.get(key, 0) + c * a
    return _finish(F, p.nvars, res)


def d_power(p: MPoly, i: int) -> MPoly:
    """D_k applied i times."""
    if i < 0:
        raise ValueError("order must be non-negative")
    for _ in range(i):
        if p.is_zero():
            break
        p = total_derivation(p)
    return p


def elementary_symmetric(n: int, d: int, field: CoeffField = QQ) -> MPoly:
    """e_d(x_1..x_n); e_0 = 1 and e_d = 0 for d > n."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    terms = {}
    for idx in combinations(range(n), d):
        e = [0] * n
        for t in idx:
            e[t] = 1
        terms[tuple(e)] = 1
    return MPoly(field, n, terms)


def product_of_variables(n: int, field: CoeffField = QQ) -> MPoly:
    """x_1 x_2 ... x_n."""
    return MPoly.monomial(field, (1,) * n)
