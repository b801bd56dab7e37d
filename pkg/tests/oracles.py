"""Reference computations built on sympy, independent of caforge."""

from itertools import product
from math import comb

import sympy as sp

X = sp.Symbol("X")


def hasse_coeffs(coeffs, i):
    """Ascending coefficients of the i-th Hasse derivative."""
    return [comb(m, i) * c for m, c in enumerate(coeffs)][i:]


def is_ca_counterexample(coeffs, p):
    """coeffs ascending, monic of degree n, over GF(p)."""
    n = len(coeffs) - 1
    f = sp.Poly(list(reversed(coeffs)), X, modulus=p)
    for i in range(1, n):
        fi = sp.Poly(list(reversed(hasse_coeffs(coeffs, i))) or [0], X, modulus=p)
        if sp.gcd(f, fi).degree() < 1:
            return False
    pure = any(f == sp.Poly((X - a) ** n, X, modulus=p) for a in range(p))
    return not pure


def counterexample_vectors(n, p):
    """Vectors (y1, ..., yn) with yn = 0 of every counterexample X^n + y1 X^(n-1) + ... ."""
    out = []
    for ys in product(range(p), repeat=n - 1):
        vec = list(ys) + [0]
        if is_ca_counterexample(list(reversed(vec)) + [1], p):
            out.append(vec)
    return sorted(out)


def bad_prime_counts(n, pmax):
    return {str(p): len(counterexample_vectors(n, p)) for p in sp.primerange(2, pmax + 1)}
