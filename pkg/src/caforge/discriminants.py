"""Sylvester resultants and the higher discriminants disc^i_n = Res(f, f_i).

``f`` is the generic monic polynomial X^n + y1 X^(n-1) + ... + yn and
``f_i`` its i-th Hasse-Schmidt derivative.  Tables are cached per n, in
memory and on disk under ``$CA_FORGE_CACHE``.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Sequence

from .fields import QQ, CoeffField
from .poly import MPoly, UPoly, divexact, format_poly, parse_poly, var_names, weighted_degree

log = logging.getLogger(__name__)

MIN_N, MAX_N = 2, 8
CACHE_ENV = "CA_FORGE_CACHE"


def _trim(coeffs: Sequence[MPoly]) -> list:
    cs = list(coeffs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def sylvester_matrix(f: Sequence[MPoly], g: Sequence[MPoly]) -> list:
    """Sylvester matrix of coefficient lists (constant term first).

    The deg(g) rows built from f come first, then the deg(f) rows from g.
    """
    f, g = _trim(f), _trim(g)
    if not f or not g:
        raise ValueError("resultant of a zero polynomial")
    m, n = len(f) - 1, len(g) - 1
    if m == 0 and n == 0:
        raise ValueError("resultant undefined for two constants")
    zero = MPoly.zero(f[0].field, f[0].nvars)
    size = m + n
    fd, gd = f[::-1], g[::-1]
    rows = []
    for r in range(n):
        rows.append([fd[c - r] if 0 <= c - r <= m else zero for c in range(size)])
    for r in range(m):
        rows.append([gd[c - r] if 0 <= c - r <= n else zero for c in range(size)])
    return rows


def bareiss_det(matrix: list) -> MPoly:
    """Fraction-free determinant of a square matrix of MPoly entries."""
    M = [list(row) for row in matrix]
    size = len(M)
    if size == 0:
        raise ValueError("empty matrix")
    sign = 1
    prev = None
    for k in range(size - 1):
        if M[k][k].is_zero():
            swap = next((r for r in range(k + 1, size) if not M[r][k].is_zero()), None)
            if swap is None:
                return MPoly.zero(M[0][0].field, M[0][0].nvars)
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        pivot = M[k][k]
        for i in range(k + 1, size):
            mik = M[i][k]
            row_i, row_k = M[i], M[k]
            for j in range(k + 1, size):
                v = row_i[j] * pivot
                if not mik.is_zero() and not row_k[j].is_zero():
                    v = v - mik * row_k[j]
                row_i[j] = v if prev is None else divexact(v, prev)
            row_i[k] = MPoly.zero(pivot.field, pivot.nvars)
        prev = pivot
    det = M[-1][-1]
    return -det if sign < 0 else det


def sylvester_resultant(f, g) -> MPoly:
    """Res(f, g) for coefficient lists of MPoly (constant first) or UPolys.

    UPoly inputs give a constant polynomial in zero variables.
    """
    f, g = _as_coeffs(f), _as_coeffs(g)
    fs, gs = _trim(f), _trim(g)
    if fs and gs and len(fs) == 1 and len(gs) > 1:
        # Res(c, g) = c^deg g
        return fs[0] ** (len(gs) - 1)
    return bareiss_det(sylvester_matrix(f, g))


def _as_coeffs(f) -> list:
    if isinstance(f, UPoly):
        return [MPoly.constant(f.field, 0, c) for c in f.coeffs]
    return list(f)


def resultant_upoly(f: UPoly, g: UPoly):
    """Resultant of two univariate polynomials as a field element."""
    return sylvester_resultant(f, g).constant_coeff()


def generic_monic(n: int, field: CoeffField = QQ) -> list:
    """Coefficients (constant first) of X^n + y1 X^(n-1) + ... + yn in n variables."""
    coeffs = [MPoly.var(field, n, n - 1 - k) for k in range(n)]
    coeffs.append(MPoly.constant(field, n, 1))
    return coeffs


def hs_coeffs(coeffs: Sequence[MPoly], i: int) -> list:
    """hs_uni applied to a polynomial with MPoly coefficients."""
    from math import comb

    return [c.scale(comb(m, i)) for m, c in enumerate(coeffs) if m >= i]


def y_names(n: int) -> tuple:
    return var_names(n, "y")


@dataclass(frozen=True)
class DiscriminantTable:
    n: int
    entries: dict
    reduced_entries: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        n = self.n
        for i, d in self.entries.items():
            for c in d.terms.values():
                if c.denominator != 1:
                    raise ValueError(f"disc^{i}_{n} has a non-integer coefficient")
        if not self.reduced_entries:
            red = {i: d.substitute_constant(n - 1, 0).drop_vars([n - 1]) for i, d in self.entries.items()}
            object.__setattr__(self, "reduced_entries", red)
        weights = tuple(range(1, n))
        for i, r in self.reduced_entries.items():
            wd = weighted_degree(r, weights)
            if wd != n * (n - i):
                raise ValueError(f"reduced disc^{i}_{n} has weighted degree {wd}, expected {n * (n - i)}")

    def to_json_entries(self) -> list:
        weights = list(range(1, self.n + 1))
        return [
            {
                "n": self.n,
                "i": i,
                "weights": weights,
                "weighted_degree": weighted_degree(self.entries[i], weights),
                "poly": format_poly(self.entries[i], y_names(self.n)),
            }
            for i in sorted(self.entries)
        ]

    def reduced_json_entries(self) -> list:
        weights = list(range(1, self.n))
        return [
            {
                "n": self.n,
                "i": i,
                "weights": weights,
                "weighted_degree": weighted_degree(self.reduced_entries[i], weights),
                "poly": format_poly(self.reduced_entries[i], y_names(self.n - 1)),
            }
            for i in sorted(self.reduced_entries)
        ]


def compute_disc(n: int, i: int) -> MPoly:
    f = generic_monic(n)
    return sylvester_resultant(f, hs_coeffs(f, i))


_memory_cache: dict = {}


def _check_n(n: int) -> None:
    if not (isinstance(n, int) and MIN_N <= n <= MAX_N):
        raise ValueError(f"discriminant tables are limited to {MIN_N} <= n <= {MAX_N}, got {n}")


def cache_dir() -> Path:
    d = os.environ.get(CACHE_ENV)
    return Path(d) if d else Path.home() / ".cache" / "ca-forge"


def _cache_paths(n: int):
    d = cache_dir()
    return d / f"disc_n{n}.json", d / f"disc_n{n}.sha256"


def _dump(entries: list) -> str:
    return json.dumps(entries, indent=2, sort_keys=True) + "\n"


def _load_cached(n: int):
    path, sha_path = _cache_paths(n)
    try:
        text = path.read_text()
        digest = sha_path.read_text().strip()
    except OSError:
        return None
    if hashlib.sha256(text.encode()).hexdigest() != digest:
        log.warning("discriminant cache for n=%d fails its hash check; rebuilding", n)
        return None
    try:
        data = json.loads(text)
        entries = {e["i"]: parse_poly(e["poly"], n, QQ, y_names(n)) for e in data}
    except (ValueError, KeyError, TypeError):
        log.warning("discriminant cache for n=%d is malformed; rebuilding", n)
        return None
    if sorted(entries) != list(range(1, n)):
        return None
    return DiscriminantTable(n, entries)


def _store_cached(table: DiscriminantTable) -> None:
    path, sha_path = _cache_paths(table.n)
    text = _dump(table.to_json_entries())
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(text)
        os.replace(tmp, path)
        sha_path.write_text(hashlib.sha256(text.encode()).hexdigest() + "\n")
    except OSError as exc:
        log.warning("could not write discriminant cache: %s", exc)


def disc_table(n: int, use_cache: bool = True) -> DiscriminantTable:
    """All disc^i_n for 1 <= i <= n-1, with their y_n = 0 reductions."""
    _check_n(n)
    if use_cache and n in _memory_cache:
        return _memory_cache[n]
    table = _load_cached(n) if use_cache else None
    if table is None:
        table = DiscriminantTable(n, {i: compute_disc(n, i) for i in range(1, n)})
        if use_cache:
            _store_cached(table)
    _memory_cache[n] = table
    return table


def verify_cache(n: int) -> bool:
    """Recompute the table for n and compare with the cached copy's hash."""
    _check_n(n)
    path, sha_path = _cache_paths(n)
    fresh = DiscriminantTable(n, {i: compute_disc(n, i) for i in range(1, n)})
    digest = hashlib.sha256(_dump(fresh.to_json_entries()).encode()).hexdigest()
    try:
        return sha_path.read_text().strip() == digest
    except OSError:
        return False


def xn_defining_system(n: int, j: int | None = None) -> list:
    """Reduced discriminants disc^i_n(y1..y_{n-1}, 0) for i = 1..j (default n-1)."""
    table = disc_table(n)
    if j is None:
        j = n - 1
    if not 0 <= j <= n - 1:
        raise ValueError(f"truncation level must lie in 0..{n - 1}")
    return [table.reduced_entries[i] for i in range(1, j + 1)]


def disc_at(n: int, i: int, coeffs: Sequence, field: CoeffField) -> object:
    """Evaluate disc^i_n at the non-leading coefficients (y1..yn) of a monic f."""
    d = disc_table(n).entries[i]
    return d.change_field(field).evaluate(list(coeffs))


def monic_coeff_vector(f: UPoly) -> list:
    """(y1..yn) with f = X^n + y1 X^(n-1) + ... + yn."""
    if not f.is_monic():
        raise ValueError("polynomial must be monic")
    n = f.degree
    return [f.coeff(n - k) for k in range(1, n + 1)]


def poly_from_coeff_vector(field: CoeffField, ys: Sequence) -> UPoly:
    """Inverse of :func:`monic_coeff_vector`."""
    return UPoly(field, list(reversed(list(ys))) + [1])
