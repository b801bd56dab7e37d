"""Buchberger's algorithm and the ideal predicates built on it.

Over the rationals, working polynomials have integer coefficients and are
kept primitive (fraction-free reduction); over F_p they are kept monic.
Pairs are selected by the normal strategy (smallest lcm first) with the
product and chain criteria in Gebauer-Moeller form.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from .fields import CoeffField, PrimeField
from .poly import MPoly

DEFAULT_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    """Raised when a computation needs more S-pair reductions than allowed."""

    def __init__(self, budget: int):
        super().__init__(f"Groebner basis budget of {budget} S-pair reductions exceeded")
        self.budget = budget


# -- monomial orders --------------------------------------------------------


def _grevlex(e) -> tuple:
    return (sum(e),) + tuple(-x for x in reversed(e))


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex, lex (x1 > x2 > ...) or a block order eliminating ``elim``.

    In a block order any monomial involving the eliminated variables beats
    every monomial free of them; ties are broken by grevlex on the
    eliminated block, then by ``inner`` on the remaining variables.
    """

    kind: str = "grevlex"
    elim: tuple = ()
    inner: "MonomialOrder | None" = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and not self.elim:
            raise ValueError("block order needs variables to eliminate")

    def key(self, e: tuple) -> tuple:
        """Flat integer tuple; larger tuple means larger monomial."""
        if self.kind == "grevlex":
            return _grevlex(e)
        if self.kind == "lex":
            return tuple(e)
        elim = set(self.elim)
        head = _grevlex([e[i] for i in self.elim])
        rest = tuple(x for i, x in enumerate(e) if i not in elim)
        return head + (self.inner or GREVLEX).key(rest)

    def describe(self) -> str:
        if self.kind == "block":
            inner = (self.inner or GREVLEX).describe()
            return f"block(elim={list(self.elim)}, inner={inner})"
        return self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(elim: Sequence[int], inner: MonomialOrder = GREVLEX) -> MonomialOrder:
    return MonomialOrder("block", tuple(sorted(elim)), inner)


# -- internal polynomial representation --------------------------------------


class _Ctx:
    """Arithmetic context shared by one Groebner computation."""

    def __init__(self, field: CoeffField, nvars: int, order: MonomialOrder):
        self.field = field
        self.nvars = nvars
        self.order = order
        self.modular = isinstance(field, PrimeField)
        self.p = field.p if self.modular else None
        self._keys: dict = {}

    def key(self, e):
        k = self._keys.get(e)
        if k is None:
            k = self.order.key(e)
            self._keys[e] = k
        return k

    def heapkey(self, e):
        return tuple(-v for v in self.key(e))

    def lead(self, poly: dict):
        e = max(poly, key=self.key)
        return e, poly[e]

    def normalize(self, poly: dict) -> dict:
        """Monic (mod p) or primitive with positive leading coefficient."""
        if not poly:
            return poly
        _, c = self.lead(poly)
        if self.modular:
            inv = pow(c, -1, self.p)
            return {e: v * inv % self.p for e, v in poly.items()}
        g = reduce(gcd, poly.values())
        if c < 0:
            g = -g
        if g == 1:
            return poly
        return {e: v // g for e, v in poly.items()}

    def from_mpoly(self, f: MPoly) -> dict:
        if self.modular:
            return dict(f.terms)
        den = reduce(lcm, (Fraction(c).denominator for c in f.terms.values()), 1)
        return {e: int(Fraction(c) * den) for e, c in f.terms.items()}

    def to_mpoly(self, poly: dict) -> MPoly:
        if not poly:
            return MPoly.zero(self.field, self.nvars)
        _, c = self.lead(poly)
        if self.modular:
            inv = pow(c, -1, self.p)
            return MPoly._raw(self.field, self.nvars, {e: v * inv % self.p for e, v in poly.items()})
        return MPoly._raw(self.field, self.nvars, {e: Fraction(v, c) for e, v in poly.items()})


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm_exp(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: tuple, b: tuple) -> bool:
    return not any(x and y for x, y in zip(a, b))


class _Basis:
    """Polynomials with cached leading data, indexed by insertion order."""

    def __init__(self, ctx: _Ctx):
        self.ctx = ctx
        self.polys: list = []
        self.lts: list = []
        self.lcs: list = []

    def add(self, poly: dict) -> int:
        e, c = self.ctx.lead(poly)
        self.polys.append(poly)
        self.lts.append(e)
        self.lcs.append(c)
        return len(self.polys) - 1


def _reduce(ctx: _Ctx, poly: dict, basis: _Basis, active: Sequence[int], full: bool = True) -> dict:
    """Remainder of ``poly`` modulo the active basis elements."""
    if not poly or not active:
        return dict(poly)
    rem = dict(poly)
    heap = [(ctx.heapkey(e), e) for e in rem]
    heapq.heapify(heap)
    result: dict = {}
    lts = [(basis.lts[i], i) for i in active]
    modular, p = ctx.modular, ctx.p
    while heap:
        _, e = heapq.heappop(heap)
        c = rem.pop(e, None)
        if c is None:
            continue
        div = None
        for lt, i in lts:
            if _divides(lt, e):
                div = i
                break
        if div is None:
            result[e] = c
            if not full:
                # top reduction only: the rest is irreducible by assumption
                result.update(rem)
                return result
            continue
        g = basis.polys[div]
        lt = basis.lts[div]
        lc = basis.lcs[div]
        m = tuple(a - b for a, b in zip(e, lt))
        if modular:
            b = c * pow(lc, -1, p) % p
        else:
            g0 = gcd(c, lc)
            a, b = lc // g0, c // g0
            if a < 0:
                a, b = -a, -b
            if a != 1:
                for k in rem:
                    rem[k] *= a
                for k in result:
                    result[k] *= a
        for ge, gc in g.items():
            if ge == lt:
                continue
            t = tuple(x + y for x, y in zip(ge, m))
            old = rem.get(t)
            v = (old if old is not None else 0) - b * gc
            if modular:
                v %= p
            if v:
                if old is None:
                    heapq.heappush(heap, (ctx.heapkey(t), t))
                rem[t] = v
            elif old is not None:
                del rem[t]
    return result


def _spoly(ctx: _Ctx, basis: _Basis, i: int, j: int) -> dict:
    ei, ej = basis.lts[i], basis.lts[j]
    ci, cj = basis.lcs[i], basis.lcs[j]
    L = _lcm_exp(ei, ej)
    mi = tuple(a - b for a, b in zip(L, ei))
    mj = tuple(a - b for a, b in zip(L, ej))
    if ctx.modular:
        p = ctx.p
        fi, fj = cj % p, ci % p
    else:
        g0 = gcd(ci, cj)
        fi, fj = cj // g0, ci // g0
    res: dict = {}
    for e, c in basis.polys[i].items():
        t = tuple(a + b for a, b in zip(e, mi))
        res[t] = res.get(t, 0) + fi * c
    for e, c in basis.polys[j].items():
        t = tuple(a + b for a, b in zip(e, mj))
        res[t] = res.get(t, 0) - fj * c
    if ctx.modular:
        return {e: v % ctx.p for e, v in res.items() if v % ctx.p}
    return {e: v for e, v in res.items() if v}


@dataclass
class GroebnerBasis:
    field: CoeffField
    nvars: int
    order: MonomialOrder
    basis: list
    reductions: int = 0
    _ctx: _Ctx | None = dc_field(default=None, repr=False, compare=False)

    def is_unit(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.basis)

    def leading_monomials(self) -> list:
        return [max(g.terms, key=self.order.key) for g in self.basis]

    def normal_form(self, f: MPoly) -> MPoly:
        ctx = _Ctx(self.field, self.nvars, self.order)
        b = _Basis(ctx)
        for g in self.basis:
            b.add(ctx.from_mpoly(g))
        r = _reduce(ctx, ctx.from_mpoly(f), b, range(len(self.basis)))
        if not r:
            return MPoly.zero(self.field, self.nvars)
        if ctx.modular:
            return MPoly._raw(self.field, self.nvars, r)
        # undo the integer scaling: report the remainder up to a unit
        return ctx.to_mpoly(r)

    def contains(self, f: MPoly) -> bool:
        return self.normal_form(f).is_zero()

    def dimension(self) -> int:
        return ideal_dimension(self)


def buchberger(
    gens: Sequence[MPoly],
    order: MonomialOrder = GREVLEX,
    budget: int | None = DEFAULT_BUDGET,
) -> GroebnerBasis:
    """Reduced Groebner basis, sorted by increasing leading monomial."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    F, n = gens[0].field, gens[0].nvars
    for g in gens:
        if g.field != F or g.nvars != n:
            raise ValueError("generators must share one ring")
    ctx = _Ctx(F, n, order)
    unit = MPoly.constant(F, n, 1)
    inputs = [ctx.normalize(ctx.from_mpoly(g)) for g in gens if not g.is_zero()]
    if any(not any(e) for poly in inputs for e in poly if len(poly) == 1):
        return GroebnerBasis(F, n, order, [unit])
    basis = _Basis(ctx)
    active: list = []
    pairs: list = []  # heap of (lcm key, i, j, lcm)
    reductions = 0

    def update(h: int):
        nonlocal active, pairs
        lh = basis.lts[h]
        cand = [(g, _lcm_exp(basis.lts[g], lh)) for g in active]
        accepted = []
        while cand:
            g1, L1 = cand.pop(0)
            if _coprime(basis.lts[g1], lh) or not any(
                _divides(L2, L1) for _, L2 in cand + accepted
            ):
                accepted.append((g1, L1))
        kept = []
        for item in pairs:
            _, i, j, L = item
            if (
                _divides(lh, L)
                and _lcm_exp(basis.lts[i], lh) != L
                and _lcm_exp(basis.lts[j], lh) != L
            ):
                continue
            kept.append(item)
        for g, L in accepted:
            if not _coprime(basis.lts[g], lh):
                kept.append((ctx.key(L), g, h, L))
        pairs = kept
        heapq.heapify(pairs)
        active = [g for g in active if not _divides(lh, basis.lts[g])] + [h]

    def admit(poly: dict) -> bool:
        poly = ctx.normalize(poly)
        h = basis.add(poly)
        if len(poly) == 1 and not any(next(iter(poly))):
            return True
        update(h)
        return False

    for poly in inputs:
        r = _reduce(ctx, poly, basis, active)
        if r and admit(r):
            return GroebnerBasis(F, n, order, [unit], reductions)

    while pairs:
        _, i, j, L = heapq.heappop(pairs)
        s = _spoly(ctx, basis, i, j)
        reductions += 1
        if budget is not None and reductions > budget:
            raise BudgetExceeded(budget)
        r = _reduce(ctx, s, basis, active)
        if r and admit(r):
            return GroebnerBasis(F, n, order, [unit], reductions)

    # interreduce the minimal basis
    final = []
    for idx in active:
        others = [k for k in active if k != idx]
        r = _reduce(ctx, basis.polys[idx], basis, others)
        final.append(ctx.to_mpoly(ctx.normalize(r)))
    final.sort(key=lambda g: order.key(max(g.terms, key=order.key)))
    return GroebnerBasis(F, n, order, final, reductions)


def ideal_dimension(gb: GroebnerBasis) -> int:
    """Krull dimension of the quotient: the largest variable set avoided by every leading monomial."""
    if gb.is_unit():
        return -1
    supports = [frozenset(i for i, x in enumerate(e) if x) for e in gb.leading_monomials()]
    n = gb.nvars
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if all(not sup <= s for sup in supports):
                return size
    return 0


def saturate(gens: Sequence[MPoly], f: MPoly, budget: int | None = DEFAULT_BUDGET) -> list:
    """Generators of (I : f^infinity) via an extra variable z and 1 - z*f."""
    if f.is_zero():
        raise ValueError("cannot saturate at the zero polynomial")
    n = f.nvars
    F = f.field
    z = MPoly.var(F, n + 1, n)
    ext = [g.extend(1) for g in gens] + [1 - z * f.extend(1)]
    gb = buchberger(ext, block_order([n]), budget)
    out = [g.drop_vars([n]) for g in gb.basis if g.degree_in(n) <= 0]
    return out or [MPoly.zero(F, n)]


def eliminate(gens: Sequence[MPoly], elim: Sequence[int], budget: int | None = DEFAULT_BUDGET) -> list:
    """Generators of the elimination ideal, still written in all variables."""
    gb = buchberger(gens, block_order(elim), budget)
    return [g for g in gb.basis if all(g.degree_in(i) <= 0 for i in elim)]


def radical_membership(p: MPoly, gens: Sequence[MPoly], budget: int | None = DEFAULT_BUDGET) -> bool:
    """True iff p lies in the radical of (gens), by the Rabinowitsch trick."""
    n = p.nvars
    F = p.field
    if p.is_zero():
        return True
    z = MPoly.var(F, n + 1, n)
    ext = [g.extend(1) for g in gens] + [1 - z * p.extend(1)]
    return buchberger(ext, GREVLEX, budget).is_unit()


def is_regular_sequence_homogeneous(
    polys: Sequence[MPoly], nvars: int, budget: int | None = DEFAULT_BUDGET
) -> tuple:
    """(regular?, dimension) for a sequence of nonzero homogeneous polynomials."""
    polys = list(polys)
    for f in polys:
        if f.is_zero() or not f.is_homogeneous():
            raise ValueError("regularity criterion needs nonzero homogeneous polynomials")
        if f.nvars != nvars:
            raise ValueError("polynomial lives in the wrong ring")
    if len(polys) > nvars:
        raise ValueError("more polynomials than variables")
    if not polys:
        return True, nvars
    dim = ideal_dimension(buchberger(polys, GREVLEX, budget))
    return dim == nvars - len(polys), dim
