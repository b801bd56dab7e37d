"""Characteristic maps, shift projections, the involutions Phi_j and their
T-deformations, Vieta's map, and the tuple-indexed generator families.

Index arguments named ``j`` are 1-based, matching tuple notation such as
(3, 3); internally variable x_k has index k - 1.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .fields import QQ, CoeffField
from .hasse import elementary_symmetric, hs_multi, product_of_variables
from .poly import MPoly, RingHom, UPoly


def _check_index(j: int, upper: int, what: str = "index") -> None:
    if not (isinstance(j, int) and 1 <= j <= upper):
        raise ValueError(f"{what} {j!r} outside 1..{upper}")


# -- characteristic maps and roots ------------------------------------------


def characteristic_kernel(alphas: Sequence, base: int, field: CoeffField = QQ) -> list:
    """Linear generators x_j - x_base + (alpha_j - alpha_base), j != base."""
    n = len(alphas)
    _check_index(base, n, "base")
    a = [field.convert(v) for v in alphas]
    xb = MPoly.var(field, n, base - 1)
    return [
        MPoly.var(field, n, j) - xb + MPoly.constant(field, n, field.sub(a[j], a[base - 1]))
        for j in range(n)
        if j != base - 1
    ]


def characteristic_hom(alphas: Sequence, field: CoeffField = QQ) -> RingHom:
    """x_i -> X - alpha_i, into the one-variable ring."""
    X = MPoly.var(field, 1, 0)
    return RingHom([X - MPoly.constant(field, 1, field.convert(a)) for a in alphas])


def characteristic_apply(p: MPoly, alphas: Sequence) -> UPoly:
    if p.nvars != len(alphas):
        raise ValueError("need one alpha per variable")
    return characteristic_hom(alphas, p.field)(p).to_upoly(0)


def root_map(alphas: Sequence, field: CoeffField = QQ) -> UPoly:
    """prod (X + alpha_i); note the plus sign."""
    return UPoly.from_roots(field, [field.neg(field.convert(a)) for a in alphas])


def coefficient_map(ys: Sequence, field: CoeffField = QQ) -> UPoly:
    """(y1..yn) -> X^n + y1 X^(n-1) + ... + yn."""
    return UPoly(field, [field.convert(y) for y in reversed(list(ys))] + [1])


def vieta_map(point: Sequence, field: CoeffField = QQ) -> tuple:
    """Slot i holds (-1)^i e_i(point), i = 1..n."""
    pt = [field.convert(a) for a in point]
    f = UPoly.from_roots(field, pt)
    n = len(pt)
    # coefficients of prod (X - a_i) are exactly (-1)^i e_i
    return tuple(f.coeff(n - i) for i in range(1, n + 1))


def shift_projection(point: Sequence, j: int, field: CoeffField | None = None) -> tuple:
    """Subtract the j-th coordinate from every coordinate."""
    _check_index(j, len(point))
    base = point[j - 1]
    if field is None:
        return tuple(x - base for x in point)
    return tuple(field.sub(field.convert(x), field.convert(base)) for x in point)


# -- involutions as ring maps -------------------------------------------------


def phi_endo(j: int, nvars: int, field: CoeffField = QQ) -> RingHom:
    """x_l -> x_l - x_j (l != j), x_j -> -x_j; the identity for j = nvars + 1."""
    _check_index(j, nvars + 1)
    xs = [MPoly.var(field, nvars, k) for k in range(nvars)]
    if j == nvars + 1:
        return RingHom(xs)
    xj = xs[j - 1]
    return RingHom([-xj if k == j - 1 else xs[k] - xj for k in range(nvars)])


def phi_T_endo(j: int, nvars: int, field: CoeffField = QQ) -> RingHom:
    """x_i -> x_i - T x_j, x_j -> (1 - 2T) x_j; T is the new last variable.

    For j = nvars + 1 this is the inclusion of the polynomial ring.
    """
    _check_index(j, nvars + 1)
    m = nvars + 1
    xs = [MPoly.var(field, m, k) for k in range(nvars)]
    if j == nvars + 1:
        return RingHom(xs)
    T = MPoly.var(field, m, nvars)
    xj = xs[j - 1]
    return RingHom([(1 - 2 * T) * xj if k == j - 1 else xs[k] - T * xj for k in range(nvars)])


def specialize_T(p: MPoly, value) -> MPoly:
    """Set the last variable (T) to a constant and drop it."""
    return p.substitute_constant(p.nvars - 1, value).drop_vars([p.nvars - 1])


def transposition(a: int, b: int, nvars: int, field: CoeffField = QQ) -> RingHom:
    """Swap x_a and x_b (1-based)."""
    _check_index(a, nvars)
    _check_index(b, nvars)
    perm = list(range(nvars))
    perm[a - 1], perm[b - 1] = perm[b - 1], perm[a - 1]
    return RingHom.permutation(field, nvars, perm)


# -- point maps on coordinate hyperplanes ---------------------------------------


def hyperplane_coords(n: int, i: int) -> list:
    """1-based coordinates of A^n that survive on Z^i = {x_i = 0}."""
    return [k for k in range(1, n + 1) if k != i]


def phi_point_map(i: int, j: int, n: int, field: CoeffField = QQ) -> RingHom:
    """Phi_ij on Z^i as coordinate expressions in the n-1 surviving coordinates.

    Image slot for coordinate l is x_l - x_j (l != i, j), and -x_j for l = j.
    """
    _check_index(i, n)
    _check_index(j, n)
    if i == j:
        raise ValueError("Phi_ij needs j != i")
    coords = hyperplane_coords(n, i)
    pos = {c: k for k, c in enumerate(coords)}
    m = n - 1
    xs = [MPoly.var(field, m, k) for k in range(m)]
    xj = xs[pos[j]]
    return RingHom([-xj if c == j else xs[pos[c]] - xj for c in coords])


def tau_point_map(i: int, a: int, b: int, n: int, field: CoeffField = QQ) -> RingHom:
    """Transposition of coordinates a, b on Z^i."""
    coords = hyperplane_coords(n, i)
    pos = {c: k for k, c in enumerate(coords)}
    return transposition(pos[a] + 1, pos[b] + 1, n - 1, field)


def compose_point_maps(outer: RingHom, inner: RingHom) -> RingHom:
    """Coordinate expressions of the point map outer o inner."""
    return inner.compose(outer)


def apply_point_map(m: RingHom, point: Sequence) -> tuple:
    return tuple(im.evaluate(point) for im in m.images)


def phi_on_point(i: int, j: int, point: Sequence, field: CoeffField) -> tuple:
    """Phi_ij applied to a full-length point with x_i = 0."""
    n = len(point)
    xj = field.convert(point[j - 1])
    out = []
    for l in range(1, n + 1):
        v = field.convert(point[l - 1])
        if l == i:
            out.append(field.zero)
        elif l == j:
            out.append(field.neg(xj))
        else:
            out.append(field.sub(v, xj))
    return tuple(out)


# -- generator families ---------------------------------------------------------


def hd_product(k: int, nvars: int, field: CoeffField = QQ) -> MPoly:
    """HD^k applied to x_1 ... x_nvars."""
    return hs_multi(product_of_variables(nvars, field), k)


def tuple_ideal_generators(n: int, tup: Sequence[int], deformed: bool = False, field: CoeffField = QQ) -> list:
    """Entry i is Phi_{j_i}(HD^(i-1) x_1...x_(n-1)), optionally T-deformed.

    Undeformed generators live in n-1 variables; deformed ones in n, with T
    last.
    """
    tup = tuple(tup)
    m = n - 1
    if n < 2:
        raise ValueError("degree must be at least 2")
    if len(tup) > m:
        raise ValueError(f"tuple length {len(tup)} exceeds {m}")
    out = []
    for i, j in enumerate(tup, start=1):
        _check_index(j, n, "tuple entry")
        base = hd_product(i - 1, m, field)
        hom = phi_T_endo(j, m, field) if deformed else phi_endo(j, m, field)
        out.append(hom(base))
    return out


def all_tuples(n: int, length: int) -> list:
    """Every index tuple in {1..n}^length, in lexicographic order."""
    return [tuple(t) for t in product(range(1, n + 1), repeat=length)]


# -- point sets over finite fields ------------------------------------------------


def in_discriminant_hypersurface(point: Sequence, i: int, field: CoeffField) -> bool:
    """Membership in X^i_n: some j has e_(n-i)(x_l - x_j : l != j) = 0."""
    n = len(point)
    pt = [field.convert(v) for v in point]
    e = elementary_symmetric(n - 1, n - i, field)
    for j in range(n):
        shifted = [field.sub(pt[l], pt[j]) for l in range(n) if l != j]
        if e.evaluate(shifted) == field.zero:
            return True
    return False
