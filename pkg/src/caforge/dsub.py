"""D-ideals of principal monomial schemes and linear reduction.

For a monomial x^r = x_1^r_1 ... x_k^r_k the level-j D-ideal is generated by
x^r, D x^r, ..., D^j x^r, where D = sum of partials.  Its zero set is a
union of coordinate subspaces described combinatorially by
:func:`component_description`; :func:`verify_prop2` checks that description
with radical-membership certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, product
from typing import Sequence

from .fields import QQ, CoeffField
from .groebner import DEFAULT_BUDGET, radical_membership
from .hasse import d_power, hs_multi, total_derivation
from .poly import MPoly, RingHom, format_poly, var_names


@dataclass(frozen=True)
class MonomialShape:
    r: tuple

    def __post_init__(self):
        r = tuple(self.r)
        object.__setattr__(self, "r", r)
        if not r or any((not isinstance(x, int)) or x < 1 for x in r):
            raise ValueError(f"shape {r!r} must consist of positive integers")
        if sum(r) < 2:
            raise ValueError("total degree must be at least 2")

    @property
    def n(self) -> int:
        return sum(self.r)

    @property
    def k(self) -> int:
        return len(self.r)

    def monomial(self, field: CoeffField = QQ) -> MPoly:
        return MPoly.monomial(field, self.r)

    @classmethod
    def parse(cls, text: str) -> "MonomialShape":
        try:
            return cls(tuple(int(t) for t in text.split(",") if t.strip()))
        except ValueError as exc:
            raise ValueError(f"bad shape {text!r}: {exc}") from None


def all_shapes(kmax: int, nmax: int) -> list:
    """Every ordered partition with at most kmax parts and total 2..nmax."""
    out = []
    for n in range(2, nmax + 1):
        for k in range(1, min(kmax, n) + 1):
            for cuts in combinations(range(1, n), k - 1):
                bounds = (0,) + cuts + (n,)
                out.append(MonomialShape(tuple(bounds[t + 1] - bounds[t] for t in range(k))))
    return out


def d_ideal_generators(gens: Sequence[MPoly]) -> list:
    """The generators followed by their nonzero D-images."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    images = [total_derivation(g) for g in gens]
    return gens + [d for d in images if not d.is_zero()]


def monomial_d_ideal(shape: MonomialShape, j: int, hasse: bool = False, field: CoeffField = QQ) -> list:
    """(x^r, D x^r, ..., D^j x^r); with ``hasse`` use HD^t instead of D^t."""
    if not 0 <= j <= shape.n - 1:
        raise ValueError(f"level {j} outside 0..{shape.n - 1}")
    m = shape.monomial(field)
    op = hs_multi if hasse else d_power
    gens = [op(m, t) for t in range(j + 1)]
    return [g for g in gens if not g.is_zero()]


@dataclass(frozen=True)
class Component:
    subset: tuple  # 1-based variable indices
    weight: int  # sum of the r_i over the subset


def component_description(shape: MonomialShape, j: int) -> list:
    """Minimal subsets of size <= j whose r-sum is at least j."""
    if not 1 <= j <= shape.n:
        raise ValueError(f"level {j} outside 1..{shape.n}")
    found = []
    for size in range(1, min(j, shape.k) + 1):
        for sub in combinations(range(1, shape.k + 1), size):
            w = sum(shape.r[i - 1] for i in sub)
            if w < j:
                continue
            if any(set(c.subset) <= set(sub) for c in found):
                continue
            found.append(Component(sub, w))
    return found


@dataclass
class ComponentReport:
    shape: tuple
    level: int
    components: list
    verified: bool
    certificates: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "level": self.level,
            "components": [{"subset": list(c.subset), "weight": c.weight} for c in self.components],
            "verified": self.verified,
            "certificates": self.certificates,
        }


def verify_prop2(shape: MonomialShape, j: int, budget: int | None = DEFAULT_BUDGET) -> ComponentReport:
    """Check V(level j-1 D-ideal) = union of the coordinate subspaces for level j.

    Containment of the union: every generator lies in every prime
    (x_i : i in S), read off from the terms.  Containment of the variety:
    each product choosing one variable per component lies in the radical.
    Runs over the rationals.
    """
    if shape.k > 4 or shape.n > 6:
        raise ValueError("verification is limited to k <= 4 and n <= 6")
    if not 1 <= j <= shape.n:
        raise ValueError(f"level {j} outside 1..{shape.n}")
    gens = monomial_d_ideal(shape, j - 1, field=QQ)
    comps = component_description(shape, j)
    names = var_names(shape.k)
    certs = []
    ok = True
    for c in comps:
        idx = [i - 1 for i in c.subset]
        for g_no, g in enumerate(gens):
            inside = all(any(e[i] for i in idx) for e in g.terms)
            ok &= inside
            certs.append({"kind": "generator_in_prime", "generator": g_no, "subset": list(c.subset), "holds": inside})
    for choice in product(*[c.subset for c in comps]):
        exp = [0] * shape.k
        for i in choice:
            exp[i - 1] += 1
        prod_poly = MPoly.monomial(QQ, exp)
        member = radical_membership(prod_poly, gens, budget)
        ok &= member
        certs.append({"kind": "radical_membership", "product": format_poly(prod_poly, names), "holds": member})
    return ComponentReport(shape.r, j, comps, ok, certs)


def lemma1_check(shape: MonomialShape, j: int, m: int) -> tuple:
    """(D^m x^r vanishes at x_j = 0, r_j >= m + 1)."""
    if not 1 <= j <= shape.k:
        raise ValueError(f"component index {j} outside 1..{shape.k}")
    if not 0 <= m <= shape.n - 1:
        raise ValueError(f"level {m} outside 0..{shape.n - 1}")
    dm = d_power(shape.monomial(QQ), m)
    return dm.substitute_constant(j - 1, 0).is_zero(), shape.r[j - 1] >= m + 1


# -- linear reduction ---------------------------------------------------------------


@dataclass
class LinearStep:
    variable: int  # original 1-based label
    image: MPoly  # substituted expression, in the ring before elimination
    labels: tuple  # original labels of that ring's variables


@dataclass
class LinearReduction:
    gens: list
    labels: tuple  # original labels of the remaining variables
    steps: list
    unit: bool = False

    @property
    def nvars(self) -> int:
        return len(self.labels)

    def to_json(self) -> dict:
        names = tuple(f"x{l}" for l in self.labels)
        return {
            "unit_ideal": self.unit,
            "variables": list(names),
            "generators": [format_poly(g, names) for g in self.gens],
            "eliminated": [
                {
                    "variable": f"x{s.variable}",
                    "substitution": format_poly(s.image, tuple(f"x{l}" for l in s.labels)),
                }
                for s in self.steps
            ],
        }


def complete_linear_reduction(gens: Sequence[MPoly]) -> LinearReduction:
    """Repeatedly use a linear generator to eliminate its first variable.

    Stops when no generator is a non-constant linear form.  A nonzero
    constant appearing among the generators means the unit ideal.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    F = gens[0].field
    labels = tuple(range(1, gens[0].nvars + 1))
    steps = []
    while True:
        if any(g.is_constant() for g in gens):
            return LinearReduction([MPoly.constant(F, len(labels), 1)], labels, steps, unit=True)
        lin = next((g for g in gens if g.total_degree() == 1), None)
        if lin is None:
            return LinearReduction(gens, labels, steps)
        k = len(labels)
        v = min(lin.support_vars())
        unit = [0] * k
        unit[v] = 1
        a = lin.coeff(unit)
        xv = MPoly.var(F, k, v)
        image = (xv - lin.scale(F.inv(a)))
        steps.append(LinearStep(labels[v], image, labels))
        images = [image if t == v else MPoly.var(F, k, t) for t in range(k)]
        hom = RingHom(images)
        rest = [hom(g) for g in gens if g is not lin]
        gens = [g.drop_vars([v]) for g in rest if not g.is_zero()]
        labels = labels[:v] + labels[v + 1:]
        if not gens:
            return LinearReduction([], labels, steps)
