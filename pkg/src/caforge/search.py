"""Verification and search drivers.

Covers the Casas-Alvero condition for a single polynomial, weighted
projective point enumeration of the reduced discriminant system, exhaustive
counterexample and bad-prime scans over F_p, tuple-regularity sweeps, the
T-deformed family and its fibers, and the j_C(n) lower bound.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Callable, Iterable, Sequence

from .discriminants import disc_table, monic_coeff_vector, poly_from_coeff_vector
from .fields import GF, QQ, CoeffField, is_prime
from .geometry import all_tuples, in_discriminant_hypersurface, specialize_T, tuple_ideal_generators
from .groebner import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    buchberger,
    ideal_dimension,
    is_regular_sequence_homogeneous,
    saturate,
)
from .hasse import hs_uni
from .poly import MPoly, UPoly, format_upoly, upoly_gcd


DEFAULT_ENUM_BUDGET = 2_000_000

REGULAR = "regular"
NON_REGULAR = "non-regular"
BUDGET = "budget"


class EnumerationBudgetExceeded(RuntimeError):
    def __init__(self, needed: int, budget: int):
        super().__init__(f"enumeration of {needed} points exceeds budget {budget}")
        self.needed = needed
        self.budget = budget


def run_jobs(func: Callable, items: Sequence, workers: int = 1) -> list:
    """map() over items, optionally in a process pool; results keep input order."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    chunk = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=chunk))


def tuple_label(t: Sequence[int]) -> str:
    return ",".join(str(j) for j in t)


# -- single polynomials -------------------------------------------------------------


@dataclass
class CAReport:
    f: UPoly
    gcd_degrees: list
    satisfies_hypothesis: bool
    is_pure_power: bool

    @property
    def is_counterexample(self) -> bool:
        return self.satisfies_hypothesis and not self.is_pure_power

    @property
    def coefficients(self) -> tuple:
        return tuple(monic_coeff_vector(self.f))

    def to_json(self) -> dict:
        F = self.f.field
        return {
            "f": format_upoly(self.f),
            "field": repr(F),
            "coefficients": [F.format(c) for c in self.coefficients],
            "gcd_degrees": list(self.gcd_degrees),
            "satisfies_hypothesis": self.satisfies_hypothesis,
            "is_pure_power": self.is_pure_power,
            "is_counterexample": self.is_counterexample,
        }


def is_pure_power(f: UPoly) -> bool:
    """Whether the monic f equals (X - a)^n for some a in the field."""
    F = f.field
    n = f.degree
    if n < 1 or not f.is_monic():
        raise ValueError("expects a monic polynomial of positive degree")
    if F.characteristic == 0 or n % F.characteristic:
        shift = F.div(f.coeff(n - 1), F.from_int(n))
        return f == UPoly(F, [shift, 1]) ** n
    # n is divisible by the characteristic: try every field element
    return any(f == UPoly(F, [F.neg(a), 1]) ** n for a in F.elements())


def pure_power_by_roots(f: UPoly) -> bool:
    """Reference check over F_p: f has a root a with (X - a)^n = f."""
    F = f.field
    n = f.degree
    return any(f(a) == 0 and f == UPoly(F, [F.neg(a), 1]) ** n for a in F.elements())


def ca_check(f: UPoly) -> CAReport:
    if not f.is_monic():
        raise ValueError("ca_check expects a monic polynomial")
    n = f.degree
    if n < 2:
        raise ValueError("ca_check expects degree at least 2")
    degs = [upoly_gcd(f, hs_uni(f, i)).degree for i in range(1, n)]
    hyp = all(d >= 1 for d in degs)
    return CAReport(f, degs, hyp, is_pure_power(f))


# -- weighted projective points ------------------------------------------------------


def canonical_weighted(point: Sequence[int], p: int) -> tuple:
    """Lexicographically least image under y_i -> lambda^i y_i, lambda in F_p^*."""
    best = None
    for lam in range(1, p):
        img = tuple(y * pow(lam, i, p) % p for i, y in enumerate(point, start=1))
        if best is None or img < best:
            best = img
    return best


def _check_enum(count: int, budget: int | None) -> None:
    if budget is not None and count > budget:
        raise EnumerationBudgetExceeded(count, budget)


def enumerate_xn_points(n: int, p: int, j: int | None = None, budget: int | None = DEFAULT_ENUM_BUDGET) -> list:
    """Orbit-canonical nonzero F_p-points of the first j reduced discriminants."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if j is None:
        j = n - 1
    if not 0 <= j <= n - 1:
        raise ValueError(f"truncation level must lie in 0..{n - 1}")
    _check_enum(p ** (n - 1), budget)
    F = GF(p)
    table = disc_table(n)
    system = [table.reduced_entries[i].change_field(F) for i in range(1, j + 1)]
    found = []
    for pt in product(range(p), repeat=n - 1):
        if not any(pt):
            continue
        if canonical_weighted(pt, p) != pt:
            continue
        # the system is weighted homogeneous, so testing one orbit member suffices
        if all(g.evaluate(pt) == 0 for g in system):
            found.append(pt)
    return found


@dataclass
class SearchResult:
    n: int
    p: int
    counterexamples: list
    xn_points: list
    canonical_counterexamples: list

    @property
    def consistent(self) -> bool:
        return self.canonical_counterexamples == self.xn_points

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "count": len(self.counterexamples),
            "counterexamples": [r.to_json() for r in self.counterexamples],
            "xn_points": [list(pt) for pt in self.xn_points],
            "canonical_counterexamples": [list(pt) for pt in self.canonical_counterexamples],
            "consistent": self.consistent,
        }


def scan_counterexamples(n: int, p: int, budget: int | None = DEFAULT_ENUM_BUDGET) -> list:
    """Every counterexample X^n + y1 X^(n-1) + ... + y_(n-1) X over F_p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 2:
        raise ValueError("degree must be at least 2")
    _check_enum(p ** (n - 1), budget)
    F = GF(p)
    out = []
    for ys in product(range(p), repeat=n - 1):
        rep = ca_check(poly_from_coeff_vector(F, list(ys) + [0]))
        if rep.is_counterexample:
            out.append(rep)
    return out


def search_counterexamples(n: int, p: int, budget: int | None = DEFAULT_ENUM_BUDGET) -> SearchResult:
    """Scan, then cross-check the scaling classes against the point enumeration."""
    found = scan_counterexamples(n, p, budget)
    canon = sorted({canonical_weighted(r.coefficients[:-1], p) for r in found})
    points = enumerate_xn_points(n, p, n - 1, budget)
    return SearchResult(n, p, found, points, canon)


def bad_prime_scan(n: int, pmax: int, budget: int | None = DEFAULT_ENUM_BUDGET) -> dict:
    """Counterexample count for each prime p <= pmax, or "skipped" over budget."""
    out = {}
    for p in range(2, pmax + 1):
        if not is_prime(p):
            continue
        try:
            out[p] = len(scan_counterexamples(n, p, budget))
        except EnumerationBudgetExceeded:
            out[p] = "skipped"
    return out


# -- regularity sweeps ------------------------------------------------------------------


@dataclass
class SweepReport:
    n: int
    length: int
    field: str
    kind: str
    outcomes: dict  # tuple -> {"status": ..., "dimension": ...}
    expected_dimension: int

    @property
    def counts(self) -> dict:
        c = {REGULAR: 0, NON_REGULAR: 0, BUDGET: 0}
        for o in self.outcomes.values():
            c[o["status"]] += 1
        return c

    @property
    def verdict(self) -> str:
        c = self.counts
        if c[NON_REGULAR]:
            return "not all regular"
        if c[BUDGET]:
            return "inconclusive"
        return "all regular"

    def summary(self) -> str:
        return f"{self.counts[REGULAR]}/{len(self.outcomes)} tuples regular"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "length": self.length,
            "field": self.field,
            "kind": self.kind,
            "expected_dimension": self.expected_dimension,
            "tuples": [
                {"tuple": list(t), **self.outcomes[t]} for t in sorted(self.outcomes)
            ],
            "counts": self.counts,
            "verdict": self.verdict,
        }


def _field_name(field: CoeffField) -> str:
    return repr(field)


def _regularity_job(args) -> tuple:
    n, tup, field, budget = args
    gens = tuple_ideal_generators(n, tup, False, field)
    if any(g.is_zero() for g in gens):
        return tup, {"status": NON_REGULAR, "dimension": None}
    try:
        ok, dim = is_regular_sequence_homogeneous(gens, n - 1, budget)
    except BudgetExceeded:
        return tup, {"status": BUDGET, "dimension": None}
    return tup, {"status": REGULAR if ok else NON_REGULAR, "dimension": dim}


def tuple_regularity_sweep(
    n: int,
    length: int | None = None,
    field: CoeffField = QQ,
    budget: int | None = DEFAULT_BUDGET,
    workers: int = 1,
) -> SweepReport:
    """Regular-sequence test for every index tuple of the given length."""
    if n < 2:
        raise ValueError("degree must be at least 2")
    if length is None:
        length = n - 1
    if not 1 <= length <= n - 1:
        raise ValueError(f"tuple length must lie in 1..{n - 1}")
    jobs = [(n, t, field, budget) for t in all_tuples(n, length)]
    results = run_jobs(_regularity_job, jobs, workers)
    return SweepReport(n, length, _field_name(field), "regular-sequence", dict(results), n - 1 - length)


def q_of(n: int) -> int:
    """Largest m <= n of the form p^k or 2 p^k (p prime, k >= 1)."""
    for m in range(n, 1, -1):
        if _is_prime_power(m) or (m % 2 == 0 and _is_prime_power(m // 2)):
            return m
    raise ValueError("q(n) needs n >= 2")


def _is_prime_power(m: int) -> bool:
    if m < 2:
        return False
    p = next(d for d in range(2, m + 1) if m % d == 0)
    while m % p == 0:
        m //= p
    return m == 1


@dataclass
class JCBound:
    n: int
    bound: int
    q: int
    levels: dict  # l -> verdict
    status: str

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lower_bound": self.bound,
            "q": self.q,
            "levels": {str(k): v for k, v in sorted(self.levels.items())},
            "status": self.status,
        }


def jc_lower_bound(
    n: int,
    lmax: int | None = None,
    field: CoeffField = QQ,
    budget: int | None = DEFAULT_BUDGET,
    workers: int = 1,
) -> JCBound:
    """Largest l <= lmax for which every length-l tuple sequence is regular."""
    if lmax is None:
        lmax = n - 1
    lmax = min(lmax, n - 1)
    levels = {}
    bound = 0
    status = "complete"
    for l in range(1, lmax + 1):
        rep = tuple_regularity_sweep(n, l, field, budget, workers)
        levels[l] = rep.verdict
        if rep.verdict == "all regular":
            bound = l
            continue
        status = "budget" if rep.verdict == "inconclusive" else "failed"
        break
    return JCBound(n, bound, q_of(n), levels, status)


def _deformed_job(args) -> tuple:
    n, tup, budget = args
    gens = tuple_ideal_generators(n, tup, True, QQ)
    T = MPoly.var(QQ, n, n - 1)
    try:
        sat = saturate(gens, 1 - 2 * T, budget)
        dim = ideal_dimension(buchberger(sat, budget=budget))
    except BudgetExceeded:
        return tup, {"status": BUDGET, "dimension": None}
    return tup, {"status": REGULAR if dim == 1 else NON_REGULAR, "dimension": dim}


def mainprop_verify(n: int, budget: int | None = DEFAULT_BUDGET, workers: int = 1) -> SweepReport:
    """Saturate each deformed family at 1 - 2T and check dimension 1 in n variables."""
    if n < 2:
        raise ValueError("degree must be at least 2")
    jobs = [(n, t, budget) for t in all_tuples(n, n - 1)]
    results = run_jobs(_deformed_job, jobs, workers)
    return SweepReport(n, n - 1, "QQ", "deformed-saturated", dict(results), 1)


def fiber_dimension(n: int, tup: Sequence[int], alpha, budget: int | None = DEFAULT_BUDGET) -> int:
    """Dimension over the rationals of the deformed family at T = alpha."""
    alpha = Fraction(alpha)
    gens = [specialize_T(g, alpha) for g in tuple_ideal_generators(n, tup, True, QQ)]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return n - 1
    return ideal_dimension(buchberger(gens, budget=budget))


def _fiber_job(args):
    n, tup, alpha, budget = args
    try:
        return fiber_dimension(n, tup, alpha, budget)
    except BudgetExceeded:
        return None


def fiber_scan(
    n: int, tup: Sequence[int], alphas: Iterable, budget: int | None = DEFAULT_BUDGET, workers: int = 1
) -> list:
    """[{alpha, dimension, singular}] in the order the alphas were given."""
    alphas = [Fraction(a) for a in alphas]
    dims = run_jobs(_fiber_job, [(n, tuple(tup), a, budget) for a in alphas], workers)
    out = []
    for a, d in zip(alphas, dims):
        out.append(
            {
                "alpha": QQ.format(a),
                "dimension": d,
                "singular": None if d is None else d >= 1,
                "status": BUDGET if d is None else "ok",
            }
        )
    return out


# -- point-level identities over F_p ----------------------------------------------------------


def hypersurface_intersection_points(n: int, p: int) -> set:
    """Brute-force the F_p-points of the intersection of X^i_n, i = 1..n-1."""
    F = GF(p)
    return {
        pt
        for pt in product(range(p), repeat=n)
        if all(in_discriminant_hypersurface(pt, i, F) for i in range(1, n))
    }


def tuple_union_points(n: int, p: int) -> set:
    """Union over tuples of shift-projection preimages of the tuple varieties."""
    F = GF(p)
    systems = [tuple_ideal_generators(n, t, False, F) for t in all_tuples(n, n - 1)]
    zeros = set()
    for y in product(range(p), repeat=n - 1):
        if any(all(g.evaluate(y) == 0 for g in sys_) for sys_ in systems):
            zeros.add(y)
    out = set()
    for y in zeros:
        for beta in range(p):
            out.add(tuple((v + beta) % p for v in y) + (beta,))
    return out


@dataclass
class TriangleReport:
    n: int
    p: int
    scan_count: int
    xn_count: int
    nonregular_tuples: int
    split_counterexamples: int
    split_in_union: bool

    @property
    def consistent(self) -> bool:
        scan = self.scan_count > 0
        return (
            scan == (self.xn_count > 0)
            and (not scan or self.nonregular_tuples > 0)
            and self.split_in_union
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "scan_count": self.scan_count,
            "xn_count": self.xn_count,
            "nonregular_tuples": self.nonregular_tuples,
            "split_counterexamples": self.split_counterexamples,
            "split_in_union": self.split_in_union,
            "consistent": self.consistent,
        }


def split_roots(f: UPoly) -> list | None:
    """Roots with multiplicity if f splits over its prime field, else None."""
    F = f.field
    roots = []
    g = f
    for a in F.elements():
        lin = UPoly(F, [F.neg(a), 1])
        while g.degree >= 1:
            q, r = g.divmod(lin)
            if not r.is_zero():
                break
            roots.append(a)
            g = q
    return roots if len(roots) == f.degree else None


def consistency_triangle(n: int, p: int, budget: int | None = DEFAULT_BUDGET) -> TriangleReport:
    """Direct scan vs point enumeration vs regularity over F_p."""
    res = search_counterexamples(n, p)
    sweep = tuple_regularity_sweep(n, n - 1, GF(p), budget)
    union = tuple_union_points(n, p) if res.counterexamples else set()
    split = 0
    in_union = True
    for rep in res.counterexamples:
        roots = split_roots(rep.f)
        if roots is None:
            continue
        split += 1
        in_union &= any(perm in union for perm in set(permutations(roots)))
    return TriangleReport(
        n, p, len(res.counterexamples), len(res.xn_points), sweep.counts[NON_REGULAR], split, in_union
    )
