import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from caforge.dsub import (
    MonomialShape,
    all_shapes,
    complete_linear_reduction,
    component_description,
    d_ideal_generators,
    lemma1_check,
    monomial_d_ideal,
    verify_prop2,
)
from caforge.fields import GF, QQ
from caforge.groebner import buchberger
from caforge.poly import MPoly, parse_poly


def P(text, n=2, field=QQ):
    return parse_poly(text, n, field)


def dim(gens):
    return buchberger(gens).dimension()


def subsets(shape, j):
    return [c.subset for c in component_description(shape, j)]


def test_shape_validation():
    assert MonomialShape.parse("2,1").r == (2, 1)
    assert MonomialShape((2, 1)).n == 3 and MonomialShape((2, 1)).k == 2
    for bad in [(), (0, 2), (1,), (2, -1)]:
        with pytest.raises(ValueError):
            MonomialShape(bad)
    with pytest.raises(ValueError):
        MonomialShape.parse("2,x")


def test_all_shapes_counts():
    # ordered partitions of n into at most k parts
    shapes = all_shapes(3, 5)
    assert len(shapes) == len(set(shapes))
    assert sum(1 for s in shapes if s.n == 4) == 1 + 3 + 3


def test_d_ideal_generators_examples():
    assert d_ideal_generators([P("x1*x2")]) == [P("x1*x2"), P("x1 + x2")]
    assert d_ideal_generators([P("x1^2", 1)]) == [P("x1^2", 1), P("2*x1", 1)]
    assert d_ideal_generators([P("x1 - x2")]) == [P("x1 - x2")]
    with pytest.raises(ValueError):
        d_ideal_generators([])


def test_monomial_d_ideal_examples():
    assert monomial_d_ideal(MonomialShape((2, 1)), 1) == [P("x1^2*x2"), P("x1^2 + 2*x1*x2")]
    assert monomial_d_ideal(MonomialShape((3, 2)), 0) == [P("x1^3*x2^2")]
    gens = monomial_d_ideal(MonomialShape((1, 1, 1)), 2)
    assert gens == [P("x1*x2*x3", 3), P("x1*x2 + x1*x3 + x2*x3", 3), P("2*x1 + 2*x2 + 2*x3", 3)]
    with pytest.raises(ValueError):
        monomial_d_ideal(MonomialShape((2, 1)), 3)


def test_hasse_variant_divides_out_factorials():
    shape = MonomialShape((1, 1, 1))
    assert monomial_d_ideal(shape, 2, hasse=True)[2] == P("x1 + x2 + x3", 3)
    # in characteristic 2 the D-ideal loses D^2 but the Hasse one keeps it
    F = GF(2)
    assert len(monomial_d_ideal(shape, 2, field=F)) == 2
    assert len(monomial_d_ideal(shape, 2, hasse=True, field=F)) == 3


def test_component_examples():
    assert subsets(MonomialShape((2, 1)), 2) == [(1,)]
    assert subsets(MonomialShape((1, 1)), 1) == [(1,), (2,)]
    assert subsets(MonomialShape((1, 1)), 2) == [(1, 2)]
    assert subsets(MonomialShape((2, 2, 1)), 3) == [(1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize("shape", all_shapes(4, 6), ids=lambda s: ",".join(map(str, s.r)))
def test_component_invariants(shape):
    for j in range(1, shape.n + 1):
        comps = component_description(shape, j)
        subs = [set(c.subset) for c in comps]
        assert all(c.weight >= j for c in comps)
        assert len(subs) == len({frozenset(s) for s in subs})
        assert not any(a < b for a in subs for b in subs)
        # every qualifying subset of size <= j contains a listed one
        for size in range(1, min(j, shape.k) + 1):
            for sub in combinations(range(1, shape.k + 1), size):
                if sum(shape.r[i - 1] for i in sub) >= j:
                    assert any(s <= set(sub) for s in subs)


def test_component_verification_examples():
    assert verify_prop2(MonomialShape((2, 1)), 2).verified
    assert verify_prop2(MonomialShape((1, 1)), 2).verified
    for n in range(2, 7):
        for j in range(1, n):
            rep = verify_prop2(MonomialShape((n,)), j)
            assert rep.verified and [c.subset for c in rep.components] == [(1,)]


def test_component_report_shape():
    rep = verify_prop2(MonomialShape((2, 1)), 2).to_json()
    assert set(rep) == {"shape", "level", "components", "verified", "certificates"}
    kinds = {c["kind"] for c in rep["certificates"]}
    assert kinds == {"generator_in_prime", "radical_membership"}


def test_component_verification_guard():
    with pytest.raises(ValueError):
        verify_prop2(MonomialShape((1, 1, 1, 1, 1)), 2)
    with pytest.raises(ValueError):
        verify_prop2(MonomialShape((4, 3)), 2)
    with pytest.raises(ValueError):
        verify_prop2(MonomialShape((2, 1)), 4)


def test_component_verification_sweep():
    for shape in all_shapes(3, 5):
        for j in range(1, shape.n + 1):
            assert verify_prop2(shape, j).verified, (shape.r, j)


def test_dimension_matches_components():
    for shape in all_shapes(3, 5):
        for j in range(1, shape.n + 1):
            comps = component_description(shape, j)
            expected = shape.k - min(len(c.subset) for c in comps)
            assert dim(monomial_d_ideal(shape, j - 1)) == expected


def test_vanishing_flags_examples():
    assert lemma1_check(MonomialShape((2, 1)), 1, 1) == (True, True)
    assert lemma1_check(MonomialShape((2, 1)), 2, 1) == (False, False)
    assert lemma1_check(MonomialShape((1, 3)), 1, 0) == (True, True)
    with pytest.raises(ValueError):
        lemma1_check(MonomialShape((2, 1)), 3, 0)


def test_vanishing_flags_sweep():
    for shape in all_shapes(4, 6):
        for j in range(1, shape.k + 1):
            for m in range(shape.n):
                a, b = lemma1_check(shape, j, m)
                assert a == b, (shape.r, j, m)


@pytest.mark.parametrize("shape", all_shapes(4, 6), ids=lambda s: ",".join(map(str, s.r)))
def test_d_powers_homogeneous(shape):
    for g_no, g in enumerate(monomial_d_ideal(shape, shape.n - 1)):
        assert g.is_homogeneous() and g.total_degree() == shape.n - g_no


def test_linear_reduction_examples():
    red = complete_linear_reduction([P("x1 - x2"), P("x1*x2")])
    assert red.gens == [parse_poly("x2^2", 1, QQ, ("x2",))] and red.labels == (2,)
    assert red.to_json()["eliminated"] == [{"variable": "x1", "substitution": "x2"}]

    red = complete_linear_reduction([P("x1 + 1", 1)])
    assert red.gens == [] and red.nvars == 0 and not red.unit
    assert red.to_json()["eliminated"] == [{"variable": "x1", "substitution": "-1"}]

    red = complete_linear_reduction([P("x1 - x2"), P("x2 - x1 + 1")])
    assert red.unit and red.to_json()["unit_ideal"]


def test_linear_reduction_preserves_dimension():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(2, 4)
        lin = MPoly(QQ, n, {tuple(int(k == v) for k in range(n)): rng.randint(-3, 3) or 1 for v in rng.sample(range(n), 2)})
        quad = MPoly(QQ, n, {tuple(rng.randint(0, 2) for _ in range(n)): rng.randint(-3, 3) or 2 for _ in range(3)})
        red = complete_linear_reduction([lin, quad])
        if red.unit:
            continue
        full = dim([lin, quad])
        reduced = red.nvars if not red.gens else dim(red.gens)
        assert full == reduced


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_linear_reduction_order_independent(rnd):
    n = 4
    gens = [
        P("x1 - x2 + x3", n),
        P("x2 + 2*x4", n),
        P("x1*x3 - x4^2", n),
        P("x3^2 + x1*x2*x4", n),
        P("x1 + x2 + x3 + x4", n),
    ]
    ref = complete_linear_reduction(gens)
    shuffled = gens[:]
    rnd.shuffle(shuffled)
    red = complete_linear_reduction(shuffled)
    assert red.unit == ref.unit
    assert red.nvars == ref.nvars
    assert len(red.gens) == len(ref.gens)
    assert dim(red.gens) == dim(ref.gens)
