import json
import random
from fractions import Fraction
from math import comb

import pytest
import sympy as sp

from caforge import discriminants as D
from caforge.discriminants import (
    disc_at,
    disc_table,
    generic_monic,
    hs_coeffs,
    monic_coeff_vector,
    resultant_upoly,
    sylvester_resultant,
    verify_cache,
    xn_defining_system,
    y_names,
)
from caforge.fields import GF, QQ
from caforge.hasse import hs_uni
from caforge.poly import MPoly, UPoly, format_poly, parse_poly, parse_upoly, upoly_gcd, weighted_degree


def Y(text, n):
    return parse_poly(text, n, QQ, y_names(n))


def test_quadratic_resultant_example():
    f = generic_monic(2)
    assert sylvester_resultant(f, hs_coeffs(f, 1)) == Y("4*y2 - y1^2", 2)


def test_resultant_conventions():
    f = parse_upoly("X^3 + 2*X + 7")
    assert resultant_upoly(f, parse_upoly("1")) == 1
    assert resultant_upoly(parse_upoly("(X-1)*(X-2)"), parse_upoly("X-1")) == 0
    with pytest.raises(ValueError):
        resultant_upoly(parse_upoly("2"), parse_upoly("3"))


def test_resultant_matches_sympy_on_univariate_samples():
    X = sp.Symbol("X")
    rng = random.Random(7)
    for _ in range(25):
        a = [rng.randint(-4, 4) for _ in range(rng.randint(2, 5))] + [rng.choice([1, 2, -3])]
        b = [rng.randint(-4, 4) for _ in range(rng.randint(1, 4))] + [rng.choice([1, -1, 5])]
        ref = sp.resultant(sum(c * X**k for k, c in enumerate(a)), sum(c * X**k for k, c in enumerate(b)), X)
        assert resultant_upoly(UPoly(QQ, a), UPoly(QQ, b)) == int(ref)


def _sympy_disc(n, i):
    X = sp.Symbol("X")
    ys = sp.symbols(f"y1:{n + 1}")
    f = X**n + sum(ys[k - 1] * X ** (n - k) for k in range(1, n + 1))
    fi = sum(comb(m, i) * (1 if m == n else ys[n - m - 1]) * X ** (m - i) for m in range(i, n + 1))
    return Y(str(sp.expand(sp.resultant(f, fi, X))).replace("**", "^"), n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_table_matches_sympy_resultants(n):
    table = disc_table(n)
    for i in range(1, n):
        assert table.entries[i] == _sympy_disc(n, i)


def test_cubic_second_discriminant_value():
    # classical Res(f, f_2): the value -27 f(-y1/3) for f_2 = 3X + y1
    assert disc_table(3).entries[2] == Y("-2*y1^3 + 9*y1*y2 - 27*y3", 3)
    assert disc_table(3).reduced_entries[2] == parse_poly("-2*y1^3 + 9*y1*y2", 2, QQ, ("y1", "y2"))


def test_defining_system():
    assert xn_defining_system(2) == [parse_poly("-y1^2", 1, QQ, ("y1",))]
    sys3 = xn_defining_system(3)
    assert len(sys3) == 2 and all(g.nvars == 2 for g in sys3)
    for n in (2, 3, 4, 5):
        assert len(xn_defining_system(n, 1)) == 1
    assert xn_defining_system(4, 0) == []


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_reduced_entries_weighted_homogeneous(n):
    table = disc_table(n)
    for i in range(1, n):
        assert weighted_degree(table.reduced_entries[i], tuple(range(1, n))) == n * (n - i)
        assert weighted_degree(table.entries[i], tuple(range(1, n + 1))) == n * (n - i)
        assert all(Fraction(c).denominator == 1 for c in table.entries[i].terms.values())


def test_guard():
    for bad in (1, 9):
        with pytest.raises(ValueError):
            disc_table(bad)


@pytest.mark.parametrize("p", [5, 101])
def test_specialization_soundness(p):
    F = GF(p)
    rng = random.Random(p)
    for _ in range(120):
        n = rng.randint(2, 5)
        f = UPoly(F, [rng.randrange(p) for _ in range(n)] + [1])
        ys = monic_coeff_vector(f)
        for i in range(1, n):
            vanishes = disc_at(n, i, ys, F) == 0
            assert vanishes == (upoly_gcd(f, hs_uni(f, i)).degree >= 1)


def test_pure_powers_vanish():
    rng = random.Random(3)
    for n in range(2, 6):
        for _ in range(5):
            a = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            f = UPoly(QQ, [-a, 1]) ** n
            for i in range(1, n):
                assert disc_at(n, i, monic_coeff_vector(f), QQ) == 0


def test_cache_round_trip_and_tamper_detection(tmp_path, monkeypatch):
    monkeypatch.setenv("CA_FORGE_CACHE", str(tmp_path))
    monkeypatch.setattr(D, "_memory_cache", {})
    t1 = disc_table(4)
    path = tmp_path / "disc_n4.json"
    data = json.loads(path.read_text())
    assert [e["i"] for e in data] == [1, 2, 3]
    assert set(data[0]) == {"n", "i", "weights", "weighted_degree", "poly"}
    assert verify_cache(4)

    monkeypatch.setattr(D, "_memory_cache", {})
    assert disc_table(4).entries == t1.entries  # loaded from disk

    path.write_text(path.read_text().replace("y1", "y2", 1))
    monkeypatch.setattr(D, "_memory_cache", {})
    assert disc_table(4).entries == t1.entries  # hash mismatch forces a rebuild
    assert verify_cache(4)


def test_bareiss_matches_cofactor_expansion():
    rng = random.Random(11)
    for size in range(1, 5):
        rows = [[MPoly(QQ, 2, {(rng.randint(0, 1), rng.randint(0, 1)): rng.randint(-3, 3)}) for _ in range(size)] for _ in range(size)]
        M = sp.Matrix([[sp.sympify(format_poly(e).replace("^", "**")) for e in row] for row in rows])
        ref = sp.expand(M.det())
        assert D.bareiss_det(rows) == parse_poly(str(ref).replace("**", "^"), 2, QQ)
