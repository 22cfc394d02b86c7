import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from f4rigid.exact import charpoly
from f4rigid.polynomial import Q, IntPolynomial, cyclotomic_factorization, cyclotomic_poly, factor_string
from f4rigid.qpoly import (
    group_order_factored,
    group_order_poly,
    poincare_from_degrees,
    poincare_poly,
    torus_classes,
    torus_order_poly,
)
from f4rigid.weyl import coxeter_data, enumerate_weyl

q = sympy.symbols("q")


def to_sympy(p):
    return sum(int(c) * q ** d for d, c in p.to_json()["coeffs"])


def test_f4_group_order(f4):
    p = group_order_poly(f4)
    want = Q ** 24 * (Q ** 2 - 1) * (Q ** 6 - 1) * (Q ** 8 - 1) * (Q ** 12 - 1)
    assert p == want
    assert p.degree == 52 and p.leading == 1
    assert group_order_factored(f4) == "q^24*(q^2 - 1)*(q^6 - 1)*(q^8 - 1)*(q^12 - 1)"
    assert p(2) == 2 ** 24 * 3 * 63 * 255 * 4095


@pytest.mark.parametrize("t", ["A1", "A2", "B3", "C3", "G2", "A2+A1"])
def test_poincare_identity(small_groups, t):
    g = small_groups[t]
    assert poincare_poly(g) == poincare_from_degrees(coxeter_data(g.datum).degrees)


def test_poincare_f4(wf4):
    p = poincare_poly(wf4)
    assert p == poincare_from_degrees((2, 6, 8, 12))
    assert p(1) == 1152
    assert p.degree == 24


def test_torus_orders(f4, wf4):
    total = group_order_poly(f4)
    recs = torus_classes(wf4)
    polys = [r["poly"] for r in recs]
    assert (Q - 1) ** 4 in polys
    assert (Q + 1) ** 2 * (Q ** 2 + 1) in polys
    assert Q ** 4 - Q ** 2 + 1 in polys
    assert all(p.divides(total) for p in polys)
    assert all(p.degree == 4 and p.leading == 1 for p in polys)
    # averaging |T_w| over W gives q^rank
    s = sum((r["poly"] * r["size"] for r in recs), IntPolynomial({}))
    assert s == Q ** 4 * 1152


def test_torus_order_sympy_oracle(wf4):
    for rep, _ in [(r["representative"], r["size"]) for r in torus_classes(wf4)][:8]:
        mine = to_sympy(torus_order_poly(wf4.datum, rep))
        theirs = sympy.Matrix(rep.matrix_y).charpoly(q).as_expr()
        assert sympy.expand(mine - theirs) == 0


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3))
def test_charpoly_matches_sympy(m):
    mine = sum(c * q ** k for k, c in enumerate(charpoly(m)))
    assert sympy.expand(mine - sympy.Matrix(m).charpoly(q).as_expr()) == 0


polys = st.dictionaries(st.integers(0, 6), st.integers(-9, 9)).map(IntPolynomial)


@settings(max_examples=80, deadline=None)
@given(polys, polys, polys)
def test_polynomial_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == IntPolynomial({})
    assert to_sympy(a * b) - sympy.expand(to_sympy(a) * to_sympy(b)) == 0


@settings(max_examples=60, deadline=None)
@given(polys, st.integers(1, 5))
def test_exact_division(a, k):
    b = Q ** k - 1
    quo, rem = divmod(a * b, b)
    assert rem.is_zero() and quo == a


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_poly_oracle(n):
    assert sympy.expand(to_sympy(cyclotomic_poly(n)) - sympy.cyclotomic_poly(n, q)) == 0


def test_cyclotomic_factorization():
    p = Q ** 2 * (Q - 1) ** 3 * (Q + 1) * cyclotomic_poly(12)
    c, a, mult = cyclotomic_factorization(p)
    assert (c, a, mult) == (1, 2, {1: 3, 2: 1, 12: 1})
    assert cyclotomic_factorization(Q ** 2 + 2) is None
    assert factor_string(p) == "q^2*(q - 1)^3*(q + 1)*(q^4 - q^2 + 1)"


def test_json_roundtrip(f4):
    p = group_order_poly(f4)
    assert IntPolynomial.from_json(p.to_json()) == p
    assert all(isinstance(v, str) for _, v in p.to_json()["coeffs"])


def test_inexact_division():
    with pytest.raises(ArithmeticError):
        divmod(Q, 2 * Q + 1)
    assert not (2 * Q + 1).divides(Q)
