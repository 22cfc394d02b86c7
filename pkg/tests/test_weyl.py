import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from f4rigid.rootdata import datum_for_type
from f4rigid.weyl import (
    WeylElement,
    braid_order,
    conjugacy_classes,
    coxeter_data,
    enumerate_weyl,
    length,
    pairing_invariant,
    simple_reflections,
    weyl_orbit,
)

GROUP_DATA = {
    # order, classes, h, exponents
    "A1": (2, 2, 2, (1,)),
    "A2": (6, 3, 3, (1, 2)),
    "B3": (48, 10, 6, (1, 3, 5)),
    "C3": (48, 10, 6, (1, 3, 5)),
    "G2": (12, 6, 6, (1, 5)),
    "A2+A1": (12, 6, 6, (1, 1, 2)),
}


def test_f4_group(wf4):
    assert wf4.order == 1152
    assert len(conjugacy_classes(wf4)) == 25
    assert sum(s for _, s in conjugacy_classes(wf4)) == 1152
    cox = coxeter_data(wf4.datum)
    assert cox.coxeter_number == 12
    assert cox.exponents == (1, 5, 7, 11)
    assert cox.degrees == (2, 6, 8, 12)
    assert int(wf4.lengths().max()) == 24
    # w0 = -1 in type F4
    assert (wf4.longest_element().array == -np.eye(4, dtype=np.int64)).all()


@pytest.mark.parametrize("t", sorted(GROUP_DATA))
def test_small_groups(small_groups, t):
    order, ncls, h, exps = GROUP_DATA[t]
    g = small_groups[t]
    assert g.order == order
    assert len(conjugacy_classes(g)) == ncls
    cox = coxeter_data(g.datum)
    assert (cox.coxeter_number, cox.exponents) == (h, exps)
    # product of degrees is the group order, sum of exponents is the number of positive roots
    assert np.prod(cox.degrees) == order
    assert sum(exps) == len(g.datum.positive_roots)


def test_coxeter_charpoly_oracle(f4):
    # sympy: eigenvalues of the Coxeter element are primitive h-th roots of unity
    c = WeylElement.identity(4)
    for s in simple_reflections(f4):
        c = c * s
    q = sympy.symbols("q")
    cp = sympy.Matrix(c.matrix).charpoly(q).as_expr()
    assert sympy.expand(cp - sympy.cyclotomic_poly(12, q)) == 0


def test_braid_relations(f4):
    s = simple_reflections(f4)
    m = {(0, 1): 3, (1, 2): 4, (2, 3): 3, (0, 2): 2, (0, 3): 2, (1, 3): 2}
    for (i, j), want in m.items():
        assert braid_order(s[i], s[j]) == want
    for g in s:
        assert g.order == 2


def test_group_closed_and_lengths(wf4):
    s = wf4.generators
    for idx in (0, 17, 500, 1151):
        w = wf4.elements[idx]
        assert w.inverse() in wf4
        for g in s:
            assert abs(length(wf4, w * g) - length(wf4, w)) == 1
    assert length(wf4, wf4.identity()) == 0


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 1151), st.lists(st.integers(-3, 3), min_size=4, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_pairing_invariant(wf4, i, x, y):
    assert pairing_invariant(wf4.elements[i], x, y)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 1151), st.integers(0, 1151))
def test_multiplication_order(wf4, i, j):
    # w1 * w2 applies w1 first
    a, b = wf4.elements[i], wf4.elements[j]
    x = (1, 2, 3, 4)
    assert (a * b).act_x(x) == b.act_x(a.act_x(x))
    assert (a * b) in wf4


def test_orbits(f4, wf4):
    s = simple_reflections(f4)
    # long and short roots form the two root orbits
    orbit = weyl_orbit(s, f4.simple_roots[0], "on_x")
    assert len(orbit) == 24
    assert len(weyl_orbit(s, f4.simple_roots[3], "on_x")) == 24
    assert len(weyl_orbit(s, (0, 0, 0, 0), "on_x")) == 1
    with pytest.raises(ValueError):
        weyl_orbit(s, (1, 2), "on_x")
    with pytest.raises(ValueError):
        weyl_orbit(s, (1, 0, 0, 0), "sideways")


def test_enumerate_needs_roots():
    from f4rigid.rootdata import build_root_datum
    with pytest.raises(ValueError):
        enumerate_weyl(build_root_datum([[2]]))


def test_class_sizes_divide(wf4):
    for rep, size in conjugacy_classes(wf4):
        assert wf4.order % size == 0
    assert datum_for_type("F4").cartan == wf4.datum.cartan
