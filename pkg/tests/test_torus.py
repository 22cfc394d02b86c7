from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f4rigid.rootdata import datum_for_type
from f4rigid.torus import (
    TorusPoint,
    centralizer_type,
    evaluate,
    levi_derived_membership,
    orbit_labels,
    semisimple_classes,
    torsion_points,
)
from f4rigid.weyl import simple_reflections, weyl_orbit


def test_involutions(f4):
    got = [(c.representative.to_json(), c.orbit_size, str(c.centralizer_type)) for c in semisimple_classes(f4, 2)]
    assert got == [
        (["0/1", "0/1", "0/1", "0/1"], 1, "F4"),
        (["0/1", "0/1", "0/1", "1/2"], 3, "B4"),
        (["0/1", "1/2", "0/1", "0/1"], 12, "A1+C3"),
    ]


@pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 4), (4, 8), (6, 17)])
def test_class_counts(f4, n, count):
    classes = semisimple_classes(f4, n)
    assert len(classes) == count
    assert sum(c.orbit_size for c in classes) == n ** 4
    assert all(1152 % c.orbit_size == 0 for c in classes)


def test_orbit_size_matches_centralizer(f4):
    # |W| / |orbit| = |W(C(t))| when C(t) is connected (always true for 2- and 3-torsion in F4)
    weyl_orders = {"F4": 1152, "B4": 384, "A1+C3": 96, "A2+A2": 36, "B3": 48, "C3": 48}
    for n in (2, 3):
        for c in semisimple_classes(f4, n):
            assert c.orbit_size * weyl_orders[str(c.centralizer_type)] == 1152


def test_rank_one():
    a1 = datum_for_type("A1")
    got = [(c.representative.to_json(), str(c.centralizer_type)) for c in semisimple_classes(a1, 2)]
    assert got == [(["0/1"], "A1"), (["1/2"], "A1")]


def test_representative_is_lex_least(f4):
    gens = simple_reflections(f4)
    for c in semisimple_classes(f4, 4):
        orbit = weyl_orbit(gens, c.representative, "on_torus")
        assert len(orbit) == c.orbit_size
        assert min(orbit) == c.representative


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=4, max_size=4))
def test_labels_constant_on_orbits(f4, nums):
    labels = orbit_labels(f4, 6)
    t = TorusPoint.from_numerators(nums, 6)
    lab = labels[t.code(6)]
    for g in simple_reflections(f4):
        assert labels[TorusPoint(g.act_y(t.coords)).code(6)] == lab
    # centralizer type is a class invariant
    rep = TorusPoint.from_code(int(lab), 6, 4)
    assert centralizer_type(f4, rep) == centralizer_type(f4, t)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.fractions(), min_size=4, max_size=4), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_point_normalisation(coords, w):
    t = TorusPoint(coords)
    assert all(0 <= c < 1 for c in t.coords)
    assert TorusPoint([c + 3 for c in coords]) == t
    assert 0 <= evaluate(t, w) < 1


def test_codes_roundtrip():
    for code in range(81):
        assert TorusPoint.from_code(code, 3, 4).code(3) == code
    pts = torsion_points(datum_for_type("A2"), 3)
    assert pts == sorted(pts)
    assert [p.code(3) for p in pts] == list(range(9))


def test_errors(f4):
    with pytest.raises(ValueError):
        semisimple_classes(f4, 0)
    with pytest.raises(ValueError):
        torsion_points(f4, 100)
    with pytest.raises(ValueError):
        TorusPoint((Fraction(1, 3),)).numerators(2)
    with pytest.raises(IndexError):
        levi_derived_membership(TorusPoint.zero(4), 5)


def test_levi_derived_membership():
    t = TorusPoint((0, Fraction(1, 2), 0, 0))
    assert levi_derived_membership(t, 1) == (0, True)
    assert levi_derived_membership(t, 2) == (Fraction(1, 2), False)
    assert TorusPoint.zero(3).order == 1
    assert t.order == 2
