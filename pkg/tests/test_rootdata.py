import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f4rigid.rootdata import (
    F4_CARTAN,
    SubsystemType,
    build_root_datum,
    cartan_type,
    catalogue_cartan,
    classify_subsystem,
    datum_for_type,
    datum_to_json,
    generate_roots,
    levi_datum,
    pairing,
)

# |Phi| for each irreducible type
ROOT_COUNTS = {("A", 1): 2, ("A", 2): 6, ("A", 3): 12, ("B", 2): 8, ("B", 3): 18, ("C", 3): 18,
               ("D", 4): 24, ("G", 2): 12, ("F", 4): 48, ("B", 4): 32, ("C", 4): 32}


def test_f4_roots(f4):
    assert len(f4.roots) == 48
    assert len(f4.positive_roots) == 24
    assert f4.cartan == F4_CARTAN
    assert catalogue_cartan("F", 4) == F4_CARTAN


def test_f4_root_lengths(f4):
    # nodes 1, 2 long; 3, 4 short.  <a, a^v> = 2 always; long/short via the symmetrised form
    for p in f4.roots:
        assert pairing(p.root, p.coroot) == 2
    assert cartan_type(F4_CARTAN) == SubsystemType((("F", 4),))
    assert F4_CARTAN[2][1] == -2  # <alpha_2, alpha_3^v>: alpha_2 long, alpha_3 short


def test_roots_closed_under_reflection(f4):
    roots = {p.root for p in f4.roots}
    for a in f4.roots:
        for b in f4.roots:
            k = pairing(b.root, a.coroot)
            assert tuple(x - k * y for x, y in zip(b.root, a.root)) in roots


@pytest.mark.parametrize("comp,count", sorted(ROOT_COUNTS.items()))
def test_catalogue_root_counts(comp, count):
    d = generate_roots(build_root_datum(catalogue_cartan(*comp)))
    assert len(d.roots) == count
    assert cartan_type(d.cartan) == SubsystemType((comp,))


def test_levis(f4):
    types = {i: str(classify_subsystem(f4, levi_datum(f4, i).roots)) for i in range(1, 5)}
    assert types == {1: "C3", 2: "A2+A1", 3: "A2+A1", 4: "B3"}
    assert [len(levi_datum(f4, i).roots) for i in range(1, 5)] == [18, 8, 8, 18]
    assert levi_datum(f4, 1).nodes == (2, 3, 4)


def test_levi_bad_index(f4):
    with pytest.raises(IndexError):
        levi_datum(f4, 5)


@pytest.mark.parametrize("bad", [
    [[2, -1], [-1]],
    [[2, 1], [-1, 2]],
    [[2, -1], [0, 2]],
    [[3, -1], [-1, 2]],
])
def test_invalid_cartan(bad):
    with pytest.raises(ValueError):
        build_root_datum(bad)


@pytest.mark.parametrize("text", ["A1", "A2", "B3", "C3", "G2", "B2", "D4", "A2+A1", "A1+C3", "B4", "A1+A1"])
def test_type_roundtrip(text):
    d = datum_for_type(text)
    assert str(classify_subsystem(d, d.roots)) == text
    assert str(SubsystemType.parse(text)) == text


def test_type_rendering():
    assert str(SubsystemType((("C", 3), ("A", 1)))) == "A1+C3"
    assert str(SubsystemType((("A", 1), ("A", 2)))) == "A2+A1"
    assert str(SubsystemType(())) == "T"
    assert SubsystemType.parse("T").rank == 0


def test_classify_needs_negation_closure(f4):
    with pytest.raises(ValueError):
        classify_subsystem(f4, f4.positive_roots[:1])


@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(0, 47), max_size=6))
def test_closure_of_random_roots_classifies(f4, idx):
    # the reflection closure of any root set is a subsystem whose type rank fits
    sub = {f4.roots[i].root for i in idx}
    sub |= {tuple(-v for v in r) for r in sub}
    changed = True
    by_root = {p.root: p for p in f4.roots}
    while changed:
        changed = False
        for a in list(sub):
            for b in list(sub):
                k = pairing(b, by_root[a].coroot)
                c = tuple(x - k * y for x, y in zip(b, a))
                if c not in sub:
                    sub.add(c)
                    changed = True
    t = classify_subsystem(f4, [by_root[r] for r in sub])
    assert t.rank <= 4
    assert sum(ROOT_COUNTS.get(c, 0) if c[0] != "A" else c[1] * (c[1] + 1) for c in t.components) == len(sub)


def test_datum_json(f4):
    obj = json.loads(json.dumps(datum_to_json(f4)))
    assert obj["label"] == "F4"
    assert obj["rank"] == 4
    assert len(obj["roots"]) == 48
    assert obj["cartan"] == [list(r) for r in F4_CARTAN]
