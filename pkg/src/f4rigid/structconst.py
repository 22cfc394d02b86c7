"""Class structure constants checked against brute-force counting.

Permutations are image tuples on ``0..n-1`` (1-indexed only in JSON).  The
product ``x*y`` applies ``x`` first: ``(x*y)[i] = y[x[i]]``.

Conjugacy classes are named like ATLAS classes: element order followed by a
letter, letters assigned by decreasing class size within an order and then
by the lexicographically least element.
"""
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from math import gcd, lcm
from pathlib import Path

import numpy as np

from . import _kernels
from .cyclotomic import Cyclotomic

ELEMENT_CAP = 2 * 10 ** 5
PAIR_CAP = 5 * 10 ** 7
MAX_DEGREE = 15  # keys are base-n integers in int64
BUILTIN_GROUPS = ("S3", "D8", "A4", "S4", "A5")


def compose(a, b):
    return tuple(b[i] for i in a)


def invert(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def perm_order(a):
    seen = [False] * len(a)
    out = 1
    for i in range(len(a)):
        if seen[i]:
            continue
        k = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            k += 1
        out = lcm(out, k)
    return out


class PermGroup:
    def __init__(self, degree, generators, name=""):
        self.degree = int(degree)
        if self.degree > MAX_DEGREE:
            raise ValueError(f"degree {self.degree} exceeds the supported maximum {MAX_DEGREE}")
        gens = []
        for g in generators:
            g = tuple(int(v) for v in g)
            if sorted(g) != list(range(self.degree)):
                raise ValueError(f"generator {g} is not a bijection of 0..{self.degree - 1}")
            gens.append(g)
        self.generators = tuple(gens)
        self.name = name
        self._elements = None
        self._classes = None

    # construction and serialisation
    @classmethod
    def from_json(cls, obj, name=""):
        return cls(obj["degree"], [[v - 1 for v in g] for g in obj["generators"]],
                   name=obj.get("name", name))

    def to_json(self):
        out = {"degree": self.degree, "generators": [[v + 1 for v in g] for g in self.generators]}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def load(cls, path):
        path = Path(path)
        return cls.from_json(json.loads(path.read_text()), name=path.stem)

    def relabel(self, sigma):
        """The same abstract group acting on points renamed by ``i -> sigma[i]``."""
        gens = []
        for g in self.generators:
            new = [0] * self.degree
            for i, v in enumerate(g):
                new[sigma[i]] = sigma[v]
            gens.append(tuple(new))
        return PermGroup(self.degree, gens, self.name)

    # elements
    def _enumerate(self):
        ident = tuple(range(self.degree))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for e in frontier:
                for g in self.generators:
                    p = compose(e, g)
                    if p not in seen:
                        seen.add(p)
                        nxt.append(p)
                        if len(seen) > ELEMENT_CAP:
                            raise RuntimeError(f"group order exceeds the cap {ELEMENT_CAP}")
            frontier = nxt
        elements = np.array(sorted(seen), dtype=np.int64).reshape(len(seen), self.degree)
        self._elements = elements
        self._keys = elements @ _kernels.radix_weights(max(self.degree, 2), self.degree)
        self._key_order = np.arange(len(elements), dtype=np.int64)
        self._inverse_idx = self.lookup(np.argsort(elements, axis=1))

    @property
    def elements(self):
        """All elements as an ``(order, degree)`` array in lexicographic order."""
        if self._elements is None:
            self._enumerate()
        return self._elements

    @property
    def order(self):
        return len(self.elements)

    def lookup(self, perms):
        perms = np.atleast_2d(np.asarray(perms, dtype=np.int64))
        keys = perms @ _kernels.radix_weights(max(self.degree, 2), self.degree)
        idx = _kernels._lookup_np(keys, self._keys, self._key_order)
        if (idx < 0).any():
            raise ValueError("permutation is not in the group")
        return idx

    def index(self, perm):
        self.elements
        return int(self.lookup([perm])[0])

    def element(self, i):
        return tuple(int(v) for v in self.elements[i])

    def inverse_index(self):
        self.elements
        return self._inverse_idx

    def conjugation_tables(self):
        """``table[g, e]`` = index of ``g^-1 e g`` for each generator ``g``."""
        els = self.elements
        out = np.empty((len(self.generators), len(els)), dtype=np.int64)
        for k, g in enumerate(self.generators):
            g = np.array(g, dtype=np.int64)
            ginv = np.argsort(g)
            out[k] = self.lookup(g[els[:, ginv]])
        return out

    def product_indices(self, idx1, idx2):
        if len(idx1) * len(idx2) > PAIR_CAP:
            raise RuntimeError(f"{len(idx1)}x{len(idx2)} products exceed the cap {PAIR_CAP}")
        return _kernels.product_indices(self.elements, idx1, idx2, self._keys, self._key_order)

    def generated_order(self, idx_list):
        """Order of the subgroup generated by the given element indices."""
        gens = [self.element(i) for i in idx_list]
        ident = tuple(range(self.degree))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for e in frontier:
                for g in gens:
                    p = compose(e, g)
                    if p not in seen:
                        seen.add(p)
                        nxt.append(p)
            frontier = nxt
        return len(seen)

    def center_order(self):
        tables = self.conjugation_tables()
        return int((tables == np.arange(self.order)).all(axis=0).sum())


@dataclass(frozen=True)
class ConjClass:
    name: str
    representative: tuple
    size: int
    element_order: int
    centralizer_order: int
    members: tuple = field(repr=False, compare=False)

    def to_json(self):
        return {
            "name": self.name,
            "representative": [v + 1 for v in self.representative],
            "size": self.size,
            "element_order": self.element_order,
            "centralizer_order": self.centralizer_order,
        }


def conjugacy_classes_perm(group):
    if group._classes is not None:
        return group._classes
    labels = _kernels.orbit_labels(group.conjugation_tables())
    reps, sizes = np.unique(labels, return_counts=True)
    raw = []
    for r, s in zip(reps, sizes):
        rep = group.element(int(r))
        members = tuple(int(i) for i in np.flatnonzero(labels == r))
        raw.append((perm_order(rep), -int(s), int(r), rep, members))
    raw.sort()
    classes = []
    letters = {}
    for order, neg_size, _, rep, members in raw:
        k = letters.get(order, 0)
        letters[order] = k + 1
        name = f"{order}{_letter(k)}"
        classes.append(ConjClass(name, rep, -neg_size, order, group.order // -neg_size, members))
    group._classes = classes
    return classes


def _letter(k):
    s = ""
    k += 1
    while k:
        k, rem = divmod(k - 1, 26)
        s = chr(ord("a") + rem) + s
    return s


def get_class(group, name):
    for c in conjugacy_classes_perm(group):
        if c.name == name:
            return c
    raise KeyError(f"group has no class named {name!r}")


def _as_class(group, c):
    return get_class(group, c) if isinstance(c, str) else c


def _inverse_class_mask(group, c):
    mask = np.zeros(group.order, dtype=np.bool_)
    mask[group.inverse_index()[list(c.members)]] = True
    return mask


def count_triples(group, c1, c2, c3):
    """``#{(x, y, z) in c1 x c2 x c3 : x y z = 1}`` by a double loop over ``c1 x c2``."""
    c1, c2, c3 = (_as_class(group, c) for c in (c1, c2, c3))
    prods = group.product_indices(np.array(c1.members), np.array(c2.members))
    return int(_inverse_class_mask(group, c3)[prods].sum())


def is_rational_class(group, c):
    """Whether ``g^k`` stays in the class for every ``k`` prime to the element order."""
    c = _as_class(group, c)
    members = set(c.members)
    g = c.representative
    for k in range(1, c.element_order):
        if gcd(k, c.element_order) != 1:
            continue
        p = tuple(range(group.degree))
        for _ in range(k):
            p = compose(p, g)
        if group.index(p) not in members:
            return False
    return True


@dataclass(frozen=True)
class RigidityReport:
    classes: tuple
    triple_count: int
    generating_count: int
    orbit_count: int
    orbit_sizes: tuple
    regular: bool
    rigid: bool
    center_trivial: bool
    classes_rational: tuple
    rationally_rigid: bool

    def to_json(self):
        return {
            "classes": list(self.classes),
            "triple_count": self.triple_count,
            "generating_count": self.generating_count,
            "orbit_count": self.orbit_count,
            "orbit_sizes": list(self.orbit_sizes),
            "regular": self.regular,
            "rigid": self.rigid,
            "center_trivial": self.center_trivial,
            "classes_rational": list(self.classes_rational),
            "rationally_rigid": self.rationally_rigid,
        }


def is_rigid(group, c1, c2, c3):
    """Orbits of ``G`` by simultaneous conjugation on generating product-one triples."""
    c1, c2, c3 = (_as_class(group, c) for c in (c1, c2, c3))
    idx1, idx2 = np.array(c1.members), np.array(c2.members)
    prods = group.product_indices(idx1, idx2)
    hits = np.argwhere(_inverse_class_mask(group, c3)[prods])
    triples = [(int(idx1[a]), int(idx2[b])) for a, b in hits]
    generating = {t for t in triples if group.generated_order(t) == group.order}

    tables = group.conjugation_tables()
    unseen = set(generating)
    orbit_sizes = []
    while unseen:
        start = min(unseen)
        orbit = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for x, y in frontier:
                for tab in tables:
                    img = (int(tab[x]), int(tab[y]))
                    if img not in orbit:
                        orbit.add(img)
                        nxt.append(img)
            frontier = nxt
        unseen -= orbit
        orbit_sizes.append(len(orbit))
    orbit_sizes.sort(reverse=True)
    regular = all(s == group.order for s in orbit_sizes)
    rigid = len(orbit_sizes) == 1 and regular
    rational = tuple(is_rational_class(group, c) for c in (c1, c2, c3))
    return RigidityReport(
        classes=(c1.name, c2.name, c3.name),
        triple_count=len(triples),
        generating_count=len(generating),
        orbit_count=len(orbit_sizes),
        orbit_sizes=tuple(orbit_sizes),
        regular=regular,
        rigid=rigid,
        center_trivial=group.center_order() == 1,
        classes_rational=rational,
        rationally_rigid=rigid and all(rational),
    )


# ------------------------------------------------------------ character tables


@dataclass(frozen=True)
class TableClass:
    name: str
    size: int
    element_order: int


@dataclass(frozen=True, eq=False)
class CharacterTable:
    order: int
    classes: tuple
    chars: tuple  # rows of Cyclotomic values
    name: str = ""

    def class_index(self, c):
        if isinstance(c, int):
            return c
        if isinstance(c, ConjClass):
            c = c.name
        for i, tc in enumerate(self.classes):
            if tc.name == c:
                return i
        raise KeyError(f"table has no class named {c!r}")

    def centralizer_order(self, i):
        return Fraction(self.order, self.classes[i].size)

    @classmethod
    def from_json(cls, obj, name=""):
        classes = tuple(TableClass(c["name"], int(c["size"]), int(c["element_order"]))
                        for c in obj["classes"])
        chars = tuple(tuple(Cyclotomic.from_json(v) for v in row) for row in obj["chars"])
        for row in chars:
            if len(row) != len(classes):
                raise ValueError(f"character row of length {len(row)} against {len(classes)} classes")
        return cls(int(obj["order"]), classes, chars, obj.get("name", name))

    def to_json(self):
        return {
            "order": self.order,
            "classes": [{"name": c.name, "size": c.size, "element_order": c.element_order}
                        for c in self.classes],
            "chars": [[v.to_json() for v in row] for row in self.chars],
        }

    @classmethod
    def load(cls, path):
        path = Path(path)
        return cls.from_json(json.loads(path.read_text()), name=path.stem)


@dataclass(frozen=True)
class TableValidation:
    valid: bool
    failures: tuple

    def to_json(self):
        return {"valid": self.valid, "failures": list(self.failures)}


def validate_table(table):
    failures = []
    sizes = [c.size for c in table.classes]
    if sum(sizes) != table.order:
        failures.append(f"class sizes sum to {sum(sizes)}, not the group order {table.order}")
    degrees = []
    for i, row in enumerate(table.chars):
        d = row[0]
        if not d.is_rational() or d.to_fraction().denominator != 1 or d.to_fraction() <= 0:
            failures.append(f"character {i + 1} has degree {d}, not a positive integer")
        else:
            degrees.append(int(d.to_fraction()))
    if len(degrees) == len(table.chars) and sum(d * d for d in degrees) != table.order:
        failures.append(f"degree sum: sum of squared degrees is {sum(d * d for d in degrees)}, "
                        f"not {table.order}")
    if len(table.chars) != len(table.classes):
        failures.append(f"{len(table.chars)} characters for {len(table.classes)} classes")
    for i, ri in enumerate(table.chars):
        for j in range(i, len(table.chars)):
            rj = table.chars[j]
            s = sum((a * b.conjugate() * sz for a, b, sz in zip(ri, rj, sizes)), Cyclotomic.rational(0))
            want = table.order if i == j else 0
            if s != want:
                failures.append(f"row orthogonality fails for characters ({i + 1}, {j + 1}): "
                                f"inner product {s}, expected {want}")
    for a in range(len(table.classes)):
        for b in range(a, len(table.classes)):
            s = sum((row[a] * row[b].conjugate() for row in table.chars), Cyclotomic.rational(0))
            want = table.order // sizes[a] if a == b and sizes[a] else 0
            if s != want:
                failures.append(f"column orthogonality fails for classes "
                                f"({table.classes[a].name}, {table.classes[b].name}): {s}, expected {want}")
    return TableValidation(not failures, tuple(failures))


def structure_constant(table, c1, c2, c3, validate=True):
    """``|G| / (z1 z2 z3) * sum chi(c1) chi(c2) chi(c3) / chi(1)``.

    Equals the number of product-one triples from the three classes divided
    by ``|G|``.
    """
    if validate:
        report = validate_table(table)
        if not report.valid:
            raise ValueError("character table failed validation: " + "; ".join(report.failures))
    i1, i2, i3 = (table.class_index(c) for c in (c1, c2, c3))
    total = Cyclotomic.rational(0)
    for row in table.chars:
        total = total + row[i1] * row[i2] * row[i3] / row[0]
    z = table.centralizer_order(i1) * table.centralizer_order(i2) * table.centralizer_order(i3)
    return total * Fraction(table.order) / z


def check_table_matches(group, table):
    """Raise if the table's classes disagree with the group's named classes."""
    if table.order != group.order:
        raise ValueError(f"table order {table.order} differs from group order {group.order}")
    gcls = {c.name: c for c in conjugacy_classes_perm(group)}
    if set(gcls) != {c.name for c in table.classes}:
        raise ValueError(f"class names differ: group {sorted(gcls)}, table {[c.name for c in table.classes]}")
    for tc in table.classes:
        gc = gcls[tc.name]
        if (gc.size, gc.element_order) != (tc.size, tc.element_order):
            raise ValueError(f"class {tc.name}: group has size {gc.size} order {gc.element_order}, "
                             f"table has size {tc.size} order {tc.element_order}")


# ------------------------------------------------------------ shipped fixtures


def _data_file(kind, name):
    return resources.files("f4rigid").joinpath("data").joinpath(kind).joinpath(f"{name}.json")


def builtin_group(name):
    return PermGroup.from_json(json.loads(_data_file("groups", name).read_text()), name=name)


def builtin_table(name):
    return CharacterTable.from_json(json.loads(_data_file("tables", name).read_text()), name=name)
