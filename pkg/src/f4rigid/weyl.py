"""Weyl groups as integral matrix groups acting on X.

Matrices act on row vectors: ``x -> x @ M``.  The same element acts on Y by
the inverse transpose, which keeps the pairing invariant.  Internally every
element is also stored as a permutation of the root list; the images of the
simple roots form a compact key for lookups.
"""
from dataclasses import dataclass
from math import gcd

import numpy as np

from . import _kernels
from .exact import charpoly, integer_inverse, transpose
from .polynomial import IntPolynomial, cyclotomic_factorization
from .rootdata import cartan_components, pairing

GROUP_CAP = 10 ** 6


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple  # action on X, rows indexed by the fundamental-weight basis

    @classmethod
    def from_array(cls, m):
        return cls(tuple(tuple(int(v) for v in row) for row in m))

    @classmethod
    def identity(cls, r):
        return cls(tuple(tuple(int(i == j) for j in range(r)) for i in range(r)))

    @property
    def rank(self):
        return len(self.matrix)

    @property
    def array(self):
        return np.array(self.matrix, dtype=np.int64)

    @property
    def matrix_y(self):
        """Action on Y: the inverse transpose."""
        return tuple(tuple(row) for row in transpose(integer_inverse(self.matrix)))

    def act_x(self, x):
        return tuple(sum(int(x[i]) * self.matrix[i][j] for i in range(self.rank)) for j in range(self.rank))

    def act_y(self, y):
        my = self.matrix_y
        return tuple(sum(y[i] * my[i][j] for i in range(self.rank)) for j in range(self.rank))

    def __mul__(self, other):
        """``self * other`` acts as ``self`` first, then ``other``."""
        return WeylElement.from_array(self.array @ other.array)

    def inverse(self):
        return WeylElement(tuple(tuple(r) for r in integer_inverse(self.matrix)))

    @property
    def order(self):
        ident = np.eye(self.rank, dtype=np.int64)
        m = self.array
        p = m.copy()
        k = 1
        while not np.array_equal(p, ident):
            p = p @ m
            k += 1
        return k

    def is_identity(self):
        return self == WeylElement.identity(self.rank)

    def flat(self):
        return tuple(v for row in self.matrix for v in row)


def reflection_matrix(root, coroot):
    """Matrix of ``x -> x - <x, coroot> root`` on X."""
    r = len(root)
    return tuple(
        tuple(int(i == j) - coroot[i] * root[j] for j in range(r)) for i in range(r)
    )


def simple_reflections(datum):
    return [
        WeylElement(reflection_matrix(a, c))
        for a, c in zip(datum.simple_roots, datum.simple_coroots)
    ]


def _root_permutation(datum, index, mat):
    m = np.asarray(mat, dtype=np.int64)
    roots = np.array([p.root for p in datum.roots], dtype=np.int64)
    images = roots @ m
    return np.array([index[tuple(int(v) for v in row)] for row in images], dtype=np.int64)


class WeylGroup:
    """Fully enumerated Weyl group of a generated datum.

    ``elements`` is sorted lexicographically by flattened matrix; that order
    defines element indices and class representatives.
    """

    def __init__(self, datum, elements, perms):
        self.datum = datum
        self.generators = tuple(simple_reflections(datum))
        order = sorted(range(len(elements)), key=lambda i: elements[i].flat())
        self.elements = tuple(elements[i] for i in order)
        self.perms = np.ascontiguousarray(perms[order])
        self.mats = np.array([e.matrix for e in self.elements], dtype=np.int64).reshape(
            len(self.elements), datum.ambient_rank, datum.ambient_rank
        )
        self._index = {e: i for i, e in enumerate(self.elements)}
        root_index = {p.root: i for i, p in enumerate(datum.roots)}
        self.root_index = root_index
        self.key_cols = np.array([root_index[a] for a in datum.simple_roots], dtype=np.int64)
        self.radix = max(len(datum.roots), 2)
        keys = self.perms[:, self.key_cols] @ _kernels.radix_weights(self.radix, len(self.key_cols))
        self._key_order = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._key_order]
        self.gen_perms = np.array(
            [_root_permutation(datum, root_index, g.matrix) for g in self.generators], dtype=np.int64
        ).reshape(len(self.generators), len(datum.roots))
        self._lengths = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w):
        return w in self._index

    @property
    def order(self):
        return len(self.elements)

    @property
    def label(self):
        return self.datum.label

    def index(self, w):
        try:
            return self._index[w]
        except KeyError:
            raise ValueError("element is not in the group") from None

    def identity(self):
        return WeylElement.identity(self.datum.ambient_rank)

    def lengths(self):
        if self._lengths is None:
            pos = np.array([i for i, p in enumerate(self.datum.roots) if p.is_positive], dtype=np.int64)
            neg = np.array([not p.is_positive for p in self.datum.roots], dtype=np.bool_)
            self._lengths = _kernels.inversion_counts(self.perms, pos, neg)
        return self._lengths

    def longest_element(self):
        return self.elements[int(np.argmax(self.lengths()))]


def enumerate_weyl(datum):
    """Close the simple reflections under multiplication."""
    if not datum.is_generated:
        raise ValueError("datum roots are not generated")
    r = datum.ambient_rank
    root_index = {p.root: i for i, p in enumerate(datum.roots)}
    key_cols = [root_index[a] for a in datum.simple_roots]
    gens = simple_reflections(datum)
    gen_mats = [g.array for g in gens]
    gen_perms = [_root_permutation(datum, root_index, g.matrix) for g in gens]

    ident_perm = np.arange(len(datum.roots), dtype=np.int64)
    mats = [np.eye(r, dtype=np.int64)]
    perms = [ident_perm]
    seen = {tuple(ident_perm[key_cols])}
    frontier = [0]
    while frontier:
        nxt = []
        for e in frontier:
            for gm, gp in zip(gen_mats, gen_perms):
                p = gp[perms[e]]  # apply the element, then the generator
                key = tuple(p[key_cols])
                if key in seen:
                    continue
                seen.add(key)
                mats.append(mats[e] @ gm)
                perms.append(p)
                nxt.append(len(perms) - 1)
                if len(perms) > GROUP_CAP:
                    raise RuntimeError(f"Weyl group exceeds {GROUP_CAP} elements")
        frontier = nxt
    elements = [WeylElement.from_array(m) for m in mats]
    return WeylGroup(datum, elements, np.array(perms, dtype=np.int64).reshape(len(perms), len(datum.roots)))


def _apply(action, gen, point):
    if action == "on_x":
        return gen.act_x(point)
    if action == "on_y":
        return gen.act_y(point)
    if action == "on_torus":
        from .torus import TorusPoint

        return TorusPoint(gen.act_y(point.coords))
    raise ValueError(f"unknown action {action!r}")


def weyl_orbit(generators, point, action="on_x"):
    """Orbit of ``point`` under the group generated by ``generators``, sorted."""
    if action == "on_torus":
        start = point
    else:
        start = tuple(point)
    if generators and len(getattr(start, "coords", start)) != generators[0].rank:
        raise ValueError("point dimension does not match the generators")
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for pt in frontier:
            for g in generators:
                img = _apply(action, g, pt)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
                    if len(seen) > GROUP_CAP:
                        raise RuntimeError(f"orbit exceeds {GROUP_CAP} points")
        frontier = nxt
    return sorted(seen)


def class_labels(group):
    """Index of the least element of each element's conjugacy class."""
    table = _kernels.conjugation_table(
        group.perms, group.gen_perms, group.key_cols, group._sorted_keys, group._key_order, group.radix
    )
    if (table < 0).any():
        raise RuntimeError("conjugate of an element was not found in the group")
    return _kernels.orbit_labels(table)


def conjugacy_classes(group):
    """``[(representative, size), ...]`` with the least element of each class as representative."""
    labels = class_labels(group)
    reps, counts = np.unique(labels, return_counts=True)
    return [(group.elements[int(r)], int(c)) for r, c in zip(reps, counts)]


def length(group, w):
    """Number of positive roots sent to negative roots by ``w``."""
    return int(group.lengths()[group.index(w)])


@dataclass(frozen=True)
class CoxeterData:
    coxeter_number: int
    exponents: tuple
    degrees: tuple
    # (component nodes, h, exponents) per irreducible component
    components: tuple = ()


def _exponents_from_charpoly(poly, h):
    fact = cyclotomic_factorization(poly)
    if fact is None:
        raise ArithmeticError(f"characteristic polynomial {poly} is not cyclotomic")
    _, _, mult = fact
    exps = []
    for d, m in mult.items():
        if h % d:
            raise ArithmeticError(f"eigenvalue order {d} does not divide h = {h}")
        for k in range(1, d + 1):
            if gcd(k, d) == 1:
                exps.extend([k * h // d] * m)
    return sorted(exps)


def coxeter_data(datum):
    """Coxeter number, exponents and degrees from the Coxeter element's eigenvalues.

    Computed per Dynkin component with the Coxeter element ``s_1 s_2 ...`` in
    node order; eigenvalue 1 coming from the part of X outside the root span
    is divided out.
    """
    r = datum.ambient_rank
    gens = simple_reflections(datum)
    q = IntPolynomial.q()
    comps = []
    all_exps = []
    h_total = 1
    for comp in cartan_components(datum.cartan):
        c = WeylElement.identity(r)
        for i in comp:
            c = c * gens[i]
        h = c.order
        poly = IntPolynomial(charpoly(c.matrix))
        poly, rem = divmod(poly, (q - 1) ** (r - len(comp)))
        if not rem.is_zero():
            raise ArithmeticError("Coxeter element fixes too little of X")
        exps = _exponents_from_charpoly(poly, h)
        comps.append((tuple(datum.nodes[i] for i in comp), h, tuple(exps)))
        all_exps.extend(exps)
        h_total = h_total * h // gcd(h_total, h)
    all_exps.sort()
    return CoxeterData(h_total, tuple(all_exps), tuple(e + 1 for e in all_exps), tuple(comps))


def braid_order(s, t):
    return (s * t).order


def pairing_invariant(w, x, y):
    """``<x w, y> == <x, y w^{-1}>`` where ``w^{-1}`` acts on Y."""
    return pairing(w.act_x(x), y) == pairing(x, w.inverse().act_y(y))
