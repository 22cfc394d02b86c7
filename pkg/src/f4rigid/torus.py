"""Torsion points of the maximal torus ``Y (x) Q/Z`` and their Weyl orbits.

A point is a vector of rationals in ``[0, 1)`` in simple-coroot coordinates.
Points of order dividing ``n`` are also addressed by an integer code, the
base-``n`` number whose digits (most significant first) are ``n * t_j``; code
order is lexicographic order of the points.
"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from . import _kernels
from .rootdata import SubsystemType, classify_subsystem
from .weyl import simple_reflections

POINT_CAP = 10 ** 7


@dataclass(frozen=True, order=True)
class TorusPoint:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) % 1 for c in self.coords))

    @classmethod
    def zero(cls, r):
        return cls((0,) * r)

    @classmethod
    def from_numerators(cls, nums, n):
        return cls(tuple(Fraction(int(a), n) for a in nums))

    @property
    def rank(self):
        return len(self.coords)

    @property
    def order(self):
        return lcm(*(c.denominator for c in self.coords)) if self.coords else 1

    def numerators(self, n):
        out = []
        for c in self.coords:
            v = c * n
            if v.denominator != 1:
                raise ValueError(f"{self} is not {n}-torsion")
            out.append(int(v))
        return tuple(out)

    def code(self, n):
        key = 0
        for a in self.numerators(n):
            key = key * n + a
        return key

    @classmethod
    def from_code(cls, code, n, r):
        digits = []
        for _ in range(r):
            digits.append(code % n)
            code //= n
        return cls.from_numerators(reversed(digits), n)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_json(self):
        return [f"{c.numerator}/{c.denominator}" for c in self.coords]


@dataclass(frozen=True)
class SemisimpleClass:
    representative: TorusPoint
    orbit_size: int
    centralizer_type: SubsystemType

    def to_json(self):
        return {
            "rep": self.representative.to_json(),
            "orbit_size": self.orbit_size,
            "centralizer_type": str(self.centralizer_type),
        }


def _check_level(r, n):
    if n < 1:
        raise ValueError(f"torsion order must be positive, got {n}")
    if n ** r > POINT_CAP:
        raise ValueError(f"{n}^{r} torsion points exceed the cap {POINT_CAP}")


def torsion_points(datum, n):
    """All points killed by ``n``, in lexicographic order."""
    r = datum.ambient_rank
    _check_level(r, n)
    return [TorusPoint.from_numerators(nums, n) for nums in itertools.product(range(n), repeat=r)]


def evaluate(t, weight):
    """Value of the character ``weight`` at ``t``, as a rational in ``[0, 1)``."""
    if len(weight) != t.rank:
        raise ValueError(f"weight of length {len(weight)} against a rank-{t.rank} point")
    return sum((int(x) * c for x, c in zip(weight, t.coords)), Fraction(0)) % 1


def kernel_roots(datum, t):
    return [p for p in datum.roots if evaluate(t, p.root) == 0]


def centralizer_type(datum, t):
    return classify_subsystem(datum, kernel_roots(datum, t))


def y_generators(datum):
    """Simple reflections as integer matrices acting on Y (row vectors)."""
    return np.array([g.matrix_y for g in simple_reflections(datum)], dtype=np.int64).reshape(
        datum.rank, datum.ambient_rank, datum.ambient_rank
    )


def orbit_labels(datum, n):
    """For every code at level ``n``, the code of the least point in its Weyl orbit."""
    r = datum.ambient_rank
    _check_level(r, n)
    if datum.rank == 0:
        return np.arange(n ** r, dtype=np.int64)
    perms = _kernels.torus_action(y_generators(datum), n)
    return _kernels.orbit_labels(perms)


def semisimple_classes(datum, n):
    """Weyl orbits on the ``n``-torsion points with size and centralizer type."""
    r = datum.ambient_rank
    labels = orbit_labels(datum, n)
    reps, sizes = np.unique(labels, return_counts=True)
    out = []
    for code, size in zip(reps, sizes):
        t = TorusPoint.from_code(int(code), n, r)
        out.append(SemisimpleClass(t, int(size), centralizer_type(datum, t)))
    return out


def levi_derived_membership(t, i):
    """``(t_i, t_i == 0)``: whether ``t`` lies in the derived group of the Levi without node ``i``."""
    if not 1 <= i <= t.rank:
        raise IndexError(f"node {i} out of range 1..{t.rank}")
    c = t.coords[i - 1]
    return c, c == 0
