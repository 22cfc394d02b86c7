"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored as its rational coefficient vector on ``1, z, ..., z^(phi(n)-1)``
after reduction modulo the ``n``-th cyclotomic polynomial.  Rational values
are normalised to conductor 1.  Mixed-conductor arithmetic embeds both
operands into the field of the least common multiple.
"""
from fractions import Fraction
from math import lcm

from .polynomial import cyclotomic_poly


def _reduce(n, dense):
    """Reduce ``sum dense[k] z^k`` modulo ``z^n - 1`` and then ``Phi_n``."""
    folded = [Fraction(0)] * n
    for k, v in enumerate(dense):
        if v:
            folded[k % n] += v
    phi = cyclotomic_poly(n).dense()
    deg = len(phi) - 1
    for k in range(n - 1, deg - 1, -1):
        v = folded[k]
        if v:
            for j, c in enumerate(phi):
                folded[k - deg + j] -= v * c
    return tuple(folded[:deg])


def _parse_fraction(v):
    if isinstance(v, str):
        return Fraction(v.strip())
    return Fraction(v)


class Cyclotomic:
    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        """``coeffs`` maps exponents to rationals, or is a dense list of them."""
        if n < 1:
            raise ValueError(f"conductor must be positive, got {n}")
        if isinstance(coeffs, dict):
            top = max(coeffs, default=0)
            dense = [Fraction(0)] * (top + 1)
            for k, v in coeffs.items():
                if k < 0:
                    raise ValueError(f"negative exponent {k}")
                dense[k] += _parse_fraction(v)
        else:
            dense = [_parse_fraction(v) for v in coeffs]
        red = _reduce(n, dense)
        if all(c == 0 for c in red[1:]):
            n, red = 1, (red[0] if red else Fraction(0),)
        self.n = n
        self.coeffs = red

    @classmethod
    def rational(cls, v):
        return cls(1, [v])

    @classmethod
    def zeta(cls, n, k=1):
        return cls(n, {k % n: 1})

    # conversion
    def is_rational(self):
        return self.n == 1

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def lift(self, m):
        """The same value written in Q(zeta_m); ``m`` must be a multiple of the conductor."""
        if m % self.n:
            raise ValueError(f"cannot embed conductor {self.n} into {m}")
        step = m // self.n
        return Cyclotomic(m, {k * step: v for k, v in enumerate(self.coeffs) if v})

    def _dense_in(self, m):
        step = m // self.n
        dense = [Fraction(0)] * m
        for k, v in enumerate(self.coeffs):
            dense[k * step] += v
        return dense

    def __complex__(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.n)
        return complex(sum(float(v) * z ** k for k, v in enumerate(self.coeffs)))

    # arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = lcm(self.n, other.n)
        a, b = self._dense_in(m), other._dense_in(m)
        return Cyclotomic(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, [-v for v in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = lcm(self.n, other.n)
        a, b = self._dense_in(m), other._dense_in(m)
        prod = [Fraction(0)] * (2 * m)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(m, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a non-zero rational only."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.is_rational():
            raise ValueError("division by an irrational cyclotomic is not supported")
        d = other.to_fraction()
        if d == 0:
            raise ZeroDivisionError("division by zero")
        return Cyclotomic(self.n, [v / d for v in self.coeffs])

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = Cyclotomic.rational(1)
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self):
        """Complex conjugate: ``z -> z^-1``."""
        return Cyclotomic(self.n, {(-k) % self.n: v for k, v in enumerate(self.coeffs) if v})

    def galois(self, k):
        """Image under ``z -> z^k`` for ``k`` prime to the conductor."""
        return Cyclotomic(self.n, {(j * k) % self.n: v for j, v in enumerate(self.coeffs) if v})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.n == other.n:
            return self.coeffs == other.coeffs
        m = lcm(self.n, other.n)
        return self.lift(m).coeffs == other.lift(m).coeffs

    __hash__ = None

    def is_zero(self):
        return self.n == 1 and self.coeffs[0] == 0

    # serialisation
    def to_json(self):
        return {
            "n": self.n,
            "coeffs": [[k, _frac_str(v)] for k, v in enumerate(self.coeffs) if v],
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, (int, str)):
            return cls.rational(_parse_fraction(obj))
        return cls(int(obj["n"]), {int(k): _parse_fraction(v) for k, v in obj["coeffs"]})

    def __str__(self):
        if self.is_rational():
            return _frac_str(self.coeffs[0])
        parts = []
        for k, v in enumerate(self.coeffs):
            if not v:
                continue
            mono = "1" if k == 0 else (f"z{self.n}" if k == 1 else f"z{self.n}^{k}")
            if k == 0:
                parts.append(_frac_str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{_frac_str(v)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Cyclotomic({self})"


def _frac_str(v):
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"
