"""Sparse integer polynomials in one indeterminate ``q``."""
from functools import lru_cache, total_ordering


@total_ordering
class IntPolynomial:
    """Integer polynomial stored as ``{degree: coefficient}`` with no zero entries."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        c = {}
        for d, v in coeffs.items():
            d, v = int(d), int(v)
            if d < 0:
                raise ValueError(f"negative degree {d}")
            if v:
                c[d] = v
        self._c = c

    # construction
    @classmethod
    def q(cls):
        return cls({1: 1})

    @classmethod
    def constant(cls, v):
        return cls({0: v})

    @classmethod
    def monomial(cls, d, v=1):
        return cls({d: v})

    # inspection
    @property
    def coeffs(self):
        return dict(self._c)

    @property
    def degree(self):
        return max(self._c) if self._c else -1

    @property
    def leading(self):
        return self._c[self.degree] if self._c else 0

    def coefficient(self, d):
        return self._c.get(d, 0)

    def is_zero(self):
        return not self._c

    def is_monic(self):
        return self.leading == 1

    def dense(self):
        """Coefficients ``[c_0, ..., c_deg]``."""
        return [self._c.get(d, 0) for d in range(self.degree + 1)]

    def __call__(self, x):
        return sum(v * x ** d for d, v in self._c.items())

    evaluate = __call__

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for d, v in other._c.items():
            c[d] = c.get(d, 0) + v
        return IntPolynomial(c)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial({d: -v for d, v in self._c.items()})

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
        c = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                c[d1 + d2] = c.get(d1 + d2, 0) + v1 * v2
        return IntPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = IntPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        """Division with remainder; the leading coefficient of ``other`` must divide exactly."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = dict(self._c)
        quo = {}
        dd, lc = other.degree, other.leading
        while rem and max(rem) >= dd:
            d = max(rem)
            v = rem[d]
            if v % lc:
                raise ArithmeticError(f"leading coefficient {lc} does not divide {v}")
            f = v // lc
            quo[d - dd] = f
            for e, w in other._c.items():
                k = e + d - dd
                rem[k] = rem.get(k, 0) - f * w
                if rem[k] == 0:
                    del rem[k]
        return IntPolynomial(quo), IntPolynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other):
        """True when ``self`` divides ``other`` exactly in Z[q]."""
        try:
            return divmod(other, self)[1].is_zero()
        except ArithmeticError:
            return False

    # comparison
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __lt__(self, other):
        return sorted(self._c.items(), reverse=True) < sorted(other._c.items(), reverse=True)

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    # rendering
    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for d in sorted(self._c, reverse=True):
            v = self._c[d]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if d == 0:
                body = str(a)
            else:
                mono = "q" if d == 1 else f"q^{d}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"IntPolynomial({str(self)!r})"

    def to_json(self, factored=None):
        return {
            "degree": self.degree,
            "coeffs": [[d, str(self._c[d])] for d in sorted(self._c, reverse=True)],
            "factored": factored if factored is not None else factor_string(self),
        }

    @classmethod
    def from_json(cls, obj):
        return cls({int(d): int(v) for d, v in obj["coeffs"]})


Q = IntPolynomial.q()
ONE = IntPolynomial.constant(1)


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """The ``n``-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError(n)
    p = IntPolynomial({n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            p, r = divmod(p, cyclotomic_poly(d))
            assert r.is_zero()
    return p


def euler_phi(n):
    out, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


def cyclotomic_factorization(p, max_index=None):
    """Write ``p = c * q^a * prod Phi_d^m_d`` if possible.

    Returns ``(c, a, {d: m_d})`` or ``None`` when ``p`` has a non-cyclotomic
    factor.  ``max_index`` bounds the ``d`` searched (default: enough for the
    degree).
    """
    if p.is_zero():
        return None
    a = min(p.coeffs)
    rest = IntPolynomial({d - a: v for d, v in p.coeffs.items()})
    if max_index is None:
        # phi(d) <= deg needs d <= 2 deg^2 at most, generously bounded
        max_index = max(2, 2 * rest.degree * rest.degree + 2)
    mult = {}
    for d in range(1, max_index + 1):
        if rest.degree <= 0:
            break
        if euler_phi(d) > rest.degree:
            continue
        phi = cyclotomic_poly(d)
        while True:
            quo, rem = divmod(rest, phi)
            if not rem.is_zero():
                break
            mult[d] = mult.get(d, 0) + 1
            rest = quo
    if rest.degree != 0:
        return None
    return rest.leading, a, mult


def _phi_text(d):
    return "(" + str(cyclotomic_poly(d)) + ")"


def factor_string(p):
    """Human-readable factorisation into a power of ``q`` and cyclotomic factors."""
    f = cyclotomic_factorization(p)
    if f is None:
        return str(p)
    c, a, mult = f
    parts = []
    if c != 1:
        parts.append(str(c))
    if a:
        parts.append("q" if a == 1 else f"q^{a}")
    for d in sorted(mult):
        m = mult[d]
        parts.append(_phi_text(d) + (f"^{m}" if m > 1 else ""))
    return "*".join(parts) if parts else "1"


def product(polys):
    out = ONE
    for p in polys:
        out = out * p
    return out
