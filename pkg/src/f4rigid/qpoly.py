"""Order polynomials: groups of Lie type, their maximal tori, Weyl Poincare series."""
from collections import Counter

from .exact import charpoly
from .polynomial import ONE, Q, IntPolynomial, factor_string, product
from .weyl import conjugacy_classes, coxeter_data


def group_order_poly(datum):
    """``q^N prod (q^d - 1)``, times ``(q - 1)`` for each central torus dimension."""
    n_pos = len(datum.positive_roots)
    degrees = coxeter_data(datum).degrees
    poly = Q ** n_pos * product(Q ** d - 1 for d in degrees)
    return poly * (Q - 1) ** (datum.ambient_rank - datum.rank)


def group_order_factored(datum):
    n_pos = len(datum.positive_roots)
    parts = [f"q^{n_pos}"] + [f"(q^{d} - 1)" for d in coxeter_data(datum).degrees]
    extra = datum.ambient_rank - datum.rank
    if extra:
        parts.append(f"(q - 1)^{extra}")
    return "*".join(parts)


def torus_order_poly(datum, w):
    """``det(q I - w)`` with ``w`` acting on Y."""
    return IntPolynomial(charpoly(w.matrix_y))


def poincare_poly(group):
    counts = Counter(int(v) for v in group.lengths())
    return IntPolynomial(dict(counts))


def poincare_from_degrees(degrees):
    """``prod (q^d - 1)/(q - 1)`` by exact division."""
    out = ONE
    for d in degrees:
        quo, rem = divmod(Q ** d - 1, Q - 1)
        assert rem.is_zero()
        out = out * quo
    return out


def torus_classes(group):
    """One record per Weyl class: representative, class size, torus order polynomial."""
    out = []
    for rep, size in conjugacy_classes(group):
        poly = torus_order_poly(group.datum, rep)
        out.append({"representative": rep, "size": size, "poly": poly, "factored": factor_string(poly)})
    return out
