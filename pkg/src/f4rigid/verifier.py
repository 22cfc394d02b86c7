"""Eigenvalue contradictions for the four maximal parabolics of F4.

For a parabolic ``P_i`` with Levi ``L_i``, the images of ``x`` and ``y_s``
are involutions of ``L_i`` fused to the G-classes of ``x`` and ``y_s``, and
the image of ``y_u`` has at most ``b_i`` non-trivial Jordan blocks of size 2
in the chosen representation.  Any product ``x y_s y_u`` whose (-1)-eigenspace
is forced to be non-zero cannot be inverse to a unipotent element.

Admissible pairs are those whose ``i``-th torus coordinates agree, i.e. the
product has trivial image in ``L_i / L_i'``.
"""
import random
from dataclasses import dataclass, field

from .exact import identity, int_rank, matmul
from .levirep import TARGET_DIMENSIONS, InvolutionEigenData, eigen_dims, involution_fusion, weight_system
from .rootdata import f4_datum


@dataclass(frozen=True)
class CaseConfig:
    levi_index: int
    max_jordan_blocks: int

    def __post_init__(self):
        if self.max_jordan_blocks < 0:
            raise ValueError("max_jordan_blocks must be non-negative")
        dim = TARGET_DIMENSIONS.get(self.levi_index)
        if dim is None:
            raise ValueError(f"Levi index must be 1..4, got {self.levi_index}")
        if 2 * self.max_jordan_blocks > dim:
            raise ValueError(f"{self.max_jordan_blocks} blocks of size 2 do not fit in dimension {dim}")


# Jordan blocks of a long root element in each case representation
DEFAULT_CONFIGS = (
    CaseConfig(1, 1),
    CaseConfig(2, 1),
    CaseConfig(3, 1),
    CaseConfig(4, 2),
)


@dataclass(frozen=True)
class PairReport:
    x_class: object
    ys_class: object
    x_eigen: InvolutionEigenData
    ys_eigen: InvolutionEigenData
    bound: int
    margin: int

    def to_json(self):
        return {
            "x_class": self.x_class.to_json(),
            "ys_class": self.ys_class.to_json(),
            "x_eigen": self.x_eigen.to_json(),
            "ys_eigen": self.ys_eigen.to_json(),
            "bound": self.bound,
            "margin": self.margin,
        }


@dataclass(frozen=True)
class CaseReport:
    levi_index: int
    dimension: int
    max_jordan_blocks: int
    pairs: tuple
    contradiction_holds: bool
    vacuous: bool
    minimal_margin: object  # int, or None when vacuous
    failing: tuple = field(default=())

    def to_json(self):
        return {
            "case": f"P{self.levi_index}",
            "levi_index": self.levi_index,
            "dimension": self.dimension,
            "max_jordan_blocks": self.max_jordan_blocks,
            "admissible_pairs": len(self.pairs),
            "pairs": [p.to_json() for p in self.pairs],
            "contradiction_holds": self.contradiction_holds,
            "vacuous": self.vacuous,
            "minimal_margin": self.minimal_margin,
            "failing_pairs": [p.to_json() for p in self.failing],
        }


def two_involution_bound(a, b, n):
    """Lower bound for the (-1)-eigenspace of a product of two involutions.

    A vector fixed by one factor and negated by the other is negated by the
    product, and those intersections have the dimensions below.
    """
    if a.dimension != n or b.dimension != n:
        raise ValueError(f"eigen data {a}, {b} inconsistent with dimension {n}")
    return max(a.dim_plus + b.dim_minus - n, a.dim_minus + b.dim_plus - n, 0)


def admissible(x_rep, ys_rep, levi_index):
    return x_rep.coords[levi_index - 1] == ys_rep.coords[levi_index - 1]


def verify_case(config, datum=None):
    datum = f4_datum() if datum is None else datum
    i = config.levi_index
    ws = weight_system(datum, i)
    table = involution_fusion(datum, i)
    xs = table.classes_fused_to("x")
    yss = table.classes_fused_to("y_s")
    pairs = []
    for xr in xs:
        for yr in yss:
            if not admissible(xr.levi_class_rep, yr.levi_class_rep, i):
                continue
            ex = eigen_dims(ws, xr.levi_class_rep)
            ey = eigen_dims(ws, yr.levi_class_rep)
            bound = two_involution_bound(ex, ey, ws.dimension)
            pairs.append(PairReport(xr.levi_class_rep, yr.levi_class_rep, ex, ey, bound,
                                    bound - config.max_jordan_blocks))
    vacuous = not pairs
    failing = tuple(p for p in pairs if p.margin <= 0)
    return CaseReport(
        levi_index=i,
        dimension=ws.dimension,
        max_jordan_blocks=config.max_jordan_blocks,
        pairs=tuple(pairs),
        contradiction_holds=not vacuous and not failing,
        vacuous=vacuous,
        minimal_margin=None if vacuous else min(p.margin for p in pairs),
        failing=failing,
    )


def verify_all(configs=DEFAULT_CONFIGS, datum=None):
    datum = f4_datum() if datum is None else datum
    return [verify_case(c, datum) for c in configs]


# ------------------------------------------------------ randomized soundness


def random_unimodular(n, rng, steps=None):
    """Random ``P`` in GL_n(Z) together with its inverse, built from elementary moves."""
    p = identity(n)
    pinv = identity(n)
    for _ in range(steps if steps is not None else 3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if n == 1 or rng.random() < 0.2:
            # swap rows i, j of p; swap columns i, j of the inverse
            p[i], p[j] = p[j], p[i]
            for row in pinv:
                row[i], row[j] = row[j], row[i]
            continue
        k = rng.choice((-2, -1, 1, 2))
        # row_i += k row_j on p; col_j -= k col_i on the inverse
        p[i] = [a + k * b for a, b in zip(p[i], p[j])]
        for row in pinv:
            row[j] -= k * row[i]
    return p, pinv


def random_involution(dim_plus, dim_minus, rng):
    n = dim_plus + dim_minus
    signs = [1] * dim_plus + [-1] * dim_minus
    rng.shuffle(signs)
    p, pinv = random_unimodular(n, rng)
    d = [[signs[i] if i == j else 0 for j in range(n)] for i in range(n)]
    return matmul(matmul(p, d), pinv)


def random_unipotent(n, blocks, rng):
    """Conjugate of ``I + N`` with ``blocks`` Jordan blocks of size 2."""
    u = identity(n)
    for b in range(blocks):
        u[2 * b][2 * b + 1] = rng.choice((-1, 1))
    p, pinv = random_unimodular(n, rng)
    return matmul(matmul(p, u), pinv)


def minus_eigenspace_dim(m):
    n = len(m)
    shifted = [[m[i][j] + (i == j) for j in range(n)] for i in range(n)]
    return n - int_rank(shifted)


def bound_soundness(a, b, max_blocks, trials=500, seed=0):
    """Count violations of the bound and of the unipotent discount on random matrices."""
    rng = random.Random(seed)
    n = a.dimension
    bound = two_involution_bound(a, b, n)
    product_violations = 0
    discount_violations = 0
    min_observed = n
    for _ in range(trials):
        x = random_involution(a.dim_plus, a.dim_minus, rng)
        y = random_involution(b.dim_plus, b.dim_minus, rng)
        xy = matmul(x, y)
        observed = minus_eigenspace_dim(xy)
        min_observed = min(min_observed, observed)
        if observed < bound:
            product_violations += 1
        k = rng.randint(0, max_blocks)
        u = random_unipotent(n, k, rng)
        if minus_eigenspace_dim(matmul(xy, u)) < bound - k:
            discount_violations += 1
    return {
        "shape": [a.to_json(), b.to_json(), n],
        "trials": trials,
        "bound": bound,
        "min_observed": min_observed,
        "product_violations": product_violations,
        "discount_violations": discount_violations,
    }


def report_soundness(report, trials=500, seed=0):
    """Run :func:`bound_soundness` on every distinct eigen shape of a case report."""
    shapes = sorted({(p.x_eigen, p.ys_eigen) for p in report.pairs},
                    key=lambda s: (s[0].to_json(), s[1].to_json()))
    return [bound_soundness(a, b, report.max_jordan_blocks, trials, seed + k)
            for k, (a, b) in enumerate(shapes)]
