"""Exact linear algebra over Z and Q on plain nested lists.

Inputs may be lists, tuples or integer numpy arrays; entries are converted to
Python ``int``/``Fraction`` so nothing overflows.
"""
from fractions import Fraction


def to_int_rows(m):
    return [[int(v) for v in row] for row in m]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(m):
    return [list(col) for col in zip(*m)]


def rank(m):
    """Rank over Q by fraction Gaussian elimination."""
    rows = [[Fraction(v) for v in row] for row in m]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c] / pv
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def nullity(m):
    return len(m[0]) - rank(m)


def inverse(m):
    """Inverse over Q; raises ``ValueError`` on a singular matrix."""
    n = len(m)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        pv = aug[c][c]
        aug[c] = [v / pv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def integer_inverse(m):
    inv = inverse(m)
    if any(v.denominator != 1 for row in inv for v in row):
        raise ValueError("matrix is not unimodular")
    return [[int(v) for v in row] for row in inv]


def charpoly(m):
    """Coefficients ``[c_0, ..., c_n]`` of ``det(q I - m)`` for an integer matrix.

    Faddeev-LeVerrier; every division is exact over Z.
    """
    a = to_int_rows(m)
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        mk = matmul(a, mk)
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        am = matmul(a, mk)
        tr = sum(am[i][i] for i in range(n))
        assert tr % k == 0
        coeffs[n - k] = -tr // k
    return coeffs


def solve_row(basis, x):
    """Coefficients ``c`` (Fractions) with ``c @ basis == x``; ``None`` if none exist."""
    rows = len(basis)
    # solve basis^T c^T = x^T
    aug = [[Fraction(basis[i][j]) for i in range(rows)] + [Fraction(x[j])]
           for j in range(len(x))]
    piv_cols = []
    r = 0
    for c in range(rows):
        pivot = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] != 0 for row in aug[r:]):
        return None
    sol = [Fraction(0)] * rows
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][-1]
    return sol


def int_rank(m):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    rows = [list(map(int, row)) for row in m]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            rows[i] = [(pv * a - f * b) // prev for a, b in zip(rows[i], rows[r])]
        prev = pv
        r += 1
        if r == len(rows):
            break
    return r
