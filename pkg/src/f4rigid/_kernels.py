"""Integer kernels behind the orbit, class and triple computations.

Each kernel exists twice, as a numba ``@njit`` loop and as a vectorised numpy
expression, with identical signatures and outputs.  The numba path is used
when numba imports and ``F4RIGID_DISABLE_NUMBA`` is unset (or ``0``).

All arrays are ``int64``.  Keys are mixed-radix encodings, most significant
digit first, so that key order is lexicographic order of the digit vectors.
"""
import os

import numpy as np

DISABLE_ENV = "F4RIGID_DISABLE_NUMBA"

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def _env_disabled():
    return os.environ.get(DISABLE_ENV, "").strip().lower() not in ("", "0", "false", "no")


USE_NUMBA = HAVE_NUMBA and not _env_disabled()


def radix_weights(radix, length):
    """Place values ``radix**(length-1), ..., radix, 1`` as int64."""
    if radix ** length >= 2 ** 63:
        raise OverflowError(f"radix {radix} with {length} digits overflows int64 keys")
    return np.array([radix ** (length - 1 - i) for i in range(length)], dtype=np.int64)


# ---------------------------------------------------------------- numpy path


def torus_action_np(gens, n):
    k, r, _ = gens.shape
    weights = radix_weights(n, r)
    codes = np.arange(n ** r, dtype=np.int64)
    pts = (codes[:, None] // weights[None, :]) % n
    out = np.empty((k, n ** r), dtype=np.int64)
    for g in range(k):
        out[g] = ((pts @ gens[g]) % n) @ weights
    return out


def orbit_labels_np(perms):
    labels = np.arange(perms.shape[1], dtype=np.int64)
    while True:
        new = labels.copy()
        for p in perms:
            np.minimum(new, new[p], out=new)
        if np.array_equal(new, labels):
            return labels
        labels = new


def _lookup_np(keys, sorted_keys, order):
    pos = np.searchsorted(sorted_keys, keys)
    pos = np.minimum(pos, len(sorted_keys) - 1)
    found = sorted_keys[pos] == keys
    return np.where(found, order[pos], -1)


def conjugation_table_np(perms, gen_perms, key_cols, sorted_keys, order, radix):
    weights = radix_weights(radix, len(key_cols))
    out = np.empty((gen_perms.shape[0], perms.shape[0]), dtype=np.int64)
    for g, s in enumerate(gen_perms):
        conj = s[perms[:, s[key_cols]]]
        out[g] = _lookup_np(conj @ weights, sorted_keys, order)
    return out


def product_indices_np(elements, idx1, idx2, sorted_keys, order, chunk=256):
    n = elements.shape[1]
    weights = radix_weights(n, n)
    e1 = elements[idx1]
    e2 = elements[idx2]
    out = np.empty((len(idx1), len(idx2)), dtype=np.int64)
    rows = np.arange(len(idx2))[None, :, None]
    for start in range(0, len(idx1), chunk):
        block = e1[start:start + chunk]
        # (x y)[i] = y[x[i]]: apply x first
        prod = e2[rows, block[:, None, :]]
        out[start:start + chunk] = _lookup_np(prod @ weights, sorted_keys, order)
    return out


def inversion_counts_np(perms, positive, negative_mask):
    return negative_mask[perms[:, positive]].sum(axis=1).astype(np.int64)


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def _torus_action_nb(gens, n, weights):
        k, r, _ = gens.shape
        total = n ** r
        out = np.empty((k, total), dtype=np.int64)
        pt = np.empty(r, dtype=np.int64)
        for code in range(total):
            for j in range(r):
                pt[j] = (code // weights[j]) % n
            for g in range(k):
                key = 0
                for j in range(r):
                    acc = 0
                    for i in range(r):
                        acc += pt[i] * gens[g, i, j]
                    key += (acc % n) * weights[j]
                out[g, code] = key
        return out

    @njit(cache=True)
    def _orbit_labels_nb(perms):
        k, size = perms.shape
        labels = np.full(size, -1, dtype=np.int64)
        queue = np.empty(size, dtype=np.int64)
        for start in range(size):
            if labels[start] >= 0:
                continue
            labels[start] = start
            head = 0
            tail = 1
            queue[0] = start
            while head < tail:
                x = queue[head]
                head += 1
                for g in range(k):
                    y = perms[g, x]
                    if labels[y] < 0:
                        labels[y] = start
                        queue[tail] = y
                        tail += 1
        return labels

    @njit(cache=True)
    def _bsearch(sorted_keys, order, key):
        lo = 0
        hi = sorted_keys.shape[0]
        while lo < hi:
            mid = (lo + hi) // 2
            if sorted_keys[mid] < key:
                lo = mid + 1
            else:
                hi = mid
        if lo < sorted_keys.shape[0] and sorted_keys[lo] == key:
            return order[lo]
        return -1

    @njit(cache=True)
    def _conjugation_table_nb(perms, gen_perms, key_cols, sorted_keys, order, weights):
        size = perms.shape[0]
        k = gen_perms.shape[0]
        m = key_cols.shape[0]
        out = np.empty((k, size), dtype=np.int64)
        for g in range(k):
            for e in range(size):
                key = 0
                for c in range(m):
                    j = key_cols[c]
                    key += gen_perms[g, perms[e, gen_perms[g, j]]] * weights[c]
                out[g, e] = _bsearch(sorted_keys, order, key)
        return out

    @njit(cache=True)
    def _product_indices_nb(elements, idx1, idx2, sorted_keys, order, weights):
        n = elements.shape[1]
        out = np.empty((idx1.shape[0], idx2.shape[0]), dtype=np.int64)
        for a in range(idx1.shape[0]):
            x = idx1[a]
            for b in range(idx2.shape[0]):
                y = idx2[b]
                key = 0
                for i in range(n):
                    key += elements[y, elements[x, i]] * weights[i]
                out[a, b] = _bsearch(sorted_keys, order, key)
        return out

    @njit(cache=True)
    def _inversion_counts_nb(perms, positive, negative_mask):
        out = np.zeros(perms.shape[0], dtype=np.int64)
        for e in range(perms.shape[0]):
            c = 0
            for j in range(positive.shape[0]):
                if negative_mask[perms[e, positive[j]]]:
                    c += 1
            out[e] = c
        return out

    def torus_action_nb(gens, n):
        return _torus_action_nb(gens, n, radix_weights(n, gens.shape[1]))

    def orbit_labels_nb(perms):
        return _orbit_labels_nb(perms)

    def conjugation_table_nb(perms, gen_perms, key_cols, sorted_keys, order, radix):
        weights = radix_weights(radix, len(key_cols))
        return _conjugation_table_nb(perms, gen_perms, key_cols, sorted_keys, order, weights)

    def product_indices_nb(elements, idx1, idx2, sorted_keys, order):
        n = elements.shape[1]
        return _product_indices_nb(elements, idx1, idx2, sorted_keys, order, radix_weights(n, n))

    def inversion_counts_nb(perms, positive, negative_mask):
        return _inversion_counts_nb(perms, positive, negative_mask)


NUMPY_KERNELS = {
    "torus_action": torus_action_np,
    "orbit_labels": orbit_labels_np,
    "conjugation_table": conjugation_table_np,
    "product_indices": product_indices_np,
    "inversion_counts": inversion_counts_np,
}

NUMBA_KERNELS = (
    {
        "torus_action": torus_action_nb,
        "orbit_labels": orbit_labels_nb,
        "conjugation_table": conjugation_table_nb,
        "product_indices": product_indices_nb,
        "inversion_counts": inversion_counts_nb,
    }
    if HAVE_NUMBA
    else {}
)


def backend():
    """Name of the active kernel path: ``"numba"`` or ``"numpy"``."""
    return "numba" if USE_NUMBA else "numpy"


def get(name):
    return (NUMBA_KERNELS if USE_NUMBA else NUMPY_KERNELS)[name]


def torus_action(gens, n):
    """Permutation of level-``n`` torus codes induced by each Y-matrix in ``gens``."""
    return get("torus_action")(np.ascontiguousarray(gens, dtype=np.int64), int(n))


def orbit_labels(perms):
    """Label every point by the least point of its orbit under ``perms``."""
    return get("orbit_labels")(np.ascontiguousarray(perms, dtype=np.int64))


def conjugation_table(perms, gen_perms, key_cols, sorted_keys, order, radix):
    """Index of ``s w s`` for every involution ``s`` in ``gen_perms`` and element ``w``."""
    return get("conjugation_table")(
        np.ascontiguousarray(perms, dtype=np.int64),
        np.ascontiguousarray(gen_perms, dtype=np.int64),
        np.ascontiguousarray(key_cols, dtype=np.int64),
        np.ascontiguousarray(sorted_keys, dtype=np.int64),
        np.ascontiguousarray(order, dtype=np.int64),
        int(radix),
    )


def product_indices(elements, idx1, idx2, sorted_keys, order):
    """Element index of ``x*y`` (``x`` applied first) for ``x`` in idx1, ``y`` in idx2."""
    return get("product_indices")(
        np.ascontiguousarray(elements, dtype=np.int64),
        np.ascontiguousarray(idx1, dtype=np.int64),
        np.ascontiguousarray(idx2, dtype=np.int64),
        np.ascontiguousarray(sorted_keys, dtype=np.int64),
        np.ascontiguousarray(order, dtype=np.int64),
    )


def inversion_counts(perms, positive, negative_mask):
    """Per element, how many indices in ``positive`` land on a ``negative_mask`` index."""
    return get("inversion_counts")(
        np.ascontiguousarray(perms, dtype=np.int64),
        np.ascontiguousarray(positive, dtype=np.int64),
        np.ascontiguousarray(negative_mask, dtype=np.bool_),
    )
