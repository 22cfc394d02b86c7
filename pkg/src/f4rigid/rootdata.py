"""Root data in fundamental-weight coordinates.

Conventions used throughout the package:

* X (characters) has the fundamental weights as basis, Y (cocharacters) the
  simple coroots; the pairing is the plain dot product.
* ``cartan[i][j] = <alpha_j, alpha_i^vee>``, so simple root ``i`` is row ``i``
  of the transposed Cartan matrix and simple coroot ``i`` is ``e_i``.
* Nodes are numbered from 1 in the order of the Cartan matrix rows.
"""
import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction

# Transposed, the rows of this matrix are the F4 simple roots in fundamental-
# weight coordinates: (2,-1,0,0), (-1,2,-2,0), (0,-1,2,-1), (0,0,-1,2).
# Nodes 1 and 2 are long.
F4_CARTAN = (
    (2, -1, 0, 0),
    (-1, 2, -1, 0),
    (0, -2, 2, -1),
    (0, 0, -1, 2),
)

ROOT_CAP = 10 ** 5


@dataclass(frozen=True)
class RootPair:
    root: tuple
    coroot: tuple
    # coordinates of ``root`` in the simple roots of the datum it belongs to
    coeffs: tuple = ()

    @property
    def is_positive(self):
        return all(c >= 0 for c in self.coeffs)


@dataclass(frozen=True)
class RootDatum:
    rank: int
    cartan: tuple
    simple_roots: tuple
    simple_coroots: tuple
    roots: tuple = ()
    label: str = ""
    # 1-based node numbers inside the datum this one was cut from
    nodes: tuple = ()
    ambient_rank: int = 0

    @property
    def simple_pairs(self):
        return tuple(
            RootPair(a, c, tuple(int(i == j) for j in range(self.rank)))
            for i, (a, c) in enumerate(zip(self.simple_roots, self.simple_coroots))
        )

    @property
    def positive_roots(self):
        return tuple(p for p in self.roots if p.is_positive)

    @property
    def is_generated(self):
        return bool(self.roots) or self.rank == 0


@dataclass(frozen=True, order=True)
class SubsystemType:
    """Multiset of irreducible Dynkin components, e.g. ``(("A", 1), ("C", 3))``."""

    components: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(sorted(self.components, key=_component_key)))

    @property
    def rank(self):
        return sum(n for _, n in self.components)

    def __str__(self):
        if not self.components:
            return "T"
        return "+".join(f"{letter}{n}" for letter, n in self.components)

    @classmethod
    def parse(cls, text):
        if text in ("T", ""):
            return cls(())
        comps = []
        for part in text.split("+"):
            part = part.strip()
            comps.append((part[0].upper(), int(part[1:])))
        return cls(tuple(comps))


def _component_key(comp):
    letter, n = comp
    return (letter, -n)


def pairing(x, y):
    """Pairing between an X-vector and a Y-vector."""
    if len(x) != len(y):
        raise ValueError(f"pairing of vectors of lengths {len(x)} and {len(y)}")
    return sum(int(a) * int(b) for a, b in zip(x, y))


def _check_cartan(cartan):
    n = len(cartan)
    for i, row in enumerate(cartan):
        if len(row) != n:
            raise ValueError(f"Cartan matrix row {i + 1} has length {len(row)}, expected {n}")
    for i in range(n):
        for j in range(n):
            v = cartan[i][j]
            if v != int(v):
                raise ValueError(f"Cartan entry ({i + 1},{j + 1}) = {v} is not an integer")
            if i == j and v != 2:
                raise ValueError(f"Cartan diagonal entry ({i + 1},{i + 1}) = {v}, expected 2")
            if i != j and v > 0:
                raise ValueError(f"Cartan entry ({i + 1},{j + 1}) = {v} is positive")
            if i != j and (v == 0) != (cartan[j][i] == 0):
                raise ValueError(
                    f"Cartan entries ({i + 1},{j + 1}) = {v} and ({j + 1},{i + 1}) = "
                    f"{cartan[j][i]} are not simultaneously zero"
                )


def build_root_datum(cartan, label=""):
    """Simply connected datum for ``cartan``; roots are not generated yet."""
    cartan = tuple(tuple(int(v) for v in row) for row in cartan)
    _check_cartan(cartan)
    n = len(cartan)
    simple_roots = tuple(tuple(cartan[j][i] for j in range(n)) for i in range(n))
    simple_coroots = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    return RootDatum(
        rank=n,
        cartan=cartan,
        simple_roots=simple_roots,
        simple_coroots=simple_coroots,
        label=label,
        nodes=tuple(range(1, n + 1)),
        ambient_rank=n,
    )


def reflect_pair(pair, simple_root, simple_coroot, index):
    """Apply the simple reflection ``index`` to a root pair (root and coroot together)."""
    k = pairing(pair.root, simple_coroot)
    l = pairing(simple_root, pair.coroot)
    root = tuple(a - k * b for a, b in zip(pair.root, simple_root))
    coroot = tuple(a - l * b for a, b in zip(pair.coroot, simple_coroot))
    coeffs = tuple(c - k * (j == index) for j, c in enumerate(pair.coeffs))
    return RootPair(root, coroot, coeffs)


def generate_roots(datum, order=None):
    """Close the simple root pairs under the simple reflections.

    ``order`` permutes the order in which simple reflections are tried; the
    result does not depend on it.
    """
    order = list(range(datum.rank)) if order is None else list(order)
    seen = {}
    frontier = list(datum.simple_pairs)
    for p in frontier:
        seen[p.root] = p
    while frontier:
        nxt = []
        for p in frontier:
            for i in order:
                q = reflect_pair(p, datum.simple_roots[i], datum.simple_coroots[i], i)
                if q.root not in seen:
                    seen[q.root] = q
                    nxt.append(q)
                    if len(seen) > ROOT_CAP:
                        raise RuntimeError(f"root closure exceeded {ROOT_CAP} roots")
        frontier = nxt
    roots = tuple(sorted(seen.values(), key=lambda p: p.root))
    return replace(datum, roots=roots)


def levi_datum(datum, removed):
    """Sub-datum obtained by deleting node ``removed`` (1-based); vectors keep full length."""
    if not 1 <= removed <= datum.rank:
        raise IndexError(f"node {removed} out of range 1..{datum.rank}")
    keep = [i for i in range(datum.rank) if i != removed - 1]
    sub = RootDatum(
        rank=len(keep),
        cartan=tuple(tuple(datum.cartan[i][j] for j in keep) for i in keep),
        simple_roots=tuple(datum.simple_roots[i] for i in keep),
        simple_coroots=tuple(datum.simple_coroots[i] for i in keep),
        label=f"L{removed}",
        nodes=tuple(datum.nodes[i] for i in keep),
        ambient_rank=datum.ambient_rank,
    )
    return generate_roots(sub) if datum.is_generated else sub


def f4_datum():
    return generate_roots(build_root_datum(F4_CARTAN, "F4"))


# ------------------------------------------------------------ classification


def _euclidean_simple_roots(letter, n):
    half = Fraction(1, 2)
    if letter == "A":
        return [[int(k == i) - int(k == i + 1) for k in range(n + 1)] for i in range(n)]
    e = lambda i, c=1: [c * int(k == i) for k in range(n)]  # noqa: E731
    chain = [[a - b for a, b in zip(e(i), e(i + 1))] for i in range(n - 1)]
    if letter == "B":
        return chain + [e(n - 1)]
    if letter == "C":
        return chain + [e(n - 1, 2)]
    if letter == "D":
        return chain + [[a + b for a, b in zip(e(n - 2), e(n - 1))]]
    if letter == "G":
        return [[1, -1, 0], [-2, 1, 1]]
    if letter == "F":
        return [[0, 1, -1, 0], [0, 0, 1, -1], [0, 0, 0, 1], [half, -half, -half, -half]]
    raise ValueError(letter)


def catalogue_cartan(letter, n):
    """Cartan matrix ``C_ij = 2(b_j, b_i)/(b_i, b_i)`` of an irreducible type."""
    simple = _euclidean_simple_roots(letter, n)
    dot = lambda u, v: sum(Fraction(a) * b for a, b in zip(u, v))  # noqa: E731
    return tuple(
        tuple(int(2 * dot(simple[j], simple[i]) / dot(simple[i], simple[i])) for j in range(n))
        for i in range(n)
    )


def _catalogue(max_rank):
    cat = [("A", n) for n in range(1, max_rank + 1)]
    cat += [("B", n) for n in range(2, max_rank + 1)]
    cat += [("C", n) for n in range(3, max_rank + 1)]
    cat += [("D", n) for n in range(4, max_rank + 1)]
    if max_rank >= 2:
        cat.append(("G", 2))
    if max_rank >= 4:
        cat.append(("F", 4))
    return [(t, catalogue_cartan(*t)) for t in cat]


def _match_component(block):
    k = len(block)
    for typ, ref in _catalogue(k):
        if typ[1] != k:
            continue
        if sorted(map(sorted, block)) != sorted(map(sorted, ref)):
            continue
        for perm in itertools.permutations(range(k)):
            if all(block[perm[i]][perm[j]] == ref[i][j] for i in range(k) for j in range(k)):
                return typ
    raise ValueError(f"no Dynkin type matches Cartan block {block}")


def cartan_components(cartan):
    """Connected components of the Dynkin diagram, as sorted lists of node indices."""
    n = len(cartan)
    unseen = set(range(n))
    comps = []
    while unseen:
        stack = [min(unseen)]
        comp = set()
        while stack:
            i = stack.pop()
            if i in comp:
                continue
            comp.add(i)
            stack.extend(j for j in range(n) if j not in comp and cartan[i][j] != 0)
        unseen -= comp
        comps.append(sorted(comp))
    return comps


def cartan_type(cartan):
    comps = []
    for comp in cartan_components(cartan):
        block = tuple(tuple(cartan[i][j] for j in comp) for i in comp)
        comps.append(_match_component(block))
    return SubsystemType(tuple(comps))


def lex_simple_system(subset):
    """Simple system of a root subsystem under lexicographic positivity."""
    zero = tuple(0 for _ in subset[0].root) if subset else ()
    positives = [p for p in subset if p.root > zero]
    pos_roots = {p.root for p in positives}
    simple = []
    for p in positives:
        decomposable = any(
            tuple(a - b for a, b in zip(p.root, q.root)) in pos_roots for q in positives if q is not p
        )
        if not decomposable:
            simple.append(p)
    return sorted(simple, key=lambda p: p.root)


def classify_subsystem(datum, subset):
    """Dynkin type of a negation-closed set of root pairs of ``datum``."""
    subset = list(subset)
    roots = {p.root for p in subset}
    for p in subset:
        if tuple(-v for v in p.root) not in roots:
            raise ValueError(f"subset is not closed under negation: missing -{p.root}")
    if not subset:
        return SubsystemType(())
    simple = lex_simple_system(subset)
    cartan = tuple(
        tuple(pairing(b.root, a.coroot) for b in simple) for a in simple
    )
    return cartan_type(cartan)


def datum_to_json(datum):
    return {
        "label": datum.label,
        "rank": datum.rank,
        "ambient_rank": datum.ambient_rank,
        "nodes": list(datum.nodes),
        "cartan": [list(r) for r in datum.cartan],
        "roots": [{"root": list(p.root), "coroot": list(p.coroot)} for p in datum.roots],
    }


def datum_for_type(text):
    """Generated datum for a type string such as ``"F4"`` or ``"A2+A1"``.

    ``"F4"`` uses :data:`F4_CARTAN`; other components use the catalogue Cartan
    matrices, placed block-diagonally.
    """
    typ = SubsystemType.parse(text)
    blocks = [F4_CARTAN if c == ("F", 4) else catalogue_cartan(*c) for c in typ.components]
    n = sum(len(b) for b in blocks)
    cartan = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                cartan[off + i][off + j] = v
        off += len(b)
    return generate_roots(build_root_datum(cartan, text))
