"""Weight systems of the four Levi representations and fusion of Levi involutions.

Each maximal Levi ``L_i`` of F4 carries one fixed representation: the Weyl
orbit of a configured highest weight, with an extra zero weight for ``L_4``.
"""
from dataclasses import dataclass
from fractions import Fraction

from .rootdata import levi_datum
from .torus import TorusPoint, evaluate, levi_derived_membership, orbit_labels, semisimple_classes
from .weyl import simple_reflections, weyl_orbit

HIGHEST_WEIGHTS = {
    1: (0, 0, 0, 1),
    2: (1, 0, 0, 0),
    3: (1, 0, 0, 0),
    4: (1, 0, 0, 0),
}
ZERO_WEIGHT_MULTIPLICITY = {1: 0, 2: 0, 3: 0, 4: 1}
TARGET_DIMENSIONS = {1: 6, 2: 2, 3: 3, 4: 7}

# G-classes of involutions by centralizer type
INVOLUTION_LABELS = {"A1+C3": "x", "B4": "y_s"}

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class WeightSystem:
    levi_index: int
    highest_weight: tuple
    weights: tuple  # ((weight, multiplicity), ...)

    @property
    def dimension(self):
        return sum(m for _, m in self.weights)

    def to_json(self):
        return {
            "levi_index": self.levi_index,
            "highest_weight": list(self.highest_weight),
            "dimension": self.dimension,
            "weights": [{"weight": list(w), "multiplicity": m} for w, m in self.weights],
        }


@dataclass(frozen=True)
class InvolutionEigenData:
    dim_plus: int
    dim_minus: int

    @property
    def dimension(self):
        return self.dim_plus + self.dim_minus

    def to_json(self):
        return [self.dim_plus, self.dim_minus]


@dataclass(frozen=True)
class FusionRow:
    levi_class_rep: TorusPoint
    orbit_size: int
    g_class: str
    in_derived: bool

    def to_json(self):
        return {
            "rep": self.levi_class_rep.to_json(),
            "orbit_size": self.orbit_size,
            "g_class": self.g_class,
            "in_derived": self.in_derived,
        }


@dataclass(frozen=True)
class FusionTable:
    levi_index: int
    rows: tuple

    def classes_fused_to(self, label):
        return [r for r in self.rows if r.g_class == label]

    def to_json(self):
        return {"levi_index": self.levi_index, "rows": [r.to_json() for r in self.rows]}


def _check_index(i):
    if i not in HIGHEST_WEIGHTS:
        raise ValueError(f"Levi index must be 1..4, got {i}")


def weight_system(datum, levi_index):
    _check_index(levi_index)
    levi = levi_datum(datum, levi_index)
    hw = HIGHEST_WEIGHTS[levi_index]
    orbit = weyl_orbit(simple_reflections(levi), hw, "on_x")
    weights = [(w, 1) for w in orbit]
    zero_mult = ZERO_WEIGHT_MULTIPLICITY[levi_index]
    if zero_mult:
        weights.append(((0,) * len(hw), zero_mult))
        weights.sort()
    return WeightSystem(levi_index, hw, tuple(weights))


def eigen_dims(ws, t):
    """Dimensions of the (+1)- and (-1)-eigenspaces of the involution ``t``."""
    plus = minus = 0
    for w, m in ws.weights:
        v = evaluate(t, w)
        if v == 0:
            plus += m
        elif v == HALF:
            minus += m
        else:
            raise ValueError(f"{t} is not an involution: weight {w} evaluates to {v}")
    return InvolutionEigenData(plus, minus)


def g_involution_labels(datum):
    """Map each 2-torsion code to ``"x"``, ``"y_s"``, ``"1"`` or ``"other"``."""
    labels = orbit_labels(datum, 2)
    names = {}
    for cls in semisimple_classes(datum, 2):
        code = cls.representative.code(2)
        if cls.representative.order == 1:
            names[code] = "1"
        else:
            names[code] = INVOLUTION_LABELS.get(str(cls.centralizer_type), "other")
    return {code: names[int(lab)] for code, lab in enumerate(labels)}


def involution_fusion(datum, levi_index):
    """Levi classes of involutions with their G-class and derived-subgroup membership."""
    _check_index(levi_index)
    levi = levi_datum(datum, levi_index)
    g_labels = g_involution_labels(datum)
    rows = []
    for cls in semisimple_classes(levi, 2):
        t = cls.representative
        if t.order == 1:
            continue
        _, in_derived = levi_derived_membership(t, levi_index)
        rows.append(FusionRow(t, cls.orbit_size, g_labels[t.code(2)], in_derived))
    return FusionTable(levi_index, tuple(rows))


def levi_involution_eigen(datum, levi_index):
    """Eigenspace dimensions for each row of the fusion table."""
    ws = weight_system(datum, levi_index)
    table = involution_fusion(datum, levi_index)
    return [(row, eigen_dims(ws, row.levi_class_rep)) for row in table.rows]
