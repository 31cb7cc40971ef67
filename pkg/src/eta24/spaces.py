"""The four bases of weight-2 level-24 modular forms and exact solving.

M_2(Gamma0(24), chi_t) for t in {1, 8, 12, 24} has dimension 8, 6, 8, 6;
the cuspidal part has dimension 1, 2, 0, 2.  Each space carries an explicit
basis of Eisenstein generators (L_d series for the trivial character,
dilated E_{t1,t2} otherwise) plus the eta-quotient cusp generators.

Membership of a q-expansion is decided by equating coefficients up to the
Sturm bound (8 here), solving the resulting exact linear system over Q, and
then verifying the solution on a longer stretch of coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import Ld_series, eisenstein_series
from .errors import AmbiguousSolution, NotInSpace
from .eta import CUSP_GENERATORS, group_index
from .qseries import QSeries

SPACE_CHARACTERS = (1, 8, 12, 24)

CUSP_DIMENSIONS = {1: 1, 8: 2, 12: 0, 24: 2}
EISENSTEIN_DIMENSIONS = {1: 7, 8: 4, 12: 8, 24: 4}


@dataclass(frozen=True)
class SpaceId:
    character: int
    subspace: str = "M"
    level: int = 24
    weight: int = 2

    def __post_init__(self):
        if self.character not in SPACE_CHARACTERS:
            raise ValueError(f"character must be one of {SPACE_CHARACTERS}")
        if self.subspace not in ("M", "E", "S"):
            raise ValueError("subspace must be 'M', 'E' or 'S'")
        if (self.level, self.weight) != (24, 2):
            raise ValueError("only level 24, weight 2 is supported")

    @property
    def dimension(self):
        if self.subspace == "S":
            return CUSP_DIMENSIONS[self.character]
        if self.subspace == "E":
            return EISENSTEIN_DIMENSIONS[self.character]
        return CUSP_DIMENSIONS[self.character] + EISENSTEIN_DIMENSIONS[self.character]

    @property
    def name(self):
        return f"chi{self.character}"


def sturm_bound(space=None):
    """Coefficient-comparison bound floor(k * [SL2(Z):Gamma0(N)] / 12) = 8."""
    return (2 * group_index(24)) // 12


# Basis generators per character, in the order used for presenting and
# solving.  ("eis", t1, t2, m) is E_{t1,t2}(m z); ("ld", d) is L_d(q);
# ("cusp", name) is one of the five eta-quotient generators.
_BASIS_SPEC = {
    1: tuple(("ld", d) for d in (2, 3, 4, 6, 8, 12, 24)) + (("cusp", "A"),),
    8: (
        ("eis", 1, 8, 1),
        ("eis", 1, 8, 3),
        ("eis", 8, 1, 1),
        ("eis", 8, 1, 3),
        ("cusp", "B1"),
        ("cusp", "B2"),
    ),
    12: (
        ("eis", 12, 1, 1),
        ("eis", 12, 1, 2),
        ("eis", 1, 12, 1),
        ("eis", 1, 12, 2),
        ("eis", -4, -3, 1),
        ("eis", -4, -3, 2),
        ("eis", -3, -4, 1),
        ("eis", -3, -4, 2),
    ),
    24: (
        ("eis", 1, 24, 1),
        ("eis", 24, 1, 1),
        ("eis", -3, -8, 1),
        ("eis", -8, -3, 1),
        ("cusp", "C1"),
        ("cusp", "C2"),
    ),
}


def _element_label(spec):
    if spec[0] == "ld":
        return f"L_{spec[1]}(q)"
    if spec[0] == "cusp":
        name = spec[1]
        return f"{name[0]}_{name[1]}(q)" if len(name) > 1 else f"{name}(q)"
    _, t1, t2, m = spec
    arg = "z" if m == 1 else f"{m}z"
    return f"E_{{{t1},{t2}}}({arg})"


@dataclass(frozen=True)
class BasisElement:
    label: str
    kind: str  # "eisenstein" or "cusp"
    series: QSeries


@dataclass(frozen=True)
class Basis:
    space: SpaceId
    elements: tuple

    @property
    def labels(self):
        return tuple(e.label for e in self.elements)

    def __len__(self):
        return len(self.elements)


@lru_cache(maxsize=None)
def basis_for(character, prec):
    """Expanded basis of M_2(Gamma0(24), chi_character) to precision prec."""
    elements = []
    for spec in _BASIS_SPEC[character]:
        if spec[0] == "ld":
            series, kind = Ld_series(spec[1], prec), "eisenstein"
        elif spec[0] == "eis":
            series, kind = eisenstein_series(spec[1], spec[2], prec, spec[3]), "eisenstein"
        else:
            series, kind = CUSP_GENERATORS[spec[1]].series(prec), "cusp"
        elements.append(BasisElement(_element_label(spec), kind, series))
    return Basis(space=SpaceId(character), elements=tuple(elements))


def solve_exact(matrix, rhs):
    """Solve an overdetermined exact rational system by Gaussian elimination.

    Returns the unique solution; raises NotInSpace if inconsistent and
    AmbiguousSolution if the matrix has deficient column rank.
    """
    rows = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    n_rows, n_cols = len(rows), len(matrix[0])
    pivot_cols = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [v - factor * w for v, w in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == n_rows:
            break
    for i in range(r, n_rows):
        if rows[i][n_cols] != 0:
            raise NotInSpace("linear system on the initial coefficients is inconsistent")
    if len(pivot_cols) < n_cols:
        raise AmbiguousSolution("basis matrix does not have full column rank")
    solution = [Fraction(0)] * n_cols
    for i, c in enumerate(pivot_cols):
        solution[c] = rows[i][n_cols]
    return solution


def coefficient_matrix_rank(character, through=None):
    """Rank of the basis coefficient matrix on q^0 .. q^through (default: Sturm bound)."""
    bound = sturm_bound() if through is None else through
    basis = basis_for(character, bound + 1)
    columns = [[e.series.coefficient(n) for n in range(bound + 1)] for e in basis.elements]
    rows = [list(map(Fraction, col)) for col in columns]
    rank = 0
    for c in range(bound + 1):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                factor = rows[i][c] / rows[rank][c]
                rows[i] = [v - factor * w for v, w in zip(rows[i], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class SolveResult:
    space: SpaceId
    coefficients: dict
    verified_to: int

    def coefficient(self, label):
        return self.coefficients[label]

    def to_json_dict(self):
        return {
            "space": self.space.name,
            "coefficients": {k: str(v) for k, v in self.coefficients.items()},
            "verified_to": self.verified_to,
        }


def solve_in_basis(target, character, verify_to=60):
    """Express target in the chi_character basis, verifying well past the bound.

    The system is solved on coefficients 0..8; the solution is then checked
    against every further coefficient up to verify_to, so a successful
    return certifies the expansion agrees with a member of the space on
    that whole range.
    """
    bound = sturm_bound()
    if verify_to < bound:
        raise ValueError(f"verify_to must be at least the Sturm bound {bound}")
    if target.prec <= verify_to:
        raise ValueError(f"target precision {target.prec} must exceed verify_to {verify_to}")
    basis = basis_for(character, target.prec)
    matrix = [
        [e.series.coefficient(n) for e in basis.elements] for n in range(bound + 1)
    ]
    rhs = [target.coefficient(n) for n in range(bound + 1)]
    solution = solve_exact(matrix, rhs)
    for n in range(verify_to + 1):
        value = sum(
            x * e.series.coefficient(n)
            for x, e in zip(solution, basis.elements)
            if x != 0
        )
        if value != target.coefficient(n):
            raise NotInSpace(
                f"solution fails verification at q^{n}: expected "
                f"{target.coefficient(n)}, reconstructed {value}"
            )
    coefficients = dict(zip(basis.labels, solution))
    return SolveResult(
        space=SpaceId(character), coefficients=coefficients, verified_to=verify_to
    )


def eisenstein_cusp_split(target, character, verify_to=60):
    """Partition a solve result into Eisenstein and cuspidal coordinates.

    The target lies in the Eisenstein subspace exactly when every cuspidal
    coordinate vanishes.
    """
    result = solve_in_basis(target, character, verify_to)
    basis = basis_for(character, target.prec)
    eisenstein_part, cusp_part = {}, {}
    for element in basis.elements:
        value = result.coefficients[element.label]
        if element.kind == "cusp":
            cusp_part[element.label] = value
        else:
            eisenstein_part[element.label] = value
    return eisenstein_part, cusp_part
