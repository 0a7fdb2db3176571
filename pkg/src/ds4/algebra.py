"""The Lie algebra sp(2,2): generators, coordinate chart, brackets, the 5x5
so(1,4) realization and the exponential map back to the group.

Ten generators in the quaternionic representation: X_k (space translations),
X0 (time translation), Y_k (rotations) and Z_k (boosts).  A general element
is parameterized by (a, j, d0, d) in R^10 through

    2 a^k X_k + 2 j^k Y_k + 2 d0 X0 + 2 d^k Z_k
        = ((a+j).e,  d0 + d.e;  d0 - d.e,  (-a+j).e)

where x.e is the pure-vector quaternion with components x.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .gamma import ETA, QMat2, slash, unslash
from .group import GroupElement, certified
from .quaternion import E1, E2, E3, ONE, ZERO, Quaternion

GENERATOR_LABELS = ("X1", "X2", "X3", "X0", "Y1", "Y2", "Y3", "Z1", "Z2", "Z3")

_EK = (E1, E2, E3)


def _pure(vec) -> Quaternion:
    return Quaternion(0.0, float(vec[0]), float(vec[1]), float(vec[2]))


class AlgebraElement(NamedTuple):
    m: QMat2

    @classmethod
    def from_qmat(cls, m: QMat2, tol: float = 1e-12) -> "AlgebraElement":
        """Validate the block shape (relative to the matrix scale)."""
        res = shape_residual(m)
        if res > tol * max(1.0, m.max_norm()):
            raise ValueError(f"matrix is not in the algebra shape (defect {res:.3e})")
        return cls(m)

    def to_json(self) -> dict:
        a, j, d0, d = to_coords(self)
        return {"a": list(a), "j": list(j), "d0": d0, "d": list(d)}

    @classmethod
    def from_json(cls, obj: dict) -> "AlgebraElement":
        return from_coords(obj["a"], obj["j"], obj["d0"], obj["d"])


def shape_residual(m: QMat2) -> float:
    """Distance from the algebra block pattern.

    Diagonal blocks must be pure vectors and the lower-left block must be
    the quaternionic conjugate of the upper-right one.
    """
    return max(abs(m.a.s), abs(m.d.s), (m.c - m.b.conj()).max_abs())


def from_coords(a, j, d0, d) -> AlgebraElement:
    a = np.asarray(a, dtype=float)
    j = np.asarray(j, dtype=float)
    d = np.asarray(d, dtype=float)
    top = Quaternion(float(d0), d[0], d[1], d[2])
    return AlgebraElement(QMat2(_pure(a + j), top, top.conj(), _pure(j - a)))


def to_coords(X: AlgebraElement) -> tuple[np.ndarray, np.ndarray, float, np.ndarray]:
    """Inverse of from_coords; exact on shape-valid elements."""
    m = X.m if isinstance(X, AlgebraElement) else X
    a = 0.5 * (m.a.v - m.d.v)
    j = 0.5 * (m.a.v + m.d.v)
    return a, j, m.b.s, m.b.v


_GENERATORS = {}
for _k in range(3):
    _e = _EK[_k].scale(0.5)
    _GENERATORS[f"X{_k + 1}"] = AlgebraElement(QMat2(_e, ZERO, ZERO, -_e))
    _GENERATORS[f"Y{_k + 1}"] = AlgebraElement(QMat2(_e, ZERO, ZERO, _e))
    _GENERATORS[f"Z{_k + 1}"] = AlgebraElement(QMat2(ZERO, _e, -_e, ZERO))
_GENERATORS["X0"] = AlgebraElement(QMat2(ZERO, ONE.scale(0.5), ONE.scale(0.5), ZERO))

#: Plane (alpha, beta) for which K_{alpha beta} equals each labeled generator:
#: K_{4k} = X_k, K_{04} = X0, K_{ki} = eps_{ki}^j Y_j, K_{0k} = Z_k.
K_INDEX = {
    "X1": (4, 1), "X2": (4, 2), "X3": (4, 3),
    "X0": (0, 4),
    "Y1": (2, 3), "Y2": (3, 1), "Y3": (1, 2),
    "Z1": (0, 1), "Z2": (0, 2), "Z3": (0, 3),
}
_K_TABLE = {}
for _lab, (_al, _be) in K_INDEX.items():
    _K_TABLE[(_al, _be)] = (_lab, +1)
    _K_TABLE[(_be, _al)] = (_lab, -1)


def generator(label: str) -> AlgebraElement:
    """One of the ten basis generators by label."""
    try:
        return _GENERATORS[label]
    except KeyError:
        raise ValueError(f"unknown generator label {label!r}") from None


def k_label(alpha: int, beta: int) -> tuple[str, int]:
    """Label and sign such that K_{alpha beta} = sign * generator(label)."""
    if alpha == beta:
        raise ValueError("K indices must differ")
    try:
        return _K_TABLE[(alpha, beta)]
    except KeyError:
        raise ValueError(f"invalid K indices ({alpha}, {beta})") from None


def k_generator(alpha: int, beta: int) -> AlgebraElement:
    """Antisymmetric generator family K_{alpha beta} in the quaternionic rep."""
    label, sign = k_label(alpha, beta)
    g = generator(label)
    return g if sign > 0 else AlgebraElement(-g.m)


def bracket(X: AlgebraElement, Y: AlgebraElement) -> AlgebraElement:
    """Commutator XY - YX; the result is checked against the algebra shape."""
    m = X.m @ Y.m - Y.m @ X.m
    return AlgebraElement.from_qmat(m, tol=1e-12)


# ---------------------------------------------------------------------------
# 5x5 realization on the ambient space

# Time-axis orientation: the raw matrix of the rotation field x_a @_b - x_b @_a
# intertwines the quaternionic generators only up to a sign on every plane that
# contains the 0 axis.  The sign vector below folds that in, so the 5x5 family
# matches the slash-induced action with unit proportionality (asserted in the
# homomorphism suite) while still satisfying the structure-constant table.
_AXIS_SIGN = (-1, 1, 1, 1, 1)


def so14_matrix(alpha: int, beta: int) -> np.ndarray:
    """Integer 5x5 generator of the plane (alpha, beta); eta K is antisymmetric."""
    if alpha == beta:
        raise ValueError("plane indices must differ")
    if not (0 <= alpha <= 4 and 0 <= beta <= 4):
        raise ValueError(f"invalid plane ({alpha}, {beta})")
    K = np.zeros((5, 5), dtype=int)
    sg = _AXIS_SIGN[alpha] * _AXIS_SIGN[beta]
    K[alpha, beta] = sg * ETA[beta]
    K[beta, alpha] = -sg * ETA[alpha]
    return K


_PLANES = [(a, b) for a in range(5) for b in range(a + 1, 5)]


def _k_qmat_or_zero(alpha: int, beta: int) -> QMat2:
    return QMat2.zero() if alpha == beta else k_generator(alpha, beta).m


def _k_so14_or_zero(alpha: int, beta: int) -> np.ndarray:
    return np.zeros((5, 5), dtype=int) if alpha == beta else so14_matrix(alpha, beta)


def structure_rhs(alpha, beta, rho, delta, k_of):
    """- (eta_ar K_bd + eta_bd K_ar - eta_ad K_br - eta_br K_ad)."""
    out = None
    for sign, (i1, i2), (j1, j2) in (
        (-1, (alpha, rho), (beta, delta)),
        (-1, (beta, delta), (alpha, rho)),
        (+1, (alpha, delta), (beta, rho)),
        (+1, (beta, rho), (alpha, delta)),
    ):
        if i1 != i2:
            continue
        term = k_of(j1, j2)
        term = term.scale(sign * ETA[i1]) if isinstance(term, QMat2) else sign * ETA[i1] * term
        out = term if out is None else out + term
    if out is None:
        out = k_of(0, 0)  # zero element of the representation
    return out


def bracket_table_residual_quaternionic() -> float:
    """Worst defect of the 45 distinct commutators in the quaternionic rep."""
    worst = 0.0
    for i, (a, b) in enumerate(_PLANES):
        for (r, d) in _PLANES[i + 1:]:
            lhs = bracket(k_generator(a, b), k_generator(r, d)).m
            rhs = structure_rhs(a, b, r, d, _k_qmat_or_zero)
            worst = max(worst, (lhs - rhs).max_norm())
    return worst


def bracket_table_defect_so14() -> int:
    """Worst integer defect of the 45 distinct commutators in the 5x5 rep."""
    worst = 0
    for i, (a, b) in enumerate(_PLANES):
        for (r, d) in _PLANES[i + 1:]:
            Ka, Kb = so14_matrix(a, b), so14_matrix(r, d)
            lhs = Ka @ Kb - Kb @ Ka
            rhs = structure_rhs(a, b, r, d, _k_so14_or_zero)
            worst = max(worst, int(np.abs(lhs - rhs).max()))
    return worst


# ---------------------------------------------------------------------------
# Bridge between the quaternionic and 5x5 pictures

#: Proportionality between the slash-induced matrices and so14_matrix.
#: Determined once by extracting the action of every generator on the basis
#: vectors; with the axis signs above it comes out to exactly 1.
SO14_SCALE = 1.0

_BASIS5 = np.eye(5)


def slash_induced_matrix(X: AlgebraElement) -> np.ndarray:
    """5x5 matrix of ad_X pushed through the slash isomorphism.

    Column nu is unslash([X, slash(e_nu)]); linear in X by construction.
    """
    cols = [unslash(X.m @ slash(e) - slash(e) @ X.m) for e in _BASIS5]
    return np.column_stack(cols)


def homomorphism_residual(label: str) -> float:
    """Max-norm gap between the slash-induced matrix and SO14_SCALE * K."""
    L = slash_induced_matrix(generator(label))
    K = so14_matrix(*K_INDEX[label])
    return float(np.abs(L - SO14_SCALE * K).max())


def intertwining_residual(label1: str, label2: str) -> float:
    """Check L([G1, G2]) = [L(G1), L(G2)] for a generator pair."""
    G1, G2 = generator(label1), generator(label2)
    left = slash_induced_matrix(bracket(G1, G2))
    L1, L2 = slash_induced_matrix(G1), slash_induced_matrix(G2)
    return float(np.abs(left - (L1 @ L2 - L2 @ L1)).max())


# ---------------------------------------------------------------------------
# Exponential map

def _expm4(A: np.ndarray) -> np.ndarray:
    """Scaling-and-squaring Taylor exponential for 4x4 matrices.

    Order 17 after scaling to max-norm <= 1/2 leaves a truncation error
    far below double round-off; no general-purpose machinery needed at
    this size.
    """
    nrm = float(np.abs(A).max())
    s = max(0, int(math.ceil(math.log2(nrm / 0.5)))) if nrm > 0.5 else 0
    B = A / (2.0 ** s)
    out = np.eye(4, dtype=complex)
    term = np.eye(4, dtype=complex)
    for k in range(1, 18):
        term = term @ B / k
        out = out + term
    for _ in range(s):
        out = out @ out
    return out


def exp(X: AlgebraElement, t: float = 1.0) -> GroupElement:
    """Group element exp(t X), computed in the complex embedding.

    The result is mapped back to quaternionic blocks and certified as a
    member; exp(theta X_k), exp(psi X0), exp(theta Y_k) and exp(phi Z_k)
    reproduce the corresponding one-parameter subgroups.
    """
    E4 = _expm4(X.m.scale(float(t)).embed())
    m = QMat2.from_embedding(E4, tol=1e-9)
    return certified(m, 1e-10)


def random_element(rng: np.random.Generator) -> AlgebraElement:
    """Coordinates uniform in [-1, 1]^10."""
    c = rng.uniform(-1.0, 1.0, 10)
    return from_coords(c[0:3], c[3:6], float(c[6]), c[7:10])
