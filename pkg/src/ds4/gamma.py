"""Gamma matrices over the quaternions and the ambient hyperboloid geometry.

The five gamma matrices generate the Clifford algebra of the 1+4 Minkowski
metric diag(1,-1,-1,-1,-1).  The slash map identifies a 5-vector x with the
2x2 quaternionic matrix x^alpha gamma_alpha; conjugating slashed vectors is
how the group acts on the hyperboloid of radius R.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .quaternion import ONE, ZERO, E1, E2, E3, Quaternion, embed, extract

#: Ambient Minkowski metric diag(1,-1,-1,-1,-1) as integer signs.
ETA = (1, -1, -1, -1, -1)


def minkowski_square(x) -> float:
    """Quadratic form (x0)^2 - (x1)^2 - (x2)^2 - (x3)^2 - (x4)^2."""
    x = np.asarray(x, dtype=float)
    return float(x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3] - x[4] * x[4])


@dataclass(frozen=True)
class DSPoint:
    """Point of the radius-R hyperboloid (x)^2 = -R^2 in R^5.

    The constructor tolerance is relative to R^2 so acceptance is scale
    free as R sweeps over orders of magnitude.
    """

    x: np.ndarray
    R: float

    def __post_init__(self):
        x = np.array(self.x, dtype=float)
        if x.shape != (5,):
            raise ValueError(f"expected 5 components, got shape {x.shape}")
        if self.R <= 0:
            raise ValueError("radius must be positive")
        defect = abs(minkowski_square(x) + self.R**2)
        if defect > 1e-9 * self.R**2:
            raise ValueError(f"point is off the hyperboloid (defect {defect:.3e})")
        object.__setattr__(self, "x", x)

    def to_json(self) -> dict:
        return {"x": [float(c) for c in self.x], "R": float(self.R)}

    @classmethod
    def from_json(cls, obj: dict) -> "DSPoint":
        return cls(np.asarray(obj["x"], dtype=float), float(obj["R"]))


def origin(R: float) -> DSPoint:
    """The base point (0, 0, 0, 0, R)."""
    return DSPoint(np.array([0.0, 0.0, 0.0, 0.0, float(R)]), float(R))


class QMat2(NamedTuple):
    """2x2 matrix with quaternion entries, blocks (a b; c d)."""

    a: Quaternion
    b: Quaternion
    c: Quaternion
    d: Quaternion

    def __matmul__(self, o: "QMat2") -> "QMat2":
        return QMat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __add__(self, o):
        return QMat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o):
        return QMat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self):
        return QMat2(-self.a, -self.b, -self.c, -self.d)

    def scale(self, t: float) -> "QMat2":
        return QMat2(self.a.scale(t), self.b.scale(t), self.c.scale(t), self.d.scale(t))

    def dagger(self) -> "QMat2":
        """Transpose of the entrywise quaternionic conjugate."""
        return QMat2(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())

    def max_norm(self) -> float:
        return max(self.a.max_abs(), self.b.max_abs(), self.c.max_abs(), self.d.max_abs())

    def embed(self) -> np.ndarray:
        """Faithful 4x4 complex matrix (2x2 blocks of embedded quaternions)."""
        m = np.empty((4, 4), dtype=complex)
        m[0:2, 0:2] = embed(self.a)
        m[0:2, 2:4] = embed(self.b)
        m[2:4, 0:2] = embed(self.c)
        m[2:4, 2:4] = embed(self.d)
        return m

    @classmethod
    def from_embedding(cls, m: np.ndarray, tol: float = 1e-10) -> "QMat2":
        m = np.asarray(m, dtype=complex)
        return cls(
            extract(m[0:2, 0:2], tol),
            extract(m[0:2, 2:4], tol),
            extract(m[2:4, 0:2], tol),
            extract(m[2:4, 2:4], tol),
        )

    @classmethod
    def identity(cls) -> "QMat2":
        return _QID

    @classmethod
    def zero(cls) -> "QMat2":
        return _QZERO

    def to_json(self) -> dict:
        return {"blocks": {"a": self.a.to_json(), "b": self.b.to_json(),
                           "c": self.c.to_json(), "d": self.d.to_json()}}

    @classmethod
    def from_json(cls, obj: dict) -> "QMat2":
        blocks = obj["blocks"]
        return cls(*(Quaternion.from_json(blocks[k]) for k in ("a", "b", "c", "d")))


_QID = QMat2(ONE, ZERO, ZERO, ONE)
_QZERO = QMat2(ZERO, ZERO, ZERO, ZERO)

# gamma^0 = (1 0; 0 -1), gamma^k = (0 e_k; e_k 0), gamma^4 = (0 1; -1 0)
_GAMMA = (
    QMat2(ONE, ZERO, ZERO, -ONE),
    QMat2(ZERO, E1, E1, ZERO),
    QMat2(ZERO, E2, E2, ZERO),
    QMat2(ZERO, E3, E3, ZERO),
    QMat2(ZERO, ONE, -ONE, ZERO),
)
_GAMMA_EMB = tuple(g.embed() for g in _GAMMA)


def gamma(alpha: int) -> QMat2:
    """Upper-index gamma matrix, alpha in 0..4."""
    if not 0 <= alpha <= 4:
        raise ValueError(f"gamma index out of range: {alpha}")
    return _GAMMA[alpha]


def gamma_lower(alpha: int) -> QMat2:
    """Lower-index gamma_alpha = eta_aa gamma^alpha (no sum)."""
    g = gamma(alpha)
    return g if ETA[alpha] > 0 else -g


def anticommutator(alpha: int, beta: int) -> QMat2:
    """gamma^a gamma^b + gamma^b gamma^a; equals 2 eta^ab times the identity."""
    ga, gb = gamma(alpha), gamma(beta)
    return ga @ gb + gb @ ga


def dagger_identity_check(alpha: int) -> bool:
    """True iff dagger(gamma^a) equals gamma^0 gamma^a gamma^0 exactly."""
    g = gamma(alpha)
    lhs = g.dagger()
    rhs = _GAMMA[0] @ g @ _GAMMA[0]
    return (lhs - rhs).max_norm() == 0.0


def slash(x) -> QMat2:
    """Map a 5-vector to x^alpha gamma_alpha.

    With the quaternion bx = (x4, x1, x2, x3) the result has blocks
    (x0, -bx; conj(bx), -x0).
    """
    x = np.asarray(x, dtype=float)
    bx = Quaternion(x[4], x[1], x[2], x[3])
    x0 = Quaternion(x[0], 0.0, 0.0, 0.0)
    return QMat2(x0, -bx, bx.conj(), -x0)


def unslash(m: QMat2, tol: float = 1e-10) -> np.ndarray:
    """Invert the slash map via x^a = (1/4) tr(gamma^a m).

    The trace is taken in the 4x4 complex embedding, which fixes the
    trace convention unambiguously; the imaginary part must vanish.
    Rejects matrices outside the slash image (reconstruction is checked
    at tol relative to the matrix scale).
    """
    m4 = m.embed()
    traces = np.array([np.einsum("ij,ji->", g, m4) for g in _GAMMA_EMB])
    scale = max(1.0, m.max_norm())
    if np.abs(traces.imag).max() > 1e-12 * scale:
        raise ValueError("trace has a nonvanishing imaginary part")
    x = 0.25 * traces.real
    defect = (slash(x) - m).max_norm()
    if defect > tol * scale:
        raise ValueError(f"matrix is not in the slash image (defect {defect:.3e})")
    return x


def ambient_to_json(x) -> dict:
    return {"x": [float(c) for c in np.asarray(x, dtype=float)]}


def ambient_from_json(obj: dict) -> np.ndarray:
    x = np.asarray(obj["x"], dtype=float)
    if x.shape != (5,):
        raise ValueError(f"expected 5 components, got shape {x.shape}")
    return x
