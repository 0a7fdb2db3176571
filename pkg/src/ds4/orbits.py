"""Adjoint orbits of the massive scalar family, their conservation laws,
physical dimensionalization and the flat-limit sweep.

The orbit through 2 kappa X0 is swept out by conjugating with space
translations and boosts; a point is parameterized by a unit quaternion z and
a momentum 3-vector p, with p0 = sqrt(kappa^2 + |p|^2).  In dual coordinates
(a, j, d0, d) the orbit is cut out by j = (d x a)/d0 together with
kappa^2 = d0^2 + d.d - a.a - j.j, which become the conservation laws of the
elementary system once energies and positions are attached.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .algebra import AlgebraElement, from_coords, shape_residual
from .gamma import QMat2
from .group import GroupElement, _qmat, inverse
from .quaternion import Quaternion, UnitQuaternion, ensure_pure_unit, ensure_unit, random_unit


class OrbitPoint(NamedTuple):
    """Orbit coordinates (z, p) at the given kappa."""

    z: Quaternion
    p: np.ndarray
    kappa: float

    @property
    def p0(self) -> float:
        return math.hypot(self.kappa, float(np.linalg.norm(self.p)))

    def to_json(self) -> dict:
        return {"z": self.z.to_json(), "p": [float(c) for c in self.p],
                "kappa": self.kappa}

    @classmethod
    def from_json(cls, obj: dict) -> "OrbitPoint":
        return cls(Quaternion.from_json(obj["z"]),
                   np.asarray(obj["p"], dtype=float), float(obj["kappa"]))


class CoadjointCoords(NamedTuple):
    """Cartesian coordinates (a, j, d0, d) on the dual of the algebra."""

    a: np.ndarray
    j: np.ndarray
    d0: float
    d: np.ndarray

    def to_json(self) -> dict:
        return {"a": [float(c) for c in self.a], "j": [float(c) for c in self.j],
                "d0": self.d0, "d": [float(c) for c in self.d]}


class ConservationResiduals(NamedTuple):
    """Defects of the two orbit conditions.

    When d0 vanishes the first condition cannot be solved for j; r1 is
    then the unscaled residual d0 j - d x a and degenerate is set.
    """

    r1: np.ndarray
    r2: float
    degenerate: bool


class PhysicalState(NamedTuple):
    """Energy, momentum, position and angular momentum with their constants."""

    E: float
    p: np.ndarray
    q: np.ndarray
    l: np.ndarray
    m: float
    c: float
    R: float


def base_element(kappa: float) -> AlgebraElement:
    """The orbit seed 2 kappa X0."""
    if kappa < 0:
        raise ValueError("kappa must be nonnegative")
    return from_coords((0, 0, 0), (0, 0, 0), float(kappa), (0, 0, 0))


def adjoint(g: GroupElement, X: AlgebraElement) -> AlgebraElement:
    """Conjugation g X g^-1; stays in the algebra shape."""
    m = _qmat(g) @ X.m @ inverse(g).m
    return AlgebraElement.from_qmat(m, tol=1e-12)


def orbit_point_from_group(kappa: float, w: UnitQuaternion, phi: float,
                           u: Quaternion) -> OrbitPoint:
    """Orbit point reached from the seed by T_st(w) T_bt(phi, u).

    z = w^2 and p = kappa sinh(phi) (w u conj(w)); negative rapidity is
    folded into the direction so phi >= 0 canonically.
    """
    if kappa < 0:
        raise ValueError("kappa must be nonnegative")
    w = ensure_unit(w)
    u = ensure_pure_unit(u)
    if phi < 0:
        phi, u = -phi, -u
    direction = w * u * w.conj()
    p = direction.v * (kappa * math.sinh(phi))
    return OrbitPoint(w * w, p, float(kappa))


def orbit_matrix(z: UnitQuaternion, p, kappa: float) -> AlgebraElement:
    """Algebra element (p, p0 z; p0 conj(z), -conj(z) p z) of an orbit point."""
    if kappa < 0:
        raise ValueError("kappa must be nonnegative")
    z = ensure_unit(z)
    p = np.asarray(p, dtype=float)
    pq = Quaternion(0.0, p[0], p[1], p[2])
    p0 = math.hypot(kappa, float(np.linalg.norm(p)))
    top = z.scale(p0)
    return AlgebraElement.from_qmat(
        QMat2(pq, top, top.conj(), -(z.conj() * pq * z)), tol=1e-12)


def orbit_matrix_of(pt: OrbitPoint) -> AlgebraElement:
    return orbit_matrix(pt.z, pt.p, pt.kappa)


def to_coadjoint_coords(X: AlgebraElement) -> CoadjointCoords:
    """Read (a, j, d0, d) off the blocks of a shape-valid element."""
    m = X.m
    res = shape_residual(m)
    if res > 1e-12 * max(1.0, m.max_norm()):
        raise ValueError(f"matrix is not in the algebra shape (defect {res:.3e})")
    a = 0.5 * (m.a.v - m.d.v)
    j = 0.5 * (m.a.v + m.d.v)
    return CoadjointCoords(a, j, m.b.s, m.b.v)


def conservation_residuals(coords: CoadjointCoords, kappa: float) -> ConservationResiduals:
    """Defects of the two orbit conditions at the given kappa.

    Off-orbit inputs are allowed; the residuals are a diagnostic, never
    a gate.
    """
    a, j, d0, d = coords.a, coords.j, coords.d0, coords.d
    r2 = kappa**2 - (d0**2 + d @ d - a @ a - j @ j)
    dxa = np.cross(d, a)
    if d0 == 0.0:
        return ConservationResiduals(d0 * j - dxa, float(r2), True)
    return ConservationResiduals(j - dxa / d0, float(r2), False)


def physicalize(coords: CoadjointCoords, m: float, c: float, R: float) -> PhysicalState:
    """Attach physical dimensions with the normalization kappa = m c^2.

    The dual coordinates carry a = kappa p/(m c), d0 = kappa E/(m c^2)
    and d = kappa q/R; solving with kappa = m c^2 gives E = d0,
    p = a/c and q = d R/(m c^2).  Angular momentum is l = q x p.
    """
    if m <= 0 or c <= 0 or R <= 0:
        raise ValueError("mass, speed of light and radius must be positive")
    kappa = m * c**2
    E = coords.d0
    p = coords.a * (m * c) / kappa
    q = coords.d * R / kappa
    return PhysicalState(float(E), p, q, np.cross(q, p), m, c, R)


def energy_quartic_residual(st: PhysicalState) -> float:
    """Value of the quartic energy constraint at the state; zero on orbit.

    E^4 + E^2 (-m^2 c^4 - c^2 p.p + (m^2 c^4 / R^2) q.q)
        - (m^2 c^6 / R^2) l.l
    """
    m, c, R = st.m, st.c, st.R
    E2 = st.E**2
    B = -(m * c**2) ** 2 - c**2 * (st.p @ st.p) + (m * c**2 / R) ** 2 * (st.q @ st.q)
    C = -(m**2 * c**6 / R**2) * (st.l @ st.l)
    return float(E2 * E2 + E2 * B + C)


def positive_energy(m: float, c: float, p, q, R: float) -> float:
    """Positive root of the quartic constraint, as a quadratic in E^2.

    The larger E^2 root is the branch that survives the flat limit; the
    sign of E itself is fixed positive by convention.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    l = np.cross(q, p)
    B = -(m * c**2) ** 2 - c**2 * (p @ p) + (m * c**2 / R) ** 2 * (q @ q)
    C = -(m**2 * c**6 / R**2) * (l @ l)
    disc = B * B - 4.0 * C
    if disc < 0:
        raise ArithmeticError("quartic has no real root; invalid inputs")
    E2 = 0.5 * (-B + math.sqrt(disc))
    if E2 <= 0:
        raise ArithmeticError("no positive energy root; invalid inputs")
    return math.sqrt(E2)


def contraction_sweep(m: float, c: float, p, q, R_list) -> np.ndarray:
    """Mass-shell defect along an increasing radius grid.

    For each R the positive energy root is solved and the defect
    E^2 - c^2 p.p - m^2 c^4 recorded; rows are (R, E, defect).  The
    defect falls off as 1/R^2, slope -2 on a log-log plot.
    """
    R_list = np.asarray(R_list, dtype=float)
    if R_list.ndim != 1 or len(R_list) < 1:
        raise ValueError("need a one-dimensional list of radii")
    if not (np.all(R_list > 0) and np.all(np.diff(R_list) > 0)):
        raise ValueError("radii must be positive and increasing")
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    shell = c**2 * (p @ p) + (m * c**2) ** 2
    rows = np.empty((len(R_list), 3))
    for i, R in enumerate(R_list):
        E = positive_energy(m, c, p, q, R)
        rows[i] = (R, E, E * E - shell)
    return rows


def defect_slope(table: np.ndarray) -> float:
    """Least-squares slope of log|defect| against log R; nan if all zero."""
    mask = table[:, 2] != 0.0
    if mask.sum() < 2:
        return float("nan")
    coeffs = np.polyfit(np.log10(table[mask, 0]), np.log10(np.abs(table[mask, 2])), 1)
    return float(coeffs[0])


def sample_orbit(kappa: float, n: int, p_max: float, seed: int) -> list[OrbitPoint]:
    """n independent draws from the truncated invariant measure.

    z is uniform on the 3-sphere and p uniform in the ball |p| <= p_max
    (the measure factorizes as dmu(z) d^3p; the full momentum measure is
    infinite, so a finite study needs the documented window).  Output is
    deterministic under the seed.
    """
    if n <= 0:
        raise ValueError("need a positive sample count")
    if p_max <= 0:
        raise ValueError("need a positive momentum window")
    if kappa < 0:
        raise ValueError("kappa must be nonnegative")
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        z = random_unit(rng)
        while True:
            direction = rng.normal(size=3)
            nd = np.linalg.norm(direction)
            if nd > 1e-12:
                break
        radius = p_max * rng.uniform() ** (1.0 / 3.0)
        p = direction * (radius / nd)
        if kappa == 0.0 and np.linalg.norm(p) == 0.0:
            p = np.array([0.0, 0.0, p_max])  # measure-zero guard for massless draws
        out.append(OrbitPoint(z, p, float(kappa)))
    return out


def massless_orbit_point(z: UnitQuaternion, p) -> OrbitPoint:
    """Point of the kappa = 0 family; p0 = |p| and p = 0 is rejected."""
    p = np.asarray(p, dtype=float)
    if np.linalg.norm(p) == 0.0:
        raise ValueError("massless points need a nonzero momentum")
    return OrbitPoint(ensure_unit(z), p, 0.0)
