"""Real quaternion arithmetic in scalar-vector form.

Quaternions are the scalar field of this package: group elements, algebra
elements and slashed vectors are 2x2 matrices with quaternion entries.
Multiplication is done directly on the scalar-vector components; the 2x2
complex embedding (1 -> identity, e_k -> (-1)^(k+1) i sigma_k) is kept as an
independent cross-check and as the bridge to complex linear algebra
(determinants, matrix exponentials).
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np


class Quaternion(NamedTuple):
    """Quaternion s + x e1 + y e2 + z e3, with e1 e2 = e3 cyclically."""

    s: float
    x: float
    y: float
    z: float

    @classmethod
    def from_sv(cls, s: float, v) -> "Quaternion":
        vx, vy, vz = (float(c) for c in v)
        return cls(float(s), vx, vy, vz)

    @property
    def v(self) -> np.ndarray:
        """Vector part as a length-3 array."""
        return np.array([self.x, self.y, self.z])

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            s1, x1, y1, z1 = self
            s2, x2, y2, z2 = other
            return Quaternion(
                s1 * s2 - x1 * x2 - y1 * y2 - z1 * z2,
                s1 * x2 + s2 * x1 + y1 * z2 - z1 * y2,
                s1 * y2 + s2 * y1 + z1 * x2 - x1 * z2,
                s1 * z2 + s2 * z1 + x1 * y2 - y1 * x2,
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __add__(self, other):
        return Quaternion(self.s + other.s, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        return Quaternion(self.s - other.s, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self):
        return Quaternion(-self.s, -self.x, -self.y, -self.z)

    def scale(self, t: float) -> "Quaternion":
        t = float(t)
        return Quaternion(t * self.s, t * self.x, t * self.y, t * self.z)

    def conj(self) -> "Quaternion":
        """Quaternionic conjugate: negate the vector part."""
        return Quaternion(self.s, -self.x, -self.y, -self.z)

    def norm2(self) -> float:
        return self.s * self.s + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return math.hypot(self.s, self.x, self.y, self.z)

    def max_abs(self) -> float:
        return max(abs(self.s), abs(self.x), abs(self.y), abs(self.z))

    def to_json(self) -> dict:
        return {"s": self.s, "v": [self.x, self.y, self.z]}

    @classmethod
    def from_json(cls, obj: dict) -> "Quaternion":
        return cls.from_sv(obj["s"], obj["v"])


# Type alias used in signatures where unit norm is a precondition; unit-ness
# is enforced at construction sites through ensure_unit / ensure_pure_unit.
UnitQuaternion = Quaternion

ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
E1 = Quaternion(0.0, 1.0, 0.0, 0.0)
E2 = Quaternion(0.0, 0.0, 1.0, 0.0)
E3 = Quaternion(0.0, 0.0, 0.0, 1.0)


def mul(q1: Quaternion, q2: Quaternion) -> Quaternion:
    return q1 * q2


def conj(q: Quaternion) -> Quaternion:
    return q.conj()


def ensure_unit(q: Quaternion, tol: float = 1e-9) -> Quaternion:
    """Normalize q to unit norm; reject if the defect exceeds tol.

    The tolerance absorbs accumulated round-off without masking logic
    errors that would produce a genuinely non-unit value.
    """
    n = q.norm()
    if abs(n - 1.0) > tol:
        raise ValueError(f"not a unit quaternion: |q| = {n!r}")
    return q.scale(1.0 / n)


def ensure_pure_unit(u: Quaternion, tol: float = 1e-9) -> Quaternion:
    """Validate a unit pure-vector quaternion (zero scalar part)."""
    if abs(u.s) > tol:
        raise ValueError(f"not a pure vector quaternion: scalar part {u.s!r}")
    n = math.hypot(u.x, u.y, u.z)
    if abs(n - 1.0) > tol:
        raise ValueError(f"vector part not unit: |v| = {n!r}")
    return Quaternion(0.0, u.x / n, u.y / n, u.z / n)


def sqrt_unit(q: Quaternion) -> Quaternion:
    """Principal square root of a unit quaternion.

    Writes q = (cos t, sin t n) with t in [0, pi] and n a unit 3-vector,
    and returns (cos t/2, sin t/2 n); the scalar part of the result is
    always >= 0.  At q = (-1, 0) the axis is undefined and the root is
    fixed to e1 so that downstream results are reproducible.
    """
    q = ensure_unit(q)
    vn = math.hypot(q.x, q.y, q.z)
    if vn == 0.0:
        return ONE if q.s >= 0.0 else E1
    half = 0.5 * math.atan2(vn, q.s)
    f = math.sin(half) / vn
    return Quaternion(math.cos(half), f * q.x, f * q.y, f * q.z)


def embed(q: Quaternion) -> np.ndarray:
    """2x2 complex matrix of q in the basis e_k = (-1)^(k+1) i sigma_k."""
    return np.array(
        [[q.s + 1j * q.z, q.x * 1j - q.y],
         [q.x * 1j + q.y, q.s - 1j * q.z]]
    )


def extract(m: np.ndarray, tol: float = 1e-10) -> Quaternion:
    """Inverse of embed; rejects matrices outside the quaternion image."""
    m = np.asarray(m, dtype=complex)
    q = Quaternion(
        0.5 * (m[0, 0].real + m[1, 1].real),
        0.5 * (m[0, 1].imag + m[1, 0].imag),
        0.5 * (m[1, 0].real - m[0, 1].real),
        0.5 * (m[0, 0].imag - m[1, 1].imag),
    )
    defect = np.abs(m - embed(q)).max()
    if defect > tol * max(1.0, np.abs(m).max()):
        raise ValueError(f"matrix is not in the quaternion image (defect {defect:.3e})")
    return q


def random_quaternion(rng: np.random.Generator, scale: float = 1.0) -> Quaternion:
    """Components uniform in [-scale, scale]."""
    return Quaternion(*(rng.uniform(-scale, scale, 4)))


def random_unit(rng: np.random.Generator) -> Quaternion:
    """Uniform draw from the unit 3-sphere (normalized Gaussian 4-vector)."""
    while True:
        g = rng.normal(size=4)
        n = np.linalg.norm(g)
        if n > 1e-12:
            return Quaternion(*(g / n))


def random_unit_vector(rng: np.random.Generator) -> Quaternion:
    """Uniform unit pure-vector quaternion (direction on the 2-sphere)."""
    while True:
        g = rng.normal(size=3)
        n = np.linalg.norm(g)
        if n > 1e-12:
            return Quaternion(0.0, *(g / n))
