"""The group Sp(2,2): membership certification, hyperboloid action and the
space-time-Lorentz factorization.

An element is a 2x2 quaternionic matrix g with unit determinant (in the 4x4
complex embedding) and dagger(g) gamma^0 g = gamma^0.  The factor subgroups
are space translations (w, 0; 0, conj(w)), time translations built from
cosh/sinh of psi/2, space rotations (v, 0; 0, v) and boosts built from a unit
pure-vector direction u and rapidity phi.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .gamma import DSPoint, QMat2, gamma, slash, unslash
from .quaternion import (
    E1,
    ZERO,
    Quaternion,
    UnitQuaternion,
    ensure_pure_unit,
    ensure_unit,
    random_unit,
    random_unit_vector,
    sqrt_unit,
)

_G0 = gamma(0)
_SWAP = gamma(0) @ gamma(4)  # equals (0 1; 1 0)
_ORIGIN1 = np.array([0.0, 0.0, 0.0, 0.0, 1.0])


class NonMemberError(ValueError):
    """Raised when a matrix fails the Sp(2,2) membership predicates."""

    def __init__(self, report: "MembershipReport"):
        self.report = report
        super().__init__(
            f"not an Sp(2,2) element: det defect {report.det_defect:.3e}, "
            f"pseudo-unitarity defect {report.pseudo_unitarity_defect:.3e}"
        )


class MembershipReport(NamedTuple):
    """Residuals of the two membership predicates and the verdict at tol."""

    det_defect: float
    pseudo_unitarity_defect: float
    tol: float
    passed: bool

    def to_json(self) -> dict:
        return {
            "det_defect": self.det_defect,
            "pseudo_unitarity_defect": self.pseudo_unitarity_defect,
            "tol": self.tol,
            "pass": self.passed,
        }


class GroupElement(NamedTuple):
    m: QMat2

    def to_json(self) -> dict:
        return self.m.to_json()

    @classmethod
    def from_json(cls, obj: dict) -> "GroupElement":
        return cls(QMat2.from_json(obj))

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls(QMat2.identity())


def _qmat(g) -> QMat2:
    return g.m if isinstance(g, GroupElement) else g


def is_member(m, tol: float = 1e-10) -> MembershipReport:
    """Certify the unimodular and pseudo-unitarity conditions.

    Returns both residuals; never raises, the report carries failure.
    """
    m = _qmat(m)
    det_defect = abs(np.linalg.det(m.embed()) - 1.0)
    sandwich = m.dagger() @ _G0 @ m
    unit_defect = (sandwich - _G0).max_norm()
    return MembershipReport(float(det_defect), float(unit_defect), tol,
                            det_defect <= tol and unit_defect <= tol)


def certified(m, tol: float = 1e-10) -> GroupElement:
    """Wrap a matrix as a group element, raising NonMemberError on failure."""
    report = is_member(m, tol)
    if not report.passed:
        raise NonMemberError(report)
    return GroupElement(_qmat(m))


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    return GroupElement(_qmat(g1) @ _qmat(g2))


def inverse(g: GroupElement) -> GroupElement:
    """Closed-form inverse gamma^0 dagger(g) gamma^0 from pseudo-unitarity."""
    return GroupElement(_G0 @ _qmat(g).dagger() @ _G0)


def act_vector(g, x) -> np.ndarray:
    """Action on a raw 5-vector through conjugation of its slash matrix."""
    gm = _qmat(g)
    gi = _G0 @ gm.dagger() @ _G0
    return unslash(gm @ slash(x) @ gi)


def act(g, p: DSPoint) -> DSPoint:
    """Action on a hyperboloid point; the radius is preserved."""
    return DSPoint(act_vector(g, p.x), p.R)


def t_space_translation(w: UnitQuaternion) -> GroupElement:
    w = ensure_unit(w)
    return GroupElement(QMat2(w, ZERO, ZERO, w.conj()))


def t_time_translation(psi: float) -> GroupElement:
    ch = Quaternion(math.cosh(0.5 * psi), 0.0, 0.0, 0.0)
    sh = Quaternion(math.sinh(0.5 * psi), 0.0, 0.0, 0.0)
    return GroupElement(QMat2(ch, sh, sh, ch))


def t_space_rotation(v: UnitQuaternion) -> GroupElement:
    v = ensure_unit(v)
    return GroupElement(QMat2(v, ZERO, ZERO, v))


def t_boost(phi: float, u: Quaternion) -> GroupElement:
    u = ensure_pure_unit(u)
    ch = Quaternion(math.cosh(0.5 * phi), 0.0, 0.0, 0.0)
    su = u.scale(math.sinh(0.5 * phi))
    return GroupElement(QMat2(ch, su, -su, ch))


class DecompositionFactors(NamedTuple):
    """Canonical section (w, psi, v, phi, u) of the four-factor splitting."""

    w: Quaternion
    psi: float
    v: Quaternion
    phi: float
    u: Quaternion

    def to_json(self) -> dict:
        return {"w": self.w.to_json(), "psi": self.psi, "v": self.v.to_json(),
                "phi": self.phi, "u": self.u.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "DecompositionFactors":
        return cls(Quaternion.from_json(obj["w"]), float(obj["psi"]),
                   Quaternion.from_json(obj["v"]), float(obj["phi"]),
                   Quaternion.from_json(obj["u"]))


def reconstruct(f: DecompositionFactors) -> GroupElement:
    """Product T_st(w) T_tt(psi) T_sr(v) T_bt(phi, u)."""
    m = (t_space_translation(f.w).m @ t_time_translation(f.psi).m
         @ t_space_rotation(f.v).m @ t_boost(f.phi, f.u).m)
    return GroupElement(m)


def decompose(g, member_tol: float = 1e-10) -> DecompositionFactors:
    """Split g into space translation, time translation, rotation and boost.

    The factorization is not unique; this routine fixes one canonical
    section.  Steps:

    1. Move the origin: x = g . origin gives psi = asinh(x0) and a unit
       quaternion z from the spatial part, with w the principal square
       root of z (scalar part >= 0; z = -1 resolves to e1).
    2. Peel the translations off: L = T_tt(-psi) T_st(conj(w)) g must
       stabilize the origin and have the Lorentz block structure a = d,
       b = -c; violations signal an implementation or conditioning fault.
    3. Read the boost off the Lorentz factor: v = a/|a| and, since
       membership forces |a|^2 - |b|^2 = 1, sinh(phi/2) = |b|.  phi is
       recovered as 2 asinh(|b|), which stays fully conditioned at small
       rapidity where acosh(|a|) would lose half the digits.  The boost
       direction is conj(v) b / |b| with its round-off scalar part
       dropped; b = 0 degenerates to phi = 0, u = e1.

    Reconstructing the factors reproduces g to near round-off for any
    certified member.
    """
    report = is_member(g, member_tol)
    if not report.passed:
        raise NonMemberError(report)
    gm = _qmat(g)

    x = act_vector(gm, _ORIGIN1)
    psi = math.asinh(x[0])
    ch = math.cosh(psi)
    z = ensure_unit(Quaternion(x[4] / ch, x[1] / ch, x[2] / ch, x[3] / ch))
    w = sqrt_unit(z)

    L = t_time_translation(-psi).m @ t_space_translation(w.conj()).m @ gm
    stab = np.abs(act_vector(L, _ORIGIN1) - _ORIGIN1).max()
    structure = max((L.a - L.d).max_abs(), (L.b + L.c).max_abs())
    if stab > 1e-9 or structure > 1e-9:
        raise RuntimeError(
            f"Lorentz factor fails the stabilizer check "
            f"(origin defect {stab:.3e}, block defect {structure:.3e})"
        )

    na = L.a.norm()
    if na < 1.0 - 1e-12:
        raise RuntimeError(f"|a| = {na!r} below 1 beyond clamp tolerance")
    v = L.a.scale(1.0 / na)
    sh = L.b.norm()
    phi = 2.0 * math.asinh(sh)
    if sh > 1e-12:
        u_raw = v.conj() * L.b
        # The scalar part is membership round-off at matrix scale; checking
        # it after the 1/sh amplification would misfire for tiny boosts.
        if abs(u_raw.s) > 1e-8 * max(1.0, L.max_norm()):
            raise RuntimeError(f"boost direction has scalar part {u_raw.s!r}")
        u = Quaternion(0.0, u_raw.x / sh, u_raw.y / sh, u_raw.z / sh)
        u = ensure_pure_unit(u, tol=1e-6)
    else:
        phi, u = 0.0, E1
    return DecompositionFactors(w, psi, v, phi, u)


def involution(g) -> QMat2:
    """The map g -> gamma^0 gamma^4 dagger(g) gamma^0 gamma^4.

    Applying it twice returns g.  It fixes space and time translations
    and sends rotations and boosts to their inverses, which is what makes
    the four-factor splitting well posed.
    """
    return _SWAP @ _qmat(g).dagger() @ _SWAP


def mirror_generator_signs() -> dict[str, int]:
    """Conjugate each algebra generator by gamma^0 and record the sign.

    Every generator maps to plus or minus itself; anything else would
    falsify the block computation and raises.
    """
    from .algebra import GENERATOR_LABELS, generator

    signs: dict[str, int] = {}
    for label in GENERATOR_LABELS:
        G = generator(label).m
        ad = _G0 @ G @ _G0  # gamma^0 is its own inverse
        if (ad - G).max_norm() <= 1e-12:
            signs[label] = +1
        elif (ad + G).max_norm() <= 1e-12:
            signs[label] = -1
        else:
            raise RuntimeError(f"Ad_gamma0({label}) is not proportional to {label}")
    return signs


def random_member(rng: np.random.Generator, method: str = "factors") -> GroupElement:
    """Seeded random group element.

    Two independent distributions are provided so fuzz suites do not
    inherit the blind spots of a single generator: "factors" multiplies
    random one-parameter factors (psi in [-2, 2], phi in [0, 2]),
    "exp" exponentiates a random algebra element with coordinates
    uniform in [-1, 1].
    """
    if method == "factors":
        f = DecompositionFactors(
            random_unit(rng),
            float(rng.uniform(-2.0, 2.0)),
            random_unit(rng),
            float(rng.uniform(0.0, 2.0)),
            random_unit_vector(rng),
        )
        return reconstruct(f)
    if method == "exp":
        from .algebra import exp, random_element

        return exp(random_element(rng))
    raise ValueError(f"unknown method {method!r}")


def random_ds_point(rng: np.random.Generator, R: float = 1.0) -> DSPoint:
    """Seeded random hyperboloid point, psi uniform in [-2, 2]."""
    psi = rng.uniform(-2.0, 2.0)
    z = random_unit(rng)
    ch = R * math.cosh(psi)
    x = np.array([R * math.sinh(psi), ch * z.x, ch * z.y, ch * z.z, ch * z.s])
    return DSPoint(x, R)
