import math

import numpy as np
import pytest

from ds4 import algebra
from ds4.group import (
    compose,
    random_member,
    t_boost,
    t_space_rotation,
    t_space_translation,
    t_time_translation,
)
from ds4.orbits import (
    CoadjointCoords,
    OrbitPoint,
    adjoint,
    base_element,
    conservation_residuals,
    contraction_sweep,
    defect_slope,
    energy_quartic_residual,
    massless_orbit_point,
    orbit_matrix,
    orbit_matrix_of,
    orbit_point_from_group,
    physicalize,
    positive_energy,
    sample_orbit,
    to_coadjoint_coords,
)
from ds4.quaternion import E1, E2, E3, ONE, Quaternion, random_unit, random_unit_vector


def _mixed(rng, i):
    return random_member(rng, "exp" if i % 2 else "factors")


# ---------------------------------------------------------------------------
# adjoint action

def test_adjoint_identity():
    rng = np.random.default_rng(61)
    X = algebra.random_element(rng)
    from ds4.group import GroupElement

    assert (adjoint(GroupElement.identity(), X).m - X.m).max_norm() == 0.0


def test_adjoint_is_a_homomorphism():
    rng = np.random.default_rng(62)
    for i in range(100):
        g1, g2 = _mixed(rng, i), _mixed(rng, i + 1)
        X = algebra.random_element(rng)
        lhs = adjoint(compose(g1, g2), X).m
        rhs = adjoint(g1, adjoint(g2, X)).m
        assert (lhs - rhs).max_norm() < 1e-11


def test_rotations_and_time_translations_stabilize_the_seed():
    rng = np.random.default_rng(63)
    for kappa in (0.1, 1.0, 10.0):
        seed_elt = base_element(kappa)
        for _ in range(50):
            g = t_space_rotation(random_unit(rng))
            assert (adjoint(g, seed_elt).m - seed_elt.m).max_norm() < 1e-12
            g = t_time_translation(rng.uniform(-2, 2))
            assert (adjoint(g, seed_elt).m - seed_elt.m).max_norm() < 1e-12


def test_adjoint_preserves_the_orbit_invariant():
    rng = np.random.default_rng(64)
    for i in range(100):
        pts = sample_orbit(1.0, 1, 3.0, seed=1000 + i)
        X = orbit_matrix_of(pts[0])
        g = _mixed(rng, i)
        a, j, d0, d = algebra.to_coords(adjoint(g, X))
        invariant = d0**2 + d @ d - a @ a - j @ j
        assert abs(invariant - 1.0) < 1e-9


# ---------------------------------------------------------------------------
# orbit points

def test_orbit_point_at_rest():
    pt = orbit_point_from_group(2.0, ONE, 0.0, E1)
    assert pt.z == ONE and np.array_equal(pt.p, np.zeros(3))
    assert (orbit_matrix_of(pt).m - base_element(2.0).m).max_norm() == 0.0


def test_orbit_point_pure_boost():
    kappa, phi = 1.5, 0.9
    pt = orbit_point_from_group(kappa, ONE, phi, E3)
    assert np.abs(pt.p - [0.0, 0.0, kappa * math.sinh(phi)]).max() < 1e-15
    assert pt.p0 == pytest.approx(kappa * math.cosh(phi), rel=1e-15)


def test_orbit_point_matches_adjoint_transport():
    rng = np.random.default_rng(65)
    for _ in range(100):
        kappa = rng.uniform(0.2, 5.0)
        w, u = random_unit(rng), random_unit_vector(rng)
        phi = rng.uniform(0.0, 2.5)
        pt = orbit_point_from_group(kappa, w, phi, u)
        g = compose(t_space_translation(w), t_boost(phi, u))
        transported = adjoint(g, base_element(kappa))
        assert (transported.m - orbit_matrix_of(pt).m).max_norm() < 1e-11


def test_orbit_point_canonicalizes_negative_rapidity():
    a = orbit_point_from_group(1.0, ONE, -0.7, E2)
    b = orbit_point_from_group(1.0, ONE, 0.7, -E2)
    assert a.z == b.z and np.array_equal(a.p, b.p) and a.kappa == b.kappa


def test_orbit_matrix_blocks():
    rng = np.random.default_rng(66)
    z = random_unit(rng)
    p = rng.uniform(-2, 2, 3)
    X = orbit_matrix(z, p, 1.2)
    pq = Quaternion(0.0, *p)
    assert (X.m.a - pq).max_abs() == 0.0
    assert (X.m.d + z.conj() * pq * z).max_abs() == 0.0
    assert (X.m.c - X.m.b.conj()).max_abs() == 0.0
    with pytest.raises(ValueError):
        orbit_matrix(Quaternion(2.0, 0.0, 0.0, 0.0), p, 1.0)
    with pytest.raises(ValueError):
        orbit_matrix(z, p, -1.0)


# ---------------------------------------------------------------------------
# dual coordinates and conservation laws

def test_coords_of_seed():
    c = to_coadjoint_coords(base_element(2.5))
    assert np.array_equal(c.a, np.zeros(3)) and np.array_equal(c.j, np.zeros(3))
    assert c.d0 == 2.5 and np.array_equal(c.d, np.zeros(3))


def test_coords_match_algebra_chart():
    rng = np.random.default_rng(67)
    for _ in range(100):
        X = algebra.random_element(rng)
        c = to_coadjoint_coords(X)
        a, j, d0, d = algebra.to_coords(X)
        assert np.array_equal(c.a, a) and np.array_equal(c.j, j)
        assert c.d0 == d0 and np.array_equal(c.d, d)


def test_conservation_on_constructed_samples():
    # z a rotation about e3 and momentum along e3 keeps everything explicit
    theta = 0.8
    w = Quaternion(math.cos(theta / 2), 0.0, 0.0, math.sin(theta / 2))
    pt = orbit_point_from_group(1.0, w, 1.1, E3)
    c = to_coadjoint_coords(orbit_matrix_of(pt))
    r = conservation_residuals(c, 1.0)
    assert not r.degenerate
    assert np.abs(c.j - np.cross(c.d, c.a) / c.d0).max() < 1e-14
    assert np.abs(r.r1).max() < 1e-14 and abs(r.r2) < 1e-14


def test_conservation_base_point():
    r = conservation_residuals(to_coadjoint_coords(base_element(1.0)), 1.0)
    assert np.array_equal(r.r1, np.zeros(3)) and r.r2 == 0.0 and not r.degenerate


def test_conservation_fuzz_transported():
    rng = np.random.default_rng(68)
    for kappa in (0.1, 1.0, 10.0):
        budget = 1e-9 * max(1.0, kappa**2)
        for i in range(200):
            X = adjoint(_mixed(rng, i), base_element(kappa))
            r = conservation_residuals(to_coadjoint_coords(X), kappa)
            assert max(np.abs(r.r1).max(), abs(r.r2)) < budget


def test_conservation_detects_off_orbit():
    pt = sample_orbit(1.0, 1, 3.0, seed=9)[0]
    c = to_coadjoint_coords(orbit_matrix_of(pt))
    tampered = CoadjointCoords(c.a * 1.1, c.j, c.d0, c.d)
    r = conservation_residuals(tampered, 1.0)
    assert abs(r.r2) > 1e-3


def test_conservation_degenerate_flag():
    # a pure-vector z has vanishing scalar part, so d0 = 0 exactly
    p = np.array([0.0, 0.0, 2.0])
    pt = massless_orbit_point(E2, p)
    c = to_coadjoint_coords(orbit_matrix_of(pt))
    assert c.d0 == 0.0
    r = conservation_residuals(c, 0.0)
    assert r.degenerate
    assert np.abs(r.r1 - (-np.cross(c.d, c.a))).max() == 0.0
    assert np.abs(r.r1).max() < 1e-12 and abs(r.r2) < 1e-12


# ---------------------------------------------------------------------------
# physical states

def test_physicalize_rest_state():
    m, c, R = 1.7, 2.0, 10.0
    kappa = m * c**2
    st = physicalize(to_coadjoint_coords(base_element(kappa)), m, c, R)
    assert st.E == pytest.approx(kappa)
    assert np.array_equal(st.p, np.zeros(3)) and np.array_equal(st.q, np.zeros(3))
    assert energy_quartic_residual(st) == 0.0
    with pytest.raises(ValueError):
        physicalize(to_coadjoint_coords(base_element(1.0)), -1.0, c, R)


def test_quartic_on_transported_states():
    rng = np.random.default_rng(69)
    for (m, c_light, R) in ((1.0, 1.0, 1.0), (1.0, 1.0, 10.0), (2.0, 3.0, 5.0)):
        kappa = m * c_light**2
        scale = kappa**4
        for i in range(100):
            X = adjoint(_mixed(rng, i), base_element(kappa))
            st = physicalize(to_coadjoint_coords(X), m, c_light, R)
            assert abs(energy_quartic_residual(st)) < 1e-8 * scale


def test_angular_momentum_relation():
    rng = np.random.default_rng(70)
    m, c_light, R = 2.0, 3.0, 5.0
    kappa = m * c_light**2
    for i in range(50):
        X = adjoint(_mixed(rng, i), base_element(kappa))
        coords = to_coadjoint_coords(X)
        st = physicalize(coords, m, c_light, R)
        want = kappa * c_light / (st.E * R) * st.l
        assert np.abs(coords.j - want).max() < 1e-9 * max(1.0, np.abs(want).max())


def test_quartic_flat_limit_form():
    # at huge R the quartic collapses to E^4 - E^2 (m^2 c^4 + c^2 p^2)
    p = np.array([0.3, -0.4, 0.5])
    q = np.array([1.0, 2.0, -1.0])
    for R in (1e6, 1e9):
        from ds4.orbits import PhysicalState

        E = 1.9
        st = PhysicalState(E, p, q, np.cross(q, p), 1.0, 1.0, R)
        flat = E**4 - E**2 * (1.0 + p @ p)
        assert energy_quartic_residual(st) == pytest.approx(flat, abs=1e-10)


# ---------------------------------------------------------------------------
# the flat-limit sweep

def test_positive_energy_rest():
    assert positive_energy(1.0, 1.0, np.zeros(3), np.zeros(3), 7.0) == 1.0


def test_positive_energy_satisfies_the_quartic():
    rng = np.random.default_rng(71)
    from ds4.orbits import PhysicalState

    for _ in range(100):
        p = rng.uniform(-2, 2, 3)
        q = rng.uniform(-2, 2, 3)
        R = rng.uniform(1.0, 100.0)
        E = positive_energy(1.0, 1.0, p, q, R)
        st = PhysicalState(E, p, q, np.cross(q, p), 1.0, 1.0, R)
        assert abs(energy_quartic_residual(st)) < 1e-10 * max(1.0, E**4)


def test_sweep_at_rest_is_exact():
    table = contraction_sweep(1.0, 1.0, np.zeros(3), np.zeros(3), [1.0, 10.0, 100.0])
    assert np.array_equal(table[:, 2], np.zeros(3))
    assert math.isnan(defect_slope(table))


def test_sweep_quadratic_falloff():
    # doubling the radius divides the defect by about four
    p, q = (1.0, 0.0, 0.0), (0.0, 1.0, 0.0)
    table = contraction_sweep(1.0, 1.0, p, q, [50.0, 100.0, 200.0, 400.0])
    ratios = table[:-1, 2] / table[1:, 2]
    assert np.all(np.abs(ratios - 4.0) < 0.01)


def test_sweep_far_field_defect():
    table = contraction_sweep(1.0, 1.0, (1, 0, 0), (0, 1, 0), [1e8])
    assert abs(table[0, 2]) < 1e-15


def test_sweep_slope():
    grid = np.logspace(1.0, 6.0, 26)
    table = contraction_sweep(1.0, 1.0, (1, 0, 0), (0, 1, 0), grid)
    assert abs(defect_slope(table) + 2.0) < 0.05


def test_sweep_grid_validation():
    with pytest.raises(ValueError):
        contraction_sweep(1.0, 1.0, (1, 0, 0), (0, 1, 0), [10.0, 5.0])
    with pytest.raises(ValueError):
        contraction_sweep(1.0, 1.0, (1, 0, 0), (0, 1, 0), [-1.0, 5.0])


# ---------------------------------------------------------------------------
# sampling and the massless family

def test_sample_orbit_deterministic():
    a = sample_orbit(1.0, 50, 5.0, seed=123)
    b = sample_orbit(1.0, 50, 5.0, seed=123)
    assert len(a) == len(b) == 50
    assert all(x.z == y.z and np.array_equal(x.p, y.p) and x.kappa == y.kappa
               for x, y in zip(a, b))


def test_sample_orbit_measure_symmetry():
    n = 1000
    pts = sample_orbit(1.0, n, 5.0, seed=7)
    zs = np.array([[pt.z.s, pt.z.x, pt.z.y, pt.z.z] for pt in pts])
    assert np.abs(zs.mean(axis=0)).max() < 4.0 / math.sqrt(n)
    radii = np.array([np.linalg.norm(pt.p) for pt in pts])
    assert radii.max() <= 5.0


def test_sample_orbit_points_satisfy_conservation():
    for kappa in (0.5, 1.0):
        for pt in sample_orbit(kappa, 200, 5.0 * kappa, seed=11):
            c = to_coadjoint_coords(orbit_matrix_of(pt))
            r = conservation_residuals(c, kappa)
            assert max(np.abs(r.r1).max(), abs(r.r2)) < 1e-9


def test_sample_orbit_validation():
    with pytest.raises(ValueError):
        sample_orbit(1.0, 0, 5.0, seed=0)
    with pytest.raises(ValueError):
        sample_orbit(1.0, 5, 0.0, seed=0)
    with pytest.raises(ValueError):
        sample_orbit(-1.0, 5, 1.0, seed=0)


def test_massless_limit_of_massive_matrices():
    rng = np.random.default_rng(72)
    z = random_unit(rng)
    p = np.array([0.4, -1.0, 0.3])
    target = orbit_matrix(z, p, 0.0).m
    gaps = []
    for k in range(1, 9):
        kappa = 10.0**-k
        gaps.append((orbit_matrix(z, p, kappa).m - target).max_norm())
    assert all(g2 <= g1 for g1, g2 in zip(gaps, gaps[1:]))
    assert gaps[-1] < 1e-10


def test_massless_point_properties():
    p = np.array([0.0, 3.0, 4.0])
    pt = massless_orbit_point(Quaternion(0.6, 0.8, 0.0, 0.0), p)
    assert pt.kappa == 0.0 and pt.p0 == 5.0
    c = to_coadjoint_coords(orbit_matrix_of(pt))
    r = conservation_residuals(c, 0.0)
    assert abs(r.r2) < 1e-10
    with pytest.raises(ValueError):
        massless_orbit_point(Quaternion(1.0, 0.0, 0.0, 0.0), np.zeros(3))


def test_orbit_point_json_roundtrip():
    pt = sample_orbit(2.0, 1, 3.0, seed=5)[0]
    back = OrbitPoint.from_json(pt.to_json())
    assert back.z == pt.z and np.array_equal(back.p, pt.p) and back.kappa == pt.kappa
