import math
from math import factorial

import numpy as np
import pytest

from bjop import grid as gn
from bjop.errors import CommensurabilityError, GridMismatch, NonFiniteInput
from bjop.grid import Grid, GridFunction, PhasePoint

G = Grid()


@pytest.fixture
def u():
    return gn.gaussian(G).normalized()


@pytest.fixture
def h():
    return gn.hermite1(G).normalized()


def lattice(k1, k2):
    return PhasePoint.from_lattice(G, k1, k2)


def close(a, b, tol):
    return (a - b).norm() <= tol


def test_grid_validation():
    for bad in (4, 12, 255):
        with pytest.raises(ValueError):
            Grid(bad, 1.0)
    with pytest.raises(ValueError):
        Grid(16, -1.0)
    assert G.x[0] == -G.L / 2
    assert G.xi[G.N // 2] == 0.0


def test_nonfinite_rejected():
    v = np.ones(G.N)
    v[3] = np.nan
    with pytest.raises(NonFiniteInput):
        GridFunction(G, v)


def test_values_are_immutable(u):
    with pytest.raises(ValueError):
        u.values[0] = 1.0


# transforms


def test_dft_constant_is_spike_at_zero():
    uhat = gn.dft_forward(GridFunction(G, np.ones(G.N)))
    mags = np.abs(uhat.values)
    assert G.xi[np.argmax(mags)] == 0.0
    assert np.sum(mags > 1e-12) == 1


@pytest.mark.parametrize("k", [-7, 3, 40])
def test_dft_planewave_is_spike(k):
    uhat = gn.dft_forward(gn.planewave(G, k))
    mags = np.abs(uhat.values)
    assert G.k[np.argmax(mags)] == k
    assert np.sum(mags > 1e-9) == 1


def test_dft_parseval_and_roundtrip(u, h):
    for v in (u, h, u * 0.3 + h * 2j):
        assert abs(gn.dft_forward(v).norm() - v.norm()) <= 1e-12 * v.norm()
        back = gn.dft_inverse(gn.dft_forward(v))
        assert (back - v).norm() <= 1e-12 * v.norm()


def test_dft_matches_continuous_transform():
    # (2 pi)^(-1/2) int exp(-i xi x) exp(-x^2/2) dx = exp(-xi^2/2)
    uhat = gn.dft_forward(gn.gaussian(G))
    assert np.max(np.abs(uhat.values - np.exp(-G.xi**2 / 2))) < 1e-13


# M, T, R


def test_M_pure_modulation(u):
    v = gn.apply_M(PhasePoint(3 * G.dxi, 0.0), u)
    assert np.allclose(v.values, np.exp(1j * 3 * G.dxi * G.x) * u.values, atol=1e-15, rtol=0)


def test_M_pure_shift(u):
    v = gn.apply_M(lattice(0, 5), u)
    expected = np.exp(-((G.x + 5 * G.dx) ** 2) / 2) / math.pi**0.25
    assert np.max(np.abs(v.values - expected)) < 1e-14


def test_M_off_lattice_shift_is_band_limited(u):
    s = 0.3217
    v = gn.shift(u, s)
    expected = np.exp(-((G.x + s) ** 2) / 2) / math.pi**0.25
    assert np.max(np.abs(v.values - expected)) < 1e-13


@pytest.mark.parametrize("k1,k2", [(1, 1), (3, 5), (-8, 16), (16, -24)])
def test_M_unitary_and_bkh(u, h, k1, k2):
    p = lattice(k1, k2)
    for v in (u, h):
        Mv = gn.apply_M(p, v)
        assert abs(Mv.norm() - v.norm()) <= 1e-12
        shift_then_mod = gn.modulate(gn.shift(v, p.xi0), p.x0)
        mod_then_shift = gn.shift(gn.modulate(v, p.x0), p.xi0)
        assert close(Mv, mod_then_shift * np.exp(-0.5j * p.t), 1e-10)
        assert close(Mv, shift_then_mod * np.exp(0.5j * p.t), 1e-10)


def test_T_examples(u, h):
    assert close(gn.apply_T(PhasePoint(0.0, 0.0), u), u, 0.0)
    q = PhasePoint(7 * G.dx, -3 * G.dxi)
    assert close(gn.apply_T(q, gn.apply_T(-q, h)), h, 1e-10)
    assert abs(gn.apply_T(q, h).norm() - 1) <= 1e-12


def test_R_examples(u, h):
    R0 = PhasePoint(0.0, 0.0)
    assert np.array_equal(gn.apply_R(R0, h).values, h.values[np.r_[0, G.N - 1:0:-1]])
    q = PhasePoint(6 * G.dx, 2 * G.dxi)
    for v in (u, h):
        Rv = gn.apply_R(q, v)
        assert close(Rv, gn.apply_T(q, gn.apply_R(R0, gn.apply_T(-q, v))), 1e-10)
        assert close(gn.apply_R(q, Rv), v, 1e-10)


def test_R_explicit_formula(h):
    q = PhasePoint(6 * G.dx, 2 * G.dxi)
    x = G.x
    f = lambda y: y * np.exp(-(y**2) / 2)  # noqa: E731
    expected = np.exp(2j * q.xi0 * (x - q.x0)) * f(2 * q.x0 - x)
    assert np.max(np.abs(gn.apply_R(q, gn.hermite1(G)).values - expected)) < 1e-13


def test_R_off_lattice_covariance(u):
    q = PhasePoint(3 * G.dxi, 10 * G.dx)
    with pytest.warns(gn.AliasingWarning):
        Rv = gn.apply_R(q, u)
    with pytest.warns(gn.AliasingWarning):
        cov = gn.apply_T(q, gn.apply_R(PhasePoint(0, 0), gn.apply_T(-q, u)))
    assert close(Rv, cov, 1e-10)


def test_group_law(u):
    p1, p2 = lattice(3, 5), lattice(-2, 9)
    phase = np.exp(0.5j * (p2.x0 * p1.xi0 - p1.x0 * p2.xi0))
    assert close(gn.apply_M(p1, gn.apply_M(p2, u)), gn.apply_M(p1 + p2, u) * phase, 1e-10)


# multiplication and multipliers


def test_mult_and_multiplier_identities(u, h):
    assert close(gn.apply_mult(GridFunction(G, np.ones(G.N)), u), u, 0.0)
    assert close(gn.apply_fourier_multiplier(np.ones(G.N), h), h, 1e-12)
    with pytest.raises(GridMismatch):
        gn.apply_mult(gn.gaussian(Grid(64, 10.0)), u)


def central_difference(values, h, m=8):
    """Order-2m central difference for d/dx on periodic samples."""
    out = np.zeros_like(values)
    for j in range(1, m + 1):
        c = (-1) ** (j + 1) * factorial(m) ** 2 / (j * factorial(m - j) * factorial(m + j))
        out = out + c * (np.roll(values, -j) - np.roll(values, j))
    return out / h


def test_multiplier_xi_is_D():
    x = G.x
    v = GridFunction(G, (1 + x - 0.5 * x**2) * np.exp(-(x**2) / 2))
    got = gn.apply_fourier_multiplier(lambda xi: xi, v)
    oracle = -1j * central_difference(v.values, G.dx)
    assert np.max(np.abs(got.values - oracle)) <= 1e-6


# plane waves


def test_bj_planewave_examples(u):
    p0 = lattice(5, 0)
    assert close(gn.apply_bj_planewave(p0, u), gn.apply_M(p0, u), 0.0)
    p2pi = lattice(8, 32)
    assert math.isclose(p2pi.t, 2 * math.pi)
    assert gn.apply_bj_planewave(p2pi, u).norm() <= 1e-12
    ppi = lattice(8, 16)
    assert close(gn.apply_bj_planewave(ppi, u), gn.apply_M(ppi, u) * (2 / math.pi), 1e-14)


def test_sinc_small_argument():
    for t in (0.0, 1e-9, -3e-7, 2e-6):
        assert abs(gn.sinc(t) - (1 - t * t / 6)) < 1e-15
    assert gn.sinc(math.pi / 2) == pytest.approx(2 / math.pi, abs=1e-16)


def test_tau_planewave(u):
    p = lattice(8, 24)
    assert close(gn.apply_tau_planewave(p, 0.5, u), gn.apply_M(p, u), 0.0)
    nodes, weights = np.polynomial.legendre.leggauss(64)
    taus, w = (nodes + 1) / 2, weights / 2
    avg = sum((gn.apply_tau_planewave(p, tau, u) * wt for tau, wt in zip(taus, w)), gn.apply_M(p, u) * 0)
    assert close(avg, gn.apply_bj_planewave(p, u), 1e-12)
    p0 = lattice(0, 24)
    for tau in (0.0, 0.3, 1.0):
        assert close(gn.apply_tau_planewave(p0, tau, u), gn.apply_M(p0, u), 0.0)


def test_tau_zero_is_x_left_ordering(u):
    # tau = 0 must be exp(i x0 x) exp(i xi0 D): modulation applied after the shift
    p = lattice(8, 16)
    left = gn.modulate(gn.shift(u, p.xi0), p.x0)
    assert close(gn.apply_tau_planewave(p, 0.0, u), left, 1e-14)


def test_bandlimited(u, h):
    p = lattice(3, 5)
    assert close(gn.apply_bj_bandlimited({p: 1}, u), gn.apply_bj_planewave(p, u), 0.0)
    q = lattice(4, 0)
    assert close(gn.apply_bj_bandlimited({q: 1}, u), gn.apply_mult(lambda x: np.exp(1j * q.x0 * x), u), 1e-12)
    real = {p: 0.7 + 0.2j, -p: 0.7 - 0.2j, q: 1.5, -q: 1.5}
    A = lambda v: gn.apply_bj_bandlimited(real, v)  # noqa: E731
    assert abs(A(u).inner(h) - u.inner(A(h))) <= 1e-10
    with pytest.raises(CommensurabilityError):
        gn.apply_bj_bandlimited({PhasePoint(0.1234, 0.0): 1}, u)


def test_commutator_apply(u):
    A = gn.modulation_op(3 * G.dxi)
    assert gn.commutator_apply(A, A, u).norm() == 0.0
    p = lattice(8, 16)
    lhs = gn.commutator_apply(gn.modulation_op(p.x0), gn.shift_op(p.xi0), u)
    shift_after_mod = gn.shift(gn.modulate(u, p.x0), p.xi0)
    assert close(lhs, shift_after_mod * (np.exp(-1j * p.t) - 1), 1e-12)
    f = lambda v: gn.apply_mult(np.cos(G.x), v)  # noqa: E731
    g = lambda v: gn.apply_mult(G.x**2, v)  # noqa: E731
    assert gn.commutator_apply(f, g, u).norm() <= 1e-15


@pytest.mark.parametrize("k2", [8, 16, 32, 48])
def test_dirac_and_weyl_mismatch(u, k2):
    p = lattice(8, k2)
    t = p.t
    lhs = gn.commutator_apply(gn.modulation_op(p.x0), gn.shift_op(p.xi0), u)
    assert close(lhs, gn.apply_M(p, u) * (-2j * math.sin(t / 2)), 1e-9)
    bj = gn.apply_bj_bandlimited({p: -t}, u) * 1j
    assert close(lhs, bj, 1e-9)
    weyl = gn.apply_tau_planewave(p, 0.5, u) * (-1j * t)
    ratio = lhs.inner(weyl) / weyl.inner(weyl)
    assert abs(ratio - gn.sinc(t / 2)) <= 1e-9


@pytest.mark.parametrize("k", [1, 2, 3])
def test_noninjectivity(u, k):
    p = lattice(8, 32 * k)
    assert gn.apply_bj_planewave(p, u).norm() / u.norm() <= 1e-12


# test vectors and serialization


def test_vectors():
    g = gn.gaussian(G)
    assert abs(g.norm() - math.pi**0.25) <= 1e-10
    assert np.allclose(np.abs(gn.planewave(G, 4).values), 1.0, atol=1e-15)
    v = gn.hermite1(G).values
    mirrored = v[np.r_[0, G.N - 1:0:-1]]
    assert np.max(np.abs(v[1:] + mirrored[1:])) <= 1e-15


def test_csv_roundtrip(tmp_path, h):
    path = tmp_path / "h.csv"
    text = h.to_csv(path)
    assert text.splitlines()[0] == "index,x,re,im"
    assert len(text.splitlines()) == G.N + 1
    back = GridFunction.from_csv(path)
    assert back.grid == G
    assert np.array_equal(back.values, h.values)
    assert np.array_equal(GridFunction.from_csv(text, G).values, h.values)


def test_json_roundtrip(tmp_path, u):
    v = u * (1 + 2j)
    path = tmp_path / "v.json"
    v.to_json(path)
    back = GridFunction.from_json(path)
    assert back.grid == G and np.array_equal(back.values, v.values)
    assert Grid.from_config({"N": 64, "L": 3.0}) == Grid(64, 3.0)


def test_off_lattice_modulation_warns(u):
    with pytest.warns(gn.AliasingWarning):
        gn.modulate(u, 0.1)
