"""Smoke tests of the python bindings."""

import math

import pytest

import hyptor


def test_rho_and_casimirs():
    assert hyptor.rho_vector(3) == [1.0, 0.0]
    assert hyptor.rho_vector(5) == [2.0, 1.0, 0.0]
    assert hyptor.casimir_sigma([0], 3) == -1.0
    assert hyptor.casimir_tau([1, 0], 3) == 3.0
    assert hyptor.casimir_tau(["1", "1"], 3) == 4.0


def test_weyl_flip_and_branching():
    assert hyptor.weyl_flip([2, 1], 5) == [2.0, -1.0]
    assert hyptor.branching_multiplicity([1], [0], 3) == 1
    assert hyptor.branching_multiplicity([1], [2], 3) == 0
    sigmas = hyptor.branching_sigmas([2], 3)
    assert len(sigmas) == 5
    total = sum(hyptor.dim_weyl_m(s, 3) for s in sigmas)
    assert total == hyptor.dim_weyl_k([2], 3) == 5


def test_plancherel():
    p = hyptor.build_plancherel([0], 3)
    assert p.degree == 2
    assert p.coeffs == [0.0, -1.0]
    assert p.eval_imag(2.0) == pytest.approx(4.0)
    q = hyptor.build_plancherel([1], 3)
    assert q.eval_imag(1.0) == pytest.approx(2.0)


def test_geometry():
    import numpy as np

    x = np.array([0.6, -0.8])
    n = hyptor.n_matrix(x)
    assert n.shape == (4, 4)
    r = hyptor.hyp_distance(x)
    assert r == pytest.approx(2.0 * math.asinh(0.5), rel=1e-14)
    k = hyptor.cartan_k(n)
    assert np.allclose(k @ k.T, np.eye(4), atol=1e-12)
    cos_theta = 0.5 * (np.trace(k[:3, :3]) - 1.0)
    assert cos_theta == pytest.approx(hyptor.rotation_angle_cos(1.0), abs=1e-11)
    assert hyptor.jacobian(1.0, 3) == pytest.approx(math.sinh(1.0) ** 2)


def test_series_and_moments():
    f = hyptor.compose_radial(hyptor.r_squared_series(6), 2, 6)
    g = hyptor.TruncatedSeries(2, 6)
    g.set([0, 0], 1.0)
    e = hyptor.expand_log_integral(f, g, 2)
    ks = [entry[0] for entry in e.entries]
    assert ks == [0, 1, 2]
    assert e.entries[0][1] == pytest.approx(-math.pi / 2)
    assert e.entries[1] == (1, 0.0, 0.0)  # odd entry vanishes
    assert hyptor.gauss_log_moment([0], 1) == pytest.approx(-1.7401154534566)
    assert hyptor.scaled_log_moment([1], 1, 2.0) == 0.0


def test_kernel_and_geometric_side():
    t, r = 0.05, 0.4
    lhs = (4 * math.pi * t) ** 1.5 * math.exp(r * r / (4 * t)) * hyptor.h3_scalar_kernel(r, t)
    assert lhs == pytest.approx(r / math.sinh(r) * math.exp(-t), abs=1e-13)

    manifold = {
        "dim": 3,
        "volume": 1.0,
        "kappa": 1,
        "C1": 1.0,
        "C2": 1.0,
        "cn": 1.0,
        "spectrum": [{"ell": 1.0, "ell0": 1.0, "angles": [0.0]}],
    }
    res = hyptor.geometric_side(manifold, [0], 0.1)
    assert res["total"] == pytest.approx(res["I"] + res["H"] + res["T"] + res["Tprime"])
    assert res["I"] > 0

    exact = hyptor.tprime_log_coefficients_exact([0], 3, 1)
    assert exact[1] == "0"


def test_zeta_and_torsion():
    a = 2.0
    expansion, c = [], 1.0
    for k in range(26):
        expansion.append({"beta": k, "c": c, "log": False})
        c *= -a / (k + 1)
    res = hyptor.zeta_values(lambda t: math.exp(-a * t), expansion)
    assert res["zeta0"] == pytest.approx(1.0)
    assert res["zetaPrime0"] == pytest.approx(-math.log(a), abs=1e-8)
    assert hyptor.regularized_det(res["zetaPrime0"]) == pytest.approx(a, abs=1e-7)

    with pytest.raises(ValueError):
        hyptor.zeta_values(lambda t: 1.0, [{"beta": 0, "c": 1.0, "log": True}])

    log_t = hyptor.torsion_assembly([2.0, 3.0, 5.0], 3)
    assert log_t == pytest.approx(0.5 * math.log(2) - math.log(3) + 1.5 * math.log(5))
