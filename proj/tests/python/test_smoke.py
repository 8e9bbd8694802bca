import math

import numpy as np
import pytest

import weylscope


def test_registries():
    assert weylscope.phase_names() == ["radial", "difference", "asym"]
    assert "phase-core" in weylscope.suite_names()
    assert "xi-5" in weylscope.order_names()


def test_projection_kernel():
    k = weylscope.weyl_kernel("f0", N=64, L=8.0)
    x = np.asarray(weylscope.grid_nodes(64, 8.0))
    e0 = math.pi ** -0.25 * np.exp(-x * x / 2)
    assert k.shape == (64, 64)
    assert np.max(np.abs(k - np.outer(e0, e0))) < 1e-8


def test_oscillator_eigenvalue():
    x = np.asarray(weylscope.grid_nodes())
    u = np.asarray(weylscope.apply_weyl("harmonic", "hermite:1"))
    h1 = math.sqrt(2) * math.pi ** -0.25 * x * np.exp(-x * x / 2)
    inner = np.abs(x) <= 4
    assert np.max(np.abs(u[inner] - 3 * h1[inner])) < 1e-6


def test_norms():
    assert weylscope.stilde_norm("one") == pytest.approx(2 * math.pi, rel=1e-12)
    assert weylscope.mod_norm("e0", "2") == pytest.approx(1.0, abs=1e-6)
    assert weylscope.mod_norm("e0", "inf") == pytest.approx((2 * math.pi) ** -0.5, rel=1e-8)


def test_rank_one():
    r = weylscope.rank_one("gauss:0,0,1", "e0", "e0", nodes=12)
    assert r["rel_error"] < 0.02
    assert abs(r["oracle"] - 0.5) < 1e-10


def test_bad_input():
    with pytest.raises(ValueError):
        weylscope.stilde_norm("nonsense")


def test_phase_core_report():
    r = weylscope.run_suite(["phase-core"])
    assert list(r) == ["config_echo", "records", "summary", "versions"]
    assert r["summary"]["fail"] == 0
    assert all(rec["anchor"] for rec in r["records"])


def test_criterion_one():
    c = weylscope.run_criterion(1)
    assert c["pass"]
    assert c["values"]["oscillator_error"] < 1e-6
