import math

import numpy as np
import pytest

import hororadon as hr


def test_discrete_series_in_kernel():
    r = hr.radon(hr.parse_family("ds:2"), 0.0, 0.0)
    assert abs(r["value"]) < 1e-14
    assert r["mass"] == pytest.approx(math.pi, rel=1e-12)


def test_grid_shape_and_decay():
    g = hr.radon_grid(hr.parse_family("bump:0,1,0,1"), 8, 21, -5.0, 5.0)
    assert g.shape == (21, 8)
    assert np.abs(g[0]).max() < 1e-3 * np.abs(g).max()


def test_identity_and_group_case():
    f = hr.parse_family("bump:0,1,0,1")
    c = hr.fourier_radon_identity(f, 2.0, 1.0, 0.0, hr.cartan(0.5))
    assert c["residual"] < 1e-5
    r = hr.group_radon("grpds:4", hr.cartan(0.4), hr.rotation(0.5))
    assert abs(r["value"]) < 1e-7 * r["mass"]


def test_iwasawa_recomposes():
    g = hr.rotation(0.3) * hr.cartan(0.7) * hr.unipotent(-1.2)
    th, s, x = hr.iwasawa(g)
    assert th == pytest.approx(0.3) and s == pytest.approx(0.7) and x == pytest.approx(-1.2)


def test_suite_and_errors():
    assert "kernel" in hr.suite_names()
    r = hr.run_suite("gh-density", seed=2)
    assert r["overall"] and r["report"].startswith("suite=gh-density")
    with pytest.raises(ValueError):
        hr.parse_family("ds:1")
    with pytest.raises(ValueError):
        hr.run_suite("nope")
