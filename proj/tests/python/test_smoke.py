import json
import math

import numpy as np
import pytest

import hermgeo as hg


def test_signature_of_presets():
    assert hg.signature(hg.Space.preset("riemann-poincare")) == (1, 0, 1)
    assert hg.signature(hg.Space.preset("fubini-study-n", 4)) == (0, 0, 4)
    assert hg.signature_of_gram(np.diag([-1.0, 0.0, 2.0])) == (1, 1, 1)
    assert "de-sitter" in hg.presets()


def test_space_properties():
    s = hg.Space("R", np.diag([-1.0, 1.0, 1.0]), metric_sign=-1)
    assert s.field == "R"
    assert s.dim == 3
    assert s.metric_sign == -1
    assert s.form([1, 0, 0], [1, 0, 0]) == -1


def test_gram_schmidt_is_orthonormal():
    s = hg.Space("C", np.diag([-1.0, 1.0, 1.0]))
    basis = hg.gram_schmidt(s, [[1, 0.2, 0], [0, 1, 1j], [0.3, 0, 1]])
    gram = np.array([[s.form(a, b) for b in basis] for a in basis])
    assert np.allclose(gram, np.diag(np.sign(np.diag(gram).real)), atol=1e-12)


def test_distance_and_tance():
    s = hg.Space.preset("riemann-poincare")
    assert hg.tance(s, [1, 0], [1, 0.5]) == pytest.approx(1 / 0.75)
    assert hg.distance(s, [1, 0], [1, 0.5], "hyperbolic") == pytest.approx(math.acosh(1 / math.sqrt(0.75)))
    assert hg.classify_point(s, [1, 0]) == "negative"


def test_octant_triangle():
    s = hg.Space.preset("round-sphere")
    rep = hg.triangle_report(s, [1, 0], [1, 1j], [1, 1])
    assert rep["regime"] == "spherical"
    assert rep["area"] == pytest.approx(math.pi / 8, abs=1e-12)
    assert all(a == pytest.approx(math.pi / 2, abs=1e-9) for a in rep["angles"])


def test_geometry_error_kind():
    s = hg.Space.preset("round-sphere")
    with pytest.raises(hg.GeometryError) as info:
        hg.geodesic_through(s, [1, 0], [0, 1])
    assert info.value.kind == "no-unique-geodesic"
    assert isinstance(info.value, ValueError)


def test_witness_unitary():
    s = hg.Space("R", np.eye(2))
    assert hg.geometrically_equal(s, [[1, 0]], [[0, 1]])
    g = hg.witness_unitary(s, [[1, 0]], [[0, 1]])
    assert np.allclose(g @ np.array([1, 0]), [0, 1])
    assert np.allclose(g.conj().T @ g, np.eye(2))


def test_stereographic_round_trip():
    p = np.array([0.0, 0.0, 1.0])
    q = np.array([0.6, 0.0, 0.8])
    assert np.allclose(hg.stereo_inverse(p, hg.stereo(p, q)), q)
    assert hg.conformal_factor(p, p) == pytest.approx(0.25)
    img = hg.subsphere_image(p, np.array([0.0, 0.0, 1.0]), 0)
    assert img["kind"] == "sphere"
    assert img["radius"] == pytest.approx(1.0)


def test_disc_maps():
    assert hg.poincare_klein_map(0.5) == pytest.approx(0.8)
    z1, z2 = 0.1 + 0.2j, -0.4 + 0.1j
    dk = hg.klein_distance(hg.poincare_klein_map(z1), hg.poincare_klein_map(z2))
    assert dk == pytest.approx(2 * hg.poincare_distance(z1, z2))


def test_cli_entry_point():
    code, out, err = hg.run_cli(["signature", "--gram", "[[-1,0],[0,1]]", "--field", "R"])
    assert code == 0, err
    assert json.loads(out) == {"signature": [1, 0, 1]}
    code, out, _ = hg.run_cli(["distance", "-", "--p", "a", "--q", "b"],
                              stdin='{"preset": "round-sphere", "points": {"a": [1, 0], "b": [0, 1]}}')
    assert code == 0
    assert json.loads(out)["distance"] == pytest.approx(math.pi / 2)
    code, _, err = hg.run_cli(["distance", "-", "--p", "a", "--q", "zz"],
                              stdin='{"preset": "round-sphere", "points": {"a": [1, 0]}}')
    assert code == 2
    assert json.loads(err)["error"] == "input"
