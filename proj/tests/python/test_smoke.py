import json
import math
import os
import subprocess
import tempfile

import pytest

import expressivity as ex


def test_fold_network_attains_bound():
    net = ex.build_fold_network([4, 4])
    pwl = ex.trace_exact(net)
    assert len(pwl) == 16
    assert ex.fineness(pwl) == pytest.approx(ex.lemma2_bound(1, [4, 4]), rel=1e-12)


def test_theorem1_hard_tanh():
    report = ex.verify_theorem1(1, [4, 4, 4, 4, 4])
    assert report.attains
    assert report.bound == pytest.approx(0.03125, abs=1e-12)


def test_golden_function_fineness():
    f = ex.PiecewiseLinear1D.from_vertices([0, 0.25, 2 / 3, 1], [0, 0.25, 1.5, 1.5])
    assert ex.fineness(f) == pytest.approx(5 / 12, abs=1e-12)


def test_grid_matches_exact_on_fold():
    net = ex.build_fold_network([2, 2, 2])
    exact = ex.fineness(ex.trace_exact(net))
    assert ex.grid_fineness(net, grid=100000) == pytest.approx(exact, abs=3e-5)


def test_forward_pass_and_json_round_trip():
    shape = ex.NetworkShape(1, [3], 1)
    net = ex.Network.random(shape, "standard_normal", seed=7, index=2)
    back = ex.Network.from_json(net.to_json())
    for x in (0.0, 0.3, 0.9):
        assert back(x) == net(x)
    assert len(net.params()) == shape.parameter_count


def test_ratio_curve_is_monotone():
    shape = ex.NetworkShape(1, [20], 1)
    curve = ex.estimate_ratio_curve(shape, ex.TargetFunction.sin4pi(), draws=50, grid=200,
                                    eps_offset=0.4, eps_step=0.05, eps_count=20)
    assert len(curve.ratios) == 20
    assert all(a <= b for a, b in zip(curve.ratios, curve.ratios[1:]))
    assert all(0.0 <= r <= 1.0 for r in curve.ratios)


def test_weierstrass_finite():
    w = ex.TargetFunction.weierstrass()
    assert all(math.isfinite(w(x)) for x in (0.0, 0.25, 0.5, 1.0))


def test_shape_error_is_value_error():
    with pytest.raises(ValueError):
        ex.theorem1_bound(1, [1])


def _cli():
    path = os.environ.get("EXPRESSIVITY_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("CLI binary not available")
    return path


def test_cli_exit_codes():
    cli = _cli()
    with tempfile.TemporaryDirectory() as tmp:
        bad = os.path.join(tmp, "bad.json")
        with open(bad, "w") as fh:
            json.dump({"targets": ["cosine"]}, fh)
        assert subprocess.run([cli, "--config", bad, "verify"], capture_output=True).returncode == 1
        missing = os.path.join(tmp, "nope.json")
        assert subprocess.run([cli, "--config", missing, "verify"], capture_output=True).returncode == 3
        out = os.path.join(tmp, "fold.json")
        res = subprocess.run([cli, "construct", "--widths", "2,2", "-o", out], capture_output=True)
        assert res.returncode == 0
        trace = os.path.join(tmp, "trace.csv")
        assert subprocess.run([cli, "trace", out, "-o", trace], capture_output=True).returncode == 0
        assert os.path.getsize(trace) > 0
