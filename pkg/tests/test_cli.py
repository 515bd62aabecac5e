"""Command line contract: outputs, determinism, and exit codes."""

import json

import pytest

from trigspec.cli import main


def run(args):
    return main(args)


@pytest.fixture
def constant_spec(tmp_path):
    path = tmp_path / "constant.json"
    doc = {"kind": "HarmonicSum", "terms": [[0, 2.0, 0.0]], "p": None,
           "r": 1, "variation": 0.0}
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def cosine_spec(tmp_path):
    path = tmp_path / "cos.json"
    doc = {"kind": "HarmonicSum", "terms": [[1, 1.0, 0.0]], "p": None,
           "r": 3, "variation": 4.0}
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def power_spec(tmp_path):
    path = tmp_path / "p4.json"
    doc = {"kind": "PowerDecayCosine", "terms": [], "p": 4.0,
           "r": 2, "variation": 4.9348022005446793}
    path.write_text(json.dumps(doc))
    return str(path)


# -- gen-signal ----------------------------------------------------------------


def test_gen_signal_preset(tmp_path):
    out = tmp_path / "sig.json"
    assert run(["gen-signal", "--preset", "power-cos-4", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "PowerDecayCosine"
    assert doc["p"] == 4.0


def test_gen_signal_unknown_preset(tmp_path):
    assert run(["gen-signal", "--preset", "nope", "--out", str(tmp_path / "x")]) == 2


# -- dft -------------------------------------------------------------------------


def test_dft_constant(constant_spec, tmp_path):
    out = tmp_path / "spec.csv"
    assert run(["dft", "--signal", constant_spec, "--n", "2", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "k,a,b"
    assert float(lines[1].split(",")[1]) == pytest.approx(2.0, abs=1e-14)
    for line in lines[2:]:
        _, a, b = line.split(",")
        assert abs(float(a)) < 1e-14 and abs(float(b)) < 1e-14


def test_dft_cosine_row(cosine_spec, tmp_path):
    out = tmp_path / "spec.csv"
    assert run(["dft", "--signal", cosine_spec, "--n", "2", "--out", str(out)]) == 0
    rows = out.read_text().splitlines()
    k1 = rows[2].split(",")
    assert float(k1[1]) == pytest.approx(1.0, abs=1e-13)


def test_dft_malformed_spec_no_output(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    out = tmp_path / "never.csv"
    assert run(["dft", "--signal", str(bad), "--n", "2", "--out", str(out)]) == 2
    assert not out.exists()


def test_dft_bad_n(cosine_spec, tmp_path):
    assert run(["dft", "--signal", cosine_spec, "--n", "0",
                "--out", str(tmp_path / "x.csv")]) == 2


# -- spline ------------------------------------------------------------------------


def test_spline_outputs(power_spec, tmp_path):
    stem = str(tmp_path / "run")
    code = run([
        "spline", "--signal", power_spec, "--n", "8", "--r", "3",
        "--variant", "abs-sinc", "--eval-grid", "340", "--out", stem,
    ])
    assert code == 0
    doc = json.loads((tmp_path / "run.spline.json").read_text())
    assert doc["N"] == 17 and doc["r"] == 3
    unfolded = (tmp_path / "run.unfolded.csv").read_text().splitlines()
    assert unfolded[0] == "j,a_hat,b_hat,a_true,b_true,abs_err_a,abs_err_b"
    assert len(unfolded) == 1 + 4 * 17
    eval_rows = (tmp_path / "run.eval.csv").read_text().splitlines()
    assert eval_rows[0] == "t,spline,signal,abs_err"
    # Node columns: every 20th row of the 340-point grid is a grid node.
    node_errs = [float(r.split(",")[3]) for r in eval_rows[1::20]]
    assert max(node_errs) < 1e-9


def test_spline_requires_out(power_spec):
    assert run(["spline", "--signal", power_spec, "--n", "8"]) == 2


# -- response -------------------------------------------------------------------


def test_response_default_orders(tmp_path):
    stem = str(tmp_path / "resp")
    assert run(["response", "--n", "16", "--out", stem]) == 0
    for r in (1, 3, 10):
        lines = (tmp_path / f"resp.r{r}.csv").read_text().splitlines()
        assert lines[0] == "j,k_class,sigma,H,alpha"
        first = lines[1].split(",")
        assert float(first[4]) > 0.8
    lines = (tmp_path / "resp.r1.csv").read_text().splitlines()
    alpha = [float(r.split(",")[4]) for r in lines[1:17]]
    assert all(x > y for x, y in zip(alpha, alpha[1:]))


def test_response_single_order(tmp_path):
    stem = str(tmp_path / "resp")
    assert run(["response", "--n", "4", "--r", "1", "--out", stem]) == 0
    assert (tmp_path / "resp.r1.csv").exists()


def test_response_j_max_below_band(tmp_path):
    assert run(["response", "--n", "16", "--j-max", "10",
                "--out", str(tmp_path / "x")]) == 2


# -- alias ----------------------------------------------------------------------


def test_alias_identity_run(power_spec, tmp_path):
    out = tmp_path / "alias.csv"
    assert run(["alias", "--signal", power_spec, "--n", "2", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("k,a_star_fold")
    for line in lines[1:]:
        cols = line.split(",")
        assert float(cols[5]) <= 1e-10


def test_alias_in_band_signal(cosine_spec, tmp_path):
    out = tmp_path / "alias.csv"
    assert run(["alias", "--signal", cosine_spec, "--n", "2", "--out", str(out)]) == 0


# -- bounds ---------------------------------------------------------------------


def test_bounds_eq3_pass(power_spec, tmp_path):
    out = tmp_path / "b.csv"
    assert run(["bounds", "--signal", power_spec, "--n", "2",
                "--family", "eq3", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "k,measured,bound,holds"
    assert all(line.endswith("true") for line in lines[1:])


def test_bounds_violation_exits_one(tmp_path):
    # A signal whose declared variation is too small: the decay bound fails.
    bad = tmp_path / "lying.json"
    bad.write_text(json.dumps({
        "kind": "HarmonicSum", "terms": [[1, 1.0, 0.0]], "p": None,
        "r": 0, "variation": 0.1,
    }))
    out = tmp_path / "b.csv"
    assert run(["bounds", "--signal", str(bad), "--n", "2",
                "--family", "eq3", "--out", str(out)]) == 1
    assert "false" in out.read_text()


@pytest.mark.parametrize("family", ["eq8", "eq9", "filon"])
def test_bounds_families_pass(power_spec, tmp_path, family):
    out = tmp_path / f"{family}.csv"
    code = run(["bounds", "--signal", power_spec, "--n", "8",
                "--family", family, "--j-max", "20", "--out", str(out)])
    assert code == 0
    assert all(line.endswith("true") for line in out.read_text().splitlines()[1:])


def test_bounds_eq9_needs_smooth_class(tmp_path):
    doc = {"kind": "PowerDecayCosine", "terms": [], "p": 2.0, "r": 0,
           "variation": 4.9348022005446793}
    spec = tmp_path / "p2.json"
    spec.write_text(json.dumps(doc))
    assert run(["bounds", "--signal", str(spec), "--n", "2",
                "--family", "eq9", "--out", str(tmp_path / "x.csv")]) == 2


# -- numerical failure ------------------------------------------------------------


def test_numerical_failure_exit_code(tmp_path):
    # Sine decay with p=2 has no closed form and an infeasible tail target.
    doc = {"kind": "PowerDecaySine", "terms": [], "p": 2.0, "r": 0,
           "variation": 5.0}
    spec = tmp_path / "hard.json"
    spec.write_text(json.dumps(doc))
    assert run(["dft", "--signal", str(spec), "--n", "2",
                "--out", str(tmp_path / "x.csv")]) == 3


# -- determinism -------------------------------------------------------------------


def test_reruns_are_byte_identical(power_spec, tmp_path):
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    for stem in (out1, out2):
        assert run([
            "spline", "--signal", power_spec, "--n", "8", "--r", "3",
            "--eval-grid", "256", "--out", str(stem),
        ]) == 0
    for suffix in (".spline.json", ".unfolded.csv", ".eval.csv"):
        b1 = (tmp_path / ("a" + suffix)).read_bytes()
        b2 = (tmp_path / ("b" + suffix)).read_bytes()
        assert b1 == b2, suffix


def test_inputs_not_mutated(power_spec, tmp_path):
    before = open(power_spec, "rb").read()
    run(["dft", "--signal", power_spec, "--n", "4", "--out", str(tmp_path / "o.csv")])
    assert open(power_spec, "rb").read() == before
