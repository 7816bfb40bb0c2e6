import io
import json
import subprocess
import sys

import pytest

from toricloops.cli import run
from toricloops.polytope import from_json, to_json


def call(argv, stdin=""):
    out = io.StringIO()
    status = run(argv, stdin=io.StringIO(stdin), stdout=out)
    return status, json.loads(out.getvalue())


def make(*argv):
    status, obj = call(["make", *argv])
    assert status == 0
    return json.dumps(obj)


def test_simplex_mass_center():
    assert call(["mass-center"], make("simplex", "--n", "2", "--scale", "1")) == (
        0,
        {"mass_center": ["1/3", "1/3"]},
    )


def test_hirzebruch_lambda():
    poly = make("hirzebruch", "--r", "1", "--tau", "2", "--lam", "1")
    assert call(["lambda", "--b", "1,1"], poly) == (0, {"lambda": "2/9"})


def test_lie():
    assert call(["lie", "--n", "1", "--weight", "1,0"]) == (0, {"center_image_count": 2, "lower_bound_pi1": 2})


def test_make_round_trip():
    for argv in (
        ("simplex", "--n", "3", "--scale", "3/2"),
        ("hirzebruch", "--r", "2", "--tau", "7/2", "--lam", "1/2"),
        ("blowup", "--n", "3", "--tau", "4", "--lam", "1"),
    ):
        text = make(*argv)
        obj = json.loads(text)
        P = from_json(obj)
        assert call(["make", *argv]) == (0, obj)
        assert [[str(c) for c in v] for v in sorted(P.vertices)] == obj["vertices"]
        assert from_json(json.loads(json.dumps(to_json(P)))) == P


def test_check_delzant():
    status, obj = call(
        ["check-delzant", "--json", json.dumps({"dim": 2, "halfspaces": [
            {"conormal": [-1, 0], "level": "0"}, {"conormal": [0, -1], "level": "0"},
            {"conormal": [1, 0], "level": "3"}, {"conormal": [0, 1], "level": "2"},
            {"conormal": [1, 2], "level": "5"}]})]
    )
    assert status == 0
    assert obj == {"delzant": False, "simple": True, "offending_vertices": [["3", "1"]]}


def test_quantizable_and_rescaled_lambda():
    poly = make("simplex", "--n", "2", "--scale", "3/2")
    assert call(["quantizable"], poly)[1]["quantizable"] is False
    assert call(["quantizable"], poly)[1]["minimal_rescale"] == "3/2"
    status, obj = call(["lambda", "--b", "1,0"], poly)
    assert status == 2 and obj["error"] == "NotQuantizable"
    status, obj = call(["lambda", "--b", "1,0", "--rescaled"], poly)
    assert status == 0 and obj["lambda"] == "1/3" and obj["rescale"] == "3/2"
    assert obj["normalization"]["origin_vertex"] == ["0", "0"]


def test_distinguish():
    poly = make("simplex", "--n", "2")
    assert call(["distinguish", "--b", "1,0", "--b2", "2,0"], poly)[1]["distinguishable"] is True
    assert call(["distinguish", "--b", "1,0", "--b2", "1,0"], poly)[1]["distinguishable"] is False


def test_enumerate_classes():
    status, obj = call(["enumerate-classes"], make("simplex", "--n", "3"))
    assert status == 0
    assert len(obj["classes"]) == 4 and len(set(obj["lambdas"])) == 4


def test_localization():
    status, obj = call(["localization", "--b", "1"], make("simplex", "--n", "1"))
    assert status == 0
    assert obj["sum_inverse_products"] == "0"
    assert [fp["phase"] for fp in obj["fixed_points"]] == [{"num": 1, "den": 2}] * 2


def test_localization_non_generic():
    status, obj = call(["localization", "--b", "1,0"], make("hirzebruch", "--r", "1", "--tau", "2", "--lam", "1"))
    assert status == 2 and obj["error"] == "NonGenericVector"


def test_verify_action():
    status, obj = call(["verify-action", "--b", "1", "--mu", "1/3", "--n-quad", "8"], make("simplex", "--n", "1"))
    assert status == 0
    assert obj["exact_lambda_phase"] == "1/2"
    assert abs(obj["numeric_lambda_phase"] - 0.5) < 1e-12


def test_input_file(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(make("simplex", "--n", "2"))
    assert call(["mass-center", "--input", str(path)])[1] == {"mass_center": ["1/3", "1/3"]}
    status, obj = call(["mass-center", "--input", str(tmp_path / "missing.json")])
    assert status == 2


@pytest.mark.parametrize(
    "argv, stdin, code",
    [
        (["frobnicate"], "", "UsageError"),
        ([], "", "UsageError"),
        (["mass-center"], "{not json", "ParseError"),
        (["mass-center"], "[1, 2]", "ParseError"),
        (["mass-center"], '{"dim": 1, "halfspaces": [{"conormal": [-1], "level": "0"}]}', "Unbounded"),
        (["lambda", "--b", "x"], "{}", "UsageError"),
        (["make", "hirzebruch", "--r", "1", "--tau", "1", "--lam", "1"], "", "InvalidParams"),
        (["make", "simplex"], "", "UsageError"),
        (["lie", "--n", "2", "--weight", "1,0"], "", "UsageError"),
        (["lambda", "--b", "1,0,0"], json.dumps({"dim": 1, "halfspaces": [
            {"conormal": [-1], "level": "0"}, {"conormal": [1], "level": "1"}]}), "UsageError"),
    ],
)
def test_errors(argv, stdin, code):
    status, obj = call(argv, stdin)
    assert status == 2
    assert obj["error"] == code and "detail" in obj


def test_shell_pipeline():
    make_proc = subprocess.run(
        [sys.executable, "-m", "toricloops.cli", "make", "hirzebruch", "--r", "2", "--tau", "3", "--lam", "1"],
        capture_output=True, text=True, check=True,
    )
    lam = subprocess.run(
        [sys.executable, "-m", "toricloops.cli", "lambda", "--b", "1,1"],
        input=make_proc.stdout, capture_output=True, text=True,
    )
    assert lam.returncode == 0
    assert json.loads(lam.stdout) == {"lambda": "1/2"}
    bad = subprocess.run([sys.executable, "-m", "toricloops.cli", "nope"], capture_output=True, text=True)
    assert bad.returncode == 2
