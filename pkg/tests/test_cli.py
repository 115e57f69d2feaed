import json

import pytest

from homalt.cli import main
from homalt.constructions import (
    AlbertParams,
    albert5_base,
    albert5_alpha,
    albert5_twisted,
    derived_algebra,
    plus_algebra,
    yau_twist,
)
from homalt.core import algebra_from_json, load_algebra, save_algebra

from conftest import FIXTURES, swapped_alpha_albert
from test_core import same_algebra

BAD = str(FIXTURES / "non_right_alt_dim3.json")


# -- exit-code taxonomy ---------------------------------------------------------


def test_passing_check_exits_zero(capsys):
    assert main(["check", "albert5", "--suites", "axioms"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out
    assert "2/2 checks passed" in out


def test_full_default_check_on_the_builtin(capsys):
    assert main(["check", "albert5"]) == 0
    assert "25/25 checks passed" in capsys.readouterr().out


def test_failing_law_exits_one(capsys):
    assert main(["check", BAD, "--suites", "axioms"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert "witness=(0, 0, 0)" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "/no/such/file.json"],
        ["check", "albert5", "--twist", "1,1,1"],
        ["check", "albert5", "--twist", "2,3"],
        ["check", "albert5", "--suites", "axioms,bogus"],
        ["check", "albert5", "--nmax", "1"],
        ["check", "albert5", "--samples", "0"],
        ["identity", "albert5", "--expr", "(mul x"],
        ["identity", "albert5", "--expr", "(= (as x y y) (scale 0 x))",
         "--degrees", "x=0,y=2"],
        ["twist", "albert5", "--by", "/no/such/beta.json"],
    ],
)
def test_bad_input_exits_two(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_bad_thread_cap_exits_two(monkeypatch, capsys):
    monkeypatch.setenv("HOMALT_THREADS", "many")
    assert main(["check", "albert5", "--suites", "axioms"]) == 2
    assert "HOMALT_THREADS" in capsys.readouterr().err


def test_unmet_precondition_exits_three(tmp_path, capsys):
    path = str(tmp_path / "swapped.json")
    save_algebra(swapped_alpha_albert(), path)
    assert main(["powers", path]) == 3
    assert "multiplicative" in capsys.readouterr().err

    assert main(["operators", "albert5", "--twist", "2,3,0",
                 "--idempotent", "0,1,0,0,0"]) == 3
    err = capsys.readouterr().err
    assert err.startswith("precondition unmet:")
    assert "e*e = 0" in err

    assert main(["decompose", "albert5", "--twist", "2,3,1"]) == 3
    assert "--idempotent" in capsys.readouterr().err

    assert main(["check", "albert5", "--twist", "2,3,1"]) == 3
    err = capsys.readouterr().err
    assert "decompose suite:" in err
    assert "drop 'decompose' from --suites" in err


def test_twist_by_a_non_morphism_exits_three(tmp_path, capsys):
    swap = [[0, 1, 0, 0, 0], [1, 0, 0, 0, 0], [0, 0, 1, 0, 0],
            [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]
    path = tmp_path / "beta.json"
    path.write_text(json.dumps({"matrix": swap}))
    assert main(["twist", "albert5", "--by", str(path)]) == 3
    assert "weak morphism" in capsys.readouterr().err


def test_check_without_decompose_passes_for_nonzero_eps(capsys):
    suites = "axioms,powers,jordan,operators,identities,symbolic"
    assert main(["check", "albert5", "--twist", "2,3,1", "--suites", suites]) == 0
    assert "22/22 checks passed" in capsys.readouterr().out


# -- determinism and the JSON report shape ---------------------------------------


def run_json(argv, capsys):
    rc = main(argv)
    return rc, capsys.readouterr().out


def test_json_reports_are_byte_identical(capsys, monkeypatch):
    argv = ["check", "albert5", "--twist", "2,3,0", "--output", "json"]
    rc1, out1 = run_json(argv, capsys)
    rc2, out2 = run_json(argv, capsys)
    assert rc1 == rc2 == 0
    assert out1 == out2
    monkeypatch.setenv("HOMALT_THREADS", "1")
    rc3, out3 = run_json(argv, capsys)
    assert rc3 == 0 and out3 == out1


def test_json_report_schema(capsys):
    rc, out = run_json(["check", "albert5", "--suites", "axioms,jordan",
                        "--output", "json"], capsys)
    assert rc == 0
    report = json.loads(out)
    assert sorted(report) == ["algebra", "config", "passed", "results"]
    assert report["passed"] is True
    assert report["algebra"]["dim"] == 5
    assert report["algebra"]["basis"] == ["e", "u", "v", "w", "z"]
    assert report["config"]["command"] == "check"
    for row in report["results"]:
        assert sorted(row) == ["law", "lhs", "note", "passed", "rhs",
                               "suite", "timing_ms", "witness"]
        assert row["timing_ms"] is None


def test_failing_json_report_carries_the_witness(capsys):
    rc, out = run_json(["check", BAD, "--suites", "axioms", "--output", "json"], capsys)
    assert rc == 1
    report = json.loads(out)
    assert report["passed"] is False
    failing = [r for r in report["results"] if not r["passed"]]
    assert failing[0]["law"] == "right-hom-alternative"
    assert failing[0]["witness"] == ["0", "0", "0"]


def test_timings_fill_floats(capsys):
    rc, out = run_json(["jordan", "albert5", "--twist", "2,3,0",
                        "--output", "json", "--timings"], capsys)
    assert rc == 0
    for row in json.loads(out)["results"]:
        assert isinstance(row["timing_ms"], float)


# -- constructor commands ---------------------------------------------------------


def test_albert5_stdout_is_the_base_algebra(capsys):
    assert main(["albert5"]) == 0
    A = algebra_from_json(json.loads(capsys.readouterr().out))
    assert same_algebra(A, albert5_base())


def test_albert5_file_output_round_trips(tmp_path):
    path = str(tmp_path / "a.json")
    assert main(["albert5", "--twist", "2,3,5", "-o", path]) == 0
    assert same_algebra(load_algebra(path), albert5_twisted(AlbertParams(2, 3, 5)))


def test_twist_command_matches_the_library(tmp_path):
    params = AlbertParams(2, 3, 0)
    beta = albert5_alpha(params)
    bpath = tmp_path / "beta.json"
    bpath.write_text(json.dumps(
        {"matrix": [[str(v) for v in row] for row in beta.data]}
    ))
    out = str(tmp_path / "twisted.json")
    assert main(["twist", "albert5", "--by", str(bpath), "-o", out]) == 0
    assert same_algebra(load_algebra(out), yau_twist(albert5_base(), beta))
    assert same_algebra(load_algebra(out), albert5_twisted(params))


def test_derive_command_matches_the_library(tmp_path):
    out = str(tmp_path / "derived.json")
    assert main(["derive", "albert5", "--twist", "2,3,0", "--n", "1", "-o", out]) == 0
    want = derived_algebra(albert5_twisted(AlbertParams(2, 3, 0)), 1)
    assert same_algebra(load_algebra(out), want)


def test_plus_command_matches_the_library(tmp_path):
    out = str(tmp_path / "plus.json")
    assert main(["plus", "albert5", "--twist", "2,3,0", "-o", out]) == 0
    want = plus_algebra(albert5_twisted(AlbertParams(2, 3, 0)))
    assert same_algebra(load_algebra(out), want)


# -- single-purpose checkers -------------------------------------------------------


def test_identity_command_proves_the_right_alternative_law(capsys):
    rc = main(["identity", "albert5", "--twist", "2,3,0",
               "--expr", "(= (as x y y) (scale 0 x))"])
    assert rc == 0
    assert "polarized sweep" in capsys.readouterr().out


def test_identity_command_refutes_on_the_bad_algebra(capsys):
    rc = main(["identity", BAD, "--expr", "(= (as x y y) (scale 0 x))"])
    assert rc == 1
    assert "FAIL" in capsys.readouterr().out


def test_identity_command_detects_free_zero(capsys):
    rc = main(["identity", "albert5", "--expr", "(= (mul x y) (mul x y))"])
    assert rc == 0
    assert "normalizes to zero in the free multiplicative Hom-algebra" in capsys.readouterr().out


def test_identity_command_with_explicit_degrees(capsys):
    rc = main(["identity", "albert5", "--twist", "2,3,0", "--output", "json",
               "--expr", "(= (as x y y) (scale 0 x))", "--degrees", "x=1,y=2"])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    assert report["config"]["degrees"] == {"x": 1, "y": 2}
    assert report["passed"] is True


def test_decompose_command_reports_the_parts(capsys):
    assert main(["decompose", "albert5", "--twist", "2,3,0"]) == 0
    out = capsys.readouterr().out
    assert "A_e(alpha) basis [e, u, z]" in out
    assert "A_e(0) basis [v, w]" in out
    assert "all basis elements split" in out


def test_distinguish_command(tmp_path, capsys):
    other = str(tmp_path / "other.json")
    assert main(["albert5", "--twist", "5,7,0", "-o", other]) == 0
    assert main(["distinguish", "albert5", other]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out

    assert main(["distinguish", "albert5", "albert5"]) == 1
    out = capsys.readouterr().out
    assert "inconclusive" in out


def test_symbolic_teichmuller(capsys):
    assert main(["symbolic", "--teichmuller"]) == 0
    out = capsys.readouterr().out
    assert "10 terms → 0" in out
    assert "1/1 checks passed" in out


def test_symbolic_certificates(capsys):
    assert main(["symbolic", "--certificates"]) == 0
    out = capsys.readouterr().out
    assert "certificate:assoc-shift" in out
    assert "6/6 checks passed" in out


def test_symbolic_default_runs_both(capsys):
    assert main(["symbolic"]) == 0
    assert "7/7 checks passed" in capsys.readouterr().out
