"""Command-line interface tests (run in-process via main(argv))."""

from __future__ import annotations

import json

import pytest

from polytutte.cli import (
    EXIT_INPUT,
    EXIT_LIMIT,
    EXIT_OK,
    EXIT_VALIDATION,
    EXIT_VIOLATION,
    main,
)


@pytest.fixture()
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return {
        "scaled": write("scaled.json", {"n": 2, "bases": [[2, 0], [1, 1], [0, 2]]}),
        "pair": write("pair.json", {"n": 2, "bases": [[1, 0], [0, 1]]}),
        "single": write("single.json", {"n": 2, "bases": [[1, 0]]}),
        "u13_rank": write("u13_rank.json", {"n": 3, "f": [0, 1, 1, 1, 1, 1, 1, 1]}),
        "k22": write(
            "k22.json", {"vertices": ["v1", "v2"], "hyperedges": [["v1", "v2"], ["v1", "v2"]]}
        ),
        "bip": write(
            "bip.json",
            {
                "E": ["e1", "e2"],
                "V": ["v1", "v2"],
                "edges": [["e1", "v1"], ["e1", "v2"], ["e2", "v1"], ["e2", "v2"]],
            },
        ),
        "bad_sums": write("bad.json", {"n": 2, "bases": [[1, 0], [0, 2]]}),
        "bad_shape": write("shape.json", {"something": 1}),
        "targets": write(
            "targets.json", {"targets": ["x^2 + 2*x*y + y^2 - x - y", "x^9"]}
        ),
        "dir": tmp_path,
    }


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- tutte ------------------------------------------------------------------------


def test_tutte_both_methods_match(files, capsys):
    code, out, _ = run(capsys, "tutte", files["scaled"], "--method", "both")
    assert code == EXIT_OK
    assert out.count("x^2 + 2*x*y + y^2 - 1") == 2
    assert "MATCH" in out


def test_tutte_on_hypergraph(files, capsys):
    code, out, _ = run(capsys, "tutte", files["k22"])
    assert code == EXIT_OK
    assert out.strip() == "x^2 + 2*x*y + y^2 - x - y"


def test_tutte_on_bipartite_form(files, capsys):
    code, out, _ = run(capsys, "tutte", files["bip"])
    assert code == EXIT_OK
    assert out.strip() == "x^2 + 2*x*y + y^2 - x - y"


def test_tutte_on_rank_table(files, capsys):
    code, out, _ = run(capsys, "tutte", files["u13_rank"], "--method", "direct")
    assert code == EXIT_OK
    assert out.strip() == "x^3 + 3*x^2*y + 3*x*y^2 + y^3 - x^2 - 3*x*y - 2*y^2 + y"


def test_tutte_json_format(files, capsys):
    code, out, _ = run(capsys, "--format", "json", "tutte", files["pair"], "--method", "both")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["match"] is True
    assert payload["tutte"]["dc"]["text"] == "x^2 + 2*x*y + y^2 - x - y"
    assert payload["tutte"]["dc"]["terms"][0] == [2, 0, "1"]


# -- errors -----------------------------------------------------------------------------


def test_validation_error_exit_code(files, capsys):
    code, _, err = run(capsys, "tutte", files["bad_sums"])
    assert code == EXIT_VALIDATION
    assert "category=UnequalSums" in err


def test_bad_shape_exit_code(files, capsys):
    code, _, err = run(capsys, "tutte", files["bad_shape"])
    assert code == EXIT_INPUT
    assert "category=ParseError" in err


def test_missing_file_exit_code(files, capsys):
    code, _, err = run(capsys, "tutte", str(files["dir"] / "absent.json"))
    assert code == EXIT_INPUT


def test_size_limit_exit_code(files, capsys):
    code, _, err = run(capsys, "--max-bases", "1", "tutte", files["u13_rank"])
    assert code == EXIT_LIMIT
    assert "category=SizeLimitExceeded" in err


def test_max_n_guard(files, capsys):
    code, _, err = run(capsys, "--max-n", "1", "tutte", files["pair"])
    assert code == EXIT_VALIDATION


# -- other commands -----------------------------------------------------------------------


def test_validate_summary(files, capsys):
    code, out, _ = run(capsys, "validate", files["k22"])
    assert code == EXIT_OK
    assert "hypergraph" in out and "bases: 2" in out


def test_interior_exterior(files, capsys):
    code, out, _ = run(capsys, "exterior", files["u13_rank"])
    assert code == EXIT_OK and out.strip() == "y^2 + y + 1"
    code, out, _ = run(capsys, "interior", files["u13_rank"])
    assert code == EXIT_OK and out.strip() == "2*x + 1"
    code, out, _ = run(capsys, "interior", files["single"])
    assert code == EXIT_OK and out.strip() == "1"


def test_coeffs_all_match(files, capsys):
    code, out, _ = run(capsys, "coeffs", files["u13_rank"])
    assert code == EXIT_OK
    assert "MISMATCH" not in out


def test_check_properties(files, capsys):
    code, out, _ = run(capsys, "check", files["scaled"])
    assert code == EXIT_OK
    for prop in ("translation", "permutation", "duality", "divisibility", "count", "reversal"):
        assert f"{prop}: OK" in out


def test_check_unknown_property(files, capsys):
    code, _, err = run(capsys, "check", files["scaled"], "--properties", "nope")
    assert code == EXIT_INPUT


def test_monotone_subset(files, capsys):
    code, out, _ = run(capsys, "monotone", files["pair"], files["single"])
    assert code == EXIT_OK
    assert "I: OK" in out and "X: OK" in out


def test_monotone_subset_rejects_non_subset(files, capsys):
    code, out, _ = run(capsys, "monotone", files["single"], files["pair"])
    assert code == EXIT_VIOLATION
    assert "not a subset" in out


def test_monotone_minor(files, capsys):
    code, out, _ = run(
        capsys, "monotone", files["scaled"], "--relation", "minor", "--delete", "2"
    )
    assert code == EXIT_OK
    assert "I: OK" in out and "X: OK" in out


def test_connectivity_table(files, capsys):
    code, out, _ = run(capsys, "connectivity", files["k22"])
    assert code == EXIT_OK
    assert "k_max = 1" in out
    assert "y^0: 1 = 1" in out and "y^1: 1 = 1" in out


def test_search_reports_matches_and_misses(files, capsys):
    code, out, _ = run(
        capsys, "search", "--targets", files["targets"], "--n", "2", "--max-rank", "2"
    )
    assert code == EXIT_OK
    assert "target 0" in out and "matches" in out
    assert "target 1" in out and "no match" in out


def test_matroid_form(files, capsys):
    code, out, _ = run(capsys, "matroid-form", files["pair"])
    assert code == EXIT_OK
    assert out.strip() == "x + y"


def test_matroid_form_custom_rank(files, capsys):
    code, out, _ = run(capsys, "--format", "json", "matroid-form", files["pair"], "--rank", "4")
    assert code == EXIT_OK
    assert json.loads(out)["rank"] == 4


# -- determinism -------------------------------------------------------------------------------


def test_output_identical_across_jobs(files, capsys):
    _, out1, _ = run(capsys, "--jobs", "1", "tutte", files["scaled"], "--method", "both")
    _, out2, _ = run(capsys, "--jobs", "8", "tutte", files["scaled"], "--method", "both")
    assert out1 == out2
    _, out3, _ = run(capsys, "--jobs", "3", "coeffs", files["u13_rank"])
    _, out4, _ = run(capsys, "--jobs", "1", "coeffs", files["u13_rank"])
    assert out3 == out4


def test_check_deterministic_for_seed(files, capsys):
    _, out1, _ = run(capsys, "--seed", "7", "check", files["scaled"])
    _, out2, _ = run(capsys, "--seed", "7", "check", files["scaled"])
    assert out1 == out2
