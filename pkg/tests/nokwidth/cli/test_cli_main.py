import json

import pytest


def _run(capsys, *argv):
    from nokwidth.cli.main import main

    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_roots(capsys):
    code, doc = _run(capsys, "roots", "--type", "G", "--rank", "2")
    assert code == 0
    assert doc["command"] == "roots"
    assert doc["input"] == {"type": "G", "rank": 2}
    out = doc["output"]
    assert out["cartan_type"] == "G2"
    assert out["count"] == 6
    assert out["positive_roots"][-1] == [3, 2]
    assert out["labels"][-1] == "3a1+2a2"
    assert out["coroot_pairings"][2] == [1, 3]
    assert "timing" not in doc


def test_invalid_type_exits_with_input_error(capsys):
    code, doc = _run(capsys, "roots", "--type", "D", "--rank", "3")
    assert code == 2
    assert doc["error"]["type"] == "InvalidType"
    assert doc["error"]["exit_code"] == 2
    assert "output" not in doc


def test_argparse_errors_exit_with_two():
    from nokwidth.cli.main import main

    with pytest.raises(SystemExit) as exc:
        main(["width", "--type", "A"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv,width",
    [
        (("--type", "A", "--rank", "2", "--lambda", "1,1"), 1),
        (("--type", "A", "--rank", "2", "--lambda", "1/2,1/2"), "1/2"),
        (("--type", "A", "--rank", "3", "--lambda", "1,2,1"), 1),
        (("--type", "B", "--rank", "2", "--lambda", "0,3"), 3),
        (("--type", "A", "--rank", "2", "--epsilon", "2,1,0"), 1),
    ],
)
def test_width(capsys, argv, width):
    code, doc = _run(capsys, "width", *argv)
    assert code == 0
    assert doc["output"]["width"] == width


def test_width_rejects_bad_weights(capsys):
    code, doc = _run(capsys, "width", "--type", "A", "--rank", "2", "--lambda", "0,0")
    assert code == 2
    assert doc["error"]["type"] == "ZeroWeight"

    code, doc = _run(capsys, "width", "--type", "A", "--rank", "2", "--lambda", "1,-1")
    assert code == 2
    assert doc["error"]["type"] == "NotDominant"

    code, doc = _run(capsys, "width", "--type", "B", "--rank", "2", "--epsilon", "1,0,0")
    assert code == 2


def test_essential_sets(capsys):
    code, doc = _run(capsys, "essential", "--type", "A", "--rank", "1", "--lambda", "3")
    assert code == 0
    assert doc["output"]["tuples"] == [[0], [1], [2], [3]]

    code, doc = _run(capsys, "essential", "--type", "A", "--rank", "2", "--lambda", "1,1")
    out = doc["output"]
    assert out["cardinality"] == 8
    assert out["matches_weyl_dim"]
    assert out["enumeration"]["provenance"] == "good"

    code, doc = _run(
        capsys, "essential", "--type", "A", "--rank", "2", "--lambda", "1,1", "--word", "1,2,1"
    )
    assert code == 0
    assert doc["output"]["enumeration"]["word"] == [1, 2, 1]
    assert doc["output"]["cardinality"] == 8


def test_essential_respects_max_dim(capsys):
    code, doc = _run(
        capsys, "essential", "--type", "A", "--rank", "2", "--lambda", "2,2", "--max-dim", "10"
    )
    assert code == 2
    assert doc["error"]["type"] == "DimensionLimitExceeded"


def test_ordering_word_needs_a_word(capsys):
    code, doc = _run(
        capsys, "essential", "--type", "A", "--rank", "2", "--lambda", "1,1", "--ordering", "word"
    )
    assert code == 2


def test_gamma(capsys):
    code, doc = _run(
        capsys, "gamma", "--type", "A", "--rank", "1", "--lambda", "1", "--level", "2"
    )
    assert code == 0
    assert doc["output"]["points"] == [[2, [0]], [2, [1]], [2, [2]]]
    assert doc["output"]["cardinality"] == 3


def test_verify_all(capsys):
    code, doc = _run(capsys, "verify", "--type", "A", "--rank", "2", "--lambda", "1,1")
    assert code == 0
    out = doc["output"]
    assert out["passed"] is True
    assert set(out["constructions"]) == {"good", "convex", "telescope"}
    assert out["constructions"]["good"]["vertices"][0] == {"tuple": [0, 0, 0], "essential": True}


def test_verify_single_construction_input_errors(capsys):
    code, doc = _run(
        capsys, "verify", "--type", "G", "--rank", "2", "--lambda", "1,1",
        "--construction", "telescope",
    )
    assert code == 2
    assert doc["error"]["type"] == "UnsupportedType"

    code, doc = _run(
        capsys, "verify", "--type", "B", "--rank", "2", "--lambda", "1,0",
        "--construction", "convex",
    )
    assert code == 2
    assert doc["error"]["type"] == "NotRegular"


@pytest.mark.parametrize("construction", ["good", "convex", "telescope", "all"])
def test_verify_normalizes_rational_weights(capsys, construction):
    code, doc = _run(
        capsys, "verify", "--type", "A", "--rank", "2", "--lambda", "1/2,1/2",
        "--construction", construction,
    )
    assert code == 0
    out = doc["output"]
    assert out["lambda_integral"] == [1, 1]
    assert out["ell"] == 2
    assert out["width"] == "1/2"
    assert out["k_all_coroots"] == out["k_phi_p"] == 1
    assert out["rho_p_decomposition"]["k"] == 1
    assert out["passed"] is True


def test_integrality_errors_show_rationals(capsys):
    code, doc = _run(capsys, "essential", "--type", "A", "--rank", "2", "--lambda", "1/2,1/2")
    assert code == 2
    assert doc["error"]["type"] == "NotIntegral"
    assert "(1/2,1/2)" in doc["error"]["message"]

def test_documents_are_deterministic(capsys):
    from nokwidth.cli.main import main

    argv = ["verify", "--type", "A", "--rank", "2", "--lambda", "1,1"]
    main(argv + ["--jobs", "1"])
    first = capsys.readouterr().out
    main(argv + ["--jobs", "2"])
    second = capsys.readouterr().out
    assert first == second


def test_timing_and_output_file(capsys, tmp_path):
    out = tmp_path / "width.json"
    code, doc = _run(
        capsys, "width", "--type", "A", "--rank", "2", "--lambda", "1,1",
        "--timing", "--output", str(out),
    )
    assert code == 0
    assert doc["timing"]["seconds"] >= 0
    assert json.loads(out.read_text(encoding="utf-8")) == doc


def test_verify_help_explains_the_dimension_guard(capsys):
    from nokwidth.cli.main import main

    with pytest.raises(SystemExit) as exc:
        main(["verify", "--help"])
    assert exc.value.code == 0
    assert "does not apply" in " ".join(capsys.readouterr().out.split())
