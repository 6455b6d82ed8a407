import json

import pytest

from app.cli import main
from app.cli.commands import EXIT_ERROR, EXIT_FAIL, EXIT_OK


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


class TestValidate:
    def test_valid_corpus_file(self, capsys, corpus_dir):
        code, report, _ = run_json(capsys, "validate", str(corpus_dir / "z2.json"))
        assert code == EXIT_OK
        assert report["valid"] is True
        assert report["is_group"] is True
        assert report["zero"] is None

    def test_not_regular(self, capsys, fixtures_dir):
        code, report, err = run_json(capsys, "validate", str(fixtures_dir / "not_regular.json"))
        assert code == EXIT_FAIL
        assert report["error"] == "NotRegular"
        assert report["witness"] == [1]
        assert "NotRegular: element 1" in err

    def test_not_associative(self, capsys, fixtures_dir):
        code, report, _ = run_json(capsys, "validate", str(fixtures_dir / "not_associative.json"))
        assert code == EXIT_FAIL
        assert report["error"] == "NotAssociative"

    def test_ragged_is_operational_failure(self, capsys, fixtures_dir):
        code, out, err = run(capsys, "validate", str(fixtures_dir / "ragged.json"))
        assert code == EXIT_ERROR
        assert out == ""
        assert err.startswith("ParseError:")

    def test_out_of_range_entry(self, capsys, fixtures_dir):
        code, _, err = run(capsys, "validate", str(fixtures_dir / "out_of_range.json"))
        assert code == EXIT_ERROR
        assert "out of range" in err

    def test_non_integer_entries_are_not_truncated(self, capsys, fixtures_dir):
        code, out, err = run(capsys, "validate", str(fixtures_dir / "non_integer.json"))
        assert code == EXIT_ERROR
        assert out == ""
        assert err.startswith("ParseError:")

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "validate", str(tmp_path / "nope.json"))
        assert code == EXIT_ERROR
        assert "ParseError" in err


class TestBuild:
    def test_chain(self, capsys):
        code, payload, _ = run_json(capsys, "build", "chain", "5")
        assert code == EXIT_OK
        assert payload["name"] == "chain5"
        assert payload["table"][4] == [4] * 5

    def test_restricted(self, capsys):
        code, payload, _ = run_json(capsys, "build", "restricted", "Z2")
        assert code == EXIT_OK
        assert payload["name"] == "Z2_r"
        assert payload["table"][0][1] == 1
        assert payload["table"][2] == [2, 2, 2]

    def test_unitization_of_a_monoid_is_itself(self, capsys):
        code, payload, _ = run_json(capsys, "build", "unitization", "chain2")
        assert code == EXIT_OK
        assert payload["name"] == "chain2"

    def test_unitization_adds_identity(self, capsys, tmp_path):
        path = tmp_path / "chain2_r.json"
        assert main(["build", "restricted", "chain2", "--format", "json", "--out", str(path)]) == EXIT_OK
        capsys.readouterr()
        code, payload, _ = run_json(capsys, "build", "unitization", str(path))
        assert code == EXIT_OK
        assert payload["name"] == "chain2_r^1"
        assert payload["table"][3] == [0, 1, 2, 3]
        assert [row[3] for row in payload["table"]] == [0, 1, 2, 3]
        code, report, _ = run_json(capsys, "validate", str(path))
        assert report["identity"] is None

    def test_inverse_monoid(self, capsys):
        _, payload, _ = run_json(capsys, "build", "inverse-monoid", "3")
        assert len(payload["table"]) == 34

    def test_product_of_files(self, capsys, corpus_dir):
        code, payload, _ = run_json(
            capsys, "build", "product", str(corpus_dir / "z2.json"), "chain2"
        )
        assert code == EXIT_OK
        assert payload["name"] == "Z2xchain2"
        assert payload["table"] == json.loads((corpus_dir / "z2xchain2.json").read_text())["table"]

    def test_output_file_validates(self, capsys, tmp_path):
        path = tmp_path / "s3.json"
        assert main(["build", "symmetric", "3", "--format", "json", "--out", str(path)]) == EXIT_OK
        assert capsys.readouterr().out == ""
        code, report, _ = run_json(capsys, "validate", str(path))
        assert code == EXIT_OK
        assert report["n"] == 6

    @pytest.mark.parametrize(
        "argv",
        [
            ["build", "chain"],
            ["build", "chain", "x"],
            ["build", "product", "Z2"],
            ["build", "inverse-monoid", "9"],
            ["build", "cyclic", "0"],
        ],
    )
    def test_bad_params(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == EXIT_ERROR
        assert err


class TestCheck:
    def test_rpd_passes(self, capsys, tmp_path):
        path = tmp_path / "ones.json"
        path.write_text(json.dumps({"semigroup": "chain5", "values": [1] * 5}))
        code, report, _ = run_json(capsys, "check", "rpd", "chain5", str(path))
        assert code == EXIT_OK
        assert report["verdict"] is True
        assert "witness" not in report

    def test_pd_fails_with_witness(self, capsys, fixtures_dir):
        code, report, _ = run_json(
            capsys, "check", "pd", "chain2", str(fixtures_dir / "chain2_u12.json")
        )
        assert code == EXIT_FAIL
        assert report["verdict"] is False
        assert report["violation"] == "negative_eigenvalue"
        assert len(report["witness"]) == 2

    def test_extendible_reports_constant(self, capsys, tmp_path):
        path = tmp_path / "u.json"
        path.write_text(json.dumps({"values": [1, 1]}))
        code, report, _ = run_json(capsys, "check", "extendible", "chain2", str(path))
        assert code == EXIT_OK
        assert report["constant"] == pytest.approx(2.0)

    def test_functional(self, capsys, fixtures_dir):
        code, report, _ = run_json(
            capsys, "check", "functional", "chain2", str(fixtures_dir / "chain2_u12.json"),
            "--trials", "20", "--seed", "1",
        )
        assert code == EXIT_OK
        assert report["check"] == "functional"

    def test_semigroup_mismatch(self, capsys, fixtures_dir):
        code, _, err = run(capsys, "check", "pd", "Z2", str(fixtures_dir / "chain2_u12.json"))
        assert code == EXIT_ERROR
        assert err.startswith("BaseMismatch:")

    def test_wrong_length(self, capsys, fixtures_dir):
        code, _, err = run(capsys, "check", "rpd", "Z2", str(fixtures_dir / "z2_wrong_length.json"))
        assert code == EXIT_ERROR
        assert err.startswith("DimensionMismatch:")

    def test_non_finite_values(self, capsys, fixtures_dir):
        code, _, err = run(capsys, "check", "pd", "Z2", str(fixtures_dir / "z2_nan.json"))
        assert code == EXIT_ERROR
        assert err.startswith("ParseError:")

    def test_unknown_semigroup(self, capsys, fixtures_dir):
        code, _, err = run(capsys, "check", "pd", "Q7", str(fixtures_dir / "chain2_u12.json"))
        assert code == EXIT_ERROR
        assert "no such file or builtin" in err

    def test_text_format(self, capsys, fixtures_dir):
        code, out, _ = run(
            capsys, "check", "rpd", "chain2", str(fixtures_dir / "chain2_u12.json"), "--format", "text"
        )
        assert code == EXIT_OK
        assert "verdict: yes" in out


class TestFactorize:
    def test_z2(self, capsys, fixtures_dir):
        code, payload, _ = run_json(capsys, "factorize", "Z2", str(fixtures_dir / "z2_phi20.json"))
        assert code == EXIT_OK
        assert payload["semigroup"] == "Z2"
        assert payload["values"][0][0] == pytest.approx(2 ** 0.5)
        assert payload["values"][1][0] == pytest.approx(0.0, abs=1e-12)
        assert payload["reconstruction_error"] <= 1e-12

    def test_chain2_from_file(self, capsys, corpus_dir, fixtures_dir):
        code, payload, _ = run_json(
            capsys, "factorize", str(corpus_dir / "chain2.json"), str(fixtures_dir / "chain2_phi41.json")
        )
        assert code == EXIT_OK
        assert [v[0] for v in payload["values"]] == pytest.approx([2.0, 1.0])

    def test_not_rpd(self, capsys, tmp_path):
        path = tmp_path / "neg.json"
        path.write_text(json.dumps({"semigroup": "chain2", "values": [-1, 0]}))
        code, report, err = run_json(capsys, "factorize", "chain2", str(path))
        assert code == EXIT_FAIL
        assert report["verdict"] is False
        assert err.startswith("NotRPD:")


class TestRandom:
    def test_seeded_output_is_stable_and_checks(self, capsys, tmp_path):
        path = tmp_path / "phi.json"
        assert main(["random", "I2", "--seed", "7", "--format", "json", "--out", str(path)]) == EXIT_OK
        first = path.read_text()
        assert main(["random", "I2", "--seed", "7", "--format", "json", "--out", str(path)]) == EXIT_OK
        assert path.read_text() == first
        capsys.readouterr()
        code, report, _ = run_json(capsys, "check", "extendible", "I2", str(path))
        assert code == EXIT_OK
        assert report["constant"] >= 0


class TestSuite:
    def test_small_run_passes(self, capsys):
        code, report, _ = run_json(
            capsys, "suite", "--corpus", "chain2", "Z2", "--trials", "3", "--seed", "5",
            "--property", "semigroup_core.restricted_star_agrees",
            "--property", "positive_definite.factorization_roundtrip",
        )
        assert code == EXIT_OK
        assert report["summary"]["all_passed"] is True
        assert set(report["results"]) == {"chain2", "Z2"}
        assert set(report["results"]["Z2"]["properties"]) == {
            "semigroup_core.restricted_star_agrees",
            "positive_definite.factorization_roundtrip",
        }

    def test_invalid_corpus_entry_fails_the_run(self, capsys, fixtures_dir):
        code, report, _ = run_json(
            capsys, "suite", "--corpus", "Z2", str(fixtures_dir / "not_regular.json"),
            "--trials", "2", "--property", "function_algebra.identity_law",
        )
        assert code == EXIT_FAIL
        assert report["summary"]["invalid_entries"] == 1
        assert report["results"]["Z2"]["passed"] is True

    def test_unknown_property(self, capsys):
        code, _, err = run(capsys, "suite", "--property", "nope")
        assert code == EXIT_ERROR
        assert err.startswith("BadParams:")

    def test_zero_trials(self, capsys):
        code, _, err = run(capsys, "suite", "--trials", "0")
        assert code == EXIT_ERROR
        assert "trials" in err
