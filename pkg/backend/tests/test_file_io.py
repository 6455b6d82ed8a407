import json

import numpy as np
import pytest
from pydantic import ValidationError

from app.adapters import BuiltinSource, FileSource, load_all
from app.adapters.base_adapter import describe_entry
from app.adapters.builtin_adapter import is_builtin_name, resolve_builtin
from app.adapters.file_adapter import (
    dump_json,
    function_to_file,
    read_function_file,
    read_json,
    read_representation_file,
    read_semigroup_file,
    representation_to_file,
    semigroup_to_file,
    write_json,
)
from app.errors import (
    BadParamsError,
    BaseMismatchError,
    DimensionMismatchError,
    NotRegularError,
    ParseError,
)
from app.schemas import FunctionFile, RepresentationFile, SemigroupFile
from app.services.constructors import chain_semilattice, cyclic_group, direct_product
from app.services.function_algebra import from_values
from app.services.representations import lambda_r


class TestSchemas:
    def test_ragged_table(self):
        with pytest.raises(ValidationError, match="row 1 has 1 entries"):
            SemigroupFile(table=[[0, 1], [1]])

    def test_out_of_range_table(self):
        with pytest.raises(ValidationError, match="out of range"):
            SemigroupFile(table=[[0, 5], [1, 0]])

    def test_empty_table(self):
        with pytest.raises(ValidationError, match="empty"):
            SemigroupFile(table=[])

    def test_table_entries_must_be_integers(self):
        with pytest.raises(ValidationError):
            SemigroupFile(table=[[0, 1.9], [1, 0.2]])
        with pytest.raises(ValidationError):
            SemigroupFile(table=[[0, 1], [1, 0]], star=[0.0, 1.0])
        assert SemigroupFile(table=[[0, 1], [1, 0]]).table == [[0, 1], [1, 0]]

    def test_names_and_star_lengths(self):
        with pytest.raises(ValidationError, match="element names"):
            SemigroupFile(table=[[0]], elements=["a", "b"])
        with pytest.raises(ValidationError, match="star has"):
            SemigroupFile(table=[[0]], star=[0, 0])

    def test_function_entries(self):
        assert FunctionFile(values=[1, [0, 2]]).values == [1, [0, 2]]
        with pytest.raises(ValidationError):
            FunctionFile(values=[[1, 2, 3]])
        with pytest.raises(ValidationError, match="finite"):
            FunctionFile(values=[float("nan"), 1])
        with pytest.raises(ValidationError, match="finite"):
            FunctionFile(values=[[0, float("inf")]])

    def test_representation_shape(self):
        with pytest.raises(ValidationError, match="not 2x2"):
            RepresentationFile(dim=2, matrices=[[[1, 0]]])


class TestSemigroupFiles:
    @pytest.mark.parametrize(
        "file_name, built",
        [
            ("chain2.json", chain_semilattice(2)),
            ("chain3.json", chain_semilattice(3)),
            ("z2.json", cyclic_group(2)),
            ("z3.json", cyclic_group(3)),
            ("z2xchain2.json", direct_product(cyclic_group(2), chain_semilattice(2))),
        ],
    )
    def test_corpus_matches_builders(self, corpus_dir, file_name, built):
        S = read_semigroup_file(corpus_dir / file_name)
        assert S == built
        assert S.label == built.label

    def test_written_file_reads_back(self, tmp_path, i2):
        path = tmp_path / "i2.json"
        write_json(semigroup_to_file(i2), path)
        assert read_semigroup_file(path) == i2

    def test_name_defaults_to_stem(self, tmp_path):
        path = tmp_path / "tiny.json"
        path.write_text('{"table": [[0]]}')
        assert read_semigroup_file(path).label == "tiny"

    def test_validation_errors_propagate(self, fixtures_dir):
        with pytest.raises(NotRegularError):
            read_semigroup_file(fixtures_dir / "not_regular.json")

    def test_malformed_input_is_parse_error(self, fixtures_dir, tmp_path):
        with pytest.raises(ParseError, match="table"):
            read_semigroup_file(fixtures_dir / "ragged.json")
        with pytest.raises(ParseError, match="cannot read"):
            read_json(tmp_path / "missing.json")
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        with pytest.raises(ParseError, match="invalid JSON"):
            read_json(bad)

    def test_dump_is_sorted_and_terminated(self):
        text = dump_json({"b": 1, "a": [1, 2]})
        assert text.endswith("\n")
        assert text.index('"a"') < text.index('"b"')


class TestFunctionFiles:
    def test_reads_pairs_and_reals(self, fixtures_dir, chain2):
        assert read_function_file(fixtures_dir / "chain2_phi41.json", chain2).values.tolist() == [4, 1]
        assert read_function_file(fixtures_dir / "chain2_u12.json", chain2).values.tolist() == [1, 2]

    def test_declared_semigroup_must_match(self, fixtures_dir, z2):
        with pytest.raises(BaseMismatchError):
            read_function_file(fixtures_dir / "chain2_u12.json", z2)

    def test_non_finite_values_are_parse_errors(self, fixtures_dir, z2):
        with pytest.raises(ParseError, match="finite"):
            read_function_file(fixtures_dir / "z2_nan.json", z2)

    def test_length_must_match(self, fixtures_dir, z2):
        with pytest.raises(DimensionMismatchError):
            read_function_file(fixtures_dir / "z2_wrong_length.json", z2)

    def test_written_function_reads_back(self, tmp_path, z3):
        u = from_values(z3, [1 + 2j, -0.5, 3j])
        path = tmp_path / "u.json"
        write_json(function_to_file(u), path)
        assert json.loads(path.read_text())["semigroup"] == "Z3"
        assert read_function_file(path, z3).allclose(u)


class TestRepresentationFiles:
    def test_lambda_r_reads_back(self, tmp_path, i2):
        rep = lambda_r(i2)
        path = tmp_path / "lambda.json"
        write_json(representation_to_file(rep), path)
        back = read_representation_file(path, i2)
        assert back.dim == i2.n
        assert np.array_equal(back.matrices, rep.matrices)

    def test_declared_semigroup_must_match(self, tmp_path, z2, z3):
        path = tmp_path / "rep.json"
        write_json(representation_to_file(lambda_r(z2)), path)
        with pytest.raises(BaseMismatchError):
            read_representation_file(path, z3)


class TestCorpusSources:
    def test_directory_expands_in_name_order(self, corpus_dir):
        entries = FileSource([corpus_dir]).load()
        assert [e.label for e in entries] == ["chain2", "chain3", "Z2", "Z2xchain2", "Z3"]
        assert all(e.ok for e in entries)

    def test_bad_entry_does_not_stop_the_rest(self, corpus_dir, fixtures_dir):
        entries = FileSource([fixtures_dir / "not_regular.json", corpus_dir / "z2.json"]).load()
        assert [e.ok for e in entries] == [False, True]
        assert describe_entry(entries[0])["error"] == "NotRegular: element 1"
        assert describe_entry(entries[1]) == {"semigroup": "Z2", "n": 2}

    def test_builtin_names(self):
        assert is_builtin_name("Z3xchain2")
        assert not is_builtin_name("corpus/z2.json")
        assert resolve_builtin("Z3xchain2").n == 6
        with pytest.raises(BadParamsError):
            resolve_builtin("Q4")

    def test_load_all_mixes_sources(self, corpus_dir):
        entries = load_all([BuiltinSource(["Z2", "Q4"]), FileSource([corpus_dir / "z3.json"])])
        assert [e.ok for e in entries] == [True, False, True]
        assert entries[1].label == "Q4"
