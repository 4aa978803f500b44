"""Command-line interface: payloads, formats, exit codes, determinism."""

import json

import pytest

from dworklab.cli import main

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 0, err
    return json.loads(out)


def walk_numbers(node):
    if isinstance(node, dict):
        for v in node.values():
            yield from walk_numbers(v)
    elif isinstance(node, list):
        for v in node:
            yield from walk_numbers(v)
    elif isinstance(node, (int, float)) and not isinstance(node, bool):
        yield node


class TestClasses:
    def test_count(self, capsys):
        doc = run_json(["classes", "--N", "5"], capsys)
        assert doc["payload"]["count"] == 125
        assert len(doc["payload"]["classes"]) == 125
        assert doc["W"] == [1, 1, 1, 1, 1]

    def test_orbits(self, capsys):
        doc = run_json(["classes", "--N", "5", "--orbits"], capsys)
        orbits = doc["payload"]["orbits"]
        assert doc["payload"]["orbit_count"] == len(orbits) == 6
        assert sum(o["size"] for o in orbits) == 125

    def test_bad_weight_sum_exits_2(self, capsys):
        code, _, err = run(["classes", "--N", "5", "--W", "1,1,1,1,2"], capsys)
        assert code == 2
        assert "sum" in err

    def test_orbits_need_classical(self, capsys):
        code, _, _ = run(["classes", "--N", "4", "--W", "2,2,0,0", "--orbits"], capsys)
        assert code == 2

    def test_general_weight_count(self, capsys):
        doc = run_json(["classes", "--N", "4", "--W", "2,2,0,0"], capsys)
        assert doc["payload"]["count"] == 32


class TestHodge:
    def test_single_class(self, capsys):
        doc = run_json(["hodge", "--N", "5", "--v", "0,0,1,1,3"], capsys)
        p = doc["payload"]
        assert p["dimension"] == 2
        assert p["weights"] == [1, 2]
        assert p["totally_nonzero"] == [[1, 1, 2, 2, 4], [3, 3, 4, 4, 1]]
        assert len(p["coset"]) == 5

    def test_table_has_eight_rows(self, capsys):
        doc = run_json(["hodge", "--N", "5"], capsys)
        rows = doc["payload"]["rows"]
        assert len(rows) == 8
        assert doc["payload"]["total_dimension"] == 204
        by_rep = {tuple(r["representative"]): r for r in rows}
        assert by_rep[(0, 0, 0, 0, 0)]["weights"] == [0, 1, 2, 3]
        assert by_rep[(0, 1, 2, 3, 4)]["dimension"] == 0
        assert by_rep[(0, 0, 2, 4, 4)]["totally_nonzero"] == [[2, 2, 4, 1, 1], [4, 4, 1, 3, 3]]

    def test_nonzero_sum_vector_exits_2(self, capsys):
        code, _, err = run(["hodge", "--N", "5", "--v", "0,0,1,1,1"], capsys)
        assert code == 2

    def test_nonclassical_table_lists_both_semantics(self, capsys):
        doc = run_json(["hodge", "--N", "4", "--W", "2,2,0,0"], capsys)
        rows = doc["payload"]["rows"]
        assert len(rows) == 32
        assert all("weights_indexed" in r for r in rows)


class TestWitness:
    def test_n6_classical(self, capsys):
        doc = run_json(["witness", "--N", "6"], capsys)
        p = doc["payload"]
        assert p["constructed"]["class"] == [0, 0, 0, 2, 2, 2]
        assert p["constructed"]["multiplicity"] >= 2
        assert p["agreement"] == 1

    def test_n5_classical_none_found(self, capsys):
        doc = run_json(["witness", "--N", "5"], capsys)
        p = doc["payload"]
        assert p["constructed"] is None
        assert p["scan"]["repeated_class_count"] == 0
        assert any("no repeated-weight class exists" in w for w in doc["warnings"])

    def test_n7_classical_scan_finds_classes(self, capsys):
        # no construction exists for N=7, but the scan does find witnesses
        doc = run_json(["witness", "--N", "7"], capsys)
        p = doc["payload"]
        assert p["constructed"] is None
        assert p["scan"]["repeated_class_count"] > 0

    def test_constructed_general_weight(self, capsys):
        doc = run_json(["witness", "--N", "6", "--W", "3,3,0,0,0,0"], capsys)
        p = doc["payload"]
        assert p["constructed"]["class"] == [1, 1, 1, 1, 1, 1]
        assert p["agreement"] == 1

    def test_degenerate_weight_falls_back_to_scan(self, capsys):
        doc = run_json(["witness", "--N", "5", "--W", "0,2,1,1,1"], capsys)
        p = doc["payload"]
        assert p["constructed"] is None
        assert "pivot" in p["construction_error"]
        assert p["scan"]["repeated_class_count"] > 0


class TestCount:
    def test_singular_t_exits_3(self, capsys):
        code, _, err = run(["count", "--N", "5", "--p", "11", "--t", "1"], capsys)
        assert code == 3
        assert "smooth" in err

    def test_all_fifth_roots_exit_3(self, capsys):
        for t in (1, 3, 4, 5, 9):
            code, _, _ = run(["count", "--N", "5", "--p", "11", "--t", str(t)], capsys)
            assert code == 3, t

    def test_bad_characteristic_exits_3(self, capsys):
        code, _, _ = run(["count", "--N", "5", "--p", "5", "--t", "2"], capsys)
        assert code == 3

    def test_budget_exits_4(self, capsys):
        code, _, err = run(
            ["count", "--N", "5", "--p", "101", "--t", "2", "--budget", "1000"], capsys
        )
        assert code == 4
        assert "budget" in err

    def test_both_strategies(self, capsys):
        doc = run_json(["count", "--N", "5", "--p", "11", "--t", "2", "--strategy", "both"], capsys)
        fibers = doc["payload"]["fibers"]
        assert len(fibers) == 2
        assert fibers[0]["projective_count"] == fibers[1]["projective_count"]
        assert {f["strategy"] for f in fibers} == {"naive", "fast"}
        assert doc["payload"]["strategies_agree"] == 1
        for f in fibers:
            assert f["lefschetz_identity_ok"] == 1
            assert f["weil_bound_ok"] == 1

    def test_tower(self, capsys):
        doc = run_json(["count", "--N", "5", "--p", "3", "--t", "2", "--tower", "2"], capsys)
        fibers = doc["payload"]["fibers"]
        assert [f["q"] for f in fibers] == [3, 9]
        assert all(f["lefschetz_identity_ok"] == 1 for f in fibers)

    def test_extension_coefficients(self, capsys):
        doc = run_json(["count", "--N", "5", "--p", "3", "--m", "2", "--t", "2,1"], capsys)
        fiber = doc["payload"]["fibers"][0]
        assert fiber["q"] == 9 and fiber["t"] == 5  # 2 + 1*3

    def test_workers_flag(self, capsys):
        doc1 = run_json(["count", "--N", "5", "--p", "11", "--t", "2"], capsys)
        doc2 = run_json(["count", "--N", "5", "--p", "11", "--t", "2", "--workers", "3"], capsys)
        assert doc1["payload"]["fibers"][0]["projective_count"] == \
            doc2["payload"]["fibers"][0]["projective_count"]


class TestReport:
    def test_document(self, capsys):
        doc = run_json(["report"], capsys)
        p = doc["payload"]
        assert p["class_count"] == 125
        assert p["table_row_count"] == 8
        assert p["orbit_count"] == 6
        assert p["total_dimension"] == 204
        assert p["dimension_census"] == {"0": 24, "2": 100, "4": 1}
        by_rep = {tuple(r["representative"]): r for r in p["class_table"]}
        assert by_rep[(0, 0, 1, 1, 3)]["dual"] == [0, 0, 2, 4, 4]
        assert by_rep[(0, 0, 1, 2, 2)]["dual"] == [0, 0, 3, 3, 4]
        assert by_rep[(0, 0, 0, 1, 4)]["dual"] == [0, 0, 0, 1, 4]
        assert [[0, 0, 1, 1, 3], [0, 0, 2, 4, 4]] in p["duality_pairs"]


class TestInterface:
    def test_byte_identical_reruns(self, capsys):
        for argv in (
            ["report"],
            ["classes", "--N", "5", "--orbits"],
            ["witness", "--N", "6"],
            ["count", "--N", "5", "--p", "11", "--t", "2", "--strategy", "both"],
        ):
            _, out1, _ = run(argv, capsys)
            _, out2, _ = run(argv, capsys)
            assert out1.encode() == out2.encode(), argv

    def test_payload_numbers_are_integers(self, capsys):
        for argv in (
            ["report"],
            ["hodge", "--N", "5"],
            ["witness", "--N", "6", "--W", "3,3,0,0,0,0"],
            ["count", "--N", "5", "--p", "11", "--t", "2", "--strategy", "both"],
        ):
            doc = run_json(argv, capsys)
            for value in walk_numbers(doc["payload"]):
                assert isinstance(value, int), (argv, value)

    def test_text_format(self, capsys):
        code, out, _ = run(["hodge", "--N", "5", "--format", "text"], capsys)
        assert code == 0
        assert "total dimension 204" in out
        code, out, _ = run(["report", "--format", "text"], capsys)
        assert code == 0 and "6 orbits" in out

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "doc.json"
        code, out, err = run(["hodge", "--N", "5", "--out", str(target)], capsys)
        assert code == 0
        assert out == ""
        doc = json.loads(target.read_text())
        assert doc["payload"]["total_dimension"] == 204

    def test_missing_subcommand_exits_2(self, capsys):
        assert run([], capsys)[0] == 2

    def test_unknown_flag_exits_2(self, capsys):
        assert run(["classes", "--N", "5", "--frobnicate"], capsys)[0] == 2

    def test_argv_echoed(self, capsys):
        doc = run_json(["classes", "--N", "3"], capsys)
        assert doc["argv"] == ["classes", "--N", "3"]
        assert doc["schema_version"] == 1

    @pytest.mark.skipif(jsonschema is None, reason="jsonschema not installed")
    def test_documents_validate_against_schema(self, capsys):
        import importlib.resources as resources

        schema = json.loads(
            resources.files("dworklab").joinpath("report_schema.json").read_text()
        )
        for argv in (
            ["classes", "--N", "5", "--orbits"],
            ["classes", "--N", "4", "--W", "2,2,0,0"],
            ["hodge", "--N", "5"],
            ["hodge", "--N", "5", "--v", "0,0,1,1,3"],
            ["witness", "--N", "6"],
            ["witness", "--N", "5"],
            ["count", "--N", "5", "--p", "11", "--t", "2", "--strategy", "both"],
            ["count", "--N", "5", "--p", "3", "--t", "2", "--tower", "2"],
            ["report"],
        ):
            doc = run_json(argv, capsys)
            jsonschema.validate(doc, schema)
