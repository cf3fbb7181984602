"""Command-line behavior: formats, exit codes, determinism, fault injection."""

import json
from fractions import Fraction

import pytest

import cpdist.closed_form as cf
from cpdist.cli import main
from cpdist.linalg import RationalMatrix, imat
from cpdist.graphs import TnBook, build_family, all_pairs_distances


def parse_csv(text):
    rows = [
        [Fraction(cell) for cell in line.split(",")]
        for line in text.strip().splitlines()
    ]
    return RationalMatrix.from_rows(rows)


class TestGen:
    def test_butterfly_distance_csv(self, capsys):
        assert main(["gen", "--family", "tn-book", "--n", "3", "--b", "2"]) == 0
        out = capsys.readouterr().out
        assert out == "0,1,2,2,1\n1,0,2,2,1\n2,2,0,1,1\n2,2,1,0,1\n1,1,1,1,0\n"

    def test_byte_identical_reruns(self, capsys):
        argv = ["gen", "--family", "tree", "--n", "9", "--seed", "7", "--kind", "lap"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "k4.csv"
        assert main(["gen", "--family", "k4", "--out", str(target)]) == 0
        assert capsys.readouterr().out == ""
        assert target.read_text() == "0,1,1,1\n1,0,1,1\n1,1,0,1\n1,1,1,0\n"

    def test_rmat_kind(self, capsys):
        assert main(["gen", "--family", "tn", "--n", "4", "--kind", "rmat"]) == 0
        matrix = parse_csv(capsys.readouterr().out)
        assert matrix.data[0][1] == -2  # -(n-2) exchange block

    def test_rmat_needs_fan_family(self, capsys):
        assert main(["gen", "--family", "kmn", "--m", "2", "--n", "3", "--kind", "rmat"]) == 1
        assert "rmat" in capsys.readouterr().err

    def test_fractional_entries_serialize_exactly(self, capsys):
        assert main(["inv", "--family", "tn", "--n", "5"]) == 0
        out = capsys.readouterr().out
        assert "-3/2" in out.splitlines()[0]


class TestDet:
    def test_book_example(self, capsys):
        assert main(["det", "--family", "tn-book", "--n", "5", "--b", "2"]) == 0
        assert capsys.readouterr().out == "formula=64, oracle=64, match=true\n"

    def test_json_payload(self, capsys):
        assert main(["det", "--family", "kmn", "--m", "2", "--n", "3", "--json", "-"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"formula": "-16", "oracle": "-16", "match": True}

    def test_singular_cell_still_matches(self, capsys):
        assert main(["det", "--family", "kmn", "--m", "2", "--n", "2"]) == 0
        assert "formula=0" in capsys.readouterr().out

    def test_tree_and_star(self, capsys):
        assert main(["det", "--family", "tree", "--n", "10", "--seed", "3"]) == 0
        assert "match=true" in capsys.readouterr().out
        assert main(["det", "--family", "star", "--n", "4"]) == 0
        assert "formula=32" in capsys.readouterr().out

    def test_k4(self, capsys):
        assert main(["det", "--family", "k4"]) == 0
        assert "formula=-3" in capsys.readouterr().out


class TestInv:
    def test_book_inverse_roundtrip(self, capsys):
        assert main(["inv", "--family", "tn-book", "--n", "5", "--b", "2"]) == 0
        inverse = parse_csv(capsys.readouterr().out)
        d = all_pairs_distances(build_family(TnBook(5, 2)))
        assert d * inverse == imat(9)

    def test_singular_book_refused(self, capsys):
        assert main(["inv", "--family", "tn-book", "--n", "6", "--b", "2"]) == 2
        err = capsys.readouterr().err
        assert "singular" in err

    def test_singular_bipartite_refused(self, capsys):
        assert main(["inv", "--family", "kmn", "--m", "2", "--n", "2"]) == 2
        assert "singular" in capsys.readouterr().err


class TestVerify:
    def test_recognizer_suite_passes(self, capsys):
        assert main(["verify", "--suite", "recognizer"]) == 0
        out = capsys.readouterr().out
        assert "failed=0" in out

    def test_json_report_schema(self, capsys):
        assert main(["verify", "--suite", "spectra", "--json", "-"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert list(payload) == ["suite", "grid", "passed", "failed", "failures", "wall_time_ms"]
        assert payload["failed"] == 0
        assert payload["passed"] == len(payload["grid"])
        assert payload["failures"] == []

    def test_json_deterministic_modulo_walltime(self, capsys):
        argv = ["verify", "--suite", "dets", "--json", "-"]
        assert main(argv) == 0
        first = json.loads(capsys.readouterr().out)
        assert main(argv) == 0
        second = json.loads(capsys.readouterr().out)
        first.pop("wall_time_ms")
        second.pop("wall_time_ms")
        assert first == second

    def test_json_to_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        assert main(["verify", "--suite", "recognizer", "--json", str(target)]) == 0
        payload = json.loads(target.read_text())
        assert payload["suite"] == "recognizer"
        assert "failed=0" in capsys.readouterr().out

    def test_all_suites_pass_end_to_end(self, capsys):
        assert main(["verify", "--suite", "all", "--json", "-"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["suite"] == "all"
        assert payload["failed"] == 0
        checks = {cell["check"] for cell in payload["grid"]}
        # one representative cell family per module invariant
        assert {
            "metric-invariants", "cp-verdict", "tn-blockform", "tnb-blocks",
            "aibj", "schur", "rank-one", "ones-identities",
            "block-triangular-det", "inverse-roundtrip", "charpoly-consistency",
            "tn-det", "kmn-det", "tnb-det", "tree-det",
            "tn-inverse", "kmn-inverse", "tnb-inverse", "tnb-block-identities",
            "tnb-singular", "tree-inverse", "spectrum", "single-fan-spectrum",
        } <= checks

    def test_injected_fault_flips_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr(cf, "_DET_FAULT", 2)
        assert main(["verify", "--suite", "all"]) == 3
        out = capsys.readouterr().out
        assert "FAIL" in out and "book det" in out

    def test_thread_pool_gives_same_report(self, capsys, monkeypatch):
        assert main(["verify", "--suite", "spectra", "--json", "-"]) == 0
        serial = json.loads(capsys.readouterr().out)
        monkeypatch.setenv("CPDIST_THREADS", "4")
        assert main(["verify", "--suite", "spectra", "--json", "-"]) == 0
        threaded = json.loads(capsys.readouterr().out)
        serial.pop("wall_time_ms")
        threaded.pop("wall_time_ms")
        assert serial == threaded


class TestSpectrum:
    def test_match(self, capsys):
        assert main(["spectrum", "--part", "NC", "--n", "5", "--b", "2"]) == 0
        out = capsys.readouterr().out
        assert "x^2 - 2*x - 16" in out
        assert "match=true" in out

    def test_json(self, capsys):
        assert main(["spectrum", "--part", "B", "--n", "5", "--b", "2", "--json", "-"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["match"] is True
        assert payload["claimed_char_poly"] == payload["computed_char_poly"]

    def test_empty_part_is_usage_error(self, capsys):
        assert main(["spectrum", "--part", "N", "--n", "3", "--b", "2"]) == 1
        assert "n >= 4" in capsys.readouterr().err


class TestBench:
    def test_small_instance_reports_both_paths(self, capsys):
        assert main(["bench", "--n", "5", "--b", "2", "--json", "-"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["order"] == 9
        assert payload["assembly_ms"] >= 0
        assert payload["gauss_ms"] is not None
        assert payload["agree"] is True

    def test_large_instance_skips_generic(self, capsys):
        assert main(["bench", "--n", "8", "--b", "50", "--json", "-"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["order"] == 351
        assert payload["gauss_ms"] is None
        assert "skipped" in payload["gauss_skipped"]

    def test_singular_bench_refused(self, capsys):
        assert main(["bench", "--n", "6", "--b", "2"]) == 2
        assert "singular" in capsys.readouterr().err


class TestUsageErrors:
    def test_missing_family(self, capsys):
        assert main(["gen"]) == 1
        assert "family" in capsys.readouterr().err

    def test_unknown_family(self, capsys):
        assert main(["gen", "--family", "hypercube"]) == 1

    def test_missing_n(self, capsys):
        assert main(["det", "--family", "tn"]) == 1
        assert "--n" in capsys.readouterr().err

    def test_below_minimum(self, capsys):
        assert main(["det", "--family", "tn", "--n", "2"]) == 1

    def test_unknown_subcommand(self, capsys):
        assert main(["frobnicate"]) == 1
