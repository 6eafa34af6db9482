"""Command-line surface: records, exit codes, files, env overrides."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from vecdom.cli import EXIT_INFEASIBLE, EXIT_INPUT, EXIT_OK, ORACLE_CAP_ENV, main
from vecdom.io import parse_demands, parse_graph

C4 = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"
STAR = "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n"
SINGLE = "p edge 1 0\n"


@pytest.fixture()
def c4_file(tmp_path: Path) -> str:
    p = tmp_path / "c4.gr"
    p.write_text(C4)
    return str(p)


def _write(tmp_path: Path, name: str, text: str) -> str:
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def _record(capsys) -> dict:
    return json.loads(capsys.readouterr().out.strip().splitlines()[-1])


class TestSolve:
    def test_total_unit_demands(self, c4_file, tmp_path, capsys) -> None:
        dem = _write(tmp_path, "ones.dem", "1 1\n2 1\n3 1\n4 1\n")
        code = main(["solve", c4_file, "--variant", "total-vector-domination", "--demands", dem])
        assert code == EXIT_OK
        record = _record(capsys)
        assert record["size"] == 2
        assert record["feasible"] is True
        assert record["quality"] == "optimal"

    def test_record_field_order(self, c4_file, tmp_path, capsys) -> None:
        dem = _write(tmp_path, "ones.dem", "1 1\n2 1\n3 1\n4 1\n")
        main(["solve", c4_file, "--variant", "vector-domination", "--demands", dem])
        record = _record(capsys)
        assert list(record) == ["size", "vertices", "feasible", "quality", "solverPath", "elapsed"]
        assert record["vertices"] == sorted(record["vertices"])
        assert min(record["vertices"]) >= 1

    def test_greedy_method_reports_bound(self, c4_file, tmp_path, capsys) -> None:
        dem = _write(tmp_path, "ones.dem", "1 1\n2 1\n3 1\n4 1\n")
        code = main([
            "solve", c4_file, "--variant", "vector-domination",
            "--demands", dem, "--method", "greedy",
        ])
        assert code == EXIT_OK
        record = _record(capsys)
        assert "bound" in record
        assert record["quality"] == "approx"

    def test_alpha_variant(self, c4_file, capsys) -> None:
        code = main(["solve", c4_file, "--variant", "total-alpha-domination", "--alpha", "1/2"])
        assert code == EXIT_OK
        assert _record(capsys)["size"] == 2

    def test_infeasible_exit_one(self, tmp_path, capsys) -> None:
        gr = _write(tmp_path, "single.gr", SINGLE)
        dem = _write(tmp_path, "one.dem", "1 1\n")
        code = main(["solve", gr, "--variant", "total-vector-domination", "--demands", dem])
        assert code == EXIT_INFEASIBLE
        record = _record(capsys)
        assert record["size"] is None
        assert record["feasible"] is False

    def test_decimal_alpha_rejected(self, c4_file) -> None:
        code = main(["solve", c4_file, "--variant", "total-alpha-domination", "--alpha", "0.5"])
        assert code == EXIT_INPUT

    def test_missing_file(self) -> None:
        assert main(["solve", "no-such-file.gr", "--variant", "domination"]) == EXIT_INPUT

    def test_deterministic_apart_from_elapsed(self, c4_file, capsys) -> None:
        main(["solve", c4_file, "--variant", "domination"])
        first = _record(capsys)
        main(["solve", c4_file, "--variant", "domination"])
        second = _record(capsys)
        first.pop("elapsed")
        second.pop("elapsed")
        assert first == second

    def test_dispatch_methods_agree_on_size(self, c4_file, tmp_path, capsys) -> None:
        dem = _write(tmp_path, "ones.dem", "1 1\n2 1\n3 1\n4 1\n")
        sizes = {}
        for method in ("auto", "oracle", "cograph", "greedy"):
            code = main([
                "solve", c4_file, "--variant", "vector-domination",
                "--demands", dem, "--method", method,
            ])
            assert code == EXIT_OK
            sizes[method] = _record(capsys)["size"]
        assert sizes["auto"] == sizes["oracle"] == sizes["cograph"] == 2
        assert sizes["greedy"] >= 2


class TestVerify:
    def test_star_center_feasible(self, tmp_path, capsys) -> None:
        gr = _write(tmp_path, "star.gr", STAR)
        dem = _write(tmp_path, "k.dem", "1 2\n2 1\n3 1\n4 1\n")
        chosen = _write(tmp_path, "set.txt", "1\n")
        code = main(["verify", gr, "--variant", "vector-domination", "--demands", dem, "--set", chosen])
        assert code == EXIT_OK
        record = _record(capsys)
        assert record["feasible"] is True
        assert record["violations"] == []

    def test_infeasible_set_exits_one(self, c4_file, tmp_path, capsys) -> None:
        dem = _write(tmp_path, "ones.dem", "1 1\n2 1\n3 1\n4 1\n")
        chosen = _write(tmp_path, "set.txt", "1\n")
        code = main(["verify", c4_file, "--variant", "total-vector-domination", "--demands", dem, "--set", chosen])
        assert code == EXIT_INFEASIBLE
        record = _record(capsys)
        assert record["feasible"] is False
        assert record["violations"] == [1, 3]


class TestGadget:
    def test_k_dom_check(self, tmp_path, capsys) -> None:
        gr = _write(tmp_path, "p3.gr", "p edge 3 2\ne 1 2\ne 2 3\n")
        code = main(["gadget", gr, "--construction", "k-dom", "--k", "2", "--check"])
        assert code == EXIT_OK
        record = _record(capsys)
        assert record["check"]["passed"] is True
        assert record["check"]["witnessFeasible"] is True

    def test_alpha_construction_record(self, c4_file, capsys) -> None:
        code = main(["gadget", c4_file, "--construction", "alpha", "--alpha", "2/3"])
        assert code == EXIT_OK
        record = _record(capsys)
        assert record["construction"] == "alpha-domination"
        assert record["order"] == record["baseOrder"] + record["attachment"]

    def test_emit_writes_parseable_files(self, c4_file, tmp_path, capsys) -> None:
        prefix = str(tmp_path / "emitted")
        code = main(["gadget", c4_file, "--construction", "replicate", "--copies", "2", "--emit", prefix])
        assert code == EXIT_OK
        g = parse_graph((tmp_path / "emitted.graph").read_text())
        assert g.n == 8
        demands = parse_demands((tmp_path / "emitted.demands").read_text(), g)
        assert len(demands) == 8
        claim = json.loads((tmp_path / "emitted.claim.json").read_text())
        assert claim["lower"] == [2, 0]

    def test_gate_violation_exits_two(self, c4_file) -> None:
        code = main([
            "gadget", c4_file, "--construction", "total-alpha",
            "--alpha", "1/2", "--blocks", "1", "--copies-per-block", "1",
            "--block-factor", "1",
        ])
        assert code == EXIT_INPUT


class TestBench:
    def test_text_table(self, capsys) -> None:
        code = main(["bench", "--family", "trees", "--sizes", "30,60", "--seed", "5", "--reps", "1"])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "trees" in out
        assert "60" in out

    def test_csv_output(self, tmp_path, capsys) -> None:
        target = tmp_path / "cells.csv"
        code = main([
            "bench", "--family", "gnp", "--sizes", "10", "--seed", "5",
            "--reps", "1", "--csv", str(target),
        ])
        assert code == EXIT_OK
        lines = target.read_text().strip().splitlines()
        assert lines[0].startswith("family,")
        assert len(lines) == 2

    def test_deterministic_sizes(self, capsys) -> None:
        main(["bench", "--family", "cographs", "--sizes", "12", "--seed", "9", "--reps", "1"])
        first = capsys.readouterr().out
        main(["bench", "--family", "cographs", "--sizes", "12", "--seed", "9", "--reps", "1"])
        second = capsys.readouterr().out

        def sizes(text: str) -> list[str]:
            return [line.split()[4] for line in text.splitlines()[2:] if line.strip()]

        assert sizes(first) == sizes(second)


class TestOracleCapEnv:
    def test_lowered_cap_rejects(self, c4_file, monkeypatch) -> None:
        monkeypatch.setenv(ORACLE_CAP_ENV, "3")
        code = main(["solve", c4_file, "--variant", "domination", "--method", "oracle"])
        assert code == EXIT_INPUT

    def test_default_cap_allows(self, c4_file, monkeypatch, capsys) -> None:
        monkeypatch.delenv(ORACLE_CAP_ENV, raising=False)
        code = main(["solve", c4_file, "--variant", "domination", "--method", "oracle"])
        assert code == EXIT_OK
        assert _record(capsys)["size"] == 2
