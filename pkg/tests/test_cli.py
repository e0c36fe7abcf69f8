"""Tests for cli.py: argument handling, input parsing, output formats and exit codes."""

import io
import json

import pytest
import voluptuous as vol

from dsi_bounds.cli import CliConfig, parse_graph_text, run
from dsi_bounds.config import OracleGuards
from dsi_bounds.const import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, PROVENANCE_PAPER
from dsi_bounds.exceptions import GraphInputError
from dsi_bounds.graph6 import parse_graph6
from dsi_bounds.harness import ExampleResult


def _json_rows(text):
    return [json.loads(line) for line in text.splitlines()]


def _tsv_rows(text):
    header, *rows = text.rstrip("\n").split("\n")
    columns = header.split("\t")
    return [dict(zip(columns, row.split("\t"), strict=True)) for row in rows]


@pytest.mark.unit
class TestParseGraphText:
    """Tests for parse_graph_text()."""

    def test_graph6_lines(self):
        """One graph per line; comments and blanks are skipped."""
        graphs = parse_graph_text("# two graphs\nC~\n\nDhc\n")
        assert [graph.n for graph in graphs] == [4, 5]

    def test_edge_list(self):
        """An 'n m' header switches to the edge-list format."""
        graphs = parse_graph_text("3 2\n0 1\n1 2\n")
        assert len(graphs) == 1
        assert graphs[0].m == 2

    def test_empty(self):
        """No graph is an input error."""
        with pytest.raises(GraphInputError, match="No graph"):
            parse_graph_text("# nothing\n\n")


@pytest.mark.unit
class TestCliConfig:
    """Tests for CliConfig.from_mapping()."""

    def test_defaults(self):
        """Only the command is required for commands without graph input."""
        config = CliConfig.from_mapping({"command": "examples"})
        assert config.j_values == (1,)
        assert config.guards.single == 20

    def test_j_list(self):
        """--j accepts a comma-separated list."""
        config = CliConfig.from_mapping({"command": "bounds", "gen": "cycle:5", "j": "1,3"})
        assert config.j_values == (1, 3)

    def test_guard_overrides(self):
        """Guard flags override the defaults; unset ones are dropped."""
        config = CliConfig.from_mapping({"command": "oracle", "gen": "cycle:5", "guard_single": 8, "guard_family": None})
        assert config.guard_overrides == {"single": 8}
        assert config.guards.single == 8

    @pytest.mark.parametrize(
        "raw",
        [
            {"command": "bounds"},
            {"command": "bounds", "gen": "cycle:5", "stdin": True},
            {"command": "corpus", "n": 8},
            {"command": "bounds", "gen": "cycle:5", "p": 2},
            {"command": "bounds", "gen": "cycle:5", "j": "1,x"},
            {"command": "corpus", "n": 4, "workers": 0},
        ],
    )
    def test_invalid(self, raw):
        """Out-of-range values and ambiguous sources are rejected."""
        with pytest.raises(vol.Invalid):
            CliConfig.from_mapping(raw)


@pytest.mark.integration
class TestRun:
    """End-to-end tests for run()."""

    def test_bounds_tsv(self, capsys):
        """matched_cliques(3): alpha = a_1 = 2 and a = 3."""
        assert run(["bounds", "--gen", "matched_cliques:3", "--j", "1", "--format", "tsv"]) == EXIT_OK
        (row,) = _tsv_rows(capsys.readouterr().out)
        assert (row["alpha_j"], row["a_j"], row["a"]) == ("2", "2", "3")

    def test_tsv_and_json_agree(self, capsys):
        """Both formats carry the same values."""
        run(["bounds", "--gen", "cycle:5", "--j", "1,2", "--format", "tsv"])
        tsv = _tsv_rows(capsys.readouterr().out)
        run(["bounds", "--gen", "cycle:5", "--j", "1,2", "--format", "json"])
        rows = _json_rows(capsys.readouterr().out)
        assert len(tsv) == len(rows) == 2
        for cells, row in zip(tsv, rows, strict=True):
            for key in ("graph6", "j", "alpha_j", "a_j", "c_j", "chrom_bound"):
                assert cells[key] == str(row[key])

    def test_bounds_domination(self, capsys):
        """--domination adds a domination report per j."""
        assert run(["bounds", "--gen", "cycle:5", "--j", "2", "--domination"]) == EXIT_OK
        rows = _json_rows(capsys.readouterr().out)
        assert len(rows) == 2
        assert "gamma_j" not in rows[0]
        assert rows[1]["gamma_j"] == 3
        assert rows[1]["z_j"] == 3

    def test_bounds_human(self, capsys):
        """The human format starts with the graph6 title line."""
        assert run(["bounds", "--gen", "complete:4", "--format", "human"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("graph6 C~\n")
        assert "[ok]" in out

    def test_oracle(self, capsys):
        """Exact values with witnesses for j = 1 and 2 on C_5."""
        assert run(["oracle", "--gen", "cycle:5", "--j", "1,2"]) == EXIT_OK
        first, second = _json_rows(capsys.readouterr().out)
        assert (first["alpha_j"], first["gamma_j"], first["chi_j"]) == (2, 2, 3)
        assert (second["alpha_j"], second["gamma_j"], second["chi_j"]) == (3, 3, 2)
        assert len(first["alpha_witness"]) == 2
        assert len(second["gamma_witness"]) == 3

    def test_stdin_graph6(self, capsys, monkeypatch):
        """graph6 lines from stdin, one report each."""
        monkeypatch.setattr("sys.stdin", io.StringIO("C~\nDhc\n"))
        assert run(["bounds", "--stdin"]) == EXIT_OK
        rows = _json_rows(capsys.readouterr().out)
        assert [row["graph6"] for row in rows] == ["C~", "Dhc"]

    def test_stdin_edge_list(self, capsys, monkeypatch):
        """An edge list on stdin is detected from its header."""
        monkeypatch.setattr("sys.stdin", io.StringIO("4 3\n0 1\n0 2\n0 3\n"))
        assert run(["oracle", "--stdin"]) == EXIT_OK
        (row,) = _json_rows(capsys.readouterr().out)
        assert row["alpha_j"] == 3
        assert row["alpha_witness"] == [1, 2, 3]

    def test_file(self, capsys, tmp_path):
        """--file reads graph6 lines."""
        path = tmp_path / "graphs.g6"
        path.write_text("C~\n", encoding="utf-8")
        assert run(["oracle", "--file", str(path)]) == EXIT_OK
        (row,) = _json_rows(capsys.readouterr().out)
        assert row["alpha_j"] == 1

    def test_generate(self, capsys):
        """One graph6 line that decodes to the dodecahedron."""
        assert run(["generate", "dodecahedron"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 1
        graph = parse_graph6(lines[0])
        assert (graph.n, graph.m) == (20, 30)

    def test_generate_edge_list(self, capsys):
        """--edge-list prints the header and the edges."""
        assert run(["generate", "cycle:5", "--edge-list"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "5 5"
        assert len(lines) == 6

    def test_corpus(self, capsys):
        """64 graphs of order 4 and no failures."""
        assert run(["corpus", "--n", "4", "--j", "1"]) == EXIT_OK
        (row,) = _json_rows(capsys.readouterr().out)
        assert row["graphs_per_order"]["4"] == 64
        assert row["failures"] == 0

    def test_corpus_sampling(self, capsys):
        """--sample-step thins out the largest order."""
        assert run(["corpus", "--n", "4", "--min-n", "4", "--sample-step", "2"]) == EXIT_OK
        (row,) = _json_rows(capsys.readouterr().out)
        assert row["graphs_per_order"] == {"4": 32}

    def test_examples_failure(self, capsys, mocker):
        """A failing catalog entry exits 1."""
        failing = ExampleResult("demo", {"alpha_j": 2}, {"alpha_j": 3}, PROVENANCE_PAPER)
        mocker.patch("dsi_bounds.cli.reproduce_paper_examples", return_value=[failing])
        assert run(["examples"]) == EXIT_CHECK_FAILED
        (row,) = _json_rows(capsys.readouterr().out)
        assert row["pass"] is False

    def test_failed_check(self, capsys, mocker):
        """A failed chain check exits 1 and is still reported."""
        mocker.patch("dsi_bounds.harness.upper_j_annihilation", return_value=0)
        assert run(["bounds", "--gen", "complete:4"]) == EXIT_CHECK_FAILED
        (row,) = _json_rows(capsys.readouterr().out)
        assert any(not check["pass"] for check in row["checks"])

    def test_corpus_failure(self, capsys, mocker):
        """A corpus failure exits 1 and names the graph on stderr."""
        mocker.patch("dsi_bounds.harness.lower_j_annihilation", return_value=99)
        assert run(["corpus", "--n", "2"]) == EXIT_CHECK_FAILED
        assert "dsi-bounds: Check 'c_j<=alpha_j' failed on graph @" in capsys.readouterr().err

    @pytest.mark.parametrize(
        "argv",
        [
            ["bounds"],
            ["bounds", "--gen", "nosuch:1"],
            ["generate", "cycle:2"],
            ["oracle", "--gen", "complete:6", "--guard-single", "5"],
            ["corpus", "--n", "8"],
            ["bounds", "--gen", "cycle:5", "--p", "2"],
            ["frobnicate"],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        """Usage, input and capacity errors exit 2."""
        assert run(argv) == EXIT_USAGE

    def test_malformed_stdin(self, capsys, monkeypatch):
        """A malformed graph6 line exits 2 with its byte offset."""
        monkeypatch.setattr("sys.stdin", io.StringIO("C!\n"))
        assert run(["bounds", "--stdin"]) == EXIT_USAGE
        assert "offset 1" in capsys.readouterr().err

    def test_non_utf8_file(self, tmp_path, capsys):
        """Undecodable file bytes are an input error, not a crash."""
        path = tmp_path / "bad.g6"
        path.write_bytes(b"\xff\xfe\x80garbage\n")
        assert run(["bounds", "--file", str(path)]) == EXIT_USAGE
        assert "is not UTF-8 text" in capsys.readouterr().err

    def test_examples_guard_above_capacity(self, capsys):
        """Guard overrides are capped at 63 vertices for every command."""
        assert run(["examples", "--guard-single", "500"]) == EXIT_USAGE

    def test_examples_guard_override(self, capsys, mocker):
        """Overrides are merged over the catalog guards and validated."""
        catalog = mocker.patch("dsi_bounds.cli.reproduce_paper_examples", return_value=[])
        assert run(["examples", "--guard-single", "18"]) == EXIT_OK
        catalog.assert_called_once_with(OracleGuards(single=18, family=20, chromatic=20))

    def test_missing_file(self, tmp_path, capsys):
        """An unreadable file exits 2."""
        assert run(["bounds", "--file", str(tmp_path / "missing.g6")]) == EXIT_USAGE

    def test_version(self, capsys):
        """--version exits cleanly."""
        assert run(["--version"]) == EXIT_OK
        assert "dsi-bounds" in capsys.readouterr().out
