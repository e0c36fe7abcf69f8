"""Command-line front end: bounds, oracle, generate, corpus and examples subcommands."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

import voluptuous as vol

from . import __version__
from .catalog import CATALOG_GUARDS, reproduce_paper_examples
from .config import OracleGuards
from .const import (
    DEFAULT_GUARD_CORPUS,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    FORMAT_HUMAN,
    FORMAT_JSON,
    FORMAT_TSV,
    MAX_VERTICES,
    OUTPUT_FORMATS,
)
from .exceptions import ChainFailure, DSIError, GraphInputError
from .generators import FAMILY_NAMES, generate_from_spec
from .graph import Graph, parse_edge_list, to_edge_list
from .graph6 import parse_graph6, to_graph6
from .harness import (
    corpus_scan,
    render_human,
    render_json_lines,
    render_tsv,
    verify_domination_chain,
    verify_independence_chain,
)
from .helpers import iter_bits, parse_int_list
from .oracle import alpha_j, chi_j, gamma_j

_LOGGER = logging.getLogger(__name__)

COMMANDS = ("bounds", "oracle", "generate", "corpus", "examples")
_INPUT_COMMANDS = ("bounds", "oracle")

_RENDERERS: dict[str, Callable[[Any], str]] = {
    FORMAT_JSON: render_json_lines,
    FORMAT_TSV: render_tsv,
    FORMAT_HUMAN: render_human,
}


def _int_list(name: str) -> Callable[[Any], list[int]]:
    def validator(value: Any) -> list[int]:
        if isinstance(value, list):
            return value
        try:
            return parse_int_list(str(value), name)
        except ValueError as err:
            raise vol.Invalid(str(err)) from err

    return validator


def _one_input_source(data: dict[str, Any]) -> dict[str, Any]:
    if data["command"] in _INPUT_COMMANDS:
        sources = (data["gen"] is not None) + (data["file"] is not None) + bool(data["stdin"])
        if sources != 1:
            raise vol.Invalid("exactly one of --gen, --file or --stdin is required")
    return data


_OPTIONAL_ORDER = vol.Any(None, vol.All(int, vol.Range(min=1, max=DEFAULT_GUARD_CORPUS)))
_OPTIONAL_GUARD = vol.Any(None, vol.All(int, vol.Range(min=1, max=MAX_VERTICES)))

CLI_SCHEMA = vol.Schema(
    vol.All(
        {
            vol.Required("command"): vol.In(COMMANDS),
            vol.Optional("gen", default=None): vol.Any(None, str),
            vol.Optional("file", default=None): vol.Any(None, str),
            vol.Optional("stdin", default=False): bool,
            vol.Optional("j", default="1"): _int_list("j"),
            vol.Optional("p", default=3): vol.All(int, vol.Range(min=3)),
            vol.Optional("format", default=FORMAT_JSON): vol.In(OUTPUT_FORMATS),
            vol.Optional("domination", default=False): bool,
            vol.Optional("workers", default=1): vol.All(int, vol.Range(min=1)),
            vol.Optional("n", default=None): _OPTIONAL_ORDER,
            vol.Optional("min_n", default=1): vol.All(int, vol.Range(min=1, max=DEFAULT_GUARD_CORPUS)),
            vol.Optional("sample_step", default=1): vol.All(int, vol.Range(min=1)),
            vol.Optional("family", default=None): vol.Any(None, str),
            vol.Optional("edge_list", default=False): bool,
            vol.Optional("guard_single", default=None): _OPTIONAL_GUARD,
            vol.Optional("guard_family", default=None): _OPTIONAL_GUARD,
            vol.Optional("guard_chromatic", default=None): _OPTIONAL_GUARD,
            vol.Optional("verbose", default=0): vol.All(int, vol.Range(min=0)),
        },
        _one_input_source,
    )
)


@dataclass(frozen=True)
class CliConfig:
    """Validated settings for one CLI invocation."""

    command: str
    gen: str | None = None
    file: str | None = None
    stdin: bool = False
    j_values: tuple[int, ...] = (1,)
    p: int = 3
    output_format: str = FORMAT_JSON
    domination: bool = False
    workers: int = 1
    n: int | None = None
    min_n: int = 1
    sample_step: int = 1
    family: str | None = None
    edge_list: bool = False
    guard_overrides: dict[str, int] = field(default_factory=dict)
    verbose: int = 0

    @classmethod
    def from_mapping(cls, raw: dict[str, Any]) -> CliConfig:
        """Validate a parsed-argument mapping with CLI_SCHEMA.

        Raises:
            vol.Invalid: A value is out of range or the input source is ambiguous.
        """
        data = CLI_SCHEMA(raw)
        overrides = {
            key: data[f"guard_{key}"] for key in ("single", "family", "chromatic") if data[f"guard_{key}"] is not None
        }
        return cls(
            command=data["command"],
            gen=data["gen"],
            file=data["file"],
            stdin=data["stdin"],
            j_values=tuple(data["j"]),
            p=data["p"],
            output_format=data["format"],
            domination=data["domination"],
            workers=data["workers"],
            n=data["n"],
            min_n=data["min_n"],
            sample_step=data["sample_step"],
            family=data["family"],
            edge_list=data["edge_list"],
            guard_overrides=overrides,
            verbose=data["verbose"],
        )

    @property
    def guards(self) -> OracleGuards:
        return OracleGuards.from_mapping(self.guard_overrides)


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="log debug detail to stderr")
    common.add_argument("--guard-single", type=int, help="largest n for alpha_j/gamma_j")
    common.add_argument("--guard-family", type=int, help="largest n for optimal-family enumeration")
    common.add_argument("--guard-chromatic", type=int, help="largest n for chi_j")
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=FORMAT_JSON, help="output format")
    return common


def _input_parser() -> argparse.ArgumentParser:
    inputs = argparse.ArgumentParser(add_help=False)
    source = inputs.add_mutually_exclusive_group(required=True)
    source.add_argument("--gen", metavar="FAMILY[:P1:P2...]", help="named generator, e.g. matched_cliques:3")
    source.add_argument("--file", metavar="PATH", help="graph6 lines or an edge-list file")
    source.add_argument("--stdin", action="store_true", help="read graph6 lines or an edge list from stdin")
    inputs.add_argument("--j", default="1", help="comma-separated j values (default 1)")
    inputs.add_argument("--p", type=int, default=3, help="claw order p >= 3 (default 3)")
    inputs.add_argument("--domination", action="store_true", help="also run the domination chain")
    return inputs


def build_parser() -> argparse.ArgumentParser:
    """Return the argparse parser for every subcommand."""
    parser = argparse.ArgumentParser(prog="dsi-bounds", description="Degree Sequence Index bounds and exact oracles.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)
    common, inputs = _common_parser(), _input_parser()

    commands.add_parser("bounds", parents=[common, inputs], help="bound report with verified chain per graph")
    commands.add_parser("oracle", parents=[common, inputs], help="exact alpha_j, gamma_j and chi_j with witnesses")

    generate = commands.add_parser("generate", parents=[common], help="print a named family member")
    generate.add_argument("family", help=f"FAMILY[:P1:P2...], one of: {', '.join(FAMILY_NAMES)}")
    generate.add_argument("--edge-list", action="store_true", help="print an edge list instead of graph6")

    corpus = commands.add_parser("corpus", parents=[common], help="verify the chains over every labeled graph")
    corpus.add_argument("--n", type=int, required=True, help="largest order scanned")
    corpus.add_argument("--min-n", type=int, default=1, help="smallest order scanned (default 1)")
    corpus.add_argument("--j", default="1", help="comma-separated j values (default 1)")
    corpus.add_argument("--domination", action="store_true", help="also run the domination chain")
    corpus.add_argument("--workers", type=int, default=1, help="worker processes (default 1)")
    corpus.add_argument("--sample-step", type=int, default=1, help="scan every k-th graph of the largest order")

    commands.add_parser("examples", parents=[common], help="recompute the catalog of published values")
    return parser


def parse_graph_text(text: str) -> list[Graph]:
    """Parse graph6 lines, or one edge-list graph when the first line is an "n m" header.

    Raises:
        GraphInputError: The text holds no graph or a malformed one.
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise GraphInputError("No graph found in input")
    header = lines[0].split()
    if len(header) == 2 and all(part.isdigit() for part in header):
        return [parse_edge_list(text)]
    return [parse_graph6(line) for line in lines]


def _read_graphs(config: CliConfig) -> list[Graph]:
    if config.gen is not None:
        return [generate_from_spec(config.gen)]
    source = config.file or "stdin"
    try:
        if config.file is not None:
            text = Path(config.file).read_text(encoding="utf-8")
        else:
            text = sys.stdin.read()
    except UnicodeDecodeError as err:
        raise GraphInputError(f"{source} is not UTF-8 text: {err.reason} at byte {err.start}") from err
    return parse_graph_text(text)


def _emit(config: CliConfig, items: Sequence[Any]) -> None:
    sys.stdout.write(_RENDERERS[config.output_format](items))


def _cmd_bounds(config: CliConfig) -> int:
    reports = []
    for graph in _read_graphs(config):
        for j in config.j_values:
            reports.append(verify_independence_chain(graph, j, config.p, config.guards, strict=False))
            if config.domination:
                reports.append(verify_domination_chain(graph, j, config.guards, strict=False))
    _emit(config, reports)
    return EXIT_CHECK_FAILED if any(report.failures for report in reports) else EXIT_OK


def _cmd_oracle(config: CliConfig) -> int:
    rows = []
    guards = config.guards
    for graph in _read_graphs(config):
        for j in config.j_values:
            independent = alpha_j(graph, j, guards)
            dominating = gamma_j(graph, j, guards)
            rows.append(
                {
                    "graph6": to_graph6(graph),
                    "n": graph.n,
                    "m": graph.m,
                    "j": j,
                    "alpha_j": independent.value,
                    "alpha_witness": list(iter_bits(independent.witness)),
                    "gamma_j": dominating.value,
                    "gamma_witness": list(iter_bits(dominating.witness)),
                    "chi_j": chi_j(graph, j, guards),
                }
            )
    _emit(config, rows)
    return EXIT_OK


def _cmd_generate(config: CliConfig) -> int:
    graph = generate_from_spec(config.family or "")
    sys.stdout.write(to_edge_list(graph) if config.edge_list else to_graph6(graph) + "\n")
    return EXIT_OK


def _cmd_corpus(config: CliConfig) -> int:
    if config.n is None:
        raise GraphInputError("corpus needs --n")
    summary = corpus_scan(
        config.n,
        config.j_values,
        config.domination,
        config.guards,
        config.workers,
        n_min=config.min_n,
        p=config.p,
        sample_order=config.n if config.sample_step > 1 else None,
        sample_step=config.sample_step,
    )
    _emit(config, [summary])
    return EXIT_OK


def _cmd_examples(config: CliConfig) -> int:
    guards = OracleGuards.from_mapping(asdict(CATALOG_GUARDS) | config.guard_overrides)
    results = reproduce_paper_examples(guards)
    _emit(config, results)
    failed = [result.name for result in results if not result.passed]
    if failed:
        _LOGGER.error("Catalog entries failed: %s", ", ".join(failed))
        return EXIT_CHECK_FAILED
    return EXIT_OK


_HANDLERS: dict[str, Callable[[CliConfig], int]] = {
    "bounds": _cmd_bounds,
    "oracle": _cmd_oracle,
    "generate": _cmd_generate,
    "corpus": _cmd_corpus,
    "examples": _cmd_examples,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Run one CLI invocation and return its exit status.

    0 when every requested check passes, 1 on a failed check or catalog entry,
    2 on usage, parse, input or capacity errors.
    """
    try:
        namespace = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if namespace.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = CliConfig.from_mapping(vars(namespace))
        return _HANDLERS[config.command](config)
    except ChainFailure as err:
        print(f"dsi-bounds: {err}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (DSIError, OSError, vol.Invalid) as err:
        print(f"dsi-bounds: {err}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    """Console-script entry point."""
    sys.exit(run())
