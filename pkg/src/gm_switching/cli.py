from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

import click

from gm_switching import __version__
from gm_switching.config import PersistentConfig, config_path, load_config, save_persistent_config
from gm_switching.constructions import FIXTURE_NAMES, fixture
from gm_switching.errors import GMError, Graph6Error
from gm_switching.graph import CATALOG_NAMES, Graph, Permutation, build_named
from gm_switching.graph6 import parse_graph6
from gm_switching.invariants import (
    ProductKind,
    lemma3_check,
    retained_neighbor_count,
    theorem4_hypothesis,
)
from gm_switching.isomorphism import (
    are_isomorphic,
    automorphism_group,
    is_isomorphism,
    isomorphism_fixing_set,
)
from gm_switching.products import product
from gm_switching.render import (
    print_config_panel,
    print_error_panel,
    print_json,
    print_scenarios_table,
    setup_logging,
)
from gm_switching.scenarios import SCENARIOS, CensusJob, run_census, run_scenario
from gm_switching.serialize import (
    blocks_to_json,
    graph6_text,
    graph_to_json,
    group_to_json,
    lemma3_to_json,
    partition_to_json,
    permutation_to_json,
    polynomial_to_json,
    theorem4_to_json,
    validation_to_json,
    vertex_set_to_json,
)
from gm_switching.spectrum import char_poly
from gm_switching.switching import (
    SwitchingPartition,
    apply_switching,
    block_decomposition,
    enumerate_switching_sets,
    validate_partition,
)

logger = logging.getLogger(__name__)

_FIXTURE_KINDS = frozenset(name.partition(":")[0] for name in FIXTURE_NAMES)


class _Group(click.Group):
    """Turns library errors into an error panel and exit status 2."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except GMError as exc:
            print_error_panel(str(exc))
            raise SystemExit(2) from exc


@click.group(cls=_Group)
@click.version_option(__version__, prog_name="gm")
@click.option("-v", "--verbose", count=True, help="Log progress to stderr (-vv for debug detail).")
def main(verbose: int) -> None:
    """Godsil-McKay switching toolkit.

    GRAPH arguments accept a graph6 string, a file holding one, '-' for stdin,
    a JSON object with a "graph6" key, a catalog graph such as 'cycle:5', or a
    fixture name such as 'gadget9' or 'grid:4,4'.
    """
    setup_logging(verbose)


def load_graph(source: str) -> Graph:
    if source == "-":
        text = click.get_text_stream("stdin").read()
    elif Path(source).is_file():
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source
    text = text.strip()
    if text.startswith("{"):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise Graph6Error(f"input looks like JSON but does not parse: {exc.msg}") from exc
        if not isinstance(payload, dict) or not isinstance(payload.get("graph6"), str):
            raise Graph6Error('JSON input needs a string "graph6" field')
        text = payload["graph6"]
    kind, colon, params = text.partition(":")
    if colon and kind in CATALOG_NAMES:
        return build_named(kind, *_parse_ints(params, "catalog parameter"))
    if kind in _FIXTURE_KINDS:
        return fixture(text).graph
    lines = text.splitlines()
    return parse_graph6(lines[0] if lines else "")


def _parse_ints(text: str, what: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise click.BadParameter(f"{what} must be comma-separated integers, got {text!r}") from exc


def _parse_partition(text: str) -> SwitchingPartition:
    return SwitchingPartition.of(_parse_ints(cell, "partition cell") for cell in text.split(";"))


def _resolve_partition(vertex_set: str | None, partition: str | None) -> SwitchingPartition:
    if (vertex_set is None) == (partition is None):
        raise click.UsageError("give exactly one of --set or --partition")
    if vertex_set is not None:
        return SwitchingPartition.single(_parse_ints(vertex_set, "--set"))
    assert partition is not None
    return _parse_partition(partition)


_SET_OPTION = click.option("--set", "vertex_set", help="Switching set, e.g. 0,1,2,3.")
_PARTITION_OPTION = click.option("--partition", help="Switching partition, cells separated by ';', e.g. '0,1;4,5'.")
_FORMAT_OPTION = click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "graph6"], case_sensitive=False),
    default="json",
    show_default=True,
)


@main.command()
@click.argument("graph")
@_SET_OPTION
@_PARTITION_OPTION
@_FORMAT_OPTION
def switch(graph: str, vertex_set: str | None, partition: str | None, output_format: str) -> None:
    """Apply a Godsil-McKay switch."""
    g = load_graph(graph)
    cells = _resolve_partition(vertex_set, partition)
    switched = apply_switching(g, cells)
    if output_format == "graph6":
        click.echo(graph6_text(switched))
        return
    print_json({**graph_to_json(switched), "partition": partition_to_json(cells)})


@main.command()
@click.argument("graph")
@_SET_OPTION
@_PARTITION_OPTION
def validate(graph: str, vertex_set: str | None, partition: str | None) -> None:
    """Check a switching set or partition; exits 1 when it is not valid."""
    g = load_graph(graph)
    cells = _resolve_partition(vertex_set, partition)
    report = validate_partition(g, cells)
    payload = validation_to_json(report)
    if report.valid and len(cells.cells) == 1:
        payload["blocks"] = blocks_to_json(block_decomposition(g, cells.cells[0]))
    print_json(payload)
    if not report.valid:
        raise SystemExit(1)


@main.command("find-sets")
@click.argument("graph")
@click.option("--size", type=int, help="Only this set size.")
@click.option("--min-size", type=int, default=2, show_default=True)
@click.option("--max-size", type=int, help="Largest set size [default: configured max_set_size].")
@click.option("--cocliques-only", is_flag=True, help="Only sets with no internal edges.")
def find_sets(graph: str, size: int | None, min_size: int, max_size: int | None, cocliques_only: bool) -> None:
    """Enumerate switching sets in lexicographic order."""
    g = load_graph(graph)
    config = load_config(max_set_size=max_size)
    sizes = [size] if size is not None else list(range(min_size, config.max_set_size + 1))
    found = [list(x) for k in sizes for x in enumerate_switching_sets(g, k, cocliques_only)]
    print_json({"sizes": sizes, "count": len(found), "sets": found})


@main.command()
@click.argument("first")
@click.argument("second")
def cospectral(first: str, second: str) -> None:
    """Decide cospectrality exactly; exits 1 when the spectra differ."""
    g, h = load_graph(first), load_graph(second)
    p, q = char_poly(g), char_poly(h)
    print_json({"cospectral": p == q, "charpoly": [polynomial_to_json(p), polynomial_to_json(q)]})
    if p != q:
        raise SystemExit(1)


@main.command()
@click.argument("graph")
@click.option("--expect", help="Expected coefficients C0,C1,... (ascending); exits 1 on mismatch.")
def charpoly(graph: str, expect: str | None) -> None:
    """Exact characteristic polynomial of the adjacency matrix."""
    poly = char_poly(load_graph(graph))
    payload: dict[str, object] = {"coefficients": polynomial_to_json(poly), "polynomial": str(poly)}
    matches = expect is None or tuple(_parse_ints(expect, "--expect")) == poly.coeffs
    if expect is not None:
        payload["matches"] = matches
    print_json(payload)
    if not matches:
        raise SystemExit(1)


@main.command()
@click.argument("first")
@click.argument("second")
@click.option("--fix", "fixed", help="Only isomorphisms mapping this vertex set onto itself.")
@click.option("--witness", help="Check this permutation (image list) instead of searching.")
def iso(first: str, second: str, fixed: str | None, witness: str | None) -> None:
    """Decide isomorphism; exits 1 when no (matching) isomorphism exists."""
    g, h = load_graph(first), load_graph(second)
    fixed_set = _parse_ints(fixed, "--fix") if fixed is not None else None
    if witness is not None:
        candidate = Permutation(tuple(_parse_ints(witness, "--witness")))
        found = is_isomorphism(g, h, candidate)
        if fixed_set is not None:
            found = found and candidate.image_of(fixed_set) == frozenset(fixed_set)
        result: Permutation | None = candidate if found else None
    elif fixed_set is not None:
        result = isomorphism_fixing_set(g, h, fixed_set)
    else:
        result = are_isomorphic(g, h)
    payload: dict[str, object] = {"isomorphic": result is not None, "witness": permutation_to_json(result)}
    if fixed_set is not None:
        payload["fixed"] = vertex_set_to_json(fixed_set)
    print_json(payload)
    if result is None:
        raise SystemExit(1)


@main.command()
@click.argument("graph")
def aut(graph: str) -> None:
    """Automorphism group: generators, order and orbits."""
    print_json(group_to_json(automorphism_group(load_graph(graph))))


@main.command()
@click.argument("graph")
@click.option("--set", "vertex_set", required=True, help="Switching set, e.g. 0,1,2,3.")
def invariants(graph: str, vertex_set: str) -> None:
    """Non-isomorphism conditions for switching on a set."""
    g = load_graph(graph)
    members = _parse_ints(vertex_set, "--set")
    payload = lemma3_to_json(lemma3_check(g, members))
    payload["retained_neighbors"] = {str(x): retained_neighbor_count(g, members, x) for x in sorted(set(members))}
    print_json(payload)


_KIND_OPTION = click.option(
    "--kind",
    type=click.Choice(["tensor", "strengthened"], case_sensitive=False),
    default="tensor",
    show_default=True,
)


@main.command()
@click.argument("graph")
@click.option("--set", "vertex_set", required=True, help="Switching set in GRAPH.")
@click.option("--h", "factor", required=True, help="The other factor H (any GRAPH form).")
@click.option("--vertex", type=int, default=0, show_default=True, help="Vertex i of H.")
@_KIND_OPTION
def thm4(graph: str, vertex_set: str, factor: str, vertex: int, kind: ProductKind) -> None:
    """Report whether {i} x X switches the product into a non-isomorphic mate; exits 1 when not."""
    report = theorem4_hypothesis(load_graph(graph), _parse_ints(vertex_set, "--set"), load_graph(factor), vertex, kind)
    print_json(theorem4_to_json(report))
    if not report.satisfied:
        raise SystemExit(1)


@main.command("product")
@click.argument("h")
@click.argument("g")
@_KIND_OPTION
@_FORMAT_OPTION
def product_command(h: str, g: str, kind: ProductKind, output_format: str) -> None:
    """Tensor or strengthened tensor product H x G (labels i * |G| + x)."""
    result = product(kind, load_graph(h), load_graph(g))
    if output_format == "graph6":
        click.echo(graph6_text(result))
        return
    print_json(graph_to_json(result))


@main.command("fixture")
@click.argument("name")
@_FORMAT_OPTION
def fixture_command(name: str, output_format: str) -> None:
    """Print a named graph: m5, bipartite18, gadget9, example27, degree-change, grid:L,M, triangular:M, tournament:M."""
    built = fixture(name)
    if output_format == "graph6":
        click.echo(graph6_text(built.graph))
        return
    switching_set = vertex_set_to_json(built.switching_set) if built.switching_set is not None else None
    print_json({"name": built.name, **graph_to_json(built.graph), "switching_set": switching_set})


@main.command()
@click.argument("scenario", type=click.Choice(["all", *SCENARIOS]))
@click.option("--table", is_flag=True, help="Render a table instead of JSON.")
def verify(scenario: str, table: bool) -> None:
    """Run end-to-end scenarios; exits 1 if any check fails."""
    config = load_config()
    names = list(SCENARIOS) if scenario == "all" else [scenario]
    results = []
    for name in names:
        result = run_scenario(name, config)
        logger.info("scenario %s %s in %.2fs", name, "passed" if result.passed else "FAILED", result.seconds)
        results.append(result)
    if table:
        print_scenarios_table(results)
    else:
        print_json(
            [
                {
                    "scenario": result.name,
                    "passed": result.passed,
                    "checks": [{"check": label, "passed": ok} for label, ok in result.checks],
                    "details": result.details,
                }
                for result in results
            ]
        )
    if not all(result.passed for result in results):
        raise SystemExit(1)


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False, allow_dash=True))
@click.option("--min-size", type=int, default=2, show_default=True)
@click.option("--max-size", type=int, help="Largest set size [default: configured max_set_size].")
@click.option("--offset", type=int, default=0, show_default=True, help="Skip this many graph lines.")
@click.option("--cocliques-only", is_flag=True)
@click.option("--threads", type=int, help="Worker processes [default: GM_THREADS or CPU count].")
def census(
    path: str,
    min_size: int,
    max_size: int | None,
    offset: int,
    cocliques_only: bool,
    threads: int | None,
) -> None:
    """Classify every switching set of every graph in a graph6 file, one JSON line per graph."""
    config = load_config(threads=threads, max_set_size=max_size)
    logger.info("census: %s from line %d, set sizes %d..%d", path, offset, min_size, config.max_set_size)
    with click.open_file(path, encoding="utf-8") as handle:
        lines = enumerate(line for line in (raw.strip() for raw in handle) if line)
        jobs = (
            CensusJob(index, line, min_size, config.max_set_size, cocliques_only)
            for index, line in lines
            if index >= offset
        )
        for record in run_census(jobs, config.threads):
            click.echo(json.dumps(record, sort_keys=True))


@main.command("config")
@click.option("--save", is_flag=True, help="Write the resolved values to the config file.")
def config_command(save: bool) -> None:
    """Show the resolved configuration."""
    config = load_config()
    if save:
        save_persistent_config(
            PersistentConfig(
                threads=config.threads,
                max_set_size=config.max_set_size,
                seed=config.seed,
                sweep_graphs=config.sweep_graphs,
            )
        )
    print_config_panel(config, str(config_path()))
