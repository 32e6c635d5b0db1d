from __future__ import annotations

from collections.abc import Iterator
import logging

import pytest

from gm_switching.config import Config
from gm_switching.constructions import bipartite18, m5
from gm_switching.graph import build_grid, graph_from_edges
from gm_switching.graph6 import to_graph6
from gm_switching.scenarios import (
    SCENARIOS,
    CensusJob,
    ScenarioResult,
    census_line,
    classify_switch,
    run_census,
    run_scenario,
    scenario_products,
)

SMALL = Config(threads=1, max_set_size=4, seed=7, sweep_graphs=6)
SPIDER = graph_from_edges(7, [(4, 0), (4, 1), (5, 0), (5, 2), (6, 0), (6, 3)])


def test_scenario_result_accumulates_checks() -> None:
    result = ScenarioResult("demo")
    assert result.passed
    assert result.check("first", True)
    assert not result.check("second", False)
    assert not result.passed
    assert [label for label, _ in result.checks] == ["first", "second"]


@pytest.mark.parametrize(
    "name",
    ["grid", "m5", "bipartite18", "example27", "gadget", "thm4-tensor", "thm4-strengthened", "degree-question"],
)
def test_fast_scenarios_pass(name: str) -> None:
    result = run_scenario(name, SMALL)
    assert result.name == name
    assert result.passed, [label for label, ok in result.checks if not ok]
    assert result.seconds >= 0.0


def test_sweep_scenario_on_a_few_graphs() -> None:
    result = run_scenario("sweep", SMALL)
    assert result.passed, result.checks
    assert result.details["graphs"] == 6


def test_products_scenario_on_a_few_pairs() -> None:
    result = scenario_products(SMALL, pairs=5)
    assert result.passed, result.checks
    assert result.details == {"pairs": 5}


def test_scenario_names() -> None:
    assert set(SCENARIOS) == {
        "grid",
        "m5",
        "bipartite18",
        "example27",
        "gadget",
        "thm4-tensor",
        "thm4-strengthened",
        "sweep",
        "products",
        "degree-question",
    }


def test_classify_switch() -> None:
    assert classify_switch(SPIDER, (0, 1, 2, 3)) == "noniso-certified"
    assert classify_switch(build_grid(4, 4), (0, 5, 10, 15)) == "noniso"
    assert classify_switch(*bipartite18()) == "iso-fixing"
    assert classify_switch(*m5()) == "iso-nonfixing"


def test_census_line() -> None:
    line = to_graph6(SPIDER).decode("ascii")
    record = census_line(CensusJob(3, line, 4, 4, True))
    assert record["line"] == 3
    assert record["graph6"] == line
    assert record["n"] == 7
    sets = record["sets"]
    assert isinstance(sets, list)
    assert {"set": [0, 1, 2, 3], "class": "noniso-certified"} in sets


def test_run_census_keeps_input_order() -> None:
    lines = [to_graph6(g).decode("ascii") for g in (SPIDER, build_grid(2, 3), SPIDER)]
    jobs = [CensusJob(index, line, 2, 3, False) for index, line in enumerate(lines)]
    serial = list(run_census(jobs, threads=1))
    parallel = list(run_census(jobs, threads=2))
    assert [record["line"] for record in parallel] == [0, 1, 2]
    assert parallel == serial


def test_run_census_streams_jobs_in_chunks() -> None:
    lines = [to_graph6(g).decode("ascii") for g in (SPIDER, build_grid(2, 3), SPIDER, build_grid(2, 2), SPIDER)]
    consumed: list[int] = []

    def jobs() -> Iterator[CensusJob]:
        for index, line in enumerate(lines):
            consumed.append(index)
            yield CensusJob(index, line, 2, 3, False)

    records = run_census(jobs(), threads=2, chunk_size=2)
    first = next(records)
    assert first["line"] == 0
    assert consumed == [0, 1]
    assert [record["line"] for record in records] == [1, 2, 3, 4]
    assert consumed == [0, 1, 2, 3, 4]


def test_scenarios_log_below_info(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.DEBUG, logger="gm_switching"):
        run_scenario("gadget", SMALL)
    assert all(record.levelno <= logging.DEBUG for record in caplog.records if record.name.startswith("gm_switching"))
