from __future__ import annotations

import json
import logging
from typing import Iterable

from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

from gm_switching.config import Config
from gm_switching.scenarios import ScenarioResult

console = Console()
err_console = Console(stderr=True)


def setup_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def print_scenarios_table(results: Iterable[ScenarioResult]) -> None:
    table = Table(title="Scenarios")
    table.add_column("scenario", style="cyan")
    table.add_column("status")
    table.add_column("checks", justify="right")
    table.add_column("seconds", justify="right")
    table.add_column("failed checks", style="red")

    for result in results:
        failed = [label for label, ok in result.checks if not ok]
        table.add_row(
            result.name,
            "[green]pass[/green]" if result.passed else "[red]FAIL[/red]",
            f"{len(result.checks) - len(failed)}/{len(result.checks)}",
            f"{result.seconds:.2f}",
            "\n".join(failed),
        )

    console.print(table)


def print_config_panel(config: Config, path: str) -> None:
    panel = Panel(
        f"Threads: {config.threads}\n"
        f"Max set size: {config.max_set_size}\n"
        f"Seed: {config.seed}\n"
        f"Sweep graphs: {config.sweep_graphs}\n"
        f"Config file: {path}",
        title="gm-switching",
    )
    console.print(panel)


def print_error_panel(err: str) -> None:
    err_console.print(Panel(err, title="Error", style="red"))


def print_json(obj: object) -> None:
    console.print_json(json.dumps(obj, sort_keys=True))
