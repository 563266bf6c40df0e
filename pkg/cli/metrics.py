from pathlib import Path
from typing import Optional

import click
import numpy as np

from cli.errors import exit_on_error
from core.errors import ConfigError
from models.networks import SomGrid
from services import io
from services.metrics import metric_report


def _parse_grid(grid: str):
    width, sep, height = grid.lower().partition("x")
    if not sep or not width.isdigit() or not height.isdigit():
        raise ConfigError(f"--grid expects WIDTHxHEIGHT, got '{grid}'")
    return int(width), int(height)


@click.command("metrics")
@click.option("--codebook", required=True, type=click.Path(dir_okay=False), help="codebook.csv written by train.")
@click.option("--data", required=True, type=click.Path(dir_okay=False), help="Dataset CSV to evaluate on.")
@click.option("--has-header/--no-header", default=False, show_default=True)
@click.option("--grid", help="WIDTHxHEIGHT of a SOM codebook; enables topographic error.")
@click.option("--topology", type=click.Choice(["rectangular", "hexagonal"]), default="rectangular", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), help="Metrics file; stdout when omitted.")
def metrics(codebook: str, data: str, has_header: bool, grid: Optional[str], topology: str, out: Optional[str]):
    """Quantization error, dead units and (for grids) topographic error."""
    with exit_on_error():
        ids, vectors, _, _ = io.read_codebook(codebook)
        dataset = io.ingest_csv(data, has_header=has_header)
        som_grid = None
        if grid:
            width, height = _parse_grid(grid)
            if width * height != len(ids):
                raise ConfigError(f"grid {width}x{height} does not match {len(ids)} codebook rows")
            order = np.argsort(ids, kind="stable")
            som_grid = SomGrid(width=width, height=height, topology=topology, codebook=vectors[order])
            vectors = som_grid.codebook
        lines = metric_report(vectors, dataset, grid=som_grid).as_lines()
        if out:
            io.write_metrics(Path(out), lines)
        else:
            for line in lines:
                click.echo(line)
