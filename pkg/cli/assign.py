from typing import Optional

import click

from cli.errors import exit_on_error
from services import io, metrics


@click.command("assign")
@click.option("--codebook", required=True, type=click.Path(dir_okay=False), help="codebook.csv written by train.")
@click.option("--data", required=True, type=click.Path(dir_okay=False), help="Dataset CSV to assign.")
@click.option("--has-header/--no-header", default=False, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), help="Assignments CSV; stdout when omitted.")
def assign(codebook: str, data: str, has_header: bool, out: Optional[str]):
    """Map every input row to the id of its best matching unit."""
    with exit_on_error():
        ids, vectors, _, _ = io.read_codebook(codebook)
        dataset = io.ingest_csv(data, has_header=has_header)
        unit_ids = [ids[i] for i in metrics.assignments(vectors, dataset)]
        if out:
            io.write_assignments(out, unit_ids)
        else:
            click.echo("row_index,unit_id")
            for row, unit in enumerate(unit_ids):
                click.echo(f"{row},{unit}")
