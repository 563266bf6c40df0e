from typing import Optional, Tuple

import click

from cli.errors import exit_on_error
from core.errors import ConfigError
from services.run_config import build_run_config, load_config_file
from services.runner import run


def _parse_sets(pairs: Tuple[str, ...]) -> dict:
    overrides = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key.strip():
            raise ConfigError(f"--set expects key=value, got '{pair}'")
        overrides[key.strip()] = value.strip()
    return overrides


@click.command("train")
@click.option("--model", type=click.Choice(["som", "gcs", "gng", "sota"]), help="Model to train.")
@click.option("--data", type=click.Path(dir_okay=False), help="Dataset CSV (or aligned sequences for sota with an alphabet).")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="Flat key = value config file.")
@click.option("--seed", type=int, help="Seed for every random draw.  [default: 0]")
@click.option("--out", type=click.Path(file_okay=False), help="Output directory.  [default: $GROWNETS_OUTPUT_DIR or runs]")
@click.option("--has-header/--no-header", default=None, help="Whether the dataset CSV starts with a header line.")
@click.option("--set", "sets", multiple=True, metavar="KEY=VALUE", help="Override any config key, e.g. gng.max_age=80.")
def train(model: Optional[str], data: Optional[str], config_path: Optional[str], seed: Optional[int],
          out: Optional[str], has_header: Optional[bool], sets: Tuple[str, ...]):
    """Train one model and write codebook, edges, assignments and metrics."""
    with exit_on_error():
        file_values = load_config_file(config_path) if config_path else {}
        overrides = _parse_sets(sets)
        flags = {"model": model, "data": data, "seed": seed, "out": out, "has_header": has_header}
        # Named flags beat --set only when given.
        overrides.update({key: value for key, value in flags.items() if value is not None})
        trained = run(build_run_config(file_values, overrides))
        click.echo(f"trained {len(trained.ids)} units; quantization_error="
                   f"{trained.report.quantization_error:.6g}")
