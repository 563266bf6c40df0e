from typing import Optional

import click

from cli.errors import exit_on_error
from core.errors import SynthSpecError
from services.io import dataset_to_csv
from services.synth import build_spec, generate


def _floats(text: Optional[str], name: str):
    if text is None:
        return None
    try:
        return [float(v) for v in text.split(",")]
    except ValueError:
        raise SynthSpecError(f"--{name} expects comma-separated numbers, got '{text}'")


def _points(text: Optional[str], name: str):
    if text is None:
        return None
    return [_floats(point, name) for point in text.split(";")]


@click.command("synth")
@click.option("--kind", required=True, type=click.Choice(["uniform_rect", "gaussian_mixture", "ring", "two_squares"]))
@click.option("--n", required=True, type=int, help="Number of samples.")
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--low", help="uniform_rect lower corner, e.g. 0,0.")
@click.option("--high", help="uniform_rect upper corner, e.g. 1,1.")
@click.option("--centers", help="gaussian_mixture centers, e.g. '0,0;10,0'.")
@click.option("--sigmas", help="gaussian_mixture sigma per center, e.g. 1,1.")
@click.option("--weights", help="gaussian_mixture weights summing to 1.")
@click.option("--center", help="ring center, e.g. 0,0.")
@click.option("--inner-radius", type=float)
@click.option("--outer-radius", type=float)
@click.option("--side", type=float, help="two_squares side length.")
@click.option("--gap", type=float, help="two_squares gap between the squares.")
@click.option("--header/--no-header", default=True, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), help="CSV file; stdout when omitted.")
def synth(kind, n, seed, low, high, centers, sigmas, weights, center, inner_radius, outer_radius, side, gap,
          header, out):
    """Generate a synthetic dataset as ingestible CSV."""
    with exit_on_error():
        fields = {
            "kind": kind, "n": n, "seed": seed,
            "low": _floats(low, "low"), "high": _floats(high, "high"),
            "centers": _points(centers, "centers"), "sigmas": _floats(sigmas, "sigmas"),
            "weights": _floats(weights, "weights"), "center": _floats(center, "center"),
            "inner_radius": inner_radius, "outer_radius": outer_radius, "side": side, "gap": gap,
        }
        spec = build_spec(**{k: v for k, v in fields.items() if v is not None})
        text = dataset_to_csv(generate(spec), header=header)
        if out:
            with open(out, "w", newline="") as handle:
                handle.write(text)
        else:
            click.echo(text, nl=False)
