import click

# Import commands from the cli directory
from cli.assign import assign
from cli.metrics import metrics
from cli.synth import synth
from cli.train import train
# Import the application version from the config
from core.config import APP_VERSION


@click.group(help="Growing self-organizing networks: SOM, GCS, GNG and SOTA training, assignment and metrics.")
@click.version_option(APP_VERSION, prog_name="grownets")
def app():
    pass


# --- Mount Commands ---
app.add_command(train)
app.add_command(assign)
app.add_command(metrics)
app.add_command(synth)


if __name__ == "__main__":
    app()
