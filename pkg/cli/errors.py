from contextlib import contextmanager

import click

from core import run_logging
from core.errors import ToolkitError, exit_code_for


@contextmanager
def exit_on_error():
    """Turns toolkit errors into an ERROR line on stderr and a nonzero exit code."""
    try:
        yield
    except click.exceptions.Exit:
        raise
    except ToolkitError as e:
        run_logging.error(str(e))
        raise click.exceptions.Exit(exit_code_for(e))
    except Exception as e:
        run_logging.error(f"Internal error: {e!r}")
        raise click.exceptions.Exit(exit_code_for(e))
