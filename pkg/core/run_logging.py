import sys
import time
from typing import Any, Dict, Optional

from core import config

_LEVEL_RANK = {name: rank for rank, name in enumerate(config.LOG_LEVELS)}


def log(level: str, message: str) -> None:
    """Prints a prefixed message to stderr when `level` passes LOG_LEVEL."""
    level = level.upper()
    if _LEVEL_RANK.get(level, 0) < _LEVEL_RANK[config.LOG_LEVEL]:
        return
    print(f"{level}: {message}", file=sys.stderr, flush=True)


def debug(message: str) -> None:
    log("DEBUG", message)


def info(message: str) -> None:
    log("INFO", message)


def warning(message: str) -> None:
    log("WARNING", message)


def error(message: str) -> None:
    log("ERROR", message)


class TrainingRunLog:
    """
    Wraps one training run and prints a single formatted block when it ends.

    Usage:
        with TrainingRunLog(model="gng", data=path, seed=7, params=p) as run_log:
            ...
            run_log.record(n_units=40)
    """

    def __init__(self, model: str, data: Optional[str], seed: int, params: Dict[str, Any]):
        self.model = model
        self.data = data
        self.seed = seed
        self.params = params
        self.results: Dict[str, Any] = {}
        self.start_time = 0.0
        self.status = "running"

    def __enter__(self) -> "TrainingRunLog":
        self.start_time = time.time()
        return self

    def __exit__(self, exc_type, exc, tb) -> bool:
        process_time = time.time() - self.start_time
        self.status = "ok" if exc_type is None else f"failed ({exc_type.__name__})"
        self.log_details(process_time)
        return False

    def record(self, **results: Any) -> None:
        self.results.update(results)

    def log_details(self, process_time: float) -> None:
        """
        Formats and prints the run block.
        """
        if _LEVEL_RANK["INFO"] < _LEVEL_RANK[config.LOG_LEVEL]:
            return
        log_message = (
            f"\n----- Training Run Log -----\n"
            f"Timestamp: {time.strftime('%Y-%m-%d %H:%M:%S')}\n"
            f"Model: {self.model}\n"
            f"Data: {self.data or '[in-memory]'}\n"
            f"Seed: {self.seed}\n"
            f"Params: {self.params}\n"
        )
        for key, value in self.results.items():
            log_message += f"{key}: {value}\n"
        log_message += (
            f"----------------------------\n"
            f"Status: {self.status}\n"
            f"Process Time: {process_time:.4f}s\n"
            f"----- End Log -----\n"
        )
        print(log_message, file=sys.stderr, flush=True)
