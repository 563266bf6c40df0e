from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List

from core import run_logging


class ArtifactSession:
    """
    Tracks the files a run writes into its output directory so a failed run
    can take them back.
    """

    def __init__(self, out_dir: Path):
        self.out_dir = out_dir
        self.created_dir = False
        self.written: List[Path] = []

    def path(self, name: str) -> Path:
        target = self.out_dir / name
        self.written.append(target)
        return target

    def rollback(self) -> None:
        for target in self.written:
            if target.exists():
                target.unlink()
        if self.created_dir and self.out_dir.exists() and not any(self.out_dir.iterdir()):
            self.out_dir.rmdir()


@contextmanager
def run_session(out_dir) -> Iterator[ArtifactSession]:
    """
    The lifespan of one run's output directory.
    It creates the directory on entry and removes partial outputs if the run fails.
    """
    session = ArtifactSession(Path(out_dir))
    if not session.out_dir.exists():
        session.out_dir.mkdir(parents=True)
        session.created_dir = True
    run_logging.debug(f"Run session opened in {session.out_dir}")
    try:
        yield session
    except BaseException:
        run_logging.error(f"Run failed: removing {len(session.written)} partial artifacts from {session.out_dir}")
        session.rollback()
        raise
    run_logging.info(f"Artifacts written to {session.out_dir}: {', '.join(p.name for p in session.written)}")
