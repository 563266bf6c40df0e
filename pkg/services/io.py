"""Reading and writing datasets and training artifacts.

Every file written here can be read back by the matching reader. Floats are
printed with 17 significant digits and lines end with '\n', so a run's output
is byte-identical across repeated runs and values round-trip exactly.
"""

import io
import re
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from core.config import FLOAT_FORMAT, LINE_TERMINATOR
from core.errors import IngestError
from models.dataset import Dataset

PathLike = Union[str, Path]

_PARSER_LINE = re.compile(r"line (\d+)")


def _read_frame(path: PathLike, has_header: bool, **kwargs) -> pd.DataFrame:
    try:
        return pd.read_csv(path, header=0 if has_header else None, dtype=str,
                           keep_default_na=False, skip_blank_lines=True, **kwargs)
    except FileNotFoundError:
        raise IngestError(f"file not found: {path}")
    except pd.errors.EmptyDataError:
        raise IngestError(f"file is empty: {path}")
    except pd.errors.ParserError as e:
        match = _PARSER_LINE.search(str(e))
        raise IngestError(f"ragged row: {e}", line=int(match.group(1)) if match else None)


def _numbered_lines(path: PathLike) -> List[Tuple[int, str]]:
    try:
        text = Path(path).read_text()
    except FileNotFoundError:
        raise IngestError(f"file not found: {path}")
    return [(number, line) for number, line in enumerate(text.splitlines(), start=1) if line.strip()]


def ingest_csv(path: PathLike, has_header: bool = False) -> Dataset:
    """Comma-separated reals, one row per line. With a header whose last
    column is `label`, that column is read as integer class tags. Blank lines
    are skipped; errors name the line in the file as written."""
    numbered = _numbered_lines(path)
    if not numbered:
        raise IngestError(f"file is empty: {path}")
    width = numbered[0][1].count(",") + 1
    header = [numbered.pop(0)[1]] if has_header else []
    if not numbered:
        raise IngestError(f"file has no data rows: {path}")
    for number, line in numbered:
        fields = line.count(",") + 1
        if fields != width:
            raise IngestError(f"ragged row: expected {width} fields, got {fields}", line=number)
    line_numbers = [number for number, _ in numbered]

    body = "\n".join(header + [line for _, line in numbered])
    frame = _read_frame(io.StringIO(body), has_header)

    label_column = None
    if has_header and str(frame.columns[-1]).strip().lower() == "label":
        label_column = frame.columns[-1]

    stripped = frame.apply(lambda column: column.str.strip())
    bad = stripped.apply(lambda column: pd.to_numeric(column, errors="coerce")).isna().to_numpy()
    if bad.any():
        row, col = np.argwhere(bad)[0]
        raise IngestError(f"non-numeric cell '{frame.iat[row, col]}' in column {col + 1}", line=line_numbers[row])
    # float() parsing keeps 17-digit values bit-exact
    values = stripped.astype(np.float64)

    labels = None
    if label_column is not None:
        label_values = values.pop(label_column).to_numpy()
        if np.any(label_values != np.round(label_values)):
            row = int(np.argmax(label_values != np.round(label_values)))
            raise IngestError(f"label '{label_values[row]}' is not an integer", line=line_numbers[row])
        labels = [int(v) for v in label_values]
        if values.shape[1] == 0:
            raise IngestError(f"no feature columns besides label: {path}")

    return Dataset(rows=values.to_numpy(dtype=np.float64), labels=labels)


def ingest_sequences(path: PathLike) -> List[str]:
    """Pre-aligned sequences, one per line; '>' header lines and blank lines
    are skipped."""
    try:
        text = Path(path).read_text()
    except FileNotFoundError:
        raise IngestError(f"file not found: {path}")
    sequences = [line.strip() for line in text.splitlines() if line.strip() and not line.startswith(">")]
    if not sequences:
        raise IngestError(f"file has no sequences: {path}")
    return sequences


def dataset_to_csv(dataset: Dataset, path: Optional[PathLike] = None, header: bool = True) -> Optional[str]:
    """Writes `x0..x{n-1}[,label]` rows; returns the text when `path` is None."""
    frame = pd.DataFrame(dataset.rows, columns=[f"x{j}" for j in range(dataset.dim)])
    if dataset.labels is not None:
        frame["label"] = dataset.labels
    return frame.to_csv(path, index=False, header=header, float_format=FLOAT_FORMAT, lineterminator=LINE_TERMINATOR)


def write_codebook(path: PathLike, ids: Sequence[int], vectors: np.ndarray, values: Sequence[float],
                   value_name: str) -> None:
    frame = pd.DataFrame(np.asarray(vectors, dtype=np.float64),
                         columns=[f"x{j}" for j in range(np.asarray(vectors).shape[1])])
    frame.insert(0, "id", [int(i) for i in ids])
    frame[value_name] = np.asarray(values, dtype=np.float64)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator=LINE_TERMINATOR)


def read_codebook(path: PathLike) -> Tuple[List[int], np.ndarray, np.ndarray, str]:
    """(ids, vectors, values, value column name) of a codebook file."""
    frame = _read_frame(path, has_header=True)
    columns = list(frame.columns)
    if len(columns) < 3 or columns[0] != "id":
        raise IngestError(f"not a codebook file (expected id,x0..,value header): {path}")
    try:
        ids = [int(v) for v in frame[columns[0]]]
        vectors = frame[columns[1:-1]].astype(np.float64).to_numpy()
        values = frame[columns[-1]].astype(np.float64).to_numpy()
    except ValueError as e:
        raise IngestError(f"malformed codebook {path}: {e}")
    return ids, vectors, values, columns[-1]


def write_assignments(path: PathLike, unit_ids: Sequence[int]) -> None:
    frame = pd.DataFrame({"row_index": range(len(unit_ids)), "unit_id": [int(u) for u in unit_ids]})
    frame.to_csv(path, index=False, lineterminator=LINE_TERMINATOR)


def read_assignments(path: PathLike) -> List[int]:
    frame = _read_frame(path, has_header=True)
    if list(frame.columns) != ["row_index", "unit_id"]:
        raise IngestError(f"not an assignments file: {path}")
    return [int(v) for v in frame["unit_id"]]


def write_edges(path: PathLike, edges: Sequence[Tuple]) -> None:
    """One `id_a id_b [attribute]` line per edge."""
    if not edges:
        Path(path).write_bytes(b"")
        return
    frame = pd.DataFrame([tuple(int(v) for v in edge) for edge in edges])
    frame.to_csv(path, sep=" ", index=False, header=False, lineterminator=LINE_TERMINATOR)


def read_edges(path: PathLike) -> List[Tuple[int, ...]]:
    if Path(path).stat().st_size == 0:
        return []
    frame = _read_frame(path, has_header=False, sep=" ")
    return [tuple(int(v) for v in row) for row in frame.itertuples(index=False)]


def write_metrics(path: PathLike, lines: Sequence[str]) -> None:
    Path(path).write_bytes(("".join(line + LINE_TERMINATOR for line in lines)).encode("utf-8"))


def parse_metrics(text: str) -> Dict[str, float]:
    metrics = {}
    for number, line in enumerate(io.StringIO(text), start=1):
        line = line.strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise IngestError(f"expected key=value, got '{line}'", line=number)
        try:
            metrics[key] = float(value)
        except ValueError:
            raise IngestError(f"metric '{key}' is not numeric: '{value}'", line=number)
    return metrics


def read_metrics(path: PathLike) -> Dict[str, float]:
    return parse_metrics(Path(path).read_text())
