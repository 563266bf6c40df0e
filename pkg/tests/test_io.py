import numpy as np
import pytest

from core.errors import IngestError
from models.dataset import Dataset
from services import io
from services.synth import build_spec, generate


def _write(tmp_path, text, name="data.csv"):
    path = tmp_path / name
    path.write_text(text)
    return path


def test_ingest_plain_rows(tmp_path):
    dataset = io.ingest_csv(_write(tmp_path, "0,0\n1,1\n"))
    assert dataset.rows.tolist() == [[0.0, 0.0], [1.0, 1.0]]
    assert dataset.labels is None


def test_ingest_label_column(tmp_path):
    dataset = io.ingest_csv(_write(tmp_path, "x,y,label\n0.5,1.5,0\n2,3,1\n"), has_header=True)
    assert dataset.dim == 2
    assert dataset.labels == [0, 1]


def test_ingest_ragged_row_names_line(tmp_path):
    with pytest.raises(IngestError) as info:
        io.ingest_csv(_write(tmp_path, "0,0\n1,1\n2,2,2\n"))
    assert info.value.line == 3
    assert "line 3" in str(info.value)


def test_ingest_short_row_names_line(tmp_path):
    with pytest.raises(IngestError) as info:
        io.ingest_csv(_write(tmp_path, "x,y\n0,0\n1\n"), has_header=True)
    assert info.value.line == 3
    assert "ragged" in str(info.value)


def test_ingest_short_row_without_header_is_ragged(tmp_path):
    with pytest.raises(IngestError) as info:
        io.ingest_csv(_write(tmp_path, "0,0\n1\n"))
    assert info.value.line == 2
    assert "ragged" in str(info.value)


def test_ingest_blank_lines_keep_file_line_numbers(tmp_path):
    with pytest.raises(IngestError) as info:
        io.ingest_csv(_write(tmp_path, "0,0\n\n1\n"))
    assert info.value.line == 3
    assert "ragged" in str(info.value)
    with pytest.raises(IngestError) as info:
        io.ingest_csv(_write(tmp_path, "x,y\n\n0,0\n\n1,abc\n"), has_header=True)
    assert info.value.line == 5


def test_ingest_skips_blank_lines(tmp_path):
    dataset = io.ingest_csv(_write(tmp_path, "0,0\n\n1,1\n\n"))
    assert dataset.rows.tolist() == [[0.0, 0.0], [1.0, 1.0]]


def test_ingest_non_numeric_cell(tmp_path):
    with pytest.raises(IngestError) as info:
        io.ingest_csv(_write(tmp_path, "0,0\n1,abc\n"))
    assert info.value.line == 2


def test_ingest_empty_and_missing_files(tmp_path):
    with pytest.raises(IngestError):
        io.ingest_csv(_write(tmp_path, ""))
    with pytest.raises(IngestError):
        io.ingest_csv(tmp_path / "missing.csv")
    with pytest.raises(IngestError):
        io.ingest_csv(_write(tmp_path, "x,y\n"), has_header=True)


def test_ingest_fractional_label(tmp_path):
    with pytest.raises(IngestError):
        io.ingest_csv(_write(tmp_path, "x,label\n0,0.5\n"), has_header=True)


def test_generated_values_round_trip_exactly(tmp_path):
    dataset = generate(build_spec(kind="gaussian_mixture", n=200, seed=12, centers=[[0.1, 0.2], [3.3, -7.7]],
                                  sigmas=[0.3, 1.7]))
    path = tmp_path / "mix.csv"
    io.dataset_to_csv(dataset, path)
    back = io.ingest_csv(path, has_header=True)
    assert np.array_equal(back.rows, dataset.rows)
    assert back.labels == dataset.labels


def test_codebook_round_trip(tmp_path):
    vectors = np.array([[0.1, 1 / 3], [2e-300, -5.5]])
    path = tmp_path / "codebook.csv"
    io.write_codebook(path, [3, 7], vectors, [0.25, 1 / 7], "error")
    ids, back, values, name = io.read_codebook(path)
    assert ids == [3, 7] and name == "error"
    assert np.array_equal(back, vectors)
    assert values.tolist() == [0.25, 1 / 7]
    assert path.read_text().splitlines()[0] == "id,x0,x1,error"


def test_edges_round_trip(tmp_path):
    path = tmp_path / "edges.txt"
    io.write_edges(path, [(0, 1, 4), (1, 2, 0)])
    assert path.read_text() == "0 1 4\n1 2 0\n"
    assert io.read_edges(path) == [(0, 1, 4), (1, 2, 0)]
    io.write_edges(path, [])
    assert io.read_edges(path) == []


def test_assignments_round_trip(tmp_path):
    path = tmp_path / "assignments.csv"
    io.write_assignments(path, [2, 0, 2])
    assert path.read_text() == "row_index,unit_id\n0,2\n1,0\n2,2\n"
    assert io.read_assignments(path) == [2, 0, 2]


def test_metrics_round_trip(tmp_path):
    path = tmp_path / "metrics.txt"
    io.write_metrics(path, ["n_units=4", "quantization_error=0.10000000000000001"])
    assert io.read_metrics(path) == {"n_units": 4.0, "quantization_error": 0.1}
    with pytest.raises(IngestError):
        io.parse_metrics("no equals sign\n")


def test_sequences(tmp_path):
    path = _write(tmp_path, ">first\nACGT\n\n>second\nAC-T\n", "seqs.txt")
    assert io.ingest_sequences(path) == ["ACGT", "AC-T"]


def test_dataset_to_csv_text():
    text = io.dataset_to_csv(Dataset(rows=[[0.5, 1.0]], labels=[2]))
    assert text == "x0,x1,label\n0.5,1,2\n"
