"""Codebook quality measures. All functions are pure."""

from typing import Dict, List, Optional

import math

import numpy as np

from core.errors import EmptyDatasetError, InsufficientUnitsError
from core.vectors import as_codebook, distances_to, find_winners
from models.dataset import Dataset
from models.networks import SomGrid
from models.report import MetricReport
from services.som import grid_distance_matrix


def _mean(values) -> float:
    # fsum is exact, so the mean does not depend on summation order
    return math.fsum(values) / len(values)


def _checked_codebook(codebook) -> np.ndarray:
    matrix = as_codebook(codebook)
    if matrix.shape[0] == 0:
        raise InsufficientUnitsError("codebook is empty")
    return matrix


def _bmu_distances(codebook: np.ndarray, dataset: Dataset):
    if len(dataset) == 0:
        raise EmptyDatasetError("no inputs to evaluate")
    winners = np.empty(len(dataset), dtype=np.int64)
    distances = np.empty(len(dataset))
    for i, x in enumerate(dataset.rows):
        row = distances_to(codebook, x)
        winners[i] = int(np.argmin(row))
        distances[i] = row[winners[i]]
    return winners, distances


def assignments(codebook, dataset: Dataset) -> List[int]:
    """Best matching unit index per input."""
    winners, _ = _bmu_distances(_checked_codebook(codebook), dataset)
    return [int(w) for w in winners]


def quantization_error(codebook, dataset: Dataset, squared: bool = False) -> float:
    """Mean distance (or squared distance) from each input to its BMU."""
    _, distances = _bmu_distances(_checked_codebook(codebook), dataset)
    if squared:
        return _mean(distances * distances)
    return _mean(distances)


def dead_units(codebook, dataset: Dataset) -> int:
    """Units that win no input."""
    matrix = _checked_codebook(codebook)
    return int(matrix.shape[0] - len(set(assignments(matrix, dataset))))


def topographic_error(grid: SomGrid, dataset: Dataset) -> float:
    """Fraction of inputs whose first and second BMUs are not radius-1
    neighbors on the grid."""
    if grid.n_units < 2:
        raise InsufficientUnitsError("topographic error needs at least 2 units")
    if len(dataset) == 0:
        raise EmptyDatasetError("no inputs to evaluate")
    grid_distances = grid_distance_matrix(grid.width, grid.height, grid.topology)
    misses = 0
    for x in dataset.rows:
        best, second = find_winners(grid.codebook, x)
        if grid_distances[best, second] > 1:
            misses += 1
    return misses / len(dataset)


def metric_report(codebook, dataset: Dataset, grid: Optional[SomGrid] = None,
                  extras: Optional[Dict[str, float]] = None) -> MetricReport:
    matrix = _checked_codebook(codebook)
    winners, distances = _bmu_distances(matrix, dataset)
    return MetricReport(
        quantization_error=_mean(distances),
        quantization_error_squared=_mean(distances * distances),
        topographic_error=topographic_error(grid, dataset) if grid is not None and grid.n_units >= 2 else None,
        dead_units=int(matrix.shape[0] - len(set(winners.tolist()))),
        n_units=int(matrix.shape[0]),
        n_inputs=len(dataset),
        extras=extras or {},
    )
