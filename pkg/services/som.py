"""Fixed-topology self-organizing map.

One training step draws a sample, evaluates the rate and radius schedules at
step t, finds the best matching unit c and moves every unit within grid
distance radius(t) of c toward the sample:

    m_i(t+1) = m_i(t) + alpha(t) * (x(t) - m_i(t))   for i in N_c(t)
    m_i(t+1) = m_i(t)                                otherwise

The neighborhood is a hard ball. Rectangular lattices use Chebyshev grid
distance; hexagonal lattices use ring distance on odd-row offset coordinates.
"""

from functools import lru_cache
from typing import List, Set, Tuple

import numpy as np

from core import run_logging
from core.errors import DimensionMismatchError, InsufficientUnitsError, StructureError
from core.random_stream import RandomStream
from core.sampling import bounding_box, draw_sample, uniform_in_box
from core.schedules import schedule_value
from core.vectors import as_vector, find_winner, move_toward
from models.dataset import Dataset
from models.networks import SomGrid, Topology
from models.params import SomParams


def _axial(col: np.ndarray, row: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    # odd rows are shifted half a cell to the right
    return col - (row - (row & 1)) // 2, row


@lru_cache(maxsize=32)
def grid_distance_matrix(width: int, height: int, topology: Topology) -> np.ndarray:
    """Pairwise grid-space distances between all units of a lattice."""
    index = np.arange(width * height)
    col, row = index % width, index // width
    if topology == "rectangular":
        dcol = np.abs(col[:, None] - col[None, :])
        drow = np.abs(row[:, None] - row[None, :])
        distances = np.maximum(dcol, drow)
    elif topology == "hexagonal":
        q, r = _axial(col, row)
        dq = q[:, None] - q[None, :]
        dr = r[:, None] - r[None, :]
        distances = (np.abs(dq) + np.abs(dr) + np.abs(dq + dr)) // 2
    else:
        raise StructureError(f"unknown topology '{topology}'")
    distances = distances.astype(np.float64)
    distances.setflags(write=False)
    return distances


def grid_distance(grid: SomGrid, a: int, b: int) -> float:
    return float(grid_distance_matrix(grid.width, grid.height, grid.topology)[a, b])


def _check_unit(grid: SomGrid, c: int) -> None:
    if not 0 <= c < grid.n_units:
        raise StructureError(f"unit {c} outside grid of {grid.n_units} units")


def grid_neighbors(grid: SomGrid, c: int, radius: float) -> Set[int]:
    """Units within grid distance `radius` of unit `c`, including `c`."""
    _check_unit(grid, c)
    if radius < 0:
        raise StructureError(f"radius must be >= 0, got {radius}")
    row = grid_distance_matrix(grid.width, grid.height, grid.topology)[c]
    return {int(i) for i in np.flatnonzero(row <= radius)}


def lattice_edges(grid: SomGrid) -> List[Tuple[int, int]]:
    """Radius-1 adjacency of the lattice as sorted (a, b) pairs with a < b."""
    distances = grid_distance_matrix(grid.width, grid.height, grid.topology)
    a, b = np.nonzero(np.triu(distances == 1))
    return [(int(i), int(j)) for i, j in zip(a, b)]


def som_init(width: int, height: int, topology: Topology, dataset: Dataset, stream: RandomStream) -> SomGrid:
    """Codebook drawn uniformly inside the per-coordinate bounding box of the data."""
    if width < 1 or height < 1:
        raise InsufficientUnitsError(f"grid needs width, height >= 1, got {width}x{height}")
    if topology not in ("rectangular", "hexagonal"):
        raise StructureError(f"unknown topology '{topology}'")
    low, high = bounding_box(dataset)
    codebook = uniform_in_box(low, high, width * height, stream)
    return SomGrid(width=width, height=height, topology=topology, codebook=codebook)


def som_update(grid: SomGrid, x, alpha: float, radius: float) -> SomGrid:
    """Applies the update rule in place with explicit rate and radius."""
    x = as_vector(x)
    if x.shape[0] != grid.codebook.shape[1]:
        raise DimensionMismatchError(f"input has dimension {x.shape[0]}, grid has {grid.codebook.shape[1]}")
    c = find_winner(grid.codebook, x)
    row = grid_distance_matrix(grid.width, grid.height, grid.topology)[c]
    members = np.flatnonzero(row <= radius)
    grid.codebook[members] = move_toward(grid.codebook[members], x, alpha)
    return grid


def som_train_step(grid: SomGrid, params: SomParams, x, t: int) -> SomGrid:
    if t >= params.total_steps:
        raise StructureError(f"step {t} is past the training horizon of {params.total_steps}")
    alpha = schedule_value(params.alpha, t)
    radius = schedule_value(params.radius, t)
    return som_update(grid, x, alpha, radius)


def som_train(dataset: Dataset, params: SomParams, initial: SomGrid, stream: RandomStream) -> SomGrid:
    """Runs exactly `params.total_steps` draw-and-update steps on a copy of `initial`."""
    if initial.codebook.shape[1] != dataset.dim:
        raise DimensionMismatchError(f"grid has dimension {initial.codebook.shape[1]}, data has {dataset.dim}")
    grid = initial.copy()
    for t in range(params.total_steps):
        x = draw_sample(dataset, stream)
        som_train_step(grid, params, x, t)
    run_logging.debug(f"SOM {grid.width}x{grid.height} trained for {params.total_steps} steps")
    return grid
