"""Distance and winner search over codebooks.

Every winner search and metric in the toolkit goes through `distances_to`, so
two routines that compare the same pair of vectors always see the same double.
Ties are broken by the lowest index.
"""

from typing import Tuple

import numpy as np

from core.errors import DimensionMismatchError, InsufficientUnitsError


def as_vector(x) -> np.ndarray:
    vector = np.asarray(x, dtype=np.float64)
    if vector.ndim != 1 or vector.size == 0:
        raise DimensionMismatchError(f"expected a nonempty 1-D vector, got shape {vector.shape}")
    return vector


def as_codebook(codebook) -> np.ndarray:
    matrix = np.asarray(codebook, dtype=np.float64)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    if matrix.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-D codebook, got shape {matrix.shape}")
    return matrix


def distances_to(codebook: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Euclidean distance from each codebook row to `x`."""
    if codebook.shape[1] != x.shape[0]:
        raise DimensionMismatchError(f"codebook has dimension {codebook.shape[1]}, input has {x.shape[0]}")
    diff = codebook - x
    return np.sqrt((diff * diff).sum(axis=1))


def euclidean_distance(a, b) -> float:
    a = as_vector(a)
    b = as_vector(b)
    return float(distances_to(a.reshape(1, -1), b)[0])


def find_winner(codebook, x) -> int:
    codebook = as_codebook(codebook)
    if codebook.shape[0] < 1:
        raise InsufficientUnitsError("winner search needs at least 1 unit")
    # argmin returns the first minimum
    return int(np.argmin(distances_to(codebook, as_vector(x))))


def find_winners(codebook, x) -> Tuple[int, int]:
    """Indices of the closest and second-closest codebook vectors."""
    codebook = as_codebook(codebook)
    if codebook.shape[0] < 2:
        raise InsufficientUnitsError(f"two-winner search needs at least 2 units, got {codebook.shape[0]}")
    distances = distances_to(codebook, as_vector(x))
    best = int(np.argmin(distances))
    distances[best] = np.inf
    second = int(np.argmin(distances))
    return best, second


def move_toward(w: np.ndarray, x: np.ndarray, rate: float) -> np.ndarray:
    """w + rate * (x - w). Rate 0 or x == w keeps w; rate 1 lands exactly on x."""
    if rate == 1.0:
        return np.array(np.broadcast_to(x, np.shape(w)), dtype=np.float64)
    return w + rate * (x - w)
