from typing import Tuple

import numpy as np

from core.errors import EmptyDatasetError
from core.random_stream import RandomStream
from models.dataset import Dataset


def draw_sample(dataset: Dataset, stream: RandomStream) -> np.ndarray:
    """A row drawn uniformly at random; advances `stream` by one word."""
    if len(dataset) == 0:
        raise EmptyDatasetError("cannot draw from an empty dataset")
    return dataset.rows[stream.randbelow(len(dataset))]


def bounding_box(dataset: Dataset) -> Tuple[np.ndarray, np.ndarray]:
    return dataset.rows.min(axis=0), dataset.rows.max(axis=0)


def uniform_in_box(low: np.ndarray, high: np.ndarray, count: int, stream: RandomStream) -> np.ndarray:
    """`count` vectors uniform in the box [low, high], row by row."""
    u = stream.uniforms(count * low.shape[0]).reshape(count, low.shape[0])
    points = low + u * (high - low)
    # rounding can push low + u * (high - low) one ulp past high
    return np.clip(points, low, high)
