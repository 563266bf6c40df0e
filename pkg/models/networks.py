"""Mutable network state for the four models.

Parameters and reports are pydantic models; the networks themselves are
dataclasses because training mutates them in place, one step at a time.
"""

import copy
from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Tuple

import numpy as np

Topology = Literal["rectangular", "hexagonal"]


@dataclass
class SomGrid:
    """A width x height lattice; unit i sits at (i mod width, i div width)."""

    width: int
    height: int
    topology: Topology
    codebook: np.ndarray

    @property
    def n_units(self) -> int:
        return self.width * self.height

    def copy(self) -> "SomGrid":
        return SomGrid(self.width, self.height, self.topology, self.codebook.copy())


@dataclass
class GcsNode:
    id: int
    w: np.ndarray
    counter: float = 0.0


@dataclass
class GcsNetwork:
    """Simplicial complex of GCS nodes; each simplex is a sorted tuple of k+1 ids."""

    k: int
    nodes: Dict[int, GcsNode] = field(default_factory=dict)
    simplices: List[Tuple[int, ...]] = field(default_factory=list)
    next_id: int = 0

    def copy(self) -> "GcsNetwork":
        return copy.deepcopy(self)


@dataclass
class GngNode:
    id: int
    w: np.ndarray
    error: float = 0.0


@dataclass
class GngGraph:
    """Undirected graph; edges are keyed by (low id, high id) and map to age."""

    nodes: Dict[int, GngNode] = field(default_factory=dict)
    edges: Dict[Tuple[int, int], int] = field(default_factory=dict)
    next_id: int = 0

    def copy(self) -> "GngGraph":
        return copy.deepcopy(self)


@dataclass
class SotaNode:
    id: int
    profile: np.ndarray
    parent: Optional[int] = None
    children: List[int] = field(default_factory=list)
    resource: float = 0.0
    frozen: bool = False

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass
class SotaTree:
    """Binary tree of SOTA cells. `profile_shape` is (L, A) for sequence
    profiles, None for plain feature vectors."""

    nodes: Dict[int, SotaNode] = field(default_factory=dict)
    root: int = 0
    next_id: int = 0
    profile_shape: Optional[Tuple[int, int]] = None

    def copy(self) -> "SotaTree":
        return copy.deepcopy(self)
