"""Self-Organising Tree Algorithm.

A binary tree whose leaves compete for inputs. A cycle presents inputs in
dataset order; each presentation moves the winning leaf by eta_winner, its
sister by eta_sister when the sister is a leaf, and their mother by eta_mother
when the mother is not frozen. After each cycle every leaf's resource (mean
distance to the inputs it wins) is computed and the highest-resource leaf is
split into two copies of itself, the leaf becoming a frozen mother. Training
stops once every resource is below the threshold or no leaf may grow.

Profiles are stored flat. With `profile_shape` set to (L, A) they are read as
position-by-symbol distributions and compared with

    d(s, c) = sum_l (1 - sum_r s[l, r] * c[l, r]) / L

otherwise the Euclidean distance is used.
"""

from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from core import run_logging
from core.errors import DimensionMismatchError, InsufficientUnitsError, StructureError
from core.vectors import as_vector, distances_to, move_toward
from models.dataset import Dataset
from models.networks import SotaNode, SotaTree
from models.params import SotaParams
from models.profile import SequenceProfile


def _profile_distances(profiles: np.ndarray, x: np.ndarray, shape: Tuple[int, int]) -> np.ndarray:
    length, symbols = shape
    stacked = profiles.reshape(-1, length, symbols)
    overlap = (stacked * x.reshape(length, symbols)).sum(axis=2)
    return (1.0 - overlap).sum(axis=1) / length


def sota_sequence_distance(s, c) -> float:
    s_matrix = s.matrix if isinstance(s, SequenceProfile) else np.asarray(s, dtype=np.float64)
    c_matrix = c.matrix if isinstance(c, SequenceProfile) else np.asarray(c, dtype=np.float64)
    if s_matrix.ndim != 2 or s_matrix.shape != c_matrix.shape:
        raise DimensionMismatchError(f"profile shapes differ: {s_matrix.shape} vs {c_matrix.shape}")
    shape = (s_matrix.shape[0], s_matrix.shape[1])
    return float(_profile_distances(c_matrix.reshape(1, -1), s_matrix.reshape(-1), shape)[0])


def encode_alignment(sequences: Sequence[str], alphabet: str) -> Tuple[Dataset, Tuple[int, int]]:
    """One-hot profiles of pre-aligned sequences, flattened into dataset rows.

    Symbols outside the alphabet (gaps, ambiguity codes) spread their mass
    uniformly over the alphabet.
    """
    if not sequences:
        raise InsufficientUnitsError("no sequences to encode")
    length = len(sequences[0])
    if any(len(seq) != length for seq in sequences):
        raise DimensionMismatchError("sequences must be aligned to the same length")
    index = {symbol: i for i, symbol in enumerate(alphabet)}
    rows = np.zeros((len(sequences), length, len(alphabet)))
    for row, seq in zip(rows, sequences):
        for position, symbol in enumerate(seq):
            if symbol in index:
                row[position, index[symbol]] = 1.0
            else:
                row[position, :] = 1.0 / len(alphabet)
    return Dataset(rows=rows.reshape(len(sequences), -1)), (length, len(alphabet))


def _check_input(tree: SotaTree, x: np.ndarray) -> np.ndarray:
    x = as_vector(np.asarray(x, dtype=np.float64).reshape(-1))
    width = tree.nodes[tree.root].profile.shape[0]
    if x.shape[0] != width:
        raise DimensionMismatchError(f"input has {x.shape[0]} values, tree profiles have {width}")
    return x


def sota_leaves(tree: SotaTree) -> List[int]:
    return sorted(node_id for node_id, node in tree.nodes.items() if node.is_leaf)


def sota_edges(tree: SotaTree) -> List[Tuple[int, int, bool]]:
    """(mother, child, mother frozen) for every tree edge, sorted."""
    edges = []
    for node_id in sorted(tree.nodes):
        node = tree.nodes[node_id]
        for child in node.children:
            edges.append((node_id, child, node.frozen))
    return edges


def sota_depth(tree: SotaTree, node_id: int) -> int:
    depth = 0
    node = tree.nodes[node_id]
    while node.parent is not None:
        node = tree.nodes[node.parent]
        depth += 1
    return depth


def _leaf_distances(tree: SotaTree, leaf_ids: List[int], x: np.ndarray) -> np.ndarray:
    profiles = np.stack([tree.nodes[i].profile for i in leaf_ids])
    if tree.profile_shape is None:
        return distances_to(profiles, x)
    return _profile_distances(profiles, x, tree.profile_shape)


def sota_init(dataset: Dataset, profile_shape: Optional[Tuple[int, int]] = None) -> SotaTree:
    """A single root cell holding the dataset mean."""
    if profile_shape is not None and profile_shape[0] * profile_shape[1] != dataset.dim:
        raise DimensionMismatchError(f"profile shape {profile_shape} does not match dimension {dataset.dim}")
    tree = SotaTree(profile_shape=profile_shape)
    tree.nodes[0] = SotaNode(id=0, profile=dataset.rows.mean(axis=0))
    tree.next_id = 1
    return tree


def sota_present(tree: SotaTree, params: SotaParams, x) -> SotaTree:
    leaf_ids = sota_leaves(tree)
    if not leaf_ids:
        raise InsufficientUnitsError("tree has no leaves")
    x = _check_input(tree, x)
    winner = tree.nodes[leaf_ids[int(np.argmin(_leaf_distances(tree, leaf_ids, x)))]]
    winner.profile = move_toward(winner.profile, x, params.eta_winner)

    if winner.parent is not None:
        mother = tree.nodes[winner.parent]
        sister = tree.nodes[next(c for c in mother.children if c != winner.id)]
        if sister.is_leaf:
            sister.profile = move_toward(sister.profile, x, params.eta_sister)
        if not mother.frozen:
            mother.profile = move_toward(mother.profile, x, params.eta_mother)
    return tree


def sota_assign(tree: SotaTree, dataset: Dataset) -> List[int]:
    """Winning leaf id per input, lowest id on ties."""
    leaf_ids = sota_leaves(tree)
    if not leaf_ids:
        raise InsufficientUnitsError("tree has no leaves")
    return [leaf_ids[int(np.argmin(_leaf_distances(tree, leaf_ids, _check_input(tree, x))))]
            for x in dataset.rows]


def sota_resources(tree: SotaTree, dataset: Dataset) -> Dict[int, float]:
    """Mean distance from each leaf to the inputs it wins; 0 for leaves that
    win nothing. Stored on the leaves as well as returned."""
    leaf_ids = sota_leaves(tree)
    if not leaf_ids:
        raise InsufficientUnitsError("tree has no leaves")
    totals = {leaf_id: 0.0 for leaf_id in leaf_ids}
    counts = {leaf_id: 0 for leaf_id in leaf_ids}
    for x in dataset.rows:
        distances = _leaf_distances(tree, leaf_ids, _check_input(tree, x))
        best = int(np.argmin(distances))
        totals[leaf_ids[best]] += float(distances[best])
        counts[leaf_ids[best]] += 1
    resources = {}
    for leaf_id in leaf_ids:
        resources[leaf_id] = totals[leaf_id] / counts[leaf_id] if counts[leaf_id] else 0.0
        tree.nodes[leaf_id].resource = resources[leaf_id]
    return resources


def sota_split(tree: SotaTree, leaf_id: int, max_leaves: Optional[int] = None,
               freeze: bool = True) -> SotaTree:
    """Attaches two copies of a leaf below it; the leaf becomes a mother."""
    if leaf_id not in tree.nodes:
        raise StructureError(f"node {leaf_id} does not exist")
    mother = tree.nodes[leaf_id]
    if not mother.is_leaf:
        raise StructureError(f"node {leaf_id} is not a leaf")
    if max_leaves is not None and len(sota_leaves(tree)) >= max_leaves:
        raise StructureError(f"tree already has {max_leaves} leaves")
    for _ in range(2):
        child_id = tree.next_id
        tree.nodes[child_id] = SotaNode(id=child_id, profile=mother.profile.copy(), parent=leaf_id)
        mother.children.append(child_id)
        tree.next_id += 1
    mother.frozen = freeze
    return tree


def _present_cycle(tree: SotaTree, params: SotaParams, dataset: Dataset) -> None:
    presentations = params.cycle_presentations or len(dataset)
    for i in range(presentations):
        sota_present(tree, params, dataset.rows[i % len(dataset)])


def sota_train(dataset: Dataset, params: SotaParams,
               profile_shape: Optional[Tuple[int, int]] = None) -> Tuple[SotaTree, List[int]]:
    """Grows the tree cycle by cycle until every leaf resource is below the
    threshold or no leaf may split. Deterministic: no random draws."""
    tree = sota_init(dataset, profile_shape)
    if params.initial_split and params.max_leaves >= 2:
        sota_split(tree, tree.root, freeze=params.freeze_mothers)

    converged = False
    for cycle in range(1, params.max_cycles + 1):
        _present_cycle(tree, params, dataset)
        resources = sota_resources(tree, dataset)
        candidates = [leaf_id for leaf_id, resource in resources.items()
                      if resource >= params.resource_threshold
                      and (params.max_depth is None or sota_depth(tree, leaf_id) < params.max_depth)]
        if not candidates or len(resources) >= params.max_leaves:
            converged = True
            run_logging.info(f"SOTA stopped after {cycle} cycles with {len(resources)} leaves; "
                             f"max resource {max(resources.values()):.6g}")
            break
        # max() keeps the first maximum, i.e. the lowest id
        target = max(candidates, key=lambda leaf_id: resources[leaf_id])
        sota_split(tree, target, params.max_leaves, freeze=params.freeze_mothers)
        run_logging.debug(f"SOTA cycle {cycle}: split leaf {target} (resource {resources[target]:.6g})")

    if not converged:
        run_logging.warning(f"SOTA reached max_cycles={params.max_cycles} before convergence")
        sota_resources(tree, dataset)
    return tree, sota_assign(tree, dataset)
