"""Growing Cell Structures.

The network is a k-dimensional simplicial complex. Two nodes are neighbors
iff they share a simplex. Per presentation the winner moves by eps_b and its
neighbors by eps_n; the winner's signal counter is incremented and then every
counter decays by (1 - counter_decay).

Insertion places a node halfway between the busiest node q and its farthest
neighbor f and splits every simplex containing the edge (q, f). The counters
of q and f are halved and the new node gets their average, so total counter
mass is unchanged.

Deletion removes the least-counter node when its counter is below the
threshold, then removes nodes left in no simplex until none remain. A
deletion that would leave no simplex is skipped.
"""

from typing import List, Set, Tuple

import networkx as nx
import numpy as np

from core import run_logging
from core.errors import DimensionMismatchError, InsufficientUnitsError, StructureError
from core.random_stream import RandomStream
from core.sampling import bounding_box, draw_sample, uniform_in_box
from core.vectors import as_vector, distances_to, move_toward
from models.dataset import Dataset
from models.networks import GcsNetwork, GcsNode
from models.params import GcsParams


def _sorted_ids(net: GcsNetwork) -> List[int]:
    return sorted(net.nodes)


def gcs_neighbors(net: GcsNetwork, node_id: int) -> List[int]:
    neighbors: Set[int] = set()
    for simplex in net.simplices:
        if node_id in simplex:
            neighbors.update(simplex)
    neighbors.discard(node_id)
    return sorted(neighbors)


def gcs_edges(net: GcsNetwork) -> List[Tuple[int, int]]:
    edges: Set[Tuple[int, int]] = set()
    for simplex in net.simplices:
        for i, a in enumerate(simplex):
            for b in simplex[i + 1:]:
                edges.add((a, b))
    return sorted(edges)


def gcs_check(net: GcsNetwork) -> None:
    """Raises StructureError unless every simplex has k+1 distinct existing
    nodes and every node belongs to some simplex."""
    covered: Set[int] = set()
    for simplex in net.simplices:
        if len(set(simplex)) != net.k + 1:
            raise StructureError(f"simplex {simplex} does not have {net.k + 1} distinct nodes")
        missing = [node_id for node_id in simplex if node_id not in net.nodes]
        if missing:
            raise StructureError(f"simplex {simplex} references missing nodes {missing}")
        covered.update(simplex)
    dangling = sorted(set(net.nodes) - covered)
    if dangling:
        raise StructureError(f"dangling nodes {dangling}")
    if len(set(net.simplices)) != len(net.simplices):
        raise StructureError("duplicate simplices")


def gcs_counter_mass(net: GcsNetwork) -> float:
    return float(sum(node.counter for node in net.nodes.values()))


def _add_node(net: GcsNetwork, w: np.ndarray, counter: float = 0.0) -> int:
    node_id = net.next_id
    net.nodes[node_id] = GcsNode(id=node_id, w=w, counter=counter)
    net.next_id += 1
    return node_id


def gcs_init(dataset: Dataset, params: GcsParams, stream: RandomStream) -> GcsNetwork:
    """A single k-simplex with vertices uniform in the data bounding box."""
    low, high = bounding_box(dataset)
    net = GcsNetwork(k=params.k)
    for w in uniform_in_box(low, high, params.k + 1, stream):
        _add_node(net, w)
    net.simplices.append(tuple(_sorted_ids(net)))
    return net


def gcs_adapt(net: GcsNetwork, params: GcsParams, x) -> GcsNetwork:
    if not net.nodes:
        raise InsufficientUnitsError("cannot adapt an empty network")
    x = as_vector(x)
    ids = _sorted_ids(net)
    codebook = np.stack([net.nodes[i].w for i in ids])
    if codebook.shape[1] != x.shape[0]:
        raise DimensionMismatchError(f"input has dimension {x.shape[0]}, network has {codebook.shape[1]}")
    winner = net.nodes[ids[int(np.argmin(distances_to(codebook, x)))]]

    winner.w = move_toward(winner.w, x, params.eps_b)
    for neighbor_id in gcs_neighbors(net, winner.id):
        neighbor = net.nodes[neighbor_id]
        neighbor.w = move_toward(neighbor.w, x, params.eps_n)

    winner.counter += 1.0
    keep = 1.0 - params.counter_decay
    for node in net.nodes.values():
        node.counter *= keep
    return net


def gcs_insert(net: GcsNetwork) -> GcsNetwork:
    if not net.simplices:
        raise StructureError("insertion needs at least one simplex")
    ids = _sorted_ids(net)
    # max() keeps the first maximum, i.e. the lowest id
    q = net.nodes[max(ids, key=lambda i: net.nodes[i].counter)]
    neighbor_ids = gcs_neighbors(net, q.id)
    neighbor_w = np.stack([net.nodes[i].w for i in neighbor_ids])
    f = net.nodes[neighbor_ids[int(np.argmax(distances_to(neighbor_w, q.w)))]]

    r_id = _add_node(net, 0.5 * (q.w + f.w), counter=0.5 * (q.counter + f.counter))
    q.counter *= 0.5
    f.counter *= 0.5

    split: List[Tuple[int, ...]] = []
    for simplex in net.simplices:
        if q.id in simplex and f.id in simplex:
            split.append(tuple(sorted(r_id if i == f.id else i for i in simplex)))
            split.append(tuple(sorted(r_id if i == q.id else i for i in simplex)))
        else:
            split.append(simplex)
    net.simplices = split
    run_logging.debug(f"GCS inserted node {r_id} between {q.id} and {f.id}")
    return net


def gcs_delete(net: GcsNetwork, params: GcsParams) -> GcsNetwork:
    if not net.nodes:
        return net
    ids = _sorted_ids(net)
    candidate = min(ids, key=lambda i: net.nodes[i].counter)
    if net.nodes[candidate].counter >= params.delete_threshold:
        return net
    remaining = [s for s in net.simplices if candidate not in s]
    if not remaining:
        return net

    covered = {node_id for simplex in remaining for node_id in simplex}
    removed = [node_id for node_id in ids if node_id not in covered]
    for node_id in removed:
        del net.nodes[node_id]
    net.simplices = remaining
    if len(removed) > 1:
        run_logging.info(f"GCS deleted node {candidate}; purge removed {len(removed) - 1} dangling nodes")
    return net


def gcs_train(dataset: Dataset, params: GcsParams, stream: RandomStream, presentations: int) -> GcsNetwork:
    """Draw-and-adapt for `presentations` steps, inserting every insert_every
    and deleting every delete_every presentations (0 disables deletion)."""
    if presentations < 0:
        raise StructureError(f"presentations must be >= 0, got {presentations}")
    net = gcs_init(dataset, params, stream)
    for step in range(1, presentations + 1):
        gcs_adapt(net, params, draw_sample(dataset, stream))
        if step % params.insert_every == 0 and (params.max_nodes is None or len(net.nodes) < params.max_nodes):
            gcs_insert(net)
        if params.delete_every and step % params.delete_every == 0:
            gcs_delete(net, params)
    run_logging.debug(f"GCS finished with {len(net.nodes)} nodes and {len(net.simplices)} simplices")
    return net


def gcs_components(net: GcsNetwork) -> int:
    g = nx.Graph()
    g.add_nodes_from(sorted(net.nodes))
    g.add_edges_from(gcs_edges(net))
    return nx.number_connected_components(g)
