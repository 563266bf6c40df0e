"""Growing Neural Gas.

Per adaptation step, with s1 and s2 the closest and second-closest nodes:

1. E(s1) += ||w(s1) - x||^2
2. s1 moves by eps_b toward x, its graph neighbors by eps_n
3. edge (s1, s2) is created or refreshed with age 0
4. every other edge at s1 ages by 1; edges older than max_age are dropped
5. nodes left without edges are dropped
6. every error decays by (1 - beta_decay)

Every insert_every steps a node is placed halfway between the max-error node
q and its max-error neighbor f; both errors shrink by alpha_split and the new
node takes q's reduced error.
"""

from typing import List, Tuple

import networkx as nx
import numpy as np

from core import run_logging
from core.errors import DimensionMismatchError, InsufficientUnitsError, StructureError
from core.random_stream import RandomStream
from core.sampling import bounding_box, draw_sample, uniform_in_box
from core.vectors import as_vector, distances_to, move_toward
from models.dataset import Dataset
from models.networks import GngGraph, GngNode
from models.params import GngParams


def _edge(a: int, b: int) -> Tuple[int, int]:
    return (a, b) if a < b else (b, a)


def gng_neighbors(graph: GngGraph, node_id: int) -> List[int]:
    neighbors = []
    for a, b in graph.edges:
        if a == node_id:
            neighbors.append(b)
        elif b == node_id:
            neighbors.append(a)
    return sorted(neighbors)


def gng_edges(graph: GngGraph) -> List[Tuple[int, int, int]]:
    return [(a, b, age) for (a, b), age in sorted(graph.edges.items())]


def _add_node(graph: GngGraph, w: np.ndarray, error: float = 0.0) -> int:
    node_id = graph.next_id
    graph.nodes[node_id] = GngNode(id=node_id, w=w, error=error)
    graph.next_id += 1
    return node_id


def gng_init(dataset: Dataset, stream: RandomStream) -> GngGraph:
    """Two nodes uniform in the data bounding box and no edge."""
    low, high = bounding_box(dataset)
    graph = GngGraph()
    for w in uniform_in_box(low, high, 2, stream):
        _add_node(graph, w)
    return graph


def gng_adapt_step(graph: GngGraph, params: GngParams, x) -> GngGraph:
    if len(graph.nodes) < 2:
        raise InsufficientUnitsError(f"adaptation needs at least 2 nodes, got {len(graph.nodes)}")
    x = as_vector(x)
    ids = sorted(graph.nodes)
    codebook = np.stack([graph.nodes[i].w for i in ids])
    if codebook.shape[1] != x.shape[0]:
        raise DimensionMismatchError(f"input has dimension {x.shape[0]}, graph has {codebook.shape[1]}")
    distances = distances_to(codebook, x)
    first = int(np.argmin(distances))
    s1_distance = distances[first]
    distances[first] = np.inf
    s1 = graph.nodes[ids[first]]
    s2 = graph.nodes[ids[int(np.argmin(distances))]]

    s1.error += float(s1_distance * s1_distance)
    s1.w = move_toward(s1.w, x, params.eps_b)
    for neighbor_id in gng_neighbors(graph, s1.id):
        neighbor = graph.nodes[neighbor_id]
        neighbor.w = move_toward(neighbor.w, x, params.eps_n)

    hebbian = _edge(s1.id, s2.id)
    for edge in list(graph.edges):
        if s1.id in edge and edge != hebbian:
            graph.edges[edge] += 1
            if graph.edges[edge] > params.max_age:
                del graph.edges[edge]
    graph.edges[hebbian] = 0

    connected = {node_id for edge in graph.edges for node_id in edge}
    for node_id in ids:
        if node_id not in connected:
            del graph.nodes[node_id]

    keep = 1.0 - params.beta_decay
    for node in graph.nodes.values():
        node.error *= keep
    return graph


def gng_insert(graph: GngGraph, params: GngParams) -> GngGraph:
    if not graph.edges:
        raise StructureError("insertion needs at least one edge")
    ids = sorted(graph.nodes)
    q = graph.nodes[max(ids, key=lambda i: graph.nodes[i].error)]
    neighbor_ids = gng_neighbors(graph, q.id)
    if not neighbor_ids:
        raise StructureError(f"max-error node {q.id} has no neighbors")
    f = graph.nodes[max(neighbor_ids, key=lambda i: graph.nodes[i].error)]

    q.error *= params.alpha_split
    f.error *= params.alpha_split
    r_id = _add_node(graph, 0.5 * (q.w + f.w), error=q.error)
    del graph.edges[_edge(q.id, f.id)]
    graph.edges[_edge(q.id, r_id)] = 0
    graph.edges[_edge(r_id, f.id)] = 0
    return graph


def gng_components(graph: GngGraph) -> int:
    """Number of connected components over the current nodes and edges."""
    if not graph.nodes:
        return 0
    return nx.number_connected_components(to_networkx(graph))


def to_networkx(graph: GngGraph) -> nx.Graph:
    g = nx.Graph()
    for node_id in sorted(graph.nodes):
        g.add_node(node_id, error=graph.nodes[node_id].error)
    for (a, b), age in sorted(graph.edges.items()):
        g.add_edge(a, b, age=age)
    return g


def gng_train(dataset: Dataset, params: GngParams, stream: RandomStream, presentations: int) -> GngGraph:
    if presentations < 0:
        raise StructureError(f"presentations must be >= 0, got {presentations}")
    graph = gng_init(dataset, stream)
    for step in range(1, presentations + 1):
        gng_adapt_step(graph, params, draw_sample(dataset, stream))
        if step % params.insert_every == 0 and (params.max_nodes is None or len(graph.nodes) < params.max_nodes):
            gng_insert(graph, params)
    run_logging.debug(f"GNG finished with {len(graph.nodes)} nodes, {len(graph.edges)} edges, "
                      f"{gng_components(graph)} components")
    return graph
