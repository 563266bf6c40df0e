"""Training orchestration: load data, train one model, write its artifacts."""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np

from core import config as app_config
from core.random_stream import RandomStream
from core.run_logging import TrainingRunLog
from models.config import RunConfig
from models.dataset import Dataset
from models.report import MetricReport
from services import io, metrics
from services.gcs import gcs_components, gcs_edges, gcs_train
from services.gng import gng_components, gng_edges, gng_train
from services.som import lattice_edges, som_init, som_train
from services.sota import encode_alignment, sota_edges, sota_leaves, sota_train
from storage.session import run_session


@dataclass
class TrainedModel:
    """The exportable view of a trained network."""

    ids: List[int]
    vectors: np.ndarray
    values: np.ndarray
    value_name: str
    edges: List[Tuple[int, ...]]
    assignments: List[int]
    report: MetricReport


def load_dataset(run_config: RunConfig) -> Tuple[Dataset, Optional[Tuple[int, int]]]:
    if run_config.model == "sota" and run_config.sota.alphabet:
        sequences = io.ingest_sequences(run_config.data)
        return encode_alignment(sequences, run_config.sota.alphabet)
    return io.ingest_csv(run_config.data, has_header=run_config.has_header), None


def _map_ids(ids: List[int], codebook: np.ndarray, dataset: Dataset) -> List[int]:
    return [ids[i] for i in metrics.assignments(codebook, dataset)]


def _train_som(run_config: RunConfig, dataset: Dataset) -> TrainedModel:
    settings = run_config.som
    stream = RandomStream(run_config.seed)
    initial = som_init(settings.width, settings.height, settings.topology, dataset, stream)
    grid = som_train(dataset, settings.to_params(), initial, stream)
    units = metrics.assignments(grid.codebook, dataset)
    hits = np.bincount(units, minlength=grid.n_units).astype(np.float64)
    return TrainedModel(
        ids=list(range(grid.n_units)), vectors=grid.codebook, values=hits, value_name="hits",
        edges=lattice_edges(grid), assignments=units,
        report=metrics.metric_report(grid.codebook, dataset, grid=grid),
    )


def _train_gcs(run_config: RunConfig, dataset: Dataset) -> TrainedModel:
    settings = run_config.gcs
    net = gcs_train(dataset, settings.to_params(), RandomStream(run_config.seed), settings.presentations)
    ids = sorted(net.nodes)
    codebook = np.stack([net.nodes[i].w for i in ids])
    extras = {"components": gcs_components(net), "simplices": len(net.simplices)}
    return TrainedModel(
        ids=ids, vectors=codebook, values=np.array([net.nodes[i].counter for i in ids]), value_name="counter",
        edges=gcs_edges(net), assignments=_map_ids(ids, codebook, dataset),
        report=metrics.metric_report(codebook, dataset, extras=extras),
    )


def _train_gng(run_config: RunConfig, dataset: Dataset) -> TrainedModel:
    settings = run_config.gng
    graph = gng_train(dataset, settings.to_params(), RandomStream(run_config.seed), settings.presentations)
    ids = sorted(graph.nodes)
    codebook = np.stack([graph.nodes[i].w for i in ids])
    extras = {"components": gng_components(graph), "edges": len(graph.edges)}
    return TrainedModel(
        ids=ids, vectors=codebook, values=np.array([graph.nodes[i].error for i in ids]), value_name="error",
        edges=gng_edges(graph), assignments=_map_ids(ids, codebook, dataset),
        report=metrics.metric_report(codebook, dataset, extras=extras),
    )


def _train_sota(run_config: RunConfig, dataset: Dataset, profile_shape) -> TrainedModel:
    tree, leaf_assignments = sota_train(dataset, run_config.sota.to_params(), profile_shape)
    leaves = sota_leaves(tree)
    codebook = np.stack([tree.nodes[i].profile for i in leaves])
    resources = np.array([tree.nodes[i].resource for i in leaves])
    extras = {"leaves": len(leaves), "max_resource": float(resources.max()), "tree_nodes": len(tree.nodes)}
    report = metrics.metric_report(codebook, dataset, extras=extras)
    # leaves that win no input under the tree's own distance
    report.dead_units = len(leaves) - len(set(leaf_assignments))
    return TrainedModel(
        ids=leaves, vectors=codebook, values=resources, value_name="resource",
        edges=[(a, b, int(frozen)) for a, b, frozen in sota_edges(tree)], assignments=leaf_assignments,
        report=report,
    )


def train_model(run_config: RunConfig, dataset: Dataset, profile_shape=None) -> TrainedModel:
    if run_config.model == "som":
        return _train_som(run_config, dataset)
    if run_config.model == "gcs":
        return _train_gcs(run_config, dataset)
    if run_config.model == "gng":
        return _train_gng(run_config, dataset)
    return _train_sota(run_config, dataset, profile_shape)


def run(run_config: RunConfig) -> TrainedModel:
    """Trains the configured model and writes codebook, edges, assignments
    and metrics into the run's output directory."""
    out_dir = Path(run_config.out or app_config.DEFAULT_OUTPUT_DIR)
    section = getattr(run_config, run_config.model)
    with TrainingRunLog(run_config.model, run_config.data, run_config.seed, section.model_dump()) as run_log:
        with run_session(out_dir) as session:
            dataset, profile_shape = load_dataset(run_config)
            trained = train_model(run_config, dataset, profile_shape)
            io.write_codebook(session.path(app_config.CODEBOOK_FILE), trained.ids, trained.vectors,
                              trained.values, trained.value_name)
            io.write_edges(session.path(app_config.EDGES_FILE), trained.edges)
            io.write_assignments(session.path(app_config.ASSIGNMENTS_FILE), trained.assignments)
            io.write_metrics(session.path(app_config.METRICS_FILE), trained.report.as_lines())
        run_log.record(units=len(trained.ids), quantization_error=trained.report.quantization_error)
    return trained
