"""Independent oracles for the equivalence and quality tests.

Everything here is written with plain loops or textbook numpy so it shares no
code path with the toolkit beyond numpy itself.
"""

import math

import numpy as np


def brute_distance(a, b) -> float:
    return math.sqrt(sum((float(p) - float(q)) ** 2 for p, q in zip(a, b)))


def brute_winners(codebook, x):
    """(best, second) by a double scan; strict '<' keeps the lowest index on ties."""
    best, best_d = -1, math.inf
    for i, w in enumerate(codebook):
        d = brute_distance(w, x)
        if d < best_d:
            best, best_d = i, d
    second, second_d = -1, math.inf
    for i, w in enumerate(codebook):
        if i == best:
            continue
        d = brute_distance(w, x)
        if d < second_d:
            second, second_d = i, d
    return best, second


def brute_assignments(codebook, rows):
    out = []
    for x in rows:
        best, best_d = -1, math.inf
        for i, w in enumerate(codebook):
            d = brute_distance(w, x)
            if d < best_d:
                best, best_d = i, d
        out.append(best)
    return out


def brute_quantization_error(codebook, rows) -> float:
    return math.fsum(min(brute_distance(w, x) for w in codebook) for x in rows) / len(rows)


def brute_resources(profiles: dict, rows) -> dict:
    """Mean Euclidean distance per leaf over the inputs it wins; leaf ids
    are scanned in ascending order so ties go to the lowest id."""
    totals = {leaf: 0.0 for leaf in profiles}
    counts = {leaf: 0 for leaf in profiles}
    for x in rows:
        best, best_d = None, math.inf
        for leaf in sorted(profiles):
            d = brute_distance(profiles[leaf], x)
            if d < best_d:
                best, best_d = leaf, d
        totals[best] += best_d
        counts[best] += 1
    return {leaf: (totals[leaf] / counts[leaf] if counts[leaf] else 0.0) for leaf in profiles}


def random_instance(rng: np.random.Generator, max_units: int = 20, max_inputs: int = 50, max_dim: int = 5):
    """A small codebook and input set. Values are drawn from a coarse grid
    so exact distance ties actually occur."""
    dim = int(rng.integers(1, max_dim + 1))
    units = int(rng.integers(2, max_units + 1))
    inputs = int(rng.integers(1, max_inputs + 1))
    codebook = rng.integers(-4, 5, size=(units, dim)) / 2.0
    rows = rng.integers(-4, 5, size=(inputs, dim)) / 2.0
    return codebook, rows


def _kmeans_pp(rows: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    centers = [rows[rng.integers(len(rows))]]
    closest = ((rows - centers[0]) ** 2).sum(axis=1)
    for _ in range(1, k):
        probabilities = closest / closest.sum()
        centers.append(rows[rng.choice(len(rows), p=probabilities)])
        closest = np.minimum(closest, ((rows - centers[-1]) ** 2).sum(axis=1))
    return np.array(centers)


def kmeans(rows: np.ndarray, k: int, seed: int = 0, n_init: int = 3, max_iter: int = 300):
    """Lloyd's algorithm with k-means++ seeding, run to convergence.
    Returns (centers, mean Euclidean distance to the nearest center) of the
    best of `n_init` starts."""
    rng = np.random.default_rng(seed)
    best_centers, best_qe = None, math.inf
    for _ in range(n_init):
        centers = _kmeans_pp(rows, k, rng)
        for _ in range(max_iter):
            d2 = ((rows[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
            labels = d2.argmin(axis=1)
            updated = centers.copy()
            for j in range(k):
                members = rows[labels == j]
                if len(members):
                    updated[j] = members.mean(axis=0)
            if np.allclose(updated, centers):
                centers = updated
                break
            centers = updated
        d2 = ((rows[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        qe = float(np.sqrt(d2.min(axis=1)).mean())
        if qe < best_qe:
            best_centers, best_qe = centers, qe
    return best_centers, best_qe
