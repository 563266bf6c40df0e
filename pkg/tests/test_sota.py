import numpy as np
import pytest

from core.errors import DimensionMismatchError, InvalidProfileError, StructureError
from models.dataset import Dataset
from models.networks import SotaTree
from models.params import SotaParams
from models.profile import SequenceProfile
from services.sota import (
    encode_alignment, sota_assign, sota_edges, sota_init, sota_leaves, sota_present, sota_resources,
    sota_sequence_distance, sota_split, sota_train,
)
from services.synth import build_spec, generate
from tests.utils import brute_resources, random_instance


def _assert_proper_binary_tree(tree: SotaTree):
    roots = [node_id for node_id, node in tree.nodes.items() if node.parent is None]
    assert roots == [tree.root]
    for node in tree.nodes.values():
        assert len(node.children) in (0, 2)
        assert node.frozen is False or not node.is_leaf
        for child in node.children:
            assert tree.nodes[child].parent == node.id


# --- sequence distance ---

def test_identical_one_hot_profiles_are_at_zero():
    p = SequenceProfile(matrix=[[1, 0, 0], [0, 0, 1]])
    assert sota_sequence_distance(p, p) == 0.0


def test_disagreeing_one_hot_profiles_are_at_one():
    s = SequenceProfile(matrix=[[1, 0], [0, 1]])
    c = SequenceProfile(matrix=[[0, 1], [1, 0]])
    assert sota_sequence_distance(s, c) == 1.0


def test_distance_by_hand():
    s = SequenceProfile(matrix=[[1.0, 0.0], [1.0, 0.0]])
    c = SequenceProfile(matrix=[[0.5, 0.5], [1.0, 0.0]])
    assert sota_sequence_distance(s, c) == pytest.approx(0.25, rel=1e-12)


def test_distance_shape_mismatch():
    with pytest.raises(DimensionMismatchError):
        sota_sequence_distance(SequenceProfile(matrix=[[1, 0]]), SequenceProfile(matrix=[[1, 0], [0, 1]]))


def test_distance_is_bounded_and_symmetric():
    rng = np.random.default_rng(21)
    for _ in range(500):
        a = rng.dirichlet(np.ones(4), size=6)
        b = rng.dirichlet(np.ones(4), size=6)
        d = sota_sequence_distance(a, b)
        assert 0.0 <= d <= 1.0
        assert d == pytest.approx(sota_sequence_distance(b, a), abs=1e-15)


def test_profile_validation():
    with pytest.raises(InvalidProfileError):
        SequenceProfile(matrix=[[0.6, 0.6]])
    with pytest.raises(InvalidProfileError):
        SequenceProfile(matrix=[[1.5, -0.5]])


def test_encode_alignment_spreads_gaps():
    dataset, shape = encode_alignment(["AC", "A-"], "ACGT")
    assert shape == (2, 4)
    assert dataset.rows[0].tolist() == [1, 0, 0, 0, 0, 1, 0, 0]
    assert dataset.rows[1].tolist() == [1, 0, 0, 0, 0.25, 0.25, 0.25, 0.25]
    with pytest.raises(DimensionMismatchError):
        encode_alignment(["AC", "A"], "ACGT")


# --- presentation ---

def _two_leaf_tree(freeze=True):
    tree = sota_init(Dataset(rows=[[0.0, 0.0], [4.0, 0.0]]))
    sota_split(tree, tree.root, freeze=freeze)
    tree.nodes[1].profile = np.array([0.0, 0.0])
    tree.nodes[2].profile = np.array([4.0, 0.0])
    return tree


def test_zero_rates_leave_tree_unchanged():
    tree = _two_leaf_tree(freeze=False)
    before = {i: node.profile.copy() for i, node in tree.nodes.items()}
    sota_present(tree, SotaParams(eta_winner=0.0, eta_sister=0.0, eta_mother=0.0), [1.0, 1.0])
    assert all(np.array_equal(tree.nodes[i].profile, before[i]) for i in tree.nodes)


def test_full_step_on_single_leaf():
    tree = sota_init(Dataset(rows=[[0.1, 0.2], [0.3, 0.7]]))
    x = np.array([0.3, 0.7])
    sota_present(tree, SotaParams(eta_winner=1.0, eta_sister=0.0, eta_mother=0.0), x)
    assert np.array_equal(tree.nodes[0].profile, x)


def test_neighborhood_of_winner():
    tree = _two_leaf_tree()
    root_before = tree.nodes[0].profile.copy()
    params = SotaParams(eta_winner=0.5, eta_sister=0.25, eta_mother=0.125)
    sota_present(tree, params, [1.0, 0.0])
    assert np.allclose(tree.nodes[1].profile, [0.5, 0.0], rtol=1e-12)
    assert np.allclose(tree.nodes[2].profile, [3.25, 0.0], rtol=1e-12)
    assert np.array_equal(tree.nodes[0].profile, root_before)


def test_unfrozen_mother_is_updated():
    tree = _two_leaf_tree(freeze=False)
    params = SotaParams(eta_winner=0.5, eta_sister=0.25, eta_mother=0.125)
    sota_present(tree, params, [2.0, 8.0])
    assert np.allclose(tree.nodes[0].profile, [2.0, 1.0], rtol=1e-12)


def test_internal_sister_is_not_updated():
    tree = _two_leaf_tree()
    sota_split(tree, 2)
    sister_before = tree.nodes[2].profile.copy()
    sota_present(tree, SotaParams(eta_winner=0.5, eta_sister=0.5, eta_mother=0.0), [0.0, 1.0])
    assert np.array_equal(tree.nodes[2].profile, sister_before)


def test_present_shape_mismatch():
    with pytest.raises(DimensionMismatchError):
        sota_present(_two_leaf_tree(), SotaParams(), [1.0, 2.0, 3.0])


# --- resources ---

def test_resources_zero_when_inputs_sit_on_leaves():
    tree = _two_leaf_tree()
    resources = sota_resources(tree, Dataset(rows=[[0.0, 0.0], [4.0, 0.0], [4.0, 0.0]]))
    assert resources == {1: 0.0, 2: 0.0}


def test_resource_is_mean_distance():
    tree = sota_init(Dataset(rows=[[0.0, 0.0]]))
    resources = sota_resources(tree, Dataset(rows=[[0.2, 0.0], [0.0, 0.4]]))
    assert resources[0] == pytest.approx(0.3, rel=1e-12)
    assert tree.nodes[0].resource == resources[0]


def test_resources_match_brute_force():
    rng = np.random.default_rng(31)
    for _ in range(200):
        codebook, rows = random_instance(rng)
        tree = sota_init(Dataset(rows=rows))
        while len(sota_leaves(tree)) < len(codebook):
            sota_split(tree, sota_leaves(tree)[-1])
        leaves = sota_leaves(tree)
        for leaf_id, w in zip(leaves, codebook):
            tree.nodes[leaf_id].profile = w.copy()
        expected = brute_resources({leaf_id: w for leaf_id, w in zip(leaves, codebook)}, rows)
        assert sota_resources(tree, Dataset(rows=rows)) == expected


# --- split ---

def test_split_root():
    tree = sota_init(Dataset(rows=[[1.0, 2.0], [3.0, 4.0]]))
    sota_split(tree, tree.root)
    assert len(tree.nodes) == 3
    assert sota_leaves(tree) == [1, 2]
    assert tree.nodes[0].frozen
    assert all(np.array_equal(tree.nodes[i].profile, tree.nodes[0].profile) for i in (1, 2))
    assert sota_edges(tree) == [(0, 1, True), (0, 2, True)]


def test_split_counting_identity():
    tree = sota_init(Dataset(rows=[[0.0]]))
    for n in range(1, 8):
        sota_split(tree, sota_leaves(tree)[n % len(sota_leaves(tree))])
        internal = [node for node in tree.nodes.values() if not node.is_leaf]
        assert len(sota_leaves(tree)) == n + 1 and len(internal) == n
        _assert_proper_binary_tree(tree)


def test_split_errors():
    tree = _two_leaf_tree()
    with pytest.raises(StructureError):
        sota_split(tree, 0)
    with pytest.raises(StructureError):
        sota_split(tree, 1, max_leaves=2)


# --- training ---

SAFE_RATES = dict(eta_winner=0.5, eta_sister=0.25, eta_mother=0.125)


def test_identical_rows_converge_immediately():
    dataset = Dataset(rows=[[0.5, -1.25]] * 6)
    tree, assigned = sota_train(dataset, SotaParams(**SAFE_RATES))
    leaves = sota_leaves(tree)
    assert len(leaves) <= 2
    assert all(tree.nodes[i].resource == 0.0 for i in leaves)
    assert assigned == [1] * 6


def test_high_threshold_stops_without_splitting():
    dataset = Dataset(rows=np.random.default_rng(0).normal(size=(40, 2)))
    tree, _ = sota_train(dataset, SotaParams(resource_threshold=1e6))
    assert len(sota_leaves(tree)) == 2
    tree, _ = sota_train(dataset, SotaParams(resource_threshold=1e6, initial_split=False))
    assert sota_leaves(tree) == [0]


def test_training_is_deterministic():
    dataset = generate(build_spec(kind="gaussian_mixture", n=120, seed=3,
                                  centers=[[0, 0], [6, 6]], sigmas=[0.5, 0.5]))
    params = SotaParams(resource_threshold=1.0)
    a, assigned_a = sota_train(dataset, params)
    b, assigned_b = sota_train(dataset, params)
    assert assigned_a == assigned_b
    assert sota_edges(a) == sota_edges(b)
    assert all(np.array_equal(a.nodes[i].profile, b.nodes[i].profile) for i in a.nodes)


def test_max_leaves_and_depth_cap_growth():
    dataset = Dataset(rows=np.random.default_rng(1).uniform(size=(60, 2)))
    tree, _ = sota_train(dataset, SotaParams(resource_threshold=1e-6, max_leaves=5))
    assert len(sota_leaves(tree)) == 5
    tree, _ = sota_train(dataset, SotaParams(resource_threshold=1e-6, max_depth=2))
    assert len(sota_leaves(tree)) <= 4


def test_frozen_profiles_never_change():
    dataset = generate(build_spec(kind="gaussian_mixture", n=90, seed=8,
                                  centers=[[0, 0], [5, 0], [0, 5]], sigmas=[0.4, 0.4, 0.4]))
    params = SotaParams(resource_threshold=1.0)
    tree = sota_init(dataset)
    sota_split(tree, tree.root)
    frozen = {}
    for _ in range(10):
        for x in dataset.rows:
            sota_present(tree, params, x)
            frozen.update({i: node.profile.copy() for i, node in tree.nodes.items()
                           if node.frozen and i not in frozen})
            assert all(np.array_equal(tree.nodes[i].profile, p) for i, p in frozen.items())
        resources = sota_resources(tree, dataset)
        count = len(tree.nodes)
        target = max(resources, key=resources.get)
        if resources[target] < params.resource_threshold:
            break
        sota_split(tree, target)
        assert len(tree.nodes) == count + 2
        _assert_proper_binary_tree(tree)


def test_sequence_families_separate():
    family_a = ["ACGTACGT", "ACGTACGA", "ACGTACTT", "ACGAACGT"]
    family_b = ["TTGCAAGC", "TTGCAAGG", "TAGCAAGC", "TTGCATGC"]
    dataset, shape = encode_alignment(family_a + family_b, "ACGT")
    tree, assigned = sota_train(dataset, SotaParams(resource_threshold=0.3, cycle_presentations=400),
                                  profile_shape=shape)
    _assert_proper_binary_tree(tree)
    assert not set(assigned[:4]) & set(assigned[4:])


def _purity_ok(assigned, labels, threshold=0.9) -> bool:
    """Every cluster is the majority of some leaf, and the leaves it
    dominates are at least `threshold` pure."""
    by_leaf = {}
    for leaf, label in zip(assigned, labels):
        by_leaf.setdefault(leaf, []).append(label)
    majority = {leaf: max(set(members), key=members.count) for leaf, members in by_leaf.items()}
    for cluster in set(labels):
        members = [m for leaf, ms in by_leaf.items() if majority[leaf] == cluster for m in ms]
        if not members or members.count(cluster) / len(members) < threshold:
            return False
    return True


@pytest.mark.slow
def test_three_clusters_are_recovered():
    params = SotaParams(resource_threshold=2.0)
    good = 0
    for seed in range(20):
        dataset = generate(build_spec(kind="gaussian_mixture", n=300, seed=seed,
                                      centers=[[0, 0], [10, 0], [5, 8.66]], sigmas=[0.5, 0.5, 0.5]))
        tree, assigned = sota_train(dataset, params)
        _assert_proper_binary_tree(tree)
        if _purity_ok(assigned, dataset.labels):
            good += 1
    assert good >= 18


def test_assign_breaks_ties_to_lowest_leaf():
    tree = _two_leaf_tree()
    assert sota_assign(tree, Dataset(rows=[[2.0, 0.0], [0.0, 0.0], [4.0, 1.0]])) == [1, 1, 2]
