import numpy as np
import pytest

from eigenrank.compose import compose
from eigenrank.errors import (
    BadClusterWeights,
    InvalidNetwork,
    MissingMatrix,
    NoConvergence,
    NotColumnStochastic,
)
from eigenrank.structure import Component, Network, hierarchy_to_network
from eigenrank.supermatrix import (
    Supermatrix,
    assemble_supermatrix,
    hierarchy_supermatrix,
    limit_supermatrix,
    network_priorities,
)

from .helpers import random_column_stochastic, random_hierarchy
from .oracles import stationary_distribution
from .test_compose import worked_fixture
from .test_matrix import matrix_from_upper


def two_singletons():
    return Network(
        (Component("A", ("a",)), Component("B", ("b",))),
        (("A", "B"), ("B", "A")),
    )


def test_assemble_mutual_singletons():
    s = assemble_supermatrix(two_singletons(), {})
    assert s.element_labels == ("a", "b")
    assert s.values.tolist() == [[0.0, 1.0], [1.0, 0.0]]


def test_assemble_inner_dependent_component():
    net = Network((Component("A", ("a1", "a2")),), (("A", "A"),))
    m = matrix_from_upper(("a1", "a2"), [3.0])
    s = assemble_supermatrix(net, {("a1", "A"): m, ("a2", "A"): m})
    assert np.allclose(s.values, [[0.75, 0.75], [0.25, 0.25]], atol=1e-12)


def test_assemble_missing_block():
    net = Network((Component("A", ("a1", "a2")),), (("A", "A"),))
    m = matrix_from_upper(("a1", "a2"), [3.0])
    with pytest.raises(MissingMatrix, match="a2"):
        assemble_supermatrix(net, {("a1", "A"): m})


def test_assemble_rejects_invalid_network():
    net = Network(
        (Component("A", ("a",)), Component("B", ("b",)), Component("C", ("c",))),
        (("A", "B"), ("B", "A")),
    )
    with pytest.raises(InvalidNetwork):
        assemble_supermatrix(net, {})


def test_cluster_weights_split_shared_columns():
    net = Network(
        (
            Component("X", ("x",)),
            Component("Y", ("y",)),
            Component("Z", ("z",)),
        ),
        (("X", "Z"), ("Y", "Z"), ("Z", "X"), ("Z", "Y")),
    )
    equal = assemble_supermatrix(net, {})
    zcol = equal.element_labels.index("z")
    assert equal.values[equal.element_labels.index("x"), zcol] == 0.5
    weighted = assemble_supermatrix(net, {}, {"Z": {"X": 0.8, "Y": 0.2}})
    assert weighted.values[weighted.element_labels.index("x"), zcol] == 0.8
    with pytest.raises(BadClusterWeights):
        assemble_supermatrix(net, {}, {"Z": {"X": 0.8, "Y": 0.3}})
    with pytest.raises(BadClusterWeights):
        assemble_supermatrix(net, {}, {"Z": {"X": 1.0}})


def test_supermatrix_rejects_non_stochastic_support():
    with pytest.raises(NotColumnStochastic):
        Supermatrix(("a", "b"), np.array([[0.5, 0.0], [0.4, 1.0]]))


def test_idempotent_matrix_is_its_own_limit():
    s = Supermatrix(("a", "b"), np.array([[0.5, 0.5], [0.5, 0.5]]))
    res = limit_supermatrix(s)
    assert res.method == "power"
    assert np.allclose(res.limit, 0.5, atol=1e-12)
    assert np.allclose(res.final_priorities.weights, [0.5, 0.5], atol=1e-12)
    assert res.columns_agree


def test_period_two_matrix_needs_cesaro():
    s = assemble_supermatrix(two_singletons(), {})
    res = limit_supermatrix(s)
    assert res.method == "cesaro"
    assert np.max(np.abs(res.limit - 0.5)) <= 1e-10
    assert np.allclose(res.final_priorities.weights, [0.5, 0.5], atol=1e-10)


def test_limit_refuses_zero_columns():
    h, matrices = worked_fixture()
    net = hierarchy_to_network(h)
    block_matrices = {
        ("goal", "level-2"): matrices["goal"],
        ("c1", "level-3"): matrices["c1"],
        ("c2", "level-3"): matrices["c2"],
    }
    s = assemble_supermatrix(net, block_matrices)
    assert s.zero_columns() == ("a1", "a2")  # nothing depends on the leaves
    with pytest.raises(NotColumnStochastic):
        limit_supermatrix(s)


def test_limit_matches_stationary_oracle():
    rng = np.random.default_rng(5)
    for _ in range(30):
        n = int(rng.integers(2, 7))
        w = random_column_stochastic(rng, n)
        labels = tuple(f"e{i}" for i in range(n))
        res = limit_supermatrix(Supermatrix(labels, w))
        assert res.method == "power"
        pi = stationary_distribution(w)
        assert np.max(np.abs(res.final_priorities.weights - pi)) < 1e-8
        assert res.columns_agree
        # limit is a fixed point and stays column stochastic
        assert np.max(np.abs(w @ res.limit - res.limit)) < 1e-6
        assert np.max(np.abs(res.limit.sum(axis=0) - 1.0)) < 1e-8


def test_hierarchy_supermatrix_blocks_and_identity():
    h, matrices = worked_fixture()
    s = hierarchy_supermatrix(h, matrices)
    assert s.element_labels == ("goal", "c1", "c2", "a1", "a2")
    # goal column carries criteria weights; leaf columns are identity
    assert np.allclose(s.values[1:3, 0], [0.6, 0.4], atol=1e-12)
    assert s.values[3, 3] == 1.0 and s.values[4, 4] == 1.0
    assert s.zero_columns() == ()


def test_hierarchy_embedding_reproduces_compose():
    h, matrices = worked_fixture()
    res = limit_supermatrix(hierarchy_supermatrix(h, matrices))
    assert res.method == "power"
    goal_view = res.column("goal").as_dict()
    final = compose(h, matrices).final.as_dict()
    for lab, w in final.items():
        assert goal_view[lab] == pytest.approx(w, abs=1e-8)
    # mass sits entirely on the alternatives
    assert goal_view["c1"] == 0.0 and goal_view["goal"] == 0.0
    # reducible structure: leaf columns keep their identity, so columns differ
    assert not res.columns_agree


def test_hierarchy_embedding_on_random_instances():
    rng = np.random.default_rng(17)
    for _ in range(10):
        h, matrices = random_hierarchy(rng)
        res = limit_supermatrix(hierarchy_supermatrix(h, matrices))
        goal_view = res.column(h.levels()[1][0]).as_dict()
        final = compose(h, matrices).final.as_dict()
        for lab, w in final.items():
            assert goal_view[lab] == pytest.approx(w, abs=1e-8)


def test_network_priorities_end_to_end():
    net = Network((Component("A", ("a1", "a2")),), (("A", "A"),))
    m = matrix_from_upper(("a1", "a2"), [3.0])
    res = network_priorities(net, {("a1", "A"): m, ("a2", "A"): m})
    assert np.allclose(res.final_priorities.weights, [0.75, 0.25], atol=1e-10)


def test_no_convergence_reports_iterations():
    s = assemble_supermatrix(two_singletons(), {})
    with pytest.raises(NoConvergence) as exc:
        limit_supermatrix(s, max_pow=5, cesaro_window=64)
    assert exc.value.iterations == 5
