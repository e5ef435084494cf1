import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eigenrank import (
    build_matrix,
    consistency_report,
    derive_priorities,
    is_consistent,
    random_index,
)
from eigenrank.errors import DimensionMismatch
from eigenrank.matrix import ComparisonMatrix
from eigenrank.priority import consistent_completion

from .oracles import charpoly_principal_eig, eig_weights
from .test_matrix import matrix_from_upper, reciprocal_matrices

# Frozen reference values for the 3x3 fixture [[1,2,1/2],[1/2,1,4],[2,1/4,1]],
# computed from the characteristic polynomial and an SVD null-space solve.
ORACLE_MATRIX = np.array([[1.0, 2.0, 0.5], [0.5, 1.0, 4.0], [2.0, 0.25, 1.0]])
ORACLE_LAMBDA = 3.9166923627817996
ORACLE_WEIGHTS = (0.3274800020733263, 0.41259894803180047, 0.25992104989487336)

# Frozen output of random_index(3, samples=50000, seed=42); guards determinism.
RI_3_50000_42 = 0.5235977045942786


def test_matches_charpoly_oracle():
    m = ComparisonMatrix.from_array(("x1", "x2", "x3"), ORACLE_MATRIX)
    pv = derive_priorities(m)
    assert pv.lambda_max == pytest.approx(ORACLE_LAMBDA, abs=1e-12)
    assert np.max(np.abs(pv.weights - np.array(ORACLE_WEIGHTS))) < 1e-10


def test_oracle_self_check():
    lam, w = charpoly_principal_eig(ORACLE_MATRIX)
    assert lam == pytest.approx(ORACLE_LAMBDA, abs=1e-12)
    assert np.max(np.abs(w - np.array(ORACLE_WEIGHTS))) < 1e-12


def test_consistent_matrix_recovers_weights():
    # matrix built from known weights w = (0.5, 0.3, 0.2) via a_ij = w_i / w_j
    w = np.array([0.5, 0.3, 0.2])
    a = w[:, None] / w[None, :]
    m = ComparisonMatrix.from_array(("a", "b", "c"), a)
    pv = derive_priorities(m)
    assert np.max(np.abs(pv.weights - w)) < 1e-10
    assert pv.lambda_max == pytest.approx(3.0, abs=1e-9)


def test_distributive_weights_sum_to_one():
    m = matrix_from_upper(("a", "b", "c"), [2.0, 4.0, 3.0])
    pv = derive_priorities(m)
    assert pv.weights.sum() == pytest.approx(1.0, abs=1e-12)
    assert pv.mode == "distributive"


def test_ideal_mode_peaks_at_exactly_one():
    m = matrix_from_upper(("a", "b", "c"), [2.0, 4.0, 3.0])
    pv = derive_priorities(m, mode="ideal")
    assert pv.weights.max() == 1.0
    dist = derive_priorities(m)
    assert np.allclose(pv.weights, dist.weights / dist.weights.max())


def test_modes_rank_identically():
    m = matrix_from_upper(("a", "b", "c"), [0.5, 4.0, 3.0])
    assert derive_priorities(m).ranking() == derive_priorities(m, mode="ideal").ranking()


def test_bad_mode_rejected():
    m = matrix_from_upper(("a", "b"), [2.0])
    with pytest.raises(ValueError):
        derive_priorities(m, mode="idealised")


def test_single_element():
    m = build_matrix(("only",), [])
    pv = derive_priorities(m)
    assert pv.weights.tolist() == [1.0]
    assert pv.lambda_max == 1.0


def test_ranking_is_stable_on_ties():
    m = matrix_from_upper(("a", "b", "c"), [1.0, 1.0, 1.0])
    assert derive_priorities(m).ranking() == ["a", "b", "c"]


@given(reciprocal_matrices())
@settings(max_examples=100, deadline=None)
def test_weights_positive_and_normalized(m):
    pv = derive_priorities(m)
    assert np.all(pv.weights > 0)
    assert pv.weights.sum() == pytest.approx(1.0, abs=1e-9)
    assert pv.lambda_max >= m.order - 1e-9


@given(reciprocal_matrices())
@settings(max_examples=100, deadline=None)
def test_agrees_with_numpy_eig(m):
    pv = derive_priorities(m)
    assert np.max(np.abs(pv.weights - eig_weights(m.values))) < 1e-8


@given(reciprocal_matrices(min_n=3, max_n=6))
@settings(max_examples=100, deadline=None)
def test_lambda_max_characterizes_consistency(m):
    # lambda_max >= n always, equality exactly for consistent matrices
    n = m.order
    pv = derive_priorities(m)
    if is_consistent(m):
        assert pv.lambda_max == pytest.approx(n, abs=1e-8)
    else:
        assert pv.lambda_max > n


def test_consistency_report_consistent_case():
    m = matrix_from_upper(("a", "b", "c"), [2.0, 4.0, 2.0])
    rep = consistency_report(m)
    assert rep.consistent
    assert rep.ci == pytest.approx(0.0, abs=1e-9)
    assert rep.cr == pytest.approx(0.0, abs=1e-8)
    assert rep.worst_entry is None and rep.worst_triple is None


def test_consistency_report_inconsistent_case():
    m = matrix_from_upper(("a", "b", "c"), [2.0, 0.25, 3.0])
    rep = consistency_report(m)
    assert not rep.consistent
    assert rep.ci > 0
    assert rep.cr > 0
    assert rep.ri > 0
    i, j = rep.worst_entry
    assert i != j
    ti, tj, tk = rep.worst_triple
    a = m.values
    # the reported triple really is maximally inconsistent
    prod = a[:, :, None] * a[None, :, :]
    dev = np.abs(np.log(prod / a[:, None, :]))
    assert dev[ti, tj, tk] == dev.max()


def test_consistency_report_order_two():
    m = matrix_from_upper(("a", "b"), [3.0])
    rep = consistency_report(m)
    assert rep.ci == 0.0
    assert rep.cr == 0.0
    assert rep.consistent


def test_consistency_report_label_mismatch():
    m1 = matrix_from_upper(("a", "b", "c"), [2.0, 4.0, 2.0])
    m2 = matrix_from_upper(("x", "y", "z"), [2.0, 4.0, 2.0])
    pv = derive_priorities(m2)
    with pytest.raises(DimensionMismatch):
        consistency_report(m1, pv)


def test_consistent_completion_points_toward_consistency():
    m = matrix_from_upper(("a", "b", "c"), [2.0, 0.25, 3.0])
    rep = consistency_report(m)
    i, j = rep.worst_entry
    suggestion = consistent_completion(m, m.labels[i], m.labels[j])
    fixed = {(m.labels[i], m.labels[j]): suggestion}
    judgments = []
    for jd in m.upper_judgments():
        v = fixed.get((jd.row, jd.col), fixed.get((jd.col, jd.row)))
        if v is not None and (jd.row, jd.col) not in fixed:
            v = 1.0 / v
        judgments.append((jd.row, jd.col, jd.value if v is None else v))
    revised = build_matrix(m.labels, judgments)
    assert consistency_report(revised).cr < rep.cr


def test_random_index_edge_orders():
    assert random_index(1) == 0.0
    assert random_index(2) == 0.0
    with pytest.raises(ValueError):
        random_index(0)
    with pytest.raises(ValueError):
        random_index(3, samples=0)


def test_random_index_reproducible():
    assert random_index(3, samples=50000, seed=42) == RI_3_50000_42
    assert random_index(3, samples=50000, seed=42) == RI_3_50000_42


def test_random_index_grows_with_order():
    vals = [random_index(n, samples=500, seed=7) for n in range(3, 8)]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert all(v > 0 for v in vals)


def test_random_index_seed_matters():
    assert random_index(4, samples=200, seed=1) != random_index(4, samples=200, seed=2)
