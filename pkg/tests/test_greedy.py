import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from greedybasislab.exceptions import ContractError
from greedybasislab.greedy import (ALL_VALID, ONE_VALID, count_greedy_sets,
                                   distinct_greedy_projections, greedy_sets, greedy_sum,
                                   is_valid_greedy_set, projection, projection_matrix, residual)
from greedybasislab.spaces import Basis, canonical_basis


def test_greedy_sets_strict_order():
    sets = greedy_sets([0.5, -3.0, 1.0], 2)
    assert [s.indices for s in sets] == [(1, 2)]
    assert sets[0].threshold_in == 1.0 and sets[0].threshold_out == 0.5
    assert not sets[0].tied


def test_greedy_sets_ties():
    coeffs = [1.0, -1.0, 1.0, 0.2]
    assert [s.indices for s in greedy_sets(coeffs, 2, ONE_VALID)] == [(0, 1)]
    assert [s.indices for s in greedy_sets(coeffs, 2, ALL_VALID)] == [(0, 1), (0, 2), (1, 2)]
    assert count_greedy_sets(coeffs, 2) == 3
    assert greedy_sets(coeffs, 2, ALL_VALID)[0].tied


def test_greedy_sets_extremes():
    assert greedy_sets([1.0, 2.0], 0)[0].indices == ()
    assert greedy_sets([1.0, 2.0], 2)[0].indices == (0, 1)
    with pytest.raises(ContractError):
        greedy_sets([1.0, 2.0], 3)
    with pytest.raises(ContractError):
        greedy_sets([1.0, 2.0], 1, mode='some-valid')


def test_distinct_projections_collapse_zero_ties():
    coeffs = [2.0, 0.0, 0.0]
    assert len(greedy_sets(coeffs, 2, ALL_VALID)) == 2
    assert [s.indices for s in distinct_greedy_projections(coeffs, 2)] == [(0, 1)]


def test_is_valid_greedy_set_tolerance():
    assert is_valid_greedy_set([1.0, 1.0 + 1e-13], (0,))
    assert not is_valid_greedy_set([1.0, 1.1], (0,))


def test_projection_and_greedy_operators():
    basis = Basis.from_vectors([[1.0, 0.0], [1.0, 1.0]])
    x = np.array([3.0, 2.0])  # coefficients (1, 2)
    np.testing.assert_allclose(projection(basis, x, [1]), [2.0, 2.0])
    np.testing.assert_allclose(projection_matrix(basis, [0]) @ x, [1.0, 0.0])
    selection = greedy_sets(basis.duals @ x, 1)[0]
    assert selection.indices == (1,)
    np.testing.assert_allclose(greedy_sum(basis, x, selection), [2.0, 2.0])
    np.testing.assert_allclose(residual(basis, x, selection), [1.0, 0.0])


def test_greedy_sum_rejects_invalid_selection():
    basis = canonical_basis(2)
    selection = greedy_sets([5.0, 1.0], 1)[0]
    with pytest.raises(ContractError):
        greedy_sum(basis, [1.0, 5.0], selection)


def test_projection_index_out_of_range():
    with pytest.raises(ContractError):
        projection(canonical_basis(2), [1.0, 1.0], [2])


@given(coeffs=st.lists(st.sampled_from([-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0]), min_size=1, max_size=6),
       data=st.data())
def test_all_valid_matches_brute_force(coeffs, data):
    n = len(coeffs)
    N = data.draw(st.integers(0, n))
    mags = np.abs(coeffs)
    brute = [c for c in itertools.combinations(range(n), N)
             if (min(mags[list(c)]) if c else np.inf) >= (max(np.delete(mags, c)) if N < n else 0.0)]
    assert [s.indices for s in greedy_sets(coeffs, N, ALL_VALID)] == sorted(brute)


def test_chained_near_ties_yield_only_valid_sets():
    # consecutive gaps of 0.9e-12 are each within tie_tol, the outer gap is not
    x = [1.0, 1.0 - 0.9e-12, 1.0 - 1.8e-12]
    basis = canonical_basis(3)
    sets = greedy_sets(x, 2, ALL_VALID)
    assert [s.indices for s in sets] == [(0, 1), (0, 2)]
    for selection in sets:
        assert is_valid_greedy_set(x, selection.indices)
        expected = [x[i] if i in selection.indices else 0.0 for i in range(3)]
        np.testing.assert_allclose(greedy_sum(basis, x, selection), expected)
    assert count_greedy_sets(x, 2) == 2


def test_one_valid_skips_invalid_lexicographic_choice():
    x = [1.0 - 1.8e-12, 1.0 - 0.9e-12, 1.0]
    selection = greedy_sets(x, 2, ONE_VALID)[0]
    assert selection.indices == (0, 2)
    assert is_valid_greedy_set(x, selection.indices)
    assert selection.tied


def _random_basis(n, seed):
    rng = np.random.default_rng(seed)
    return Basis.from_vectors((np.eye(n) + 0.2 * rng.standard_normal((n, n))).T)


tied_coefficients = st.lists(st.sampled_from([-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0]),
                             min_size=2, max_size=6)


@given(coeffs=tied_coefficients, seed=st.integers(0, 2**16))
def test_greedy_sum_and_residual_split_x(coeffs, seed):
    n = len(coeffs)
    basis = _random_basis(n, seed)
    x = basis.vectors @ np.array(coeffs)
    for N in range(n + 1):
        for selection in greedy_sets(basis.duals @ x, N, ALL_VALID):
            total = greedy_sum(basis, x, selection) + residual(basis, x, selection)
            np.testing.assert_allclose(total, x, rtol=0, atol=1e-10)


@given(coeffs=tied_coefficients, seed=st.integers(0, 2**16))
def test_greedy_sum_is_projection_on_every_valid_set(coeffs, seed):
    n = len(coeffs)
    basis = _random_basis(n, seed)
    x = basis.vectors @ np.array(coeffs)
    for N in range(n + 1):
        for selection in greedy_sets(basis.duals @ x, N, ALL_VALID):
            np.testing.assert_allclose(greedy_sum(basis, x, selection),
                                       projection(basis, x, selection.indices),
                                       rtol=0, atol=1e-12)


@given(coeffs=tied_coefficients, scale=st.sampled_from([-3.0, -1.0, 0.5, 2.0]))
def test_greedy_sets_are_scale_equivariant(coeffs, scale):
    scaled = [scale * c for c in coeffs]
    for N in range(len(coeffs) + 1):
        assert ([s.indices for s in greedy_sets(scaled, N, ALL_VALID)]
                == [s.indices for s in greedy_sets(coeffs, N, ALL_VALID)])
