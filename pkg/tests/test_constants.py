import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from greedybasislab.constants import (EXACT, GREEDY, LOWER_BOUND, RESIDUAL, Witness,
                                      cqg_constant, ct_constant, cw_constant, evaluate_witness,
                                      rayleigh_su_quadratic, subset_norm_table,
                                      suppression_constant)
from greedybasislab.constants.constants_pipeline import lift_by_witness
from greedybasislab.constants.restart_search import RestartSearch
from greedybasislab.exceptions import ContractError, DimensionGuardError
from greedybasislab.spaces import (Basis, LpNormSpec, NormedSpace, PolyhedralNormSpec,
                                   canonical_basis, make_basis)
from greedybasislab.utils.settings_utils import AnalysisSettings

from .conftest import SHEAR_GRAM, SQRT5_HALF, quadratic_instance, random_spd


@pytest.mark.parametrize("G, A, expected", [
    (np.eye(3), [0, 2], 1.0),
    (SHEAR_GRAM, [0], math.sqrt(1.25)),
    (np.diag([1.0, 4.0, 9.0]), [1], 1.0),
])
def test_rayleigh_su_quadratic(G, A, expected):
    assert rayleigh_su_quadratic(G, A) == pytest.approx(expected, abs=1e-12)


def test_rayleigh_needs_nonempty_set():
    with pytest.raises(ContractError):
        rayleigh_su_quadratic(np.eye(2), [])


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.0, math.inf])
def test_ksu_canonical_lp_is_one(p):
    space = NormedSpace(3, LpNormSpec(p=p))
    estimate = suppression_constant(space, canonical_basis(3, space=space))
    assert estimate.value == 1.0
    assert estimate.is_exact and estimate.method == 'lattice'


def test_ksu_shear(shear):
    space, basis = shear
    estimate = suppression_constant(space, basis)
    assert estimate.method == 'eigen' and estimate.exactness == EXACT
    assert estimate.value == pytest.approx(SQRT5_HALF, abs=1e-12)
    assert estimate.witness.indices == (0,)
    np.testing.assert_allclose(estimate.witness.x, [1.0, -0.4], atol=1e-12)
    assert evaluate_witness(space, basis, estimate.witness) == pytest.approx(estimate.value, rel=1e-9)


def test_ksu_summing(summing2):
    space, basis = summing2
    estimate = suppression_constant(space, basis)
    assert estimate.method == 'vertex-enum' and estimate.is_exact
    assert estimate.value == pytest.approx(2.0, abs=1e-12)
    assert estimate.witness.indices == (1,)
    np.testing.assert_allclose(estimate.witness.x, [1.0, -2.0], atol=1e-12)


def test_ksu_guard():
    space = NormedSpace(21, LpNormSpec(p=2.0))
    with pytest.raises(DimensionGuardError) as e:
        suppression_constant(space, canonical_basis(21))
    assert e.value.dim == 21 and e.value.cap == 20


def test_subset_norm_table(shear):
    table = subset_norm_table(*shear)
    assert list(table.index) == ['{1}', '{2}']
    assert table.loc['{1}', 'projection_norm'] == pytest.approx(SQRT5_HALF)
    assert (table['method'] == 'eigen').all()


def test_ksu_scale_invariant_exact(shear):
    space, _ = shear
    scaled = make_basis(np.diag([3.0, -0.25]), space=space)
    assert suppression_constant(space, scaled).value == pytest.approx(SQRT5_HALF, rel=1e-9)


def test_cw_ct_canonical_are_exactly_one(l2_canonical, fast_settings):
    space, basis = l2_canonical
    cw = cw_constant(space, basis, settings=fast_settings)
    ct = ct_constant(space, basis, settings=fast_settings)
    assert (cw.value, cw.exactness, cw.method) == (1.0, EXACT, 'theorem')
    assert (ct.value, ct.exactness, ct.method) == (1.0, EXACT, 'theorem')
    assert cqg_constant(space, basis, cw=cw, ct=ct).is_exact


def test_cw_shear_search(shear, search_settings):
    space, basis = shear
    cw = cw_constant(space, basis, settings=search_settings)
    assert cw.exactness == LOWER_BOUND and cw.method == 'search'
    assert cw.value >= SQRT5_HALF - 1e-6
    assert cw.value <= SQRT5_HALF + 1e-9
    assert evaluate_witness(space, basis, cw.witness) == pytest.approx(cw.value, rel=1e-9)


def test_cw_summing_search(summing2, search_settings):
    space, basis = summing2
    cw = cw_constant(space, basis, settings=search_settings)
    assert cw.value >= 2.0 - 1e-6
    assert cw.value <= 2.0 + 1e-9


def test_greedy_witness_values(shear, summing2):
    space, basis = shear
    z = np.array([1.0, -0.4])
    assert evaluate_witness(space, basis, Witness(z, (0,), 0.0, GREEDY)) == pytest.approx(1 / math.sqrt(0.8))
    assert evaluate_witness(space, basis, Witness(z, (0,), 0.0, RESIDUAL)) == pytest.approx(0.5)
    space, basis = summing2
    z = np.array([1.0, -2.0])
    assert evaluate_witness(space, basis, Witness(z, (1,), 0.0, GREEDY)) == pytest.approx(2.0)
    assert evaluate_witness(space, basis, Witness(z, (1,), 0.0, RESIDUAL)) == pytest.approx(1.0)
    with pytest.raises(ContractError):
        evaluate_witness(space, basis, Witness(z, (0,), 0.0, GREEDY))


def test_cqg_takes_max(summing2, fast_settings):
    space, basis = summing2
    cw = cw_constant(space, basis, settings=fast_settings)
    ct = ct_constant(space, basis, settings=fast_settings)
    cqg = cqg_constant(space, basis, cw=cw, ct=ct)
    assert cqg.value == max(cw.value, ct.value)
    assert cqg.budget_used == cw.budget_used + ct.budget_used
    assert cqg.value >= 2.0 - 1e-6


def test_search_is_deterministic_across_threads(shear):
    space, basis = shear
    one = AnalysisSettings(budget=2048, seed=3, chunk_size=256, threads=1)
    many = AnalysisSettings(budget=2048, seed=3, chunk_size=256, threads=4)
    a = cw_constant(space, basis, settings=one, promote=False)
    b = cw_constant(space, basis, settings=many, promote=False)
    assert a.value == b.value
    np.testing.assert_array_equal(a.witness.x, b.witness.x)
    assert a.budget_used == b.budget_used


def test_search_lower_bound_for_lp3_non_monomial(fast_settings):
    space = NormedSpace(3, LpNormSpec(p=3.0))
    basis = Basis.from_vectors([[1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [0.0, 1.0, 1.0]], space=space)
    ksu = suppression_constant(space, basis, settings=fast_settings)
    assert ksu.method == 'search' and ksu.exactness == LOWER_BOUND
    assert ksu.value > 1.0
    assert evaluate_witness(space, basis, ksu.witness) == pytest.approx(ksu.value, rel=1e-9)


def test_restart_strata_are_unit_norm(shear):
    space, basis = shear
    search = RestartSearch(space, basis, AnalysisSettings())
    C = search.draw_coefficients(np.random.default_rng(0), 64)
    np.testing.assert_allclose(space.norms(basis.synthesize(C)), 1.0, rtol=1e-12)


def test_lift_by_witness_raises_lower_bound(fast_settings):
    space = NormedSpace(3, LpNormSpec(p=3.0))
    basis = Basis.from_vectors([[1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [0.0, 1.0, 1.0]], space=space)
    ksu = suppression_constant(space, basis, budget=16, settings=fast_settings)
    cw = cw_constant(space, basis, settings=fast_settings, promote=False)
    lifted = lift_by_witness(ksu, cw)
    assert lifted.value >= cw.value
    assert evaluate_witness(space, basis, lifted.witness) == pytest.approx(lifted.value, rel=1e-9)


@given(n=st.integers(2, 5), seed=st.integers(0, 10 ** 6), polyhedral=st.booleans())
def test_dominance(n, seed, polyhedral):
    rng = np.random.default_rng(seed)
    if polyhedral:
        rows = np.vstack([np.eye(n), rng.standard_normal((n, n))])
        space = NormedSpace(n, PolyhedralNormSpec(rows=rows))
        basis = canonical_basis(n, space=space)
    else:
        space, basis = quadratic_instance(random_spd(rng, n))
    settings = AnalysisSettings(budget=512, seed=seed, chunk_size=256)
    ksu = suppression_constant(space, basis, settings=settings)
    cw = cw_constant(space, basis, settings=settings, promote=False)
    ct = ct_constant(space, basis, settings=settings, promote=False)
    assert ksu.is_exact
    assert cw.value <= ksu.value + 1e-9
    assert ct.value <= ksu.value + 1e-9
    for estimate in (ksu, cw, ct):
        assert estimate.value >= 1.0
        assert evaluate_witness(space, basis, estimate.witness) == pytest.approx(estimate.value, rel=1e-9)

