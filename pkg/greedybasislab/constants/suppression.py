#!/usr/bin/env python
"""
The suppression unconditional constant K_su = max over proper A of ||P_A||.

Method routing, first match wins:

- renorm: the space carries a suppression norm built from this very basis (K_su = 1),
- lattice: (weighted) l_p norm with a monomial basis (K_su = 1),
- eigen: Hilbertian norms, one generalized eigenproblem per subset,
- vertex-enum: polyhedral unit balls with n <= max_vertex_dim,
- search: stratified restarts, lower bound only.
"""
import numpy as np
import pandas as pd

from ..exceptions import DimensionGuardError
from ..spaces.basis import Basis
from ..spaces.normed_space import NormedSpace
from ..utils.calc_utils import format_index_set, improves, nonempty_subsets
from ..utils.settings_utils import AnalysisSettings, load_default_settings
from ..utils.utils import getlogger
from .constant_estimate import (EXACT, LOWER_BOUND, METHOD_EIGEN, METHOD_LATTICE,
                                METHOD_RENORM, METHOD_SEARCH, METHOD_VERTEX, PROJECTION,
                                ConstantEstimate, Witness, baseline_witness)
from .rayleigh import projection_rayleigh
from .restart_search import RestartSearch

logger = getlogger()

RENORM_MATCH_TOL = 1e-12


def resolve_estimator_settings(settings: AnalysisSettings = None, budget=None) -> AnalysisSettings:
    settings = settings or load_default_settings()
    return settings.updated(budget=budget)


def check_subset_guard(space: NormedSpace, settings: AnalysisSettings, operation: str):
    if space.dim > settings.max_subset_dim:
        raise DimensionGuardError(space.dim, settings.max_subset_dim, operation)


def is_own_renorm(space: NormedSpace, basis: Basis) -> bool:
    """True when the norm of `space` is the suppression renorm with respect to `basis`."""
    spec = space.spec
    return (spec.kind == 'suppression'
            and spec.vectors.shape == basis.vectors.shape
            and np.max(np.abs(spec.vectors - basis.vectors)) <= RENORM_MATCH_TOL)


def select_method(space: NormedSpace, basis: Basis, settings: AnalysisSettings) -> str:
    spec = space.spec
    if is_own_renorm(space, basis):
        return METHOD_RENORM
    if spec.is_lattice and basis.is_monomial:
        return METHOD_LATTICE
    if space.hilbert_form is not None:
        return METHOD_EIGEN
    if spec.is_polyhedral:
        if space.dim <= settings.max_vertex_dim:
            return METHOD_VERTEX
        logger.warning(f"Polyhedral norm in dimension {space.dim} exceeds the vertex enumeration cap "
                       f"{settings.max_vertex_dim}; falling back to search.")
    return METHOD_SEARCH


def _normalise_witness(basis: Basis, x: np.ndarray) -> np.ndarray:
    """Scales x so that its largest-magnitude coefficient equals +1."""
    coeffs = basis.duals @ x
    return x / coeffs[int(np.argmax(np.abs(coeffs)))]


def _eigen_subset_norms(space, basis, subsets):
    G = space.hilbert_form
    rows = []
    for A in subsets:
        P = basis.vectors[:, list(A)] @ basis.duals[list(A), :]
        value, x = projection_rayleigh(G, P)
        rows.append((A, value, _normalise_witness(basis, x)))
    return rows


def _vertex_subset_norms(space, basis, subsets):
    vertices = space.unit_ball_vertices()
    coeffs = basis.coefficients(vertices)
    vertex_norms = space.norms(vertices)
    rows = []
    for A in subsets:
        mask = np.zeros(basis.dim)
        mask[list(A)] = 1.0
        ratios = space.norms(basis.synthesize(coeffs * mask)) / vertex_norms
        j = int(np.argmax(ratios))
        rows.append((A, float(ratios[j]), vertices[j].copy()))
    logger.debug(f"vertex method: {len(vertices)} vertices x {len(subsets)} subsets")
    return rows


def exact_subset_norms(space: NormedSpace, basis: Basis, settings: AnalysisSettings = None):
    """
    ||P_A|| with its maximising vector for every nonempty proper A, when an exact
    method applies.

    Returns
    -------
    tuple
        (method, list of (A, ||P_A||, x)) or (method, None) for the search method.

    Raises
    ------
    DimensionGuardError
        If n exceeds the subset enumeration cap.
    EigenSolverError
        If a generalized eigenproblem fails.
    """
    settings = resolve_estimator_settings(settings)
    check_subset_guard(space, settings, 'suppression_constant')
    method = select_method(space, basis, settings)
    subsets = nonempty_subsets(basis.dim, include_full=False)
    if method in (METHOD_RENORM, METHOD_LATTICE):
        rows = []
        for A in subsets:
            x = basis.vectors[:, list(A)].sum(axis=1)
            rows.append((A, 1.0, x))
        return method, rows
    if method == METHOD_EIGEN:
        return method, _eigen_subset_norms(space, basis, subsets)
    if method == METHOD_VERTEX:
        return method, _vertex_subset_norms(space, basis, subsets)
    return method, None


def subset_norm_table(space: NormedSpace, basis: Basis, settings: AnalysisSettings = None) -> pd.DataFrame:
    """
    Per-subset projection norms as a DataFrame indexed by the 1-based subset label.

    Empty (with the same columns) when only a search estimate is available.
    """
    method, rows = exact_subset_norms(space, basis, settings)
    columns = ['size', 'projection_norm', 'method']
    if rows is None:
        return pd.DataFrame(columns=columns).rename_axis('subset')
    table = pd.DataFrame([(format_index_set(A), len(A), value, method) for A, value, _ in rows],
                         columns=['subset', *columns])
    return table.set_index('subset')


def suppression_constant(space: NormedSpace, basis: Basis, budget: int = None,
                         settings: AnalysisSettings = None) -> ConstantEstimate:
    """
    Estimates K_su of `basis` in `space`.

    Parameters
    ----------
    space : NormedSpace
        The normed space.
    basis : Basis
        The basis.
    budget : int, optional
        Search restarts; overrides ``settings.budget``.
    settings : AnalysisSettings, optional
        Resolved configuration, packaged defaults when omitted.

    Returns
    -------
    ConstantEstimate
        Exact for the renorm, lattice, eigen and vertex methods, a lower bound otherwise.
        Ties between subsets keep the earliest (by size, then lexicographic).

    Raises
    ------
    DimensionGuardError
        If n exceeds ``settings.max_subset_dim``.
    EigenSolverError
        If a generalized eigenproblem fails.
    """
    settings = resolve_estimator_settings(settings, budget)
    method, rows = exact_subset_norms(space, basis, settings)
    logger.info(f"K_su method: {method}")
    if rows is None:
        witness, evaluations = RestartSearch(space, basis, settings).run(PROJECTION)
        return ConstantEstimate('ksu', witness.ratio, LOWER_BOUND, witness, method, evaluations)

    best = baseline_witness(basis, PROJECTION)
    for A, value, x in rows:
        if improves(value, best.ratio):
            best = Witness(x=x, indices=tuple(A), ratio=value, operator=PROJECTION)
    return ConstantEstimate('ksu', best.ratio, EXACT, best, method, 0)
