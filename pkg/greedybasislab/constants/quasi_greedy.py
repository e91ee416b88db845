#!/usr/bin/env python
"""
Quasi-greedy constants C_w, C_t and C_qg = max(C_w, C_t).

C_w and C_t are searched; there is no general algorithm for their exact values.
The one exception is K_su = 1 (exact): then G_N and I - G_N are coordinate
projections of norm at most 1, so C_w = C_t = 1 exactly.
"""
from ..spaces.basis import Basis
from ..spaces.normed_space import NormedSpace
from ..utils.settings_utils import AnalysisSettings
from ..utils.utils import getlogger
from .constant_estimate import (EXACT, GREEDY, LOWER_BOUND, METHOD_SEARCH, METHOD_THEOREM,
                                RESIDUAL, ConstantEstimate, baseline_witness)
from .restart_search import RestartSearch
from .suppression import resolve_estimator_settings, select_method, suppression_constant

logger = getlogger()


def is_one(estimate: ConstantEstimate, tol: float) -> bool:
    """True when `estimate` proves the constant equals 1 within `tol` relative."""
    return estimate.is_exact and estimate.value <= 1 + tol


def _promotion_source(space, basis, settings, ksu):
    if ksu is not None:
        return ksu
    if space.dim > settings.max_subset_dim:
        logger.warning(f"No exactness promotion: K_su enumeration is capped at n <= {settings.max_subset_dim}")
        return None
    if select_method(space, basis, settings) == METHOD_SEARCH:
        return None
    return suppression_constant(space, basis, settings=settings)


def _greedy_constant(name, operator, space, basis, budget, settings, promote, ksu):
    settings = resolve_estimator_settings(settings, budget)
    if promote:
        ksu = _promotion_source(space, basis, settings, ksu)
        if ksu is not None and is_one(ksu, settings.tol):
            logger.info(f"{name} = 1 exactly: K_su = 1 ({ksu.method})")
            return ConstantEstimate(name, 1.0, EXACT, baseline_witness(basis, operator),
                                    METHOD_THEOREM, 0)
    witness, evaluations = RestartSearch(space, basis, settings).run(operator)
    logger.info(f"{name} lower bound {witness.ratio} after {evaluations} norm evaluations")
    return ConstantEstimate(name, witness.ratio, LOWER_BOUND, witness, METHOD_SEARCH, evaluations)


def cw_constant(space: NormedSpace, basis: Basis, budget: int = None,
                settings: AnalysisSettings = None, promote: bool = True,
                ksu: ConstantEstimate = None) -> ConstantEstimate:
    """
    Estimates C_w = sup ||G_N x|| / ||x|| over x != 0, 1 <= N <= n and every valid greedy set.

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
    promote : bool, optional
        Report exactly 1 when K_su is exactly 1 (default). With False the search always runs.
    ksu : ConstantEstimate, optional
        A K_su estimate already computed for this instance.

    Returns
    -------
    ConstantEstimate
        A lower bound with a greedy witness, or exactly 1 by promotion.
    """
    return _greedy_constant('cw', GREEDY, space, basis, budget, settings, promote, ksu)


def ct_constant(space: NormedSpace, basis: Basis, budget: int = None,
                settings: AnalysisSettings = None, promote: bool = True,
                ksu: ConstantEstimate = None) -> ConstantEstimate:
    """As `cw_constant` for the residual ratio ||x - G_N x|| / ||x||, 0 <= N <= n."""
    return _greedy_constant('ct', RESIDUAL, space, basis, budget, settings, promote, ksu)


def cqg_constant(space: NormedSpace, basis: Basis, budget: int = None,
                 settings: AnalysisSettings = None, cw: ConstantEstimate = None,
                 ct: ConstantEstimate = None) -> ConstantEstimate:
    """
    C_qg = max(C_w, C_t), carrying the winning witness (C_w on equality).

    Exact only when both components are exact.
    """
    cw = cw or cw_constant(space, basis, budget, settings)
    ct = ct or ct_constant(space, basis, budget, settings)
    winner = cw if cw.value >= ct.value else ct
    exactness = EXACT if cw.is_exact and ct.is_exact else LOWER_BOUND
    return ConstantEstimate('cqg', winner.value, exactness, winner.witness, winner.method,
                            cw.budget_used + ct.budget_used)
