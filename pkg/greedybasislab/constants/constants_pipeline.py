#!/usr/bin/env python
import pandas as pd

from ..data_management.analysis_data_store import AnalysisDataStore
from ..utils.utils import getlogger
from .constant_estimate import LOWER_BOUND, PROJECTION, RESIDUAL, ConstantEstimate, Witness
from .quasi_greedy import cqg_constant, ct_constant, cw_constant
from .suppression import subset_norm_table, suppression_constant

DOMINANCE_TOL = 1e-9


def lift_by_witness(ksu: ConstantEstimate, other: ConstantEstimate, logger=None) -> ConstantEstimate:
    """
    Raises a K_su lower bound to a greedy or residual estimate that beats it.

    G_N x = P_L x and x - G_N x = P_{L^c} x, so every C_w or C_t witness is also a
    projection witness. An exact K_su below such an estimate is reported and kept.
    """
    logger = logger or getlogger()
    if other.value <= ksu.value:
        return ksu
    if ksu.is_exact:
        if other.value > ksu.value + DOMINANCE_TOL:
            logger.error(f"{other.name} = {other.value} exceeds the exact K_su = {ksu.value}")
        return ksu
    w = other.witness
    indices = w.indices
    if w.operator == RESIDUAL:
        indices = tuple(sorted(set(range(len(w.x))) - set(indices)))
    witness = Witness(x=w.x, indices=indices, ratio=w.ratio, operator=PROJECTION)
    logger.debug(f"K_su lower bound lifted from {ksu.value} to {other.value} by the {other.name} witness")
    return ConstantEstimate('ksu', other.value, LOWER_BOUND, witness, ksu.method, ksu.budget_used)


class ConstantsPipeline:
    """
    Computes K_su, C_w, C_t and C_qg for an initialised AnalysisDataStore.

    Results are stored on the same data store under the 'constants' stage.

    Example
    -------
    .. code-block:: python

        store = AnalysisDataStore()
        store.initialise(instance, settings)
        ConstantsPipeline(store).calc_pipeline()
    """

    def __init__(self, store: AnalysisDataStore, logger=None):
        self.store = store
        self.logger = logger or getlogger()

    def calc_pipeline(self):
        """
        Runs the estimators in order: K_su, then C_w and C_t (promoted to exactly 1
        when K_su is exactly 1), then C_qg.

        Raises
        ------
        RuntimeError
            If the data store has not been initialised.
        """
        store = self.store
        if not store.ready_for_calculation:
            raise RuntimeError("An instance must be assigned to the AnalysisDataStore before running ConstantsPipeline")
        store.ready_for_constants_output = False
        space, basis, settings = store.space, store.basis, store.settings

        ksu = suppression_constant(space, basis, settings=settings)
        cw = cw_constant(space, basis, settings=settings, ksu=ksu)
        ct = ct_constant(space, basis, settings=settings, ksu=ksu)
        ksu = lift_by_witness(lift_by_witness(ksu, cw, self.logger), ct, self.logger)
        cqg = cqg_constant(space, basis, settings=settings, cw=cw, ct=ct)

        table = subset_norm_table(space, basis, settings) if ksu.is_exact else None
        store.assign_parameters('constants',
                                ksu=ksu, cw=cw, ct=ct, cqg=cqg,
                                subset_norm_table=table,
                                estimate_table=build_estimate_table([ksu, cw, ct, cqg]))
        for estimate in (ksu, cw, ct, cqg):
            self.logger.info(f"{estimate.name}: {estimate.value} ({estimate.exactness}, {estimate.method})")
        store.ready_for_constants_output = True


def build_estimate_table(estimates) -> pd.DataFrame:
    """One row per constant: value, exactness, method and norm evaluations."""
    table = pd.DataFrame([{'constant': e.name, 'value': e.value, 'exactness': e.exactness,
                           'method': e.method, 'budget_used': e.budget_used}
                          for e in estimates])
    return table.set_index('constant')
