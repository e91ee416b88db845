#!/usr/bin/env python
from ..constants.constants_pipeline import build_estimate_table
from ..constants.quasi_greedy import cqg_constant
from ..data_management.analysis_data_store import AnalysisDataStore
from ..utils.utils import getlogger
from .hilbert import orthogonality_witnesses
from .verdict import verify_characterization


class TheoremPipeline:
    """
    Runs the characterisation check on a data store already processed by ConstantsPipeline.

    Stores the verdict, its certificate and, for Hilbertian norms, the orthogonality
    witnesses of every non-orthogonal pair. A C_w raised by the certificate chain
    replaces the searched C_w (and C_qg is recomputed).

    Example
    -------
    .. code-block:: python

        ConstantsPipeline(store).calc_pipeline()
        TheoremPipeline(store).calc_pipeline()
    """

    def __init__(self, store: AnalysisDataStore, logger=None):
        self.store = store
        self.logger = logger or getlogger()

    def calc_pipeline(self):
        store = self.store
        if not store.ready_for_constants_output:
            raise RuntimeError("ConstantsPipeline must complete before TheoremPipeline")
        store.ready_for_theorem_output = False

        verdict = verify_characterization(store.space, store.basis, settings=store.settings,
                                          ksu=store.ksu, cw=store.cw)
        if verdict.cw.value > store.cw.value or verdict.ksu.value > store.ksu.value:
            cw = verdict.cw if verdict.cw.value > store.cw.value else store.cw
            cqg = cqg_constant(store.space, store.basis, settings=store.settings, cw=cw, ct=store.ct)
            store.assign_parameters('constants', ksu=verdict.ksu, cw=cw, cqg=cqg,
                                    estimate_table=build_estimate_table([verdict.ksu, cw, store.ct, cqg]))
        hilbert = []
        if store.space.hilbert_form is not None:
            hilbert = orthogonality_witnesses(store.space, store.basis)
        store.assign_parameters('theorem', verdict=verdict, certificate=verdict.certificate,
                                hilbert_witnesses=hilbert)
        self.logger.info(f"verdict: {verdict.status} ({verdict.explanation})")
        store.ready_for_theorem_output = True
