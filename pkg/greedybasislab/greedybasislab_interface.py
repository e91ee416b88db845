#!/usr/bin/env python
"""
This module defines GreedyBasisLabInterface, the programmatic front door of the
package. It uses AnalysisDataStore to hold an instance and its results, and the
ConstantsPipeline and TheoremPipeline classes to compute them.

Example Usage:
--------------
.. code-block:: python

    lab = GreedyBasisLabInterface()
    store = lab.analyse(instance_document, budget=2000, seed=1)
    results = lab.export_results_to_dict()
"""
import time

from .constants.constants_pipeline import ConstantsPipeline
from .data_management.analysis_data_store import AnalysisDataStore
from .exceptions import GreedyBasisLabError
from .theorem.renorm import renorm_suppression
from .theorem.theorem_pipeline import TheoremPipeline
from .utils.data_preparation import ProblemInstance, initialise_instance
from .utils.utils import getlogger


class GreedyBasisLabInterface:
    """
    Orchestrates the analysis of one instance.

    Attributes
    ----------
    store : AnalysisDataStore
        Instance, settings and results of the last analysis.
    constantspl : ConstantsPipeline
        The constants stage of the last analysis.
    theorempl : TheoremPipeline
        The theorem stage of the last analysis.
    logger : Logger
        Logger of the package.

    Example
    -------
    .. code-block:: python

        lab = GreedyBasisLabInterface(log_level='WARNING')
        store = lab.analyse(load_instance_file('shear-2.json'))
        store.verdict.status
    """

    def __init__(self, log_level='INFO'):
        self.store: AnalysisDataStore = None
        self.constantspl: ConstantsPipeline = None
        self.theorempl: TheoremPipeline = None
        self.logger = getlogger(log_level)

    def analyse(self, instance, settings=None, environ=None, **cli_overrides) -> AnalysisDataStore:
        """
        Runs the constants and theorem pipelines.

        Parameters
        ----------
        instance : ProblemInstance or dict
            A parsed instance or an instance document.
        settings : AnalysisSettings, optional
            Fully resolved settings; otherwise layered from defaults, the instance
            and `cli_overrides` (budget, seed, tol, ...).
        environ : mapping, optional
            Environment consulted for GBL_THREADS.

        Returns
        -------
        AnalysisDataStore
            The store holding the results.
        """
        try:
            if not isinstance(instance, ProblemInstance):
                instance = initialise_instance(instance)
            self.store = AnalysisDataStore()
            self.store.initialise(instance, settings=settings, cli_overrides=cli_overrides, environ=environ)
            started = time.perf_counter()

            self.constantspl = ConstantsPipeline(self.store)
            self.constantspl.calc_pipeline()

            self.theorempl = TheoremPipeline(self.store)
            self.theorempl.calc_pipeline()
            self.logger.info(f"analysed {instance.name} in {time.perf_counter() - started:.3f} s")
            return self.store
        except GreedyBasisLabError:
            raise
        except Exception as e:
            self.logger.exception("Analysis failed")
            raise e

    def renorm(self, instance: ProblemInstance, settings=None) -> ProblemInstance:
        """Returns the instance with its norm replaced by the suppression renorm of its basis."""
        space = renorm_suppression(instance.space, instance.basis, settings)
        return ProblemInstance(name=f"{instance.name}-renorm", space=space, basis=instance.basis,
                               analysis=dict(instance.analysis), source=None)

    def set_loglevel(self, loglevel: int | str):
        """
        Sets the logging level of the package logger.

        Parameters
        ----------
        loglevel : int or str
            The logging level to set.
        """
        self.logger.setLevel(loglevel)

    def export_results_to_dict(self):
        """
        Retrieves the results of the last analysis.

        Returns
        -------
        dict
            {'constants_results': ..., 'theorem_results': ...}

        Raises
        ------
        RuntimeError
            If no analysis has been run.
        """
        if self.store is None:
            raise RuntimeError("No analysis has been run")
        return self.store.export_results_to_dict()
