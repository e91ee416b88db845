#!/usr/bin/env python
import pandas as pd

from ..utils.data_preparation import ProblemInstance
from ..utils.settings_utils import AnalysisSettings, resolve_settings
from ..utils.utils import getlogger, serialize_results


class AnalysisDataStore:
    """
    AnalysisDataStore is a centralised aggregate holding one instance, its resolved
    settings and the results written by the constants and theorem pipelines.

    Attributes
    ----------
    input_attribute_names : list
        Names of the instance attributes.
    constants_output_attribute_names : list
        Names of the results of ConstantsPipeline.
    theorem_output_attribute_names : list
        Names of the results of TheoremPipeline.

    Methods
    -------
    initialise(instance, settings=None, cli_overrides=None):
        Assigns the instance and resolves its settings.
    assign_parameters(stage, **kwargs):
        Stores pipeline results for a stage.
    export_results_to_dict():
        Exports the results of both stages as a dictionary.
    """
    # --------base attributes----------------------
    _INPUT_ATTRIBUTES = {
        "name": str,
        "space": object,
        "basis": object,
        "settings": AnalysisSettings,
    }

    _OUTPUT_CONSTANTS_ATTRIBUTES = {
        "ksu": object,
        "cw": object,
        "ct": object,
        "cqg": object,
        "estimate_table": pd.DataFrame,
        "subset_norm_table": pd.DataFrame,
    }

    _OUTPUT_THEOREM_ATTRIBUTES = {
        "verdict": object,
        "certificate": object,
        "hilbert_witnesses": list,
    }

    def __init__(self, logger=None):
        self.input_attribute_names = [*self._INPUT_ATTRIBUTES.keys()]
        self.constants_output_attribute_names = [*self._OUTPUT_CONSTANTS_ATTRIBUTES.keys()]
        self.theorem_output_attribute_names = [*self._OUTPUT_THEOREM_ATTRIBUTES.keys()]
        for attr in (self._INPUT_ATTRIBUTES | self._OUTPUT_CONSTANTS_ATTRIBUTES
                     | self._OUTPUT_THEOREM_ATTRIBUTES):
            setattr(self, attr, None)
        self.instance = None

        # control flow:
        self.ready_for_calculation = False
        self.ready_for_constants_output = False
        self.ready_for_theorem_output = False
        self.logger = logger or getlogger()

    def initialise(self, instance: ProblemInstance, settings: AnalysisSettings = None,
                   cli_overrides: dict = None, environ=None):
        """
        Assigns an instance and resolves its settings.

        Parameters
        ----------
        instance : ProblemInstance
            The parsed instance.
        settings : AnalysisSettings, optional
            Fully resolved settings; when omitted they are layered from the packaged
            defaults, the instance "analysis" block, `cli_overrides` and the environment.
        cli_overrides : dict, optional
            Command-line values (None entries are ignored).
        environ : mapping, optional
            Environment used for GBL_THREADS, ``os.environ`` by default.
        """
        try:
            self.instance = instance
            self.name = instance.name
            self.space = instance.space
            self.basis = instance.basis
            self.settings = settings or resolve_settings(instance.analysis, cli_overrides, environ)
            self.ready_for_calculation = True
        except Exception as e:
            self.logger.exception(e)
            raise e

    def assign_parameters(self, stage: str, **kwargs):
        """
        Assigns values from kwargs to the output attributes of a stage.

        Parameters
        ----------
        stage : str
            'constants' or 'theorem'.
        **kwargs : dict
            Values to assign; None values are skipped.

        Raises
        ------
        ValueError
            If the stage is unknown.
        """
        stage_mapping = {
            'constants': self.constants_output_attribute_names,
            'theorem': self.theorem_output_attribute_names,
        }
        if stage not in stage_mapping:
            raise ValueError(f"Unknown stage: {stage}")
        attribute_name_list = stage_mapping[stage]
        for arg_name, value in kwargs.items():
            if arg_name in attribute_name_list and value is not None:
                setattr(self, arg_name, value)

    # ------export utils----------------------
    def export_constants_results_to_dict(self):
        """Estimates and tables of the constants stage, or None if unfinished."""
        if not self.ready_for_constants_output:
            self.logger.critical('Unfinished constants pipeline')
            return None
        return serialize_results(self, self.constants_output_attribute_names)

    def export_theorem_results_to_dict(self):
        """Verdict and certificates of the theorem stage, or None if unfinished."""
        if not self.ready_for_theorem_output:
            self.logger.critical('Unfinished theorem pipeline')
            return None
        return serialize_results(self, self.theorem_output_attribute_names)

    def export_results_to_dict(self):
        """
        Exports the combined results of both stages.

        Returns
        -------
        dict
            {'constants_results': ..., 'theorem_results': ...}
        """
        return {'constants_results': self.export_constants_results_to_dict(),
                'theorem_results': self.export_theorem_results_to_dict()}
