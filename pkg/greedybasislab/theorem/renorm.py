#!/usr/bin/env python
import numpy as np

from ..exceptions import DimensionGuardError
from ..spaces.basis import Basis
from ..spaces.norm_specs import SuppressionNormSpec
from ..spaces.normed_space import NormedSpace
from ..utils.settings_utils import AnalysisSettings, load_default_settings
from ..utils.utils import getlogger

logger = getlogger()


def renorm_suppression(space: NormedSpace, basis: Basis, settings: AnalysisSettings = None) -> NormedSpace:
    """
    The equivalent norm |||x||| = max over nonempty A of ||P_A x||.

    The full set is included, so ||x|| <= |||x||| <= K_su ||x||, and every P_B is
    a contraction for |||.|||: the basis is 1-suppression unconditional, hence
    1-quasi-greedy, in the renormed space.

    Parameters
    ----------
    space : NormedSpace
        The original space.
    basis : Basis
        The basis defining the projections.
    settings : AnalysisSettings, optional
        Supplies the subset enumeration cap (n <= 20 by default).

    Returns
    -------
    NormedSpace
        A space with a derived suppression norm. Renorming an already renormed
        space with respect to the same basis returns it unchanged.

    Raises
    ------
    DimensionGuardError
        If n exceeds the cap.
    """
    settings = settings or load_default_settings()
    if space.dim > settings.max_subset_dim:
        raise DimensionGuardError(space.dim, settings.max_subset_dim, 'renorm_suppression')
    spec = space.spec
    if spec.kind == 'suppression' and np.array_equal(spec.vectors, basis.vectors):
        return space
    logger.info(f"renorming over {2 ** space.dim - 1} coordinate subsets")
    return NormedSpace(space.dim, SuppressionNormSpec(base=spec, vectors=basis.vectors.copy()))
