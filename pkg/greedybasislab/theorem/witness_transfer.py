#!/usr/bin/env python
"""
From an unconditionality violation to a greedy-operator violation.

If x and y have disjoint coefficient supports and ||x + y|| < ||x||, then
phi(t) = ||x + t y|| is convex with phi(t) < phi(0) on (0, 1]. For t small enough
the support of x is a greedy set of z = x + t y, and G_N z = x, so
||G_N z|| / ||z|| = ||x|| / phi(t) > 1.
"""
import numpy as np

from ..constants.constant_estimate import ConstantEstimate
from ..constants.quasi_greedy import cw_constant
from ..constants.suppression import resolve_estimator_settings, suppression_constant
from ..exceptions import ContractError, DimensionGuardError
from ..spaces.basis import Basis
from ..spaces.normed_space import NormedSpace, as_vector
from ..utils.calc_utils import ternary_search
from ..utils.settings_utils import AnalysisSettings
from ..utils.utils import getlogger
from .certificates import SUPPORT_TOL, DisjointViolation, GreedyViolationCertificate

logger = getlogger()


def split_witness(space: NormedSpace, basis: Basis, w, indices) -> DisjointViolation | None:
    """
    Splits w into x = P_A w and y = w - x.

    Coefficients below 1e-12 in magnitude are dropped from both parts. Returns
    None unless ||x|| > ||x + y||.
    """
    coeffs = basis.duals @ as_vector(w, basis.dim)
    coeffs[np.abs(coeffs) <= SUPPORT_TOL] = 0.0
    inside = np.zeros(basis.dim, dtype=bool)
    inside[list(indices)] = True
    x = basis.vectors @ np.where(inside, coeffs, 0.0)
    y = basis.vectors @ np.where(inside, 0.0, coeffs)
    if not np.any(coeffs[inside]) or not np.any(coeffs[~inside]):
        return None
    gap = space.norm(x) - space.norm(x + y)
    if not gap > 0:
        return None
    return DisjointViolation(x=x, y=y, gap=gap)


def find_disjoint_violation(space: NormedSpace, basis: Basis, budget: int = None,
                            settings: AnalysisSettings = None,
                            ksu: ConstantEstimate = None,
                            cw: ConstantEstimate = None) -> DisjointViolation | None:
    """
    Looks for disjointly supported x, y with ||x + y|| < ||x||.

    The K_su witness (x_w, A) is split into P_A x_w and its complement part; when
    that fails the C_w search witness is split along its greedy set.

    Parameters
    ----------
    space : NormedSpace
        The normed space.
    basis : Basis
        The basis.
    budget : int, optional
        Search restarts; overrides ``settings.budget``.
    settings : AnalysisSettings, optional
        Resolved configuration.
    ksu, cw : ConstantEstimate, optional
        Estimates already computed for this instance.

    Returns
    -------
    DisjointViolation or None
        None means none was found. This proves K_su = 1 only when K_su is exact.
    """
    settings = resolve_estimator_settings(settings, budget)
    if ksu is None:
        try:
            ksu = suppression_constant(space, basis, settings=settings)
        except DimensionGuardError as e:
            logger.warning(f"Skipping the K_su witness: {e}")
    if ksu is not None and ksu.value > 1:
        violation = split_witness(space, basis, ksu.witness.x, ksu.witness.indices)
        if violation is not None:
            return violation
    if cw is None or cw.value <= 1:
        cw = cw_constant(space, basis, settings=settings, promote=False)
    if cw.value > 1:
        return split_witness(space, basis, cw.witness.x, cw.witness.indices)
    return None


def witness_transfer(space: NormedSpace, basis: Basis, v: DisjointViolation) -> GreedyViolationCertificate:
    """
    Turns a disjoint violation into a greedy violation certificate.

    t is restricted to (0, t_max] with t_max = min(1, min_{supp x} |x_i| / max |y_j|),
    which keeps supp(x) a greedy set of x + t y, and chosen by ternary search to
    minimise phi(t) = ||x + t y||.

    Raises
    ------
    ContractError
        If x or y is zero or their supports overlap.
    """
    cx = basis.duals @ as_vector(v.x, basis.dim)
    cy = basis.duals @ as_vector(v.y, basis.dim)
    support_x = np.abs(cx) > SUPPORT_TOL
    support_y = np.abs(cy) > SUPPORT_TOL
    if not support_x.any() or not support_y.any():
        raise ContractError("witness_transfer needs nonzero x and y.")
    if np.any(support_x & support_y):
        raise ContractError("witness_transfer needs disjointly supported x and y.")

    t_max = min(1.0, float(np.min(np.abs(cx[support_x])) / np.max(np.abs(cy))))
    x, y = np.asarray(v.x, dtype=float), np.asarray(v.y, dtype=float)
    t_star, _ = ternary_search(lambda t: space.norm(x + t * y), 0.0, t_max)
    if t_star <= 0:
        t_star = t_max
    z = x + t_star * y
    indices = tuple(int(i) for i in np.flatnonzero(support_x))
    coeffs = basis.duals @ z
    image = basis.vectors[:, list(indices)] @ coeffs[list(indices)]
    ratio = space.norm(image) / space.norm(z)
    logger.debug(f"witness transfer: t_max={t_max}, t*={t_star}, ratio={ratio}")
    return GreedyViolationCertificate(z=z, N=len(indices), indices=indices, ratio=ratio, t_star=t_star)
