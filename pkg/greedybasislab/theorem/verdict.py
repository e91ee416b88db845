#!/usr/bin/env python
"""
Consistency check of the characterisation C_w = 1 <=> K_su = 1.

- K_su exactly 1: a greedy ratio above 1 + tol would contradict the characterisation.
- K_su above 1 + tol: the transfer chain must produce a greedy violation certificate.
- K_su searched and close to 1: nothing is proved either way (inconclusive).
"""
from dataclasses import dataclass

from ..constants.constant_estimate import (EXACT, GREEDY, LOWER_BOUND, METHOD_THEOREM,
                                           ConstantEstimate, Witness, baseline_witness)
from ..constants.constants_pipeline import lift_by_witness
from ..constants.quasi_greedy import cw_constant
from ..constants.suppression import resolve_estimator_settings, suppression_constant
from ..spaces.basis import Basis
from ..spaces.normed_space import NormedSpace
from ..utils.calc_utils import improves
from ..utils.settings_utils import AnalysisSettings
from ..utils.utils import getlogger
from .certificates import CERTIFICATE_MARGIN, DisjointViolation, GreedyViolationCertificate
from .witness_transfer import find_disjoint_violation, split_witness, witness_transfer

logger = getlogger()

STATUS_PROVED_ONE = 'proved-1-unconditional'
STATUS_CERTIFIED = 'violation-certified'
STATUS_INCONCLUSIVE = 'inconclusive'
STATUS_INCONSISTENT = 'inconsistent'


@dataclass(frozen=True, eq=False)
class Verdict:
    """
    Outcome of `verify_characterization`.

    Attributes
    ----------
    ksu : ConstantEstimate
        K_su estimate.
    cw : ConstantEstimate
        C_w estimate, raised to the certificate ratio when the transfer chain beats the search.
    consistent : bool
        False only when the computation contradicts the characterisation.
    explanation : str
        Human-readable account of the decision.
    status : str
        'proved-1-unconditional', 'violation-certified', 'inconclusive' or 'inconsistent'.
    violation : DisjointViolation or None
        First link of the certificate chain.
    certificate : GreedyViolationCertificate or None
        Greedy violation found, if any.
    """
    ksu: ConstantEstimate
    cw: ConstantEstimate
    consistent: bool
    explanation: str
    status: str
    violation: DisjointViolation = None
    certificate: GreedyViolationCertificate = None

    def to_dict(self) -> dict:
        return {'consistent': self.consistent,
                'status': self.status,
                'explanation': self.explanation,
                'ksu': self.ksu.to_dict(),
                'cw': self.cw.to_dict(),
                'violation': self.violation.to_dict() if self.violation else None,
                'certificate': self.certificate.to_dict() if self.certificate else None}


def _certificate_estimate(certificate: GreedyViolationCertificate, budget_used: int) -> ConstantEstimate:
    witness = Witness(x=certificate.z, indices=certificate.indices, ratio=certificate.ratio, operator=GREEDY)
    return ConstantEstimate('cw', certificate.ratio, LOWER_BOUND, witness, METHOD_THEOREM, budget_used)


def _search_certificate(space, basis, cw):
    """Certificate read off a C_w search witness with ratio > 1 (t* = 1: z is the witness itself)."""
    violation = split_witness(space, basis, cw.witness.x, cw.witness.indices)
    certificate = GreedyViolationCertificate(z=cw.witness.x, N=cw.witness.N, indices=cw.witness.indices,
                                             ratio=cw.value, t_star=1.0)
    return violation, certificate


def verify_characterization(space: NormedSpace, basis: Basis, tol: float = None, budget: int = None,
                            settings: AnalysisSettings = None, ksu: ConstantEstimate = None,
                            cw: ConstantEstimate = None) -> Verdict:
    """
    Computes K_su and C_w and checks them against the characterisation.

    Parameters
    ----------
    space : NormedSpace
        The normed space.
    basis : Basis
        The basis.
    tol : float, optional
        Relative tolerance for "equals 1"; overrides ``settings.tol``.
    budget : int, optional
        Search restarts; overrides ``settings.budget``.
    settings : AnalysisSettings, optional
        Resolved configuration.
    ksu, cw : ConstantEstimate, optional
        Estimates already computed for this instance. A C_w obtained by promotion
        is re-checked by search.

    Returns
    -------
    Verdict
        Inconclusive searches are reported as such, never as inconsistent.
    """
    settings = resolve_estimator_settings(settings, budget).updated(tol=tol)
    tol = settings.tol
    ksu = ksu or suppression_constant(space, basis, settings=settings)
    if cw is None or cw.method == METHOD_THEOREM:
        cw = cw_constant(space, basis, settings=settings, promote=False)

    if ksu.value <= 1 + tol:
        if cw.value > 1 + tol:
            violation, certificate = _search_certificate(space, basis, cw)
            if ksu.is_exact:
                explanation = (f"K_su = {ksu.value} is exact ({ksu.method}) but a greedy ratio "
                               f"{cw.value} > 1 + {tol} was found")
                logger.error(explanation)
                return Verdict(ksu, cw, False, explanation, STATUS_INCONSISTENT, violation, certificate)
            ksu = lift_by_witness(ksu, cw, logger)
            explanation = f"searched greedy ratio {cw.value} certifies K_su >= C_w > 1"
            return Verdict(ksu, cw, True, explanation, STATUS_CERTIFIED, violation, certificate)
        if ksu.is_exact:
            promoted = ConstantEstimate('cw', 1.0, EXACT, baseline_witness(basis, GREEDY), METHOD_THEOREM,
                                        cw.budget_used)
            explanation = (f"K_su = 1 exactly ({ksu.method}) and the search found no greedy ratio "
                           f"above 1 + {tol}: the basis is 1-quasi-greedy")
            return Verdict(ksu, promoted, True, explanation, STATUS_PROVED_ONE)
        explanation = "K_su and C_w lower bounds are both 1 within tolerance; the search proves nothing"
        return Verdict(ksu, cw, True, explanation, STATUS_INCONCLUSIVE)

    violation = find_disjoint_violation(space, basis, settings=settings, ksu=ksu, cw=cw)
    certificate = witness_transfer(space, basis, violation) if violation is not None else None
    if certificate is None or not certificate.ratio > 1 + CERTIFICATE_MARGIN:
        explanation = f"K_su = {ksu.value} > 1 + {tol} but no greedy violation certificate resulted"
        logger.error(explanation)
        return Verdict(ksu, cw, False, explanation, STATUS_INCONSISTENT, violation, certificate)
    if improves(certificate.ratio, cw.value):
        cw = _certificate_estimate(certificate, cw.budget_used)
    explanation = (f"K_su = {ksu.value} ({ksu.exactness}) and the transferred certificate has "
                   f"greedy ratio {certificate.ratio} > 1")
    return Verdict(ksu, cw, True, explanation, STATUS_CERTIFIED, violation, certificate)
