#!/usr/bin/env python
"""
Certificates exchanged between unconditionality and greedy-operator violations.
"""
from dataclasses import dataclass

import numpy as np

from ..exceptions import ContractError
from ..greedy.greedy_selection import DEFAULT_TIE_TOL, greedy_sets, is_valid_greedy_set, ALL_VALID
from ..spaces.basis import Basis
from ..spaces.normed_space import NormedSpace, as_vector
from ..utils.calc_utils import check_indices, format_index_set

SUPPORT_TOL = 1e-12
# margin by which a certified greedy ratio must exceed 1
CERTIFICATE_MARGIN = 1e-12


def coefficient_support(basis: Basis, x) -> np.ndarray:
    """Boolean mask of the coefficients of x with magnitude above 1e-12."""
    return np.abs(basis.duals @ as_vector(x, basis.dim)) > SUPPORT_TOL


@dataclass(frozen=True, eq=False)
class DisjointViolation:
    """
    Vectors x, y with disjoint coefficient supports and ||x + y|| < ||x||.

    Attributes
    ----------
    x, y : numpy.ndarray
        Ambient vectors.
    gap : float
        ||x|| - ||x + y||, strictly positive.
    """
    x: np.ndarray
    y: np.ndarray
    gap: float

    def check(self, space: NormedSpace, basis: Basis) -> float:
        """
        Re-evaluates the gap from raw inputs.

        Raises
        ------
        ContractError
            If the supports overlap or the gap is not positive.
        """
        if np.any(coefficient_support(basis, self.x) & coefficient_support(basis, self.y)):
            raise ContractError("Violation vectors have overlapping coefficient supports.")
        gap = space.norm(self.x) - space.norm(self.x + self.y)
        if not gap > 0:
            raise ContractError(f"Violation gap {gap} is not positive.")
        return gap

    def to_dict(self) -> dict:
        return {'kind': 'disjoint_violation',
                'x': [float(v) for v in self.x],
                'y': [float(v) for v in self.y],
                'gap': float(self.gap)}


@dataclass(frozen=True, eq=False)
class GreedyViolationCertificate:
    """
    A vector z with a greedy set L of size N such that ||G_N z|| / ||z|| > 1.

    Attributes
    ----------
    z : numpy.ndarray
        Ambient vector.
    N : int
        Size of the greedy set.
    indices : tuple of int
        The 0-based greedy set L.
    ratio : float
        ||G_N z|| / ||z||.
    t_star : float
        Step t in (0, 1] with z = x + t y.
    """
    z: np.ndarray
    N: int
    indices: tuple
    ratio: float
    t_star: float

    def verify(self, space: NormedSpace, basis: Basis, tie_tol: float = DEFAULT_TIE_TOL) -> float:
        """
        Re-evaluates ||G_N z|| / ||z|| from raw inputs.

        Raises
        ------
        ContractError
            If L is not a greedy set of size N for z.
        """
        z = as_vector(self.z, basis.dim)
        indices = check_indices(self.indices, basis.dim)
        coeffs = basis.duals @ z
        if len(indices) != self.N or not is_valid_greedy_set(coeffs, indices, tie_tol):
            raise ContractError(f"{format_index_set(indices)} is not a greedy set of size {self.N} of z.")
        image = basis.vectors[:, list(indices)] @ coeffs[list(indices)]
        return space.norm(image) / space.norm(z)

    def is_sound(self, space: NormedSpace, basis: Basis, tie_tol: float = DEFAULT_TIE_TOL) -> bool:
        try:
            return self.verify(space, basis, tie_tol) > 1 + CERTIFICATE_MARGIN
        except ContractError:
            return False

    def all_valid_sets(self, basis: Basis, tie_tol: float = DEFAULT_TIE_TOL) -> list:
        """Every valid greedy set of size N of z, 1-based."""
        coeffs = basis.duals @ as_vector(self.z, basis.dim)
        return [[i + 1 for i in s.indices] for s in greedy_sets(coeffs, self.N, ALL_VALID, tie_tol)]

    def to_dict(self) -> dict:
        return {'kind': 'greedy_violation',
                'z': [float(v) for v in self.z],
                'N': int(self.N),
                'lambda': [i + 1 for i in self.indices],
                'ratio': float(self.ratio),
                't_star': float(self.t_star)}


@dataclass(frozen=True, eq=False)
class HilbertWitness:
    """Orthogonality witness for a pair (i, j): z = e_i + epsilon t e_j with G_1 z = e_i."""
    pair: tuple
    epsilon: int
    t: float
    certificate: GreedyViolationCertificate

    def to_dict(self) -> dict:
        return {'kind': 'hilbert_orthogonality',
                'pair': [i + 1 for i in self.pair],
                'epsilon': int(self.epsilon),
                't': float(self.t),
                'certificate': self.certificate.to_dict()}


def none_record(status: str) -> dict:
    """Record emitted when no certificate exists or none was found."""
    return {'kind': 'none', 'status': status}
