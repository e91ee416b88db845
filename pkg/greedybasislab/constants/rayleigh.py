#!/usr/bin/env python
"""
Exact norms of coordinate projections for quadratic norms.

For norm(x)^2 = x^T G x the squared ratio ||P_A x||^2 / ||x||^2 is the generalized
Rayleigh quotient of the pencil (P_A^T G P_A, G), so ||P_A|| is the square root of
its largest generalized eigenvalue.
"""
import numpy as np
import scipy.linalg

from ..exceptions import ContractError, EigenSolverError
from ..spaces.basis import Basis, canonical_basis
from ..utils.calc_utils import check_indices


def projection_rayleigh(G: np.ndarray, P: np.ndarray):
    """
    Largest generalized eigenpair of (P^T G P, G).

    Returns
    -------
    tuple
        (sqrt of the largest eigenvalue, maximising ambient vector).

    Raises
    ------
    EigenSolverError
        If the solver fails (e.g. G is numerically degenerate).
    """
    M = P.T @ G @ P
    M = (M + M.T) / 2
    try:
        eigvals, eigvecs = scipy.linalg.eigh(M, G)
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError, ValueError) as e:
        raise EigenSolverError(f"Generalized eigenproblem failed: {e}") from e
    top = eigvals[-1]
    if not np.isfinite(top):
        raise EigenSolverError("Generalized eigenproblem returned a non-finite eigenvalue.")
    return float(np.sqrt(max(top, 0.0))), eigvecs[:, -1]


def rayleigh_su_quadratic(G, A, basis: Basis = None) -> float:
    """
    ||P_A|| for the quadratic norm sqrt(x^T G x).

    Parameters
    ----------
    G : array_like
        Symmetric positive-definite matrix.
    A : iterable of int
        Nonempty 0-based index set.
    basis : Basis, optional
        Basis defining P_A; the canonical basis when omitted.

    Returns
    -------
    float
        sup_x ||P_A x||_G / ||x||_G.
    """
    G = np.asarray(G, dtype=float)
    basis = basis or canonical_basis(G.shape[0])
    A = list(check_indices(A, basis.dim))
    if not A:
        raise ContractError("rayleigh_su_quadratic needs a nonempty index set.")
    P = basis.vectors[:, A] @ basis.duals[A, :]
    value, _ = projection_rayleigh(G, P)
    return value
