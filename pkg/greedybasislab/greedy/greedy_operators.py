#!/usr/bin/env python
"""
Coordinate projections P_A and the greedy operators G_N of a basis.
"""
import numpy as np

from ..exceptions import ContractError
from ..spaces.basis import Basis, dual_coefficients
from ..utils.calc_utils import check_indices, format_index_set
from .greedy_selection import DEFAULT_TIE_TOL, GreedySelection, is_valid_greedy_set


def projection_matrix(basis: Basis, A) -> np.ndarray:
    """Matrix of P_A in ambient coordinates, V[:, A] @ D[A, :]."""
    A = list(check_indices(A, basis.dim))
    return basis.vectors[:, A] @ basis.duals[A, :]


def projection(basis: Basis, x, A) -> np.ndarray:
    """
    Returns P_A(x) = sum_{i in A} e*_i(x) e_i.

    Parameters
    ----------
    basis : Basis
        The basis.
    x : array_like
        Ambient vector.
    A : iterable of int
        0-based index set; the empty set gives 0 and the full set gives x.

    Raises
    ------
    ContractError
        If an index is out of range.
    """
    coeffs = dual_coefficients(basis, x)
    A = list(check_indices(A, basis.dim))
    return basis.vectors[:, A] @ coeffs[A]


def _check_selection(basis, x, selection: GreedySelection, tie_tol):
    coeffs = dual_coefficients(basis, x)
    if not is_valid_greedy_set(coeffs, selection.indices, tie_tol):
        raise ContractError(
            f"{format_index_set(selection.indices)} is not a greedy set of the coefficients {coeffs.tolist()}.")
    return coeffs


def greedy_sum(basis: Basis, x, selection: GreedySelection, tie_tol: float = DEFAULT_TIE_TOL) -> np.ndarray:
    """
    Returns G_N(x) = sum_{j in L} e*_j(x) e_j for the greedy set L of `selection`.

    Raises
    ------
    ContractError
        If `selection` is not a valid greedy set of the coefficients of x.
    """
    _check_selection(basis, x, selection, tie_tol)
    return projection(basis, x, selection.indices)


def residual(basis: Basis, x, selection: GreedySelection, tie_tol: float = DEFAULT_TIE_TOL) -> np.ndarray:
    """
    Returns x - G_N(x), the projection of x onto the complement of the greedy set.

    Raises
    ------
    ContractError
        If `selection` is not a valid greedy set of the coefficients of x.
    """
    _check_selection(basis, x, selection, tie_tol)
    complement = sorted(set(range(basis.dim)) - set(selection.indices))
    return projection(basis, x, complement)
