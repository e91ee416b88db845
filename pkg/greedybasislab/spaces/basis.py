#!/usr/bin/env python
from dataclasses import dataclass

import numpy as np

from ..exceptions import BasisConstructionError, DimensionMismatchError, InstanceError
from .normed_space import NormedSpace, as_vector

DEFAULT_MAX_CONDITION = 1e12
DEFAULT_BIORTH_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class Basis:
    """
    A basis e_1..e_n of R^n together with its biorthogonal functionals.

    Attributes
    ----------
    vectors : numpy.ndarray
        (n, n) matrix whose columns are e_1..e_n.
    duals : numpy.ndarray
        (n, n) matrix whose rows are e*_1..e*_n, so that duals @ vectors = I.
    norms_of_elements : numpy.ndarray or None
        Cached ||e_i|| when the basis was built against a space.
    """
    vectors: np.ndarray
    duals: np.ndarray
    norms_of_elements: np.ndarray = None

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    @classmethod
    def from_vectors(cls, vectors, space: NormedSpace = None, **kwargs):
        """Builds a basis from a list of basis vectors (each inner list is one e_i)."""
        return make_basis(np.array(vectors, dtype=float).T, space=space, **kwargs)

    def coefficients(self, X) -> np.ndarray:
        """Coefficient rows (e*_1(x), ..., e*_n(x)) of the rows of a (k, n) array."""
        return np.asarray(X, dtype=float) @ self.duals.T

    def synthesize(self, C) -> np.ndarray:
        """Ambient rows sum_i c_i e_i of the coefficient rows of a (k, n) array."""
        return np.asarray(C, dtype=float) @ self.vectors.T

    @property
    def is_monomial(self) -> bool:
        """True when every e_i is a nonzero multiple of a distinct canonical vector."""
        support = np.abs(self.vectors) > 0
        return bool(np.all(support.sum(axis=0) == 1) and np.all(support.sum(axis=1) == 1))

    def to_dict(self) -> dict:
        return {'columns': [[float(v) for v in col] for col in self.vectors.T]}


def canonical_basis(dim: int, space: NormedSpace = None, **kwargs) -> Basis:
    return make_basis(np.eye(dim), space=space, **kwargs)


def make_basis(columns, space: NormedSpace = None,
               max_condition: float = DEFAULT_MAX_CONDITION,
               biorth_tol: float = DEFAULT_BIORTH_TOL) -> Basis:
    """
    Materialises the biorthogonal system of a basis.

    Parameters
    ----------
    columns : array_like
        (n, n) matrix whose columns are the basis vectors.
    space : NormedSpace, optional
        When given, the element norms ||e_i|| are cached and checked to be positive.
    max_condition : float, optional
        Largest accepted condition number, default 1e12.
    biorth_tol : float, optional
        Tolerance of the check duals @ vectors = I, default 1e-10.

    Returns
    -------
    Basis

    Raises
    ------
    BasisConstructionError
        If the matrix is singular or its condition number exceeds `max_condition`.
    """
    V = np.array(columns, dtype=float)
    if V.ndim != 2 or V.shape[0] != V.shape[1]:
        raise DimensionMismatchError('square matrix', V.shape)
    if not np.all(np.isfinite(V)):
        raise InstanceError("Basis matrix has non-finite entries.")
    if space is not None and V.shape[0] != space.dim:
        raise DimensionMismatchError(space.dim, V.shape[0])
    condition = np.linalg.cond(V)
    if not np.isfinite(condition) or condition > max_condition:
        raise BasisConstructionError(condition, max_condition)
    D = np.linalg.inv(V)
    residual = np.max(np.abs(D @ V - np.eye(V.shape[0])))
    if residual > biorth_tol:
        raise BasisConstructionError(
            condition, max_condition,
            message=f"Biorthogonality residual {residual:.3e} exceeds {biorth_tol:.1e}.")
    norms = None
    if space is not None:
        norms = space.norms(V.T)
        if not np.all(norms > 0):
            raise BasisConstructionError(condition, max_condition,
                                         message="A basis element has zero norm.")
    return Basis(vectors=V, duals=D, norms_of_elements=norms)


def dual_coefficients(basis: Basis, x) -> np.ndarray:
    """
    Returns (e*_1(x), ..., e*_n(x)).

    Raises
    ------
    DimensionMismatchError
        If ``len(x) != basis.dim``.
    """
    return basis.duals @ as_vector(x, basis.dim)


def gram_matrix(space: NormedSpace, basis: Basis) -> np.ndarray:
    """
    Inner products <e_i, e_j> of the basis in a Hilbertian space, V^T G V.

    Raises
    ------
    InstanceError
        If the norm of `space` is not given by an inner product.
    """
    G = space.hilbert_form
    if G is None:
        raise InstanceError(f"The '{space.spec.kind}' norm is not Hilbertian; no Gram matrix exists.")
    V = basis.vectors
    gram = V.T @ G @ V
    return (gram + gram.T) / 2
