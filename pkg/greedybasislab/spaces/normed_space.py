#!/usr/bin/env python
from dataclasses import dataclass

import numpy as np

from ..exceptions import DimensionMismatchError, InstanceError, NormSpecError
from .norm_specs import NormSpec, validate_norm_spec
from .vertex_enumeration import polyhedral_vertices


@dataclass(frozen=True, eq=False)
class NormedSpace:
    """
    The space R^n with one of the closed-form norms.

    Attributes
    ----------
    dim : int
        The dimension n.
    spec : NormSpec
        The norm specification, validated at construction.

    Raises
    ------
    NormSpecError
        If the specification violates its invariants for this dimension.
    """
    dim: int
    spec: NormSpec

    def __post_init__(self):
        report = validate_norm_spec(self.spec, self.dim)
        if not report.accepted:
            raise NormSpecError(report)

    def norms(self, X) -> np.ndarray:
        """Norms of the rows of a (k, n) array."""
        X = np.asarray(X, dtype=float)
        if X.ndim != 2 or X.shape[1] != self.dim:
            raise DimensionMismatchError(self.dim, X.shape[-1] if X.ndim else 0)
        return self.spec.evaluate(X)

    def norm(self, x) -> float:
        return float(self.norms(as_vector(x, self.dim)[None, :])[0])

    @property
    def hilbert_form(self):
        """SPD matrix of the norm when it is Hilbertian, otherwise None."""
        return self.spec.hilbert_form(self.dim)

    def unit_ball_vertices(self):
        """
        Vertices of the unit ball for polyhedral norms, otherwise None.

        Closed forms are used for (weighted) l_1 and l_inf; general polyhedral
        norms go through vertex enumeration of the functional arrangement.
        """
        vertices = self.spec.closed_form_vertices(self.dim)
        if vertices is not None:
            return vertices
        if self.spec.kind == 'polyhedral':
            return polyhedral_vertices(self.spec.rows)
        return None

    def to_dict(self) -> dict:
        return {'dim': self.dim, 'norm': self.spec.to_dict()}


def as_vector(x, dim: int) -> np.ndarray:
    """
    Converts `x` to a float vector of length `dim`.

    Raises
    ------
    DimensionMismatchError
        If `x` has the wrong length.
    InstanceError
        If `x` has non-finite entries.
    """
    v = np.asarray(x, dtype=float)
    if v.ndim != 1 or v.shape[0] != dim:
        raise DimensionMismatchError(dim, v.shape[0] if v.ndim == 1 else v.shape)
    if not np.all(np.isfinite(v)):
        raise InstanceError("Vector has non-finite entries (NaN or Inf).")
    return v


def norm(space: NormedSpace, x) -> float:
    """
    Evaluates the norm of `x` in `space`.

    Parameters
    ----------
    space : NormedSpace
        The normed space.
    x : array_like
        Vector of length ``space.dim``.

    Returns
    -------
    float
        The nonnegative norm value.

    Raises
    ------
    DimensionMismatchError
        If ``len(x) != space.dim``.
    """
    return space.norm(x)
