#!/usr/bin/env python
"""
Closed-form norm families on R^n.

Each specification is an immutable value with a ``kind`` tag, a vectorised
``evaluate`` over a batch of row vectors, a ``validate`` check and a JSON form.
The ``suppression`` kind is derived: it is produced by the renorming of a space
with respect to a basis and is never written by hand.
"""
import itertools
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from ..exceptions import DimensionGuardError, InstanceSchemaError
from ..utils.calc_utils import nonempty_subsets

SYMMETRY_TOL = 1e-12
# rows of subset masks evaluated at once by the suppression norm
_SUBSET_BLOCK = 4096
# the subset masks of the suppression norm hold 2^n - 1 rows
MAX_SUPPRESSION_DIM = 20


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validating a norm specification; `failures` lists each failed check."""
    accepted: bool
    failures: tuple = ()

    def to_dict(self):
        return {'accepted': self.accepted, 'failures': list(self.failures)}


def _parse_exponent(p):
    if isinstance(p, str) and p.lower() in ('inf', 'infinity'):
        return math.inf
    return float(p)


def _exponent_to_json(p):
    return 'inf' if math.isinf(p) else p


def _check_exponent(p, failures):
    if not (p >= 1):
        failures.append(f"exponent p={p} must lie in [1, inf]")


class NormSpec:
    """Base class of the norm families."""
    kind = None

    def evaluate(self, X: np.ndarray) -> np.ndarray:
        """Norms of the rows of a (k, n) array."""
        raise NotImplementedError

    def validate(self, dim: int) -> ValidationReport:
        raise NotImplementedError

    def to_dict(self) -> dict:
        raise NotImplementedError

    def hilbert_form(self, dim: int):
        """SPD matrix G with norm(x)^2 = x^T G x when the norm is Hilbertian, else None."""
        return None

    def closed_form_vertices(self, dim: int):
        """Unit-ball vertices when the ball is a polytope with known vertices, else None."""
        return None

    @property
    def is_polyhedral(self) -> bool:
        return False

    @property
    def is_lattice(self) -> bool:
        """True when |y_i| <= |x_i| for all i implies norm(y) <= norm(x)."""
        return False


@dataclass(frozen=True, eq=False)
class LpNormSpec(NormSpec):
    p: float = 2.0
    kind = 'lp'

    def evaluate(self, X):
        return np.linalg.norm(X, ord=self.p, axis=1)

    def validate(self, dim):
        failures = []
        _check_exponent(self.p, failures)
        return ValidationReport(not failures, tuple(failures))

    def to_dict(self):
        return {'type': self.kind, 'p': _exponent_to_json(self.p)}

    def hilbert_form(self, dim):
        return np.eye(dim) if self.p == 2 else None

    def closed_form_vertices(self, dim):
        return _weighted_ball_vertices(self.p, np.ones(dim))

    @property
    def is_polyhedral(self):
        return self.p == 1 or math.isinf(self.p)

    @property
    def is_lattice(self):
        return True


@dataclass(frozen=True, eq=False)
class WeightedLpNormSpec(NormSpec):
    """norm(x) = || w * x ||_p with strictly positive weights w."""
    p: float = 2.0
    weights: np.ndarray = field(default_factory=lambda: np.ones(1))
    kind = 'weighted_lp'

    def __post_init__(self):
        object.__setattr__(self, 'weights', np.asarray(self.weights, dtype=float))

    def evaluate(self, X):
        return np.linalg.norm(X * self.weights, ord=self.p, axis=1)

    def validate(self, dim):
        failures = []
        _check_exponent(self.p, failures)
        w = np.asarray(self.weights, dtype=float)
        if w.shape != (dim,):
            failures.append(f"weight vector has shape {w.shape}, expected ({dim},)")
        elif not np.all(np.isfinite(w)) or not np.all(w > 0):
            failures.append("all weights must be finite and strictly positive")
        return ValidationReport(not failures, tuple(failures))

    def to_dict(self):
        return {'type': self.kind, 'p': _exponent_to_json(self.p),
                'weights': [float(v) for v in self.weights]}

    def hilbert_form(self, dim):
        return np.diag(self.weights ** 2) if self.p == 2 else None

    def closed_form_vertices(self, dim):
        return _weighted_ball_vertices(self.p, self.weights)

    @property
    def is_polyhedral(self):
        return self.p == 1 or math.isinf(self.p)

    @property
    def is_lattice(self):
        return True


@dataclass(frozen=True, eq=False)
class QuadraticNormSpec(NormSpec):
    """norm(x) = sqrt(x^T G x) for a symmetric positive-definite G."""
    gram: np.ndarray = field(default_factory=lambda: np.eye(1))
    kind = 'quadratic'

    def __post_init__(self):
        object.__setattr__(self, 'gram', np.asarray(self.gram, dtype=float))

    def evaluate(self, X):
        q = np.einsum('ki,ij,kj->k', X, self.gram, X)
        return np.sqrt(np.maximum(q, 0.0))

    def validate(self, dim):
        failures = []
        G = np.asarray(self.gram, dtype=float)
        if G.shape != (dim, dim):
            failures.append(f"matrix G has shape {G.shape}, expected ({dim}, {dim})")
            return ValidationReport(False, tuple(failures))
        if not np.all(np.isfinite(G)):
            failures.append("matrix G has non-finite entries")
            return ValidationReport(False, tuple(failures))
        if np.max(np.abs(G - G.T)) > SYMMETRY_TOL:
            failures.append(f"matrix G is not symmetric within {SYMMETRY_TOL}")
        else:
            try:
                scipy.linalg.cholesky(G, lower=True)
                if np.min(np.linalg.eigvalsh(G)) <= 0:
                    raise np.linalg.LinAlgError
            except (np.linalg.LinAlgError, scipy.linalg.LinAlgError):
                failures.append("matrix G is not strictly positive definite")
        return ValidationReport(not failures, tuple(failures))

    def to_dict(self):
        return {'type': self.kind, 'G': [[float(v) for v in row] for row in self.gram]}

    def hilbert_form(self, dim):
        return np.asarray(self.gram, dtype=float)


@dataclass(frozen=True, eq=False)
class PolyhedralNormSpec(NormSpec):
    """norm(x) = max_k |<f_k, x>| over the rows f_k of `rows`."""
    rows: np.ndarray = field(default_factory=lambda: np.eye(1))
    kind = 'polyhedral'

    def __post_init__(self):
        object.__setattr__(self, 'rows', np.asarray(self.rows, dtype=float))

    def evaluate(self, X):
        return np.max(np.abs(X @ self.rows.T), axis=1)

    def validate(self, dim):
        failures = []
        F = np.asarray(self.rows, dtype=float)
        if F.ndim != 2 or F.shape[1] != dim:
            failures.append(f"functional rows have shape {F.shape}, expected (m, {dim})")
        elif not np.all(np.isfinite(F)):
            failures.append("functional rows have non-finite entries")
        elif F.shape[0] < dim or np.linalg.matrix_rank(F) < dim:
            failures.append("functional rows do not span R^n (the formula is only a seminorm)")
        return ValidationReport(not failures, tuple(failures))

    def to_dict(self):
        return {'type': self.kind, 'rows': [[float(v) for v in row] for row in self.rows]}

    @property
    def is_polyhedral(self):
        return True


@dataclass(frozen=True, eq=False)
class SuppressionNormSpec(NormSpec):
    """
    Derived norm |||x||| = max over nonempty A of ||P_A x||, the projections taken
    with respect to the basis whose vectors are the columns of `vectors`.
    """
    base: NormSpec = None
    vectors: np.ndarray = None
    kind = 'suppression'

    def __post_init__(self):
        n = self.vectors.shape[0]
        if n > MAX_SUPPRESSION_DIM:
            raise DimensionGuardError(n, MAX_SUPPRESSION_DIM, "the suppression norm")
        object.__setattr__(self, '_duals', np.linalg.inv(self.vectors))
        masks = np.zeros((2 ** n - 1, n))
        for row, subset in enumerate(nonempty_subsets(n)):
            masks[row, list(subset)] = 1.0
        object.__setattr__(self, '_masks', masks)

    @property
    def masks(self) -> np.ndarray:
        """0/1 rows of every nonempty subset, in enumeration order (full set last)."""
        return self._masks

    def evaluate(self, X):
        X = np.atleast_2d(X)
        C = X @ self._duals.T
        k = X.shape[0]
        best = np.zeros(k)
        block = max(1, _SUBSET_BLOCK // max(k, 1))
        for start in range(0, self._masks.shape[0], block):
            M = self._masks[start:start + block]
            Y = (C[None, :, :] * M[:, None, :]) @ self.vectors.T
            vals = self.base.evaluate(Y.reshape(-1, X.shape[1])).reshape(M.shape[0], k)
            best = np.maximum(best, vals.max(axis=0))
        return best

    def validate(self, dim):
        failures = list(self.base.validate(dim).failures)
        if self.vectors.shape != (dim, dim):
            failures.append(f"basis vectors have shape {self.vectors.shape}, expected ({dim}, {dim})")
        return ValidationReport(not failures, tuple(failures))

    def to_dict(self):
        return {'type': self.kind, 'base': self.base.to_dict(),
                'vectors': [[float(v) for v in col] for col in self.vectors.T]}


def _weighted_ball_vertices(p, weights):
    n = len(weights)
    if p == 1:
        eye = np.diag(1.0 / np.asarray(weights, dtype=float))
        return np.vstack([eye, -eye])
    if math.isinf(p):
        signs = np.array(list(itertools.product([1.0, -1.0], repeat=n)))
        return signs / np.asarray(weights, dtype=float)
    return None


def validate_norm_spec(spec: NormSpec, dim: int) -> ValidationReport:
    """
    Checks the type invariants of a norm specification.

    Parameters
    ----------
    spec : NormSpec
        The specification to check.
    dim : int
        The ambient dimension n.

    Returns
    -------
    ValidationReport
        Accepted iff every check passes; otherwise each failed check is listed.
    """
    if not isinstance(dim, (int, np.integer)) or dim < 1:
        return ValidationReport(False, (f"dimension {dim} must be a positive integer",))
    return spec.validate(int(dim))


def _matrix(value, field_name):
    try:
        arr = np.array(value, dtype=float)
    except (TypeError, ValueError) as e:
        raise InstanceSchemaError(field_name, f"expected a numeric matrix ({e})") from e
    if arr.ndim != 2:
        raise InstanceSchemaError(field_name, "expected a list of equal-length numeric lists")
    return arr


def norm_spec_from_dict(data: dict, prefix: str = 'norm') -> NormSpec:
    """
    Builds a NormSpec from its JSON form. Structural problems raise
    InstanceSchemaError naming the offending field; invariants are checked later
    by `validate_norm_spec`.
    """
    if not isinstance(data, dict):
        raise InstanceSchemaError(prefix, "expected an object")
    kind = data.get('type')
    try:
        if kind == 'lp':
            return LpNormSpec(p=_parse_exponent(_require(data, 'p', prefix)))
        if kind == 'weighted_lp':
            weights = np.array(_require(data, 'weights', prefix), dtype=float)
            if weights.ndim != 1:
                raise InstanceSchemaError(f"{prefix}.weights", "expected a list of numbers")
            return WeightedLpNormSpec(p=_parse_exponent(_require(data, 'p', prefix)),
                                      weights=weights)
        if kind == 'quadratic':
            return QuadraticNormSpec(gram=_matrix(_require(data, 'G', prefix), f"{prefix}.G"))
        if kind == 'polyhedral':
            return PolyhedralNormSpec(rows=_matrix(_require(data, 'rows', prefix), f"{prefix}.rows"))
        if kind == 'suppression':
            base = norm_spec_from_dict(_require(data, 'base', prefix), f"{prefix}.base")
            vectors = _matrix(_require(data, 'vectors', prefix), f"{prefix}.vectors").T
            if vectors.shape[0] != vectors.shape[1]:
                raise InstanceSchemaError(f"{prefix}.vectors", "expected a square matrix")
            return SuppressionNormSpec(base=base, vectors=vectors)
    except (TypeError, ValueError) as e:
        raise InstanceSchemaError(prefix, f"malformed parameters ({e})") from e
    except np.linalg.LinAlgError as e:
        raise InstanceSchemaError(f"{prefix}.vectors", "basis vectors are singular") from e
    raise InstanceSchemaError(f"{prefix}.type",
                              f"unknown norm type {kind!r}; expected lp, weighted_lp, quadratic, polyhedral or suppression")


def _require(data, key, prefix):
    if key not in data:
        raise InstanceSchemaError(f"{prefix}.{key}", "missing required field")
    return data[key]
