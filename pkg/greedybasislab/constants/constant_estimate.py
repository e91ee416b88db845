#!/usr/bin/env python
from dataclasses import dataclass

import numpy as np

from ..exceptions import ContractError
from ..greedy.greedy_selection import DEFAULT_TIE_TOL, is_valid_greedy_set
from ..spaces.basis import Basis
from ..spaces.normed_space import NormedSpace, as_vector
from ..utils.calc_utils import check_indices

EXACT = 'exact'
LOWER_BOUND = 'lower-bound'

# how an estimate was obtained
METHOD_EIGEN = 'eigen'
METHOD_VERTEX = 'vertex-enum'
METHOD_SEARCH = 'search'
METHOD_LATTICE = 'lattice'
METHOD_RENORM = 'renorm'
METHOD_THEOREM = 'theorem'

# which operator a witness ratio measures
PROJECTION = 'projection'
GREEDY = 'greedy'
RESIDUAL = 'residual'


@dataclass(frozen=True, eq=False)
class Witness:
    """
    A vector and index set whose ratio re-evaluates to an estimate.

    Attributes
    ----------
    x : numpy.ndarray
        Ambient vector.
    indices : tuple of int
        0-based set A (projection) or greedy set L (greedy, residual).
    ratio : float
        ||P_A x|| / ||x||, ||G_N x|| / ||x|| or ||x - G_N x|| / ||x||.
    operator : str
        One of 'projection', 'greedy', 'residual'.
    """
    x: np.ndarray
    indices: tuple
    ratio: float
    operator: str = PROJECTION

    @property
    def N(self) -> int:
        return len(self.indices)

    def to_dict(self) -> dict:
        data = {'operator': self.operator,
                'x': [float(v) for v in self.x],
                'indices': [i + 1 for i in self.indices],
                'ratio': float(self.ratio)}
        if self.operator != PROJECTION:
            data['N'] = self.N
        return data


@dataclass(frozen=True, eq=False)
class ConstantEstimate:
    """
    Value of a basis constant, exact or as a certified lower bound.

    Attributes
    ----------
    name : str
        'ksu', 'cw', 'ct' or 'cqg'.
    value : float
        The estimate, always >= 1.
    exactness : str
        'exact' or 'lower-bound'.
    witness : Witness
        Re-evaluating the witness reproduces `value`.
    method : str
        'eigen', 'vertex-enum', 'search', 'lattice', 'renorm' or 'theorem'.
    budget_used : int
        Number of norm evaluations spent.
    """
    name: str
    value: float
    exactness: str
    witness: Witness
    method: str
    budget_used: int = 0

    @property
    def is_exact(self) -> bool:
        return self.exactness == EXACT

    def to_dict(self) -> dict:
        return {'name': self.name,
                'value': float(self.value),
                'exactness': self.exactness,
                'method': self.method,
                'budget_used': int(self.budget_used),
                'witness': self.witness.to_dict()}


def baseline_witness(basis: Basis, operator: str = PROJECTION) -> Witness:
    """
    Ratio-1 witness every constant admits: A = full set (projection, greedy) or the
    empty greedy set N = 0 (residual), evaluated at e_1.
    """
    n = basis.dim
    indices = () if operator == RESIDUAL else tuple(range(n))
    return Witness(x=basis.vectors[:, 0].copy(), indices=indices, ratio=1.0, operator=operator)


def evaluate_witness(space: NormedSpace, basis: Basis, witness: Witness,
                     tie_tol: float = DEFAULT_TIE_TOL) -> float:
    """
    Re-evaluates a witness ratio from raw inputs.

    Raises
    ------
    ContractError
        If a greedy or residual witness does not carry a valid greedy set of x.
    """
    x = as_vector(witness.x, space.dim)
    indices = check_indices(witness.indices, basis.dim)
    coeffs = basis.duals @ x
    if witness.operator in (GREEDY, RESIDUAL) and not is_valid_greedy_set(coeffs, indices, tie_tol):
        raise ContractError("Witness index set is not a greedy set of its vector.")
    keep = np.zeros(basis.dim, dtype=bool)
    keep[list(indices)] = True
    if witness.operator == RESIDUAL:
        keep = ~keep
    image = basis.vectors[:, keep] @ coeffs[keep]
    return space.norm(image) / space.norm(x)
