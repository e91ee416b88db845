#!/usr/bin/env python
"""
Greedy sets of a coefficient vector.

A set L of N indices is a greedy set of the coefficients c when
min{|c_j| : j in L} >= max{|c_j| : j not in L}. Ties at the cut admit several
greedy sets; magnitudes within `tie_tol` of each other are treated as tied.
"""
import itertools
import math
from dataclasses import dataclass

import numpy as np

from ..exceptions import ContractError

DEFAULT_TIE_TOL = 1e-12
ONE_VALID = 'one-valid'
ALL_VALID = 'all-valid'


@dataclass(frozen=True)
class GreedySelection:
    """
    A valid greedy set with its thresholds.

    Attributes
    ----------
    indices : tuple of int
        The sorted 0-based indices of the set.
    threshold_in : float
        min over the set of |c_j| (inf for the empty set).
    threshold_out : float
        max outside the set of |c_j| (0 for the full set).
    tied : bool
        True when the cut falls inside a tie group, i.e. other valid sets of the same size exist.
    """
    indices: tuple
    threshold_in: float
    threshold_out: float
    tied: bool

    @property
    def size(self) -> int:
        return len(self.indices)

    def to_dict(self) -> dict:
        return {'lambda': [i + 1 for i in self.indices],
                'threshold_in': None if math.isinf(self.threshold_in) else self.threshold_in,
                'threshold_out': self.threshold_out,
                'tied': self.tied}


def _thresholds(mags: np.ndarray, indices) -> tuple:
    inside = np.zeros(mags.shape[0], dtype=bool)
    inside[list(indices)] = True
    threshold_in = float(mags[inside].min()) if inside.any() else math.inf
    threshold_out = float(mags[~inside].max()) if (~inside).any() else 0.0
    return threshold_in, threshold_out


def is_valid_greedy_set(coeffs, indices, tie_tol: float = DEFAULT_TIE_TOL) -> bool:
    """Checks the defining inequality min_in |c_j| >= max_out |c_j| up to `tie_tol`."""
    mags = np.abs(np.asarray(coeffs, dtype=float))
    threshold_in, threshold_out = _thresholds(mags, indices)
    return threshold_in >= threshold_out - tie_tol


def greedy_sets(coeffs, N: int, mode: str = ONE_VALID, tie_tol: float = DEFAULT_TIE_TOL) -> list:
    """
    Greedy sets of size N for a coefficient vector.

    Parameters
    ----------
    coeffs : array_like
        The coefficients (e*_1(x), ..., e*_n(x)).
    N : int
        Size of the greedy set, 0 <= N <= n.
    mode : str, optional
        'one-valid' returns the lexicographically first valid set;
        'all-valid' enumerates every set satisfying the defining inequality.
    tie_tol : float, optional
        Magnitudes within this absolute distance of the cut value are tied.

    Returns
    -------
    list of GreedySelection
        Sets in lexicographic order of their indices.

    Raises
    ------
    ContractError
        If N is out of range or the mode is unknown.
    """
    mags = np.abs(np.asarray(coeffs, dtype=float))
    n = mags.shape[0]
    if not 0 <= N <= n:
        raise ContractError(f"Greedy set size N={N} is outside 0..{n}.")
    if mode not in (ONE_VALID, ALL_VALID):
        raise ContractError(f"Unknown greedy set mode {mode!r}.")
    if N == 0 or N == n:
        indices = tuple(range(N))
        return [GreedySelection(indices, *_thresholds(mags, indices), tied=False)]

    order = np.argsort(-mags, kind='stable')
    above, tie_group, free = _cut(mags, order, N, tie_tol)
    valid = _valid_choices(mags, above, tie_group, free, tie_tol)
    if mode == ONE_VALID:
        # the strict top-N set is always among the candidates
        first = next(valid)
        tied = next(valid, None) is not None
        return [GreedySelection(first, *_thresholds(mags, first), tied=tied)]
    chosen = list(valid)
    tied = len(chosen) > 1
    selections = [GreedySelection(indices, *_thresholds(mags, indices), tied=tied)
                  for indices in chosen]
    selections.sort(key=lambda s: s.indices)
    return selections


def _cut(mags: np.ndarray, order: np.ndarray, N: int, tie_tol: float) -> tuple:
    cut = mags[order[N - 1]]
    above = [int(i) for i in range(mags.shape[0]) if mags[i] > cut + tie_tol]
    tie_group = [int(i) for i in range(mags.shape[0]) if abs(mags[i] - cut) <= tie_tol]
    return above, tie_group, N - len(above)


def _valid_choices(mags: np.ndarray, above: list, tie_group: list, free: int, tie_tol: float):
    # tolerance is not transitive: members of one tie group may be 2*tie_tol apart
    for choice in itertools.combinations(tie_group, free):
        indices = tuple(sorted(above + list(choice)))
        if is_valid_greedy_set(mags, indices, tie_tol):
            yield indices


def count_greedy_sets(coeffs, N: int, tie_tol: float = DEFAULT_TIE_TOL) -> int:
    """Number of valid greedy sets of size N."""
    mags = np.abs(np.asarray(coeffs, dtype=float))
    n = mags.shape[0]
    if N in (0, n):
        return 1
    order = np.argsort(-mags, kind='stable')
    above, tie_group, free = _cut(mags, order, N, tie_tol)
    spread = mags[tie_group].max() - mags[tie_group].min()
    if spread <= tie_tol:
        return math.comb(len(tie_group), free)
    return sum(1 for _ in _valid_choices(mags, above, tie_group, free, tie_tol))


def distinct_greedy_projections(coeffs, N: int, tie_tol: float = DEFAULT_TIE_TOL) -> list:
    """
    Valid greedy sets of size N, collapsing sets that differ only in indices whose
    coefficient is zero (they produce the same greedy sum).
    """
    mags = np.abs(np.asarray(coeffs, dtype=float))
    result = []
    seen = set()
    for selection in greedy_sets(coeffs, N, mode=ALL_VALID, tie_tol=tie_tol):
        key = tuple(i for i in selection.indices if mags[i] > tie_tol)
        if key not in seen:
            seen.add(key)
            result.append(selection)
    return result
