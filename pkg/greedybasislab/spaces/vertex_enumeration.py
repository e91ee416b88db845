#!/usr/bin/env python
"""
Vertex enumeration of the unit ball of a polyhedral norm.

The unit ball {x : |<f_k, x>| <= 1 for all k} is a centrally symmetric polytope.
Every vertex is the solution of n linearly independent active constraints
<f_k, x> = +-1, so the vertices are found by solving each nonsingular n x n
subsystem for all sign patterns and keeping the feasible, distinct solutions.
"""
import itertools

import numpy as np

from ..utils.utils import getlogger

logger = getlogger()

FEASIBILITY_TOL = 1e-9
SINGULAR_CONDITION = 1e12


def polyhedral_vertices(rows: np.ndarray, feasibility_tol: float = FEASIBILITY_TOL) -> np.ndarray:
    """
    Enumerates the vertices of {x : max_k |<f_k, x>| <= 1}.

    Parameters
    ----------
    rows : numpy.ndarray
        (m, n) array of functionals f_k spanning R^n.
    feasibility_tol : float, optional
        Slack allowed when testing max_k |<f_k, v>| <= 1.

    Returns
    -------
    numpy.ndarray
        (V, n) array of distinct vertices in discovery order. Subsystems are visited
        in lexicographic order of row combinations and, within one, sign patterns
        in the order of ``itertools.product([1, -1], repeat=n)``.
    """
    F = np.asarray(rows, dtype=float)
    m, n = F.shape
    signs = np.array(list(itertools.product([1.0, -1.0], repeat=n)))
    found = []
    seen = set()
    solved = 0
    for combo in itertools.combinations(range(m), n):
        F_S = F[list(combo)]
        if np.linalg.cond(F_S) > SINGULAR_CONDITION:
            continue
        solved += 1
        candidates = np.linalg.solve(F_S, signs.T).T
        feasible = np.max(np.abs(candidates @ F.T), axis=1) <= 1 + feasibility_tol
        for v in candidates[feasible]:
            key = tuple(np.round(v, 9) + 0.0)
            if key not in seen:
                seen.add(key)
                found.append(v)
    logger.debug(f"vertex enumeration: {solved} subsystems solved, {len(found)} vertices")
    return np.array(found)
