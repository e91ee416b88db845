import itertools

import numpy as np

from ..exceptions import ContractError

# relative margin a candidate must clear to replace an earlier incumbent
IMPROVEMENT_RTOL = 1e-12


def improves(candidate: float, incumbent: float, rtol: float = IMPROVEMENT_RTOL) -> bool:
    """
    Returns True when `candidate` beats `incumbent` by more than `rtol` relative.

    Used to combine partial maxima so that equal values keep the earlier
    (lower-index) candidate regardless of evaluation order.
    """
    if incumbent is None:
        return True
    return candidate > incumbent + rtol * max(1.0, abs(incumbent))


def nonempty_subsets(n: int, include_full: bool = True):
    """
    Lists the nonempty subsets of {0, ..., n-1} by size, then lexicographically.

    Parameters
    ----------
    n : int
        Number of indices.
    include_full : bool, optional
        If False, the full set is omitted (proper subsets only).

    Returns
    -------
    list of tuple
    """
    top = n if include_full else n - 1
    return [combo for size in range(1, top + 1)
            for combo in itertools.combinations(range(n), size)]


def format_index_set(indices) -> str:
    """1-based set label, e.g. (0, 2) -> '{1,3}'."""
    return '{' + ','.join(str(i + 1) for i in sorted(indices)) + '}'


def check_indices(indices, n: int) -> tuple:
    """Validates an index set against {0, ..., n-1} and returns it as a sorted tuple."""
    result = tuple(sorted({int(i) for i in indices}))
    if result and (result[0] < 0 or result[-1] >= n):
        raise ContractError(f"Index set {list(indices)} is not contained in 0..{n - 1}.")
    return result


def ternary_search(func, lower: float, upper: float, tol: float = 1e-13, max_iter: int = 300):
    """
    Minimises a unimodal (e.g. convex) function on [lower, upper].

    Parameters
    ----------
    func : callable
        Function of one real variable.
    lower, upper : float
        Search interval.
    tol : float, optional
        Interval width at which the search stops.
    max_iter : int, optional
        Iteration cap.

    Returns
    -------
    tuple of float
        (argmin, minimum value) among the final bracket midpoint and the two endpoints.
    """
    a, b = float(lower), float(upper)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        m1 = a + (b - a) / 3
        m2 = b - (b - a) / 3
        if func(m1) <= func(m2):
            b = m2
        else:
            a = m1
    candidates = [(a + b) / 2, float(lower), float(upper)]
    values = [func(t) for t in candidates]
    best = int(np.argmin(values))
    return candidates[best], values[best]
