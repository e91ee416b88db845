#!/usr/bin/env python
"""
Non-orthogonal pairs of a basis in a Hilbertian space violate C_w = 1.

With g = <e_i, e_j> != 0 and epsilon = -sign(g),
||e_i + epsilon t e_j||^2 = G_ii - 2 t |g| + t^2 G_jj is minimised at t = |g| / G_jj,
and {i} stays a greedy set of e_i + epsilon t e_j while t <= 1, so
||G_1 z|| / ||z|| = sqrt(G_ii / (G_ii - 2 t |g| + t^2 G_jj)) > 1.
"""
import numpy as np

from ..exceptions import ContractError
from ..spaces.basis import Basis, gram_matrix
from ..spaces.normed_space import NormedSpace
from ..utils.calc_utils import improves
from ..utils.utils import getlogger
from .certificates import GreedyViolationCertificate, HilbertWitness

logger = getlogger()

ORTHOGONALITY_TOL = 1e-12
# shrink factor applied when the optimal t would break the greedy order
T_SHRINK = 1 - 1e-9


def hilbert_orthogonality_witness(G, i: int, j: int) -> HilbertWitness | None:
    """
    Greedy violation built from the inner product of e_i and e_j.

    Parameters
    ----------
    G : array_like
        Gram matrix <e_i, e_j> of the basis (SPD).
    i, j : int
        Distinct 0-based indices.

    Returns
    -------
    HilbertWitness or None
        None when |G_ij| <= 1e-12. The certificate vector z is given in the
        coordinates of the basis (z = e_i + epsilon t e_j).

    Raises
    ------
    ContractError
        If i == j or an index is out of range.
    """
    G = np.asarray(G, dtype=float)
    n = G.shape[0]
    if i == j:
        raise ContractError("hilbert_orthogonality_witness needs two distinct indices.")
    if not (0 <= i < n and 0 <= j < n):
        raise ContractError(f"Pair ({i}, {j}) is not contained in 0..{n - 1}.")
    g = G[i, j]
    if abs(g) <= ORTHOGONALITY_TOL:
        return None
    epsilon = -1 if g > 0 else 1
    t = abs(g) / G[j, j]
    if t >= 1:
        t = T_SHRINK
    z = np.zeros(n)
    z[i] = 1.0
    z[j] = epsilon * t
    ratio = float(np.sqrt(G[i, i] / (G[i, i] - 2 * t * abs(g) + t * t * G[j, j])))
    certificate = GreedyViolationCertificate(z=z, N=1, indices=(i,), ratio=ratio, t_star=t)
    return HilbertWitness(pair=(i, j), epsilon=epsilon, t=t, certificate=certificate)


def in_ambient_coordinates(witness: HilbertWitness, basis: Basis) -> HilbertWitness:
    """Maps the certificate vector of a witness from basis coordinates to R^n."""
    cert = witness.certificate
    ambient = GreedyViolationCertificate(z=basis.vectors @ cert.z, N=cert.N, indices=cert.indices,
                                         ratio=cert.ratio, t_star=cert.t_star)
    return HilbertWitness(pair=witness.pair, epsilon=witness.epsilon, t=witness.t, certificate=ambient)


def orthogonality_witnesses(space: NormedSpace, basis: Basis) -> list:
    """
    Witnesses for every ordered pair (i, j), i != j, of a basis in a Hilbertian space.

    Certificates are in ambient coordinates. An empty list means the basis is orthogonal.

    Raises
    ------
    InstanceError
        If the norm is not Hilbertian.
    """
    G = gram_matrix(space, basis)
    witnesses = []
    for i in range(basis.dim):
        for j in range(basis.dim):
            if i == j:
                continue
            witness = hilbert_orthogonality_witness(G, i, j)
            if witness is not None:
                witnesses.append(in_ambient_coordinates(witness, basis))
    logger.debug(f"{len(witnesses)} non-orthogonal ordered pairs")
    return witnesses


def strongest_witness(witnesses: list) -> HilbertWitness | None:
    """Largest certificate ratio, the earliest pair on ties."""
    best = None
    for witness in witnesses:
        if best is None or improves(witness.certificate.ratio, best.certificate.ratio):
            best = witness
    return best
