#!/usr/bin/env python
"""
Stratified random-restart search with local polish.

Used for lower bounds of ||P_A|| (K_su), of ||G_N|| (C_w) and of ||I - G_N|| (C_t)
where no exact method applies. Restarts are drawn in coefficient space from four
strata and normalised to the unit sphere of the norm:

0. Gaussian coefficients,
1. Gaussian coefficients on a random support,
2. +-1 coefficients on a random support (constant magnitudes, many ties),
3. Gaussian ambient vectors.

Restarts are grouped in chunks seeded by ``SeedSequence(seed).spawn``; chunks are
independent, so they may run on a thread pool, and partial maxima are combined in
chunk order. The best restarts are then polished by a coordinate pattern search
that keeps the index set fixed and, for greedy operators, stays in the region
where that set is still a greedy set.
"""
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..exceptions import ContractError
from ..greedy.greedy_selection import distinct_greedy_projections
from ..spaces.basis import Basis
from ..spaces.normed_space import NormedSpace
from ..utils.calc_utils import improves, nonempty_subsets
from ..utils.settings_utils import AnalysisSettings
from ..utils.utils import getlogger
from .constant_estimate import (GREEDY, PROJECTION, RESIDUAL, Witness,
                                baseline_witness, evaluate_witness)

logger = getlogger()

N_STRATA = 4
MAX_TIE_SUPPORT = 6
FULL_SUBSET_DIM = 10
RANDOM_SUBSETS = 64
MAX_POLISH_ITER = 4000
POLISH_MIN_STEP = 1e-13


class RestartSearch:
    """
    Random-restart maximiser of projection, greedy and residual ratios.

    Parameters
    ----------
    space : NormedSpace
        The normed space.
    basis : Basis
        The basis defining coefficients and projections.
    settings : AnalysisSettings
        Budget, seed, chunking, thread count and tie tolerance.

    Example
    -------
    .. code-block:: python

        search = RestartSearch(space, basis, settings)
        witness, evaluations = search.run('greedy')
    """

    def __init__(self, space: NormedSpace, basis: Basis, settings: AnalysisSettings):
        self.space = space
        self.basis = basis
        self.settings = settings
        self.n = basis.dim
        self.logger = getlogger()

    # ------norm helpers-----------------------
    def _coefficient_norms(self, C):
        return self.space.norms(C @ self.basis.vectors.T)

    def _kept_ratios(self, C, keep):
        """Ratios ||sum_{keep} c_i e_i|| / ||sum c_i e_i|| for rows of C and a boolean keep mask (rows or shared)."""
        return self._coefficient_norms(C * keep) / self._coefficient_norms(C)

    # ------sampling-----------------------
    def _random_support(self, rng, size, max_support):
        sizes = rng.integers(1, max_support + 1, size=size)
        ranks = np.argsort(np.argsort(rng.random((size, self.n)), axis=1), axis=1)
        return ranks < sizes[:, None]

    def draw_coefficients(self, rng, size):
        """
        Draws `size` stratified restarts as unit-norm coefficient rows.

        Every random array is drawn for all rows, so the stream consumed depends
        only on `size`.
        """
        n = self.n
        gaussian = rng.standard_normal((size, n))
        sparse_mask = self._random_support(rng, size, n)
        signs = rng.choice([-1.0, 1.0], size=(size, n))
        tie_mask = self._random_support(rng, size, min(n, MAX_TIE_SUPPORT))
        ambient = rng.standard_normal((size, n)) @ self.basis.duals.T
        stratum = np.arange(size) % N_STRATA
        C = gaussian.copy()
        C[stratum == 1] = (gaussian * sparse_mask)[stratum == 1]
        C[stratum == 2] = (signs * tie_mask)[stratum == 2]
        C[stratum == 3] = ambient[stratum == 3]
        return C / self._coefficient_norms(C)[:, None]

    # ------batch evaluation-----------------------
    def greedy_ratios(self, C, operator):
        """
        Best ratio over every N and every valid greedy set, per row of C.

        Rows without ties at any nonzero cut are evaluated in one vectorised pass;
        rows with ties go through the all-valid enumeration.

        Returns
        -------
        tuple
            (ratios, index sets, norm evaluations)
        """
        k, n = C.shape
        tie_tol = self.settings.tie_tol
        mags = np.abs(C)
        order = np.argsort(-mags, axis=1, kind='stable')
        sorted_mags = np.take_along_axis(mags, order, axis=1)
        gaps = sorted_mags[:, :-1] - sorted_mags[:, 1:]
        tied = np.any((gaps <= tie_tol) & (sorted_mags[:, :-1] > tie_tol), axis=1)
        ranks = np.empty_like(order)
        np.put_along_axis(ranks, order, np.broadcast_to(np.arange(n), (k, n)), axis=1)

        sizes = range(1, n + 1) if operator == GREEDY else range(0, n)
        best = np.full(k, -np.inf)
        best_size = np.zeros(k, dtype=int)
        norms_x = self._coefficient_norms(C)
        evaluations = k
        for N in sizes:
            keep = ranks < N
            if operator == RESIDUAL:
                keep = ~keep
            ratios = self._coefficient_norms(C * keep) / norms_x
            evaluations += k
            better = ratios > best
            best[better] = ratios[better]
            best_size[better] = N
        index_sets = [tuple(sorted(int(i) for i in order[row, :best_size[row]])) for row in range(k)]

        for row in np.flatnonzero(tied):
            ratio, indices, used = self._tied_row(C[row], operator, sizes)
            best[row], index_sets[row] = ratio, indices
            evaluations += used
        return best, index_sets, evaluations

    def _tied_row(self, c, operator, sizes):
        selections = [s for N in sizes
                      for s in distinct_greedy_projections(c, N, self.settings.tie_tol)]
        keep = np.zeros((len(selections), self.n), dtype=bool)
        for row, selection in enumerate(selections):
            keep[row, list(selection.indices)] = True
        if operator == RESIDUAL:
            keep = ~keep
        C = np.broadcast_to(c, keep.shape)
        ratios = self._coefficient_norms(C * keep) / self._coefficient_norms(c[None, :])[0]
        j = int(np.argmax(ratios))
        return float(ratios[j]), selections[j].indices, len(selections) + 1

    def subset_masks(self, rng):
        """Proper subsets tried per restart: all of them for n <= 10, else a random family."""
        n = self.n
        if n <= FULL_SUBSET_DIM:
            subsets = nonempty_subsets(n, include_full=False)
            masks = np.zeros((len(subsets), n), dtype=bool)
            for row, subset in enumerate(subsets):
                masks[row, list(subset)] = True
            return masks
        eye = np.eye(n, dtype=bool)
        random_masks = rng.random((RANDOM_SUBSETS, n)) < 0.5
        sizes = random_masks.sum(axis=1)
        random_masks = random_masks[(sizes > 0) & (sizes < n)]
        return np.vstack([eye, ~eye, random_masks])

    def projection_ratios(self, C, masks):
        """Best ||P_A x|| / ||x|| over the given subset masks, per row of C."""
        k = C.shape[0]
        if masks.shape[0] == 0:
            return np.ones(k), [tuple(range(self.n))] * k, 0
        norms_x = self._coefficient_norms(C)
        best = np.full(k, -np.inf)
        best_mask = np.zeros(k, dtype=int)
        evaluations = k
        block = max(1, 2 ** 16 // max(k, 1))
        for start in range(0, masks.shape[0], block):
            M = masks[start:start + block]
            Y = (C[None, :, :] * M[:, None, :]).reshape(-1, self.n)
            ratios = (self._coefficient_norms(Y).reshape(M.shape[0], k) / norms_x).T
            evaluations += Y.shape[0]
            j = np.argmax(ratios, axis=1)
            vals = ratios[np.arange(k), j]
            better = vals > best
            best[better] = vals[better]
            best_mask[better] = start + j[better]
        index_sets = [tuple(int(i) for i in np.flatnonzero(masks[m])) for m in best_mask]
        return best, index_sets, evaluations

    # ------chunks-----------------------
    def _run_chunk(self, task):
        chunk_index, seed_seq, size, operator = task
        rng = np.random.default_rng(seed_seq)
        C = self.draw_coefficients(rng, size)
        evaluations = size
        if operator == PROJECTION:
            ratios, index_sets, used = self.projection_ratios(C, self.subset_masks(rng))
        else:
            ratios, index_sets, used = self.greedy_ratios(C, operator)
        evaluations += used
        top = np.argsort(-ratios, kind='stable')[:self.settings.polish_candidates]
        offset = chunk_index * self.settings.chunk_size
        candidates = [(float(ratios[r]), offset + int(r), C[r].copy(), index_sets[r]) for r in top]
        return candidates, evaluations

    # ------polish-----------------------
    def polish(self, c, indices, operator):
        """
        Coordinate pattern search on the coefficients with the index set held fixed.

        For greedy and residual ratios a move is admissible only while `indices`
        remains a greedy set of the moved coefficients.

        Returns
        -------
        tuple
            (ratio, coefficients scaled to max |c_i| = 1, norm evaluations)
        """
        n = self.n
        tie_tol = self.settings.tie_tol
        inside = np.zeros(n, dtype=bool)
        inside[list(indices)] = True
        keep = ~inside if operator == RESIDUAL else inside
        constrained = operator != PROJECTION
        c = np.asarray(c, dtype=float) / np.max(np.abs(c))
        current = float(self._kept_ratios(c[None, :], keep)[0])
        evaluations = 2
        moves = np.vstack([np.eye(n), -np.eye(n)])
        step = 0.25
        for _ in range(MAX_POLISH_ITER):
            if step < POLISH_MIN_STEP:
                break
            candidates = c + step * moves
            if constrained:
                mags = np.abs(candidates)
                threshold_in = mags[:, inside].min(axis=1) if inside.any() else np.full(len(mags), np.inf)
                threshold_out = mags[:, ~inside].max(axis=1) if (~inside).any() else np.zeros(len(mags))
                candidates = candidates[threshold_in >= threshold_out - tie_tol]
            candidates = candidates[np.any(candidates != 0, axis=1)]
            if candidates.shape[0] == 0:
                step *= 0.5
                continue
            ratios = self._kept_ratios(candidates, keep)
            evaluations += 2 * candidates.shape[0]
            j = int(np.argmax(ratios))
            if ratios[j] > current:
                current = float(ratios[j])
                c = candidates[j] / np.max(np.abs(candidates[j]))
            else:
                step *= 0.5
        return current, c, evaluations

    # ------driver-----------------------
    def run(self, operator):
        """
        Runs the restarts, polishes the best ones and returns the best witness.

        Parameters
        ----------
        operator : str
            'projection' (K_su), 'greedy' (C_w) or 'residual' (C_t).

        Returns
        -------
        tuple
            (Witness, norm evaluations). The witness ratio is re-evaluated from raw inputs.
        """
        settings = self.settings
        budget = max(0, int(settings.budget))
        chunk_size = max(1, int(settings.chunk_size))
        n_chunks = math.ceil(budget / chunk_size)
        seeds = np.random.SeedSequence(settings.seed).spawn(n_chunks)
        tasks = [(i, seeds[i], min(chunk_size, budget - i * chunk_size), operator)
                 for i in range(n_chunks)]
        if settings.threads > 1 and n_chunks > 1:
            with ThreadPoolExecutor(max_workers=settings.threads) as pool:
                results = list(pool.map(self._run_chunk, tasks))
        else:
            results = [self._run_chunk(task) for task in tasks]

        evaluations = sum(used for _, used in results)
        candidates = [cand for chunk_candidates, _ in results for cand in chunk_candidates]
        candidates.sort(key=lambda cand: (-cand[0], cand[1]))

        best = baseline_witness(self.basis, operator)
        for ratio, _, c, indices in candidates[:settings.polish_candidates]:
            polished, c, used = self.polish(c, indices, operator)
            evaluations += used
            x = self.basis.vectors @ c
            witness = Witness(x=x, indices=tuple(indices), ratio=polished, operator=operator)
            try:
                checked = evaluate_witness(self.space, self.basis, witness, settings.tie_tol)
            except ContractError:
                self.logger.debug(f"dropping polished {operator} candidate: index set no longer greedy")
                continue
            if improves(checked, best.ratio):
                best = Witness(x=x, indices=tuple(indices), ratio=checked, operator=operator)
        self.logger.debug(f"{operator} search: {budget} restarts, {evaluations} norm evaluations, best {best.ratio}")
        return best, evaluations
