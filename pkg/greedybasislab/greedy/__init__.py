from .greedy_selection import (GreedySelection, greedy_sets, is_valid_greedy_set,
                               count_greedy_sets, distinct_greedy_projections,
                               ONE_VALID, ALL_VALID, DEFAULT_TIE_TOL)
from .greedy_operators import projection, projection_matrix, greedy_sum, residual
