from .constant_estimate import (ConstantEstimate, Witness, baseline_witness, evaluate_witness,
                                EXACT, LOWER_BOUND, PROJECTION, GREEDY, RESIDUAL)
from .rayleigh import rayleigh_su_quadratic
from .suppression import suppression_constant, subset_norm_table
from .quasi_greedy import cw_constant, ct_constant, cqg_constant
