from .norm_specs import (NormSpec, LpNormSpec, WeightedLpNormSpec, QuadraticNormSpec,
                         PolyhedralNormSpec, SuppressionNormSpec, ValidationReport,
                         validate_norm_spec, norm_spec_from_dict)
from .normed_space import NormedSpace, norm, as_vector
from .basis import Basis, make_basis, canonical_basis, dual_coefficients, gram_matrix
