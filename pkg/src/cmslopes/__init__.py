"""Newton polygons of good reductions of CM abelian varieties over cyclic CM fields."""

from .cmtypes import (
    CMType,
    CMTypeError,
    interval_cm_type,
    is_primitive,
    reduction_slopes_cyclotomic,
    shimura_taniyama_slopes,
    validate_cm_type,
)
from .groups import (
    FiniteAbelianGroup,
    coset_partition,
    complex_conjugation,
    cyclic,
    element_order,
    frobenius_subgroup,
    subgroup_of_order,
    units_mod,
)
from .honda import CurveParams, count_points, honda_predict, honda_verify, l_polynomial, newton_polygon
from .slopes import (
    SlopeSequence,
    enumerate_half_valued,
    enumerate_symmetric_integral,
    is_integral,
    is_ordinary,
    is_supersingular,
    is_symmetric,
    make_slope_sequence,
)
from .theorems import (
    achievable_set,
    check_beta_missing,
    construct_field_params,
    missing_sequences,
    theorem23_beta,
    upper_bound_Mg,
)

__version__ = "0.1.0"
