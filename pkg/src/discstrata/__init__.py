"""Exact stratification of the discriminant hypersurface of monic polynomials."""

from .ideal import (
    GREVLEX,
    LEX,
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    conjecture_instance,
    derivative_ideal,
    ideals_equal,
    membership_ladder,
    normal_form,
    smallest_power_in_ideal,
    subdiscriminant_ideal,
)
from .linalg import PolyMatrix, bareiss_det, cofactor_det, determinant, rank_at_point
from .multipoly import MultiPoly, evaluate, order_of, partial_derivative, taylor_shift
from .parser import NonMonicWarning, ParseError, parse_polynomial
from .resultants import (
    SquarefreeDecomposition,
    discriminant,
    gcd,
    resultant,
    squarefree_decomposition,
    subdiscriminant,
    subdiscriminant_at,
    subdiscriminant_matrix,
    subresultant_gcd,
    sylvester_f_fprime,
)
from .strata import (
    CoefficientPoint,
    Partition,
    StratumReport,
    classify_by_gcd,
    classify_by_order,
    classify_by_subdiscriminants,
    coincident_locus_membership,
    hypersurface_singularity_test,
    multiplicity_pattern,
    partitions,
    sample_coincident_locus,
    stratum_report,
    t_valuation_constant_shift,
    t_valuation_monomial_shift,
)
from .surface import SurfaceGrid, write_csv
from .unipoly import UniPoly, render
from .verify import SuiteReport, TrialResult, run_suite, run_trial

__version__ = "0.1.0"
