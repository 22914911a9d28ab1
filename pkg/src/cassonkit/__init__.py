"""Casson-type invariants of 4-dimensional mapping tori from surgery data."""

from .arith import (
    SignatureTriple,
    cotangent_pair_sum,
    dedekind_sum,
    gf2_solve,
    signature_exact,
    signature_hermitian_numeric,
)
from .errors import (
    AlexanderRootError,
    CassonKitError,
    ConsistencyError,
    IndeterminateSignatureError,
    SingularSystemError,
    ValidationError,
)
from .knots import (
    RootOfUnity,
    SeifertMatrix,
    SymmetricLaurentPoly,
    alexander_polynomial,
    alexander_second_derivative_at_1,
    is_alexander_root,
    knot_from_name,
    signature_sum,
    torus_knot_seifert_matrix,
    tristram_levine_signature,
    validate_seifert,
)
from .lens import LensSpace, casson_walker_lens, rho_sum_lens, rho_sum_surgered
from .mapping_tori import (
    BranchedMappingTorusInput,
    FreeMappingTorusInput,
    InvariantReport,
    casson_one_over_q_surgery,
    check_conjecture,
    lambda_fo_branched,
    lambda_fo_free,
    lambda_sw_free,
    lambda_sw_product,
    rohlin_mod2,
)
from .seifert import (
    PlumbingGraph,
    SeifertHS,
    SeifertPresentation,
    conjugation_torus_invariants,
    mu_bar,
    plumbing_graph,
    seifert_presentation,
    wu_class,
)

__version__ = "0.1.0"
