"""Explicit constants for an effective Chebotarev density theorem.

The package computes every constant of the explicit error bound on the
prime-power counting function psi_C(x) of a normal extension L/Q: the
zero-counting coefficients of the Dedekind zeta function, the smoothing-
weight transform bounds, the incomplete-Bessel tail constants, the
assembled theorem constants, and the absolute-constant corollaries.  It
regenerates the published constant tables, evaluates the bounds for user
fields, and verifies psi_C(x) exactly for quadratic extensions.
"""

from .assembly import (
    BoundForm,
    BoundReport,
    ClassicalBranch,
    ClassicalConstants,
    Delta0Mode,
    FinalConstants,
    bound_eval,
    choose_delta0,
    classical_constants,
    corollary_constants,
    curly_N0,
    diff_table,
    final_constants,
    generate_table,
    standard_config,
)
from .bessel import BesselArgs, RegimeThreshold, bessel_I, bessel_K, ell6, ell7, k2_upper_bound
from .constants import EllConstants, TuningConfig, compute_ells, ell_low, y0, y0_terms
from .errors import DomainError, NumericError, PoleError, ResourceError, SearchError
from .invariants import (
    MINKOWSKI_TABLE,
    FieldParams,
    MinkowskiRow,
    lambda_0,
    lambda_L,
    minkowski_lookup,
)
from .smoothing import Endpoint, SmoothingParams, m_bound, mellin_H, weight_g, weight_h
from .verifier import (
    ClassCount,
    ConjugacyClass,
    QuadraticField,
    equidist_report,
    is_fundamental_discriminant,
    kronecker,
    psi_C_exact,
)
from .zeros import (
    ALPHA1,
    ALPHA2,
    ALPHA3,
    R1,
    R2,
    P_E_L,
    Q_kernel,
    Q_kernel_partial_u,
    ZeroFreeConstants,
    alpha0,
    alpha0_prime,
    c123,
    solve_omega0,
    solve_t0,
    window_coeffs,
)

__version__ = "0.1.0"
