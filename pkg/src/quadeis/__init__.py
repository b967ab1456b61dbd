"""Exact-arithmetic toolkit for the weight-2 Eisenstein eigenbasis at
levels D*C (D square-free, C | D): cusp data, q-expansions by independent
routes, constant terms at every cusp, and cuspidal-subgroup orders with
the Eisenstein-ideal index prediction.
"""

from .arith import (
    Factorization,
    bernoulli2,
    divisors,
    euler_phi,
    factor,
    index_mu,
    is_squarefree,
    jacobi,
    nu,
    psi_plus,
)
from .characters import QuadraticCharacter, bernoulli_b1, d_chi, trivial_character
from .cusp_constants import (
    constant_vector,
    delta_content,
    delta_vector,
    lattice_R,
    rho_closed,
    rho_recursive,
)
from .cusps import (
    CuspPoint,
    CuspRep,
    canonicalize,
    cusp_count,
    enumerate_cusps,
    equivalent,
    levels_up_to,
    reduce_level,
    to_point,
    width_gamma0,
    width_gamma1,
)
from .eisenstein import (
    EisTriple,
    QSeries,
    apply_minus,
    apply_plus,
    count_H,
    enumerate_quadratic_triples,
    hecke,
    predicted_eigenvalue,
    qexp_closed,
    qexp_echi,
    qexp_operator,
    sigma_ML,
    sigma_chi,
    sigma_coprime,
    validate_triple,
)
from .hecke_phi import (
    CycloElement,
    PhiSeries,
    cyclotomic_polynomial,
    gauss_cyclo,
    phi_qexp,
    verify_echi_definition,
    verify_p_plus_e1,
    weighted_echi_lhs,
)
from .lfunc import (
    DirichletCoeffs,
    lambda_algebraic,
    lhs_series,
    rhs_series,
    verify_factorization,
)
from .orders import (
    FactoredOrder,
    GaussCoefficient,
    a_factor,
    index_prediction,
    lattice_quotient_order,
    n_chi_gauss,
    order_away_6f,
    order_full,
    periods_report,
    strip_primes,
)

__version__ = "0.1.0"
