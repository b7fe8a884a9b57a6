"""Exact shortest vectors of prime-ideal lattices in power-of-two
cyclotomic rings and their quadratic/quartic subrings."""

from .errors import ConsistencyError, DomainError, RadiusExhausted
from .idealsvp import (
    BoundsResult,
    Lambda1Result,
    LiftCheckReport,
    SvsgReport,
    bounds,
    cornacchia,
    lambda1_sq_zsqrt2,
    lambda1_squared,
    lift_shortest,
    prime_ideals_up_to_norm,
    shortest_generator,
    shortest_vector,
    svsg_verify,
    theta_roots,
    zeta16_lift_check,
)
from .lattice import (
    IntegerLattice,
    SvpCertificate,
    contains,
    enumerate_all,
    gauss_reduce,
    lift_ideal_lattice,
    lll_reduce,
    prime_ideal_from_factor,
    prime_ideal_lattice,
    principal_ideal_lattice,
    svp_enumerate,
)
from .ntheory import (
    ResidueClass,
    classify_prime,
    is_prime,
    root_of_minus_one,
    sieve_primes,
    sqrt_mod,
)
from .pell import PellSolution, pell_oracle, solve_pell
from .rings import (
    CYCLO_EIGHTH,
    GAUSSIAN_INT,
    QUAD_SQRT2,
    QUARTIC_THETA,
    Ring,
    RingElement,
    apply_automorphism,
    canonical_sq_length,
    cyclotomic,
    element,
    field_norm,
    lift_element,
    mul,
    unit,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsResult",
    "CYCLO_EIGHTH",
    "ConsistencyError",
    "DomainError",
    "GAUSSIAN_INT",
    "IntegerLattice",
    "Lambda1Result",
    "LiftCheckReport",
    "PellSolution",
    "QUAD_SQRT2",
    "QUARTIC_THETA",
    "RadiusExhausted",
    "ResidueClass",
    "Ring",
    "RingElement",
    "SvpCertificate",
    "SvsgReport",
    "apply_automorphism",
    "bounds",
    "canonical_sq_length",
    "classify_prime",
    "contains",
    "cornacchia",
    "cyclotomic",
    "element",
    "enumerate_all",
    "field_norm",
    "gauss_reduce",
    "is_prime",
    "lambda1_sq_zsqrt2",
    "lambda1_squared",
    "lift_element",
    "lift_ideal_lattice",
    "lift_shortest",
    "lll_reduce",
    "mul",
    "pell_oracle",
    "prime_ideal_from_factor",
    "prime_ideal_lattice",
    "prime_ideals_up_to_norm",
    "principal_ideal_lattice",
    "root_of_minus_one",
    "shortest_generator",
    "shortest_vector",
    "sieve_primes",
    "solve_pell",
    "sqrt_mod",
    "svp_enumerate",
    "svsg_verify",
    "theta_roots",
    "unit",
    "zeta16_lift_check",
]
