"""Exact Fock-space computations for the twisted intertwining operators."""

from .checks import (
    check_grading,
    check_heisenberg_covariance,
    check_L_minus1_derivative,
    check_twisted_jacobi,
    check_two_paths,
    run_fock_suite,
)
from .operators import (
    LatticeIntertwiner,
    apply_delta,
    full_twisted_operator,
    module_operator,
    twisted_exponential_coeffs,
    twisted_vertex_operator,
    untwisted_lattice_operator,
)
from .series import DeltaCoefficients, TruncatedSeries, delta_coefficients
from .space import FockVector, heisenberg_apply, virasoro_L_minus1
