"""Harmonic oscillator in an elastic medium with a spiral dislocation."""

from ._core import (
    ConvergenceError,
    DomainError,
    NumericError,
    RootFindingError,
    DislocationParams,
    HardWallConfig,
    OracleConfig,
    QuantumNumbers,
    RadialState,
    approx_energy,
    boundary_value,
    energy_level,
    exact_energy,
    find_eigenvalue,
    full_wavefunction,
    gamma_fn,
    hamiltonian_residual,
    kummer_1f1,
    kummer_1f1_asymptotic,
    kummer_1f1_cosine,
    lambda_of_energy,
    laplacian_coefficients,
    make_bound_state,
    metric_at,
    normalize,
    radial_R,
    radial_f,
    shoot,
    x_of_r,
)

__all__ = [name for name in dir() if not name.startswith("_")]
