#pragma once

#include <complex>

#include "spiral/geometry.hpp"

namespace spiral {

/// Radial node count n >= 0, angular momentum l (any integer), axial wavenumber k.
struct QuantumNumbers {
  int n = 0;
  int l = 0;
  double k = 0.0;
};

/// A bound state of the free (unconfined) oscillator. Immutable once built.
///
/// `lambda` is the dimensionless spectral parameter (2m E - k^2 + m^2 w^2 beta^2) / (4 m w);
/// bound states satisfy |l|/2 + 1/2 - lambda = -n. Until normalize() is applied the
/// norm constant is 1 and radial_f is the bare e^{-x/2} x^{|l|/2} 1F1(-n, |l|+1; x).
struct RadialState {
  QuantumNumbers qn;
  DislocationParams params;
  double energy = 0.0;
  double lambda = 0.0;
  double norm_constant = 1.0;
};

/// E = w (2n + |l| + 1) - m w^2 beta^2 / 2 + k^2 / (2m). Requires omega > 0.
double energy_level(const DislocationParams& params, const QuantumNumbers& qn);

double lambda_of_energy(const DislocationParams& params, double k, double energy);

/// x = m w (r^2 + beta^2).
double x_of_r(const DislocationParams& params, double r);

/// Builds the bound state (n, l, k) with energy_level() and unit norm constant.
RadialState make_bound_state(const DislocationParams& params, const QuantumNumbers& qn);

/// norm_constant * e^{-x/2} x^{|l|/2} 1F1(-n, |l| + 1; x) at x = x_of_r(r).
double radial_f(const RadialState& state, double r);

/// Phase angle l * arctan(r / beta) carried by R(r); zero when beta == 0.
double radial_phase(const RadialState& state, double r);

/// R(r) = exp(i l arctan(r / beta)) f(r). The phase factor is 1 at beta = 0.
std::complex<double> radial_R(const RadialState& state, double r);

/// psi(r, phi, z) = exp(i (l phi + k z)) R(r).
std::complex<double> full_wavefunction(const RadialState& state, double r, double phi, double z);

struct QuadratureControls {
  double rel_tol = 1e-12;
  int max_depth = 20;
};

/// Radius where x reaches 4 lambda + 60; the density beyond it is below e^{-60}.
double cutoff_radius(const RadialState& state);

/// 2 pi \int_0^{r_cut} |R|^2 r dr for the state as given.
double norm_integral(const RadialState& state, const QuadratureControls& controls = {});

/// Returns a copy of `state` with norm_constant set so the norm integral is 1.
/// Throws NumericError if the quadrature does not reach rel 1e-10.
RadialState normalize(const RadialState& state, const QuadratureControls& controls = {});

struct ResidualGrid {
  double h = 1e-3;
  double r_min = 0.5;  ///< inner end of the interior window
  double r_max = 0.0;  ///< <= 0 selects cutoff_radius(state)
};

/// Relative residual ||(H - E) psi|| / ||psi|| of the full Hamiltonian on the analytic state.
///
/// r-derivatives are second-order central differences of the complex R(r); phi and z
/// derivatives act exactly on exp(i (l phi + k z)). Uses state.energy as E.
double hamiltonian_residual(const RadialState& state, const ResidualGrid& grid = {});

}  // namespace spiral
