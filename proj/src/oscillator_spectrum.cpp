#include "spiral/oscillator_spectrum.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "spiral/errors.hpp"
#include "spiral/special_functions.hpp"

namespace spiral {

namespace {

constexpr double kCutoffMargin = 60.0;

double spectral_shift(const DislocationParams& p) {
  return -0.5 * p.mass * p.omega * p.omega * p.beta * p.beta;
}

}  // namespace

double energy_level(const DislocationParams& params, const QuantumNumbers& qn) {
  params.validate();
  if (qn.n < 0) throw DomainError("radial quantum number n must be non-negative");
  const double ladder = params.omega * (2.0 * qn.n + std::abs(qn.l) + 1.0);
  return ladder + spectral_shift(params) + qn.k * qn.k / (2.0 * params.mass);
}

double lambda_of_energy(const DislocationParams& params, double k, double energy) {
  params.validate();
  const double m = params.mass;
  const double w = params.omega;
  return (2.0 * m * energy - k * k + m * m * w * w * params.beta * params.beta) / (4.0 * m * w);
}

double x_of_r(const DislocationParams& params, double r) {
  if (!(r >= 0.0)) throw DomainError("x_of_r needs r >= 0");
  return params.mass * params.omega * (r * r + params.beta * params.beta);
}

RadialState make_bound_state(const DislocationParams& params, const QuantumNumbers& qn) {
  RadialState s;
  s.qn = qn;
  s.params = params;
  s.energy = energy_level(params, qn);
  s.lambda = lambda_of_energy(params, qn.k, s.energy);
  return s;
}

double radial_f(const RadialState& state, double r) {
  const int abs_l = std::abs(state.qn.l);
  const double x = x_of_r(state.params, r);
  const HypergeomArgs args =
      make_hypergeom_args(-static_cast<double>(state.qn.n), abs_l + 1.0, x);
  if (x == 0.0 && abs_l > 0) return 0.0;
  const double prefactor = (abs_l == 0) ? std::exp(-0.5 * x)
                                        : std::exp(-0.5 * x + 0.5 * abs_l * std::log(x));
  return state.norm_constant * prefactor * kummer_1f1(args);
}

double radial_phase(const RadialState& state, double r) {
  if (state.params.beta == 0.0) return 0.0;
  return state.qn.l * std::atan(r / state.params.beta);
}

std::complex<double> radial_R(const RadialState& state, double r) {
  return std::polar(1.0, radial_phase(state, r)) * radial_f(state, r);
}

std::complex<double> full_wavefunction(const RadialState& state, double r, double phi, double z) {
  return std::polar(1.0, state.qn.l * phi + state.qn.k * z) * radial_R(state, r);
}

double cutoff_radius(const RadialState& state) {
  const DislocationParams& p = state.params;
  const double x_end = 4.0 * std::max(state.lambda, 0.0) + kCutoffMargin;
  const double r2 = x_end / (p.mass * p.omega) - p.beta * p.beta;
  return std::sqrt(std::max(r2, 0.0));
}

double norm_integral(const RadialState& state, const QuadratureControls& controls) {
  const double r_cut = cutoff_radius(state);
  auto density = [&](double r) {
    const double f = radial_f(state, r);
    return f * f * r;
  };
  double error = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      density, 0.0, r_cut, controls.max_depth, controls.rel_tol, &error);
  if (!(error <= 1e-10 * std::abs(integral))) {
    throw NumericError("norm quadrature did not converge: estimate " + std::to_string(integral) +
                       ", error " + std::to_string(error));
  }
  return 2.0 * std::numbers::pi * integral;
}

RadialState normalize(const RadialState& state, const QuadratureControls& controls) {
  RadialState bare = state;
  bare.norm_constant = 1.0;
  RadialState out = state;
  out.norm_constant = 1.0 / std::sqrt(norm_integral(bare, controls));
  return out;
}

double hamiltonian_residual(const RadialState& state, const ResidualGrid& grid) {
  const DislocationParams& p = state.params;
  const double h = grid.h;
  const double r_lo = grid.r_min;
  const double r_hi = grid.r_max > 0.0 ? grid.r_max : cutoff_radius(state);
  if (!(h > 0.0) || !(r_lo >= h) || !(r_hi > r_lo + 2.0 * h)) {
    throw DomainError("residual grid needs 0 < h <= r_min < r_max");
  }

  const std::complex<double> i_unit(0.0, 1.0);
  const double l = state.qn.l;
  const double k = state.qn.k;
  const double inv_2m = 1.0 / (2.0 * p.mass);
  const int points = static_cast<int>(std::floor((r_hi - r_lo) / h + 1e-9)) + 1;

  double residual_sq = 0.0;
  double psi_sq = 0.0;
  for (int i = 0; i < points; ++i) {
    const double r = r_lo + i * h;
    const std::complex<double> R_minus = radial_R(state, r - h);
    const std::complex<double> R_0 = radial_R(state, r);
    const std::complex<double> R_plus = radial_R(state, r + h);
    const std::complex<double> dR = (R_plus - R_minus) / (2.0 * h);
    const std::complex<double> d2R = (R_plus - 2.0 * R_0 + R_minus) / (h * h);

    // d_phi -> i l, d_z -> i k on exp(i (l phi + k z)).
    const LaplacianCoefficients c = laplacian_coefficients(p, r);
    const std::complex<double> laplacian = c.d_rr * d2R + c.d_r * dR + c.d_rphi * (i_unit * l) * dR +
                                           c.d_phiphi * (-l * l) * R_0 +
                                           c.d_phi * (i_unit * l) * R_0 - k * k * R_0;
    const double potential = 0.5 * p.mass * p.omega * p.omega * r * r;
    const std::complex<double> h_psi = -inv_2m * laplacian + potential * R_0;
    residual_sq += std::norm(h_psi - state.energy * R_0);
    psi_sq += std::norm(R_0);
  }
  return std::sqrt(residual_sq / psi_sq);
}

}  // namespace spiral
