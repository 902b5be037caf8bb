#pragma once

#include <array>

namespace spiral {

/// Defect parameter and oscillator constants, in units hbar = c = 1.
struct DislocationParams {
  double beta = 0.0;   ///< spiral dislocation parameter (length), any sign
  double mass = 1.0;   ///< particle mass, > 0
  double omega = 1.0;  ///< oscillator angular frequency, >= 0

  /// Throws DomainError unless mass > 0, omega >= 0 (> 0 when `require_omega`) and beta finite.
  void validate(bool require_omega = true) const;
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Components of the metric in coordinates (r, phi, z).
struct MetricAtPoint {
  Matrix3 g{};
  Matrix3 g_inv{};
  double det_g = 0.0;
};

/// Coefficients of the Laplace-Beltrami operator acting on psi(r, phi, z):
///   lap psi = d_rr psi_rr + d_r psi_r + d_rphi psi_rphi + d_phiphi psi_phiphi + d_phi psi_phi + psi_zz
/// No -1/2m prefactor is applied.
struct LaplacianCoefficients {
  double d_rr = 0.0;
  double d_r = 0.0;
  double d_rphi = 0.0;
  double d_phiphi = 0.0;
  double d_phi = 0.0;
};

/// Metric of the spiral dislocation line element at radius r > 0.
MetricAtPoint metric_at(const DislocationParams& params, double r);

/// Componentwise d g / d r.
Matrix3 metric_r_derivative(const DislocationParams& params, double r);

/// Assembles (1/sqrt g) d_i (sqrt g g^ij d_j) for the spiral metric at r > 0.
LaplacianCoefficients laplacian_coefficients(const DislocationParams& params, double r);

}  // namespace spiral
