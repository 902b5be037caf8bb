#include "spiral/geometry.hpp"

#include <cmath>
#include <string>

#include "spiral/errors.hpp"

namespace spiral {

namespace {

constexpr int kR = 0;
constexpr int kPhi = 1;
constexpr int kZ = 2;

void require_positive_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw DomainError("radius must be positive and finite, got " + std::to_string(r));
  }
}

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

void DislocationParams::validate(bool require_omega) const {
  if (!std::isfinite(beta)) throw DomainError("beta must be finite");
  if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("mass must be positive");
  if (!std::isfinite(omega) || omega < 0.0) throw DomainError("omega must be non-negative");
  if (require_omega && !(omega > 0.0)) throw DomainError("omega must be positive");
}

MetricAtPoint metric_at(const DislocationParams& params, double r) {
  require_positive_radius(r);
  const double b = params.beta;
  const double r2 = r * r;

  MetricAtPoint m;
  m.g[kR][kR] = 1.0;
  m.g[kR][kPhi] = m.g[kPhi][kR] = b;
  m.g[kPhi][kPhi] = b * b + r2;
  m.g[kZ][kZ] = 1.0;

  // The (r, phi) block has determinant (b^2 + r^2) - b^2 = r^2.
  m.det_g = r2;
  m.g_inv[kR][kR] = (b * b + r2) / r2;
  m.g_inv[kR][kPhi] = m.g_inv[kPhi][kR] = -b / r2;
  m.g_inv[kPhi][kPhi] = 1.0 / r2;
  m.g_inv[kZ][kZ] = 1.0;
  return m;
}

Matrix3 metric_r_derivative(const DislocationParams& /*params*/, double r) {
  require_positive_radius(r);
  Matrix3 dg{};
  dg[kPhi][kPhi] = 2.0 * r;
  return dg;
}

LaplacianCoefficients laplacian_coefficients(const DislocationParams& params, double r) {
  const MetricAtPoint m = metric_at(params, r);
  const Matrix3 dg = metric_r_derivative(params, r);

  // d_r g^-1 = -g^-1 (d_r g) g^-1 and d_r ln sqrt(g) = tr(g^-1 d_r g) / 2.
  Matrix3 dg_inv = multiply(multiply(m.g_inv, dg), m.g_inv);
  for (auto& row : dg_inv)
    for (double& v : row) v = -v;
  const Matrix3 ginv_dg = multiply(m.g_inv, dg);
  const double dlog_sqrt_g = 0.5 * (ginv_dg[0][0] + ginv_dg[1][1] + ginv_dg[2][2]);

  // Only r-derivatives of the metric are nonzero, so the first-order coefficient of d_j is
  // (1/sqrt g) d_r (sqrt g g^rj).
  LaplacianCoefficients c;
  c.d_rr = m.g_inv[kR][kR];
  c.d_rphi = 2.0 * m.g_inv[kR][kPhi];
  c.d_phiphi = m.g_inv[kPhi][kPhi];
  c.d_r = dlog_sqrt_g * m.g_inv[kR][kR] + dg_inv[kR][kR];
  c.d_phi = dlog_sqrt_g * m.g_inv[kR][kPhi] + dg_inv[kR][kPhi];
  return c;
}

}  // namespace spiral
