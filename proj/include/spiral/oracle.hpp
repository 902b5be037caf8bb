#pragma once

#include <optional>
#include <vector>

#include "spiral/geometry.hpp"

namespace spiral {

/// Controls for the shooting eigensolver on the radial equation for f(r).
struct OracleConfig {
  double r_min = 1e-6;
  std::optional<double> r_max;  ///< unset: turning point * 1.5 + 5 / sqrt(m w)
  double h = 1e-3;
  double e_tol = 1e-10;
  int max_bisections = 200;
  std::optional<double> wall_radius;  ///< set: Dirichlet condition f(wall_radius) = 0
};

struct ShootResult {
  double terminal_value = 0.0;  ///< f at r_max (or the wall), in the same scale as max_abs
  int nodes = 0;                ///< sign changes along the whole path, terminal point included
  double max_abs = 0.0;         ///< largest |f| seen
  /// Sign-change positions in rho = sqrt(r^2 + beta^2), linearly interpolated; nodes with
  /// rho < |beta| lie in the continued region and have no real r.
  std::vector<double> node_rho;
};

/// Default outer radius for a given trial energy: 1.5 r_t + 5 / sqrt(m w), with r_t the
/// classical turning point of the shifted oscillator.
double default_r_max(const DislocationParams& params, double k, double energy);

/// Integrates the radial equation for f(r) with classical RK4 at fixed step.
///
/// The solution is the one regular at x = m w (r^2 + beta^2) = 0. For beta != 0 that point
/// lies at r^2 = -beta^2, so the equation is first integrated in rho = sqrt(r^2 + beta^2)
/// from rho = r_min (f ~ rho^|l|) up to rho = sqrt(r_min^2 + beta^2), then handed to the
/// r-form at r = r_min. For beta == 0 the r-form starts directly with f ~ r^|l|.
/// The state is rescaled whenever |f| exceeds 1e100.
ShootResult shoot(const DislocationParams& params, int l, double k, double energy,
                  const OracleConfig& cfg = {});

/// Energy of the level with n nodes, by node-count bisection on the constant 2 m E - k^2.
/// Throws RootFindingError when no bracket is found.
double find_eigenvalue(const DislocationParams& params, int l, double k, int n,
                       const OracleConfig& cfg = {});

}  // namespace spiral
