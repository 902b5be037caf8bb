#pragma once

#include "spiral/geometry.hpp"

namespace spiral {

/// Oscillator confined by an impenetrable wall at radius r0.
struct HardWallConfig {
  double r0 = 1.0;
  DislocationParams params;
  int l = 0;
  double k = 0.0;

  /// x0 = m w (r0^2 + beta^2), the wall position in the Kummer variable.
  double x0() const;
  /// rho0 = sqrt(r0^2 + beta^2).
  double effective_radius() const;
  void validate(bool require_omega) const;
};

/// Large-lambda closed form:
///   E = (n pi + |l| pi/2 + 3 pi/4)^2 / (2 m (r0^2 + beta^2)) - m w^2 beta^2 / 2 + k^2 / (2m).
/// Valid at omega = 0.
double approx_energy(const HardWallConfig& cfg, int n);

/// f(x0) = e^{-x0/2} x0^{|l|/2} 1F1(|l|/2 + 1/2 - lambda(E), |l| + 1; x0). Requires omega > 0.
double boundary_value(const HardWallConfig& cfg, double energy);

/// Sign changes of 1F1(a(E), |l|+1; x) for x in (0, x0), i.e. radial nodes inside the wall,
/// counted over the whole continued range including x < m w beta^2.
int count_interior_nodes(const HardWallConfig& cfg, double energy);

struct RootControls {
  int max_bisections = 200;
  int max_expansions = 20;
  double rel_tol = 1e-12;  ///< |dE| <= rel_tol * max(1, |E|)
};

/// Energy of the (n+1)-th zero in lambda of 1F1(|l|/2 + 1/2 - lambda, |l|+1; x0), so that the
/// state has n interior nodes. Brackets are seeded from approx_energy() and checked by node
/// counting. Requires omega > 0.
double exact_energy(const HardWallConfig& cfg, int n, const RootControls& controls = {});

}  // namespace spiral
