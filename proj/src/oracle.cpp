#include "spiral/oracle.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "spiral/errors.hpp"

namespace spiral {

namespace {

constexpr double kRescaleThreshold = 1e100;
constexpr int kMaxSweepExpansions = 60;
// Integration starts from a power series at rho <= kSeriesRadius; the r-form takes over at
// r = kJoinRadius, clear of its singular coefficients at r = 0.
constexpr double kSeriesRadius = 0.2;
constexpr double kJoinRadius = 0.25;

using State = std::array<double, 2>;  // (f, df)

// Everything the right-hand side needs; `c` is the spectral constant 2 m E - k^2.
struct RadialEquation {
  double beta_sq;
  double l_sq;
  double mw_sq;  // (m w)^2
  double c;

  // rho-form: F'' + F'/rho - l^2/rho^2 F - (m w)^2 (rho^2 - beta^2) F + c F = 0.
  State rho_form(double rho, const State& y) const {
    const double rho_sq = rho * rho;
    const double q = l_sq / rho_sq + mw_sq * (rho_sq - beta_sq) - c;
    return {y[1], -y[1] / rho + q * y[0]};
  }

  // r-form: (1 + b^2/r^2) f'' + (1/r - b^2/r^3) f' - l^2/(r^2 + b^2) f - (m w)^2 r^2 f + c f = 0.
  State r_form(double r, const State& y) const {
    const double r_sq = r * r;
    const double s = r_sq + beta_sq;
    // Multiplied through by r^2 / (r^2 + b^2).
    const double first = (r_sq - beta_sq) / (r * s);
    const double q = r_sq * (l_sq / s + mw_sq * r_sq - c) / s;
    return {y[1], -first * y[1] + q * y[0]};
  }
};

// Series rho^L sum_k a_k rho^k of the solution regular at rho = 0, from
//   a_k k (2L + k) = (m w)^2 a_{k-4} - (c + (m w b)^2) a_{k-2}.
State regular_series(const RadialEquation& eq, int abs_l, double rho) {
  const double big_c = eq.c + eq.mw_sq * eq.beta_sq;
  double a_prev2 = 0.0;  // a_{k-4}
  double a_prev = 1.0;   // a_{k-2}
  double value = 1.0;
  double slope = abs_l;  // sum a_k (L + k) rho^k
  const double rho_sq = rho * rho;
  double power = 1.0;
  for (int k = 2; k <= 400; k += 2) {
    const double a_k = (eq.mw_sq * a_prev2 - big_c * a_prev) / (k * (2.0 * abs_l + k));
    power *= rho_sq;
    const double term = a_k * power;
    value += term;
    slope += (abs_l + k) * term;
    a_prev2 = a_prev;
    a_prev = a_k;
    if (std::abs(term) < 1e-18 * std::abs(value) && k > 8) break;
  }
  const double lead = std::pow(rho, abs_l);
  return {lead * value, lead * slope / rho};
}

template <class Rhs>
State rk4_step(const Rhs& rhs, double t, const State& y, double h) {
  const State k1 = rhs(t, y);
  const State k2 = rhs(t + 0.5 * h, {y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
  const State k3 = rhs(t + 0.5 * h, {y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
  const State k4 = rhs(t + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
  return {y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
          y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

class Tracker {
 public:
  explicit Tracker(double beta_sq) : beta_sq_(beta_sq) {}

  // `rho` is the continued radial coordinate of the point, `in_r` whether t is r rather than rho.
  void observe(State& y, double t, bool in_r) {
    const double rho = in_r ? std::sqrt(t * t + beta_sq_) : t;
    const double a = std::abs(y[0]);
    if (a > kRescaleThreshold || std::abs(y[1]) > kRescaleThreshold) {
      const double scale = 1.0 / std::max(a, std::abs(y[1]));
      y[0] *= scale;
      y[1] *= scale;
      max_abs_ *= scale;
    }
    if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
      throw NumericError("shooting integration overflowed despite rescaling");
    }
    max_abs_ = std::max(max_abs_, std::abs(y[0]));
    const int s = (y[0] > 0.0) ? 1 : (y[0] < 0.0 ? -1 : 0);
    if (s != 0) {
      if (sign_ != 0 && s != sign_) {
        ++nodes_;
        const double w = last_f_ / (last_f_ - y[0]);
        node_rho_.push_back(last_rho_ + w * (rho - last_rho_));
      }
      sign_ = s;
    }
    last_f_ = y[0];
    last_rho_ = rho;
  }
  std::vector<double> take_nodes() { return std::move(node_rho_); }
  int nodes() const { return nodes_; }
  double max_abs() const { return max_abs_; }

 private:
  double beta_sq_;
  int sign_ = 0;
  int nodes_ = 0;
  double max_abs_ = 0.0;
  double last_f_ = 0.0;
  double last_rho_ = 0.0;
  std::vector<double> node_rho_;
};

template <class Rhs>
State integrate(const Rhs& rhs, double from, double to, double h, State y, Tracker& tracker,
                bool in_r) {
  const double span = to - from;
  if (span <= 0.0) return y;
  const long steps = std::max(1L, static_cast<long>(std::ceil(span / h - 1e-9)));
  const double step = span / static_cast<double>(steps);
  for (long i = 0; i < steps; ++i) {
    y = rk4_step(rhs, from + i * step, y, step);
    tracker.observe(y, from + (i + 1) * step, in_r);
  }
  return y;
}

double outer_radius(const DislocationParams& params, const OracleConfig& cfg, double k,
                    double energy) {
  if (cfg.wall_radius) return *cfg.wall_radius;
  if (cfg.r_max) return *cfg.r_max;
  return default_r_max(params, k, energy);
}

void check_config(const DislocationParams& params, const OracleConfig& cfg) {
  params.validate(false);
  if (!(params.omega > 0.0) && !cfg.wall_radius) {
    throw DomainError("oracle with omega = 0 needs a wall radius");
  }
  if (!(cfg.r_min > 0.0)) throw DomainError("oracle r_min must be positive");
  if (cfg.wall_radius && !(*cfg.wall_radius > cfg.r_min)) {
    throw DomainError("oracle wall radius must exceed r_min");
  }
  if (!(cfg.h > 0.0)) throw DomainError("oracle step h must be positive");
}

ShootResult shoot_constant(const DislocationParams& params, int l, double c, double r_end,
                           const OracleConfig& cfg) {
  if (!(r_end > cfg.r_min) || !(cfg.h < (r_end - cfg.r_min) / 100.0)) {
    throw DomainError("oracle needs 0 < r_min < r_max and h < (r_max - r_min) / 100");
  }
  const double m = params.mass;
  const double w = params.omega;
  const RadialEquation eq{params.beta * params.beta, static_cast<double>(l) * l,
                          m * m * w * w, c};
  const int abs_l = std::abs(l);
  Tracker tracker(eq.beta_sq);
  const double effective = c + eq.mw_sq * eq.beta_sq;
  const double rho_start = std::max(cfg.r_min, std::min(kSeriesRadius, 0.5 / std::sqrt(std::abs(effective) + 1.0)));
  State y = regular_series(eq, abs_l, rho_start);
  tracker.observe(y, rho_start, false);

  if (eq.beta_sq == 0.0) {
    // rho and r coincide.
    y = integrate([&](double t, const State& s) { return eq.r_form(t, s); }, rho_start, r_end,
                  cfg.h, y, tracker, true);
  } else {
    const double r_join = std::min(kJoinRadius, 0.5 * r_end);
    const double rho_join = std::sqrt(r_join * r_join + eq.beta_sq);
    y = integrate([&](double t, const State& s) { return eq.rho_form(t, s); }, rho_start, rho_join,
                  cfg.h, y, tracker, false);
    // f(r) = F(sqrt(r^2 + b^2)) gives f'(r) = F'(rho) r / rho.
    y[1] *= r_join / rho_join;
    y = integrate([&](double t, const State& s) { return eq.r_form(t, s); }, r_join, r_end, cfg.h,
                  y, tracker, true);
  }
  return {y[0], tracker.nodes(), tracker.max_abs(), tracker.take_nodes()};
}

double spectral_constant(const DislocationParams& p, double k, double energy) {
  return 2.0 * p.mass * energy - k * k;
}

}  // namespace

double default_r_max(const DislocationParams& params, double k, double energy) {
  const double m = params.mass;
  const double w = params.omega;
  // Turning point of (m w)^2 r^2 = 2 m E - k^2 + (m w beta)^2.
  const double effective = spectral_constant(params, k, energy) + m * m * w * w * params.beta * params.beta;
  const double r_turn = std::sqrt(std::max(effective, 0.0)) / (m * w);
  return 1.5 * r_turn + 5.0 / std::sqrt(m * w);
}

ShootResult shoot(const DislocationParams& params, int l, double k, double energy,
                  const OracleConfig& cfg) {
  check_config(params, cfg);
  const double r_end = outer_radius(params, cfg, k, energy);
  return shoot_constant(params, l, spectral_constant(params, k, energy), r_end, cfg);
}

double find_eigenvalue(const DislocationParams& params, int l, double k, int n,
                       const OracleConfig& cfg) {
  check_config(params, cfg);
  if (n < 0) throw DomainError("node count n must be non-negative");
  const double m = params.mass;
  const double w = params.omega;
  const double mw2b2 = m * w * w * params.beta * params.beta;

  double e_lo = -mw2b2 + k * k / (2.0 * m);
  double e_hi = w * (2.0 * n + std::abs(l) + 3.0) + k * k / (2.0 * m) + mw2b2;
  if (cfg.wall_radius && e_hi <= e_lo) e_hi = e_lo + 1.0;

  const double r_end = outer_radius(params, cfg, k, e_hi);
  auto nodes_at = [&](double c) { return shoot_constant(params, l, c, r_end, cfg).nodes; };

  double c_lo = spectral_constant(params, k, e_lo);
  double c_hi = spectral_constant(params, k, e_hi);
  int expansions = 0;
  while (nodes_at(c_lo) > n) {
    if (++expansions > kMaxSweepExpansions) break;
    c_lo -= std::max(1.0, std::abs(c_lo));
  }
  while (nodes_at(c_hi) <= n) {
    if (++expansions > kMaxSweepExpansions) break;
    c_hi += std::max(1.0, std::abs(c_hi));
  }
  if (nodes_at(c_lo) > n || nodes_at(c_hi) <= n) {
    std::ostringstream msg;
    msg << "oracle: no bracket for n=" << n << " l=" << l << " beta=" << params.beta
        << " in energy sweep [" << (c_lo + k * k) / (2 * m) << ", " << (c_hi + k * k) / (2 * m)
        << "], r_end=" << r_end;
    throw RootFindingError(msg.str());
  }

  // Node count jumps from n to n+1 exactly where the terminal value changes sign.
  const double c_tol = 2.0 * m * cfg.e_tol;
  for (int it = 0; it < cfg.max_bisections; ++it) {
    if (c_hi - c_lo <= c_tol) return (0.5 * (c_lo + c_hi) + k * k) / (2.0 * m);
    const double mid = 0.5 * (c_lo + c_hi);
    if (mid <= c_lo || mid >= c_hi) return (mid + k * k) / (2.0 * m);
    if (nodes_at(mid) > n) {
      c_hi = mid;
    } else {
      c_lo = mid;
    }
  }
  throw NumericError("oracle bisection did not reach e_tol within " +
                     std::to_string(cfg.max_bisections) + " steps");
}

}  // namespace spiral
