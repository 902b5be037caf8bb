#include "spiral/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "spiral/errors.hpp"

namespace spiral {

namespace {

constexpr double kIntegerTolerance = 1e-12;
constexpr double kSeriesStop = 1e-16;
constexpr int kSeriesCap = 10000;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct SeriesResult {
  double sum;
  double abs_sum;  // sum of |t_j|, the cancellation scale
};

SeriesResult power_series(double a, double b, double x) {
  double term = 1.0;
  double sum = 1.0;
  double abs_sum = 1.0;
  int small_run = 0;
  for (int j = 0; j < kSeriesCap; ++j) {
    term *= (a + j) * x / ((b + j) * (j + 1));
    sum += term;
    abs_sum += std::abs(term);
    if (term == 0.0) return {sum, abs_sum};
    if (std::abs(term) < kSeriesStop * std::abs(sum)) {
      if (++small_run == 3) return {sum, abs_sum};
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("1F1 series did not converge within " + std::to_string(kSeriesCap) +
                             " terms (a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                             ", x=" + std::to_string(x) + ")",
                         sum, kSeriesCap);
}

double polynomial_sum(double a, double b, double x, int degree) {
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < degree; ++j) {
    term *= (a + j) * x / ((b + j) * (j + 1));
    sum += term;
  }
  return sum;
}

// sin(pi z) with exact argument reduction.
double sin_pi(double z) {
  double r = std::fmod(z, 2.0);
  if (r < 0.0) r += 2.0;
  // r in [0, 2); fold onto [-1/2, 1/2] keeping the sign.
  double sign = 1.0;
  if (r > 1.0) {
    r -= 1.0;
    sign = -1.0;
  }
  if (r > 0.5) r = 1.0 - r;
  return sign * std::sin(std::numbers::pi * r);
}

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_positive(double z) {
  // Valid for z >= 1/2.
  const double zm1 = z - 1.0;
  double series = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    series += kLanczosCoefficients[i] / (zm1 + static_cast<double>(i));
  }
  const double t = zm1 + kLanczosG + 0.5;
  // t^(z-1/2) is split in two halves so it stays finite up to z ~ 171.
  const double half_power = std::pow(t, 0.5 * (zm1 + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power * (half_power * std::exp(-t)) * series;
}

void check_b(double b) {
  if (!std::isfinite(b) || is_nonpositive_integer(b)) {
    throw DomainError("1F1 parameter b must not be zero or a negative integer, got " +
                      std::to_string(b));
  }
}

}  // namespace

bool is_nonpositive_integer(double z) {
  if (z > kIntegerTolerance) return false;
  return std::abs(z - std::round(z)) <= kIntegerTolerance;
}

int HypergeomArgs::degree() const { return static_cast<int>(std::lround(-a)); }

HypergeomArgs make_hypergeom_args(double a, double b, double x) {
  check_b(b);
  if (!std::isfinite(a)) throw DomainError("1F1 parameter a must be finite");
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("1F1 argument x must be finite and non-negative, got " + std::to_string(x));
  }
  HypergeomArgs args{a, b, x, Kummer1F1Regime::Series};
  if (is_nonpositive_integer(a)) args.regime = Kummer1F1Regime::TerminatingPolynomial;
  return args;
}

double kummer_1f1(const HypergeomArgs& args) {
  check_b(args.b);
  if (args.x == 0.0) return 1.0;
  if (args.regime == Kummer1F1Regime::TerminatingPolynomial || is_nonpositive_integer(args.a)) {
    return polynomial_sum(std::round(args.a), args.b, args.x,
                          static_cast<int>(std::lround(-args.a)));
  }
  return power_series(args.a, args.b, args.x).sum;
}

double kummer_1f1_asymptotic(const HypergeomArgs& args) {
  check_b(args.b);
  if (is_nonpositive_integer(args.a)) {
    throw DomainError("1F1 asymptotic form undefined: a is a non-positive integer, the function "
                      "is a terminating polynomial and does not diverge");
  }
  if (!(args.x > 0.0)) throw DomainError("1F1 asymptotic form needs x > 0");
  return gamma_fn(args.b) / gamma_fn(args.a) *
         std::exp(args.x + (args.a - args.b) * std::log(args.x));
}

double kummer_1f1_cosine(double a, double b, double x0) {
  const double radicand = 2.0 * b * x0 - 4.0 * a * x0;
  if (!(radicand >= 0.0)) {
    throw DomainError("large-lambda cosine form needs 2 b x0 - 4 a x0 >= 0, got " +
                      std::to_string(radicand));
  }
  return std::cos(std::sqrt(radicand) - b * std::numbers::pi / 2.0 + std::numbers::pi / 4.0);
}

namespace {

struct Estimated {
  double value;
  double abs_error;  // rough absolute rounding error
};

Estimated recurrence_estimated(double a, double b, double x) {
  if (a > 0.0 || x == 0.0) {
    const SeriesResult s = (x == 0.0) ? SeriesResult{1.0, 1.0} : power_series(a, b, x);
    return {s.sum, kEps * s.abs_sum};
  }

  const int steps = static_cast<int>(std::ceil(-a));
  const double a0 = a + steps;  // in (0, 1], or 0 when a is an integer
  const SeriesResult upper = power_series(a0 + 1.0, b, x);
  const SeriesResult seed = power_series(a0, b, x);

  // Runs the recurrence down from M(a0+1), M(a0); also reports max |M| along the way.
  auto descend = [&](double m_up, double m_cur, double* scale) {
    double a_cur = a0;
    if (scale) *scale = std::max(std::abs(m_up), std::abs(m_cur));
    for (int i = 0; i < steps; ++i) {
      const double m_down = (a_cur * m_up - (2.0 * a_cur - b + x) * m_cur) / (b - a_cur);
      m_up = m_cur;
      m_cur = m_down;
      a_cur -= 1.0;
      if (scale) *scale = std::max(*scale, std::abs(m_cur));
    }
    return m_cur;
  };

  double scale = 0.0;
  const double value = descend(upper.sum, seed.sum, &scale);
  // Sensitivity of the result to a relative change of each seed; the recurrence is linear,
  // so one perturbed run per seed measures it.
  const double delta = 1e-6;
  const double amp = std::max(std::abs(descend(upper.sum * (1 + delta), seed.sum, nullptr) - value),
                              std::abs(descend(upper.sum, seed.sum * (1 + delta), nullptr) - value)) /
                     delta;
  const double seed_cond = std::max({seed.abs_sum / std::abs(seed.sum),
                                     upper.abs_sum / std::abs(upper.sum), 1.0});
  return {value, kEps * seed_cond * (steps + 1) * std::max(scale, amp)};
}

}  // namespace

double kummer_1f1_recurrence(const HypergeomArgs& args, double* rounding_estimate) {
  check_b(args.b);
  const Estimated r = recurrence_estimated(args.a, args.b, args.x);
  if (rounding_estimate) *rounding_estimate = r.abs_error / std::abs(r.value);
  return r.value;
}

double kummer_1f1_stable(const HypergeomArgs& args) {
  check_b(args.b);
  if (args.x == 0.0) return 1.0;
  if (args.a >= 0.0) return power_series(args.a, args.b, args.x).sum;

  // Compared in absolute terms: near a zero of 1F1 both relative estimates blow up.
  const Estimated rec = recurrence_estimated(args.a, args.b, args.x);
  try {
    const SeriesResult s = power_series(args.a, args.b, args.x);
    if (kEps * s.abs_sum <= rec.abs_error) return s.sum;
  } catch (const ConvergenceError&) {
  }
  return rec.value;
}

double gamma_fn(double z) {
  if (!std::isfinite(z)) throw DomainError("gamma_fn needs a finite argument");
  if (z <= 0.0 && z == std::round(z)) {
    throw DomainError("gamma_fn pole at non-positive integer " + std::to_string(z));
  }
  if (z < 0.5) {
    return std::numbers::pi / (sin_pi(z) * lanczos_positive(1.0 - z));
  }
  return lanczos_positive(z);
}

}  // namespace spiral
