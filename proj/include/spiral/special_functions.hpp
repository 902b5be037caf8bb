#pragma once

namespace spiral {

/// Which representation of 1F1(a, b; x) an evaluation is meant for.
enum class Kummer1F1Regime {
  Series,
  TerminatingPolynomial,
  LargeArgumentAsymptotic,
  LargeLambdaCosine,
};

/// Argument triple for the Kummer function.
///
/// Build with make_hypergeom_args(), which rejects poles in b and negative x, and classifies
/// a non-positive integer `a` (within 1e-12) as TerminatingPolynomial.
struct HypergeomArgs {
  double a = 0.0;
  double b = 1.0;
  double x = 0.0;
  Kummer1F1Regime regime = Kummer1F1Regime::Series;

  /// Polynomial degree when regime is TerminatingPolynomial.
  int degree() const;
};

HypergeomArgs make_hypergeom_args(double a, double b, double x);

/// True if `z` is within 1e-12 of a non-positive integer.
bool is_nonpositive_integer(double z);

/// 1F1(a, b; x) by the term-recurrence power series.
///
/// Terms follow t_{j+1} = t_j (a + j) x / ((b + j)(j + 1)). The sum stops once
/// |t_j| / |S| < 1e-16 holds for three consecutive terms; the cap is 10000 terms
/// (ConvergenceError). A terminating `a = -n` sums exactly n + 1 terms.
double kummer_1f1(const HypergeomArgs& args);

/// Leading large-x term Gamma(b)/Gamma(a) e^x x^(a-b).
/// Throws DomainError when a is a non-positive integer: the function is then a polynomial.
double kummer_1f1_asymptotic(const HypergeomArgs& args);

/// Oscillatory factor cos(sqrt(2 b x0 - 4 a x0) - b pi/2 + pi/4) of the large-lambda form.
/// The proportionality constant is dropped; only its zeros carry meaning.
double kummer_1f1_cosine(double a, double b, double x0);

/// 1F1 by backward recurrence in a,
///   (b - a) M(a-1) + (2a - b + x) M(a) - a M(a+1) = 0,
/// seeded by series values at a0 = a + N in (0, 1]. For a > 0 this is the series.
/// `rounding_estimate`, if given, receives a rough relative rounding-error estimate.
double kummer_1f1_recurrence(const HypergeomArgs& args, double* rounding_estimate = nullptr);

/// Series or backward recurrence, whichever has the smaller estimated rounding error.
/// Use for a << 0 where the series cancels catastrophically.
double kummer_1f1_stable(const HypergeomArgs& args);

/// Gamma function via the Lanczos approximation (g = 7, 9 terms) with reflection for z < 1/2.
/// Throws DomainError at non-positive integers.
double gamma_fn(double z);

}  // namespace spiral
