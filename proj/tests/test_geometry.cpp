#include "doctest.h"

#include <cmath>
#include <functional>
#include <random>

#include "spiral/errors.hpp"
#include "spiral/geometry.hpp"

using spiral::DislocationParams;
using spiral::Matrix3;

namespace {

// Gauss-Jordan with partial pivoting; knows nothing about the metric's structure.
Matrix3 invert_numeric(Matrix3 a) {
  Matrix3 inv{};
  for (int i = 0; i < 3; ++i) inv[i][i] = 1.0;
  for (int c = 0; c < 3; ++c) {
    int p = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    std::swap(a[c], a[p]);
    std::swap(inv[c], inv[p]);
    const double d = a[c][c];
    for (int j = 0; j < 3; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      const double f = a[r][c];
      for (int j = 0; j < 3; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

double det3(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

using Field = std::function<double(double, double)>;  // u(r, phi), z-independent

// (1/sqrt g) d_i (sqrt g g^ij d_j u) by nested central differences on the line element alone.
double laplace_beltrami_fd(const DislocationParams& p, const Field& u, double r, double phi) {
  const double h = 1e-4;
  auto sqrt_g = [&](double rr) { return std::sqrt(det3(spiral::metric_at(p, rr).g)); };
  auto ginv = [&](double rr) { return invert_numeric(spiral::metric_at(p, rr).g); };
  auto du_dr = [&](double rr, double ph) { return (u(rr + h, ph) - u(rr - h, ph)) / (2 * h); };
  auto du_dphi = [&](double rr, double ph) { return (u(rr, ph + h) - u(rr, ph - h)) / (2 * h); };
  // flux components J^i = sqrt g g^ij d_j u, for i = r, phi
  auto flux = [&](int i, double rr, double ph) {
    const Matrix3 gi = ginv(rr);
    return sqrt_g(rr) * (gi[i][0] * du_dr(rr, ph) + gi[i][1] * du_dphi(rr, ph));
  };
  const double div = (flux(0, r + h, phi) - flux(0, r - h, phi)) / (2 * h) +
                     (flux(1, r, phi + h) - flux(1, r, phi - h)) / (2 * h);
  return div / sqrt_g(r);
}

double apply_coefficients(const spiral::LaplacianCoefficients& c, double u_rr, double u_r,
                          double u_rphi, double u_phiphi, double u_phi) {
  return c.d_rr * u_rr + c.d_r * u_r + c.d_rphi * u_rphi + c.d_phiphi * u_phiphi + c.d_phi * u_phi;
}

}  // namespace

TEST_CASE("metric components") {
  SUBCASE("flat") {
    const auto m = spiral::metric_at({0.0, 1.0, 1.0}, 2.0);
    CHECK(m.g[1][1] == 4.0);
    CHECK(m.det_g == 4.0);
    const Matrix3 flat{{{1, 0, 0}, {0, 4, 0}, {0, 0, 1}}};
    CHECK(m.g == flat);
  }
  SUBCASE("beta = 0.5, r = 1") {
    const auto m = spiral::metric_at({0.5, 1.0, 1.0}, 1.0);
    CHECK(m.g[0][1] == 0.5);
    CHECK(m.g[1][0] == 0.5);
    CHECK(m.g[1][1] == 1.25);
    CHECK(m.det_g == doctest::Approx(1.0).epsilon(1e-15));
    const Matrix3 num = invert_numeric(m.g);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(std::abs(num[i][j] - m.g_inv[i][j]) <= 1e-12);
  }
  SUBCASE("r <= 0 rejected") {
    CHECK_THROWS_AS(spiral::metric_at({0.5, 1.0, 1.0}, 0.0), spiral::DomainError);
    CHECK_THROWS_AS(spiral::metric_at({0.5, 1.0, 1.0}, -1.0), spiral::DomainError);
    CHECK_THROWS_AS(spiral::laplacian_coefficients({0.5, 1.0, 1.0}, 0.0), spiral::DomainError);
  }
}

TEST_CASE("metric times inverse is identity and det g = r^2") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> beta(-3.0, 3.0), r(1e-2, 20.0);
  for (int t = 0; t < 200; ++t) {
    const DislocationParams p{beta(rng), 1.0, 1.0};
    const double rr = r(rng);
    const auto m = spiral::metric_at(p, rr);
    CHECK(m.det_g == doctest::Approx(rr * rr).epsilon(1e-15));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int q = 0; q < 3; ++q) s += m.g[i][q] * m.g_inv[q][j];
        CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) <= 1e-12 * (1.0 + p.beta * p.beta / (rr * rr)));
      }
  }
}

TEST_CASE("derivative of metric") {
  const DislocationParams p{0.7, 1.0, 1.0};
  const double r = 1.3, h = 1e-5;
  const Matrix3 d = spiral::metric_r_derivative(p, r);
  const auto gp = spiral::metric_at(p, r + h).g, gm = spiral::metric_at(p, r - h).g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(d[i][j] == doctest::Approx((gp[i][j] - gm[i][j]) / (2 * h)).epsilon(1e-8));
}

TEST_CASE("flat Laplacian") {
  for (double r : {0.1, 1.0, 7.5}) {
    const auto c = spiral::laplacian_coefficients({0.0, 1.0, 1.0}, r);
    CHECK(c.d_rr == 1.0);
    CHECK(c.d_rphi == 0.0);
    CHECK(c.d_phi == 0.0);
    CHECK(c.d_r == doctest::Approx(1.0 / r));
    CHECK(c.d_phiphi == doctest::Approx(1.0 / (r * r)));
  }
  CHECK(spiral::laplacian_coefficients({0.5, 1.0, 1.0}, 1.0).d_rr == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("coefficients agree with a finite-difference Laplace-Beltrami on test fields") {
  const DislocationParams p{0.7, 1.0, 1.0};
  const double r = 1.3, phi = 0.4;
  const auto c = spiral::laplacian_coefficients(p, r);

  struct Probe {
    Field u;
    double u_rr, u_r, u_rphi, u_phiphi, u_phi;
  };
  const Probe probes[] = {
      {[](double rr, double) { return rr * rr; }, 2.0, 2 * r, 0.0, 0.0, 0.0},
      {[](double rr, double ph) { return rr * std::cos(ph); }, 0.0, std::cos(phi), -std::sin(phi),
       -r * std::cos(phi), -r * std::sin(phi)},
      {[](double, double ph) { return ph; }, 0.0, 0.0, 0.0, 0.0, 1.0},
      {[](double rr, double ph) { return rr * rr * rr * ph * ph; }, 6 * r * phi * phi, 3 * r * r * phi * phi,
       6 * r * r * phi, 2 * r * r * r, 2 * r * r * r * phi},
  };
  for (const auto& pr : probes) {
    const double fd = laplace_beltrami_fd(p, pr.u, r, phi);
    const double assembled = apply_coefficients(c, pr.u_rr, pr.u_r, pr.u_rphi, pr.u_phiphi, pr.u_phi);
    CHECK(assembled == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("coefficients match the closed forms for random (beta, r)") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> beta(-2.0, 2.0), radius(0.05, 10.0);
  for (int t = 0; t < 100; ++t) {
    const double b = beta(rng), r = radius(rng);
    const auto c = spiral::laplacian_coefficients({b, 1.0, 1.0}, r);
    const double m = 1.0, pre = -1.0 / (2 * m);
    // Hamiltonian coefficients, i.e. after the -1/2m prefactor.
    CHECK(pre * c.d_rr == doctest::Approx(pre * (1 + b * b / (r * r))).epsilon(1e-12));
    CHECK(pre * c.d_r == doctest::Approx(pre * (1 / r - b * b / (r * r * r))).epsilon(1e-12));
    CHECK(pre * c.d_rphi == doctest::Approx(pre * (-2 * b / (r * r))).epsilon(1e-12));
    CHECK(pre * c.d_phiphi == doctest::Approx(pre / (r * r)).epsilon(1e-12));
    CHECK(pre * c.d_phi == doctest::Approx(pre * b / (r * r * r)).epsilon(1e-12));
  }
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(DislocationParams{0.3, 1.0, 1.0}.validate());
  CHECK_THROWS_AS(DislocationParams({0.3, 0.0, 1.0}).validate(), spiral::DomainError);
  CHECK_THROWS_AS(DislocationParams({0.3, 1.0, 0.0}).validate(true), spiral::DomainError);
  CHECK_NOTHROW(DislocationParams{0.3, 1.0, 0.0}.validate(false));
  CHECK_THROWS_AS(DislocationParams({NAN, 1.0, 1.0}).validate(), spiral::DomainError);
}
