#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

#include "diatomic/dispersion.hpp"
#include "diatomic/errors.hpp"

using namespace diatomic;

namespace {
const double kPi = std::numbers::pi;
Dispersion nacl() { return Dispersion(make_params(5.88e-26, 3.81e-26, 15, 2.82e-10, 1e-3)); }

// Long-double central difference of a scalar function.
template <class F>
long double fd(F f, long double p, int order) {
  const long double e = order == 1 ? 1e-5L : order == 2 ? 1e-4L : 2e-3L;
  switch (order) {
    case 1: return (f(p + e) - f(p - e)) / (2 * e);
    case 2: return (f(p + e) - 2 * f(p) + f(p - e)) / (e * e);
    default: return (f(p + 2 * e) - 2 * f(p + e) + 2 * f(p - e) - f(p - 2 * e)) / (2 * e * e * e);
  }
}
}  // namespace

TEST_CASE("NaCl parameters from physical constants") {
  const LatticeParams lp = make_params(5.88e-26, 3.81e-26, 15, 2.82e-10, 1e-3);
  CHECK(lp.gamma1 == doctest::Approx(0.82398).epsilon(1e-4));
  CHECK(lp.gamma2 == doctest::Approx(1.27165).epsilon(1e-4));
  CHECK(lp.h == doctest::Approx(2.82e-7));
  // harmonic-mean rule: 1/g1 + 1/g2 = 2
  CHECK(1.0 / lp.gamma1 + 1.0 / lp.gamma2 == doctest::Approx(2.0).epsilon(1e-14));
  const Dispersion d(lp);
  CHECK(d.c() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(d.q() == doctest::Approx(0.14).epsilon(0.02));
  CHECK(d.p_star() == doctest::Approx(1.196).epsilon(0.005 / 1.196));
  CHECK(d.c_star() == doctest::Approx(0.474).epsilon(0.005 / 0.474));
  CHECK(d.q_star() == doctest::Approx(1.318).epsilon(0.01 / 1.318));
}

TEST_CASE("ordering and positivity preconditions") {
  CHECK_THROWS_AS(Dispersion(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Dispersion(1.3, 0.8), std::invalid_argument);
  CHECK_THROWS_AS(Dispersion(-1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(make_params(3.81e-26, 5.88e-26, 15, 2.82e-10, 1e-3), std::invalid_argument);
}

TEST_CASE("branches are eigenvalues of the dynamical matrix") {
  const Dispersion d = nacl();
  const double g1 = d.gamma1(), g2 = d.gamma2();
  for (double p = 0.0; p <= kPi / 2 + 1e-12; p += kPi / 40) {
    Eigen::Matrix2d M;
    M << 2 * g1, -2 * g1 * std::cos(p), -2 * g2 * std::cos(p), 2 * g2;
    Eigen::EigenSolver<Eigen::Matrix2d> es(M);
    double e0 = es.eigenvalues()[0].real(), e1 = es.eigenvalues()[1].real();
    if (e0 > e1) std::swap(e0, e1);
    CHECK(d.omega1(p) * d.omega1(p) == doctest::Approx(e0).epsilon(1e-12).scale(1.0));
    CHECK(d.omega2(p) * d.omega2(p) == doctest::Approx(e1).epsilon(1e-12));
    // the acoustic projector maps onto the omega1 eigenspace
    const Mat2 A = d.A(p);
    Eigen::Matrix2d Am;
    Am << A.a11, A.a12, A.a21, A.a22;
    const double w1sq = d.omega1(p) * d.omega1(p);
    CHECK((M * Am - w1sq * Am).norm() < 1e-12);
  }
}

TEST_CASE("band edges and gap") {
  const Dispersion d = nacl();
  CHECK(d.omega1(0.0) == 0.0);
  CHECK(d.omega2(0.0) == doctest::Approx(d.omega_max()).epsilon(1e-15));
  CHECK(d.omega1(kPi / 2) == doctest::Approx(std::sqrt(2 * d.gamma1())).epsilon(1e-12));
  CHECK(d.omega2(kPi / 2) == doctest::Approx(std::sqrt(2 * d.gamma2())).epsilon(1e-12));
  for (double p = 0.01; p < kPi / 2; p += 0.01) CHECK(d.omega1(p) < d.omega2(p));
}

TEST_CASE("derivatives match long-double finite differences") {
  const Dispersion d = nacl();
  auto w2 = [&](long double p) { return static_cast<long double>(d.omega2(static_cast<double>(p))); };
  auto w1 = [&](long double p) { return static_cast<long double>(d.omega1(static_cast<double>(p))); };
  for (double p : {0.2, 0.7, 1.1, 1.4}) {
    for (int k = 1; k <= 3; ++k) {
      const double tol = k == 3 ? 1e-4 : 1e-6;
      CHECK(d.derivative(2, p, k) == doctest::Approx(static_cast<double>(fd(w2, p, k))).epsilon(tol).scale(1.0));
      CHECK(d.derivative(1, p, k) == doctest::Approx(static_cast<double>(fd(w1, p, k))).epsilon(tol).scale(1.0));
    }
  }
  // near p = 0: omega1 ~ c p - q p^3 / 3
  CHECK(d.derivative(1, 1e-6, 1) == doctest::Approx(d.c()).epsilon(1e-10));
  CHECK(d.omega1_smooth_jet(0.0).d3 == doctest::Approx(-2.0 * d.q()).epsilon(1e-10));
  CHECK(d.omega1_smooth(-0.3) == doctest::Approx(-d.omega1(0.3)));
}

TEST_CASE("acoustic branch kink throws") {
  const Dispersion d = nacl();
  CHECK_THROWS_AS(d.derivative(1, 0.0, 1), std::domain_error);
  CHECK_THROWS_AS(d.derivative(3, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(d.derivative(2, 0.5, 4), std::invalid_argument);
  CHECK(d.derivative(1, -0.4, 1) == doctest::Approx(-d.derivative(1, 0.4, 1)));
}

TEST_CASE("critical point of the optical branch") {
  const Dispersion d = nacl();
  CHECK(std::fabs(d.omega2_jet(d.p_star()).d2) < 1e-10);
  CHECK(d.omega2_jet(d.p_star() - 0.1).d2 < 0);
  CHECK(d.omega2_jet(d.p_star() + 0.1).d2 > 0);
  CHECK(d.c_star() == doctest::Approx(-d.derivative(2, d.p_star(), 1)));
  for (double p = 0.01; p < kPi / 2; p += 0.01) CHECK(-d.derivative(2, p, 1) <= d.c_star() + 1e-12);
}

TEST_CASE("modal matrices are complementary projectors") {
  const Dispersion d = nacl();
  for (double p = 0.0; p < kPi / 2; p += 0.13) {
    const auto [A, B] = d.modal_matrices(p);
    CHECK(A.a11 + B.a11 == doctest::Approx(1.0));
    CHECK(A.a12 + B.a12 == doctest::Approx(0.0));
    CHECK(A.a21 + B.a21 == doctest::Approx(0.0));
    CHECK(A.a22 + B.a22 == doctest::Approx(1.0));
    // A^2 = A
    CHECK(A.a11 * A.a11 + A.a12 * A.a21 == doctest::Approx(A.a11).scale(1.0));
    CHECK(A.a11 * A.a12 + A.a12 * A.a22 == doctest::Approx(A.a12).scale(1.0));
    CHECK(A.a21 * A.a11 + A.a22 * A.a21 == doctest::Approx(A.a21).scale(1.0));
    CHECK(A.a21 * A.a12 + A.a22 * A.a22 == doctest::Approx(A.a22).scale(1.0));
    // F^2 = J I
    const double g = d.G(2 * p), cp = std::cos(p);
    const double f11 = g, f12 = 2 * d.gamma1() * cp, f21 = 2 * d.gamma2() * cp, f22 = -g;
    CHECK(f11 * f11 + f12 * f21 == doctest::Approx(d.J(p)));
    CHECK(f11 * f12 + f12 * f22 == doctest::Approx(0.0).scale(d.J(p)));
    CHECK(f21 * f12 + f22 * f22 == doctest::Approx(d.J(p)));
  }
  // long-wave limit: both species move together on the acoustic branch
  const Mat2 A0 = d.A(0.0);
  const auto v = A0 * std::array<double, 2>{1.0, 1.0};
  CHECK(v[0] == doctest::Approx(1.0));
  CHECK(v[1] == doctest::Approx(1.0));
}
