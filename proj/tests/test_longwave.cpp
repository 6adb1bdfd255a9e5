#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "diatomic/dispersion.hpp"
#include "diatomic/initial_data.hpp"
#include "diatomic/longwave.hpp"

using namespace diatomic;

namespace {
const Dispersion kNaCl(0.8239795918367347, 1.2716535433070866);

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return x;
}
}  // namespace

TEST_CASE("regime classification") {
  CHECK(classify_regime(2.82e-7, 80 * 2.82e-7).regime == RegimeKind::weak_dispersion);
  CHECK(classify_regime(2.82e-7, 80 * 2.82e-7).ratio == doctest::Approx(6.926).epsilon(1e-3));
  CHECK(classify_regime(1e-4, 1e-1).regime == RegimeKind::wave_equation);
  CHECK(classify_regime(1e-2, 1e-2).regime == RegimeKind::outside_band);
  CHECK(std::string(regime_name(RegimeKind::weak_dispersion)) == "weak_dispersion");
}

TEST_CASE("closed Airy form equals the Fourier integral") {
  const double h = 0.002, mu = 0.02;
  const InitialProfile g = InitialProfile::gaussian(mu, h / mu);
  for (double t : {0.1, 0.5}) {
    const auto xs = linspace(-t - 0.08, t + 0.08, 37);
    const auto ref = uas_integral(g, kNaCl, xs, t);
    for (std::size_t i = 0; i < xs.size(); ++i)
      CHECK(uas_gaussian_airy(kNaCl, h, mu, xs[i], t) == doctest::Approx(ref[i]).epsilon(1e-9).scale(1.0));
  }
  CHECK_THROWS(uas_gaussian_airy(kNaCl, h, mu, 0.0, 0.0));
}

TEST_CASE("d'Alembert field") {
  const InitialProfile g = InitialProfile::gaussian(0.05, 0.02);
  CHECK(uas_dalembert(g, kNaCl, 0.05, 0.0) == doctest::Approx(std::exp(-0.5)));
  CHECK(uas_dalembert(g, kNaCl, 0.3, 0.3) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(uas_dalembert(g, kNaCl, 0.0, 0.3) == doctest::Approx(std::exp(-18.0)));
}

TEST_CASE("weak dispersion approaches d'Alembert as the dispersion ratio shrinks") {
  double prev = 1.0;
  for (double h : {4e-3, 2e-3, 1e-3}) {
    const double mu = 0.05;
    const InitialProfile g = InitialProfile::gaussian(mu, h / mu);
    double err = 0;
    for (double x : linspace(0.3, 0.7, 201))
      err = std::max(err, std::fabs(uas_gaussian_airy(kNaCl, h, mu, x, 0.5) - uas_dalembert(g, kNaCl, x, 0.5)));
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 0.02);
}

TEST_CASE("PDE residuals") {
  const double h = 0.005, mu = 0.05, t = 0.5;
  const InitialProfile g = InitialProfile::gaussian(mu, h / mu);
  const auto xs = linspace(0.3, 0.7, 41);
  const auto airy_field = [&](double x, double tt) { return uas_gaussian_airy(kNaCl, h, mu, x, tt); };
  const auto wave_field = [&](double x, double tt) { return uas_dalembert(g, kNaCl, x, tt); };
  const PdeResidual ra = residual_pde_check(airy_field, xs, t, kNaCl, h, mu, PdeForm::weak_dispersion);
  const PdeResidual rw = residual_pde_check(wave_field, xs, t, kNaCl, h, mu, PdeForm::wave);
  CHECK(ra.scale > 0.1);
  CHECK(ra.normalized < 1e-7);
  CHECK(rw.normalized < 1e-7);
  // the dispersive field is not a solution of the plain wave equation
  const PdeResidual mix = residual_pde_check(airy_field, xs, t, kNaCl, h, mu, PdeForm::wave);
  CHECK(mix.normalized > 1e-3);
}
