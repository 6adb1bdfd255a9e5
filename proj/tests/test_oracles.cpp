#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "diatomic/dispersion.hpp"
#include "diatomic/initial_data.hpp"
#include "diatomic/oracles.hpp"

using namespace diatomic;

namespace {
const Dispersion kNaCl(0.8239795918367347, 1.2716535433070866);

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return x;
}

// Lattice sites inside [-a, a] as a field grid, u at even and v at odd indices.
std::vector<double> sites(const LatticeState& s, double a) {
  std::vector<double> x;
  for (long n = -s.n_sites; n < s.n_sites; ++n)
    if (std::fabs(n * s.h) <= a) x.push_back(n * s.h);
  return x;
}
}  // namespace

TEST_CASE("initial state holds the samples at rest") {
  const InitialProfile g = InitialProfile::gaussian(0.01, 1.0);
  const LatticeState s = initial_state(g, 40);
  CHECK(s.u.size() == 40);
  for (std::size_t k = 0; k < s.u.size(); ++k) {
    const double wu = g.W(s.index_even(k) * g.delta()), wv = g.W(s.index_odd(k) * g.delta());
    CHECK(s.u[k] == (wu < 1e-14 ? 0.0 : wu));
    CHECK(s.v[k] == (wv < 1e-14 ? 0.0 : wv));
    CHECK(s.u_dot[k] == 0.0);
  }
  const LatticeState e = evolve(kNaCl, s, 0.0);
  CHECK(e.u == s.u);
}

TEST_CASE("uniform displacement is a free-end equilibrium") {
  LatticeState s = make_state(0.01, std::vector<double>(30, 1.0), std::vector<double>(30, 1.0));
  LatticeOptions o;
  o.boundary = Boundary::free_ends;
  const LatticeState e = evolve(kNaCl, s, 0.5, o);
  for (std::size_t k = 0; k < e.u.size(); ++k) {
    CHECK(e.u[k] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(e.v[k] == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("integrator conserves energy and is time reversible") {
  const InitialProfile g = InitialProfile::gaussian(0.01, 1.0);
  const long n = required_sites(kNaCl, g, 0.5);
  const LatticeState s0 = initial_state(g, n);
  const LatticeState s1 = evolve(kNaCl, s0, 0.5);
  CHECK(s1.t == doctest::Approx(0.5));
  CHECK(s1.max_energy_drift < 1e-10);
  CHECK(s1.boundary_max < 1e-8);
  LatticeState back = s1;
  for (auto& w : back.u_dot) w = -w;
  for (auto& w : back.v_dot) w = -w;
  const LatticeState s2 = evolve(kNaCl, back, 0.5);
  double err = 0;
  for (std::size_t k = 0; k < s0.u.size(); ++k)
    err = std::max({err, std::fabs(s2.u[k] - s0.u[k]), std::fabs(s2.v[k] - s0.v[k])});
  CHECK(err < 1e-10);
}

TEST_CASE("too small a chain is rejected") {
  const InitialProfile g = InitialProfile::gaussian(0.01, 1.0);
  const long n = required_sites(kNaCl, g, 0.5);
  CHECK(n > 0);
  CHECK_THROWS(integrate_lattice(kNaCl, g, 0.5, n / 4));
}

TEST_CASE("quadrature at t = 0 reproduces the band-limited interpolants") {
  const SpectralData sd(InitialProfile::gaussian(0.01, 1.0));
  const auto x = linspace(-0.05, 0.05, 41);
  const WaveField f = solve_quadrature(kNaCl, sd, x, 0.0, Mode::full);
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(f.u[i] == doctest::Approx(sd.kws_interpolate(1, x[i])).epsilon(1e-8).scale(1.0));
    CHECK(f.v[i] == doctest::Approx(sd.kws_interpolate(2, x[i])).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("modal splits add up") {
  const SpectralData sd(InitialProfile::gaussian(0.01, 1.0));
  const auto x = linspace(-0.3, 0.3, 121);
  const QuadratureFields q = solve_quadrature_modes(kNaCl, sd, x, 0.2);
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(std::fabs(q.full.u[i] - q.acoustic.u[i] - q.optical.u[i]) < 1e-10);
    CHECK(std::fabs(q.full.v[i] - q.acoustic.v[i] - q.optical.v[i]) < 1e-10);
  }
}

TEST_CASE("lattice integration agrees with the Fourier solution at the sites") {
  const InitialProfile g = InitialProfile::gaussian(0.01, 1.0);
  const SpectralData sd(g);
  const double t = 0.1;
  const LatticeState s = integrate_lattice(kNaCl, g, t, required_sites(kNaCl, g, t));
  const WaveField all = lattice_field(s);
  const auto xs = sites(s, 0.3);
  WaveField ode{{}, {}, {}, t, "ode"};
  for (std::size_t i = 0; i < all.x.size(); ++i)
    if (std::fabs(all.x[i]) <= 0.3) {
      ode.x.push_back(all.x[i]);
      ode.u.push_back(all.u[i]);
      ode.v.push_back(all.v[i]);
    }
  const WaveField q = solve_quadrature(kNaCl, sd, xs, t, Mode::full);
  const CompareReport r = compare_fields(ode, q);
  CHECK(r.count == xs.size());
  CHECK(r.linf < 1e-10);
}

TEST_CASE("field comparison") {
  WaveField a{{0, 1, 2}, {1, 2, 3}, {1, 2, 3}, 0.0, "a"};
  WaveField b = a;
  b.u[1] = 2.5;
  b.v[0] = std::nan("");
  const CompareReport r = compare_fields(a, b, {Window{"mid", 1.0, 0.1}});
  CHECK(r.linf == doctest::Approx(0.5));
  CHECK(r.count == 5);
  REQUIRE(r.windows.size() == 1);
  CHECK(r.windows[0].count == 2);
  CHECK(r.windows[0].peak == doctest::Approx(2.5));
  WaveField c{{0, 1}, {0, 0}, {0, 0}, 0.0, "c"};
  CHECK_THROWS_AS(compare_fields(a, c), std::invalid_argument);
}

TEST_CASE("front windows") {
  const auto w = front_windows(kNaCl, 0.01, 0.5);
  REQUIRE(w.size() == 4);
  double right = 0;
  for (const auto& win : w) right = std::max(right, win.center);
  CHECK(right == doctest::Approx(0.5));
  for (const auto& win : w) CHECK(win.halfwidth > 0);
}

TEST_CASE("csv output") {
  WaveField a{{0, 0.5}, {1, std::nan("")}, {2, 3}, 0.25, "ode"};
  std::ostringstream os;
  write_csv(os, a, {"h=0.01"});
  const std::string s = os.str();
  CHECK(s.rfind("# h=0.01\n", 0) == 0);
  CHECK(s.find("x,u,v") != std::string::npos);
  CHECK(s.find("nan") != std::string::npos);
}
