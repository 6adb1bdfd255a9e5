// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "diatomic/airy.hpp"
#include "diatomic/dispersion.hpp"
#include "diatomic/initial_data.hpp"
#include "diatomic/longwave.hpp"
#include "diatomic/oracles.hpp"
#include "diatomic/shortwave.hpp"

using namespace diatomic;

namespace {

const double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return x;
}

double fitted_slope(const std::vector<double>& lx, const std::vector<double>& ly) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(lx.size());
  my /= static_cast<double>(ly.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxy / sxx;
}

// NaCl chain from the physical inputs.
LatticeParams nacl() { return make_params(5.88e-26, 3.81e-26, 15.0, 2.82e-10, 1e-3); }

Outcome criterion1() {
  const LatticeParams lp = nacl();
  const Dispersion d(lp);
  struct Item {
    const char* name;
    double value, target, tol;
  };
  const Item items[] = {{"gamma1", d.gamma1(), 0.82, 0.01}, {"gamma2", d.gamma2(), 1.27, 0.01},
                        {"c", d.c(), 1.00, 0.01},           {"q", d.q(), 0.14, 0.01},
                        {"p*", d.p_star(), 1.196, 0.005},   {"c*", d.c_star(), 0.474, 0.005},
                        {"q*", d.q_star(), 1.318, 0.01}};
  Outcome o{true, ""};
  for (const Item& it : items) {
    o.pass = o.pass && std::fabs(it.value - it.target) <= it.tol;
    o.detail += std::string(it.name) + "=" + fmt("%.6f", it.value) + " ";
  }
  return o;
}

// Grid of 401 points: 200 across the left front region and 201 across the right one.
std::vector<double> two_front_grid(double ct) {
  const double behind = 1e-3, ahead = 3e-4;
  std::vector<double> x;
  for (double v : linspace(-ct - ahead, -ct + behind, 200)) x.push_back(v);
  for (double v : linspace(ct - behind, ct + ahead, 201)) x.push_back(v);
  return x;
}

Outcome criterion2() {
  const LatticeParams lp = nacl();
  const Dispersion d(lp);
  const double h = lp.h, mu = 80 * h;
  const InitialProfile g = InitialProfile::gaussian(mu, h / mu);
  Outcome o{true, ""};
  for (double t : {0.1, 0.5}) {
    const auto x = two_front_grid(d.c() * t);
    const auto ref = uas_integral(g, d, x, t);
    double err = 0, peak = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      err = std::max(err, std::fabs(uas_gaussian_airy(d, h, mu, x[i], t) - ref[i]));
      peak = std::max(peak, std::fabs(ref[i]));
    }
    o.pass = o.pass && err <= 1e-6 && peak > 0.1;
    o.detail += "t=" + fmt("%g", t) + " max|diff|=" + fmt("%.2e", err) + " peak=" + fmt("%.3f", peak) + " ";
  }
  return o;
}

// Lattice sites inside [-a, a] of the lattice field, with the quadrature reference at the same points.
double ode_vs_quadrature(const Dispersion& d, const SpectralData& sd, const LatticeState& s, double a) {
  const WaveField all = lattice_field(s);
  WaveField ode{{}, {}, {}, s.t, "ode"};
  for (std::size_t i = 0; i < all.x.size(); ++i)
    if (std::fabs(all.x[i]) <= a) {
      ode.x.push_back(all.x[i]);
      ode.u.push_back(all.u[i]);
      ode.v.push_back(all.v[i]);
    }
  const WaveField q = solve_quadrature(d, sd, ode.x, s.t, Mode::full);
  return compare_fields(ode, q).linf;
}

Outcome criterion3() {
  const Dispersion d(nacl());
  const double mu = 0.01;
  const InitialProfile g = InitialProfile::gaussian(mu, 1.0);
  const SpectralData sd(g);
  Outcome o{true, ""};
  double drift = 0;
  for (double t : {0.1, 0.25, 0.5}) {
    const LatticeState s = integrate_lattice(d, g, t, required_sites(d, g, t));
    const double err = ode_vs_quadrature(d, sd, s, d.c() * t + 0.15);
    drift = std::max(drift, s.max_energy_drift);
    o.pass = o.pass && err <= 1e-5;
    o.detail += "t=" + fmt("%g", t) + " Linf=" + fmt("%.2e", err) + " ";
  }
  o.pass = o.pass && drift <= 1e-8;
  o.detail += "energy_drift=" + fmt("%.2e", drift);
  return o;
}

Outcome criterion4() {
  const Dispersion d(nacl());
  const double h = 0.005, t = 0.5;
  std::vector<double> ld, le;
  Outcome o{true, ""};
  for (double delta : {0.05, 0.02, 0.01}) {
    const double mu = h / delta;
    const SpectralData sd(InitialProfile::gaussian(mu, delta));
    const double a = d.c() * t + 8 * mu;
    const auto x = linspace(-a, a, 1001);
    const QuadratureFields q = solve_quadrature_modes(d, sd, x, t);
    double err = 0, peak = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      err = std::max({err, std::fabs(q.full.u[i] - q.acoustic.u[i]), std::fabs(q.full.v[i] - q.acoustic.v[i])});
      peak = std::max({peak, std::fabs(q.full.u[i]), std::fabs(q.full.v[i])});
    }
    ld.push_back(std::log(delta));
    le.push_back(std::log(err / peak));
    o.detail += "delta=" + fmt("%g", delta) + " rel=" + fmt("%.3e", err / peak) + " ";
  }
  const double slope = fitted_slope(ld, le);
  o.pass = std::fabs(slope - 2.0) <= 0.3;
  o.detail += "slope=" + fmt("%.3f", slope);
  return o;
}

struct WindowStats {
  double err = 0, peak = 0;
  double heavy = 0, light = 0;      // max |u|, |v| of the reference
  double heavy_a = 0, light_a = 0;  // same for the asymptotic field
};

// Lattice sites n mu in the window: u compared on even n, v on odd n.
WindowStats window_at_sites(const SpectralData& sd, const Dispersion& d, double t, const Window& w,
                            ShortwaveMethod method, Mode mode) {
  const double mu = sd.profile().mu();
  std::vector<double> x;
  std::vector<long> n;
  for (long k = static_cast<long>(std::ceil((w.center - w.halfwidth) / mu));
       k * mu <= w.center + w.halfwidth; ++k) {
    x.push_back(k * mu);
    n.push_back(k);
  }
  const WaveField a = shortwave_field(sd, d, x, t, method);
  const WaveField q = solve_quadrature(d, sd, x, t, mode);
  WindowStats s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool even = n[i] % 2 == 0;
    const double ref = even ? q.u[i] : q.v[i];
    const double val = even ? a.u[i] : a.v[i];
    s.err = std::max(s.err, std::fabs(val - ref));
    s.peak = std::max(s.peak, std::fabs(ref));
    (even ? s.heavy : s.light) = std::max(even ? s.heavy : s.light, std::fabs(ref));
    (even ? s.heavy_a : s.light_a) = std::max(even ? s.heavy_a : s.light_a, std::fabs(val));
  }
  return s;
}

const Window& find_window(const std::vector<Window>& ws, const std::string& name) {
  return *std::find_if(ws.begin(), ws.end(), [&](const Window& w) { return w.name == name; });
}

Outcome shortwave_sweep(const char* window, ShortwaveMethod method, Mode mode, double min_order,
                        bool check_light) {
  const Dispersion d(nacl());
  const double t = 0.5;
  std::vector<double> lm, le;
  Outcome o{true, ""};
  for (double mu : {0.02, 0.01, 0.005}) {
    const SpectralData sd(InitialProfile::gaussian(mu, 1.0));
    const WindowStats s = window_at_sites(sd, d, t, find_window(front_windows(d, mu, t), window), method, mode);
    lm.push_back(std::log(mu));
    le.push_back(std::log(s.err / s.peak));
    o.detail += "mu=" + fmt("%g", mu) + " rel=" + fmt("%.3e", s.err / s.peak) + " ";
    if (check_light) {
      o.pass = o.pass && s.light > s.heavy && s.light_a > s.heavy_a;
      o.detail += "(light/heavy " + fmt("%.2f", s.light / s.heavy) + ") ";
    }
  }
  const double order = fitted_slope(lm, le);
  o.pass = o.pass && order >= min_order;
  o.detail += "order=" + fmt("%.3f", order);
  return o;
}

Outcome criterion5() {
  return shortwave_sweep("acoustic_right", ShortwaveMethod::acoustic_uniform, Mode::acoustic, 0.6, false);
}

Outcome criterion6() {
  return shortwave_sweep("optical_right", ShortwaveMethod::optical_uniform, Mode::optical, 0.3, true);
}

Outcome criterion7() {
  // absolute gap below this is summation roundoff
  const double floor = 1e-13;
  Outcome o{true, ""};
  auto gap = [](double delta) {
    const InitialProfile g = InitialProfile::gaussian(0.01, delta);
    const double P = kPi / (2 * delta);
    const PoissonGap pg = poisson_gap(g, delta, linspace(-P, P, 401));
    return std::max(pg.w1_minus_w2, pg.w_minus_hat);
  };
  std::vector<double> deltas = {0.5, 0.25, 0.1, 0.05};
  std::vector<double> gaps;
  for (double dl : deltas) {
    gaps.push_back(gap(dl));
    o.detail += "delta=" + fmt("%g", dl) + " gap=" + fmt("%.2e", gaps.back()) + " ";
  }
  // resolved pair: slope of log gap against 1/delta, and the equivalent power of delta
  const double s_inv = (std::log(gaps[1]) - std::log(gaps[0])) / (1 / deltas[1] - 1 / deltas[0]);
  const double order = (std::log(gaps[0]) - std::log(gaps[1])) / (std::log(deltas[0]) - std::log(deltas[1]));
  o.pass = order >= 8 && gaps[2] <= floor && gaps[3] <= floor;
  // local order keeps growing as delta shrinks
  double prev = 0;
  for (double dl : {0.5, 0.45, 0.4, 0.35, 0.3}) {
    const double a = gap(dl), b = gap(dl - 0.05);
    const double k = (std::log(a) - std::log(b)) / (std::log(dl) - std::log(dl - 0.05));
    o.pass = o.pass && k > prev;
    prev = k;
  }
  const double g001 = gap(0.01);
  o.pass = o.pass && g001 < 1e-12;
  o.detail += "dlog(gap)/d(1/delta)=" + fmt("%.2f", s_inv) + " order=" + fmt("%.1f", order) +
              " local order at 0.3=" + fmt("%.1f", prev) + " gap(0.01)=" + fmt("%.2e", g001);
  return o;
}

Outcome criterion8() {
  const double ai0 = 1.0 / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0));
  const double aip0 = -1.0 / (std::pow(3.0, 1.0 / 3.0) * std::tgamma(1.0 / 3.0));
  const AiryValue a = airy(0.0);
  const double e0 = std::max(std::fabs(a.ai - ai0), std::fabs(a.ai_prime - aip0));
  double res = 0;
  const double e = 1e-5;
  for (double z : linspace(-20, 5, 2501)) {
    const double d2 = (airy_ai_prime(z + e) - airy_ai_prime(z - e)) / (2 * e);
    res = std::max(res, std::fabs(d2 - z * airy_ai(z)));
  }
  std::vector<double> ly, le;
  for (double y0 = 10; y0 < 500; y0 *= 1.25) {
    double m = 0;
    for (double y = y0; y < y0 * 1.25; y += 0.01)
      for (int s : {1, -1}) m = std::max(m, std::abs(envelope_A(y, s) - std::polar(1.0, s * (y - kPi / 4))));
    ly.push_back(std::log(y0));
    le.push_back(std::log(m));
  }
  const double slope = fitted_slope(ly, le);
  return {e0 <= 1e-10 && res <= 1e-4 && slope <= -0.9,
          "origin err=" + fmt("%.1e", e0) + " ODE residual=" + fmt("%.1e", res) + " envelope slope=" +
              fmt("%.3f", slope)};
}

Outcome criterion9() {
  const LatticeParams lp = nacl();
  const Dispersion d(lp);
  const double h = lp.h, mu = 80 * h, t = 0.5;
  const double fd_tol = 1e-7;
  const InitialProfile g = InitialProfile::gaussian(mu, h / mu);
  const auto x = linspace(d.c() * t - 6 * mu, d.c() * t + 6 * mu, 121);
  const PdeResidual rw = residual_pde_check([&](double xx, double tt) { return uas_dalembert(g, d, xx, tt); }, x, t,
                                            d, h, mu, PdeForm::wave);
  const PdeResidual ra = residual_pde_check([&](double xx, double tt) { return uas_gaussian_airy(d, h, mu, xx, tt); },
                                            x, t, d, h, mu, PdeForm::weak_dispersion);
  return {rw.normalized <= fd_tol && ra.normalized <= 10 * fd_tol,
          "dalembert=" + fmt("%.2e", rw.normalized) + " gaussian_airy=" + fmt("%.2e", ra.normalized) +
              " (FD tolerance " + fmt("%.0e", fd_tol) + ")"};
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int id;
    double budget;  // seconds
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {{1, 1, criterion1},   {2, 60, criterion2},  {3, 300, criterion3},
                                      {4, 600, criterion4}, {5, 600, criterion5}, {6, 600, criterion6},
                                      {7, 60, criterion7},  {8, 10, criterion8},  {9, 60, criterion9}};
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  int failed = 0;
  for (const Criterion& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.pass && secs <= c.budget;
    if (!ok) ++failed;
    std::printf("criterion %d: %s  %s [%.2f s, budget %.0f s]\n", c.id, ok ? "PASS" : "FAIL", o.detail.c_str(), secs,
                c.budget);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
