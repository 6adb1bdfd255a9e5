#include "diatomic/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "diatomic/errors.hpp"
#include "diatomic/parallel.hpp"
#include "diatomic/quadrature.hpp"

namespace diatomic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Yoshida's sixth-order composition of velocity Verlet.
constexpr double kY1 = -1.17767998417887, kY2 = 0.235573213359357, kY3 = 0.784513610477560;
constexpr double kY0 = 1.0 - 2.0 * (kY1 + kY2 + kY3);
constexpr std::array<double, 7> kYoshida = {kY3, kY2, kY1, kY0, kY1, kY2, kY3};

struct Chain {
  std::vector<double> X, V, gam;
  double h = 0;
  Boundary boundary = Boundary::fixed;

  void accel(std::vector<double>& a) const {
    const std::size_t n = X.size();
    const double ih2 = 1.0 / (h * h);
    for (std::size_t j = 0; j < n; ++j) {
      double left, right;
      if (boundary == Boundary::fixed) {
        left = j > 0 ? X[j - 1] : 0.0;
        right = j + 1 < n ? X[j + 1] : 0.0;
      } else {
        left = j > 0 ? X[j - 1] : X[j];
        right = j + 1 < n ? X[j + 1] : X[j];
      }
      a[j] = gam[j] * ih2 * (left - 2.0 * X[j] + right);
    }
  }

  double energy() const {
    const std::size_t n = X.size();
    long double e = 0;
    for (std::size_t j = 0; j < n; ++j) e += h * h * V[j] * V[j] / (2.0 * gam[j]);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const double dx = X[j + 1] - X[j];
      e += 0.5 * dx * dx;
    }
    if (boundary == Boundary::fixed) e += 0.5 * (X.front() * X.front() + X.back() * X.back());
    return static_cast<double>(e);
  }
};

Chain to_chain(const Dispersion& disp, const LatticeState& s, Boundary b) {
  Chain c;
  c.h = s.h;
  c.boundary = b;
  const std::size_t n = static_cast<std::size_t>(2 * s.n_sites);
  c.X.resize(n);
  c.V.resize(n);
  c.gam.resize(n);
  for (std::size_t k = 0; k < static_cast<std::size_t>(s.n_sites); ++k) {
    c.X[2 * k] = s.u[k];
    c.V[2 * k] = s.u_dot[k];
    c.gam[2 * k] = disp.gamma1();
    c.X[2 * k + 1] = s.v[k];
    c.V[2 * k + 1] = s.v_dot[k];
    c.gam[2 * k + 1] = disp.gamma2();
  }
  return c;
}

void from_chain(const Chain& c, LatticeState& s) {
  for (std::size_t k = 0; k < static_cast<std::size_t>(s.n_sites); ++k) {
    s.u[k] = c.X[2 * k];
    s.u_dot[k] = c.V[2 * k];
    s.v[k] = c.X[2 * k + 1];
    s.v_dot[k] = c.V[2 * k + 1];
  }
}

}  // namespace

long required_sites(const Dispersion& disp, const InitialProfile& profile, double t_end) {
  const double h = profile.h(), mu = profile.mu();
  const double t = std::fabs(t_end);
  const double w = std::pow(mu, 2.0 / 3.0) * std::cbrt(disp.q() * std::max(t, 1e-12));
  const double half = disp.c() * t + profile.decay_radius() * mu + 12.0 * w + 20.0 * h;
  long n = static_cast<long>(std::ceil(1.2 * half / h)) + 8;
  if (n % 2) ++n;
  return n;
}

LatticeState make_state(double h, std::vector<double> u0, std::vector<double> v0) {
  if (!(h > 0)) throw std::invalid_argument("make_state: h must be positive");
  if (u0.size() != v0.size() || u0.empty())
    throw std::invalid_argument("make_state: species arrays must be non-empty and of equal length");
  if (u0.size() % 2)
    throw std::invalid_argument("make_state: n_sites must be even so that index parity matches species");
  LatticeState s;
  s.h = h;
  s.n_sites = static_cast<long>(u0.size());
  s.u_dot.assign(u0.size(), 0.0);
  s.v_dot.assign(v0.size(), 0.0);
  s.u = std::move(u0);
  s.v = std::move(v0);
  return s;
}

LatticeState initial_state(const InitialProfile& profile, long n_sites) {
  if (n_sites <= 0) throw std::invalid_argument("initial_state: n_sites must be positive");
  if (n_sites % 2) ++n_sites;
  const LatticeSamples smp = sample_lattice(profile);
  std::vector<double> u(static_cast<std::size_t>(n_sites), 0.0), v(u.size(), 0.0);
  auto place = [&](const std::vector<long>& idx, const std::vector<double>& w, std::vector<double>& dst,
                   long offset) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const long k2 = idx[i] + n_sites - offset;
      if (k2 < 0 || k2 / 2 >= n_sites) continue;
      dst[static_cast<std::size_t>(k2 / 2)] = w[i];
    }
  };
  place(smp.n_even, smp.w_even, u, 0);
  place(smp.n_odd, smp.w_odd, v, 1);
  return make_state(profile.h(), std::move(u), std::move(v));
}

double lattice_energy(const Dispersion& disp, const LatticeState& s, Boundary boundary) {
  return to_chain(disp, s, boundary).energy();
}

LatticeState evolve(const Dispersion& disp, const LatticeState& start, double duration,
                    const LatticeOptions& opts) {
  LatticeState s = start;
  Chain c = to_chain(disp, start, opts.boundary);
  const double e0 = c.energy();
  s.energy_initial = e0;
  s.max_energy_drift = 0;
  s.boundary_max = 0;
  if (duration == 0.0) return s;
  const double dt_target = start.h / (opts.steps_per_unit * disp.omega_max());
  const long steps = std::max<long>(1, static_cast<long>(std::ceil(std::fabs(duration) / dt_target)));
  const double dt = duration / static_cast<double>(steps);
  const std::size_t n = c.X.size();
  std::vector<double> a(n);
  c.accel(a);
  const double escale = e0 > 0 ? e0 : 1.0;
  for (long step = 0; step < steps; ++step) {
    for (double wk : kYoshida) {
      const double tau = wk * dt;
      for (std::size_t j = 0; j < n; ++j) c.V[j] += 0.5 * tau * a[j];
      for (std::size_t j = 0; j < n; ++j) c.X[j] += tau * c.V[j];
      c.accel(a);
      for (std::size_t j = 0; j < n; ++j) c.V[j] += 0.5 * tau * a[j];
    }
    s.max_energy_drift = std::max(s.max_energy_drift, std::fabs(c.energy() - e0) / escale);
    if (opts.boundary == Boundary::fixed && n >= 4) {
      const double b = std::max({std::fabs(c.X[0]), std::fabs(c.X[1]), std::fabs(c.X[n - 2]),
                                 std::fabs(c.X[n - 1])});
      s.boundary_max = std::max(s.boundary_max, b);
      if (s.boundary_max > opts.boundary_tol) {
        std::ostringstream os;
        os << "integrate_lattice: wave reached the chain ends at t = "
           << start.t + dt * static_cast<double>(step + 1) << " (|boundary| = " << s.boundary_max
           << "); use at least " << 2 * start.n_sites << " sites per species";
        throw NumericalError(os.str());
      }
    }
  }
  from_chain(c, s);
  s.t = start.t + duration;
  return s;
}

LatticeState integrate_lattice(const Dispersion& disp, const InitialProfile& profile, double t_end,
                               long n_sites, const LatticeOptions& opts) {
  if (!(t_end >= 0)) throw std::invalid_argument("integrate_lattice: t_end must be non-negative");
  const long need = required_sites(disp, profile, t_end);
  if (opts.boundary == Boundary::fixed && n_sites < need) {
    std::ostringstream os;
    os << "integrate_lattice: n_sites = " << n_sites << " is too small for t_end = " << t_end
       << "; the wave would reach the fixed ends. Required n_sites >= " << need;
    throw std::invalid_argument(os.str());
  }
  return evolve(disp, initial_state(profile, n_sites), t_end, opts);
}

WaveField lattice_field(const LatticeState& s, const std::string& method) {
  WaveField f;
  f.t = s.t;
  f.method = method;
  const std::size_t n = s.u.size();
  for (std::size_t k = 0; k < n; ++k) {
    f.x.push_back(static_cast<double>(s.index_even(k)) * s.h);
    f.u.push_back(s.u[k]);
    f.v.push_back(kNaN);
    f.x.push_back(static_cast<double>(s.index_odd(k)) * s.h);
    f.u.push_back(kNaN);
    f.v.push_back(s.v[k]);
  }
  return f;
}

const char* mode_method_name(Mode m) {
  switch (m) {
    case Mode::full: return "quadrature_full";
    case Mode::acoustic: return "quadrature_ac";
    case Mode::optical: return "quadrature_opt";
  }
  return "quadrature";
}

namespace {

struct Node {
  double p, w;
  double v1r, v1i, v2r, v2i;
  Mat2 ma, mo;
};

std::vector<Node> build_nodes(const Dispersion& disp, const SpectralData& sd, double t, std::size_t panels) {
  const double delta = sd.delta();
  const double h = sd.profile().h();
  const NodeSet ns = gauss_legendre_panels(0.0, sd.brillouin_halfwidth(), panels);
  std::vector<Node> nodes(ns.size());
  parallel_for(ns.size(), 0, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      Node& nd = nodes[i];
      nd.p = ns.x[i];
      nd.w = ns.w[i];
      const auto v1 = sd.w1_ext(nd.p), v2 = sd.w2_ext(nd.p);
      nd.v1r = v1.real();
      nd.v1i = v1.imag();
      nd.v2r = v2.real();
      nd.v2i = v2.imag();
      const double k = delta * nd.p;
      const double ca = std::cos(disp.omega1(k) * t / h), co = std::cos(disp.omega2(k) * t / h);
      const Mat2 A = disp.A(k), B = disp.B(k);
      nd.ma = {A.a11 * ca, A.a12 * ca, A.a21 * ca, A.a22 * ca};
      nd.mo = {B.a11 * co, B.a12 * co, B.a21 * co, B.a22 * co};
    }
  });
  return nodes;
}

// (u_ac, v_ac, u_opt, v_opt) at x.
std::array<double, 4> eval_nodes(const std::vector<Node>& nodes, double x, double mu, double delta) {
  double ua = 0, va = 0, uo = 0, vo = 0;
  const double s = x / mu;
  for (const Node& nd : nodes) {
    const double th = nd.p * s;
    const double c = std::cos(th), sn = std::sin(th);
    const double r1 = nd.w * (nd.v1r * c - nd.v1i * sn);
    const double r2 = nd.w * (nd.v2r * c - nd.v2i * sn);
    ua += nd.ma.a11 * r1 + nd.ma.a12 * r2;
    va += nd.ma.a21 * r1 + nd.ma.a22 * r2;
    uo += nd.mo.a11 * r1 + nd.mo.a12 * r2;
    vo += nd.mo.a21 * r1 + nd.mo.a22 * r2;
  }
  const double f = 2.0 * delta / kPi;
  return {f * ua, f * va, f * uo, f * vo};
}

}  // namespace

QuadratureFields solve_quadrature_modes(const Dispersion& disp, const SpectralData& sd,
                                        const std::vector<double>& x, double t,
                                        const QuadratureOptions& opts) {
  if (!(t >= 0)) throw std::invalid_argument("solve_quadrature: t must be non-negative");
  const double delta = sd.delta(), mu = sd.profile().mu();
  const double P = sd.brillouin_halfwidth();
  double xmax = 0;
  std::size_t imax = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::fabs(x[i]) > xmax) {
      xmax = std::fabs(x[i]);
      imax = i;
    }
  long nmax = 0;
  for (long n : sd.samples().n_even) nmax = std::max(nmax, std::labs(n));
  for (long n : sd.samples().n_odd) nmax = std::max(nmax, std::labs(n));
  const double vmax = std::max(disp.c(), disp.c_star());
  const double rate = xmax / mu + t * vmax / mu + static_cast<double>(nmax) * delta;
  std::size_t panels = panels_for(P, rate, 0.5, opts.nodes_per_oscillation);

  std::vector<double> probes;
  if (!x.empty()) {
    const std::size_t np = std::min<std::size_t>(x.size(), 33);
    for (std::size_t k = 0; k < np; ++k) probes.push_back(x[k * (x.size() - 1) / std::max<std::size_t>(1, np - 1)]);
    probes.push_back(x[imax]);
  }

  std::vector<Node> coarse = build_nodes(disp, sd, t, panels);
  double scale = 0;
  for (const Node& nd : coarse)
    scale += nd.w * std::max(std::hypot(nd.v1r, nd.v1i), std::hypot(nd.v2r, nd.v2i));
  scale *= 2.0 * delta / kPi;
  std::vector<Node> fine;
  double err = 0;
  while (true) {
    fine = build_nodes(disp, sd, t, 2 * panels);
    err = 0;
    for (double xp : probes) {
      const auto a = eval_nodes(coarse, xp, mu, delta), b = eval_nodes(fine, xp, mu, delta);
      for (int k = 0; k < 4; ++k) err = std::max(err, std::fabs(a[k] - b[k]));
    }
    err /= scale;
    if (err <= opts.rel_tol) break;
    if (4 * panels * kNodesPerPanel > opts.max_nodes) {
      std::ostringstream os;
      os << "solve_quadrature: panel doubling did not converge (estimate " << err << " > tolerance "
         << opts.rel_tol << " with " << fine.size() << " nodes)";
      throw NumericalError(os.str());
    }
    panels *= 2;
    coarse = std::move(fine);
  }

  QuadratureFields out;
  out.nodes = fine.size();
  out.error_estimate = err;
  for (WaveField* f : {&out.full, &out.acoustic, &out.optical}) {
    f->x = x;
    f->t = t;
    f->u.assign(x.size(), 0.0);
    f->v.assign(x.size(), 0.0);
  }
  out.full.method = mode_method_name(Mode::full);
  out.acoustic.method = mode_method_name(Mode::acoustic);
  out.optical.method = mode_method_name(Mode::optical);
  parallel_for(x.size(), opts.threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const auto r = eval_nodes(fine, x[i], mu, delta);
      out.acoustic.u[i] = r[0];
      out.acoustic.v[i] = r[1];
      out.optical.u[i] = r[2];
      out.optical.v[i] = r[3];
      out.full.u[i] = r[0] + r[2];
      out.full.v[i] = r[1] + r[3];
    }
  });
  return out;
}

WaveField solve_quadrature(const Dispersion& disp, const SpectralData& spectral,
                           const std::vector<double>& x, double t, Mode mode,
                           const QuadratureOptions& opts) {
  QuadratureFields q = solve_quadrature_modes(disp, spectral, x, t, opts);
  switch (mode) {
    case Mode::full: return std::move(q.full);
    case Mode::acoustic: return std::move(q.acoustic);
    case Mode::optical: return std::move(q.optical);
  }
  return {};
}

std::vector<Window> front_windows(const Dispersion& disp, double mu, double t, double width_factor) {
  const double m23 = std::pow(mu, 2.0 / 3.0);
  const double wa = 0.5 * width_factor * m23 * std::cbrt(disp.q() * t);
  const double wo = 0.5 * width_factor * m23 * std::cbrt(disp.q_star() * t);
  return {{"acoustic_left", -disp.c() * t, wa},
          {"acoustic_right", disp.c() * t, wa},
          {"optical_left", -disp.c_star() * t, wo},
          {"optical_right", disp.c_star() * t, wo}};
}

CompareReport compare_fields(const WaveField& a, const WaveField& b, const std::vector<Window>& windows) {
  if (a.x.size() != b.x.size() || a.u.size() != a.x.size() || b.u.size() != b.x.size() ||
      a.v.size() != a.x.size() || b.v.size() != b.x.size())
    throw std::invalid_argument("compare_fields: grids have different sizes");
  if (std::fabs(a.t - b.t) > 1e-12 * std::max(1.0, std::fabs(a.t)))
    throw std::invalid_argument("compare_fields: fields are at different times");
  for (std::size_t i = 0; i < a.x.size(); ++i)
    if (std::fabs(a.x[i] - b.x[i]) > 1e-12 * std::max(1.0, std::fabs(a.x[i])))
      throw std::invalid_argument("compare_fields: x grids differ");
  CompareReport r;
  for (const Window& w : windows) r.windows.push_back({w, 0, 0, 0});
  long double sq = 0;
  auto visit = [&](double xi, double va, double vb) {
    if (!std::isfinite(va) || !std::isfinite(vb)) return;
    const double d = std::fabs(va - vb);
    r.linf = std::max(r.linf, d);
    r.peak = std::max(r.peak, std::fabs(vb));
    sq += d * d;
    ++r.count;
    for (WindowError& we : r.windows) {
      if (std::fabs(xi - we.window.center) > we.window.halfwidth) continue;
      we.linf = std::max(we.linf, d);
      we.peak = std::max(we.peak, std::fabs(vb));
      ++we.count;
    }
  };
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    visit(a.x[i], a.u[i], b.u[i]);
    visit(a.x[i], a.v[i], b.v[i]);
  }
  r.l2 = r.count ? static_cast<double>(std::sqrt(sq / r.count)) : 0.0;
  return r;
}

void write_csv(std::ostream& os, const WaveField& f, const std::vector<std::string>& comments) {
  for (const std::string& c : comments) os << "# " << c << '\n';
  os << "x,u,v,method,t\n";
  char buf[160];
  for (std::size_t i = 0; i < f.x.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,", f.x[i], f.u[i], f.v[i]);
    os << buf << f.method;
    std::snprintf(buf, sizeof buf, ",%.17g\n", f.t);
    os << buf;
  }
}

}  // namespace diatomic
