#include "diatomic/longwave.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "diatomic/airy.hpp"
#include "diatomic/errors.hpp"
#include "diatomic/parallel.hpp"
#include "diatomic/quadrature.hpp"

namespace diatomic {

namespace {
constexpr double kPi = std::numbers::pi;
}

LongwaveRegime classify_regime(double h, double mu, double band_lo, double band_hi) {
  if (!(h > 0) || !(mu > 0)) throw std::invalid_argument("classify_regime: h and mu must be positive");
  LongwaveRegime r;
  r.h = h;
  r.mu = mu;
  r.ratio = h * h / (mu * mu * mu);
  if (r.ratio < band_lo)
    r.regime = RegimeKind::wave_equation;
  else if (r.ratio <= band_hi)
    r.regime = RegimeKind::weak_dispersion;
  else
    r.regime = RegimeKind::outside_band;
  return r;
}

const char* regime_name(RegimeKind r) {
  switch (r) {
    case RegimeKind::weak_dispersion: return "weak_dispersion";
    case RegimeKind::wave_equation: return "wave_equation";
    case RegimeKind::outside_band: return "outside_band";
  }
  return "unknown";
}

namespace {

struct UasNode {
  double p, a, b;  // weight * cos(phase) * (Re w_hat, Im w_hat)
};

std::vector<UasNode> uas_nodes(const InitialProfile& prof, const Dispersion& disp, double t,
                               std::size_t panels) {
  const double mu = prof.mu(), h = prof.h();
  const NodeSet ns = gauss_legendre_panels(0.0, prof.w_hat_cutoff(), panels);
  std::vector<UasNode> nodes(ns.size());
  parallel_for(ns.size(), 0, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const double p = ns.x[i];
      const double ph = t * (disp.c() * p / mu - disp.q() * h * h * p * p * p / (3.0 * mu * mu * mu));
      const double wc = ns.w[i] * std::cos(ph);
      const auto wh = prof.w_hat(p);
      nodes[i] = {p, wc * wh.real(), wc * wh.imag()};
    }
  });
  return nodes;
}

double uas_eval(const std::vector<UasNode>& nodes, double x, double mu) {
  double acc = 0;
  const double s = x / mu;
  for (const UasNode& n : nodes) {
    const double th = n.p * s;
    acc += n.a * std::cos(th) - n.b * std::sin(th);
  }
  return 2.0 / std::sqrt(2.0 * kPi) * acc;
}

}  // namespace

std::vector<double> uas_integral(const InitialProfile& prof, const Dispersion& disp,
                                 const std::vector<double>& x, double t, const QuadratureOptions& opts) {
  const double mu = prof.mu(), h = prof.h(), P = prof.w_hat_cutoff();
  double xmax = 0;
  std::size_t imax = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::fabs(x[i]) > xmax) {
      xmax = std::fabs(x[i]);
      imax = i;
    }
  const double rate = xmax / mu + std::fabs(t) * (disp.c() / mu + disp.q() * h * h * P * P / (mu * mu * mu));
  std::size_t panels = panels_for(P, rate, 0.25, opts.nodes_per_oscillation);

  std::vector<double> probes;
  if (!x.empty()) {
    const std::size_t np = std::min<std::size_t>(x.size(), 33);
    for (std::size_t k = 0; k < np; ++k) probes.push_back(x[k * (x.size() - 1) / std::max<std::size_t>(1, np - 1)]);
    probes.push_back(x[imax]);
  }
  // |U_as| is bounded by (2/sqrt(2 pi)) \int_0^P |w_hat|.
  double scale = 0;
  {
    const NodeSet ns = gauss_legendre_panels(0.0, P, panels_for(P, 0.0, 0.25));
    for (std::size_t i = 0; i < ns.size(); ++i) scale += ns.w[i] * std::abs(prof.w_hat(ns.x[i]));
    scale *= 2.0 / std::sqrt(2.0 * kPi);
  }
  std::vector<UasNode> coarse = uas_nodes(prof, disp, t, panels), fine;
  double err = 0;
  while (true) {
    fine = uas_nodes(prof, disp, t, 2 * panels);
    err = 0;
    for (double xp : probes) err = std::max(err, std::fabs(uas_eval(coarse, xp, mu) - uas_eval(fine, xp, mu)));
    err /= scale;
    if (err <= opts.rel_tol) break;
    if (4 * panels * kNodesPerPanel > opts.max_nodes) {
      std::ostringstream os;
      os << "uas_integral: panel doubling did not converge (estimate " << err << " > tolerance "
         << opts.rel_tol << " with " << fine.size() << " nodes)";
      throw NumericalError(os.str());
    }
    panels *= 2;
    coarse = std::move(fine);
  }
  std::vector<double> out(x.size());
  parallel_for(x.size(), opts.threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) out[i] = uas_eval(fine, x[i], mu);
  });
  return out;
}

double uas_integral(const InitialProfile& prof, const Dispersion& disp, double x, double t) {
  return uas_integral(prof, disp, std::vector<double>{x}, t)[0];
}

double uas_gaussian_airy(const Dispersion& disp, double h, double mu, double x, double t) {
  if (!(t > 0))
    throw std::domain_error("uas_gaussian_airy: requires t > 0; use uas_integral at t = 0");
  const double c = disp.c(), q = disp.q();
  const double qt = q * t;
  const double h23 = std::cbrt(h * h);
  const double airy_len = h23 * std::cbrt(qt);                      // h^{2/3} (qt)^{1/3}
  const double shift = std::pow(mu, 4) / (4.0 * std::pow(h23, 4) * std::pow(qt, 4.0 / 3.0));
  const double decay_len = (h * h / (mu * mu)) * (2.0 * qt);        // (h^2/mu^2)(2qt)
  const double log_pref = std::log(std::sqrt(kPi / 2.0) * mu / airy_len) +
                          std::pow(mu, 6) / (12.0 * std::pow(h, 4) * qt * qt);
  auto term = [&](double expo, double z) {
    const AiryValue a = airy_scaled(z);
    if (a.ai == 0.0) return 0.0;
    double lg = log_pref + expo;
    if (z > 0) lg -= 2.0 / 3.0 * z * std::sqrt(z);
    return a.ai * std::exp(lg);
  };
  return term(-(x + c * t) / decay_len, -(x + c * t) / airy_len + shift) +
         term((x - c * t) / decay_len, (x - c * t) / airy_len + shift);
}

double uas_dalembert(const InitialProfile& prof, const Dispersion& disp, double x, double t) {
  const double mu = prof.mu(), c = disp.c();
  return 0.5 * (prof.W((x + c * t) / mu) + prof.W((x - c * t) / mu));
}

namespace {

constexpr std::array<double, 9> kD2 = {-1.0 / 560, 8.0 / 315, -1.0 / 5, 8.0 / 5, -205.0 / 72,
                                       8.0 / 5,    -1.0 / 5,  8.0 / 315, -1.0 / 560};
constexpr std::array<double, 9> kD4 = {7.0 / 240, -2.0 / 5,   169.0 / 60, -122.0 / 15, 91.0 / 8,
                                       -122.0 / 15, 169.0 / 60, -2.0 / 5,   7.0 / 240};
constexpr std::array<double, 7> kD6 = {1, -6, 15, -20, 15, -6, 1};

}  // namespace

PdeResidual residual_pde_check(const std::function<double(double, double)>& field,
                               const std::vector<double>& x_grid, double t, const Dispersion& disp,
                               double h, double mu, PdeForm form, double step) {
  const double c = disp.c(), q = disp.q(), delta = h / mu;
  const double k4 = 2.0 / 3.0 * (q / c) * delta * delta;
  const double k6 = (q / c) * (q / c) * delta * delta * delta * delta / 9.0;
  const double dt = step * mu / c;  // tau step mapped to t
  PdeResidual r;
  for (double x : x_grid) {
    const double X = x / mu;
    auto U = [&](int j) { return field(mu * (X + j * step), t); };
    double uxx = 0, utt = 0, u4 = 0, u6 = 0;
    for (int j = -4; j <= 4; ++j) {
      const double uj = U(j);
      uxx += kD2[j + 4] * uj;
      u4 += kD4[j + 4] * uj;
      utt += kD2[j + 4] * field(x, t + j * dt);
      if (std::abs(j) <= 3) u6 += kD6[j + 3] * uj;
    }
    const double s2 = step * step;
    uxx /= s2;
    utt /= s2;
    u4 /= s2 * s2;
    u6 /= s2 * s2 * s2;
    double res = utt - uxx;
    if (form == PdeForm::weak_dispersion) res -= k4 * u4 + k6 * u6;
    r.max_residual = std::max(r.max_residual, std::fabs(res));
    r.scale = std::max(r.scale, std::fabs(uxx));
  }
  r.normalized = r.scale > 0 ? r.max_residual / r.scale : 0.0;
  return r;
}

}  // namespace diatomic
