#include "diatomic/initial_data.hpp"

#include <gsl/gsl_spline.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "diatomic/errors.hpp"
#include "diatomic/quadrature.hpp"

namespace diatomic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSampleCut = 1e-14;
constexpr double kHatCut = 1e-14;

void check_scales(double mu, double delta) {
  if (!(mu > 0 && mu < 1)) throw std::invalid_argument("profile: mu must lie in (0, 1)");
  if (!(delta > 0)) throw std::invalid_argument("profile: delta must be positive");
}

}  // namespace

struct InitialProfile::Table {
  std::vector<double> xi, w;
  gsl_interp* interp = nullptr;

  Table(std::vector<double> x, std::vector<double> y) : xi(std::move(x)), w(std::move(y)) {
    interp = gsl_interp_alloc(gsl_interp_cspline, xi.size());
    gsl_interp_init(interp, xi.data(), w.data(), xi.size());
  }
  ~Table() { gsl_interp_free(interp); }
  Table(const Table&) = delete;
  Table& operator=(const Table&) = delete;

  double eval(double x) const {
    if (x < xi.front() || x > xi.back()) return 0.0;
    return gsl_interp_eval(interp, xi.data(), w.data(), x, nullptr);
  }
};

InitialProfile InitialProfile::gaussian(double mu, double delta) {
  check_scales(mu, delta);
  InitialProfile p;
  p.kind_ = ProfileKind::gaussian;
  p.mu_ = mu;
  p.delta_ = delta;
  p.radius_ = std::sqrt(2.0 * std::log(1.0 / kSampleCut));
  p.hat_cutoff_ = std::sqrt(2.0 * std::log(1.0 / kHatCut));
  return p;
}

InitialProfile InitialProfile::table(std::vector<double> xi, std::vector<double> w,
                                     double decay_radius, double mu, double delta) {
  check_scales(mu, delta);
  if (xi.size() != w.size() || xi.size() < 4)
    throw std::invalid_argument("profile table: need at least 4 (xi, W) pairs of equal length");
  if (!(decay_radius > 0)) throw std::invalid_argument("profile table: decay radius must be positive");
  std::vector<std::size_t> idx(xi.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return xi[a] < xi[b]; });
  std::vector<double> xs, ws;
  for (std::size_t i : idx) {
    if (!xs.empty() && xi[i] == xs.back())
      throw std::invalid_argument("profile table: duplicate xi value");
    xs.push_back(xi[i]);
    ws.push_back(w[i]);
    if (!std::isfinite(xi[i]) || !std::isfinite(w[i]))
      throw std::invalid_argument("profile table: non-finite entry");
    if (std::fabs(xi[i]) > decay_radius && std::fabs(w[i]) >= 1e-12) {
      std::ostringstream os;
      os << "profile table: |W(" << xi[i] << ")| = " << std::fabs(w[i])
         << " exceeds 1e-12 outside the declared decay radius " << decay_radius;
      throw std::invalid_argument(os.str());
    }
  }
  InitialProfile p;
  p.kind_ = ProfileKind::sample_table;
  p.mu_ = mu;
  p.delta_ = delta;
  p.radius_ = std::min(decay_radius, std::max(std::fabs(xs.front()), std::fabs(xs.back())));
  p.table_ = std::make_shared<const Table>(std::move(xs), std::move(ws));
  p.find_hat_cutoff();
  return p;
}

InitialProfile InitialProfile::load_table(const std::string& path, double decay_radius, double mu,
                                          double delta) {
  std::ifstream in(path);
  if (!in) throw ConfigError("profile table: cannot open '" + path + "'");
  std::vector<double> xi, w;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::replace(line.begin(), line.end(), ';', ' ');
    std::replace(line.begin(), line.end(), '\t', ' ');
    std::istringstream ls(line);
    double a, b;
    if (!(ls >> a)) {
      if (line.find_first_not_of(' ') == std::string::npos) continue;
      if (first && xi.empty()) {  // header line
        first = false;
        continue;
      }
      throw ConfigError("profile table: malformed line in '" + path + "': " + line);
    }
    if (!(ls >> b)) throw ConfigError("profile table: missing W column in '" + path + "'");
    first = false;
    xi.push_back(a);
    w.push_back(b);
  }
  return table(std::move(xi), std::move(w), decay_radius, mu, delta);
}

InitialProfile InitialProfile::with_scales(double mu, double delta) const {
  check_scales(mu, delta);
  InitialProfile p = *this;
  p.mu_ = mu;
  p.delta_ = delta;
  return p;
}

double InitialProfile::W(double xi) const {
  if (kind_ == ProfileKind::gaussian) return std::exp(-0.5 * xi * xi);
  return table_->eval(xi);
}

std::complex<double> InitialProfile::w_hat(double p) const {
  if (kind_ == ProfileKind::gaussian) return std::exp(-0.5 * p * p);
  // Integrate the spline interval by interval so every panel sees a single cubic.
  const auto& xs = table_->xi;
  std::complex<long double> acc = 0;
  for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
    const double a = xs[j], b = xs[j + 1];
    const NodeSet ns = gauss_legendre_panels(a, b, panels_for(b - a, p, b - a, 12.0));
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const double wv = table_->eval(ns.x[i]) * ns.w[i];
      acc += std::complex<long double>(wv * std::cos(p * ns.x[i]), -wv * std::sin(p * ns.x[i]));
    }
  }
  const double norm = 1.0 / std::sqrt(2.0 * kPi);
  return {static_cast<double>(acc.real()) * norm, static_cast<double>(acc.imag()) * norm};
}

void InitialProfile::find_hat_cutoff() {
  double last = 0;
  for (double p = 0; p <= 100.0; p += 0.05)
    if (std::abs(w_hat(p)) >= kHatCut) last = p;
  hat_cutoff_ = last + 0.05;
}

LatticeSamples sample_lattice(const InitialProfile& profile) {
  LatticeSamples s;
  s.delta = profile.delta();
  const long nmax = static_cast<long>(std::floor(profile.decay_radius() / profile.delta()));
  for (long n = -nmax; n <= nmax; ++n) {
    const double w = profile.W(static_cast<double>(n) * profile.delta());
    if (std::fabs(w) < kSampleCut) continue;
    // Euclidean parity so negative indices are classified correctly.
    if (((n % 2) + 2) % 2 == 0) {
      s.n_even.push_back(n);
      s.w_even.push_back(w);
    } else {
      s.n_odd.push_back(n);
      s.w_odd.push_back(w);
    }
  }
  if (s.w_even.empty() || s.w_odd.empty()) {
    std::ostringstream os;
    os << "sample_lattice: delta = " << profile.delta() << " exceeds the profile decay radius "
       << profile.decay_radius() << "; one atom species is not perturbed";
    throw std::invalid_argument(os.str());
  }
  return s;
}

SpectralData::SpectralData(const InitialProfile& profile)
    : profile_(profile), samples_(sample_lattice(profile)) {
  const double d = profile.delta();
  const long nmax = static_cast<long>(std::floor(profile.decay_radius() / d));
  const long shell = nmax + static_cast<long>(std::ceil(4.0 / d)) + 4;
  double tail = 0;
  for (long n = -shell; n <= shell; ++n) {
    const double w = std::fabs(profile.W(static_cast<double>(n) * d));
    if (std::labs(n) > nmax || w < kSampleCut) tail += w;
  }
  tail_bound_ = tail;
}

double SpectralData::brillouin_halfwidth() const { return kPi / (2.0 * samples_.delta); }

void SpectralData::check_zone(double p) const {
  const double hw = brillouin_halfwidth();
  if (std::fabs(p) > hw * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "semi-discrete transform: p = " << p << " outside the Brillouin zone [-" << hw << ", " << hw
       << "]";
    throw std::domain_error(os.str());
  }
}

namespace {

std::complex<double> sdft(const std::vector<long>& n, const std::vector<double>& w, double delta,
                          double p) {
  long double re = 0, im = 0;
  const long double dp = static_cast<long double>(delta) * p;
  for (std::size_t k = 0; k < n.size(); ++k) {
    const long double arg = dp * n[k];
    re += w[k] * cosl(arg);
    im -= w[k] * sinl(arg);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

}  // namespace

std::complex<double> SpectralData::w1_ext(double p) const {
  return sdft(samples_.n_even, samples_.w_even, samples_.delta, p);
}

std::complex<double> SpectralData::w2_ext(double p) const {
  return sdft(samples_.n_odd, samples_.w_odd, samples_.delta, p);
}

std::complex<double> SpectralData::w1(double p) const {
  check_zone(p);
  return w1_ext(p);
}

std::complex<double> SpectralData::w2(double p) const {
  check_zone(p);
  return w2_ext(p);
}

double SpectralData::kws_interpolate(int which, double x) const {
  if (which != 1 && which != 2) throw std::invalid_argument("kws_interpolate: which must be 1 or 2");
  const double P = brillouin_halfwidth();
  const double rate = std::fabs(x) / profile_.mu() + profile_.decay_radius();
  const NodeSet ns = gauss_legendre_panels(0.0, P, panels_for(P, rate, 0.5));
  long double acc = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const std::complex<double> wt = which == 1 ? w1_ext(ns.x[i]) : w2_ext(ns.x[i]);
    const double ph = ns.x[i] * x / profile_.mu();
    acc += ns.w[i] * (wt.real() * std::cos(ph) - wt.imag() * std::sin(ph));
  }
  return static_cast<double>(2.0L * samples_.delta / kPi * acc);
}

std::complex<double> semi_discrete_ft(const SpectralData& s, int parity, double p) {
  if (parity == 0) return s.w1(p);
  if (parity == 1) return s.w2(p);
  throw std::invalid_argument("semi_discrete_ft: parity must be 0 (even) or 1 (odd)");
}

PoissonGap poisson_gap(const InitialProfile& profile, double delta, const std::vector<double>& p_grid) {
  const SpectralData sd(profile.with_scales(profile.mu(), delta));
  const double scale = std::sqrt(kPi / 2.0) / delta;
  PoissonGap g;
  for (double p : p_grid) {
    const auto a = sd.w1(p), b = sd.w2(p);
    const auto hat = scale * sd.w_hat(p);
    g.w1_minus_w2 = std::max(g.w1_minus_w2, std::abs(a - b));
    g.w_minus_hat = std::max({g.w_minus_hat, std::abs(a - hat), std::abs(b - hat)});
  }
  return g;
}

double approx_unit_delta_gaussian(int which, double p) {
  if (which == 1) return 1.0 + 2.0 * std::exp(-2.0) * std::cos(2.0 * p);
  if (which == 2) return 2.0 * std::exp(-0.5) * std::cos(p) + 2.0 * std::exp(-4.5) * std::cos(3.0 * p);
  throw std::invalid_argument("approx_unit_delta_gaussian: which must be 1 or 2");
}

}  // namespace diatomic
