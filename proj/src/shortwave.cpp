#include "diatomic/shortwave.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "diatomic/airy.hpp"
#include "diatomic/errors.hpp"
#include "diatomic/parallel.hpp"

namespace diatomic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSmallRoot = 1e-3;  // below this sqrt(z) the odd parts use Taylor terms

void require_unit_delta(const SpectralData& s, double t, const char* who) {
  if (std::fabs(s.delta() - 1.0) > 1e-12) {
    std::ostringstream os;
    os << who << ": short-wave formulas require delta = 1 (got " << s.delta() << ")";
    throw std::invalid_argument(os.str());
  }
  if (!(t > 0)) throw std::domain_error(std::string(who) + ": requires t > 0");
}

Amp2 apply(const Mat2& m, const Amp2& v) { return {m.a11 * v.a + m.a12 * v.b, m.a21 * v.a + m.a22 * v.b}; }

Amp2 vt(const SpectralData& s, double p) { return {s.w1_ext(p), s.w2_ext(p)}; }

// Even and odd parts of V~ around p0 as functions of z = (p - p0)^2.
Amp2 even_part(const SpectralData& s, double p0, double z) {
  const double r = std::sqrt(z);
  return 0.5 * (vt(s, p0 + r) + vt(s, p0 - r));
}

Amp2 odd_part(const SpectralData& s, double p0, double z) {
  const double r = std::sqrt(z);
  if (r < kSmallRoot) return spectral_jet(s, p0, 1) + spectral_jet(s, p0, 3) * (z / 6.0);
  return (vt(s, p0 + r) - vt(s, p0 - r)) * (0.5 / r);
}

template <class F>
Amp2 continued(F&& f, double z, double last) {
  if (z >= 0) return f(z);
  return three_point_continue(f, z, last);
}

double re(std::complex<double> z) { return z.real(); }

struct Roots {
  double p;
  double residual;
};

// Solves g(p) = target on [lo, hi] where g is monotone; endpoints are returned when the target
// lies outside the open bracket by rounding.
template <class G>
Roots solve_monotone(G&& g, double target, double lo, double hi, const char* who) {
  auto f = [&](double p) { return g(p) - target; };
  const double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0};
  if (fhi == 0.0) return {hi, 0.0};
  if ((flo > 0) == (fhi > 0)) {
    const double tol = 1e-13 * (std::fabs(g(lo)) + std::fabs(g(hi)) + std::fabs(target));
    if (std::fabs(flo) <= tol) return {lo, std::fabs(flo)};
    if (std::fabs(fhi) <= tol) return {hi, std::fabs(fhi)};
    std::ostringstream os;
    os.precision(17);
    os << who << ": root not bracketed on [" << lo << ", " << hi << "] (f = " << flo << ", " << fhi
       << ", target " << target << ")";
    throw NumericalError(os.str());
  }
  boost::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi,
                                                   boost::math::tools::eps_tolerance<double>(52), iters);
  const double p = 0.5 * (r.first + r.second);
  return {p, std::fabs(f(p))};
}

double envelope_width(double mu, double qt) { return std::cbrt(mu * mu * qt); }

// Re{e^{i theta/mu}[a+ Y^{1/6} Ai(-Y^{2/3}) + i a- Y^{-1/6} Ai'(-Y^{2/3})]}, Y = 3 Psi / (2 mu).
Vec2 airy_combination(const Amp2& ap, const Amp2& am, double theta, double psi, double mu) {
  const double Y = 1.5 * psi / mu;
  const AiryValue ai = airy(-std::cbrt(Y * Y));
  const double y6 = std::pow(Y, 1.0 / 6.0);
  const std::complex<double> e = std::polar(1.0, theta / mu);
  const std::complex<double> I(0.0, 1.0);
  return {re(e * (ap.a * y6 * ai.ai + I * am.a * ai.ai_prime / y6)),
          re(e * (ap.b * y6 * ai.ai + I * am.b * ai.ai_prime / y6))};
}

}  // namespace

Amp2 spectral_jet(const SpectralData& s, double p, int order) {
  if (order < 0) throw std::invalid_argument("spectral_jet: order must be non-negative");
  const LatticeSamples& ls = s.samples();
  auto sum = [&](const std::vector<long>& n, const std::vector<double>& w) {
    long double r = 0, i = 0;
    for (std::size_t k = 0; k < n.size(); ++k) {
      const long double nd = static_cast<long double>(n[k]) * ls.delta;
      const long double arg = nd * p;
      long double mag = w[k];
      for (int j = 0; j < order; ++j) mag *= nd;
      // (-i)^order e^{-i arg}
      const long double ph = -arg - order * std::numbers::pi_v<long double> / 2;
      r += mag * cosl(ph);
      i += mag * sinl(ph);
    }
    return std::complex<double>(static_cast<double>(r), static_cast<double>(i));
  };
  return {sum(ls.n_even, ls.w_even), sum(ls.n_odd, ls.w_odd)};
}

StationaryPoints acoustic_points(const Dispersion& disp, double mu, double x, double t) {
  if (!(t > 0)) throw std::domain_error("acoustic_points: requires t > 0");
  const double c = disp.c(), ax = std::fabs(x);
  if (!(ax < c * t)) {
    std::ostringstream os;
    os << "acoustic_points: |x| = " << ax << " is not inside the front ct = " << c * t;
    throw NumericalError(os.str());
  }
  StationaryPoints sp;
  sp.branch = Branch::acoustic;
  sp.side = x >= 0 ? Front::right : Front::left;
  auto d1 = [&](double p) { return disp.omega1_smooth_jet(p).d1; };
  const Roots r = solve_monotone(d1, ax / t, 0.0, kPi / 2, "acoustic_points");
  sp.p = r.p;
  sp.residual = r.residual * t;
  // S2 = omega1(p2) t - p2 x for x >= 0 and S1 = p1 x + omega1(p1) t for x <= 0 coincide in |x|.
  sp.S = disp.omega1_smooth(sp.p) * t - sp.p * ax;
  sp.Psi = sp.S;
  sp.Theta = 0;
  sp.x_lo = x >= 0 ? 0.0 : -c * t;
  sp.x_hi = x >= 0 ? c * t : 0.0;
  (void)mu;
  return sp;
}

StationaryPoints optical_points(const Dispersion& disp, double mu, double x, double t) {
  if (!(t > 0)) throw std::domain_error("optical_points: requires t > 0");
  const double cs = disp.c_star(), ps = disp.p_star(), ax = std::fabs(x);
  if (!(ax < cs * t)) {
    std::ostringstream os;
    os << "optical_points: |x| = " << ax << " is not inside the front c*t = " << cs * t;
    throw NumericalError(os.str());
  }
  StationaryPoints sp;
  sp.branch = Branch::optical;
  sp.side = x >= 0 ? Front::right : Front::left;
  auto d1 = [&](double p) { return disp.omega2_jet(p).d1; };
  // x >= 0: x + omega2'(p) t = 0; x <= 0: x - omega2'(p) t = 0. Both give omega2' = -|x|/t.
  const Roots lo = solve_monotone(d1, -ax / t, 0.0, ps, "optical_points (p-)");
  const Roots hi = solve_monotone(d1, -ax / t, ps, kPi / 2, "optical_points (p+)");
  sp.p_minus = lo.p;
  sp.p_plus = hi.p;
  sp.residual = std::max(lo.residual, hi.residual) * t;
  const double w_m = disp.omega2(sp.p_minus), w_p = disp.omega2(sp.p_plus);
  if (x >= 0) {
    const double fm = sp.p_minus * x + w_m * t, fp = sp.p_plus * x + w_p * t;
    sp.Theta = 0.5 * (fp + fm);
    sp.Psi = 0.5 * (fm - fp);
    sp.x_lo = 0.0;
    sp.x_hi = cs * t;
  } else {
    const double fm = sp.p_minus * x - w_m * t, fp = sp.p_plus * x - w_p * t;
    sp.Theta = 0.5 * (fp + fm);
    sp.Psi = 0.5 * (fp - fm);
    sp.x_lo = -cs * t;
    sp.x_hi = 0.0;
  }
  (void)mu;
  return sp;
}

Vec2 acoustic_front_airy(const SpectralData& s, const Dispersion& disp, double x, double t, Front front,
                         const ShortwaveOptions& opts) {
  require_unit_delta(s, t, "acoustic_front_airy");
  const double mu = s.profile().mu(), c = disp.c(), qt = disp.q() * t;
  const double r = std::cbrt(mu / qt), w = envelope_width(mu, qt);
  const double d = front == Front::right ? x - c * t : x + c * t;
  const double z = front == Front::right ? -d / qt : d / qt;
  const double y = front == Front::right ? d / w : -d / w;
  auto f1 = [&](double zz) { return even_part(s, 0.0, zz); };
  auto f2 = [&](double zz) { return odd_part(s, 0.0, zz); };
  const Amp2 v1 = apply(disp.A(0.0), continued(f1, z, opts.acoustic_continuation));
  const Amp2 v2 = apply(disp.A(0.0), continued(f2, z, opts.acoustic_continuation));
  const AiryValue ai = airy(y);
  const std::complex<double> I(0.0, front == Front::right ? -r : r);
  return {r * re(v1.a * ai.ai + I * v2.a * ai.ai_prime), r * re(v1.b * ai.ai + I * v2.b * ai.ai_prime)};
}

Vec2 acoustic_uniform(const SpectralData& s, const Dispersion& disp, double x, double t,
                      const ShortwaveOptions& opts) {
  require_unit_delta(s, t, "acoustic_uniform");
  const double mu = s.profile().mu(), ct = disp.c() * t;
  const double w = envelope_width(mu, disp.q() * t), ax = std::fabs(x);
  const Front side = x >= 0 ? Front::right : Front::left;
  if (ax > ct + opts.margin_widths * w) return {0.0, 0.0};
  if (ax >= ct - opts.front_switch * t) return acoustic_front_airy(s, disp, x, t, side, opts);
  const StationaryPoints sp = acoustic_points(disp, mu, x, t);
  const double p = sp.p;
  const double amp = std::sqrt(2.0 * mu / (t * std::fabs(disp.omega1_smooth_jet(p).d2)));
  const Mat2 A = disp.A(p);
  const Amp2 v1 = apply(A, even_part(s, 0.0, p * p)) * amp;
  // Right: -i p V2; left: +i p V2.
  const Amp2 v2 = apply(A, odd_part(s, 0.0, p * p)) * (side == Front::right ? -amp * p : amp * p);
  const Vec2 r = airy_combination(v1, v2, 0.0, sp.S, mu);
  return r;
}

namespace {

// Front form around p*; with modal_inside the projector B(p) is kept under the even/odd
// parts instead of being frozen at p*, which is the front limit of the uniform formula.
Vec2 optical_front_impl(const SpectralData& s, const Dispersion& disp, double x, double t, Front front,
                        const ShortwaveOptions& opts, bool modal_inside) {
  const double mu = s.profile().mu(), cs = disp.c_star(), ps = disp.p_star(), qt = disp.q_star() * t;
  const double r = std::cbrt(mu / qt), w = envelope_width(mu, qt);
  const double d = front == Front::right ? x - cs * t : x + cs * t;
  const double eta = front == Front::right ? -d / qt : d / qt;
  const double y = front == Front::right ? d / w : -d / w;
  const double w2 = disp.omega2(ps);
  const double phase = front == Front::right ? ps * x + w2 * t : ps * x - w2 * t;
  Amp2 F1, F2;
  if (modal_inside) {
    auto g = [&](double p) { return apply(disp.B(p), vt(s, p)); };
    auto f1 = [&](double e) {
      const double rr = std::sqrt(e);
      return 0.5 * (g(ps - rr) + g(ps + rr));
    };
    auto f2 = [&](double e) {
      const double rr = std::max(std::sqrt(e), 1e-4);
      return (g(ps - rr) - g(ps + rr)) * (0.5 / rr);
    };
    F1 = continued(f1, eta, opts.optical_continuation);
    F2 = continued(f2, eta, opts.optical_continuation);
  } else {
    auto f1 = [&](double e) { return even_part(s, ps, e); };
    auto f2 = [&](double e) { return odd_part(s, ps, e) * -1.0; };  // (V(p*-r) - V(p*+r)) / 2r
    const Mat2 B = disp.B(ps);
    F1 = apply(B, continued(f1, eta, opts.optical_continuation));
    F2 = apply(B, continued(f2, eta, opts.optical_continuation));
  }
  const AiryValue ai = airy(y);
  const std::complex<double> e = std::polar(1.0, phase / mu);
  const std::complex<double> I(0.0, front == Front::right ? r : -r);
  return {2.0 * r * re(e * (F1.a * ai.ai + I * F2.a * ai.ai_prime)),
          2.0 * r * re(e * (F1.b * ai.ai + I * F2.b * ai.ai_prime))};
}

}  // namespace

Vec2 optical_front_airy(const SpectralData& s, const Dispersion& disp, double x, double t, Front front,
                        const ShortwaveOptions& opts) {
  require_unit_delta(s, t, "optical_front_airy");
  return optical_front_impl(s, disp, x, t, front, opts, false);
}

Vec2 optical_uniform(const SpectralData& s, const Dispersion& disp, double x, double t,
                     const ShortwaveOptions& opts) {
  require_unit_delta(s, t, "optical_uniform");
  const double mu = s.profile().mu(), cst = disp.c_star() * t;
  const double w = envelope_width(mu, disp.q_star() * t), ax = std::fabs(x);
  const Front side = x >= 0 ? Front::right : Front::left;
  if (ax > cst + opts.margin_widths * w) return {0.0, 0.0};
  if (ax >= cst - opts.front_switch * t) return optical_front_impl(s, disp, x, t, side, opts, true);
  const StationaryPoints sp = optical_points(disp, mu, x, t);
  if (sp.Psi < 0) {
    std::ostringstream os;
    os << "optical_uniform: Psi = " << sp.Psi << " < 0 at x = " << x;
    throw NumericalError(os.str());
  }
  // Maximum of the phase at p- for x >= 0 (Phi1'' = omega2'' t < 0), at p+ for x <= 0.
  const double pmax = side == Front::right ? sp.p_minus : sp.p_plus;
  const double pmin = side == Front::right ? sp.p_plus : sp.p_minus;
  auto g = [&](double p) {
    return apply(disp.B(p), vt(s, p)) * (1.0 / std::sqrt(t * std::fabs(disp.omega2_jet(p).d2)));
  };
  const Amp2 gmax = g(pmax), gmin = g(pmin);
  const double k = std::sqrt(2.0 * mu);
  return airy_combination((gmax + gmin) * k, (gmax - gmin) * k, sp.Theta, sp.Psi, mu);
}

const char* shortwave_method_name(ShortwaveMethod m) {
  switch (m) {
    case ShortwaveMethod::acoustic_front: return "acoustic_front";
    case ShortwaveMethod::acoustic_uniform: return "acoustic_uniform";
    case ShortwaveMethod::optical_front: return "optical_front";
    case ShortwaveMethod::optical_uniform: return "optical_uniform";
    case ShortwaveMethod::total: return "shortwave_total";
  }
  return "unknown";
}

WaveField shortwave_field(const SpectralData& s, const Dispersion& disp, const std::vector<double>& x,
                          double t, ShortwaveMethod method, const ShortwaveOptions& opts, int threads) {
  require_unit_delta(s, t, shortwave_method_name(method));
  WaveField f;
  f.x = x;
  f.t = t;
  f.method = shortwave_method_name(method);
  f.u.resize(x.size());
  f.v.resize(x.size());
  parallel_for(x.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const double xi = x[i];
      const Front side = xi >= 0 ? Front::right : Front::left;
      Vec2 r{};
      switch (method) {
        case ShortwaveMethod::acoustic_front: r = acoustic_front_airy(s, disp, xi, t, side, opts); break;
        case ShortwaveMethod::acoustic_uniform: r = acoustic_uniform(s, disp, xi, t, opts); break;
        case ShortwaveMethod::optical_front: r = optical_front_airy(s, disp, xi, t, side, opts); break;
        case ShortwaveMethod::optical_uniform: r = optical_uniform(s, disp, xi, t, opts); break;
        case ShortwaveMethod::total: {
          const Vec2 a = acoustic_uniform(s, disp, xi, t, opts), o = optical_uniform(s, disp, xi, t, opts);
          r = {a[0] + o[0], a[1] + o[1]};
          break;
        }
      }
      f.u[i] = r[0];
      f.v[i] = r[1];
    }
  });
  return f;
}

WaveField shortwave_total(const SpectralData& s, const Dispersion& disp, const std::vector<double>& x,
                          double t, const ShortwaveOptions& opts, int threads) {
  return shortwave_field(s, disp, x, t, ShortwaveMethod::total, opts, threads);
}

}  // namespace diatomic
