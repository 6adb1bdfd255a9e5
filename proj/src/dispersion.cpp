#include "diatomic/dispersion.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "diatomic/errors.hpp"

namespace diatomic {

namespace {
constexpr double kPi = std::numbers::pi;
}

LatticeParams make_params(double m1, double m2, double K, double d, double L) {
  if (!(m1 > 0) || !(m2 > 0) || !(K > 0) || !(d > 0) || !(L > 0))
    throw std::invalid_argument("make_params: masses, K, d and L must be positive");
  if (!(m1 > m2))
    throw std::invalid_argument("make_params: requires m1 > m2 (heavy species first)");
  LatticeParams lp;
  lp.m1 = m1;
  lp.m2 = m2;
  lp.K = K;
  lp.d = d;
  lp.L = L;
  const double c1sq = K * d * d / m1;
  const double c2sq = K * d * d / m2;
  const double c0sq = 2.0 * c1sq * c2sq / (c1sq + c2sq);
  lp.c0 = std::sqrt(c0sq);
  lp.gamma1 = c1sq / c0sq;
  lp.gamma2 = c2sq / c0sq;
  lp.h = d / L;
  return lp;
}

Dispersion::Dispersion(double gamma1, double gamma2) : g1_(gamma1), g2_(gamma2) {
  if (!(gamma1 > 0) || !(gamma2 > 0))
    throw std::invalid_argument("Dispersion: gamma1 and gamma2 must be positive");
  if (!(gamma1 < gamma2))
    throw std::invalid_argument("Dispersion: requires gamma1 < gamma2");
  const double s = g1_ + g2_;
  c_ = std::sqrt(2.0 * g1_ * g2_ / s);
  q_ = c_ * (g1_ * g1_ - g1_ * g2_ + g2_ * g2_) / (2.0 * s * s);
  critical_point();
}

double Dispersion::C(double p) const {
  return std::sqrt(g1_ * g1_ + g2_ * g2_ + 2.0 * g1_ * g2_ * std::cos(p));
}

double Dispersion::G(double p) const { return g2_ - g1_ + C(p); }

double Dispersion::J(double p) const {
  const double g = G(2.0 * p);
  const double cp = std::cos(p);
  return g * g + 4.0 * g1_ * g2_ * cp * cp;
}

double Dispersion::omega1(double p) const { return std::fabs(omega1_smooth(p)); }

double Dispersion::omega2(double p) const { return std::sqrt(g1_ + g2_ + C(2.0 * p)); }

// omega1 * omega2 = 2 sqrt(g1 g2) |sin p|, which avoids the cancellation in g1+g2-C(2p).
double Dispersion::omega1_smooth(double p) const {
  return 2.0 * std::sqrt(g1_ * g2_) * std::sin(p) / omega2(p);
}

Jet Dispersion::s_jet(double p) const {
  const double k = 2.0 * g1_ * g2_;
  const double c2 = std::cos(2.0 * p), s2 = std::sin(2.0 * p);
  const double g = g1_ * g1_ + g2_ * g2_ + k * c2;
  const double g1d = -2.0 * k * s2, g2d = -4.0 * k * c2, g3d = 8.0 * k * s2;
  Jet s;
  s.v = std::sqrt(g);
  s.d1 = g1d / (2.0 * s.v);
  s.d2 = (g2d - 2.0 * s.d1 * s.d1) / (2.0 * s.v);
  s.d3 = (g3d - 6.0 * s.d1 * s.d2) / (2.0 * s.v);
  return s;
}

Jet Dispersion::omega2_jet(double p) const {
  const Jet s = s_jet(p);
  const double f = g1_ + g2_ + s.v;
  Jet w;
  w.v = std::sqrt(f);
  w.d1 = s.d1 / (2.0 * w.v);
  w.d2 = (s.d2 - 2.0 * w.d1 * w.d1) / (2.0 * w.v);
  w.d3 = (s.d3 - 6.0 * w.d1 * w.d2) / (2.0 * w.v);
  return w;
}

Jet Dispersion::omega1_smooth_jet(double p) const {
  const Jet w = omega2_jet(p);
  const double k = 2.0 * std::sqrt(g1_ * g2_);
  const double sp = std::sin(p), cp = std::cos(p);
  const double a0 = k * sp, a1 = k * cp, a2 = -k * sp, a3 = -k * cp;
  Jet o;
  o.v = a0 / w.v;
  o.d1 = (a1 - o.v * w.d1) / w.v;
  o.d2 = (a2 - 2.0 * o.d1 * w.d1 - o.v * w.d2) / w.v;
  o.d3 = (a3 - 3.0 * o.d2 * w.d1 - 3.0 * o.d1 * w.d2 - o.v * w.d3) / w.v;
  return o;
}

double Dispersion::derivative(int branch, double p, int order) const {
  if (order < 1 || order > 3) throw std::invalid_argument("derivative: order must be 1, 2 or 3");
  if (branch == 2) return omega2_jet(p)[order];
  if (branch != 1) throw std::invalid_argument("derivative: branch must be 1 or 2");
  const double sp = std::sin(p);
  if (sp == 0.0 || p == 0.0) {
    std::ostringstream os;
    os << "derivative: omega1 has a kink at p = " << p << "; use a one-sided limit";
    throw std::domain_error(os.str());
  }
  const double sgn = sp > 0 ? 1.0 : -1.0;
  return sgn * omega1_smooth_jet(p)[order];
}

Mat2 Dispersion::A(double p) const {
  const double g = G(2.0 * p);
  const double cp = std::cos(p);
  const double j = g * g + 4.0 * g1_ * g2_ * cp * cp;
  return {g * g / j, 2.0 * g1_ * g * cp / j, 2.0 * g2_ * g * cp / j, 4.0 * g1_ * g2_ * cp * cp / j};
}

Mat2 Dispersion::B(double p) const {
  const double g = G(2.0 * p);
  const double cp = std::cos(p);
  const double j = g * g + 4.0 * g1_ * g2_ * cp * cp;
  return {4.0 * g1_ * g2_ * cp * cp / j, -2.0 * g1_ * g * cp / j, -2.0 * g2_ * g * cp / j, g * g / j};
}

double Dispersion::omega_max() const { return std::sqrt(2.0 * (g1_ + g2_)); }

void Dispersion::critical_point() {
  auto f = [this](double p) { return omega2_jet(p).d2; };
  double a = 0.05, b = kPi / 2 - 0.05;
  double fa = f(a), fb = f(b);
  if (!(fa < 0 && fb > 0))
    throw NumericalError("critical_point: omega2'' is not bracketed on [0.05, pi/2-0.05]");
  while (b - a > 1e-6) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm < 0) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  // Secant refinement, kept inside the bracket.
  double x0 = a, x1 = b, f0 = fa, f1 = fb;
  for (int it = 0; it < 50; ++it) {
    double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!(x2 > a && x2 < b)) x2 = 0.5 * (a + b);
    const double f2 = f(x2);
    if (f2 < 0) a = x2; else b = x2;
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
    if (std::fabs(x1 - x0) < 1e-12 || f2 == 0.0) break;
  }
  p_star_ = x1;
  const Jet w = omega2_jet(p_star_);
  c_star_ = -w.d1;
  q_star_ = w.d3 / 2.0;
}

}  // namespace diatomic
