#include "diatomic/airy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diatomic {

namespace {

constexpr long double kC1 = 0.355028053887817239260063186004183176L;
constexpr long double kC2 = 0.258819403792806798405183560189203963L;
constexpr double kSeriesMaxNeg = 8.0;
constexpr double kSeriesMaxPos = 6.0;

// Maclaurin series in long double; Ai = c1 f - c2 g.
AiryValue series(double zd) {
  const long double z = zd;
  const long double z3 = z * z * z;
  long double f = 1, g = z, fp = 0, gp = 1;
  long double tf = 1, tg = z, tfp = z * z / 2, tgp = 1;
  fp = tfp;
  for (int k = 1; k < 200; ++k) {
    tf *= z3 / ((3.0L * k - 1) * (3.0L * k));
    tg *= z3 / ((3.0L * k) * (3.0L * k + 1));
    tgp *= z3 / ((3.0L * k - 2) * (3.0L * k));
    f += tf;
    g += tg;
    gp += tgp;
    if (k >= 2) {
      tfp *= z3 / (3.0L * (k - 1) * (3.0L * k - 1));
      fp += tfp;
    }
    const long double mag = fabsl(tf) + fabsl(tg) + fabsl(tfp) + fabsl(tgp);
    if (k > 3 && mag < 1e-24L) break;
  }
  AiryValue r;
  r.z = zd;
  r.ai = static_cast<double>(kC1 * f - kC2 * g);
  r.ai_prime = static_cast<double>(kC1 * fp - kC2 * gp);
  return r;
}

// Sums of the standard u_k, v_k asymptotic coefficients with alternating or
// even/odd selection, truncated at the smallest term.
struct AsymSums {
  double u_even = 0, u_odd = 0, v_even = 0, v_odd = 0;  // (-1)^k weighted
  double u_alt = 0, v_alt = 0;
};

AsymSums asym_sums(double zeta) {
  AsymSums s;
  double u = 1.0, v = 1.0;
  double zpow = 1.0;
  double last = 1e300;
  s.u_alt = 1.0;
  s.v_alt = 1.0;
  s.u_even = 1.0;
  s.v_even = 1.0;
  for (int k = 1; k < 60; ++k) {
    u *= (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / ((2.0 * k - 1) * 216.0 * k);
    v = -(6.0 * k + 1) / (6.0 * k - 1) * u;
    zpow /= zeta;
    const double tu = u * zpow, tv = v * zpow;
    const double mag = std::fabs(tu) + std::fabs(tv);
    if (mag > last) break;
    last = mag;
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    s.u_alt += sgn * tu;
    s.v_alt += sgn * tv;
    // Even and odd parts with alternating signs in k/2.
    const int m = k / 2;
    const double sm = (m % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      s.u_even += sm * tu;
      s.v_even += sm * tv;
    } else {
      s.u_odd += sm * tu;
      s.v_odd += sm * tv;
    }
    if (mag < 1e-18) break;
  }
  return s;
}

AiryValue positive_scaled_asym(double z) {
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const double q = std::pow(z, 0.25);
  const AsymSums s = asym_sums(zeta);
  const double norm = 0.5 / std::sqrt(std::numbers::pi);
  return {z, norm / q * s.u_alt, -norm * q * s.v_alt};
}

AiryValue negative_asym(double z) {
  const double x = -z;
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  const double q = std::pow(x, 0.25);
  const AsymSums s = asym_sums(zeta);
  const double th = zeta - std::numbers::pi / 4;
  const double c = std::cos(th), sn = std::sin(th);
  const double rp = 1.0 / std::sqrt(std::numbers::pi);
  AiryValue r;
  r.z = z;
  r.ai = rp / q * (c * s.u_even + sn * s.u_odd);
  r.ai_prime = rp * q * (sn * s.v_even - c * s.v_odd);
  return r;
}

}  // namespace

AiryValue airy_scaled(double z) {
  if (z > kSeriesMaxPos) return positive_scaled_asym(z);
  if (z < -kSeriesMaxNeg) return negative_asym(z);
  AiryValue r = series(z);
  if (z > 0) {
    const double e = std::exp(2.0 / 3.0 * z * std::sqrt(z));
    r.ai *= e;
    r.ai_prime *= e;
  }
  return r;
}

AiryValue airy(double z) {
  if (z > kSeriesMaxPos) {
    AiryValue r = positive_scaled_asym(z);
    const double e = std::exp(-2.0 / 3.0 * z * std::sqrt(z));
    r.ai *= e;
    r.ai_prime *= e;
    return r;
  }
  if (z < -kSeriesMaxNeg) return negative_asym(z);
  return series(z);
}

double airy_ai(double z) { return airy(z).ai; }
double airy_ai_prime(double z) { return airy(z).ai_prime; }

std::complex<double> envelope_A(double y, int sign) {
  if (!(y > 0)) throw std::domain_error("envelope_A: requires y > 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("envelope_A: sign must be +1 or -1");
  const double Y = 1.5 * y;
  const AiryValue a = airy(-std::pow(Y, 2.0 / 3.0));
  const double sp = std::sqrt(std::numbers::pi);
  return {sp * std::pow(Y, 1.0 / 6.0) * a.ai, sign * sp * std::pow(Y, -1.0 / 6.0) * a.ai_prime};
}

}  // namespace diatomic
