#pragma once

#include <array>
#include <complex>
#include <vector>

#include "diatomic/dispersion.hpp"
#include "diatomic/initial_data.hpp"
#include "diatomic/oracles.hpp"

namespace diatomic {

enum class Front { left, right };
enum class Branch { acoustic, optical };

using Vec2 = std::array<double, 2>;

// Complex amplitude pair (heavy, light).
struct Amp2 {
  std::complex<double> a, b;
  Amp2 operator+(const Amp2& o) const { return {a + o.a, b + o.b}; }
  Amp2 operator-(const Amp2& o) const { return {a - o.a, b - o.b}; }
  Amp2 operator*(double s) const { return {a * s, b * s}; }
  friend Amp2 operator*(double s, const Amp2& v) { return v * s; }
};

// 3 f(0) - 3 f(-z) + last * f(-2z); `last` = 1 is the quadratic extrapolation.
template <class F>
auto three_point_continue(F&& f, double z, double last = 1.0) {
  return 3.0 * f(0.0) - 3.0 * f(-z) + last * f(-2.0 * z);
}

struct StationaryPoints {
  Branch branch = Branch::acoustic;
  Front side = Front::right;
  double p = 0;                   // acoustic: p1 (left) or p2 (right)
  double p_minus = 0, p_plus = 0; // optical: p- < p* < p+
  double S = 0;                   // acoustic phase S1 / S2
  double Theta = 0, Psi = 0;
  double residual = 0;
  double x_lo = 0, x_hi = 0;      // validity window in x
};

struct ShortwaveOptions {
  // Coefficient of the f(-2z) term when continuing F_{1,2} beyond the optical front.
  double optical_continuation = 1.0;
  // Coefficient of the f(-2z) term for the acoustic amplitude functions.
  double acoustic_continuation = 1.0;
  // Beyond front + margin envelope widths the value is taken as zero.
  double margin_widths = 5.0;
  // Within front_switch * t of a front the front formula replaces the uniform one.
  double front_switch = 1e-8;
};

// x >= 0 gives the right-front points, x <= 0 the left-front ones; t > 0, |x| < ct (c*t).
StationaryPoints acoustic_points(const Dispersion& disp, double mu, double x, double t);
StationaryPoints optical_points(const Dispersion& disp, double mu, double x, double t);

// All evaluators require delta = 1 (mu = h) and t > 0.
Vec2 acoustic_front_airy(const SpectralData& s, const Dispersion& disp, double x, double t, Front front,
                         const ShortwaveOptions& opts = {});
Vec2 acoustic_uniform(const SpectralData& s, const Dispersion& disp, double x, double t,
                      const ShortwaveOptions& opts = {});
Vec2 optical_front_airy(const SpectralData& s, const Dispersion& disp, double x, double t, Front front,
                        const ShortwaveOptions& opts = {});
Vec2 optical_uniform(const SpectralData& s, const Dispersion& disp, double x, double t,
                     const ShortwaveOptions& opts = {});

enum class ShortwaveMethod { acoustic_front, acoustic_uniform, optical_front, optical_uniform, total };
const char* shortwave_method_name(ShortwaveMethod m);

// Front methods use the nearer front of their branch on each side of x = 0.
WaveField shortwave_field(const SpectralData& s, const Dispersion& disp, const std::vector<double>& x,
                          double t, ShortwaveMethod method, const ShortwaveOptions& opts = {},
                          int threads = 0);
WaveField shortwave_total(const SpectralData& s, const Dispersion& disp, const std::vector<double>& x,
                          double t, const ShortwaveOptions& opts = {}, int threads = 0);

// Semi-discrete transform pair and its p-derivatives at any real p.
Amp2 spectral_jet(const SpectralData& s, double p, int order);

}  // namespace diatomic
