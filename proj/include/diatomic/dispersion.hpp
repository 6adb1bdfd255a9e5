#pragma once

#include <array>
#include <complex>
#include <utility>

namespace diatomic {

struct LatticeParams {
  double m1 = 0, m2 = 0, K = 0, d = 0, L = 0;
  double c0 = 0;
  double gamma1 = 0, gamma2 = 0;
  double h = 0;
};

// Physical constants -> dimensionless lattice (c0 from the harmonic-mean rule).
LatticeParams make_params(double m1, double m2, double K, double d, double L);

struct Mat2 {
  double a11 = 0, a12 = 0, a21 = 0, a22 = 0;

  std::array<double, 2> operator*(const std::array<double, 2>& v) const {
    return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]};
  }
  std::array<std::complex<double>, 2> operator*(
      const std::array<std::complex<double>, 2>& v) const {
    return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]};
  }
};

// Value and first three derivatives of a scalar function of p.
struct Jet {
  double v = 0, d1 = 0, d2 = 0, d3 = 0;
  double operator[](int k) const { return k == 0 ? v : k == 1 ? d1 : k == 2 ? d2 : d3; }
};

class Dispersion {
 public:
  Dispersion(double gamma1, double gamma2);
  explicit Dispersion(const LatticeParams& lp) : Dispersion(lp.gamma1, lp.gamma2) {}

  double gamma1() const { return g1_; }
  double gamma2() const { return g2_; }

  double C(double p) const;
  double G(double p) const;
  double J(double p) const;

  double omega1(double p) const;
  double omega2(double p) const;
  // Odd analytic continuation of omega1 through p = 0; |omega1_smooth| = omega1.
  double omega1_smooth(double p) const;

  Jet omega2_jet(double p) const;
  Jet omega1_smooth_jet(double p) const;

  // d^order/dp^order of omega_branch; order in {1,2,3}. Branch 1 throws at its kinks p = k*pi.
  double derivative(int branch, double p, int order) const;

  Mat2 A(double p) const;
  Mat2 B(double p) const;
  std::pair<Mat2, Mat2> modal_matrices(double p) const { return {A(p), B(p)}; }

  double c() const { return c_; }
  double q() const { return q_; }
  double p_star() const { return p_star_; }
  double c_star() const { return c_star_; }
  double q_star() const { return q_star_; }
  // Largest lattice frequency, omega2(0).
  double omega_max() const;

 private:
  Jet s_jet(double p) const;  // C(2p) and derivatives
  void critical_point();

  double g1_, g2_;
  double c_ = 0, q_ = 0, p_star_ = 0, c_star_ = 0, q_star_ = 0;
};

}  // namespace diatomic
