#pragma once

#include <array>
#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace diatomic {

enum class ProfileKind { gaussian, sample_table };

class InitialProfile {
 public:
  // W(xi) = exp(-xi^2/2), self-dual with w_hat(p) = exp(-p^2/2).
  static InitialProfile gaussian(double mu, double delta);
  // Tabulated W(xi_j); values outside |xi| > decay_radius must be below 1e-12.
  static InitialProfile table(std::vector<double> xi, std::vector<double> w, double decay_radius,
                              double mu, double delta);
  // Two-column text file (xi, W); optional header line, '#' comments.
  static InitialProfile load_table(const std::string& path, double decay_radius, double mu,
                                   double delta);

  InitialProfile with_scales(double mu, double delta) const;

  ProfileKind kind() const { return kind_; }
  double mu() const { return mu_; }
  double delta() const { return delta_; }
  double h() const { return mu_ * delta_; }
  double decay_radius() const { return radius_; }

  double W(double xi) const;
  std::complex<double> w_hat(double p) const;
  // |w_hat(p)| < 1e-14 beyond this momentum.
  double w_hat_cutoff() const { return hat_cutoff_; }

 private:
  struct Table;
  InitialProfile() = default;
  void find_hat_cutoff();

  ProfileKind kind_ = ProfileKind::gaussian;
  double mu_ = 0, delta_ = 0, radius_ = 0, hat_cutoff_ = 0;
  std::shared_ptr<const Table> table_;
};

struct LatticeSamples {
  std::vector<long> n_even, n_odd;  // lattice indices
  std::vector<double> w_even, w_odd;
  double delta = 0;
};

// W(n delta) on even and odd sites, dropping values below 1e-14.
LatticeSamples sample_lattice(const InitialProfile& profile);

class SpectralData {
 public:
  explicit SpectralData(const InitialProfile& profile);

  const InitialProfile& profile() const { return profile_; }
  const LatticeSamples& samples() const { return samples_; }
  double delta() const { return samples_.delta; }
  double brillouin_halfwidth() const;
  std::size_t truncation_count() const { return samples_.w_even.size() + samples_.w_odd.size(); }
  // Sum of |W| over the sites dropped by truncation (estimated on a finite shell).
  double tail_bound() const { return tail_bound_; }

  // Semi-discrete transforms; p must lie in the Brillouin zone.
  std::complex<double> w1(double p) const;
  std::complex<double> w2(double p) const;
  // Same sums at any real p (periodic / antiperiodic extension).
  std::complex<double> w1_ext(double p) const;
  std::complex<double> w2_ext(double p) const;
  std::array<std::complex<double>, 2> both_ext(double p) const { return {w1_ext(p), w2_ext(p)}; }

  std::complex<double> w_hat(double p) const { return profile_.w_hat(p); }

  // W_which(x/mu) by quadrature of the inverse semi-discrete transform.
  double kws_interpolate(int which, double x) const;

 private:
  void check_zone(double p) const;

  InitialProfile profile_;
  LatticeSamples samples_;
  double tail_bound_ = 0;
};

std::complex<double> semi_discrete_ft(const SpectralData& s, int parity, double p);

struct PoissonGap {
  double w1_minus_w2 = 0;
  double w_minus_hat = 0;  // max over both species of |W~ - (1/delta) sqrt(pi/2) W^|
};

PoissonGap poisson_gap(const InitialProfile& profile, double delta, const std::vector<double>& p_grid);

// Truncated trigonometric forms of W~_{1,2} for the gaussian at delta = 1 (approximation).
double approx_unit_delta_gaussian(int which, double p);

}  // namespace diatomic
