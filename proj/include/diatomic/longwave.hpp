#pragma once

#include <functional>
#include <vector>

#include "diatomic/dispersion.hpp"
#include "diatomic/initial_data.hpp"
#include "diatomic/oracles.hpp"

namespace diatomic {

enum class RegimeKind { weak_dispersion, wave_equation, outside_band };

struct LongwaveRegime {
  double h = 0, mu = 0, ratio = 0;  // ratio = h^2 / mu^3
  RegimeKind regime = RegimeKind::outside_band;
};

LongwaveRegime classify_regime(double h, double mu, double band_lo = 0.1, double band_hi = 10.0);
const char* regime_name(RegimeKind r);

// (1/sqrt(2 pi)) Re \int w_hat(p) e^{ipx/mu} exp(i t (c|p|/mu - q h^2 p^2|p|/(3 mu^3))) dp,
// truncated where |w_hat| < 1e-14 and split at p = 0.
double uas_integral(const InitialProfile& profile, const Dispersion& disp, double x, double t);
std::vector<double> uas_integral(const InitialProfile& profile, const Dispersion& disp,
                                 const std::vector<double>& x, double t,
                                 const QuadratureOptions& opts = {});

// Closed form of uas_integral for the gaussian w_hat(p) = exp(-p^2/2); t > 0.
double uas_gaussian_airy(const Dispersion& disp, double h, double mu, double x, double t);

// Half-sum of translated profiles.
double uas_dalembert(const InitialProfile& profile, const Dispersion& disp, double x, double t);

enum class PdeForm { wave, weak_dispersion };

struct PdeResidual {
  double max_residual = 0;
  double scale = 0;  // max |U_XX| over the grid
  double normalized = 0;
};

// Finite-difference residual in X = x/mu, tau = c t/mu of
// U_tautau = U_XX [+ (2/3)(q/c) delta^2 U_XXXX + (1/9)(q/c)^2 delta^4 U_XXXXXX].
PdeResidual residual_pde_check(const std::function<double(double, double)>& field,
                               const std::vector<double>& x_grid, double t, const Dispersion& disp,
                               double h, double mu, PdeForm form, double step = 0.05);

}  // namespace diatomic
