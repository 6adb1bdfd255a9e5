#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "diatomic/dispersion.hpp"
#include "diatomic/initial_data.hpp"

namespace diatomic {

enum class Boundary { fixed, free_ends };

struct LatticeOptions {
  Boundary boundary = Boundary::fixed;
  // Time step is h / (steps_per_unit * omega_max).
  double steps_per_unit = 50.0;
  // Largest allowed |displacement| on the two outermost sites of each end (fixed ends only).
  double boundary_tol = 1e-8;
};

// Chain with 2*n_sites atoms, lattice index n = -n_sites .. n_sites-1.
// u[k] lives on n = 2k - n_sites (heavy, even), v[k] on n = 2k + 1 - n_sites (light, odd).
struct LatticeState {
  double t = 0;
  double h = 0;
  long n_sites = 0;
  std::vector<double> u, v, u_dot, v_dot;
  double energy_initial = 0;
  double max_energy_drift = 0;  // relative, sampled every step
  double boundary_max = 0;

  long index_even(std::size_t k) const { return 2 * static_cast<long>(k) - n_sites; }
  long index_odd(std::size_t k) const { return 2 * static_cast<long>(k) + 1 - n_sites; }
};

// Site count per species needed so the wave stays clear of the ends until t_end.
long required_sites(const Dispersion& disp, const InitialProfile& profile, double t_end);

LatticeState initial_state(const InitialProfile& profile, long n_sites);
LatticeState make_state(double h, std::vector<double> u0, std::vector<double> v0);

double lattice_energy(const Dispersion& disp, const LatticeState& s, Boundary boundary);

// Advances `start` by `duration` (zero initial velocity is not assumed).
LatticeState evolve(const Dispersion& disp, const LatticeState& start, double duration,
                    const LatticeOptions& opts = {});

LatticeState integrate_lattice(const Dispersion& disp, const InitialProfile& profile, double t_end,
                               long n_sites, const LatticeOptions& opts = {});

struct WaveField {
  std::vector<double> x, u, v;
  double t = 0;
  std::string method;
};

// Lattice state as a field on the sites; the species not present at a site is NaN.
WaveField lattice_field(const LatticeState& s, const std::string& method = "ode");

enum class Mode { full, acoustic, optical };
const char* mode_method_name(Mode m);

struct QuadratureOptions {
  double rel_tol = 1e-8;
  int threads = 0;
  double nodes_per_oscillation = 10.0;
  std::size_t max_nodes = std::size_t{1} << 23;
};

struct QuadratureFields {
  WaveField full, acoustic, optical;
  std::size_t nodes = 0;
  double error_estimate = 0;
};

// Brillouin-zone integral for all three modal splits on one shared node set.
QuadratureFields solve_quadrature_modes(const Dispersion& disp, const SpectralData& spectral,
                                        const std::vector<double>& x, double t,
                                        const QuadratureOptions& opts = {});

WaveField solve_quadrature(const Dispersion& disp, const SpectralData& spectral,
                           const std::vector<double>& x, double t, Mode mode,
                           const QuadratureOptions& opts = {});

struct Window {
  std::string name;
  double center = 0;
  double halfwidth = 0;
};

// Windows at -ct, +ct, -c*t, +c*t of full width width_factor * mu^{2/3} (q t)^{1/3} (q* for optical).
std::vector<Window> front_windows(const Dispersion& disp, double mu, double t, double width_factor = 10.0);

struct WindowError {
  Window window;
  double linf = 0;
  double peak = 0;  // max |b| inside the window
  std::size_t count = 0;
};

struct CompareReport {
  double linf = 0;
  double l2 = 0;  // root-mean-square over compared entries
  double peak = 0;
  std::size_t count = 0;
  std::vector<WindowError> windows;
};

// Errors of a against the reference b; NaN entries in either field are skipped.
CompareReport compare_fields(const WaveField& a, const WaveField& b,
                             const std::vector<Window>& windows = {});

void write_csv(std::ostream& os, const WaveField& f, const std::vector<std::string>& comments = {});

}  // namespace diatomic
