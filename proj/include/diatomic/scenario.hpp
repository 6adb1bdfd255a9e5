#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "diatomic/dispersion.hpp"
#include "diatomic/initial_data.hpp"
#include "diatomic/longwave.hpp"
#include "diatomic/oracles.hpp"
#include "diatomic/shortwave.hpp"

namespace diatomic {

enum class MethodFamily { oracle, longwave, shortwave };

struct MethodInfo {
  std::string name;
  MethodFamily family;
};

// Fixed method registry.
const std::vector<MethodInfo>& method_registry();
const MethodInfo* find_method(const std::string& name);

struct ScenarioConfig {
  // Lattice: either masses (m1, m2, K, d, L) or direct (gamma1, gamma2); h optional for direct.
  bool from_masses = false;
  double m1 = 0, m2 = 0, K = 0, d = 0, L = 0;
  double gamma1 = 0, gamma2 = 0;
  double h = 0;  // 0 = not given

  std::string profile_kind = "gaussian";
  std::string table_path;
  double table_radius = 0;
  double mu = 0;     // 0 = not given
  double N = 0;      // 0 = not given; mu = N h
  double delta = 0;  // 0 = not given

  std::vector<double> times;
  bool has_x_window = false;
  double x_min = 0, x_max = 0;
  std::size_t points = 2001;
  std::vector<std::string> methods;

  std::vector<std::pair<std::string, std::string>> pairs;
  double window_factor = 10.0;

  std::size_t resolution = 201;
  std::string output_dir = "out";

  double rel_tol = 1e-8;
  Boundary boundary = Boundary::fixed;
  long n_sites = 0;  // 0 = automatic
  ShortwaveOptions shortwave;

  // Resolved key=value view in file order, for the output header.
  std::vector<std::pair<std::string, std::string>> echo;
};

// Parses an INI-style file; unknown sections or keys are configuration errors.
ScenarioConfig parse_config(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text, const std::string& origin = "<text>");

class Scenario {
 public:
  explicit Scenario(ScenarioConfig cfg);

  const ScenarioConfig& config() const { return cfg_; }
  const Dispersion& dispersion() const { return disp_; }
  const InitialProfile& profile() const { return *profile_; }
  const SpectralData& spectral() const;
  double h() const { return h_; }
  double mu() const { return mu_; }
  double delta() const { return delta_; }
  LongwaveRegime regime() const { return regime_; }

  void set_threads(int threads) { threads_ = threads; }
  int threads() const { return threads_; }

  // Header comment lines: resolved configuration, derived delta, regime and tolerances.
  std::vector<std::string> header() const;

  // Throws ConfigError when the method is unknown or incompatible with delta.
  void check_method(const std::string& method) const;
  // The ode method ignores x and returns the lattice sites inside [x_min, x_max].
  WaveField evaluate(const std::string& method, double t, const std::vector<double>& x) const;
  std::vector<double> run_grid(double t_max) const;
  // Lattice sites n h inside the run window.
  std::vector<double> site_grid() const;

  using Log = std::function<void(const std::string&)>;
  // Each writes into config().output_dir and returns the files written.
  std::vector<std::string> cmd_dispersion(const Log& log = {}) const;
  std::vector<std::string> cmd_simulate(const Log& log = {}) const;
  std::vector<std::string> cmd_compare(const Log& log = {}) const;

 private:
  WaveField run_ode(double t) const;
  ScenarioConfig cfg_;
  Dispersion disp_;
  std::shared_ptr<InitialProfile> profile_;
  mutable std::shared_ptr<SpectralData> spectral_;
  double h_ = 0, mu_ = 0, delta_ = 0;
  LongwaveRegime regime_;
  int threads_ = 0;
};

}  // namespace diatomic
