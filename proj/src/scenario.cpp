#include "diatomic/scenario.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "diatomic/errors.hpp"

namespace diatomic {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v, const char* f = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

double to_double(const std::string& field, const std::string& v) {
  std::size_t pos = 0;
  double d = 0;
  try {
    d = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || trim(v.substr(pos)) != "" || !std::isfinite(d))
    throw ConfigError("config: " + field + " = '" + v + "' is not a finite number");
  return d;
}

double positive(const std::string& field, const std::string& v) {
  const double d = to_double(field, v);
  if (!(d > 0)) throw ConfigError("config: " + field + " must be positive (got " + v + ")");
  return d;
}

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> k = {
      {"lattice", {"m1", "m2", "K", "d", "L", "gamma1", "gamma2", "h"}},
      {"profile", {"kind", "mu", "N", "delta", "table", "radius"}},
      {"run", {"times", "x_min", "x_max", "points", "methods", "rel_tol", "boundary", "n_sites"}},
      {"compare", {"pairs", "window_factor"}},
      {"dispersion", {"resolution"}},
      {"shortwave", {"optical_continuation", "acoustic_continuation", "margin_widths"}},
      {"output", {"dir"}}};
  return k;
}

}  // namespace

const std::vector<MethodInfo>& method_registry() {
  static const std::vector<MethodInfo> r = {
      {"quadrature_full", MethodFamily::oracle},   {"quadrature_ac", MethodFamily::oracle},
      {"quadrature_opt", MethodFamily::oracle},    {"ode", MethodFamily::oracle},
      {"uas_integral", MethodFamily::longwave},    {"gaussian_airy", MethodFamily::longwave},
      {"dalembert", MethodFamily::longwave},       {"acoustic_front", MethodFamily::shortwave},
      {"acoustic_uniform", MethodFamily::shortwave}, {"optical_front", MethodFamily::shortwave},
      {"optical_uniform", MethodFamily::shortwave}, {"shortwave_total", MethodFamily::shortwave}};
  return r;
}

const MethodInfo* find_method(const std::string& name) {
  for (const MethodInfo& m : method_registry())
    if (m.name == name) return &m;
  return nullptr;
}

ScenarioConfig parse_config_text(const std::string& text, const std::string& origin) {
  // '#' comment lines are accepted in addition to the ';' comments of the ini grammar.
  std::istringstream raw(text);
  std::ostringstream clean;
  for (std::string line; std::getline(raw, line);) {
    const std::string t = trim(line);
    clean << (t.rfind('#', 0) == 0 ? std::string() : line) << '\n';
  }
  boost::property_tree::ptree pt;
  try {
    std::istringstream in(clean.str());
    boost::property_tree::ini_parser::read_ini(in, pt);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("config " + origin + ": " + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  ScenarioConfig c;
  const auto& keys = known_keys();
  for (const auto& [sec, sub] : pt) {
    auto it = keys.find(sec);
    if (it == keys.end() || sub.empty()) throw ConfigError("config " + origin + ": unknown section [" + sec + "]");
    for (const auto& [key, val] : sub) {
      if (!it->second.count(key))
        throw ConfigError("config " + origin + ": unknown key '" + key + "' in [" + sec + "]");
      c.echo.emplace_back(sec + "." + key, trim(val.data()));
    }
  }
  auto get = [&](const std::string& sec, const std::string& key) -> std::string {
    const auto v = pt.get_optional<std::string>(boost::property_tree::ptree::path_type(sec + "." + key, '.'));
    return v ? trim(*v) : std::string();
  };
  auto name = [](const std::string& sec, const std::string& key) { return "[" + sec + "] " + key; };

  const bool masses = !get("lattice", "m1").empty() || !get("lattice", "m2").empty() || !get("lattice", "K").empty();
  const bool direct = !get("lattice", "gamma1").empty() || !get("lattice", "gamma2").empty();
  if (masses == direct)
    throw ConfigError("config: [lattice] needs either masses (m1, m2, K, d, L) or gamma1 and gamma2");
  if (masses) {
    c.from_masses = true;
    for (const char* k : {"m1", "m2", "K", "d", "L"})
      if (get("lattice", k).empty()) throw ConfigError("config: " + name("lattice", k) + " is required with masses");
    c.m1 = positive(name("lattice", "m1"), get("lattice", "m1"));
    c.m2 = positive(name("lattice", "m2"), get("lattice", "m2"));
    c.K = positive(name("lattice", "K"), get("lattice", "K"));
    c.d = positive(name("lattice", "d"), get("lattice", "d"));
    c.L = positive(name("lattice", "L"), get("lattice", "L"));
    if (!(c.m1 > c.m2)) throw ConfigError("config: [lattice] requires m1 > m2 (heavy species first)");
  } else {
    for (const char* k : {"gamma1", "gamma2"})
      if (get("lattice", k).empty()) throw ConfigError("config: " + name("lattice", k) + " is required");
    c.gamma1 = positive(name("lattice", "gamma1"), get("lattice", "gamma1"));
    c.gamma2 = positive(name("lattice", "gamma2"), get("lattice", "gamma2"));
    if (!(c.gamma1 < c.gamma2))
      throw ConfigError("config: [lattice] requires gamma1 < gamma2 (got gamma1 = " + get("lattice", "gamma1") +
                        ", gamma2 = " + get("lattice", "gamma2") + ")");
  }
  if (!get("lattice", "h").empty()) c.h = positive(name("lattice", "h"), get("lattice", "h"));

  c.profile_kind = get("profile", "kind").empty() ? "gaussian" : get("profile", "kind");
  if (c.profile_kind != "gaussian" && c.profile_kind != "table")
    throw ConfigError("config: [profile] kind must be gaussian or table (got '" + c.profile_kind + "')");
  if (c.profile_kind == "table") {
    c.table_path = get("profile", "table");
    if (c.table_path.empty()) throw ConfigError("config: [profile] table is required for kind = table");
    if (get("profile", "radius").empty()) throw ConfigError("config: [profile] radius is required for kind = table");
    c.table_radius = positive(name("profile", "radius"), get("profile", "radius"));
  }
  const bool has_mu = !get("profile", "mu").empty(), has_N = !get("profile", "N").empty();
  if (has_mu == has_N) throw ConfigError("config: [profile] needs exactly one of mu or N");
  if (has_mu) c.mu = positive(name("profile", "mu"), get("profile", "mu"));
  if (has_N) c.N = positive(name("profile", "N"), get("profile", "N"));
  if (!get("profile", "delta").empty()) c.delta = positive(name("profile", "delta"), get("profile", "delta"));

  for (const std::string& t : split_list(get("run", "times"))) {
    const double v = to_double(name("run", "times"), t);
    if (v < 0) throw ConfigError("config: [run] times must be non-negative (got " + t + ")");
    c.times.push_back(v);
  }
  const bool has_lo = !get("run", "x_min").empty(), has_hi = !get("run", "x_max").empty();
  if (has_lo != has_hi) throw ConfigError("config: [run] x_min and x_max must be given together");
  if (has_lo) {
    c.has_x_window = true;
    c.x_min = to_double(name("run", "x_min"), get("run", "x_min"));
    c.x_max = to_double(name("run", "x_max"), get("run", "x_max"));
    if (!(c.x_min < c.x_max)) throw ConfigError("config: [run] requires x_min < x_max");
  }
  if (!get("run", "points").empty()) {
    const double p = positive(name("run", "points"), get("run", "points"));
    if (p < 2 || p != std::floor(p)) throw ConfigError("config: [run] points must be an integer >= 2");
    c.points = static_cast<std::size_t>(p);
  }
  c.methods = split_list(get("run", "methods"));
  for (const std::string& m : c.methods)
    if (!find_method(m)) {
      std::string known;
      for (const MethodInfo& mi : method_registry()) known += " " + mi.name;
      throw ConfigError("config: [run] methods: unknown method '" + m + "'; known:" + known);
    }
  if (!get("run", "rel_tol").empty()) c.rel_tol = positive(name("run", "rel_tol"), get("run", "rel_tol"));
  if (!get("run", "boundary").empty()) {
    const std::string b = get("run", "boundary");
    if (b == "fixed") c.boundary = Boundary::fixed;
    else if (b == "free") c.boundary = Boundary::free_ends;
    else throw ConfigError("config: [run] boundary must be fixed or free (got '" + b + "')");
  }
  if (!get("run", "n_sites").empty()) {
    const double n = positive(name("run", "n_sites"), get("run", "n_sites"));
    if (n != std::floor(n) || static_cast<long>(n) % 2) throw ConfigError("config: [run] n_sites must be an even integer");
    c.n_sites = static_cast<long>(n);
  }

  for (const std::string& p : split_list(get("compare", "pairs"))) {
    const auto colon = p.find(':');
    if (colon == std::string::npos) throw ConfigError("config: [compare] pairs entry '" + p + "' is not a:b");
    const std::string a = p.substr(0, colon), b = p.substr(colon + 1);
    for (const std::string& m : {a, b})
      if (!find_method(m)) throw ConfigError("config: [compare] pairs: unknown method '" + m + "'");
    c.pairs.emplace_back(a, b);
  }
  if (!get("compare", "window_factor").empty())
    c.window_factor = positive(name("compare", "window_factor"), get("compare", "window_factor"));
  if (!get("dispersion", "resolution").empty()) {
    const double r = positive(name("dispersion", "resolution"), get("dispersion", "resolution"));
    if (r < 2 || r != std::floor(r)) throw ConfigError("config: [dispersion] resolution must be an integer >= 2");
    c.resolution = static_cast<std::size_t>(r);
  }
  if (!get("shortwave", "optical_continuation").empty())
    c.shortwave.optical_continuation = to_double(name("shortwave", "optical_continuation"), get("shortwave", "optical_continuation"));
  if (!get("shortwave", "acoustic_continuation").empty())
    c.shortwave.acoustic_continuation = to_double(name("shortwave", "acoustic_continuation"), get("shortwave", "acoustic_continuation"));
  if (!get("shortwave", "margin_widths").empty())
    c.shortwave.margin_widths = positive(name("shortwave", "margin_widths"), get("shortwave", "margin_widths"));
  if (!get("output", "dir").empty()) c.output_dir = get("output", "dir");
  return c;
}

ScenarioConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config_text(os.str(), path);
}

namespace {

Dispersion make_dispersion(const ScenarioConfig& c) {
  try {
    if (c.from_masses) return Dispersion(make_params(c.m1, c.m2, c.K, c.d, c.L));
    return Dispersion(c.gamma1, c.gamma2);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: [lattice] ") + e.what());
  }
}

}  // namespace

Scenario::Scenario(ScenarioConfig cfg) : cfg_(std::move(cfg)), disp_(make_dispersion(cfg_)) {
  double h = cfg_.h;
  if (h == 0 && cfg_.from_masses) h = cfg_.d / cfg_.L;
  double mu = cfg_.mu;
  if (cfg_.N > 0) {
    if (h == 0) throw ConfigError("config: [profile] N needs the lattice step (masses with d, L, or [lattice] h)");
    mu = cfg_.N * h;
  }
  if (h == 0) {
    if (cfg_.delta == 0) throw ConfigError("config: give [lattice] h or [profile] delta to fix the lattice step");
    h = mu * cfg_.delta;
  } else if (cfg_.delta > 0 && std::fabs(h / mu - cfg_.delta) > 1e-9 * cfg_.delta) {
    throw ConfigError("config: [profile] delta = " + fmt(cfg_.delta, "%g") + " contradicts h/mu = " + fmt(h / mu, "%g"));
  }
  if (!(mu > 0 && mu < 1)) throw ConfigError("config: [profile] mu must lie in (0, 1) (got " + fmt(mu, "%g") + ")");
  h_ = h;
  mu_ = mu;
  delta_ = h / mu;
  regime_ = classify_regime(h_, mu_);
  try {
    if (cfg_.profile_kind == "gaussian")
      profile_ = std::make_shared<InitialProfile>(InitialProfile::gaussian(mu_, delta_));
    else
      profile_ = std::make_shared<InitialProfile>(
          InitialProfile::load_table(cfg_.table_path, cfg_.table_radius, mu_, delta_));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: [profile] ") + e.what());
  }
}

const SpectralData& Scenario::spectral() const {
  if (!spectral_) {
    try {
      spectral_ = std::make_shared<SpectralData>(*profile_);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config: [profile] ") + e.what());
    }
  }
  return *spectral_;
}

std::vector<std::string> Scenario::header() const {
  std::vector<std::string> h;
  for (const auto& [k, v] : cfg_.echo) h.push_back("config " + k + " = " + v);
  h.push_back("derived gamma1 = " + fmt(disp_.gamma1()) + ", gamma2 = " + fmt(disp_.gamma2()));
  h.push_back("derived h = " + fmt(h_) + ", mu = " + fmt(mu_) + ", delta = " + fmt(delta_));
  h.push_back("derived h^2/mu^3 = " + fmt(regime_.ratio) + ", regime = " + regime_name(regime_.regime));
  h.push_back("tolerances quadrature rel_tol = " + fmt(cfg_.rel_tol) + ", ode step = h/(50 omega_max), boundary_tol = 1e-08");
  return h;
}

void Scenario::check_method(const std::string& method) const {
  const MethodInfo* m = find_method(method);
  if (!m) throw ConfigError("unknown method '" + method + "'");
  if (m->family == MethodFamily::longwave && delta_ > 0.1)
    throw ConfigError("method '" + method + "' is a long-wave formula and needs delta <= 0.1, but delta = h/mu = " +
                      fmt(delta_, "%g") + "; valid here: quadrature_full, quadrature_ac, quadrature_opt, ode" +
                      (std::fabs(delta_ - 1.0) <= 1e-12 ? ", acoustic_front, acoustic_uniform, optical_front, "
                                                          "optical_uniform, shortwave_total"
                                                        : ""));
  if (m->family == MethodFamily::shortwave && std::fabs(delta_ - 1.0) > 1e-12)
    throw ConfigError("method '" + method + "' is a short-wave formula and needs delta = 1, but delta = h/mu = " +
                      fmt(delta_, "%g") + "; valid here: quadrature_full, quadrature_ac, quadrature_opt, ode" +
                      (delta_ <= 0.1 ? ", uas_integral, gaussian_airy, dalembert" : ""));
  if (method == "gaussian_airy" && profile_->kind() != ProfileKind::gaussian)
    throw ConfigError("method 'gaussian_airy' needs [profile] kind = gaussian");
}

std::vector<double> Scenario::run_grid(double t_max) const {
  double lo = cfg_.x_min, hi = cfg_.x_max;
  if (!cfg_.has_x_window) {
    const double w = std::pow(mu_, 2.0 / 3.0) * std::cbrt(std::max(disp_.q(), disp_.q_star()) * std::max(t_max, 1e-12));
    const double X = std::max(disp_.c(), disp_.c_star()) * t_max + profile_->decay_radius() * mu_ + 10.0 * w;
    lo = -X;
    hi = X;
  }
  std::vector<double> x(cfg_.points);
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(x.size() - 1);
  return x;
}

std::vector<double> Scenario::site_grid() const {
  double t_max = 0;
  for (double t : cfg_.times) t_max = std::max(t_max, t);
  const std::vector<double> g = run_grid(t_max);
  std::vector<double> x;
  const long n0 = static_cast<long>(std::ceil(g.front() / h_ - 1e-9));
  const long n1 = static_cast<long>(std::floor(g.back() / h_ + 1e-9));
  if (n1 - n0 > 20000000) throw ConfigError("run window holds more than 2e7 lattice sites; narrow [run] x_min/x_max");
  for (long n = n0; n <= n1; ++n) x.push_back(static_cast<double>(n) * h_);
  return x;
}

WaveField Scenario::run_ode(double t) const {
  double t_max = t;
  for (double tt : cfg_.times) t_max = std::max(t_max, tt);
  long n = cfg_.n_sites > 0 ? cfg_.n_sites : required_sites(disp_, *profile_, t_max);
  const double steps = std::ceil(t * 50.0 * disp_.omega_max() / h_);
  if (2.0 * static_cast<double>(n) * steps > 2e11) {
    std::ostringstream os;
    os << "method 'ode' needs " << n << " sites per species and about " << steps
       << " time steps at h = " << h_ << "; this is intractable, use quadrature or a desk-scale h";
    throw ConfigError(os.str());
  }
  LatticeOptions lo;
  lo.boundary = cfg_.boundary;
  LatticeState s;
  try {
    s = integrate_lattice(disp_, *profile_, t, n, lo);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("[run] n_sites: ") + e.what());
  }
  WaveField all = lattice_field(s, "ode");
  const std::vector<double> g = run_grid(t_max);
  WaveField f;
  f.t = t;
  f.method = "ode";
  for (std::size_t i = 0; i < all.x.size(); ++i) {
    if (all.x[i] < g.front() - 1e-9 * h_ || all.x[i] > g.back() + 1e-9 * h_) continue;
    f.x.push_back(all.x[i]);
    f.u.push_back(all.u[i]);
    f.v.push_back(all.v[i]);
  }
  return f;
}

WaveField Scenario::evaluate(const std::string& method, double t, const std::vector<double>& x) const {
  check_method(method);
  if (method == "ode") return run_ode(t);
  QuadratureOptions qo;
  qo.rel_tol = cfg_.rel_tol;
  qo.threads = threads_;
  if (method == "quadrature_full") return solve_quadrature(disp_, spectral(), x, t, Mode::full, qo);
  if (method == "quadrature_ac") return solve_quadrature(disp_, spectral(), x, t, Mode::acoustic, qo);
  if (method == "quadrature_opt") return solve_quadrature(disp_, spectral(), x, t, Mode::optical, qo);
  WaveField f;
  f.x = x;
  f.t = t;
  f.method = method;
  if (method == "uas_integral") {
    f.u = uas_integral(*profile_, disp_, x, t, qo);
  } else if (method == "gaussian_airy") {
    if (!(t > 0)) throw NumericalError("gaussian_airy: requires t > 0; use uas_integral at t = 0");
    f.u.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) f.u[i] = uas_gaussian_airy(disp_, h_, mu_, x[i], t);
  } else if (method == "dalembert") {
    f.u.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) f.u[i] = uas_dalembert(*profile_, disp_, x[i], t);
  } else {
    if (!(t > 0)) throw NumericalError(method + ": short-wave formulas require t > 0");
    ShortwaveMethod m = ShortwaveMethod::total;
    if (method == "acoustic_front") m = ShortwaveMethod::acoustic_front;
    else if (method == "acoustic_uniform") m = ShortwaveMethod::acoustic_uniform;
    else if (method == "optical_front") m = ShortwaveMethod::optical_front;
    else if (method == "optical_uniform") m = ShortwaveMethod::optical_uniform;
    WaveField s = shortwave_field(spectral(), disp_, x, t, m, cfg_.shortwave, threads_);
    s.method = method;
    return s;
  }
  if (f.v.empty()) f.v = f.u;  // scalar long-wave profile drives both species
  return f;
}

namespace {

std::string prepare_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("output: cannot create directory '" + dir + "': " + ec.message());
  return dir;
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream os(path);
  if (!os) throw ConfigError("output: cannot write '" + path + "'");
  body(os);
  if (!os) throw ConfigError("output: write failed for '" + path + "'");
}

}  // namespace

std::vector<std::string> Scenario::cmd_dispersion(const Log& log) const {
  const std::string dir = prepare_dir(cfg_.output_dir);
  const std::string rep = dir + "/dispersion.txt", tab = dir + "/dispersion.csv";
  write_file(rep, [&](std::ostream& os) {
    for (const std::string& l : header()) os << "# " << l << '\n';
    os << "gamma1=" << fmt(disp_.gamma1()) << '\n' << "gamma2=" << fmt(disp_.gamma2()) << '\n'
       << "c=" << fmt(disp_.c()) << '\n' << "q=" << fmt(disp_.q()) << '\n'
       << "p_star=" << fmt(disp_.p_star()) << '\n' << "c_star=" << fmt(disp_.c_star()) << '\n'
       << "q_star=" << fmt(disp_.q_star()) << '\n' << "omega_max=" << fmt(disp_.omega_max()) << '\n'
       << "h=" << fmt(h_) << '\n' << "mu=" << fmt(mu_) << '\n' << "delta=" << fmt(delta_) << '\n'
       << "ratio=" << fmt(regime_.ratio) << '\n' << "regime=" << regime_name(regime_.regime) << '\n';
  });
  write_file(tab, [&](std::ostream& os) {
    for (const std::string& l : header()) os << "# " << l << '\n';
    os << "p,omega1,omega2\n";
    const std::size_t n = cfg_.resolution;
    for (std::size_t i = 0; i < n; ++i) {
      const double p = kPi / 2 * static_cast<double>(i) / static_cast<double>(n - 1);
      os << fmt(p) << ',' << fmt(disp_.omega1(p)) << ',' << fmt(disp_.omega2(p)) << '\n';
    }
  });
  if (log) {
    log("c=" + fmt(disp_.c(), "%.6f") + " q=" + fmt(disp_.q(), "%.6f") + " p*=" + fmt(disp_.p_star(), "%.6f") +
        " c*=" + fmt(disp_.c_star(), "%.6f") + " q*=" + fmt(disp_.q_star(), "%.6f"));
    log("wrote " + rep);
    log("wrote " + tab);
  }
  return {rep, tab};
}

std::vector<std::string> Scenario::cmd_simulate(const Log& log) const {
  if (cfg_.methods.empty()) throw ConfigError("config: [run] methods is empty");
  if (cfg_.times.empty()) throw ConfigError("config: [run] times is empty");
  for (const std::string& m : cfg_.methods) check_method(m);
  const std::string dir = prepare_dir(cfg_.output_dir);
  double t_max = 0;
  for (double t : cfg_.times) t_max = std::max(t_max, t);
  const std::vector<double> x = run_grid(t_max);
  std::vector<std::string> files;
  for (const std::string& m : cfg_.methods)
    for (double t : cfg_.times) {
      const WaveField f = evaluate(m, t, x);
      const std::string path = dir + "/" + m + "_t" + fmt(t, "%g") + ".csv";
      write_file(path, [&](std::ostream& os) { write_csv(os, f, header()); });
      files.push_back(path);
      if (log) log("wrote " + path);
    }
  return files;
}

std::vector<std::string> Scenario::cmd_compare(const Log& log) const {
  if (cfg_.pairs.empty()) throw ConfigError("config: [compare] pairs is empty; compare needs at least one a:b pair");
  if (cfg_.times.empty()) throw ConfigError("config: [run] times is empty");
  for (const auto& [a, b] : cfg_.pairs) {
    check_method(a);
    check_method(b);
  }
  const std::string dir = prepare_dir(cfg_.output_dir);
  double t_max = 0;
  for (double t : cfg_.times) t_max = std::max(t_max, t);
  std::vector<std::string> lines;
  for (double t : cfg_.times)
    for (const auto& [a, b] : cfg_.pairs) {
      const bool sites = a == "ode" || b == "ode";
      const std::vector<double> x = sites ? site_grid() : run_grid(t_max);
      const WaveField fa = evaluate(a, t, x), fb = evaluate(b, t, x);
      const CompareReport r = compare_fields(fa, fb, front_windows(disp_, mu_, t, cfg_.window_factor));
      const std::string key = a + ":" + b + "@" + fmt(t, "%g");
      lines.push_back(key + ".linf=" + fmt(r.linf));
      lines.push_back(key + ".l2=" + fmt(r.l2));
      lines.push_back(key + ".peak=" + fmt(r.peak));
      lines.push_back(key + ".count=" + std::to_string(r.count));
      for (const WindowError& w : r.windows) {
        lines.push_back(key + ".window." + w.window.name + ".linf=" + fmt(w.linf));
        lines.push_back(key + ".window." + w.window.name + ".peak=" + fmt(w.peak));
      }
      if (log) log(key + " linf=" + fmt(r.linf, "%.3e") + " l2=" + fmt(r.l2, "%.3e"));
    }
  const std::string path = dir + "/compare.txt";
  write_file(path, [&](std::ostream& os) {
    for (const std::string& l : header()) os << "# " << l << '\n';
    for (const std::string& l : lines) os << l << '\n';
  });
  if (log) log("wrote " + path);
  return {path};
}

}  // namespace diatomic
