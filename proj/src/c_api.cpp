#include "diatomic/diatomic.h"

#include <cmath>
#include <limits>
#include <new>
#include <string>

#include "diatomic/airy.hpp"
#include "diatomic/dispersion.hpp"
#include "diatomic/errors.hpp"
#include "diatomic/scenario.hpp"

struct dw_dispersion {
  diatomic::Dispersion d;
};

struct dw_scenario {
  diatomic::Scenario s;
};

namespace {

thread_local std::string g_error;

dw_status fail(dw_status st, const std::string& msg) {
  g_error = msg;
  return st;
}

template <class F>
dw_status guard(F&& f) {
  g_error.clear();
  try {
    f();
    return DW_OK;
  } catch (const diatomic::ConfigError& e) {
    const std::string m = e.what();
    return fail(m.rfind("output:", 0) == 0 ? DW_IO_ERROR : DW_CONFIG_ERROR, m);
  } catch (const diatomic::NumericalError& e) {
    return fail(DW_NUMERICAL_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DW_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(DW_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DW_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DW_INTERNAL, e.what());
  } catch (...) {
    return fail(DW_INTERNAL, "unknown exception");
  }
}

diatomic::Scenario::Log logger(dw_message_fn fn, void* user) {
  if (!fn) return {};
  return [fn, user](const std::string& l) { fn(l.c_str(), user); };
}

}  // namespace

extern "C" {

const char* dw_last_error(void) { return g_error.c_str(); }

dw_status dw_dispersion_create(double gamma1, double gamma2, dw_dispersion** out) {
  if (!out) return fail(DW_INVALID_ARGUMENT, "dw_dispersion_create: out is NULL");
  *out = nullptr;
  return guard([&] { *out = new dw_dispersion{diatomic::Dispersion(gamma1, gamma2)}; });
}

dw_status dw_dispersion_from_masses(double m1, double m2, double K, double d, double L, dw_dispersion** out,
                                    double* h_out) {
  if (!out) return fail(DW_INVALID_ARGUMENT, "dw_dispersion_from_masses: out is NULL");
  *out = nullptr;
  return guard([&] {
    const diatomic::LatticeParams lp = diatomic::make_params(m1, m2, K, d, L);
    *out = new dw_dispersion{diatomic::Dispersion(lp)};
    if (h_out) *h_out = lp.h;
  });
}

dw_status dw_dispersion_constants(const dw_dispersion* d, dw_constants* out) {
  if (!d || !out) return fail(DW_INVALID_ARGUMENT, "dw_dispersion_constants: NULL argument");
  return guard([&] {
    *out = {d->d.gamma1(), d->d.gamma2(), d->d.c(),      d->d.q(),
            d->d.p_star(), d->d.c_star(), d->d.q_star(), d->d.omega_max()};
  });
}

dw_status dw_dispersion_omega(const dw_dispersion* d, int branch, double p, double* out) {
  if (!d || !out) return fail(DW_INVALID_ARGUMENT, "dw_dispersion_omega: NULL argument");
  if (branch != 1 && branch != 2) return fail(DW_INVALID_ARGUMENT, "dw_dispersion_omega: branch must be 1 or 2");
  return guard([&] { *out = branch == 1 ? d->d.omega1(p) : d->d.omega2(p); });
}

void dw_dispersion_destroy(dw_dispersion* d) { delete d; }

dw_status dw_airy(double z, double* ai, double* ai_prime) {
  if (!ai && !ai_prime) return fail(DW_INVALID_ARGUMENT, "dw_airy: both outputs are NULL");
  return guard([&] {
    const diatomic::AiryValue a = diatomic::airy(z);
    if (ai) *ai = a.ai;
    if (ai_prime) *ai_prime = a.ai_prime;
  });
}

dw_status dw_scenario_load(const char* config_path, dw_scenario** out) {
  if (!config_path || !out) return fail(DW_INVALID_ARGUMENT, "dw_scenario_load: NULL argument");
  *out = nullptr;
  return guard([&] { *out = new dw_scenario{diatomic::Scenario(diatomic::parse_config(config_path))}; });
}

dw_status dw_scenario_load_text(const char* config_text, dw_scenario** out) {
  if (!config_text || !out) return fail(DW_INVALID_ARGUMENT, "dw_scenario_load_text: NULL argument");
  *out = nullptr;
  return guard([&] { *out = new dw_scenario{diatomic::Scenario(diatomic::parse_config_text(config_text))}; });
}

dw_status dw_scenario_info_get(const dw_scenario* s, dw_scenario_info* out) {
  if (!s || !out) return fail(DW_INVALID_ARGUMENT, "dw_scenario_info_get: NULL argument");
  return guard([&] {
    const auto r = s->s.regime();
    out->h = s->s.h();
    out->mu = s->s.mu();
    out->delta = s->s.delta();
    out->ratio = r.ratio;
    out->regime = r.regime == diatomic::RegimeKind::weak_dispersion ? 0
                  : r.regime == diatomic::RegimeKind::wave_equation ? 1
                                                                     : 2;
  });
}

dw_status dw_scenario_set_output(dw_scenario* s, const char* dir) {
  if (!s) return fail(DW_INVALID_ARGUMENT, "dw_scenario_set_output: NULL scenario");
  if (!dir) return DW_OK;
  return guard([&] {
    diatomic::ScenarioConfig c = s->s.config();
    c.output_dir = dir;
    const int th = s->s.threads();
    s->s = diatomic::Scenario(std::move(c));
    s->s.set_threads(th);
  });
}

dw_status dw_scenario_set_threads(dw_scenario* s, int threads) {
  if (!s) return fail(DW_INVALID_ARGUMENT, "dw_scenario_set_threads: NULL scenario");
  if (threads < 0) return fail(DW_INVALID_ARGUMENT, "dw_scenario_set_threads: threads must be >= 0");
  s->s.set_threads(threads);
  return DW_OK;
}

dw_status dw_scenario_run_dispersion(dw_scenario* s, dw_message_fn fn, void* user) {
  if (!s) return fail(DW_INVALID_ARGUMENT, "dw_scenario_run_dispersion: NULL scenario");
  return guard([&] { s->s.cmd_dispersion(logger(fn, user)); });
}

dw_status dw_scenario_run_simulate(dw_scenario* s, dw_message_fn fn, void* user) {
  if (!s) return fail(DW_INVALID_ARGUMENT, "dw_scenario_run_simulate: NULL scenario");
  return guard([&] { s->s.cmd_simulate(logger(fn, user)); });
}

dw_status dw_scenario_run_compare(dw_scenario* s, dw_message_fn fn, void* user) {
  if (!s) return fail(DW_INVALID_ARGUMENT, "dw_scenario_run_compare: NULL scenario");
  return guard([&] { s->s.cmd_compare(logger(fn, user)); });
}

dw_status dw_scenario_evaluate(const dw_scenario* s, const char* method, double t, const double* x, size_t n,
                               double* u, double* v) {
  if (!s || !method || (n > 0 && (!x || !u || !v)))
    return fail(DW_INVALID_ARGUMENT, "dw_scenario_evaluate: NULL argument");
  return guard([&] {
    const std::vector<double> xs(x, x + n);
    const diatomic::WaveField f = s->s.evaluate(method, t, xs);
    if (f.x.size() == n) {
      for (size_t i = 0; i < n; ++i) {
        u[i] = f.u[i];
        v[i] = f.v[i];
      }
      return;
    }
    // ode: match requested positions to lattice sites.
    const double h = s->s.h();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (size_t i = 0; i < n; ++i) {
      u[i] = v[i] = nan;
      const double k = std::round(xs[i] / h);
      if (std::fabs(xs[i] - k * h) > 1e-9 * h || f.x.empty()) continue;
      const long idx = static_cast<long>(std::llround((xs[i] - f.x.front()) / h));
      if (idx < 0 || idx >= static_cast<long>(f.x.size())) continue;
      u[i] = f.u[static_cast<size_t>(idx)];
      v[i] = f.v[static_cast<size_t>(idx)];
    }
  });
}

void dw_scenario_destroy(dw_scenario* s) { delete s; }

}  // extern "C"
