#include "wdsaw/wdsaw.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "wdsaw/asymptotics.hpp"
#include "wdsaw/catalog.hpp"
#include "wdsaw/error.hpp"
#include "wdsaw/sampler.hpp"
#include "wdsaw/svg.hpp"

using namespace wdsaw;

struct wds_series {
  TruncatedSeries series;
};

struct wds_constants {
  FactorMoments moments;
  RationalInterval mu;
};

struct wds_roots {
  ComplexRootSet set;
};

struct wds_sampler {
  std::unique_ptr<BoltzmannSampler> sampler;
  std::string rng;
};

namespace {

thread_local std::string last_error;

wds_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return WDS_INVALID_ARGUMENT;
    case ErrorCode::zero_constant_term: return WDS_ZERO_CONSTANT_TERM;
    case ErrorCode::bad_constant_term: return WDS_BAD_CONSTANT_TERM;
    case ErrorCode::empty_series: return WDS_EMPTY_SERIES;
    case ErrorCode::unsupported_family: return WDS_UNSUPPORTED_FAMILY;
    case ErrorCode::limit_exceeded: return WDS_LIMIT_EXCEEDED;
    case ErrorCode::no_root_in_range: return WDS_NO_ROOT_IN_RANGE;
    case ErrorCode::non_convergence: return WDS_NON_CONVERGENCE;
    case ErrorCode::target_unreachable: return WDS_TARGET_UNREACHABLE;
    case ErrorCode::internal: return WDS_INTERNAL;
  }
  return WDS_INTERNAL;
}

wds_status fail(wds_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs f, mapping exceptions to status codes.
template <class F>
wds_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return WDS_OK;
  } catch (const NonConvergence& e) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", e.worst_residual());
    return fail(WDS_NON_CONVERGENCE, std::string(e.what()) + " (worst residual " + buf + ")");
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(WDS_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(WDS_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Writes both strings or neither.
void put_pair(const std::string& a, const std::string& b, char** lo, char** hi) {
  char* x = dup(a);
  char* y = nullptr;
  try {
    y = dup(b);
  } catch (...) {
    std::free(x);
    throw;
  }
  *lo = x;
  *hi = y;
}

const RationalInterval& quantity(const wds_constants* c, wds_quantity q) {
  switch (q) {
    case WDS_RHO: return c->moments.rho;
    case WDS_MU: return c->mu;
    case WDS_MEAN: return c->moments.mean;
    case WDS_VARIANCE: return c->moments.variance;
  }
  throw Error(ErrorCode::invalid_argument, "unknown quantity");
}

}  // namespace

extern "C" {

const char* wds_version(void) { return "1.0.0"; }

const char* wds_status_name(wds_status status) {
  switch (status) {
    case WDS_OK: return "ok";
    case WDS_INVALID_ARGUMENT: return "invalid_argument";
    case WDS_ZERO_CONSTANT_TERM: return "zero_constant_term";
    case WDS_BAD_CONSTANT_TERM: return "bad_constant_term";
    case WDS_EMPTY_SERIES: return "empty_series";
    case WDS_UNSUPPORTED_FAMILY: return "unsupported_family";
    case WDS_LIMIT_EXCEEDED: return "limit_exceeded";
    case WDS_NO_ROOT_IN_RANGE: return "no_root_in_range";
    case WDS_NON_CONVERGENCE: return "non_convergence";
    case WDS_TARGET_UNREACHABLE: return "target_unreachable";
    case WDS_INTERNAL: return "internal";
    case WDS_OUT_OF_MEMORY: return "out_of_memory";
  }
  return "unknown";
}

const char* wds_last_error(void) { return last_error.c_str(); }

void wds_string_free(char* s) { std::free(s); }

size_t wds_class_count(void) { return walk_classes().size(); }

wds_status wds_class_info(size_t i, const char** name, const char** model, int* has_series, const char** description) {
  return guarded([&] {
    require(i < walk_classes().size(), "class index out of range");
    const auto& c = walk_classes()[i];
    if (name) *name = c.name.data();
    if (model) *model = to_string(c.model).data();
    if (has_series) *has_series = c.has_series ? 1 : 0;
    if (description) *description = c.description.data();
  });
}

wds_status wds_series_create(const char* name, int order, wds_series** out) {
  return guarded([&] {
    require(name && out, "null argument");
    require(order >= 0, "order must be >= 0");
    auto s = std::make_unique<wds_series>();
    s->series = class_series(parse_walk_class(name), static_cast<std::size_t>(order));
    *out = s.release();
  });
}

void wds_series_free(wds_series* s) { delete s; }

wds_status wds_series_order(const wds_series* s, int* out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = static_cast<int>(s->series.order());
  });
}

wds_status wds_series_coefficient(const wds_series* s, int i, char** out) {
  return guarded([&] {
    require(s && out, "null argument");
    require(i >= 0 && static_cast<std::size_t>(i) <= s->series.order(), "index beyond the truncation order");
    *out = dup(s->series[static_cast<std::size_t>(i)].get_str());
  });
}

wds_status wds_oracle_counts(const char* name, int nmax, uint64_t* out, size_t len) {
  return guarded([&] {
    require(name && out, "null argument");
    require(nmax >= 0, "nmax must be >= 0");
    require(len >= static_cast<size_t>(nmax) + 1, "output buffer too short");
    auto counts = class_counts(parse_walk_class(name), nmax);
    for (std::size_t n = 0; n < counts.size(); ++n) out[n] = counts[n];
  });
}

wds_status wds_class_member(const char* name, const char* steps, int* out) {
  return guarded([&] {
    require(name && steps && out, "null argument");
    WalkClass c = parse_walk_class(name);
    Walk w = Walk::parse(steps);
    *out = is_self_avoiding(w) && class_member(c, w) ? 1 : 0;
  });
}

wds_status wds_constants_compute(const char* model, int n, wds_constants** out) {
  return guarded([&] {
    require(model && out, "null argument");
    auto c = std::make_unique<wds_constants>();
    c->moments = factor_moments(parse_model(model), n);
    c->mu = growth_constant(c->moments.rho);
    *out = c.release();
  });
}

void wds_constants_free(wds_constants* c) { delete c; }

wds_status wds_constants_decimal(const wds_constants* c, wds_quantity q, int digits, char** lo, char** hi) {
  return guarded([&] {
    require(c && lo && hi, "null argument");
    require(digits >= 0 && digits <= 1000, "digits must lie in [0, 1000]");
    auto [a, b] = quantity(c, q).decimal(digits);
    put_pair(a, b, lo, hi);
  });
}

wds_status wds_constants_exact(const wds_constants* c, wds_quantity q, char** lo, char** hi) {
  return guarded([&] {
    require(c && lo && hi, "null argument");
    const auto& r = quantity(c, q);
    put_pair(r.lo.get_str(), r.hi.get_str(), lo, hi);
  });
}

wds_status wds_roots_compute(int k, const char* family, double tolerance, wds_roots** out) {
  return guarded([&] {
    require(family && out, "null argument");
    require(tolerance >= 0, "tolerance must be >= 0");
    auto r = std::make_unique<wds_roots>();
    r->set = gk_roots(k, parse_family(family), tolerance);
    *out = r.release();
  });
}

void wds_roots_free(wds_roots* r) { delete r; }

size_t wds_roots_count(const wds_roots* r) { return r ? r->set.roots.size() : 0; }

wds_status wds_roots_get(const wds_roots* r, size_t i, double* re, double* im, double* residual) {
  return guarded([&] {
    require(r, "null argument");
    require(i < r->set.roots.size(), "root index out of range");
    if (re) *re = r->set.roots[i].real();
    if (im) *im = r->set.roots[i].imag();
    if (residual) *residual = r->set.residuals[i];
  });
}

wds_status wds_roots_max_residual(const wds_roots* r, double* out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = r->set.max_residual;
  });
}

wds_status wds_root_distance(int k, int* nonreal, double* max_distance, double* mean_distance, double* max_residual) {
  return guarded([&] {
    RootDistanceReport rep = root_distance_report(k);
    if (nonreal) *nonreal = rep.nonreal;
    if (max_distance) *max_distance = rep.max_distance;
    if (mean_distance) *mean_distance = rep.mean_distance;
    if (max_residual) *max_residual = rep.max_residual;
  });
}

wds_status wds_zeros_svg(const wds_roots* const* sets, size_t count, char** out) {
  return guarded([&] {
    require(out && (sets || count == 0), "null argument");
    std::vector<ComplexRootSet> all;
    for (size_t i = 0; i < count; ++i) {
      require(sets[i], "null root set");
      all.push_back(sets[i]->set);
    }
    *out = dup(zeros_svg(all, boundary_curve()));
  });
}

wds_status wds_sampler_tune(int target_n, double epsilon, uint64_t seed, int truncation, wds_sampler** out) {
  return guarded([&] {
    require(out, "null argument");
    auto s = std::make_unique<wds_sampler>();
    s->sampler = std::make_unique<BoltzmannSampler>(tune(target_n, epsilon, seed, truncation));
    s->rng = s->sampler->rng_name();
    *out = s.release();
  });
}

wds_status wds_sampler_create(double x, int target_n, double epsilon, uint64_t seed, wds_sampler** out) {
  return guarded([&] {
    require(out, "null argument");
    require(target_n >= 1, "target length must be >= 1");
    require(epsilon > 0 && epsilon < 1, "epsilon must lie in (0, 1)");
    auto s = std::make_unique<wds_sampler>();
    s->sampler = std::make_unique<BoltzmannSampler>(SamplerConfig{x, target_n, epsilon, seed});
    s->rng = s->sampler->rng_name();
    *out = s.release();
  });
}

void wds_sampler_free(wds_sampler* s) { delete s; }

wds_status wds_sampler_x(const wds_sampler* s, double* out) {
  return guarded([&] {
    require(s && out, "null argument");
    *out = s->sampler->config().x;
  });
}

const char* wds_sampler_rng_name(const wds_sampler* s) { return s ? s->rng.c_str() : ""; }

wds_status wds_sampler_bridge(wds_sampler* s, char** steps) {
  return guarded([&] {
    require(s && steps, "null argument");
    *steps = dup(s->sampler->weakly_bridge().to_string());
  });
}

wds_status wds_sampler_window(wds_sampler* s, char** steps, uint64_t* trials) {
  return guarded([&] {
    require(s && steps, "null argument");
    WindowSample w = s->sampler->in_window();
    *steps = dup(w.walk.to_string());
    if (trials) *trials = w.trials;
  });
}

wds_status wds_sampler_stats(const wds_sampler* s, uint64_t* trials, uint64_t* redraws, uint64_t* steps) {
  return guarded([&] {
    require(s, "null argument");
    const SamplerStats& st = s->sampler->stats();
    if (trials) *trials = st.trials;
    if (redraws) *redraws = st.redraws;
    if (steps) *steps = st.steps;
  });
}

wds_status wds_walk_svg(const char* steps, char** out) {
  return guarded([&] {
    require(steps && out, "null argument");
    Walk w = Walk::parse(steps);
    require(is_self_avoiding(w), "walk is not self-avoiding");
    *out = dup(walk_svg(w));
  });
}

}  // extern "C"
