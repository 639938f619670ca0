// Command-line front end. Talks to the library only through wdsaw.h.

#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wdsaw/wdsaw.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitInternal = 4;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(wds_status s) {
  switch (s) {
    case WDS_OK: return kExitOk;
    case WDS_NON_CONVERGENCE:
    case WDS_NO_ROOT_IN_RANGE:
    case WDS_TARGET_UNREACHABLE: return kExitNumeric;
    case WDS_INTERNAL:
    case WDS_OUT_OF_MEMORY: return kExitInternal;
    default: return kExitUsage;
  }
}

void check(wds_status s) {
  if (s != WDS_OK) throw Failure{exit_code_for(s), std::string(wds_status_name(s)) + ": " + wds_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  wds_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using SeriesPtr = std::unique_ptr<wds_series, Deleter<wds_series, wds_series_free>>;
using ConstantsPtr = std::unique_ptr<wds_constants, Deleter<wds_constants, wds_constants_free>>;
using RootsPtr = std::unique_ptr<wds_roots, Deleter<wds_roots, wds_roots_free>>;
using SamplerPtr = std::unique_ptr<wds_sampler, Deleter<wds_sampler, wds_sampler_free>>;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Globals {
  bool no_timestamp = false;
  std::string output;
};

std::string timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json with_header(const Globals& g, const std::string& command) {
  json j;
  j["command"] = command;
  j["version"] = wds_version();
  if (!g.no_timestamp) j["generated_at"] = timestamp();
  return j;
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(g.output, std::ios::binary);
  if (!f) throw Failure{kExitUsage, "cannot open output file " + g.output};
  f << text;
}

void emit_json(const Globals& g, const json& j) { emit(g, j.dump(2) + "\n"); }

int default_truncation() {
  const char* env = std::getenv("WDSAW_TRUNCATION");
  if (!env || !*env) return 300;
  char* end = nullptr;
  errno = 0;
  long v = std::strtol(env, &end, 10);
  if (*end || errno || v < 2 || v > 100000)
    throw Failure{kExitUsage, std::string("WDSAW_TRUNCATION must be an integer in [2, 100000], got '") + env + "'"};
  return static_cast<int>(v);
}

std::string class_model(const std::string& name) {
  for (size_t i = 0; i < wds_class_count(); ++i) {
    const char *n = nullptr, *m = nullptr;
    check(wds_class_info(i, &n, &m, nullptr, nullptr));
    if (name == n) return m;
  }
  throw Failure{kExitUsage, "unknown class '" + name + "'"};
}

bool class_has_series(const std::string& name) {
  for (size_t i = 0; i < wds_class_count(); ++i) {
    const char* n = nullptr;
    int has = 0;
    check(wds_class_info(i, &n, nullptr, &has, nullptr));
    if (name == n) return has != 0;
  }
  return false;
}

// ---- count and check --------------------------------------------------

struct CountRow {
  int n;
  std::string coefficient;  // empty when the class has no series
  std::uint64_t oracle;
};

std::vector<CountRow> count_rows(const std::string& cls, int max_n) {
  std::vector<std::uint64_t> oracle(static_cast<size_t>(max_n) + 1);
  check(wds_oracle_counts(cls.c_str(), max_n, oracle.data(), oracle.size()));
  SeriesPtr series;
  if (class_has_series(cls)) {
    wds_series* s = nullptr;
    check(wds_series_create(cls.c_str(), max_n, &s));
    series.reset(s);
  }
  std::vector<CountRow> rows;
  for (int n = 0; n <= max_n; ++n) {
    CountRow r{n, "", oracle[static_cast<size_t>(n)]};
    if (series) {
      char* c = nullptr;
      check(wds_series_coefficient(series.get(), n, &c));
      r.coefficient = take(c);
    }
    rows.push_back(r);
  }
  return rows;
}

std::string match_of(const CountRow& r) {
  if (r.coefficient.empty()) return "";
  return r.coefficient == std::to_string(r.oracle) ? "yes" : "no";
}

const char* kCountHeader = "n,class,model,coefficient,oracle,match\n";

void csv_rows(std::ostringstream& out, const std::string& cls, const std::string& model,
              const std::vector<CountRow>& rows) {
  for (const auto& r : rows)
    out << r.n << ',' << cls << ',' << model << ',' << r.coefficient << ',' << r.oracle << ',' << match_of(r) << '\n';
}

json json_rows(const std::vector<CountRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["n"] = r.n;
    j["coefficient"] = r.coefficient.empty() ? json(nullptr) : json(r.coefficient);
    j["oracle"] = r.oracle;
    j["match"] = r.coefficient.empty() ? json(nullptr) : json(match_of(r) == "yes");
    arr.push_back(j);
  }
  return arr;
}

int run_count(const Globals& g, const std::string& cls, int max_n, const std::string& format) {
  std::string model = class_model(cls);
  auto rows = count_rows(cls, max_n);
  if (format == "json") {
    json j = with_header(g, "count");
    j["class"] = cls;
    j["model"] = model;
    j["max_n"] = max_n;
    j["rows"] = json_rows(rows);
    emit_json(g, j);
  } else if (format == "csv") {
    std::ostringstream out;
    out << kCountHeader;
    csv_rows(out, cls, model, rows);
    emit(g, out.str());
  } else {
    std::ostringstream out;
    out << "class " << cls << " (" << model << ")\n";
    out << "n\tcoefficient\toracle\tmatch\n";
    for (const auto& r : rows)
      out << r.n << '\t' << (r.coefficient.empty() ? "-" : r.coefficient) << '\t' << r.oracle << '\t'
          << (r.coefficient.empty() ? "-" : match_of(r)) << '\n';
    emit(g, out.str());
  }
  return kExitOk;
}

int run_check(const Globals& g, int max_n, const std::string& format) {
  std::ostringstream csv, text;
  csv << kCountHeader;
  json classes = json::array();
  bool all = true;
  for (size_t i = 0; i < wds_class_count(); ++i) {
    const char *name = nullptr, *model = nullptr;
    int has = 0;
    check(wds_class_info(i, &name, &model, &has, nullptr));
    if (!has) continue;
    auto rows = count_rows(name, max_n);
    bool ok = true;
    for (const auto& r : rows) ok = ok && match_of(r) == "yes";
    all = all && ok;
    csv_rows(csv, name, model, rows);
    text << name << "\t" << model << "\tn<=" << max_n << "\t" << (ok ? "ok" : "MISMATCH") << '\n';
    json c;
    c["class"] = name;
    c["model"] = model;
    c["match"] = ok;
    c["rows"] = json_rows(rows);
    classes.push_back(c);
  }
  if (format == "json") {
    json j = with_header(g, "check");
    j["max_n"] = max_n;
    j["all_match"] = all;
    j["classes"] = classes;
    emit_json(g, j);
  } else if (format == "csv") {
    emit(g, csv.str());
  } else {
    text << (all ? "all series match the oracle\n" : "some series differ from the oracle\n");
    emit(g, text.str());
  }
  return all ? kExitOk : kExitMismatch;
}

// ---- gf ---------------------------------------------------------------

int run_gf(const Globals& g, const std::string& name, int order, const std::string& format) {
  wds_series* raw = nullptr;
  check(wds_series_create(name.c_str(), order, &raw));
  SeriesPtr s(raw);
  std::vector<std::string> coeffs;
  for (int i = 0; i <= order; ++i) {
    char* c = nullptr;
    check(wds_series_coefficient(s.get(), i, &c));
    coeffs.push_back(take(c));
  }
  if (format == "json") {
    json j = with_header(g, "gf");
    j["series"] = name;
    j["model"] = class_model(name);
    j["order"] = order;
    j["coefficients"] = coeffs;
    emit_json(g, j);
  } else {
    std::ostringstream out;
    for (size_t i = 0; i < coeffs.size(); ++i) out << (i ? ", " : "") << coeffs[i];
    out << '\n';
    emit(g, out.str());
  }
  return kExitOk;
}

// ---- mu and moments ---------------------------------------------------

json interval_json(const wds_constants* c, wds_quantity q, int digits) {
  char *lo = nullptr, *hi = nullptr;
  check(wds_constants_decimal(c, q, digits, &lo, &hi));
  json j;
  j["lo"] = take(lo);
  j["hi"] = take(hi);
  check(wds_constants_exact(c, q, &lo, &hi));
  j["lo_exact"] = take(lo);
  j["hi_exact"] = take(hi);
  return j;
}

int run_constants(const Globals& g, const std::string& command, const std::string& model, int truncation, int digits,
                  const std::string& format) {
  wds_constants* raw = nullptr;
  check(wds_constants_compute(model.c_str(), truncation, &raw));
  ConstantsPtr c(raw);
  std::vector<std::pair<std::string, wds_quantity>> items{{"rho", WDS_RHO}, {"mu", WDS_MU}};
  if (command == "moments") items = {{"rho", WDS_RHO}, {"mean", WDS_MEAN}, {"variance", WDS_VARIANCE}};
  if (format == "json") {
    json j = with_header(g, command);
    j["model"] = model;
    j["truncation"] = truncation;
    j["digits"] = digits;
    for (const auto& [key, q] : items) j[key] = interval_json(c.get(), q, digits);
    emit_json(g, j);
  } else {
    std::ostringstream out;
    out << "model " << model << ", truncation " << truncation << '\n';
    for (const auto& [key, q] : items) {
      json iv = interval_json(c.get(), q, digits);
      out << key << " in [" << iv["lo"].get<std::string>() << ", " << iv["hi"].get<std::string>() << "]\n";
    }
    emit(g, out.str());
  }
  return kExitOk;
}

// ---- zeros ------------------------------------------------------------

int run_zeros(const Globals& g, const std::vector<int>& ks, const std::string& family, double tolerance,
              const std::string& format) {
  std::vector<RootsPtr> sets;
  for (int k : ks) {
    wds_roots* raw = nullptr;
    check(wds_roots_compute(k, family.c_str(), tolerance, &raw));
    sets.emplace_back(raw);
  }
  if (format == "svg") {
    std::vector<const wds_roots*> ptrs;
    for (const auto& s : sets) ptrs.push_back(s.get());
    char* svg = nullptr;
    check(wds_zeros_svg(ptrs.data(), ptrs.size(), &svg));
    emit(g, take(svg));
  } else if (format == "json") {
    json j = with_header(g, "zeros");
    j["family"] = family;
    j["tolerance"] = tolerance;
    json arr = json::array();
    for (size_t i = 0; i < sets.size(); ++i) {
      json s;
      s["k"] = ks[i];
      double worst = 0;
      check(wds_roots_max_residual(sets[i].get(), &worst));
      s["max_residual"] = worst;
      json roots = json::array();
      for (size_t r = 0; r < wds_roots_count(sets[i].get()); ++r) {
        double re, im, res;
        check(wds_roots_get(sets[i].get(), r, &re, &im, &res));
        roots.push_back({{"re", re}, {"im", im}, {"residual", res}});
      }
      s["roots"] = roots;
      if (family == "horizontal" && ks[i] >= 5) {
        int nonreal = 0;
        double dmax = 0, dmean = 0, w = 0;
        check(wds_root_distance(ks[i], &nonreal, &dmax, &dmean, &w));
        s["boundary_distance"] = {{"nonreal", nonreal}, {"max", dmax}, {"mean", dmean}};
      }
      arr.push_back(s);
    }
    j["sets"] = arr;
    emit_json(g, j);
  } else {
    std::ostringstream out;
    out << "k,re,im,residual\n";
    for (size_t i = 0; i < sets.size(); ++i)
      for (size_t r = 0; r < wds_roots_count(sets[i].get()); ++r) {
        double re, im, res;
        check(wds_roots_get(sets[i].get(), r, &re, &im, &res));
        out << ks[i] << ',' << fmt_double(re) << ',' << fmt_double(im) << ',' << fmt_double(res) << '\n';
      }
    emit(g, out.str());
  }
  return kExitOk;
}

// ---- sample -----------------------------------------------------------

struct SampleArgs {
  int n = 100;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  int count = 1;
  double x = 0;  // 0: tune
  std::string format = "json";
};

int run_sample(const Globals& g, const SampleArgs& a, int truncation) {
  if (a.format == "svg" && a.count != 1) throw Failure{kExitUsage, "--format svg renders a single walk; use --count 1"};
  wds_sampler* raw = nullptr;
  if (a.x > 0)
    check(wds_sampler_create(a.x, a.n, a.epsilon, a.seed, &raw));
  else
    check(wds_sampler_tune(a.n, a.epsilon, a.seed, truncation, &raw));
  SamplerPtr s(raw);
  double x = 0;
  check(wds_sampler_x(s.get(), &x));

  json samples = json::array();
  std::string last;
  for (int i = 0; i < a.count; ++i) {
    char* steps = nullptr;
    std::uint64_t trials = 0;
    check(wds_sampler_window(s.get(), &steps, &trials));
    last = take(steps);
    json j;
    j["model"] = "horizontal";
    j["steps"] = last;
    j["length"] = last.size();
    j["seed"] = a.seed;
    j["x"] = x;
    j["trials"] = trials;
    samples.push_back(j);
  }
  if (a.format == "svg") {
    char* svg = nullptr;
    check(wds_walk_svg(last.c_str(), &svg));
    emit(g, take(svg));
    return kExitOk;
  }
  json j = with_header(g, "sample");
  j["rng"] = wds_sampler_rng_name(s.get());
  j["target_n"] = a.n;
  j["epsilon"] = a.epsilon;
  j["samples"] = samples;
  emit_json(g, j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weakly directed self-avoiding walks: counts, series, certified constants, zeros and sampling."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--no-timestamp", g.no_timestamp, "Omit the generated_at field from JSON output");
  app.add_option("-o,--output", g.output, "Write to a file instead of stdout");

  int truncation = -1;
  auto add_truncation = [&](CLI::App* sub) {
    sub->add_option("--truncation", truncation, "Truncation order (default: $WDSAW_TRUNCATION or 300)")
        ->check(CLI::Range(2, 100000));
  };

  std::string cls = "W";
  int max_n = 12;
  std::string format;
  auto* count = app.add_subcommand("count", "Series coefficients next to brute-force counts for one class");
  count->add_option("--class", cls, "Walk class (W, Wbar, Wdiag, WdiagWeak, B, B0, B1, B2, I, Idiag, T, P, Q, Ti, Pi, Qi)");
  count->add_option("--max-n", max_n, "Largest length")->check(CLI::Range(0, 16));
  count->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

  std::string series = "W";
  int order = 10;
  auto* gf = app.add_subcommand("gf", "Coefficients of a generating function");
  gf->add_option("--series", series, "Walk class with a series");
  gf->add_option("--order", order, "Truncation order")->check(CLI::Range(0, 100000));
  gf->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string model = "horizontal";
  int digits = 7;
  auto* mu = app.add_subcommand("mu", "Certified interval for the growth constant");
  auto* moments = app.add_subcommand("moments", "Certified mean and variance of the irreducible factor length");
  for (auto* sub : {mu, moments}) {
    sub->add_option("--model", model, "horizontal or diagonal")->check(CLI::IsMember({"horizontal", "diagonal"}));
    add_truncation(sub);
    sub->add_option("--digits", digits, "Decimal places, rounded outward")->check(CLI::Range(0, 1000));
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  }

  std::vector<int> ks;
  std::string family = "horizontal";
  double tolerance = 1e-10;
  auto* zeros = app.add_subcommand("zeros", "Complex zeros of G_k");
  zeros->add_option("--k", ks, "Index k (repeatable)")->required()->check(CLI::Range(1, 2000));
  zeros->add_option("--family", family, "horizontal, diagonal-esw, diagonal-nes or diagonal-es");
  zeros->add_option("--tolerance", tolerance, "Largest accepted residual")->check(CLI::NonNegativeNumber);
  zeros->add_option("--format", format, "csv, json or svg")->check(CLI::IsMember({"csv", "json", "svg"}));

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Boltzmann samples of weakly directed bridges");
  sample->add_option("--n", sa.n, "Target length")->check(CLI::Range(1, 100000000));
  sample->add_option("--epsilon", sa.epsilon, "Relative length window")->check(CLI::Range(0.0, 1.0));
  sample->add_option("--seed", sa.seed, "Seed");
  sample->add_option("--count", sa.count, "Number of walks")->check(CLI::Range(1, 100000000));
  sample->add_option("--x", sa.x, "Boltzmann parameter instead of tuning")->check(CLI::PositiveNumber);
  add_truncation(sample);
  sample->add_option("--format", format, "json or svg")->check(CLI::IsMember({"json", "svg"}));

  auto* chk = app.add_subcommand("check", "Compare every series with the oracle; exit 1 on a mismatch");
  chk->add_option("--max-n", max_n, "Largest length")->check(CLI::Range(0, 16));
  chk->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto fmt = [&](const char* fallback) { return format.empty() ? std::string(fallback) : format; };
    auto trunc = [&] { return truncation > 0 ? truncation : default_truncation(); };
    if (*count) return run_count(g, cls, max_n, fmt("text"));
    if (*gf) return run_gf(g, series, order, fmt("text"));
    if (*mu) return run_constants(g, "mu", model, trunc(), digits, fmt("text"));
    if (*moments) return run_constants(g, "moments", model, trunc(), digits, fmt("text"));
    if (*zeros) return run_zeros(g, ks, family, tolerance, fmt("csv"));
    if (*sample) {
      sa.format = fmt("json");
      if (!(sa.epsilon > 0 && sa.epsilon < 1)) throw Failure{kExitUsage, "--epsilon must lie in (0, 1)"};
      return run_sample(g, sa, trunc());
    }
    if (*chk) return run_check(g, max_n, fmt("text"));
  } catch (const Failure& f) {
    std::cerr << "wdsaw: error: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "wdsaw: error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
