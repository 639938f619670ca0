#include "wdsaw/sampler.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "wdsaw/asymptotics.hpp"
#include "wdsaw/error.hpp"

namespace wdsaw {
namespace {

constexpr double kTermFloor = 1e-17;
constexpr int kMaxTerms = 100000;

// sum_k x^k / G_k(x) and its derivative. G_k and G_k' run through the
// three-term recurrence, renormalised by G_{k-1} so nothing underflows.
std::pair<double, double> bridge_sum_numeric(double x) {
  const double a = 1 - x + x * x + x * x * x;
  const double da = -1 + 2 * x + 3 * x * x;
  // Ratios q = G_k / G_{k-1}, logarithmic derivatives l = G_k' / G_k.
  double g_prev = 1, dg_prev = 0;  // G_{-1}
  double g = 1 - x, dg = -1;       // G_0
  double term = 1 / g;             // x^0 / G_0
  double sum = term;
  double dsum = -term * dg / g;
  for (int k = 1; k < kMaxTerms; ++k) {
    double g_next = a * g - x * x * g_prev;
    double dg_next = da * g + a * dg - 2 * x * g_prev - x * x * dg_prev;
    term *= x * g / g_next;
    double dterm = term * (k / x - dg_next / g_next);
    sum += term;
    dsum += dterm;
    // rescale to keep the recurrence in range
    double s = 1 / g_next;
    g_prev = g * s;
    dg_prev = dg * s;
    g = 1;
    dg = dg_next * s;
    if (std::abs(term) < kTermFloor * sum && std::abs(dterm) < kTermFloor * std::abs(dsum)) return {sum, dsum};
  }
  throw Error(ErrorCode::internal, "bridge sum did not converge");
}

std::size_t next_index(RandomSource& rng, const double* weights, std::size_t n, double total) {
  double u = rng.uniform() * total;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (u < weights[i]) return i;
    u -= weights[i];
  }
  return n - 1;
}

enum class Task : std::uint8_t { emit_n, emit_e, emit_s, excursion, optional_excursion };

struct DepthExceeded {};

// Appends a nonempty excursion to out. Each stack entry is a pending
// symbol of the grammar E = E(1+E) + N E S + N E S E(1+E).
void excursion_into(const GfTable& gf, RandomSource& rng, std::vector<Step>& out) {
  std::vector<Task> stack{Task::excursion};
  const double opt = gf.E / (1 + gf.E);
  while (!stack.empty()) {
    if (stack.size() > kMaxStackDepth) throw DepthExceeded{};
    Task task = stack.back();
    stack.pop_back();
    switch (task) {
      case Task::emit_n: out.push_back(Step::N); break;
      case Task::emit_e: out.push_back(Step::E); break;
      case Task::emit_s: out.push_back(Step::S); break;
      case Task::optional_excursion:
        if (rng.uniform() < opt) stack.push_back(Task::excursion);
        break;
      case Task::excursion:
        switch (next_index(rng, gf.excursion_weights, 3, gf.E)) {
          case 0:  // E (1 + Exc)
            stack.push_back(Task::optional_excursion);
            stack.push_back(Task::emit_e);
            break;
          case 1:  // N Exc S
            stack.push_back(Task::emit_s);
            stack.push_back(Task::excursion);
            stack.push_back(Task::emit_n);
            break;
          default:  // N Exc S E (1 + Exc)
            stack.push_back(Task::optional_excursion);
            stack.push_back(Task::emit_e);
            stack.push_back(Task::emit_s);
            stack.push_back(Task::excursion);
            stack.push_back(Task::emit_n);
            break;
        }
        break;
    }
  }
}

template <class Draw>
Walk with_redraws(Draw draw, SamplerStats* stats) {
  for (;;) {
    std::vector<Step> out;
    try {
      draw(out);
    } catch (const DepthExceeded&) {
      if (stats) {
        ++stats->redraws;
        stats->steps += out.size();
      }
      continue;
    }
    if (stats) stats->steps += out.size();
    return Walk(std::move(out));
  }
}

// P_N = S (1 + P_N): draw a block, continue with probability S.
void positive_into(const GfTable& gf, RandomSource& rng, std::vector<Step>& out) {
  const double* w = gf.positive_weights;
  const double s = w[0] + w[1] + w[2];
  do {
    switch (next_index(rng, w, 3, s)) {
      case 0: break;
      case 1: out.push_back(Step::E); break;
      default:
        excursion_into(gf, rng, out);
        out.push_back(Step::E);
        break;
    }
    out.push_back(Step::N);
  } while (rng.uniform() < s);
}

Walk irreducible_e(const GfTable& gf, RandomSource& rng, SamplerStats* stats) {
  for (;;) {
    Walk p = with_redraws([&](std::vector<Step>& out) { positive_into(gf, rng, out); }, stats);
    if (stats) ++stats->irreducible_attempts;
    auto factors = factor_irreducible(p, Model::horizontal);
    if (is_bridge(factors.front(), Model::horizontal)) {
      if (stats) ++stats->irreducible_accepts;
      return factors.front();
    }
  }
}

double rho_lower_bound(int truncation) {
  static std::mutex mutex;
  static std::map<int, double> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(truncation);
  if (it != cache.end()) return it->second;
  double lo = bracket_rho(Model::horizontal, truncation).lo.get_d();
  lo = std::nextafter(lo, 0.0);
  cache.emplace(truncation, lo);
  return lo;
}

}  // namespace

GfTable gf_table(double x) {
  if (!(x > 0) || !(x < std::sqrt(2.0) - 1))
    throw Error(ErrorCode::invalid_argument, "Boltzmann parameter must lie in (0, sqrt(2)-1)");
  GfTable gf;
  gf.x = x;
  const double x2 = x * x, x3 = x2 * x;
  // rationalised closed forms, free of cancellation near 0
  const double a = 1 - x - x2 - x3;
  const double d = (1 - x2 * x2) * (1 - 2 * x - x2);
  gf.E = 2 * x / (a + std::sqrt(d));
  const double r1 = 4 * x / ((1 - x) * (1 - 2 * x - x2));
  gf.P_N = r1 / (2 * (std::sqrt(1 + r1) + 1));

  auto [b, db] = bridge_sum_numeric(x);
  gf.B = b;
  gf.dB = db;
  const double xb = x * b;
  gf.I_E = xb / (1 + xb);
  gf.I = 2 * gf.I_E - x;
  gf.dI = 2 * (b + x * db) / ((1 + xb) * (1 + xb)) - 1;
  if (!(gf.I < 1)) throw Error(ErrorCode::invalid_argument, "Boltzmann parameter is not below the pole of W");
  gf.W = 1 / (1 - gf.I);

  gf.excursion_weights[0] = x * (1 + gf.E);
  gf.excursion_weights[1] = x2 * gf.E;
  gf.excursion_weights[2] = x3 * gf.E * (1 + gf.E);
  gf.positive_weights[0] = x;
  gf.positive_weights[1] = x2;
  gf.positive_weights[2] = x2 * gf.E;
  return gf;
}

SamplerConfig tune(int target_n, double epsilon, std::uint64_t seed, int truncation) {
  if (target_n < 1) throw Error(ErrorCode::invalid_argument, "target length must be >= 1");
  if (!(epsilon > 0 && epsilon < 1)) throw Error(ErrorCode::invalid_argument, "epsilon must lie in (0, 1)");
  const double limit = rho_lower_bound(truncation);
  const double n = target_n;
  if (gf_table(limit).mean_length() < n)
    throw Error(ErrorCode::target_unreachable, "target length " + std::to_string(target_n) +
                                                   " needs x beyond the certified pole bound at truncation " +
                                                   std::to_string(truncation));
  double lo = 0, hi = limit, x = limit;
  for (int it = 0; it < 200; ++it) {
    x = 0.5 * (lo + hi);
    double f = gf_table(x).mean_length();
    if (std::abs(f / n - 1) < 1e-6) break;
    (f < n ? lo : hi) = x;
  }
  return {x, target_n, epsilon, seed};
}

Walk sample_excursion(const GfTable& gf, RandomSource& rng, SamplerStats* stats) {
  return with_redraws([&](std::vector<Step>& out) { excursion_into(gf, rng, out); }, stats);
}

Walk sample_positive(const GfTable& gf, RandomSource& rng, SamplerStats* stats) {
  return with_redraws([&](std::vector<Step>& out) { positive_into(gf, rng, out); }, stats);
}

Walk sample_irreducible_bridge(const GfTable& gf, RandomSource& rng, Side side, bool exclude_n, SamplerStats* stats) {
  for (;;) {
    Walk w = irreducible_e(gf, rng, stats);
    if (exclude_n && w.size() == 1) continue;
    return side == Side::E ? w : reflect(w, Axis::y_axis);
  }
}

// W = 1 + I_E W + (I_W \ N) W
Walk sample_weakly_bridge(const GfTable& gf, RandomSource& rng, SamplerStats* stats) {
  Walk out;
  const double stop = 1 - gf.I;
  while (rng.uniform() >= stop) {
    if (rng.uniform() * gf.I < gf.I_E)
      out.append(sample_irreducible_bridge(gf, rng, Side::E, false, stats));
    else
      out.append(sample_irreducible_bridge(gf, rng, Side::W, true, stats));
  }
  return out;
}

WindowSample sample_in_window(const GfTable& gf, RandomSource& rng, int target_n, double epsilon,
                              SamplerStats* stats) {
  if (target_n < 1 || !(epsilon > 0 && epsilon < 1))
    throw Error(ErrorCode::invalid_argument, "window needs target_n >= 1 and 0 < epsilon < 1");
  const double lo = (1 - epsilon) * target_n, hi = (1 + epsilon) * target_n;
  WindowSample s;
  for (;;) {
    ++s.trials;
    if (stats) ++stats->trials;
    Walk w = sample_weakly_bridge(gf, rng, stats);
    const double len = static_cast<double>(w.size());
    if (len >= lo && len <= hi) {
      s.walk = std::move(w);
      return s;
    }
  }
}

BoltzmannSampler::BoltzmannSampler(const SamplerConfig& cfg)
    : BoltzmannSampler(cfg, std::make_unique<Mt64>(cfg.seed)) {}

BoltzmannSampler::BoltzmannSampler(const SamplerConfig& cfg, std::unique_ptr<RandomSource> rng)
    : cfg_(cfg), gf_(gf_table(cfg.x)), rng_(std::move(rng)) {
  if (!rng_) throw Error(ErrorCode::invalid_argument, "null random source");
}

}  // namespace wdsaw
