#pragma once

// Boltzmann sampler for weakly directed bridges of the horizontal model.
//
// A walk w is drawn with probability x^|w| / C(x), C the generating function
// of the class. Excursions and positive NES walks come from their grammars,
// irreducible bridges by rejection from positive walks, and weakly directed
// bridges as sequences of irreducible bridges.

#include <cstdint>
#include <memory>
#include <random>
#include <string>

#include "wdsaw/oracle.hpp"

namespace wdsaw {

class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual std::uint64_t next_u64() = 0;
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  virtual std::string name() const = 0;
};

/// Default generator: std::mt19937_64.
class Mt64 final : public RandomSource {
 public:
  explicit Mt64(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next_u64() override { return engine_(); }
  std::string name() const override { return "mt19937_64"; }

 private:
  std::mt19937_64 engine_;
};

/// Generating-function values at a fixed x in (0, rho).
struct GfTable {
  double x = 0;
  double E = 0;    // nonempty NES excursions
  double P_N = 0;  // positive NES walks ending with N
  double B = 0;    // sum_k x^k / G_k(x)
  double dB = 0;   // B'(x)
  double I_E = 0;  // irreducible NES bridges
  double I = 0;    // irreducible weakly directed bridges, 2 I_E - x
  double dI = 0;   // I'(x)
  double W = 0;    // weakly directed bridges, 1 / (1 - I)

  /// Weights of the three excursion productions; they sum to E.
  double excursion_weights[3] = {0, 0, 0};
  /// Weights of N, EN and (excursion)EN; S = their sum, P_N = S / (1 - S).
  double positive_weights[3] = {0, 0, 0};

  /// x W'(x) / W(x) = x I' / (1 - I).
  double mean_length() const { return x * dI / (1 - I); }
  /// Probability that a P_N draw starts with an irreducible bridge.
  double irreducible_acceptance() const { return I_E * (1 + P_N) / P_N; }
};

/// Closed forms for E and P_N; B and B' by summing x^k / G_k until the terms
/// drop below 1e-17. Throws InvalidArgument unless 0 < x < sqrt(2) - 1 and
/// I(x) < 1.
GfTable gf_table(double x);

struct SamplerConfig {
  double x = 0;
  int target_n = 0;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
};

/// Solves x I'(x) / (1 - I(x)) = target_n (relative 1e-6) by bisection on
/// (0, rho^-), rho^- the certified lower end of the pole bracket at the given
/// truncation order. Throws TargetUnreachable when the equation has no root
/// below rho^-, InvalidArgument if target_n < 1.
SamplerConfig tune(int target_n, double epsilon = 0.1, std::uint64_t seed = 0, int truncation = 300);

struct SamplerStats {
  std::uint64_t trials = 0;        // weakly directed bridges drawn by sample_in_window
  std::uint64_t redraws = 0;       // draws abandoned at the depth guard
  std::uint64_t steps = 0;         // letters generated, rejected draws included
  std::uint64_t irreducible_attempts = 0;
  std::uint64_t irreducible_accepts = 0;
};

enum class Side { E, W };

/// Explicit-stack depth at which a draw is abandoned and redrawn.
inline constexpr std::size_t kMaxStackDepth = 1000000;

// The free functions draw one object; stats may be null.
Walk sample_excursion(const GfTable& gf, RandomSource& rng, SamplerStats* stats = nullptr);
Walk sample_positive(const GfTable& gf, RandomSource& rng, SamplerStats* stats = nullptr);
/// side W returns the reflection in the y axis. exclude_n rejects the walk N.
Walk sample_irreducible_bridge(const GfTable& gf, RandomSource& rng, Side side, bool exclude_n = false,
                               SamplerStats* stats = nullptr);
Walk sample_weakly_bridge(const GfTable& gf, RandomSource& rng, SamplerStats* stats = nullptr);

struct WindowSample {
  Walk walk;
  std::uint64_t trials = 0;
};

/// Redraws until |w| lies in [(1 - eps) n, (1 + eps) n].
WindowSample sample_in_window(const GfTable& gf, RandomSource& rng, int target_n, double epsilon,
                              SamplerStats* stats = nullptr);

/// Owns a generator seeded from the config. Not thread safe; use one per thread.
class BoltzmannSampler {
 public:
  explicit BoltzmannSampler(const SamplerConfig& cfg);
  BoltzmannSampler(const SamplerConfig& cfg, std::unique_ptr<RandomSource> rng);

  const SamplerConfig& config() const noexcept { return cfg_; }
  const GfTable& table() const noexcept { return gf_; }
  const SamplerStats& stats() const noexcept { return stats_; }
  std::string rng_name() const { return rng_->name(); }

  Walk excursion() { return sample_excursion(gf_, *rng_, &stats_); }
  Walk positive() { return sample_positive(gf_, *rng_, &stats_); }
  Walk irreducible_bridge(Side side, bool exclude_n = false) {
    return sample_irreducible_bridge(gf_, *rng_, side, exclude_n, &stats_);
  }
  Walk weakly_bridge() { return sample_weakly_bridge(gf_, *rng_, &stats_); }
  WindowSample in_window() { return sample_in_window(gf_, *rng_, cfg_.target_n, cfg_.epsilon, &stats_); }

 private:
  SamplerConfig cfg_;
  GfTable gf_;
  std::unique_ptr<RandomSource> rng_;
  SamplerStats stats_;
};

}  // namespace wdsaw
