#pragma once

// Brute-force self-avoiding walks on the square lattice and the
// definitional predicates on them. Everything here is deliberately naive:
// it is the ground truth the generating functions are compared against.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wdsaw/model.hpp"

namespace wdsaw {

enum class Step : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

struct Point {
  int x = 0;
  int y = 0;
  friend constexpr bool operator==(Point, Point) = default;
};

constexpr Point delta(Step s) noexcept {
  switch (s) {
    case Step::N: return {0, 1};
    case Step::E: return {1, 0};
    case Step::S: return {0, -1};
    case Step::W: return {-1, 0};
  }
  return {0, 0};
}

char to_char(Step s) noexcept;

/// Bitmask over steps: bit (int)s set means s allowed / present.
using StepMask = std::uint8_t;
constexpr StepMask kAllSteps = 0xF;
constexpr StepMask mask_of(Step s) noexcept { return static_cast<StepMask>(1u << static_cast<unsigned>(s)); }
/// Parses letters such as "NES"; throws InvalidArgument on other letters.
StepMask parse_step_mask(std::string_view letters);

class Walk {
 public:
  Walk() = default;
  explicit Walk(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Parses a word over {N,E,S,W}; throws InvalidArgument otherwise.
  /// Self-avoidance is not checked here.
  static Walk parse(std::string_view word);

  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  Step operator[](std::size_t i) const { return steps_[i]; }

  void push_back(Step s) { steps_.push_back(s); }
  void pop_back() { steps_.pop_back(); }
  void append(const Walk& other) { steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end()); }

  /// Steps [begin, end).
  Walk slice(std::size_t begin, std::size_t end) const;
  /// v_0 .. v_n starting at the origin.
  std::vector<Point> vertices() const;
  Point endpoint() const;
  StepMask letters() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Walk&, const Walk&) = default;

 private:
  std::vector<Step> steps_;
};

/// Heights h(v_0) .. h(v_n).
std::vector<int> heights(const Walk& w, Model m);

bool is_self_avoiding(const Walk& w);
/// At most three distinct step letters.
bool is_partially_directed(const Walk& w);
/// Between any two visits to one height line (endpoints included) the
/// subwalk is partially directed.
bool is_weakly_directed(const Walk& w, Model m);
/// h(v_0) <= h(v) < h(v_n) for all v != v_n. The empty walk is a bridge.
bool is_bridge(const Walk& w, Model m);
/// h(v_0) <= h(v) <= h(v_n) for all v.
bool is_pseudo_bridge(const Walk& w, Model m);
/// h(v) >= h(v_0) for all v.
bool is_positive(const Walk& w, Model m);
/// h(v) < h(v_n) for all v != v_n.
bool is_copositive(const Walk& w, Model m);
/// Starts and ends at height h(v_0), never below it.
bool is_excursion(const Walk& w, Model m);

/// Indices of the separating steps: the unique step crossing some line at
/// height h + 1/2.
std::vector<std::size_t> separating_steps(const Walk& w, Model m);
/// Nonempty and no non-final separating step.
bool is_irreducible(const Walk& w, Model m);
/// Cut after every non-final separating step. The empty walk gives [].
std::vector<Walk> factor_irreducible(const Walk& w, Model m);

enum class Axis { x_axis, y_axis, main_diagonal };
Step reflect(Step s, Axis axis) noexcept;
Walk reflect(const Walk& w, Axis axis);

/// Factorization of a proper NES walk (not starting or ending with S) into
/// N steps and words of E(S+E)*. nullopt if w is not a proper NES walk.
std::optional<std::vector<Walk>> factor_proper(const Walk& w);

using WalkPredicate = std::function<bool(const Walk&)>;

struct EnumerationOptions {
  int max_n = 16;
  StepMask allowed = kAllSteps;
  /// If set and false on a prefix, the subtree below it is skipped. Must be
  /// prefix-closed for the counts to be meaningful.
  WalkPredicate prefix_filter;
  /// Split the search over worker threads on the first two steps.
  bool parallel = true;
};

/// Number of n-step self-avoiding walks from the origin satisfying pred.
/// Throws LimitExceeded if n > options.max_n.
std::uint64_t enumerate(int n, const WalkPredicate& pred, const EnumerationOptions& options = {});

/// counts[n] for n = 0..nmax in one pass.
std::vector<std::uint64_t> counts_by_length(int nmax, const WalkPredicate& pred, const EnumerationOptions& options = {});

/// Calls visit on every self-avoiding walk of length <= nmax (sequential,
/// lexicographic in N < E < S < W). The walk reference is only valid during
/// the call.
void for_each_walk(int nmax, const std::function<void(const Walk&)>& visit, const EnumerationOptions& options = {});

}  // namespace wdsaw
