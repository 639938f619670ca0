#include "wdsaw/oracle.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <map>

#include "wdsaw/error.hpp"

namespace wdsaw {

char to_char(Step s) noexcept { return "NESW"[static_cast<int>(s)]; }

namespace {

std::optional<Step> step_from_char(char c) {
  switch (c) {
    case 'N': return Step::N;
    case 'E': return Step::E;
    case 'S': return Step::S;
    case 'W': return Step::W;
    default: return std::nullopt;
  }
}

int step_height(Step s, Model m) {
  Point d = delta(s);
  return height(d.x, d.y, m);
}

}  // namespace

StepMask parse_step_mask(std::string_view letters) {
  StepMask mask = 0;
  for (char c : letters) {
    auto s = step_from_char(c);
    if (!s) throw Error(ErrorCode::invalid_argument, std::string("invalid step letter '") + c + "'");
    mask |= mask_of(*s);
  }
  return mask;
}

Walk Walk::parse(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (char c : word) {
    auto s = step_from_char(c);
    if (!s) throw Error(ErrorCode::invalid_argument, std::string("invalid step letter '") + c + "' in walk");
    steps.push_back(*s);
  }
  return Walk(std::move(steps));
}

Walk Walk::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > steps_.size()) throw Error(ErrorCode::invalid_argument, "bad walk slice");
  return Walk(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(begin),
                                steps_.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::vector<Point> Walk::vertices() const {
  std::vector<Point> v;
  v.reserve(steps_.size() + 1);
  Point p;
  v.push_back(p);
  for (Step s : steps_) {
    Point d = delta(s);
    p.x += d.x;
    p.y += d.y;
    v.push_back(p);
  }
  return v;
}

Point Walk::endpoint() const {
  Point p;
  for (Step s : steps_) {
    Point d = delta(s);
    p.x += d.x;
    p.y += d.y;
  }
  return p;
}

StepMask Walk::letters() const noexcept {
  StepMask m = 0;
  for (Step s : steps_) m |= mask_of(s);
  return m;
}

std::string Walk::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(to_char(s));
  return out;
}

std::vector<int> heights(const Walk& w, Model m) {
  std::vector<int> h;
  h.reserve(w.size() + 1);
  int cur = 0;
  h.push_back(cur);
  for (Step s : w.steps()) {
    cur += step_height(s, m);
    h.push_back(cur);
  }
  return h;
}

bool is_self_avoiding(const Walk& w) {
  auto v = w.vertices();
  std::sort(v.begin(), v.end(), [](Point a, Point b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool is_partially_directed(const Walk& w) { return std::popcount(static_cast<unsigned>(w.letters())) <= 3; }

bool is_weakly_directed(const Walk& w, Model m) {
  auto h = heights(w, m);
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    StepMask seen = 0;
    for (std::size_t j = i + 1; j <= n; ++j) {
      seen |= mask_of(w[j - 1]);
      if (h[j] == h[i] && seen == kAllSteps) return false;
    }
  }
  return true;
}

bool is_bridge(const Walk& w, Model m) {
  auto h = heights(w, m);
  const int top = h.back();
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    if (h[i] < h[0] || h[i] >= top) return false;
  return true;
}

bool is_pseudo_bridge(const Walk& w, Model m) {
  auto h = heights(w, m);
  const int top = h.back();
  return std::all_of(h.begin(), h.end(), [&](int x) { return x >= h[0] && x <= top; });
}

bool is_positive(const Walk& w, Model m) {
  auto h = heights(w, m);
  return std::all_of(h.begin(), h.end(), [&](int x) { return x >= h[0]; });
}

bool is_copositive(const Walk& w, Model m) {
  auto h = heights(w, m);
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    if (h[i] >= h.back()) return false;
  return true;
}

bool is_excursion(const Walk& w, Model m) { return is_positive(w, m) && heights(w, m).back() == 0; }

std::vector<std::size_t> separating_steps(const Walk& w, Model m) {
  auto h = heights(w, m);
  // crossings[level] counts steps between heights level and level + 1
  std::map<int, int> crossings;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (h[i] != h[i + 1]) ++crossings[std::min(h[i], h[i + 1])];
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (h[i] != h[i + 1] && crossings[std::min(h[i], h[i + 1])] == 1) out.push_back(i);
  return out;
}

bool is_irreducible(const Walk& w, Model m) {
  if (w.empty()) return false;
  auto sep = separating_steps(w, m);
  return sep.empty() || (sep.size() == 1 && sep.front() + 1 == w.size());
}

std::vector<Walk> factor_irreducible(const Walk& w, Model m) {
  std::vector<Walk> out;
  std::size_t start = 0;
  for (std::size_t i : separating_steps(w, m)) {
    if (i + 1 == w.size()) break;
    out.push_back(w.slice(start, i + 1));
    start = i + 1;
  }
  if (start < w.size()) out.push_back(w.slice(start, w.size()));
  return out;
}

Step reflect(Step s, Axis axis) noexcept {
  switch (axis) {
    case Axis::x_axis:
      return s == Step::N ? Step::S : s == Step::S ? Step::N : s;
    case Axis::y_axis:
      return s == Step::E ? Step::W : s == Step::W ? Step::E : s;
    case Axis::main_diagonal:
      switch (s) {
        case Step::N: return Step::E;
        case Step::E: return Step::N;
        case Step::S: return Step::W;
        case Step::W: return Step::S;
      }
  }
  return s;
}

Walk reflect(const Walk& w, Axis axis) {
  std::vector<Step> out;
  out.reserve(w.size());
  for (Step s : w.steps()) out.push_back(reflect(s, axis));
  return Walk(std::move(out));
}

std::optional<std::vector<Walk>> factor_proper(const Walk& w) {
  if (w.letters() & mask_of(Step::W)) return std::nullopt;
  if (!w.empty() && (w[0] == Step::S || w[w.size() - 1] == Step::S)) return std::nullopt;
  std::vector<Walk> out;
  std::size_t i = 0;
  const std::size_t n = w.size();
  while (i < n) {
    if (w[i] == Step::N) {
      out.push_back(w.slice(i, i + 1));
      ++i;
      continue;
    }
    // w[i] == E: consume E (S+ E)*
    std::size_t j = i + 1;
    while (j < n && w[j] == Step::S) {
      std::size_t k = j;
      while (k < n && w[k] == Step::S) ++k;
      if (k == n || w[k] != Step::E) return std::nullopt;
      j = k + 1;
    }
    out.push_back(w.slice(i, j));
    i = j;
  }
  return out;
}

namespace {

class Enumerator {
 public:
  Enumerator(int nmax, const EnumerationOptions& options)
      : nmax_(nmax), side_(2 * nmax + 3), options_(options), visited_(static_cast<std::size_t>(side_) * side_, 0) {}

  // Walks from the current state, whose last vertex is (x, y).
  template <class Visit>
  void run(Walk& walk, int x, int y, Visit& visit) {
    if (options_.prefix_filter && !options_.prefix_filter(walk)) return;
    visit(walk);
    if (static_cast<int>(walk.size()) == nmax_) return;
    for (int s = 0; s < 4; ++s) {
      Step step = static_cast<Step>(s);
      if (!(options_.allowed & mask_of(step))) continue;
      Point d = delta(step);
      int nx = x + d.x, ny = y + d.y;
      auto& cell = at(nx, ny);
      if (cell) continue;
      cell = 1;
      walk.push_back(step);
      run(walk, nx, ny, visit);
      walk.pop_back();
      cell = 0;
    }
  }

  // Marks the vertices of a prefix as visited; returns its endpoint.
  Point seed(const Walk& prefix) {
    Point p;
    at(0, 0) = 1;
    for (Step s : prefix.steps()) {
      Point d = delta(s);
      p.x += d.x;
      p.y += d.y;
      at(p.x, p.y) = 1;
    }
    return p;
  }

 private:
  std::uint8_t& at(int x, int y) {
    return visited_[static_cast<std::size_t>(y + nmax_ + 1) * side_ + static_cast<std::size_t>(x + nmax_ + 1)];
  }

  int nmax_;
  int side_;
  const EnumerationOptions& options_;
  std::vector<std::uint8_t> visited_;
};

void check_limit(int n, const EnumerationOptions& options) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "walk length must be >= 0");
  if (n > options.max_n)
    throw Error(ErrorCode::limit_exceeded,
                "walk length " + std::to_string(n) + " exceeds the oracle limit " + std::to_string(options.max_n));
}

std::vector<std::uint64_t> count_from(const Walk& prefix, int nmax, const WalkPredicate& pred,
                                      const EnumerationOptions& options) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(nmax) + 1, 0);
  Enumerator e(nmax, options);
  Point p = e.seed(prefix);
  Walk walk = prefix;
  auto visit = [&](const Walk& w) {
    if (pred(w)) ++counts[w.size()];
  };
  e.run(walk, p.x, p.y, visit);
  return counts;
}

}  // namespace

std::vector<std::uint64_t> counts_by_length(int nmax, const WalkPredicate& pred, const EnumerationOptions& options) {
  check_limit(nmax, options);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(nmax) + 1, 0);
  if (!options.parallel || nmax < 8) {
    counts = count_from(Walk(), nmax, pred, options);
    return counts;
  }
  // Depth 0 and 1 sequentially, the subtrees below each two-step prefix in parallel.
  std::vector<Walk> prefixes;
  auto keep = [&](const Walk& w) { return !options.prefix_filter || options.prefix_filter(w); };
  Walk empty;
  if (!keep(empty)) return counts;
  if (pred(empty)) ++counts[0];
  for (int a = 0; a < 4; ++a) {
    if (!(options.allowed & mask_of(static_cast<Step>(a)))) continue;
    Walk one({static_cast<Step>(a)});
    if (!keep(one)) continue;
    if (pred(one)) ++counts[1];
    for (int b = 0; b < 4; ++b) {
      if (!(options.allowed & mask_of(static_cast<Step>(b))) || (a ^ b) == 2) continue;
      prefixes.push_back(Walk({static_cast<Step>(a), static_cast<Step>(b)}));
    }
  }
  std::vector<std::future<std::vector<std::uint64_t>>> jobs;
  for (const auto& p : prefixes)
    jobs.push_back(std::async(std::launch::async, [&, p] { return count_from(p, nmax, pred, options); }));
  for (auto& j : jobs) {
    auto c = j.get();
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += c[i];
  }
  return counts;
}

std::uint64_t enumerate(int n, const WalkPredicate& pred, const EnumerationOptions& options) {
  check_limit(n, options);
  auto wrapped = [&](const Walk& w) { return static_cast<int>(w.size()) == n && pred(w); };
  return counts_by_length(n, wrapped, options)[static_cast<std::size_t>(n)];
}

void for_each_walk(int nmax, const std::function<void(const Walk&)>& visit, const EnumerationOptions& options) {
  check_limit(nmax, options);
  Enumerator e(nmax, options);
  e.seed(Walk());
  Walk walk;
  auto v = [&](const Walk& w) { visit(w); };
  e.run(walk, 0, 0, v);
}

}  // namespace wdsaw
