#include "wdsaw/series.hpp"

#include <algorithm>
#include <sstream>

#include "wdsaw/error.hpp"

namespace wdsaw {

namespace {

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer lcm_of_denominators(const std::vector<Rational>& c, std::size_t n) {
  Integer l = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    if (c[i].get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c[i].get_den_mpz_t());
  }
  return l;
}

// c[0..n] * scale as integers; scale must clear every denominator.
std::vector<Integer> scaled_integers(const std::vector<Rational>& c, std::size_t n, const Integer& scale) {
  std::vector<Integer> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (scale == 1) {
      out[i] = c[i].get_num();
    } else {
      Integer t = scale / c[i].get_den();
      out[i] = c[i].get_num() * t;
    }
  }
  return out;
}

std::size_t last_nonzero(const std::vector<Integer>& v) {
  for (std::size_t i = v.size(); i-- > 0;)
    if (v[i] != 0) return i;
  return 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// LatticePolynomial

LatticePolynomial::LatticePolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  canonicalize();
}

LatticePolynomial::LatticePolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  canonicalize();
}

LatticePolynomial LatticePolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return LatticePolynomial(std::move(v));
}

void LatticePolynomial::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer LatticePolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Rational LatticePolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + Rational(coeffs_[i]);
  return acc;
}

double LatticePolynomial::evaluate(double t) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i].get_d();
  return acc;
}

std::complex<double> LatticePolynomial::evaluate(std::complex<double> t) const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i].get_d();
  return acc;
}

TruncatedSeries LatticePolynomial::to_series(std::size_t order) const {
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 0; i <= order && i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  return TruncatedSeries(std::move(c));
}

std::string LatticePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i > 0) {
      if (mag != 1) out << "*";
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

LatticePolynomial& LatticePolynomial::operator+=(const LatticePolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  canonicalize();
  return *this;
}

LatticePolynomial& LatticePolynomial::operator-=(const LatticePolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  canonicalize();
  return *this;
}

LatticePolynomial& LatticePolynomial::operator*=(const LatticePolynomial& other) {
  if (coeffs_.empty() || other.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> r(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), other.coeffs_[j].get_mpz_t());
  }
  coeffs_ = std::move(r);
  canonicalize();
  return *this;
}

LatticePolynomial pow(const LatticePolynomial& base, unsigned exponent) {
  LatticePolynomial result{1};
  LatticePolynomial b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw Error(ErrorCode::invalid_argument, "a truncated series needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> coefficients) {
  if (coefficients.size() == 0)
    throw Error(ErrorCode::invalid_argument, "a truncated series needs at least one coefficient");
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, std::size_t degree, std::size_t order) {
  TruncatedSeries s(order);
  if (degree <= order) s.coeffs_[degree] = c;
  return s;
}

TruncatedSeries TruncatedSeries::geometric(std::size_t order) {
  return TruncatedSeries(std::vector<Rational>(order + 1, Rational(1)));
}

bool TruncatedSeries::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), is_integral);
}

bool TruncatedSeries::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) >= 0; });
}

std::size_t TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return coeffs_.size();
}

std::vector<Integer> TruncatedSeries::integer_coefficients() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!is_integral(coeffs_[i]))
      throw Error(ErrorCode::internal, "coefficient of t^" + std::to_string(i) + " is not an integer");
    out.push_back(coeffs_[i].get_num());
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<Rational> c(order + 1);
  if (order > this->order())
    throw Error(ErrorCode::invalid_argument, "cannot raise the truncation order of a series");
  std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1), c.begin());
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::shifted_up(std::size_t m) const {
  TruncatedSeries s(order());
  for (std::size_t i = m; i <= order(); ++i) s.coeffs_[i] = coeffs_[i - m];
  return s;
}

TruncatedSeries TruncatedSeries::shifted_down(std::size_t m) const {
  if (m > order()) throw Error(ErrorCode::empty_series, "division by t^m leaves no coefficients");
  for (std::size_t i = 0; i < m; ++i)
    if (coeffs_[i] != 0) throw Error(ErrorCode::invalid_argument, "series is not divisible by t^m");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(m), coeffs_.end()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return div(a, b); }

std::string TruncatedSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << wdsaw::to_string(coeffs_[i]);
    if (i > 0) out << "*t";
    if (i > 1) out << "^" << i;
  }
  if (first) out << "0";
  out << " + O(t^" << coeffs_.size() << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// Operations

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  // Clear denominators so the convolution runs on integers.
  const Integer da = lcm_of_denominators(a.coefficients(), n);
  const Integer db = lcm_of_denominators(b.coefficients(), n);
  const auto ia = scaled_integers(a.coefficients(), n, da);
  const auto ib = scaled_integers(b.coefficients(), n, db);
  const std::size_t top_b = last_nonzero(ib);

  std::vector<Integer> acc(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (ia[i] == 0) continue;
    const std::size_t jmax = std::min(n - i, top_b);
    for (std::size_t j = 0; j <= jmax; ++j) {
      if (ib[j] == 0) continue;
      mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  }

  std::vector<Rational> out(n + 1);
  const Integer denom = da * db;
  for (std::size_t i = 0; i <= n; ++i) {
    out[i] = Rational(acc[i], denom);
    out[i].canonicalize();
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  if (b[0] == 0) throw Error(ErrorCode::zero_constant_term, "division by a series with zero constant term");

  const auto& bc = b.coefficients();
  std::size_t top_b = 0;
  for (std::size_t i = 0; i <= n; ++i)
    if (bc[i] != 0) top_b = i;

  bool integral = abs(b[0]) == 1;
  for (std::size_t i = 0; integral && i <= n; ++i) integral = is_integral(a[i]) && is_integral(bc[i]);

  if (integral) {
    // Unit constant term: the quotient stays in Z[[t]].
    const int sign = sgn(b[0]);
    std::vector<Integer> ib(top_b + 1);
    for (std::size_t i = 0; i <= top_b; ++i) ib[i] = bc[i].get_num();
    std::vector<Integer> q(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
      Integer s = a[m].get_num();
      const std::size_t jmax = std::min(m, top_b);
      for (std::size_t j = 1; j <= jmax; ++j) {
        if (ib[j] == 0) continue;
        mpz_submul(s.get_mpz_t(), ib[j].get_mpz_t(), q[m - j].get_mpz_t());
      }
      q[m] = sign > 0 ? s : Integer(-s);
    }
    std::vector<Rational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = q[i];
    return TruncatedSeries(std::move(out));
  }

  std::vector<Rational> q(n + 1);
  const Rational inv_b0 = 1 / bc[0];
  for (std::size_t m = 0; m <= n; ++m) {
    Rational s = a[m];
    const std::size_t jmax = std::min(m, top_b);
    for (std::size_t j = 1; j <= jmax; ++j) {
      if (bc[j] == 0) continue;
      s -= bc[j] * q[m - j];
    }
    q[m] = s * inv_b0;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries sqrt(const TruncatedSeries& a) {
  if (a[0] != 1) throw Error(ErrorCode::bad_constant_term, "square root needs constant term 1");
  const std::size_t n = a.order();
  std::vector<Rational> s(n + 1);
  s[0] = 1;
  // (sum s_j t^j)^2 = a  =>  2 s_m = a_m - sum_{j=1}^{m-1} s_j s_{m-j}
  for (std::size_t m = 1; m <= n; ++m) {
    Rational acc = a[m];
    for (std::size_t j = 1; j < m; ++j) acc -= s[j] * s[m - j];
    s[m] = acc / 2;
  }
  return TruncatedSeries(std::move(s));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
  if (a.order() == 0) throw Error(ErrorCode::empty_series, "derivative of an order-0 series has no coefficients");
  std::vector<Rational> d(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i) d[i - 1] = a[i] * static_cast<long>(i);
  return TruncatedSeries(std::move(d));
}

namespace {

// sum_i c_i x^i with integer c_i and x = p/q, returned as (numerator, q^deg).
Rational homogeneous_horner(const std::vector<Integer>& c, const Rational& x) {
  if (c.empty()) return 0;
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer acc = c.back();
  Integer qpow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    qpow *= q;
    acc *= p;
    if (c[i] != 0) mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), qpow.get_mpz_t());
  }
  Rational r(acc, qpow);
  r.canonicalize();
  return r;
}

}  // namespace

Rational eval_real(const TruncatedSeries& a, const Rational& x) {
  const Integer l = lcm_of_denominators(a.coefficients(), a.order());
  Rational v = homogeneous_horner(scaled_integers(a.coefficients(), a.order(), l), x);
  if (l != 1) v /= l;
  return v;
}

Rational eval_real(const LatticePolynomial& p, const Rational& x) {
  return homogeneous_horner(p.coefficients(), x);
}

double eval_double(const TruncatedSeries& a, double x) {
  double acc = 0.0;
  for (std::size_t i = a.order() + 1; i-- > 0;) acc = acc * x + a[i].get_d();
  return acc;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace wdsaw
