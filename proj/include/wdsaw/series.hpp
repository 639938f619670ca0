#pragma once

// Exact truncated power series and integer polynomials in one variable t.
//
// Coefficients are GMP rationals/integers; nothing in this layer rounds.
// Every series carries its truncation order explicitly: a series of order n
// holds the coefficients of t^0..t^n and says nothing about higher terms.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wdsaw {

using Integer = mpz_class;
using Rational = mpq_class;

class TruncatedSeries;

/// Integer polynomial in canonical form (no trailing zero coefficients).
class LatticePolynomial {
 public:
  LatticePolynomial() = default;
  explicit LatticePolynomial(std::vector<Integer> coefficients);
  LatticePolynomial(std::initializer_list<long> coefficients);

  static LatticePolynomial monomial(const Integer& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(std::size_t i) const;

  Rational evaluate(const Rational& t) const;
  double evaluate(double t) const;
  std::complex<double> evaluate(std::complex<double> t) const;

  TruncatedSeries to_series(std::size_t order) const;
  std::string to_string() const;

  LatticePolynomial& operator+=(const LatticePolynomial& other);
  LatticePolynomial& operator-=(const LatticePolynomial& other);
  LatticePolynomial& operator*=(const LatticePolynomial& other);

  friend LatticePolynomial operator+(LatticePolynomial a, const LatticePolynomial& b) { return a += b; }
  friend LatticePolynomial operator-(LatticePolynomial a, const LatticePolynomial& b) { return a -= b; }
  friend LatticePolynomial operator*(LatticePolynomial a, const LatticePolynomial& b) { return a *= b; }
  friend bool operator==(const LatticePolynomial& a, const LatticePolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void canonicalize();

  std::vector<Integer> coeffs_;
};

LatticePolynomial pow(const LatticePolynomial& base, unsigned exponent);

/// Power series in t known up to t^order inclusive.
class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0);
  /// Order is coefficients.size() - 1; the list must be nonempty.
  explicit TruncatedSeries(std::vector<Rational> coefficients);
  TruncatedSeries(std::initializer_list<long> coefficients);

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  static TruncatedSeries monomial(const Rational& c, std::size_t degree, std::size_t order);
  /// 1/(1 - t) to the given order.
  static TruncatedSeries geometric(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

  bool has_integer_coefficients() const;
  bool is_nonnegative() const;
  /// Index of the first nonzero coefficient, or order()+1 if all vanish.
  std::size_t valuation() const;
  /// Exact integer coefficients; throws if some coefficient is not integral.
  std::vector<Integer> integer_coefficients() const;

  TruncatedSeries truncated(std::size_t order) const;
  /// Multiply by t^m; the order is unchanged and the top m terms fall off.
  TruncatedSeries shifted_up(std::size_t m) const;
  /// Divide by t^m; the low m coefficients must vanish; order drops by m.
  TruncatedSeries shifted_down(std::size_t m) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) { return a *= Rational(-1); }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product truncated at min(order(a), order(b)).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Quotient a/b at min(order(a), order(b)). Throws ZeroConstantTerm if b(0) = 0.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

/// Square root with constant term 1. Throws BadConstantTerm unless a(0) = 1.
TruncatedSeries sqrt(const TruncatedSeries& a);

/// Termwise derivative; the order drops by one. Throws EmptySeries at order 0.
TruncatedSeries derivative(const TruncatedSeries& a);

/// Exact Horner evaluation of the stored coefficients.
Rational eval_real(const TruncatedSeries& a, const Rational& x);
Rational eval_real(const LatticePolynomial& p, const Rational& x);

/// Double-precision evaluation of the stored coefficients.
double eval_double(const TruncatedSeries& a, double x);

/// Decimal rendering of a rational, e.g. "17", "-3/4".
std::string to_string(const Rational& q);

}  // namespace wdsaw
