#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace comppat {

using BigInt = boost::multiprecision::cpp_int;

// Errors raised by the series ring.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonInvertibleError : std::domain_error {
  using std::domain_error::domain_error;
};
struct RepresentationError : std::domain_error {
  using std::domain_error::domain_error;
};
struct OutOfRangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// The variable whose degree bounds truncation: x for composition series,
// z for word series.
enum class GradingVar { X, Z };

// Exponent triple of x^n z^m y^r.
struct Monomial {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint32_t r = 0;

  auto operator<=>(const Monomial&) const = default;

  Monomial operator*(const Monomial& o) const { return {n + o.n, m + o.m, r + o.r}; }
};

std::ostream& operator<<(std::ostream& os, const Monomial& mono);

/// Trivariate power series in x, z, y with exact integer coefficients,
/// truncated at `order` in the grading variable.
///
/// Terms are kept in a sorted map with zero coefficients elided, so two
/// series compare equal exactly when they carry the same grading, order
/// and coefficients.  Values are immutable once built; the arithmetic
/// below always produces fresh series.
class TruncatedSeries {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  TruncatedSeries(GradingVar grading, unsigned order) : grading_(grading), order_(order) {}

  static TruncatedSeries zero(GradingVar grading, unsigned order) { return {grading, order}; }
  static TruncatedSeries one(GradingVar grading, unsigned order);
  // c x^n z^m y^r, or zero when the grading exponent exceeds `order`.
  static TruncatedSeries monomial(GradingVar grading, unsigned order, Monomial mono,
                                  const BigInt& c = 1);

  GradingVar grading() const { return grading_; }
  unsigned order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  unsigned grading_degree(const Monomial& mono) const {
    return grading_ == GradingVar::X ? mono.n : mono.m;
  }
  // Smallest grading exponent among stored terms; empty for the zero series.
  std::optional<unsigned> min_grading_degree() const;

  // Throws OutOfRangeError when the grading exponent of the query exceeds
  // the truncation order.
  BigInt coefficient(unsigned n, unsigned m, unsigned r) const;
  BigInt coefficient(const Monomial& mono) const { return coefficient(mono.n, mono.m, mono.r); }

  // Discards every term of grading exponent above `new_order`.
  TruncatedSeries truncated(unsigned new_order) const;

  TruncatedSeries scaled(const BigInt& c) const;
  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  // Adds c to the coefficient of `mono`; silently dropped beyond the order.
  void add_term(const Monomial& mono, const BigInt& c);

  std::string to_string() const;

 private:
  void require_compatible(const TruncatedSeries& o, const char* op) const;

  GradingVar grading_;
  unsigned order_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

TruncatedSeries make_monomial(GradingVar grading, unsigned order, unsigned n, unsigned m, unsigned r,
                              const BigInt& c);
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse, solved degree by degree in the grading variable.
///
/// Requires the (0,0,0) coefficient to be +1 or -1 (NonInvertibleError
/// otherwise) and every other term to have positive grading exponent
/// (RepresentationError otherwise).  Under these conditions the result has
/// integer coefficients.
TruncatedSeries reciprocal(const TruncatedSeries& a);

// y := 0, i.e. keep the r = 0 slice.
TruncatedSeries substitute_y0(const TruncatedSeries& a);
// y := 1, summing over r.
TruncatedSeries substitute_y1(const TruncatedSeries& a);
// z := 1, summing over m.  X-graded series only.
TruncatedSeries substitute_z1(const TruncatedSeries& a);

// (1 - y)^e and (y - 1)^e as series of the given shape.
TruncatedSeries one_minus_y_pow(GradingVar grading, unsigned order, unsigned e);
TruncatedSeries y_minus_one_pow(GradingVar grading, unsigned order, unsigned e);

}  // namespace comppat
