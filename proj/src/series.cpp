#include "comppat/series.hpp"

#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

namespace comppat {

namespace {

constexpr unsigned kFieldBits = 21;
constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kFieldBits) - 1;

std::uint64_t pack(const Monomial& mono) {
  if (mono.n > kFieldMask || mono.m > kFieldMask || mono.r > kFieldMask) {
    throw RepresentationError("exponent too large to pack");
  }
  return (std::uint64_t{mono.n} << (2 * kFieldBits)) | (std::uint64_t{mono.m} << kFieldBits) |
         std::uint64_t{mono.r};
}

Monomial unpack(std::uint64_t key) {
  return {static_cast<std::uint32_t>(key >> (2 * kFieldBits)),
          static_cast<std::uint32_t>((key >> kFieldBits) & kFieldMask),
          static_cast<std::uint32_t>(key & kFieldMask)};
}

using Term = std::pair<const Monomial, BigInt>;
using Accumulator = std::unordered_map<std::uint64_t, BigInt>;

// Terms of a series grouped by grading exponent.
std::vector<std::vector<const Term*>> by_degree(const TruncatedSeries& s) {
  std::vector<std::vector<const Term*>> buckets(s.order() + 1);
  for (const auto& term : s.terms()) {
    buckets[s.grading_degree(term.first)].push_back(&term);
  }
  return buckets;
}

void accumulate(Accumulator& acc, const Term& a, const Term& b) {
  BigInt product;
  boost::multiprecision::multiply(product, a.second, b.second);
  acc[pack(a.first * b.first)] += product;
}

const char* grading_name(GradingVar g) { return g == GradingVar::X ? "x" : "z"; }

}  // namespace

std::ostream& operator<<(std::ostream& os, const Monomial& mono) {
  return os << '(' << mono.n << ',' << mono.m << ',' << mono.r << ')';
}

TruncatedSeries TruncatedSeries::one(GradingVar grading, unsigned order) {
  return monomial(grading, order, {0, 0, 0}, 1);
}

TruncatedSeries TruncatedSeries::monomial(GradingVar grading, unsigned order, Monomial mono,
                                          const BigInt& c) {
  TruncatedSeries s(grading, order);
  s.add_term(mono, c);
  return s;
}

std::optional<unsigned> TruncatedSeries::min_grading_degree() const {
  std::optional<unsigned> best;
  for (const auto& [mono, c] : terms_) {
    const unsigned d = grading_degree(mono);
    if (!best || d < *best) best = d;
  }
  return best;
}

BigInt TruncatedSeries::coefficient(unsigned n, unsigned m, unsigned r) const {
  const Monomial mono{n, m, r};
  if (grading_degree(mono) > order_) {
    std::ostringstream msg;
    msg << "coefficient " << mono << " lies beyond truncation order " << order_ << " in "
        << grading_name(grading_);
    throw OutOfRangeError(msg.str());
  }
  auto it = terms_.find(mono);
  return it == terms_.end() ? BigInt(0) : it->second;
}

TruncatedSeries TruncatedSeries::truncated(unsigned new_order) const {
  TruncatedSeries out(grading_, new_order);
  for (const auto& [mono, c] : terms_) {
    if (grading_degree(mono) <= new_order) out.terms_.emplace_hint(out.terms_.end(), mono, c);
  }
  return out;
}

void TruncatedSeries::add_term(const Monomial& mono, const BigInt& c) {
  if (c == 0 || grading_degree(mono) > order_) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o, const char* op) const {
  if (grading_ != o.grading_ || order_ != o.order_) {
    std::ostringstream msg;
    msg << op << ": operands differ in shape (" << grading_name(grading_) << '/' << order_ << " vs "
        << grading_name(o.grading_) << '/' << o.order_ << ')';
    throw UsageError(msg.str());
  }
}

TruncatedSeries TruncatedSeries::scaled(const BigInt& c) const {
  TruncatedSeries out(grading_, order_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [mono, v] : out.terms_) v *= c;
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_compatible(o, "add");
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_compatible(o, "sub");
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  *this = *this * o;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b, "mul");
  TruncatedSeries out(a.grading(), a.order());
  if (a.is_zero() || b.is_zero()) return out;

  const auto bb = by_degree(b);
  Accumulator acc;
  for (const auto& ta : a.terms()) {
    const unsigned da = a.grading_degree(ta.first);
    for (unsigned db = 0; da + db <= a.order(); ++db) {
      for (const Term* tb : bb[db]) accumulate(acc, ta, *tb);
    }
  }
  for (auto& [key, c] : acc) {
    if (c != 0) out.terms_.emplace(unpack(key), std::move(c));
  }
  return out;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
  if (s.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [mono, c] : s.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    const bool bare = mono == Monomial{};
    if (mag != 1 || bare) os << mag;
    auto var = [&](char name, std::uint32_t e) {
      if (e == 0) return;
      os << name;
      if (e > 1) os << '^' << e;
    };
    var('x', mono.n);
    var('z', mono.m);
    var('y', mono.r);
  }
  return os;
}

TruncatedSeries make_monomial(GradingVar grading, unsigned order, unsigned n, unsigned m, unsigned r,
                              const BigInt& c) {
  return TruncatedSeries::monomial(grading, order, {n, m, r}, c);
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries reciprocal(const TruncatedSeries& a) {
  const BigInt a0 = a.coefficient(0, 0, 0);
  if (a0 != 1 && a0 != -1) {
    throw NonInvertibleError("reciprocal: constant term must be +1 or -1, got " + a0.str());
  }
  for (const auto& [mono, c] : a.terms()) {
    if (mono != Monomial{} && a.grading_degree(mono) == 0) {
      std::ostringstream msg;
      msg << "reciprocal: term " << mono << " has zero grading degree; normalize the input first";
      throw RepresentationError(msg.str());
    }
  }

  const auto ab = by_degree(a);
  // Degree-d slice of the result: b_d = -a0 * sum_{e>=1} a_e b_{d-e}, using a0^-1 = a0.
  std::vector<std::vector<Term>> slices(a.order() + 1);
  slices[0].emplace_back(Monomial{}, a0);
  Accumulator acc;
  for (unsigned d = 1; d <= a.order(); ++d) {
    acc.clear();
    for (unsigned e = 1; e <= d; ++e) {
      for (const Term* ta : ab[e]) {
        for (const Term& tb : slices[d - e]) accumulate(acc, *ta, tb);
      }
    }
    for (auto& [key, c] : acc) {
      if (c != 0) slices[d].emplace_back(unpack(key), a0 == 1 ? BigInt(-c) : c);
    }
  }

  TruncatedSeries out(a.grading(), a.order());
  for (auto& slice : slices) {
    for (auto& [mono, c] : slice) out.add_term(mono, c);
  }
  return out;
}

TruncatedSeries substitute_y0(const TruncatedSeries& a) {
  TruncatedSeries out(a.grading(), a.order());
  for (const auto& [mono, c] : a.terms()) {
    if (mono.r == 0) out.add_term(mono, c);
  }
  return out;
}

TruncatedSeries substitute_y1(const TruncatedSeries& a) {
  TruncatedSeries out(a.grading(), a.order());
  for (const auto& [mono, c] : a.terms()) out.add_term({mono.n, mono.m, 0}, c);
  return out;
}

TruncatedSeries substitute_z1(const TruncatedSeries& a) {
  if (a.grading() != GradingVar::X) {
    throw UsageError("substitute_z1: z is the truncation variable of this series");
  }
  TruncatedSeries out(a.grading(), a.order());
  for (const auto& [mono, c] : a.terms()) out.add_term({mono.n, 0, mono.r}, c);
  return out;
}

TruncatedSeries one_minus_y_pow(GradingVar grading, unsigned order, unsigned e) {
  // Binomial expansion sum_i C(e,i) (-y)^i.
  TruncatedSeries out(grading, order);
  BigInt c = 1;
  for (unsigned i = 0; i <= e; ++i) {
    out.add_term({0, 0, i}, (i % 2 == 0) ? c : BigInt(-c));
    c = c * (e - i) / (i + 1);
  }
  return out;
}

TruncatedSeries y_minus_one_pow(GradingVar grading, unsigned order, unsigned e) {
  TruncatedSeries out = one_minus_y_pow(grading, order, e);
  return e % 2 == 0 ? out : -out;
}

}  // namespace comppat
