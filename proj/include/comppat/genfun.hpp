#pragma once

#include <cstdint>
#include <vector>

#include "comppat/patterns.hpp"
#include "comppat/series.hpp"

namespace comppat {

/// Ordered letters a_1 < ... < a_d with their weights b_i.
///
/// For compositions b_i = x^{a_i} z under x-grading; parts larger than the
/// order are dropped since they cannot occur in a composition of n <= order.
/// For words over [k] every weight is z (x set to 1) under z-grading.
struct Alphabet {
  GradingVar grading;
  unsigned order;
  std::vector<Monomial> weights;

  static Alphabet compositions(const PartSet& parts, unsigned order);
  static Alphabet words(unsigned k, unsigned order);

  std::size_t size() const { return weights.size(); }
  TruncatedSeries one() const { return TruncatedSeries::one(grading, order); }
  TruncatedSeries zero() const { return TruncatedSeries::zero(grading, order); }
  TruncatedSeries weight(std::size_t i) const { return TruncatedSeries::monomial(grading, order, weights[i]); }
};

// Exact binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

// 1 / prod_{j=1..p} (1 - x^j), x-graded.
TruncatedSeries inverse_qpochhammer(unsigned p, unsigned order);

// t^0(A), ..., t^max_p(A) via the suffix recursion
// t^p(A_k) = t^p(A_{k+1}) + b_{k+1} t^{p-1}(A_{k+1}).
std::vector<TruncatedSeries> t_polys(const Alphabet& alphabet, unsigned max_p);
TruncatedSeries t_poly(const PartSet& parts, unsigned p, unsigned order);

// M^0..M^max_s over the alternating index tuples i1 < i2 <= i3 < i4 <= ...,
// built by adding the largest letter one at a time.
std::vector<TruncatedSeries> m_polys_prefix(const Alphabet& alphabet, unsigned max_s);

struct MNPolys {
  std::vector<TruncatedSeries> m;  // tuples i1 < i2 <= i3 < ...
  std::vector<TruncatedSeries> n;  // tuples i1 <= i2 < i3 <= ...
};
// M and N jointly, built by adding the smallest letter one at a time.
MNPolys mn_polys_suffix(const Alphabet& alphabet, unsigned max_s);

TruncatedSeries m_poly(const PartSet& parts, unsigned s, unsigned order);
TruncatedSeries n_poly(const PartSet& parts, unsigned s, unsigned order);

// Closed-form builders over an alphabet.
TruncatedSeries gf_111(const Alphabet& alphabet);
TruncatedSeries gf_112(const Alphabet& alphabet);
TruncatedSeries gf_221(const Alphabet& alphabet);
TruncatedSeries gf_123(const Alphabet& alphabet);
TruncatedSeries d_series(const Alphabet& alphabet);
TruncatedSeries gf_123_recursive(const Alphabet& alphabet);
TruncatedSeries gf_peak(const Alphabet& alphabet);
TruncatedSeries gf_valley(const Alphabet& alphabet);
TruncatedSeries gf_peak_recursive(const Alphabet& alphabet);

TruncatedSeries gf_111(const PartSet& parts, unsigned order);
TruncatedSeries gf_112(const PartSet& parts, unsigned order);
TruncatedSeries gf_221(const PartSet& parts, unsigned order);
TruncatedSeries gf_123(const PartSet& parts, unsigned order);
TruncatedSeries d_series(const PartSet& parts, unsigned order);
TruncatedSeries gf_123_recursive(const PartSet& parts, unsigned order);
TruncatedSeries gf_peak(const PartSet& parts, unsigned order);
TruncatedSeries gf_valley(const PartSet& parts, unsigned order);
TruncatedSeries gf_peak_recursive(const PartSet& parts, unsigned order);

// Dispatch to the closed-form builder for a statistic.
TruncatedSeries build_gf(PatternId p, const Alphabet& alphabet);
TruncatedSeries build_gf(PatternId p, const PartSet& parts, unsigned order);

// The pattern-free series 1 / (1 - sum_i b_i).
TruncatedSeries unrestricted_gf(const Alphabet& alphabet);

enum class NatClosedForm { T, MEven, MOdd, NOdd };

/// Product forms of t^p, M^{2s}, M^{2s+1} and N^{2s+1} over N:
///   T      x^{p(p+1)/2} z^p / (x;x)_p
///   MEven  x^{s(s+2)} z^{2s} / (x;x)_{2s}
///   MOdd   x^{s^2+3s+1} z^{2s+1} / (x;x)_{2s+1}
///   NOdd   x^{(s+1)^2} z^{2s+1} / (x;x)_{2s+1}
TruncatedSeries nat_closed_form(NatClosedForm kind, unsigned s_or_p, unsigned order);

}  // namespace comppat
