#include <gtest/gtest.h>

#include "comppat/genfun.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace comppat;

namespace {

constexpr GradingVar X = GradingVar::X;

const std::vector<PartSet>& part_sets() {
  static const std::vector<PartSet> sets = {PartSet::of({1, 2}), PartSet::of({1, 3}), PartSet::of({1, 3, 4}),
                                            PartSet::of({2, 3, 5}), PartSet::nat()};
  return sets;
}

TruncatedSeries xz(unsigned order, unsigned n, unsigned m, long c = 1) { return make_monomial(X, order, n, m, 0, c); }

std::vector<BigInt> avoiders_of(const TruncatedSeries& s) {
  const TruncatedSeries flat = substitute_z1(substitute_y0(s));
  std::vector<BigInt> out;
  for (unsigned n = 0; n <= s.order(); ++n) out.push_back(flat.coefficient(n, 0, 0));
  return out;
}

}  // namespace

TEST(Genfun, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

TEST(Genfun, InverseQPochhammerCountsPartitions) {
  // Partitions of n into parts <= 3: 1,1,2,3,4,5,7,8,10,12,14
  const long expected[] = {1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 14};
  const TruncatedSeries s = inverse_qpochhammer(3, 10);
  for (unsigned n = 0; n <= 10; ++n) EXPECT_EQ(s.coefficient(n, 0, 0), expected[n]);
}

TEST(Genfun, AlphabetDropsPartsBeyondOrder) {
  const Alphabet a = Alphabet::compositions(PartSet::of({1, 3, 7}), 5);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(Alphabet::compositions(PartSet::nat(), 4).size(), 4u);
  EXPECT_THROW(Alphabet::words(0, 3), UsageError);
}

TEST(Genfun, TPolySmallCases) {
  const PartSet a = PartSet::of({1, 2, 3});
  EXPECT_EQ(t_poly(a, 0, 8), TruncatedSeries::one(X, 8));
  EXPECT_EQ(t_poly(a, 2, 8), xz(8, 3, 2) + xz(8, 4, 2) + xz(8, 5, 2));
  EXPECT_TRUE(t_poly(a, 4, 8).is_zero());
}

TEST(Genfun, TPolyMatchesSubsetEnumeration) {
  for (const PartSet& a : part_sets()) {
    for (unsigned p = 0; p <= 5; ++p) EXPECT_EQ(t_poly(a, p, 14), oracle::t_poly(a, p, 14)) << a.to_string() << " p=" << p;
  }
}

TEST(Genfun, MPolySmallCases) {
  const PartSet a = PartSet::of({1, 2, 3});
  EXPECT_EQ(m_poly(a, 1, 8), xz(8, 1, 1) + xz(8, 2, 1) + xz(8, 3, 1));
  EXPECT_EQ(m_poly(a, 2, 8), xz(8, 3, 2) + xz(8, 4, 2) + xz(8, 5, 2));
  EXPECT_EQ(m_poly(PartSet::of({4}), 2, 20), TruncatedSeries::zero(X, 20));
  EXPECT_EQ(n_poly(PartSet::of({4}), 2, 20), xz(20, 8, 2));
}

TEST(Genfun, MAndNMatchTupleEnumeration) {
  for (const PartSet& a : part_sets()) {
    for (unsigned s = 0; s <= 6; ++s) {
      EXPECT_EQ(m_poly(a, s, 14), oracle::m_poly(a, s, 14)) << a.to_string() << " s=" << s;
      EXPECT_EQ(n_poly(a, s, 14), oracle::n_poly(a, s, 14)) << a.to_string() << " s=" << s;
    }
  }
}

TEST(Genfun, PrefixAndSuffixDPsAgree) {
  for (const PartSet& a : part_sets()) {
    const Alphabet alpha = Alphabet::compositions(a, 20);
    const auto prefix = m_polys_prefix(alpha, 12);
    const auto suffix = mn_polys_suffix(alpha, 12);
    for (unsigned s = 0; s <= 12; ++s) EXPECT_EQ(prefix[s], suffix.m[s]) << a.to_string() << " s=" << s;
  }
}

TEST(Genfun, NatClosedFormsMatchDPs) {
  const unsigned order = 20;
  const PartSet nat = PartSet::nat();
  for (unsigned p = 0; p <= 6; ++p) EXPECT_EQ(nat_closed_form(NatClosedForm::T, p, order), t_poly(nat, p, order));
  for (unsigned s = 0; s <= 4; ++s) {
    EXPECT_EQ(nat_closed_form(NatClosedForm::MEven, s, order), m_poly(nat, 2 * s, order)) << s;
    EXPECT_EQ(nat_closed_form(NatClosedForm::MOdd, s, order), m_poly(nat, 2 * s + 1, order)) << s;
    EXPECT_EQ(nat_closed_form(NatClosedForm::NOdd, s, order), n_poly(nat, 2 * s + 1, order)) << s;
  }
}

TEST(Genfun, GoldenAvoiderSequences) {
  for (PatternId p : kAllPatterns) {
    const auto& want = golden::avoiders(p);
    const unsigned order = static_cast<unsigned>(want.size()) - 1;
    const auto got = avoiders_of(build_gf(p, PartSet::nat(), order));
    for (unsigned n = 0; n <= order; ++n) EXPECT_EQ(got[n], want[n]) << to_string(p) << " n=" << n;
  }
}

TEST(Genfun, FirstOccurrences) {
  // 123 first occurs at n = 6, a peak at n = 4 (121), a valley at n = 5 (212).
  auto first_r1 = [](PatternId p) {
    const TruncatedSeries s = substitute_z1(build_gf(p, PartSet::nat(), 10));
    for (unsigned n = 0; n <= 10; ++n)
      if (s.coefficient(n, 0, 1) != 0) return n;
    return 99u;
  };
  EXPECT_EQ(first_r1(PatternId::P123), 6u);
  EXPECT_EQ(first_r1(PatternId::Peak), 4u);
  EXPECT_EQ(first_r1(PatternId::Valley), 5u);
  EXPECT_EQ(first_r1(PatternId::P111), 3u);
}

TEST(Genfun, TablesMatchBruteForce) {
  for (PatternId p : kAllPatterns) {
    for (const PartSet& a : part_sets()) {
      const auto oracle = brute_force_table(p, a, 11);
      const auto formula = table_from_series(p, build_gf(p, a, 11), oracle.set);
      EXPECT_EQ(formula.counts, oracle.counts) << to_string(p) << " " << a.to_string();
    }
  }
}

TEST(Genfun, SingleCells) {
  const TruncatedSeries s = gf_111(PartSet::nat(), 4);
  EXPECT_EQ(s.coefficient(4, 4, 2), 1);
  const TruncatedSeries peak = gf_peak(PartSet::nat(), 6);
  EXPECT_EQ(peak.coefficient(4, 3, 1), 1);
  // Compositions of 5 into 1s and 2s.
  EXPECT_EQ(avoiders_of(unrestricted_gf(Alphabet::compositions(PartSet::of({1, 2}), 5)))[5], 8);
}

TEST(Genfun, RecursiveFormsAgree) {
  for (const PartSet& a : part_sets()) {
    EXPECT_EQ(gf_123(a, 16), gf_123_recursive(a, 16)) << a.to_string();
    EXPECT_EQ(gf_peak(a, 16), gf_peak_recursive(a, 16)) << a.to_string();
  }
}

TEST(Genfun, DSeriesBaseCases) {
  EXPECT_EQ(d_series(PartSet::of({3}), 12), reciprocal(TruncatedSeries::one(X, 12) - xz(12, 3, 1)));
  // Every part exceeds the order: the alphabet is empty.
  EXPECT_EQ(d_series(PartSet::of({9}), 5), TruncatedSeries::one(X, 5));
}

TEST(Genfun, DSeriesMatchesSentinelEnumeration) {
  for (const PartSet& a : {PartSet::of({2, 3}), PartSet::of({2, 3, 5}), PartSet::of({3, 4, 6})}) {
    EXPECT_EQ(d_series(a, 12), oracle::sentinel_123(a, 12)) << a.to_string();
  }
}

TEST(Genfun, PeakRecursiveSingleLetter) {
  EXPECT_EQ(gf_peak_recursive(PartSet::of({2}), 10), reciprocal(TruncatedSeries::one(X, 10) - xz(10, 2, 1)));
}

TEST(Genfun, YOneCollapse) {
  for (const PartSet& a : part_sets()) {
    const TruncatedSeries free = unrestricted_gf(Alphabet::compositions(a, 14));
    for (PatternId p : kAllPatterns) EXPECT_EQ(substitute_y1(build_gf(p, a, 14)), free) << to_string(p);
    EXPECT_EQ(substitute_y1(gf_123_recursive(a, 14)), free);
    EXPECT_EQ(substitute_y1(gf_peak_recursive(a, 14)), free);
  }
}

TEST(Genfun, TruncationOrderConsistency) {
  for (const PartSet& a : part_sets()) {
    for (PatternId p : kAllPatterns) EXPECT_EQ(build_gf(p, a, 20).truncated(10), build_gf(p, a, 10)) << to_string(p);
    EXPECT_EQ(d_series(a, 20).truncated(10), d_series(a, 10));
  }
}

TEST(Genfun, NoNegativeCoefficients) {
  for (PatternId p : kAllPatterns)
    for (const auto& [mono, c] : build_gf(p, PartSet::nat(), 16).terms()) EXPECT_GT(c, 0);
}

TEST(Genfun, CompositionSeriesAreNotSymmetric) {
  // 112/221 and peak/valley differ over N even though they agree for words.
  const auto a = avoiders_of(gf_112(PartSet::nat(), 12));
  const auto b = avoiders_of(gf_221(PartSet::nat(), 12));
  EXPECT_NE(a, b);
  EXPECT_NE(avoiders_of(gf_peak(PartSet::nat(), 12)), avoiders_of(gf_valley(PartSet::nat(), 12)));
}

TEST(Genfun, ValleyPeakTransfer) {
  for (unsigned n = 1; n <= 9; ++n) {
    for (unsigned m = 1; m <= n; ++m) {
      const auto counts = oracle::valley_peak_transfer(n, m);
      EXPECT_EQ(counts.valleys, counts.peaks) << "n=" << n << " m=" << m;
    }
  }
}
