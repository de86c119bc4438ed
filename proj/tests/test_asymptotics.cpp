#include <gtest/gtest.h>

#include <cmath>

#include "comppat/asymptotics.hpp"
#include "comppat/genfun.hpp"
#include "golden.hpp"

using namespace comppat;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Asymptotics, ReferenceConstants) {
  for (PatternId p : kAllPatterns) {
    const AsymptoticEstimate est = estimate(p);
    const auto reference = golden::reference_asymptotics(p);
    EXPECT_LT(rel(est.growth_v, reference.v), 1e-5) << to_string(p) << " v=" << est.growth_v;
    EXPECT_LT(rel(est.constant_K, reference.K), 1e-4) << to_string(p) << " K=" << est.constant_K;
    EXPECT_EQ(est.winding, 1) << to_string(p);
    EXPECT_LE(est.residual, 1e-9) << to_string(p);
    EXPECT_GT(est.rho, 0.5);
  }
}

TEST(Asymptotics, EvaluationAtZero) {
  for (PatternId p : kAllPatterns) {
    const BoundedValue v = eval_f_bounded(p, 0.0);
    EXPECT_NEAR(std::abs(v.value - 1.0), 0.0, 1e-15) << to_string(p);
  }
}

TEST(Asymptotics, MatchesTruncatedSeriesNearZero) {
  // At small x the reciprocal of the avoider series is f itself.
  const double x = 0.2;
  for (PatternId p : kAllPatterns) {
    const TruncatedSeries s = substitute_z1(substitute_y0(build_gf(p, PartSet::nat(), 40)));
    double sum = 0;
    for (unsigned n = 0; n <= 40; ++n) sum += s.coefficient(n, 0, 0).convert_to<double>() * std::pow(x, n);
    EXPECT_NEAR(eval_f(p, x).real() * sum, 1.0, 1e-12) << to_string(p);
  }
}

TEST(Asymptotics, TailBoundIsReported) {
  const BoundedValue v = eval_f_bounded(PatternId::P221, Complex(0.6, 0.3), 1e-12);
  EXPECT_LT(v.tail_bound, 1e-12);
  const BoundedValue tight = eval_f_bounded(PatternId::P221, Complex(0.6, 0.3), 1e-15);
  EXPECT_NEAR(std::abs(v.value - tight.value), 0.0, 2e-12);
}

TEST(Asymptotics, DomainIsChecked) {
  EXPECT_THROW(eval_f(PatternId::P111, 0.995), DomainError);
  EXPECT_THROW(eval_f(PatternId::Peak, Complex(0.8, 0.8)), DomainError);
  EXPECT_NO_THROW(eval_f(PatternId::P123, 0.9));
}

TEST(Asymptotics, RootIsBracketed) {
  for (PatternId p : kAllPatterns) {
    const double rho = find_rho(p);
    EXPECT_GT(eval_f(p, rho - 1e-9).real(), 0);
    EXPECT_LT(eval_f(p, rho + 1e-9).real(), 0);
  }
  EXPECT_THROW(find_rho(PatternId::P111, 1e-14), UsageError);
}

TEST(Asymptotics, WindingDependsOnRadius) {
  // rho_111 = 0.5233...: outside the circle of radius 0.51, inside 0.7.
  EXPECT_EQ(winding_number(PatternId::P111, 0.51, 4096), 0);
  EXPECT_EQ(winding_number(PatternId::P111, 0.7, 4096), 1);
}

TEST(Asymptotics, WindingArgumentsAreChecked) {
  EXPECT_THROW(winding_number(PatternId::P111, 0.7, 512), UsageError);
  EXPECT_THROW(winding_number(PatternId::P111, 0.85, 4096), UsageError);
}

TEST(Asymptotics, UnderSamplingIsDetected) {
  // A phase of 700 turns per circuit moves far too fast for 1024 samples.
  auto fast = [](Complex x) { return std::pow(x / std::abs(x), 700); };
  EXPECT_THROW(winding_number(fast, 0.7, 1024), UnderSamplingError);
  auto slow = [](Complex x) { return x * x * x; };
  EXPECT_EQ(winding_number(slow, 0.7, 1024), 3);
}

TEST(Asymptotics, CurveIsConjugateSymmetric) {
  const auto curve = emit_curve(PatternId::Valley, 0.7, 1024);
  ASSERT_EQ(curve.size(), 1024u);
  EXPECT_DOUBLE_EQ(curve[0].re_x, 0.7);
  EXPECT_EQ(curve[0].im_x, 0.0);
  for (unsigned k = 1; k < 1024; ++k) {
    EXPECT_EQ(curve[k].re_x, curve[1024 - k].re_x);
    EXPECT_EQ(curve[k].im_x, -curve[1024 - k].im_x);
    EXPECT_NEAR(curve[k].re_f, curve[1024 - k].re_f, 1e-12);
    EXPECT_NEAR(curve[k].im_f, -curve[1024 - k].im_f, 1e-12);
  }
}

TEST(Asymptotics, PredictionTracksExactCounts) {
  for (PatternId p : kAllPatterns) {
    const auto& seq = golden::avoiders(p);
    const unsigned n = static_cast<unsigned>(seq.size()) - 1;
    const double exact = static_cast<double>(seq[n]);
    EXPECT_LT(std::abs(predict_count(estimate(p), n) - exact) / exact, 0.01) << to_string(p);
  }
}
