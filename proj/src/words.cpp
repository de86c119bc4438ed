#include "comppat/words.hpp"

#include "comppat/genfun.hpp"

namespace comppat {

namespace {

constexpr GradingVar kZ = GradingVar::Z;

TruncatedSeries zpow(unsigned e, unsigned order, const BigInt& c = 1) {
  return TruncatedSeries::monomial(kZ, order, {0, e, 0}, c);
}

TruncatedSeries one_minus_y(unsigned e, unsigned order) { return one_minus_y_pow(kZ, order, e); }

void require_k(unsigned k) {
  if (k == 0) throw UsageError("alphabet size k must be at least 1");
}

}  // namespace

TruncatedSeries word_gf(PatternId p, unsigned k, unsigned order) {
  return build_gf(p, Alphabet::words(k, order));
}

TruncatedSeries w111_closed(unsigned k, unsigned order) {
  require_k(k);
  const TruncatedSeries one = TruncatedSeries::one(kZ, order);
  const TruncatedSeries y = TruncatedSeries::monomial(kZ, order, {0, 0, 1});
  const TruncatedSeries num = one + zpow(1, order) * (one + zpow(1, order)) * one_minus_y(1, order);
  const TruncatedSeries den = one - (one.scaled(k - 1) + y) * zpow(1, order) -
                              one_minus_y(1, order).scaled(k - 1) * zpow(2, order);
  return num * reciprocal(den);
}

TruncatedSeries w112_closed(unsigned k, unsigned order) {
  require_k(k);
  TruncatedSeries den = TruncatedSeries::one(kZ, order) - zpow(1, order, k);
  for (unsigned j = 2; j <= k; ++j) {
    BigInt c = binomial(k, j);
    if (j % 2 == 1) c = -c;
    den += one_minus_y(j - 1, order) * zpow(2 * j - 1, order, c);
  }
  return reciprocal(den);
}

TruncatedSeries w123_closed(unsigned k, unsigned order) {
  require_k(k);
  TruncatedSeries den = TruncatedSeries::one(kZ, order) - zpow(1, order, k);
  for (unsigned p = 3; p <= k; ++p) {
    for (unsigned j = 0; j <= p - 3; ++j) {
      const BigInt c = binomial(p - 3, j) * binomial(k, p + j);
      if (c == 0) continue;
      den -= y_minus_one_pow(kZ, order, p - 2) * zpow(p + j, order, c);
    }
  }
  return reciprocal(den);
}

std::vector<YPolynomial> u_polys(unsigned max_n) {
  std::vector<YPolynomial> u;
  u.reserve(max_n + 1);
  auto minus = [](YPolynomial a, const YPolynomial& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
  };
  for (unsigned n = 0; n <= max_n; ++n) {
    if (n <= 1) {
      u.push_back({1});
    } else if (n % 2 == 0) {
      // (1 - y) U_{n-1}
      const YPolynomial& prev = u[n - 1];
      YPolynomial shifted(prev.size() + 1);
      for (std::size_t i = 0; i < prev.size(); ++i) {
        shifted[i] += prev[i];
        shifted[i + 1] -= prev[i];
      }
      u.push_back(minus(std::move(shifted), u[n - 2]));
    } else {
      u.push_back(minus(u[n - 1], u[n - 2]));
    }
  }
  for (auto& poly : u) {
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
  }
  return u;
}

YPolynomial u_poly(unsigned n) { return u_polys(n)[n]; }

TruncatedSeries y_polynomial_series(const YPolynomial& poly, unsigned m, unsigned order) {
  TruncatedSeries out(kZ, order);
  for (std::size_t r = 0; r < poly.size(); ++r) out.add_term({0, m, static_cast<std::uint32_t>(r)}, poly[r]);
  return out;
}

TruncatedSeries w123_chebyshev(unsigned k, unsigned order) {
  require_k(k);
  const auto u = u_polys(k >= 3 ? k - 3 : 0);
  TruncatedSeries den = TruncatedSeries::one(kZ, order) - zpow(1, order, k);
  for (unsigned j = 3; j <= k; ++j) {
    BigInt c = binomial(k, j);
    if (j % 2 == 1) c = -c;
    den -= one_minus_y(j / 2, order) * y_polynomial_series(u[j - 3], j, order).scaled(c);
  }
  return reciprocal(den);
}

TruncatedSeries w123_avoid_aj(unsigned k, unsigned order) {
  require_k(k);
  TruncatedSeries den(kZ, order);
  for (unsigned j = 0; j <= k; ++j) {
    const int a = (j % 3 == 0) ? 1 : (j % 3 == 1) ? -1 : 0;
    if (a != 0) den += zpow(j, order, binomial(k, j) * a);
  }
  return reciprocal(den);
}

TruncatedSeries w_peak_closed(unsigned k, unsigned order) {
  require_k(k);
  TruncatedSeries num(kZ, order);
  TruncatedSeries odd(kZ, order);
  for (unsigned j = 0; 2 * j <= order; ++j) {
    const BigInt even_count = binomial(k - 1 + j, 2 * j);
    if (even_count != 0) num += one_minus_y(j, order) * zpow(2 * j, order, even_count);
    const BigInt odd_count = binomial(k + j, 2 * j + 1);
    if (odd_count != 0) odd += one_minus_y(j, order) * zpow(2 * j + 1, order, odd_count);
  }
  return num * reciprocal(num - odd);
}

}  // namespace comppat
