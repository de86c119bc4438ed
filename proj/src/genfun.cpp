#include "comppat/genfun.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace comppat {

namespace {

// Coefficients are counts, so anything negative means a broken builder.
TruncatedSeries checked(TruncatedSeries s, const char* builder) {
  for (const auto& [mono, c] : s.terms()) {
    if (c < 0) {
      throw std::logic_error(std::string(builder) + " produced a negative coefficient");
    }
  }
  return s;
}

// Every weight has grading degree >= 1, so products of more than `order`
// weights vanish.
unsigned max_weight_count(const Alphabet& alphabet) {
  return std::min<unsigned>(static_cast<unsigned>(alphabet.size()), alphabet.order);
}

TruncatedSeries constant(const Alphabet& alphabet, Monomial mono, const BigInt& c) {
  return TruncatedSeries::monomial(alphabet.grading, alphabet.order, mono, c);
}

// Denominator shared by C_123 and D:  1 - t^1 - sum_{p>=3} sum_{j=0}^{p-3} C(p-3,j) t^{p+j} (y-1)^{p-2}.
TruncatedSeries denominator_123(const Alphabet& alphabet, const std::vector<TruncatedSeries>& t) {
  TruncatedSeries den = alphabet.one();
  if (t.size() > 1) den -= t[1];
  for (unsigned q = 3; q < t.size(); ++q) {
    if (t[q].is_zero()) break;
    // Collect the coefficient of t^q: sum over p with q = p + j, 0 <= j <= p - 3.
    TruncatedSeries coeff = alphabet.zero();
    for (unsigned p = 3; p <= q; ++p) {
      const BigInt c = binomial(p - 3, q - p);
      if (c != 0) coeff += y_minus_one_pow(alphabet.grading, alphabet.order, p - 2).scaled(c);
    }
    den -= t[q] * coeff;
  }
  return den;
}

// Numerator of D:  1 + sum_{p>=2} sum_{j=0}^{p-2} C(p-2,j) t^{p+j} (y-1)^{p-1}.
TruncatedSeries numerator_d(const Alphabet& alphabet, const std::vector<TruncatedSeries>& t) {
  TruncatedSeries num = alphabet.one();
  for (unsigned q = 2; q < t.size(); ++q) {
    if (t[q].is_zero()) break;
    TruncatedSeries coeff = alphabet.zero();
    for (unsigned p = 2; p <= q; ++p) {
      const BigInt c = binomial(p - 2, q - p);
      if (c != 0) coeff += y_minus_one_pow(alphabet.grading, alphabet.order, p - 1).scaled(c);
    }
    num += t[q] * coeff;
  }
  return num;
}

// num / (num - sum_{j>=0} odd[2j+1] (1-y)^j)  with  num = 1 + sum_{j>=1} even[2j] (1-y)^j.
TruncatedSeries peak_like(const Alphabet& alphabet, const std::vector<TruncatedSeries>& even,
                          const std::vector<TruncatedSeries>& odd) {
  TruncatedSeries num = alphabet.one();
  for (unsigned j = 1; 2 * j < even.size(); ++j) {
    if (even[2 * j].is_zero()) continue;
    num += even[2 * j] * one_minus_y_pow(alphabet.grading, alphabet.order, j);
  }
  TruncatedSeries den = num;
  for (unsigned j = 0; 2 * j + 1 < odd.size(); ++j) {
    if (odd[2 * j + 1].is_zero()) continue;
    den -= odd[2 * j + 1] * one_minus_y_pow(alphabet.grading, alphabet.order, j);
  }
  return num * reciprocal(den);
}

}  // namespace

Alphabet Alphabet::compositions(const PartSet& parts, unsigned order) {
  Alphabet alphabet{GradingVar::X, order, {}};
  for (std::uint32_t a : parts.materialize(order)) {
    if (a <= order) alphabet.weights.push_back({a, 1, 0});
  }
  return alphabet;
}

Alphabet Alphabet::words(unsigned k, unsigned order) {
  if (k == 0) throw UsageError("alphabet size k must be at least 1");
  return Alphabet{GradingVar::Z, order, std::vector<Monomial>(k, Monomial{0, 1, 0})};
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<BigInt> row{1};
  for (long i = 1; i <= n; ++i) {
    row.push_back(1);
    for (long j = i - 1; j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

TruncatedSeries inverse_qpochhammer(unsigned p, unsigned order) {
  TruncatedSeries product = TruncatedSeries::one(GradingVar::X, order);
  for (unsigned j = 1; j <= p; ++j) {
    product *= TruncatedSeries::one(GradingVar::X, order) -
               TruncatedSeries::monomial(GradingVar::X, order, {j, 0, 0});
  }
  return reciprocal(product);
}

std::vector<TruncatedSeries> t_polys(const Alphabet& alphabet, unsigned max_p) {
  std::vector<TruncatedSeries> t(max_p + 1, alphabet.zero());
  t[0] = alphabet.one();
  for (std::size_t k = alphabet.size(); k-- > 0;) {
    const TruncatedSeries b = alphabet.weight(k);
    for (unsigned p = max_p; p >= 1; --p) {
      if (!t[p - 1].is_zero()) t[p] += b * t[p - 1];
    }
  }
  return t;
}

TruncatedSeries t_poly(const PartSet& parts, unsigned p, unsigned order) {
  return t_polys(Alphabet::compositions(parts, order), p)[p];
}

std::vector<TruncatedSeries> m_polys_prefix(const Alphabet& alphabet, unsigned max_s) {
  std::vector<TruncatedSeries> m(max_s + 1, alphabet.zero());
  m[0] = alphabet.one();
  for (std::size_t k = 0; k < alphabet.size(); ++k) {
    const TruncatedSeries b = alphabet.weight(k);
    const std::vector<TruncatedSeries> old = m;
    for (unsigned s = 1; s <= max_s; ++s) {
      // Tuples ending in the new letter: an even-length tuple needs its
      // predecessor strictly smaller, an odd-length one allows equality.
      const TruncatedSeries& prev = (s % 2 == 0) ? old[s - 1] : m[s - 1];
      if (!prev.is_zero()) m[s] = old[s] + b * prev;
    }
  }
  return m;
}

MNPolys mn_polys_suffix(const Alphabet& alphabet, unsigned max_s) {
  MNPolys out{std::vector<TruncatedSeries>(max_s + 1, alphabet.zero()),
              std::vector<TruncatedSeries>(max_s + 1, alphabet.zero())};
  out.m[0] = alphabet.one();
  out.n[0] = alphabet.one();
  for (std::size_t k = alphabet.size(); k-- > 0;) {
    const TruncatedSeries b = alphabet.weight(k);
    const std::vector<TruncatedSeries> old_n = out.n;
    // Tuples starting with the new (smallest) letter.
    for (unsigned s = 1; s <= max_s; ++s) {
      if (!old_n[s - 1].is_zero()) out.m[s] += b * old_n[s - 1];
    }
    for (unsigned s = 1; s <= max_s; ++s) {
      if (!out.m[s - 1].is_zero()) out.n[s] = old_n[s] + b * out.m[s - 1];
    }
  }
  return out;
}

TruncatedSeries m_poly(const PartSet& parts, unsigned s, unsigned order) {
  return m_polys_prefix(Alphabet::compositions(parts, order), s)[s];
}

TruncatedSeries n_poly(const PartSet& parts, unsigned s, unsigned order) {
  return mn_polys_suffix(Alphabet::compositions(parts, order), s).n[s];
}

TruncatedSeries gf_111(const Alphabet& alphabet) {
  const GradingVar g = alphabet.grading;
  const unsigned order = alphabet.order;
  const TruncatedSeries one_minus_y = one_minus_y_pow(g, order, 1);
  // b(1 + (1-y)b) / (1 + b(1+b)(1-y)) depends only on the weight.
  std::map<Monomial, TruncatedSeries> per_weight;
  TruncatedSeries sum = alphabet.zero();
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    auto it = per_weight.find(alphabet.weights[i]);
    if (it == per_weight.end()) {
      const TruncatedSeries b = alphabet.weight(i);
      const TruncatedSeries one = alphabet.one();
      TruncatedSeries term = b * (one + one_minus_y * b) * reciprocal(one + b * (one + b) * one_minus_y);
      it = per_weight.emplace(alphabet.weights[i], std::move(term)).first;
    }
    sum += it->second;
  }
  return checked(reciprocal(alphabet.one() - sum), "gf_111");
}

TruncatedSeries gf_112(const Alphabet& alphabet) {
  const TruncatedSeries one_minus_y = one_minus_y_pow(alphabet.grading, alphabet.order, 1);
  TruncatedSeries product = alphabet.one();
  TruncatedSeries sum = alphabet.zero();
  for (std::size_t j = 0; j < alphabet.size(); ++j) {
    const TruncatedSeries b = alphabet.weight(j);
    sum += b * product;
    product *= alphabet.one() - one_minus_y * b * b;
  }
  return checked(reciprocal(alphabet.one() - sum), "gf_112");
}

TruncatedSeries gf_221(const Alphabet& alphabet) {
  const TruncatedSeries one_minus_y = one_minus_y_pow(alphabet.grading, alphabet.order, 1);
  TruncatedSeries product = alphabet.one();
  TruncatedSeries sum = alphabet.zero();
  for (std::size_t j = alphabet.size(); j-- > 0;) {
    const TruncatedSeries b = alphabet.weight(j);
    sum += b * product;
    product *= alphabet.one() - one_minus_y * b * b;
  }
  return checked(reciprocal(alphabet.one() - sum), "gf_221");
}

TruncatedSeries gf_123(const Alphabet& alphabet) {
  const auto t = t_polys(alphabet, max_weight_count(alphabet));
  return checked(reciprocal(denominator_123(alphabet, t)), "gf_123");
}

TruncatedSeries d_series(const Alphabet& alphabet) {
  const auto t = t_polys(alphabet, max_weight_count(alphabet));
  return checked(numerator_d(alphabet, t) * reciprocal(denominator_123(alphabet, t)), "d_series");
}

TruncatedSeries gf_123_recursive(const Alphabet& alphabet) {
  const TruncatedSeries one = alphabet.one();
  const TruncatedSeries one_minus_y = one_minus_y_pow(alphabet.grading, alphabet.order, 1);
  // C and D over the suffix set {a_{k+1}, ..., a_d}, starting from the empty set.
  TruncatedSeries c = one;
  TruncatedSeries d = one;
  for (std::size_t k = alphabet.size(); k-- > 0;) {
    const TruncatedSeries b = alphabet.weight(k);
    const TruncatedSeries inv = reciprocal(one - b * d);
    c = c * inv;
    d = ((one - b * one_minus_y) * d + b * one_minus_y) * inv;
  }
  return checked(c, "gf_123_recursive");
}

TruncatedSeries gf_peak(const Alphabet& alphabet) {
  const auto m = m_polys_prefix(alphabet, alphabet.order);
  return checked(peak_like(alphabet, m, m), "gf_peak");
}

TruncatedSeries gf_valley(const Alphabet& alphabet) {
  const auto mn = mn_polys_suffix(alphabet, alphabet.order);
  return checked(peak_like(alphabet, mn.m, mn.n), "gf_valley");
}

TruncatedSeries gf_peak_recursive(const Alphabet& alphabet) {
  const TruncatedSeries one = alphabet.one();
  if (alphabet.size() == 0) return one;
  const TruncatedSeries one_minus_y = one_minus_y_pow(alphabet.grading, alphabet.order, 1);
  const TruncatedSeries y = constant(alphabet, {0, 0, 1}, 1);
  // Peak series over {a_1, ..., a_k}, adding the largest letter each step.
  TruncatedSeries c = reciprocal(one - alphabet.weight(0));
  for (std::size_t k = 1; k < alphabet.size(); ++k) {
    const TruncatedSeries b = alphabet.weight(k);
    const TruncatedSeries b1y = b * one_minus_y;
    const TruncatedSeries num = (one + b1y) * c - b1y;
    const TruncatedSeries den = one - b * (one - b) * one_minus_y - b * (b1y + y) * c;
    c = num * reciprocal(den);
  }
  return checked(c, "gf_peak_recursive");
}

#define COMPPAT_PARTSET_OVERLOAD(name) \
  TruncatedSeries name(const PartSet& parts, unsigned order) { \
    return name(Alphabet::compositions(parts, order)); \
  }

COMPPAT_PARTSET_OVERLOAD(gf_111)
COMPPAT_PARTSET_OVERLOAD(gf_112)
COMPPAT_PARTSET_OVERLOAD(gf_221)
COMPPAT_PARTSET_OVERLOAD(gf_123)
COMPPAT_PARTSET_OVERLOAD(d_series)
COMPPAT_PARTSET_OVERLOAD(gf_123_recursive)
COMPPAT_PARTSET_OVERLOAD(gf_peak)
COMPPAT_PARTSET_OVERLOAD(gf_valley)
COMPPAT_PARTSET_OVERLOAD(gf_peak_recursive)

#undef COMPPAT_PARTSET_OVERLOAD

TruncatedSeries build_gf(PatternId p, const Alphabet& alphabet) {
  switch (p) {
    case PatternId::P111: return gf_111(alphabet);
    case PatternId::P112: return gf_112(alphabet);
    case PatternId::P221: return gf_221(alphabet);
    case PatternId::P123: return gf_123(alphabet);
    case PatternId::Peak: return gf_peak(alphabet);
    case PatternId::Valley: return gf_valley(alphabet);
  }
  throw UsageError("unknown pattern");
}

TruncatedSeries build_gf(PatternId p, const PartSet& parts, unsigned order) {
  return build_gf(p, Alphabet::compositions(parts, order));
}

TruncatedSeries unrestricted_gf(const Alphabet& alphabet) {
  TruncatedSeries den = alphabet.one();
  for (std::size_t i = 0; i < alphabet.size(); ++i) den -= alphabet.weight(i);
  return reciprocal(den);
}

TruncatedSeries nat_closed_form(NatClosedForm kind, unsigned k, unsigned order) {
  Monomial lead;
  unsigned p = 0;
  switch (kind) {
    case NatClosedForm::T:
      lead = {k * (k + 1) / 2, k, 0};
      p = k;
      break;
    case NatClosedForm::MEven:
      lead = {k * (k + 2), 2 * k, 0};
      p = 2 * k;
      break;
    case NatClosedForm::MOdd:
      lead = {k * k + 3 * k + 1, 2 * k + 1, 0};
      p = 2 * k + 1;
      break;
    case NatClosedForm::NOdd:
      lead = {(k + 1) * (k + 1), 2 * k + 1, 0};
      p = 2 * k + 1;
      break;
  }
  const TruncatedSeries mono = TruncatedSeries::monomial(GradingVar::X, order, lead);
  if (mono.is_zero()) return mono;
  return mono * inverse_qpochhammer(p, order);
}

}  // namespace comppat
