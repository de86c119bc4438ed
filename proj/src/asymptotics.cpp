#include "comppat/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace comppat {

namespace {

constexpr unsigned kMaxTerms = 200000;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_domain(Complex x) {
  if (!(std::abs(x) <= kMaxEvalRadius)) {
    std::ostringstream msg;
    msg << "|x| = " << std::abs(x) << " exceeds " << kMaxEvalRadius << "; tail bound not achievable";
    throw DomainError(msg.str());
  }
}

[[noreturn]] void too_many_terms() {
  throw DomainError("tail bound not reached within the term limit");
}

Complex ipow(Complex x, unsigned e) {
  Complex out = 1.0;
  Complex base = x;
  while (e > 0) {
    if (e & 1u) out *= base;
    base *= base;
    e >>= 1u;
  }
  return out;
}

// Upper bound for |1/(x;x)_p| over all p: prod_{j>=1} 1/(1 - t^j), t = |x|.
double inverse_qpochhammer_bound(double t) {
  double log_sum = 0;
  double tj = 1;
  for (unsigned j = 1; j < kMaxTerms; ++j) {
    tj *= t;
    log_sum += -std::log1p(-tj);
    // -log(1-u) <= u / (1-u); the remaining sum is at most t^{j+1} / ((1-t)(1-t^{j+1})).
    const double rest = tj * t / ((1 - t) * (1 - tj * t));
    if (rest < 1e-18) return std::exp(log_sum + rest);
  }
  too_many_terms();
}

// sum_{i>=1} x^i(1+x^i) / (1 + x^i(1+x^i))
BoundedValue sum_111(Complex x, double t, double eps) {
  Complex sum = 0;
  Complex xi = 1;
  double ti = 1;
  for (unsigned i = 1; i < kMaxTerms; ++i) {
    xi *= x;
    ti *= t;
    const Complex w = xi * (1.0 + xi);
    sum += w / (1.0 + w);
    // Once t^i <= 1/4 every later term is below 2 t^i in modulus.
    if (ti <= 0.25) {
      const double tail = 2 * ti * t / (1 - t);
      if (tail < eps) return {sum, tail};
    }
  }
  too_many_terms();
}

// sum_{j>=1} x^j prod_{i<j} (1 - x^{2i})
BoundedValue sum_112(Complex x, double t, double eps) {
  const double product_bound = std::exp(t * t / (1 - t * t));
  Complex sum = 0;
  Complex product = 1;
  Complex xj = 1;
  double tj = 1;
  for (unsigned j = 1; j < kMaxTerms; ++j) {
    xj *= x;
    tj *= t;
    sum += xj * product;
    product *= 1.0 - xj * xj;
    const double tail = product_bound * tj * t / (1 - t);
    if (tail < eps) return {sum, tail};
  }
  too_many_terms();
}

// sum_{i>=1} x^i prod_{j>i} (1 - x^{2j})
BoundedValue sum_221(Complex x, double t, double eps) {
  if (t == 0) return {0.0, 0.0};
  const double product_bound = std::exp(t * t / (1 - t * t));
  // Sum cutoff I, then product cutoff L >= I.
  unsigned cut_sum = 1;
  double t_pow = t;
  while (product_bound * t_pow * t / (1 - t) >= eps / 2) {
    t_pow *= t;
    if (++cut_sum >= kMaxTerms) too_many_terms();
  }
  unsigned cut_product = cut_sum;
  auto product_error = [&](unsigned l) {
    const double delta = std::pow(t, 2.0 * l + 2) / (1 - t * t);
    return product_bound * std::expm1(delta) * t / (1 - t);
  };
  while (product_error(cut_product) >= eps / 2) {
    if (++cut_product >= kMaxTerms) too_many_terms();
  }

  std::vector<Complex> powers(2 * cut_product + 1);
  powers[0] = 1.0;
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * x;

  // suffix = prod_{j=i+1}^{L} (1 - x^{2j})
  Complex suffix = 1;
  for (unsigned i = cut_product; i > cut_sum; --i) suffix *= 1.0 - powers[2 * i];
  Complex sum = 0;
  for (unsigned i = cut_sum; i >= 1; --i) {
    sum += powers[i] * suffix;
    suffix *= 1.0 - powers[2 * i];
  }
  const double tail = product_bound * t_pow * t / (1 - t) + product_error(cut_product);
  return {sum, tail};
}

// sum_{q>=3} c_q x^{q(q+1)/2} / (x;x)_q  with  c_q = sum_p (-1)^p C(p-3, q-p).
BoundedValue sum_123(Complex x, double t, double eps) {
  const double qbound = inverse_qpochhammer_bound(t);
  Complex sum = 0;
  Complex inv_q = 1;   // 1 / (x;x)_q
  Complex xq = 1;      // x^q
  Complex tri = 1;     // x^{q(q+1)/2}
  for (unsigned q = 1; q < 4096; ++q) {
    xq *= x;
    tri *= xq;
    inv_q /= 1.0 - xq;
    if (q >= 3) {
      double c = 0;
      for (unsigned p = (q + 4) / 2; p <= q; ++p) {
        // C(p-3, q-p)
        const unsigned n = p - 3;
        const unsigned k = q - p;
        double binom = 1;
        for (unsigned i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
        c += (p % 2 == 0) ? binom : -binom;
      }
      sum += c * tri * inv_q;
    }
    // |c_q| <= 2^q; bounds of later terms shrink by 2 t^{q+2} <= 1/2 once t^{q+2} <= 1/4.
    const double next = std::pow(2.0, q + 1) * std::pow(t, 0.5 * (q + 1) * (q + 2)) * qbound;
    if (q >= 3 && std::pow(t, q + 2.0) <= 0.25 && 2 * next < eps) return {sum, 2 * next};
  }
  too_many_terms();
}

// sum_{j>=j0} x^{e(j)} / (x;x)_{len(j)}, exponents with nondecreasing gaps.
template <typename Exponent, typename Length>
BoundedValue q_sum(Complex x, double t, double eps, unsigned j0, Exponent e, Length len) {
  const double qbound = inverse_qpochhammer_bound(t);
  Complex sum = 0;
  Complex inv_q = 1;
  unsigned q_done = 0;
  for (unsigned j = j0; j < kMaxTerms; ++j) {
    while (q_done < len(j)) {
      ++q_done;
      inv_q /= 1.0 - ipow(x, q_done);
    }
    sum += ipow(x, e(j)) * inv_q;
    const double ratio = std::pow(t, static_cast<double>(e(j + 2) - e(j + 1)));
    const double tail = ratio < 1 ? qbound * std::pow(t, static_cast<double>(e(j + 1))) / (1 - ratio) : kInf;
    if (tail < eps) return {sum, tail};
  }
  too_many_terms();
}

BoundedValue peak_numerator(Complex x, double t, double eps) {
  const BoundedValue s = q_sum(
      x, t, eps, 1, [](unsigned j) { return j * (j + 2); }, [](unsigned j) { return 2 * j; });
  return {1.0 + s.value, s.tail_bound};
}

}  // namespace

BoundedValue AnalyticGF::numerator(Complex x, double eps) const {
  check_domain(x);
  if (pattern_ == PatternId::Peak || pattern_ == PatternId::Valley) {
    return peak_numerator(x, std::abs(x), eps);
  }
  return {1.0, 0.0};
}

BoundedValue AnalyticGF::denominator(Complex x, double eps) const {
  check_domain(x);
  const double t = std::abs(x);
  switch (pattern_) {
    case PatternId::P111: {
      const auto s = sum_111(x, t, eps);
      return {1.0 - s.value, s.tail_bound};
    }
    case PatternId::P112: {
      const auto s = sum_112(x, t, eps);
      return {1.0 - s.value, s.tail_bound};
    }
    case PatternId::P221: {
      const auto s = sum_221(x, t, eps);
      return {1.0 - s.value, s.tail_bound};
    }
    case PatternId::P123: {
      const auto s = sum_123(x, t, eps);
      return {1.0 - x / (1.0 - x) - s.value, s.tail_bound};
    }
    case PatternId::Peak:
    case PatternId::Valley: {
      const auto num = peak_numerator(x, t, eps / 2);
      const bool peak = pattern_ == PatternId::Peak;
      const auto odd = q_sum(
          x, t, eps / 2, 0,
          [peak](unsigned j) { return peak ? j * j + 3 * j + 1 : (j + 1) * (j + 1); },
          [](unsigned j) { return 2 * j + 1; });
      return {num.value - odd.value, num.tail_bound + odd.tail_bound};
    }
  }
  throw std::logic_error("unknown pattern");
}

BoundedValue AnalyticGF::f(Complex x, double eps) const {
  const BoundedValue num = numerator(x, eps / 2);
  const BoundedValue den = denominator(x, eps / 2);
  const Complex value = den.value / num.value;
  const double slack = std::abs(num.value) - num.tail_bound;
  const double bound =
      slack > 0 ? (den.tail_bound + std::abs(value) * num.tail_bound) / slack : kInf;
  return {value, bound};
}

BoundedValue eval_f_bounded(PatternId p, Complex x, double eps) { return AnalyticGF(p).f(x, eps); }

Complex eval_f(PatternId p, Complex x, double eps) { return eval_f_bounded(p, x, eps).value; }

double find_rho(PatternId p, double tol, double eps) {
  if (!(tol >= 1e-12)) throw UsageError("find_rho: tolerance must be at least 1e-12");
  const AnalyticGF gf(p);
  auto f = [&](double x) { return gf.f(x, eps).value.real(); };

  double lo = 0.5;
  double f_lo = f(lo);
  if (!(f_lo > 0)) throw RootNotFoundError("f is not positive at 0.5");
  double hi = lo;
  bool found = false;
  for (int i = 1; 0.5 + 0.01 * i < 1.0; ++i) {
    hi = 0.5 + 0.01 * i;
    if (hi > kMaxEvalRadius) break;
    if (f(hi) <= 0) {
      found = true;
      break;
    }
    lo = hi;
  }
  if (!found) {
    throw RootNotFoundError("no sign change of f for pattern " + std::string(to_string(p)));
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

Complex contour_point(double radius, unsigned k, unsigned samples) {
  const double step = 2 * std::numbers::pi / samples;
  if (2 * k == samples) return {-radius, 0.0};
  if (2 * k < samples) return std::polar(radius, step * k);
  return std::conj(std::polar(radius, step * (samples - k)));
}

int winding_number(const std::function<Complex(Complex)>& f, double radius, unsigned samples) {
  if (samples < 1024) throw UsageError("winding_number: need at least 1024 samples");
  if (!(radius > 0 && radius < 0.8)) throw UsageError("winding_number: radius must lie in (0, 0.8)");
  double total = 0;
  Complex first = f(contour_point(radius, 0, samples));
  Complex prev = first;
  if (prev == 0.0) throw NumericError("f vanishes on the contour");
  for (unsigned k = 1; k <= samples; ++k) {
    const Complex cur = k == samples ? first : f(contour_point(radius, k, samples));
    if (cur == 0.0) throw NumericError("f vanishes on the contour");
    const double inc = std::arg(cur / prev);
    if (std::abs(inc) > std::numbers::pi / 2) {
      throw UnderSamplingError("phase jump " + std::to_string(inc) + " at sample " + std::to_string(k) +
                               "; double the sample count");
    }
    total += inc;
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
}

int winding_number(PatternId p, double radius, unsigned samples) {
  const AnalyticGF gf(p);
  return winding_number([&](Complex x) { return gf.f(x).value; }, radius, samples);
}

AsymptoticEstimate estimate(PatternId p, const Tolerances& tolerances) {
  const AnalyticGF gf(p);
  auto f = [&](double x) { return gf.f(x, tolerances.tail_eps).value.real(); };

  AsymptoticEstimate est;
  est.pattern = p;
  est.tolerances = tolerances;
  est.rho = find_rho(p, tolerances.rho_tol, tolerances.tail_eps);
  est.growth_v = 1 / est.rho;

  // Central differences at h and h/2, one Richardson step.
  const double h = tolerances.derivative_step;
  auto central = [&](double step) { return (f(est.rho + step) - f(est.rho - step)) / (2 * step); };
  const double derivative = (4 * central(h / 2) - central(h)) / 3;
  est.constant_K = -1 / (est.rho * derivative);

  est.residual = std::abs(f(est.rho));
  est.numerator_at_rho = std::abs(gf.numerator(est.rho, tolerances.tail_eps).value);
  if (est.numerator_at_rho <= 1e-6) {
    throw NumericError("numerator vanishes near the root; f = D/N is not reliable there");
  }
  est.winding = winding_number([&](Complex x) { return gf.f(x, tolerances.tail_eps).value; },
                               tolerances.radius, tolerances.samples);
  return est;
}

double predict_count(const AsymptoticEstimate& est, unsigned n) {
  return est.constant_K * std::pow(est.growth_v, static_cast<double>(n));
}

std::vector<CurvePoint> emit_curve(PatternId p, double radius, unsigned samples) {
  const AnalyticGF gf(p);
  std::vector<CurvePoint> rows;
  rows.reserve(samples);
  for (unsigned k = 0; k < samples; ++k) {
    const Complex x = contour_point(radius, k, samples);
    const Complex fx = gf.f(x).value;
    rows.push_back({x.real(), x.imag(), fx.real(), fx.imag()});
  }
  return rows;
}

}  // namespace comppat
