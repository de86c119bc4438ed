#pragma once

#include <vector>

#include "comppat/patterns.hpp"
#include "comppat/series.hpp"

namespace comppat {

// Word series are z-graded with no x exponent: coefficient (0, m, r)
// counts words of length m over [k] with r occurrences.

// The composition builder rebuilt over [k] with every weight equal to z.
TruncatedSeries word_gf(PatternId p, unsigned k, unsigned order);

// (1 + z(1+z)(1-y)) / (1 - (k-1+y)z - (k-1)(1-y)z^2)
TruncatedSeries w111_closed(unsigned k, unsigned order);

// (1-y)z / ((1-y)z - 1 + (1-(1-y)z^2)^k) with (1-y)z cancelled:
// 1 / (1 - kz + sum_{j=2}^k (-1)^j C(k,j) (1-y)^{j-1} z^{2j-1}).
TruncatedSeries w112_closed(unsigned k, unsigned order);

// 1 / (1 - kz - sum_{p=3}^k sum_{j=0}^{p-3} C(p-3,j) C(k,p+j) z^{p+j} (y-1)^{p-2})
TruncatedSeries w123_closed(unsigned k, unsigned order);

// U_0 = U_1 = 1, U_{2n} = (1-y)U_{2n-1} - U_{2n-2}, U_{2n+1} = U_{2n} - U_{2n-1};
// coefficients in y, lowest degree first.
using YPolynomial = std::vector<BigInt>;
YPolynomial u_poly(unsigned n);
std::vector<YPolynomial> u_polys(unsigned max_n);

// 1 / (1 - kz - sum_{j=3}^k (-z)^j C(k,j) (1-y)^{floor(j/2)} U_{j-3}(y))
TruncatedSeries w123_chebyshev(unsigned k, unsigned order);

// The y = 0 specialization 1 / sum_{j=0}^k a_j C(k,j) z^j with a_j = 1, -1, 0
// for j = 0, 1, 2 (mod 3).
TruncatedSeries w123_avoid_aj(unsigned k, unsigned order);

// Peak (and valley) series for words:
// N(z) / (N(z) - sum_j z^{2j+1} (1-y)^j C(k+j, 2j+1)),  N(z) = sum_j z^{2j} (1-y)^j C(k-1+j, 2j).
TruncatedSeries w_peak_closed(unsigned k, unsigned order);

// A y-polynomial placed at z^m, for comparing against z-graded series.
TruncatedSeries y_polynomial_series(const YPolynomial& poly, unsigned m, unsigned order);

}  // namespace comppat
