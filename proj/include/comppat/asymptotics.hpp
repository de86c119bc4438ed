#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "comppat/patterns.hpp"

namespace comppat {

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Evaluation point too close to the unit circle for the tail bounds.
struct DomainError : NumericError {
  using NumericError::NumericError;
};
struct RootNotFoundError : NumericError {
  using NumericError::NumericError;
};
// A single phase increment on the contour exceeded pi/2.
struct UnderSamplingError : NumericError {
  using NumericError::NumericError;
};

using Complex = std::complex<double>;

inline constexpr double kDefaultTailEps = 1e-15;
inline constexpr double kRhoTolerance = 1e-11;
inline constexpr double kDerivativeStep = 1e-6;
inline constexpr double kContourRadius = 0.7;
inline constexpr unsigned kContourSamples = 4096;
// Largest |x| accepted by the evaluators.
inline constexpr double kMaxEvalRadius = 0.99;

struct BoundedValue {
  Complex value;
  double tail_bound = 0.0;  // |value - exact| <= tail_bound, truncation only
};

/// The avoidance series over N at y = 0, z = 1 as numerator / denominator.
/// f = denominator / numerator is the function whose smallest positive
/// zero is the dominant pole.
class AnalyticGF {
 public:
  explicit AnalyticGF(PatternId pattern) : pattern_(pattern) {}

  PatternId pattern() const { return pattern_; }
  BoundedValue numerator(Complex x, double eps = kDefaultTailEps) const;
  BoundedValue denominator(Complex x, double eps = kDefaultTailEps) const;
  BoundedValue f(Complex x, double eps = kDefaultTailEps) const;

 private:
  PatternId pattern_;
};

BoundedValue eval_f_bounded(PatternId p, Complex x, double eps = kDefaultTailEps);
Complex eval_f(PatternId p, Complex x, double eps = kDefaultTailEps);

// Smallest root of f in (0.5, 1): scan in steps of 0.01 for the first sign
// change, then bisect down to width `tol`.
double find_rho(PatternId p, double tol = kRhoTolerance, double eps = kDefaultTailEps);

// Winding number of the image of |x| = radius around 0.
int winding_number(const std::function<Complex(Complex)>& f, double radius, unsigned samples);
int winding_number(PatternId p, double radius = kContourRadius, unsigned samples = kContourSamples);

struct Tolerances {
  double rho_tol = kRhoTolerance;
  double tail_eps = kDefaultTailEps;
  double derivative_step = kDerivativeStep;
  double radius = kContourRadius;
  unsigned samples = kContourSamples;
};

struct AsymptoticEstimate {
  PatternId pattern;
  double rho = 0;
  double growth_v = 0;     // 1 / rho
  double constant_K = 0;   // -1 / (rho f'(rho))
  int winding = 0;
  double residual = 0;     // |f(rho)|
  double numerator_at_rho = 0;
  Tolerances tolerances;
};

AsymptoticEstimate estimate(PatternId p, const Tolerances& tolerances = {});

// K v^n.
double predict_count(const AsymptoticEstimate& est, unsigned n);

struct CurvePoint {
  double re_x, im_x, re_f, im_f;
};

// f sampled at the `samples` equally spaced points of |x| = radius,
// starting at angle 0.  Points k and samples-k are exact conjugates.
std::vector<CurvePoint> emit_curve(PatternId p, double radius = kContourRadius,
                                   unsigned samples = kContourSamples);

// Contour point k of n; the lower half mirrors the upper half exactly.
Complex contour_point(double radius, unsigned k, unsigned samples);

}  // namespace comppat
