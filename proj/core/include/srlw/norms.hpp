#pragma once

// Norms on the line, on the period (-l, l) and on bounded intervals.
//
// Line norms integrate the unitary angular transform,
//   ||f||_{H^s}^2 = int (1 + xi^2)^s |f^(xi)|^2 dxi,
// periodic norms use ||f||_{H^s_l}^2 = 2l sum_n (1 + (n pi / l)^2)^s |f_n|^2,
// and the integer-order interval norms follow
//   ||f||_{W^{m,2}(I)}^2 = int_I |f|^2 + |f^(m)|^2   (m >= 1),  L^2(I) for m = 0.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "srlw/spectral.hpp"

namespace srlw {

/// Regularity index s; a pair is measured in H^s x H^{s-1}.
class SobolevIndex {
 public:
  explicit SobolevIndex(double s);
  double value() const noexcept { return s_; }
  SobolevIndex companion() const { return SobolevIndex(s_ - 1.0); }

 private:
  double s_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const noexcept { return hi - lo; }
};

/// r(x) = (1 + x^2)^sigma (sigma > 0) or r(x) = exp(lambda x) (0 < lambda < 1).
class WeightFunction {
 public:
  enum class Kind { polynomial, exponential };

  static WeightFunction polynomial(double sigma);
  static WeightFunction exponential(double lambda);

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return p_; }
  double operator()(double x) const noexcept;
  /// r(x) / r(y), evaluated without forming large intermediates.
  double ratio(double x, double y) const noexcept;
  double log_ratio(double x, double y) const noexcept;

 private:
  WeightFunction(Kind kind, double p) : kind_(kind), p_(p) {}
  Kind kind_;
  double p_;
};

/// A line spectrum xi -> f^(xi) in the angular convention, with the points
/// where it is discontinuous and the truncation radius used for integration.
struct LineSpectrum {
  std::function<Complex(double)> sampler;
  std::vector<double> breakpoints;
  double cutoff = 60.0;
};

struct LineNormResult {
  double value = 0.0;
  /// Square root of the integral over cutoff < |xi| < 4 cutoff.
  double tail = 0.0;
};

double hs_norm_periodic(std::span<const Complex> coeffs, double half_period, SobolevIndex s);

/// Throws ConvergenceError if the tail estimate exceeds 1e-6 of the head.
LineNormResult hs_norm_line(const LineSpectrum& spectrum, SobolevIndex s);

/// sqrt(||first||_{H^s}^2 + ||second||_{H^{s-1}}^2) on the line.
LineNormResult xs_norm(const LineSpectrum& first, const LineSpectrum& second, SobolevIndex s);
/// The same pairing for a periodic state.
double xs_norm(const StatePair& state, SobolevIndex s);

/// Natural X^{1,2}_l norm of a periodic state, ||u||_{H^1_l} + ||v||_{L^2_l}.
double x12_norm(const StatePair& state);

/// W^{m,2} norm on [a, b]; `derivative` is f^(m) and is ignored for m = 0.
double wm2_norm(const std::function<double(double)>& f,
                const std::function<double(double)>& derivative, Interval interval, int m);

/// ||f||_{W^{1,2}(I)} + ||g||_{L^2(I)}.
double x12_norm_interval(const std::function<double(double)>& f,
                         const std::function<double(double)>& f_prime,
                         const std::function<double(double)>& g, Interval interval);

struct WeightedSup {
  double value = 0.0;
  double argmax = 0.0;
};

/// max |r(x) f(x)| over x = lo, lo + step, ..., hi.
WeightedSup weighted_sup_norm(const std::function<double(double)>& field, const WeightFunction& r,
                              Interval window, double step);

struct KappaResult {
  double value = 0.0;
  double argmax = 0.0;
  /// Quadrature error estimate at the maximiser.
  double error = 0.0;
};

/// int r(x) / r(x - u) e^{-|u|} du at a single x.
double kappa_profile(const WeightFunction& r, double x, double* error = nullptr);

/// kappa = sup_x int r(x)/r(y) e^{-|x-y|} dy, maximised over the window.
/// Throws ConvergenceError if the maximiser sits on the window boundary.
KappaResult kappa(const WeightFunction& r, Interval window);

}  // namespace srlw
