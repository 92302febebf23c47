#pragma once

// Norm-inflation machinery for s < 0: the counterexample data (phi_N, psi_N),
// the resonance functions theta_1..theta_4, the time integrals J_1..J_4, and
// the spectrum (A, B) of the second Picard iterate
//
//   I_2(t) = 2 int_0^t S(t - tau) G[S(tau) h] dtau.
//
// The line iterate is evaluated through the reduced combinations
//   2 [J_1 - J_2] = sin(theta_1 t)/theta_1 + sin(theta_3 t)/theta_3,
//  -2 [J_3 - J_4] = (cos(theta_1 t) - 1)/theta_1 + (cos(theta_3 t) - 1)/theta_3,
// integrated over B_xi = {eta : eta, xi - eta in I_N u (-I_N)}.

#include <array>
#include <vector>

#include "srlw/norms.hpp"
#include "srlw/report.hpp"
#include "srlw/spectral.hpp"

namespace srlw {

enum class Flavor { line, periodic };

/// Line flavour: phi^ = indicator of I_N u (-I_N) with I_N = [N-1, N+1] and
/// psi^ = sqrt(1 + xi^2) phi^. Periodic flavour (torus of period 2 pi):
/// a_n = 1 and b_n = sqrt(1 + N^2) for |n| in {N-1, N, N+1}, zero otherwise.
class CounterexampleDatum {
 public:
  CounterexampleDatum(double n, Flavor flavor) : n_(n), flavor_(flavor) {}

  double N() const noexcept { return n_; }
  Flavor flavor() const noexcept { return flavor_; }

  double phi_hat(double xi) const noexcept;
  double psi_hat(double xi) const noexcept;
  LineSpectrum phi_spectrum() const;
  LineSpectrum psi_spectrum() const;

  /// Periodic flavour: the nonzero modes, ascending.
  std::vector<long> band() const;
  double a(long n) const noexcept;
  double b(long n) const noexcept;

 private:
  double n_;
  Flavor flavor_;
};

/// Rejects N < 2, and non-integer N for the periodic flavour.
CounterexampleDatum build_counterexample(double n, Flavor flavor);

/// ||(phi_N, psi_N)||_{X^s}.
double counterexample_norm(const CounterexampleDatum& datum, SobolevIndex s);

/// theta_k(xi, eta) for k = 1..4:
///   theta_1 = a(xi) + a(xi-eta) + a(eta),  theta_2 = a(xi) - a(xi-eta) + a(eta),
///   theta_3 = a(xi) - a(xi-eta) - a(eta),  theta_4 = a(xi) + a(xi-eta) - a(eta).
double theta(int k, double xi, double eta);

struct ResonanceEvaluation {
  std::array<double, 4> theta{};
  std::array<double, 4> j{};
};

/// Below this |theta t| the removable singularities switch to Taylor series.
inline constexpr double kSeriesSwitch = 1e-4;

/// sin(theta t) / theta, continuous at theta = 0.
double sinc_integral(double theta, double t, double series_switch = kSeriesSwitch);
/// (cos(theta t) - 1) / theta, continuous at theta = 0.
double cosc_integral(double theta, double t, double series_switch = kSeriesSwitch);

/// J_1..J_4 from the four-term closed forms.
ResonanceEvaluation j_closed(double xi, double eta, double t,
                             double series_switch = kSeriesSwitch);
/// J_1..J_4 by adaptive quadrature of the defining time integrals.
ResonanceEvaluation j_oracle(double xi, double eta, double t, double tol = 1e-13);

/// 2 [J_1 - J_2] from the two-term form.
double reduced_j12(double xi, double eta, double t, double series_switch = kSeriesSwitch);
/// -2 [J_3 - J_4] from the two-term form.
double reduced_j34(double xi, double eta, double t, double series_switch = kSeriesSwitch);

/// One interval of B_xi with eta in sign_eta * I_N and xi - eta in sign_diff * I_N.
struct EtaPiece {
  double lo = 0.0;
  double hi = 0.0;
  int sign_eta = 1;
  int sign_diff = 1;
  bool cross() const noexcept { return sign_eta != sign_diff; }
  double length() const noexcept { return hi - lo; }
};

/// B_xi resolved exactly; pieces of zero length are dropped.
std::vector<EtaPiece> interaction_set(double xi, double n);
/// Measure of A_xi, the cross-band part of B_xi.
double cross_band_measure(double xi, double n);

struct IterateSpectrum {
  Complex a;
  Complex b;
};

/// (A, B)(xi, N, t). For the periodic flavour xi must be an integer mode.
IterateSpectrum second_iterate_spectrum(const CounterexampleDatum& datum, double t, double xi);

struct IterateNorm {
  double value = 0.0;
  /// Difference between the panel-width h and h/2 evaluations.
  double error = 0.0;
};

/// ||I_2||_{X^s}. Throws ConvergenceError when the panel refinement test
/// disagrees by more than 1e-6 relative.
IterateNorm second_iterate_norm(const CounterexampleDatum& datum, double t, SobolevIndex s);

struct InflationConfig {
  double s = -0.5;
  double t = 0.5;
  std::vector<double> n_list;
  Flavor flavor = Flavor::line;
  /// INFLATION requires input_norm(first) / input_norm(last) >= this.
  double min_input_decay = 10.0;
  /// ... and max / min of the iterate norms <= this.
  double max_iterate_band = 2.0;
  unsigned workers = 1;
};

/// Rows (N, s, t, input_norm_Xs, iterate_norm_Xs, ratio); sets INFLATION.
ExperimentReport inflation_experiment(const InflationConfig& config);

}  // namespace srlw
