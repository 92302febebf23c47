#pragma once

// Line-to-periodic bridge: the periodization transform
//   P_l f(x) = sum_n (1/2l) f^_{2pi}(n / 2l) exp(i n pi x / l),
// the long-period convergence sweep, and the pointwise boundary and weighted
// decay bounds for periodic solutions.

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "srlw/initial_data.hpp"
#include "srlw/norms.hpp"
#include "srlw/report.hpp"
#include "srlw/solver.hpp"
#include "srlw/spectral.hpp"

namespace srlw {

/// Initial data (psi, phi) on the line. Transforms are in the angular convention.
struct LineDatum {
  FieldProfile psi;
  FieldProfile phi;
  /// Largest lambda with e^{lambda |x|} psi, phi bounded; infinity for Gaussian tails.
  double exponential_rate = std::numeric_limits<double>::infinity();
};

struct PeriodizedField {
  CoeffVector coeffs;
  /// |f^| at the highest retained mode relative to the largest sampled value.
  double edge_ratio = 0.0;
  bool undersampled = false;
};

PeriodizedField periodize(const FieldProfile& f, double l, std::size_t modes);
/// Both components; undersampling warnings are appended to `warnings` if given.
StatePair periodize(const LineDatum& datum, double l, std::size_t modes,
                    std::vector<std::string>* warnings = nullptr);

/// W^{m,2}(-l, l) norm of P_l f - f, m in {0, 1}. The mode count is chosen
/// so the transform is negligible at the truncation edge.
double periodization_error(const FieldProfile& f, double l, int m);

/// sqrt((1/2l) sum_n (1 + (n pi / l)^2)^{-1}), summed with a tail correction.
double beta(double l);

struct BoundConstants {
  double D = 0.0;
  double E = 0.0;
  double A = 0.0;
  double B = 0.0;
  double beta = 0.0;
  /// ||(psi, phi)||_{X^{1,2}_l}
  double data_norm = 0.0;
  double T = 0.0;

  /// (D + T E)/2 e^{A t} + B/(2A) (e^{A t} - 1).
  double bound(double t) const;
};

/// Coefficients in FFT order on the same l. Throws ConvergenceError when the
/// coefficient differences are not resolved at the truncation edge.
BoundConstants bound_constants(std::span<const Complex> psi, std::span<const Complex> phi, double l,
                               double T);

/// Rows l,t,measured,bound,flag with measured = l |u(l, t)|.
ExperimentReport boundary_value_check(const Trajectory& trajectory, const BoundConstants& constants,
                                      double T);

struct SweepConfig {
  /// Grid spacing; every run uses M = 2l / dx modes.
  double dx = 0.15625;
  double dt = 0.01;
  std::size_t snapshot_stride = 10;
  unsigned workers = 1;
};

struct BoundarySweep {
  ExperimentReport bounds;
  /// Rows l,max_abs_u,l_times_max,ratio_to_previous.
  ExperimentReport scaling;
};

BoundarySweep boundary_sweep(const LineDatum& datum, std::span<const double> l_list, double T,
                             const SweepConfig& config = {});

struct DecayConfig {
  /// Defaults to the trajectory's full period when empty.
  Interval window{};
  Interval kappa_window{-50.0, 50.0};
};

/// Rows t,measured_sup,bound,arg_max_x,flag for every stored time t <= T.
ExperimentReport decay_check(const LineDatum& datum, const WeightFunction& r, double T,
                             const Trajectory& trajectory, const DecayConfig& config = {});

struct LongPeriodConfig {
  double dx = 0.15625;
  double dt = 0.01;
  std::size_t samples = 20;
  /// Largest admissible |u| of the reference run at its own boundary.
  double boundary_tol = 1e-8;
  unsigned workers = 1;
};

/// ||(u_a, v_a) - (u_b, v_b)||_{X^{1,2}} restricted to (-l, l), l being the
/// half period of `local`. Trapezoid on the local nodes and midpoints,
/// combined by Richardson extrapolation.
double restricted_x12_distance(const StatePair& local, const StatePair& reference);

/// Rows l,t_max_err,err_X12,boundary_mass,status.
ExperimentReport long_period_experiment(const LineDatum& datum, std::span<const double> l_list,
                                        double l_ref, double T, const LongPeriodConfig& config = {});

}  // namespace srlw
