#pragma once

// Time evolution of the periodic SRLW system in Duhamel form,
//   U(t) = S(t) U0 - i int_0^t S(t - tau) G[U(tau)] dtau,
// advanced with integrating-factor RK4 on W(tau) = S(-tau) U(tau).

#include <cstddef>
#include <span>
#include <vector>

#include "srlw/report.hpp"
#include "srlw/spectral.hpp"

namespace srlw {

struct EvolutionConfig {
  double dt = 0.01;
  double t_final = 0.0;
  /// Invariants (and, with keep_states, states) are recorded every stride steps.
  std::size_t snapshot_stride = 10;
  bool keep_states = false;
  /// false drops G entirely, leaving the exact linear flow.
  bool nonlinear = true;

  void validate() const;
};

/// E = int (u v - u^3 / 6), V = 1/2 int (u^2 + u_x^2 + v^2), I1 = int u, I2 = int v.
struct InvariantSnapshot {
  double t = 0.0;
  double E = 0.0;
  double V = 0.0;
  double I1 = 0.0;
  double I2 = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<StatePair> states;
};

struct EvolutionResult {
  StatePair final_state;
  std::vector<InvariantSnapshot> snapshots;
  Trajectory trajectory;
};

/// One integrating-factor RK4 step. Throws BlowupError on non-finite output.
StatePair step(const StatePair& state, double dt, bool nonlinear = true);

/// Repeated steps of size t_final / ceil(t_final / dt). Snapshots include
/// t = 0 and t_final. BlowupError carries the failing time.
EvolutionResult evolve(const StatePair& state, const EvolutionConfig& config);

InvariantSnapshot invariants(const StatePair& state, double t = 0.0);

/// Quadratic Taylor coefficient of the flow in the data amplitude,
/// -i int_0^t S(t - tau) G[S(tau) U0] dtau, by composite Simpson in tau.
StatePair second_order_term(const StatePair& data, double t, std::size_t intervals = 200);

struct PicardConfig {
  std::vector<double> eps_list;
  double t = 0.5;
  EvolutionConfig evolution{.dt = 0.005};
  std::size_t quadrature_intervals = 200;
  bool nonlinear = true;
};

/// Rows eps,R,ratio,solver_floor,flag with
///   R(eps) = ||U(eps U0, t) - eps S(t) U0 - eps^2 second_order_term||_{X^0}
/// and ratio = R(previous eps) / R(eps). Rows whose dt-limited floor is not
/// below R are flagged FLOOR.
ExperimentReport picard_expansion_check(const StatePair& data, const PicardConfig& config);

/// Largest residual at the probe points of the integral equations
///   u(x,t) = u(x,0) + int_0^t int K(x - y) [v - u^2/2](y,s) dy ds,
///   v(x,t) = v(x,0) + int_0^t u_x(x,s) ds,
/// with K(x) = -sgn(x) e^{-|x|} / 2 truncated at |x| <= kernel_radius and the
/// time integral taken by Simpson over the stored trajectory states.
double duhamel_residual(const Trajectory& trajectory, double t, std::span<const double> probes,
                        double kernel_radius = 40.0);

/// CSV t,E,V,I1,I2.
ExperimentReport invariants_report(std::span<const InvariantSnapshot> snapshots);
/// CSV n,re_u,im_u,re_v,im_v in ascending mode order.
ExperimentReport state_dump(const StatePair& state);

}  // namespace srlw
