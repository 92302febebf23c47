#include "srlw/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "srlw/errors.hpp"
#include "srlw/norms.hpp"
#include "srlw/quadrature.hpp"

namespace srlw {

void EvolutionConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw PreconditionError("dt must be positive");
  if (!(t_final >= 0.0) || !std::isfinite(t_final))
    throw PreconditionError("t_final must be nonnegative");
  if (snapshot_stride == 0) throw PreconditionError("snapshot stride must be positive");
}

namespace {

// Per-mode coefficients of S(tau) for one fixed tau.
class LinearFlow {
 public:
  LinearFlow(const SpectralGrid& grid, double tau) : c_(grid.size()), s_(grid.size()), r_(grid.size()) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double xi = grid.frequency(i);
      r_[i] = std::sqrt(1.0 + xi * xi);
      const double a = symbols::alpha(xi) * tau;
      c_[i] = std::cos(a);
      s_[i] = std::sin(a);
    }
  }

  // sign = -1 applies S(-tau).
  StatePair apply(const StatePair& in, double sign = 1.0) const {
    StatePair out(in.grid());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const double s = sign * s_[i];
      const Complex u = in.u_hat()[i];
      const Complex v = in.v_hat()[i];
      out.u_hat()[i] = c_[i] * u + Complex(0.0, s / r_[i]) * v;
      out.v_hat()[i] = Complex(0.0, r_[i] * s) * u + c_[i] * v;
    }
    return out;
  }

 private:
  std::vector<double> c_, s_, r_;
};

StatePair times_minus_i(StatePair x) {
  for (auto* c : {&x.u_hat(), &x.v_hat()})
    for (auto& z : *c) z = Complex(z.imag(), -z.real());
  return x;
}

class Stepper {
 public:
  Stepper(const SpectralGrid& grid, double dt, bool nonlinear)
      : dt_(dt), nonlinear_(nonlinear), half_(grid, 0.5 * dt), full_(grid, dt) {}

  StatePair advance(const StatePair& u) const {
    if (!nonlinear_) return full_.apply(u);
    // Interaction picture: w = S(-tau) U, w' = N(tau, w) = -i S(-tau) G(S(tau) w).
    const StatePair k1 = times_minus_i(nonlinear_term(u));
    const StatePair k2 = interaction(half_, u + (0.5 * dt_) * k1);
    const StatePair k3 = interaction(half_, u + (0.5 * dt_) * k2);
    const StatePair k4 = interaction(full_, u + dt_ * k3);
    StatePair w = u;
    w += (dt_ / 6.0) * k1;
    w += (dt_ / 3.0) * k2;
    w += (dt_ / 3.0) * k3;
    w += (dt_ / 6.0) * k4;
    StatePair out = full_.apply(w);
    out.enforce_hermitian();
    return out;
  }

 private:
  static StatePair interaction(const LinearFlow& flow, const StatePair& w) {
    return flow.apply(times_minus_i(nonlinear_term(flow.apply(w))), -1.0);
  }

  double dt_;
  bool nonlinear_;
  LinearFlow half_;
  LinearFlow full_;
};

void check_finite(const StatePair& s, double t) {
  if (!s.all_finite()) throw BlowupError("non-finite state at t = " + format_double(t), t);
}

}  // namespace

StatePair step(const StatePair& state, double dt, bool nonlinear) {
  if (!(dt > 0.0)) throw PreconditionError("dt must be positive");
  StatePair out = Stepper(state.grid(), dt, nonlinear).advance(state);
  check_finite(out, dt);
  return out;
}

EvolutionResult evolve(const StatePair& state, const EvolutionConfig& config) {
  config.validate();
  const auto steps = config.t_final == 0.0
                         ? std::size_t{0}
                         : static_cast<std::size_t>(std::ceil(config.t_final / config.dt - 1e-9));
  const double h = steps == 0 ? config.dt : config.t_final / static_cast<double>(steps);
  const Stepper stepper(state.grid(), h, config.nonlinear);

  EvolutionResult result{state, {}, {}};
  auto record = [&](const StatePair& s, double t) {
    result.snapshots.push_back(invariants(s, t));
    if (config.keep_states) {
      result.trajectory.times.push_back(t);
      result.trajectory.states.push_back(s);
    }
  };
  StatePair current = state;
  current.enforce_hermitian();
  record(current, 0.0);
  for (std::size_t n = 1; n <= steps; ++n) {
    const double t = n == steps ? config.t_final : h * static_cast<double>(n);
    current = stepper.advance(current);
    check_finite(current, t);
    if (n % config.snapshot_stride == 0 || n == steps) record(current, t);
  }
  result.final_state = std::move(current);
  return result;
}

InvariantSnapshot invariants(const StatePair& state, double t) {
  const SpectralGrid& grid = state.grid();
  const double l = grid.half_period();
  InvariantSnapshot out;
  out.t = t;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double xi = grid.frequency(i);
    out.V += (1.0 + xi * xi) * std::norm(state.u_hat()[i]) + std::norm(state.v_hat()[i]);
  }
  out.V *= l;
  out.I1 = 2.0 * l * state.u_hat()[0].real();
  out.I2 = 2.0 * l * state.v_hat()[0].real();

  // Cubic integrand: the trapezoid rule on 2M nodes is exact for it.
  const std::size_t k = 2 * grid.size();
  const SpectralGrid fine(l, k);
  const auto u = inverse_transform(fine, resample_modes(state.u_hat(), k));
  const auto v = inverse_transform(fine, resample_modes(state.v_hat(), k));
  double e = 0.0;
  for (std::size_t j = 0; j < k; ++j) e += u[j] * v[j] - u[j] * u[j] * u[j] / 6.0;
  out.E = e * fine.spacing();
  return out;
}

StatePair second_order_term(const StatePair& data, double t, std::size_t intervals) {
  if (intervals < 2) throw PreconditionError("second_order_term: need at least two intervals");
  const double h = t / static_cast<double>(intervals);
  const auto w = quad::simpson_weights(intervals + 1, h);
  StatePair total(data.grid());
  for (std::size_t k = 0; k <= intervals; ++k) {
    const double tau = h * static_cast<double>(k);
    total += w[k] * linear_propagate(nonlinear_term(linear_propagate(data, tau)), t - tau);
  }
  return times_minus_i(std::move(total));
}

ExperimentReport picard_expansion_check(const StatePair& data, const PicardConfig& config) {
  if (config.eps_list.empty()) throw PreconditionError("picard check: empty eps list");
  ExperimentReport report("picard-check", {"eps", "R", "ratio", "solver_floor", "flag"});
  EvolutionConfig coarse = config.evolution;
  coarse.t_final = config.t;
  coarse.keep_states = false;
  coarse.nonlinear = config.nonlinear;
  coarse.snapshot_stride = std::numeric_limits<std::size_t>::max();
  EvolutionConfig fine = coarse;
  fine.dt = 0.5 * coarse.dt;

  const StatePair linear = linear_propagate(data, config.t);
  const StatePair quadratic = config.nonlinear
                                  ? second_order_term(data, config.t, config.quadrature_intervals)
                                  : StatePair(data.grid());
  const SobolevIndex x0(0.0);
  double previous = std::numeric_limits<double>::quiet_NaN();
  bool any_floor = false;
  for (double eps : config.eps_list) {
    const StatePair scaled = eps * data;
    const StatePair u_dt = evolve(scaled, coarse).final_state;
    const StatePair u_half = evolve(scaled, fine).final_state;
    // RK4: the dt error is about 16/15 of the dt versus dt/2 difference.
    const double floor = xs_norm(u_dt - u_half, x0) * 16.0 / 15.0;
    const double r = xs_norm(u_half - eps * linear - (eps * eps) * quadratic, x0);
    const double ratio = previous / r;
    const bool floored = r > 0.0 && floor >= r;
    any_floor = any_floor || floored;
    report.add_row({eps, r, ratio, floor, std::string(floored ? "FLOOR" : "ok")});
    previous = r;
  }
  if (any_floor) {
    report.set_flag("FLOOR");
    report.add_warning("remainder at or below the time-step error for some eps");
  }
  return report;
}

double duhamel_residual(const Trajectory& trajectory, double t, std::span<const double> probes,
                        double kernel_radius) {
  const auto& times = trajectory.times;
  if (times.empty()) throw PreconditionError("duhamel residual: empty trajectory");
  const auto it = std::find_if(times.begin(), times.end(),
                               [t](double s) { return std::abs(s - t) <= 1e-9 * std::max(1.0, t); });
  if (it == times.end()) throw PreconditionError("duhamel residual: t is not a stored time");
  const auto last = static_cast<std::size_t>(it - times.begin());
  const double h = last == 0 ? 0.0 : times[last] / static_cast<double>(last);
  for (std::size_t k = 0; k <= last; ++k)
    if (std::abs(times[k] - h * static_cast<double>(k)) > 1e-9 * std::max(1.0, t))
      throw PreconditionError("duhamel residual: stored times are not uniformly spaced");

  const StatePair& first = trajectory.states.front();
  const StatePair& now = trajectory.states[last];
  const SpectralGrid& grid = first.grid();
  const std::size_t big = 2 * grid.size();
  const SpectralGrid fine(grid.half_period(), big);

  const auto w = quad::simpson_weights(last + 1, h);
  CoeffVector source(big), ux(grid.size());
  for (std::size_t k = 0; k <= last; ++k) {
    const StatePair& s = trajectory.states[k];
    const CoeffVector sq = full_product(grid, s.u_hat(), s.u_hat());
    const CoeffVector v = resample_modes(s.v_hat(), big);
    for (std::size_t i = 0; i < big; ++i) source[i] += w[k] * (v[i] - 0.5 * sq[i]);
    const CoeffVector d = differentiate(grid, s.u_hat());
    for (std::size_t i = 0; i < grid.size(); ++i) ux[i] += w[k] * d[i];
  }

  double worst = 0.0;
  for (double x : probes) {
    auto right = [&](double z) { return -0.5 * std::exp(-z) * synthesize_at(fine, source, x - z); };
    auto left = [&](double z) { return 0.5 * std::exp(z) * synthesize_at(fine, source, x - z); };
    const double conv = quad::gauss_legendre(right, 0.0, kernel_radius, 0.25) +
                        quad::gauss_legendre(left, -kernel_radius, 0.0, 0.25);
    const double r1 = synthesize_at(grid, now.u_hat(), x) - synthesize_at(grid, first.u_hat(), x) - conv;
    const double r2 = synthesize_at(grid, now.v_hat(), x) - synthesize_at(grid, first.v_hat(), x) -
                      synthesize_at(grid, ux, x);
    worst = std::max({worst, std::abs(r1), std::abs(r2)});
  }
  return worst;
}

ExperimentReport invariants_report(std::span<const InvariantSnapshot> snapshots) {
  ExperimentReport report("invariants", {"t", "E", "V", "I1", "I2"});
  for (const auto& s : snapshots) report.add_row({s.t, s.E, s.V, s.I1, s.I2});
  return report;
}

ExperimentReport state_dump(const StatePair& state) {
  ExperimentReport report("state", {"n", "re_u", "im_u", "re_v", "im_v"});
  const SpectralGrid& grid = state.grid();
  const long half = static_cast<long>(grid.size() / 2);
  for (long n = -half; n < half; ++n) {
    const std::size_t i = grid.index(n);
    report.add_row({static_cast<long long>(n), state.u_hat()[i].real(), state.u_hat()[i].imag(),
                    state.v_hat()[i].real(), state.v_hat()[i].imag()});
  }
  return report;
}

}  // namespace srlw
