#include "srlw/period_limit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "srlw/errors.hpp"
#include "srlw/parallel.hpp"
#include "srlw/quadrature.hpp"

namespace srlw {

namespace {

const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

std::size_t modes_for(double l, double dx) {
  const auto half = static_cast<std::size_t>(std::llround(l / dx));
  return std::max<std::size_t>(4, 2 * half);
}

// Values at -l + j h / 2, j = 0..2M, through zero padding.
std::vector<double> refined_samples(const SpectralGrid& grid, std::span<const Complex> coeffs) {
  const std::size_t k = 2 * grid.size();
  auto out = inverse_transform(SpectralGrid(grid.half_period(), k), resample_modes(coeffs, k));
  out.push_back(out.front());
  return out;
}

double trapezoid(std::span<const double> f, double h) {
  double s = 0.0;
  for (double x : f) s += x;
  return h * (s - 0.5 * (f.front() + f.back()));
}

// Trapezoid at spacing h and h/2 from samples at h/2, combined by Richardson.
double richardson(std::span<const double> fine, double h) {
  std::vector<double> coarse;
  for (std::size_t j = 0; j < fine.size(); j += 2) coarse.push_back(fine[j]);
  return (4.0 * trapezoid(fine, 0.5 * h) - trapezoid(coarse, h)) / 3.0;
}

EvolutionConfig sampled_run(double T, double dt, std::size_t samples) {
  const double interval = T / static_cast<double>(samples);
  const auto per = static_cast<std::size_t>(std::ceil(interval / dt - 1e-9));
  EvolutionConfig c;
  c.t_final = T;
  c.dt = interval / static_cast<double>(per);
  c.snapshot_stride = per;
  c.keep_states = true;
  return c;
}

}  // namespace

PeriodizedField periodize(const FieldProfile& f, double l, std::size_t modes) {
  if (!f.transform) throw PreconditionError("periodize: profile " + f.name + " has no line transform");
  const SpectralGrid grid = make_grid(l, modes);
  PeriodizedField out{CoeffVector(modes), 0.0, false};
  double peak = 0.0;
  for (std::size_t i = 0; i < modes; ++i) {
    if (grid.is_nyquist(i)) continue;
    // (1/2l) f^_{2pi}(n / 2l) with f^_{2pi}(k) = sqrt(2 pi) f^_ang(2 pi k).
    out.coeffs[i] = kSqrt2Pi / (2.0 * l) * f.transform(grid.frequency(i));
    peak = std::max(peak, std::abs(out.coeffs[i]));
  }
  const long edge = static_cast<long>(modes / 2) - 1;
  const double tail =
      std::max(std::abs(out.coeffs[grid.index(edge)]), std::abs(out.coeffs[grid.index(-edge)]));
  out.edge_ratio = peak > 0.0 ? tail / peak : 0.0;
  out.undersampled = out.edge_ratio > 1e-10;
  return out;
}

StatePair periodize(const LineDatum& datum, double l, std::size_t modes,
                    std::vector<std::string>* warnings) {
  PeriodizedField p = periodize(datum.psi, l, modes);
  PeriodizedField q = periodize(datum.phi, l, modes);
  if (warnings) {
    for (const auto* f : {&p, &q})
      if (f->undersampled)
        warnings->push_back("periodize: spectrum not resolved at l = " + format_double(l) +
                            " (edge ratio " + format_double(f->edge_ratio) + ")");
  }
  StatePair s(make_grid(l, modes), std::move(p.coeffs), std::move(q.coeffs));
  s.enforce_hermitian();
  return s;
}

double periodization_error(const FieldProfile& f, double l, int m) {
  if (m != 0 && m != 1) throw PreconditionError("periodization_error: order must be 0 or 1");
  std::size_t modes = 64;
  PeriodizedField p = periodize(f, l, modes);
  while (p.edge_ratio > 1e-17 && modes < (std::size_t{1} << 20)) {
    modes *= 2;
    p = periodize(f, l, modes);
  }
  const SpectralGrid grid(l, modes);
  const CoeffVector dp = differentiate(grid, p.coeffs);
  auto diff = [&](double x) { return synthesize_at(grid, p.coeffs, x) - f.value(x); };
  auto ddiff = [&](double x) { return synthesize_at(grid, dp, x) - f.derivative(x); };
  return wm2_norm(diff, ddiff, {-l, l}, m);
}

double beta(double l) {
  if (!(l > 0.0)) throw PreconditionError("beta: l must be positive");
  const double c = std::numbers::pi / l;
  auto term = [c](double n) { return 1.0 / (1.0 + c * n * c * n); };
  // Grow the cutoff until one more term is below the target after scaling.
  double cutoff = 64.0;
  while (term(cutoff) / (2.0 * l) >= 1e-10) cutoff *= 2.0;
  const auto k = static_cast<long>(cutoff);
  double sum = 1.0;
  for (long n = k; n >= 1; --n) sum += 2.0 * term(static_cast<double>(n));
  // Remaining terms: integral from k + 1/2 (midpoint estimate), both signs.
  sum += 2.0 * (std::numbers::pi / 2.0 - std::atan(c * (static_cast<double>(k) + 0.5))) / c;
  return std::sqrt(sum / (2.0 * l));
}

double BoundConstants::bound(double t) const {
  const double g = std::exp(A * t);
  return 0.5 * (D + T * E) * g + B / (2.0 * A) * (g - 1.0);
}

BoundConstants bound_constants(std::span<const Complex> psi, std::span<const Complex> phi, double l,
                               double T) {
  if (!(T > 0.0)) throw PreconditionError("bound_constants: T must be positive");
  if (psi.size() != phi.size()) throw PreconditionError("bound_constants: size mismatch");
  const SpectralGrid grid = make_grid(l, psi.size());
  const long half = static_cast<long>(psi.size() / 2);

  auto variation = [&](std::span<const Complex> c, const char* label) {
    auto at = [&](long n) { return std::abs(n) < half ? c[grid.index(n)] : Complex{}; };
    double total = 0.0;
    for (long n = -half + 1; n <= half; ++n) {
      const Complex d = at(n) - at(n - 1);
      if (!std::isfinite(d.real()) || !std::isfinite(d.imag()))
        throw PreconditionError(std::string("bound_constants: non-finite ") + label);
      total += std::abs(d);
    }
    total *= l;
    const double edge = l * (std::abs(at(half - 1)) + std::abs(at(-half + 1)));
    if (edge > 1e-6 * total)
      throw ConvergenceError(std::string("bound_constants: difference series of ") + label +
                             " not resolved at the truncation edge");
    return total;
  };

  BoundConstants k;
  k.T = T;
  k.D = variation(psi, "psi");
  k.E = variation(phi, "phi");
  k.beta = beta(l);
  k.data_norm = hs_norm_periodic(psi, l, SobolevIndex(1.0)) + hs_norm_periodic(phi, l, SobolevIndex(0.0));
  k.A = T + k.beta * k.data_norm;
  k.B = std::numbers::pi * T * k.beta * k.data_norm * (T + k.beta * k.data_norm);
  return k;
}

ExperimentReport boundary_value_check(const Trajectory& trajectory, const BoundConstants& constants,
                                      double T) {
  ExperimentReport report("boundary-bound", {"l", "t", "measured", "bound", "flag"});
  bool violated = false;
  for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
    const double t = trajectory.times[k];
    if (t > T * (1.0 + 1e-12)) break;
    const StatePair& s = trajectory.states[k];
    const double l = s.grid().half_period();
    const long half = static_cast<long>(s.grid().size() / 2);
    Complex edge{};
    for (long n = -half + 1; n < half; ++n)
      edge += (n % 2 == 0 ? 1.0 : -1.0) * s.u_hat()[s.grid().index(n)];
    const double measured = l * std::abs(edge.real());
    const double bound = constants.bound(t);
    const bool bad = measured > bound * (1.0 + 1e-9);
    violated = violated || bad;
    report.add_row({l, t, measured, bound, std::string(bad ? "VIOLATION" : "ok")});
  }
  if (violated) report.set_flag("VIOLATION");
  return report;
}

BoundarySweep boundary_sweep(const LineDatum& datum, std::span<const double> l_list, double T,
                             const SweepConfig& config) {
  if (l_list.empty()) throw PreconditionError("boundary sweep: empty l list");
  std::vector<ExperimentReport> rows(l_list.size(), ExperimentReport("", {"x"}));
  std::vector<std::vector<std::string>> notes(l_list.size());
  parallel_for(l_list.size(), config.workers, [&](std::size_t i) {
    const double l = l_list[i];
    const StatePair data = periodize(datum, l, modes_for(l, config.dx), &notes[i]);
    const BoundConstants k = bound_constants(data.u_hat(), data.v_hat(), l, T);
    EvolutionConfig ec{.dt = config.dt, .t_final = T, .snapshot_stride = config.snapshot_stride,
                       .keep_states = true};
    rows[i] = boundary_value_check(evolve(data, ec).trajectory, k, T);
  });

  BoundarySweep out{ExperimentReport("boundary-bound", {"l", "t", "measured", "bound", "flag"}),
                    ExperimentReport("boundary-scaling", {"l", "max_abs_u", "l_times_max", "ratio_to_previous"})};
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    double peak = 0.0;
    for (std::size_t j = 0; j < r.row_count(); ++j) {
      out.bounds.add_row({r.at(j, "l"), r.at(j, "t"), r.at(j, "measured"), r.at(j, "bound"), r.at(j, "flag")});
      peak = std::max(peak, r.number(j, "measured") / l_list[i]);
    }
    if (r.has_flag("VIOLATION") && !out.bounds.has_flag("VIOLATION")) out.bounds.set_flag("VIOLATION");
    for (auto& w : notes[i]) out.bounds.add_warning(std::move(w));
    out.scaling.add_row({l_list[i], peak, l_list[i] * peak, previous / peak});
    previous = peak;
  }
  return out;
}

ExperimentReport decay_check(const LineDatum& datum, const WeightFunction& r, double T,
                             const Trajectory& trajectory, const DecayConfig& config) {
  if (trajectory.states.empty()) throw PreconditionError("decay_check: empty trajectory");
  if (r.kind() == WeightFunction::Kind::exponential && r.parameter() > datum.exponential_rate)
    throw PreconditionError("decay_check: data does not decay fast enough for this weight");
  const SpectralGrid& grid = trajectory.states.front().grid();
  const double l = grid.half_period();
  Interval window = config.window;
  if (window.length() <= 0.0) window = {-l, l};

  const double fine_step = 0.25 * grid.spacing();
  const double psi_sup = weighted_sup_norm(datum.psi.value, r, window, fine_step).value;
  const double phi_sup = weighted_sup_norm(datum.phi.value, r, window, fine_step).value;
  const double kappa_value = kappa(r, config.kappa_window).value;
  const double data_norm =
      x12_norm_interval(datum.psi.value, datum.psi.derivative, datum.phi.value, {-l, l});
  auto rhs = [&](double t) {
    return (psi_sup + kappa_value * T * phi_sup) * std::exp(kappa_value * (T + data_norm) * t);
  };

  ExperimentReport report("decay", {"t", "measured_sup", "bound", "arg_max_x", "flag"});
  bool violated = false;
  double worst_edge = 0.0;
  const std::size_t k4 = 4 * grid.size();
  const SpectralGrid fine(l, k4);
  for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
    const double t = trajectory.times[k];
    if (t > T * (1.0 + 1e-12)) break;
    const auto u = inverse_transform(fine, resample_modes(trajectory.states[k].u_hat(), k4));
    worst_edge = std::max(worst_edge, std::abs(u.front()));
    WeightedSup sup;
    for (std::size_t j = 0; j <= k4; ++j) {
      const double x = -l + fine.spacing() * static_cast<double>(j);
      if (x < window.lo || x > window.hi) continue;
      const double value = r(x) * std::abs(u[j % k4]);
      if (value > sup.value) sup = {value, x};
    }
    const double bound = rhs(t);
    const bool bad = sup.value > bound * (1.0 + 1e-9);
    violated = violated || bad;
    report.add_row({t, sup.value, bound, sup.argmax, std::string(bad ? "VIOLATION" : "ok")});
  }
  if (violated) report.set_flag("VIOLATION");
  if (worst_edge > 1e-8)
    report.add_warning("decay: |u(+-l, t)| reaches " + format_double(worst_edge) +
                       "; the periodic run may not represent the line solution");
  return report;
}

double restricted_x12_distance(const StatePair& local, const StatePair& reference) {
  const SpectralGrid& grid = local.grid();
  const SpectralGrid& ref_grid = reference.grid();
  const double l = grid.half_period();
  if (ref_grid.half_period() < l) throw PreconditionError("restricted distance: reference period too short");
  const double h = grid.spacing();
  std::vector<double> points(2 * grid.size() + 1);
  for (std::size_t j = 0; j < points.size(); ++j) points[j] = -l + 0.5 * h * static_cast<double>(j);

  const auto au = refined_samples(grid, local.u_hat());
  const auto ad = refined_samples(grid, differentiate(grid, local.u_hat()));
  const auto av = refined_samples(grid, local.v_hat());
  const auto bu = synthesize(ref_grid, reference.u_hat(), points);
  const auto bd = synthesize(ref_grid, differentiate(ref_grid, reference.u_hat()), points);
  const auto bv = synthesize(ref_grid, reference.v_hat(), points);
  std::vector<double> h1(points.size()), l2(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    const double du = au[j] - bu[j], dd = ad[j] - bd[j], dv = av[j] - bv[j];
    h1[j] = du * du + dd * dd;
    l2[j] = dv * dv;
  }
  return std::sqrt(std::max(0.0, richardson(h1, h))) + std::sqrt(std::max(0.0, richardson(l2, h)));
}

ExperimentReport long_period_experiment(const LineDatum& datum, std::span<const double> l_list,
                                        double l_ref, double T, const LongPeriodConfig& config) {
  if (l_list.empty()) throw PreconditionError("long period: empty l list");
  if (!(T > 0.0)) throw PreconditionError("long period: T must be positive");
  if (config.samples == 0) throw PreconditionError("long period: need at least one sample time");
  const double l_max = *std::max_element(l_list.begin(), l_list.end());
  if (l_ref < 4.0 * l_max) throw PreconditionError("long period: l_ref must be at least 4 max(l)");

  const EvolutionConfig run = sampled_run(T, config.dt, config.samples);
  const SpectralGrid ref_grid = make_grid(l_ref, modes_for(l_ref, config.dx));
  const Trajectory reference = evolve(sample_state(ref_grid, datum.psi, datum.phi), run).trajectory;

  double ref_edge = 0.0;
  for (const auto& s : reference.states)
    ref_edge = std::max(ref_edge, std::abs(synthesize_at(ref_grid, s.u_hat(), l_ref)));

  struct Row {
    double t_max = 0.0, err = 0.0, mass = 0.0;
    std::vector<std::string> notes;
  };
  std::vector<Row> rows(l_list.size());
  parallel_for(l_list.size(), config.workers, [&](std::size_t i) {
    const double l = l_list[i];
    Row& row = rows[i];
    const SpectralGrid grid = make_grid(l, modes_for(l, config.dx));
    const Trajectory local = evolve(periodize(datum, l, grid.size(), &row.notes), run).trajectory;
    for (std::size_t k = 0; k < local.times.size(); ++k) {
      const StatePair& b = reference.states[k];
      row.mass = std::max({row.mass, std::abs(synthesize_at(ref_grid, b.u_hat(), l)),
                           std::abs(synthesize_at(ref_grid, b.u_hat(), -l))});
      const double err = restricted_x12_distance(local.states[k], b);
      if (k == 0 || err > row.err) {
        row.err = err;
        row.t_max = local.times[k];
      }
    }
  });

  ExperimentReport report("period-limit", {"l", "t_max_err", "err_X12", "boundary_mass", "status"});
  const bool aborted = ref_edge > config.boundary_tol;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& row = rows[i];
    if (aborted) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      report.add_row({l_list[i], nan, nan, row.mass, std::string("aborted")});
    } else {
      report.add_row({l_list[i], row.t_max, row.err, row.mass, std::string("ok")});
    }
    for (auto& w : row.notes) report.add_warning(std::move(w));
  }
  if (aborted) {
    report.set_flag("ABORTED");
    report.add_warning("reference run reaches |u| = " + format_double(ref_edge) +
                       " at its own boundary; rows aborted");
  }
  return report;
}

}  // namespace srlw
