// srlw: command-line driver for the SRLW experiments.
//
//   srlw illposedness   --s=-0.5 --t=0.5 --N=32,64,128,256 --out=r.csv
//   srlw evolve         --l=20 --M=256 --dt=0.01 --T=10 --init=gaussian
//   srlw picard-check   --eps=0.4,0.2,0.1 --t=0.5
//   srlw period-limit   --l=10,20,40 --l-ref=160 --T=2
//   srlw boundary-bound --l=10,20,40 --T=1
//   srlw decay          --l=40 --T=1 --weight=exponential --param=0.5
//
// Exit status: 0 success, 1 runtime failure, 2 usage or precondition error,
// 3 bound violation.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "srlw/errors.hpp"
#include "srlw/illposedness.hpp"
#include "srlw/initial_data.hpp"
#include "srlw/parallel.hpp"
#include "srlw/period_limit.hpp"
#include "srlw/solver.hpp"

using namespace srlw;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kViolation = 3;

struct DataOptions {
  std::string u = "gaussian";
  std::string v = "zero";
  double u_amplitude = 1.0;
  double u_width = 1.0;
  double v_amplitude = 1.0;
  double v_width = 1.0;

  FieldProfile u_profile() const { return profile_by_name(u, u_amplitude, u_width); }
  FieldProfile v_profile() const { return profile_by_name(v, v_amplitude, v_width); }
};

void add_data_options(CLI::App* sub, DataOptions& d) {
  sub->add_option("--init", d.u, "profile for u: gaussian, gaussian-derivative, sech2, cosine-mode, zero");
  sub->add_option("--init-v", d.v, "profile for v");
  sub->add_option("--amplitude", d.u_amplitude, "amplitude of u");
  sub->add_option("--width", d.u_width, "width of u (angular wavenumber for cosine-mode)");
  sub->add_option("--amplitude-v", d.v_amplitude, "amplitude of v");
  sub->add_option("--width-v", d.v_width, "width of v");
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// One line "subcommand key=value ..." with every option resolved.
std::string resolved_config(const CLI::App* sub) {
  std::vector<std::string> parts{sub->get_name()};
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "config") continue;
    std::string value = opt->count() > 0 ? join(opt->results(), ",") : opt->get_default_str();
    if (value.size() > 1 && value.front() == '[' && value.back() == ']')
      value = value.substr(1, value.size() - 2);
    parts.push_back(name + "=" + value);
  }
  return join(parts, " ");
}

void emit(ExperimentReport& report, const CLI::App* sub, const std::string& out) {
  report.set_config_line(resolved_config(sub));
  if (out.empty())
    std::cout << report.to_csv();
  else
    report.write_csv(out);
  for (const auto& w : report.warnings()) std::cerr << "warning: " << w << '\n';
}

std::string flag_text(const ExperimentReport& r) {
  return r.flags().empty() ? "none" : join(r.flags(), ",");
}

unsigned capped_workers(unsigned requested) {
  return std::max(1u, std::min(requested, default_workers()));
}

double column_max(const ExperimentReport& r, const char* col) {
  double m = 0.0;
  for (double x : r.column_values(col))
    if (std::isfinite(x)) m = std::max(m, x);
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral experiments for the symmetric regularized long-wave system", "srlw"};
  app.option_defaults()->always_capture_default();
  app.set_config("--config", "", "key=value or TOML config file; flags override it");
  app.allow_config_extras(false);
  app.require_subcommand(1);

  std::string out;
  unsigned workers = default_workers();
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out, "CSV output path (stdout when empty)");
    sub->add_option("--workers", workers, "worker threads (capped by SRLW_WORKERS)");
  };

  // illposedness
  InflationConfig infl;
  infl.n_list = {32, 64, 128, 256, 512};
  std::string flavor = "line";
  auto* ill = app.add_subcommand("illposedness", "norm inflation of the second Picard iterate");
  ill->add_option("--s", infl.s, "Sobolev index (negative)");
  ill->add_option("--t", infl.t, "time");
  ill->add_option("--N", infl.n_list, "frequency sweep")->delimiter(',');
  ill->add_option("--flavor", flavor, "line or periodic")->check(CLI::IsMember({"line", "periodic"}));
  ill->add_option("--min-decay", infl.min_input_decay, "input norm decrease required for the flag");
  ill->add_option("--band", infl.max_iterate_band, "allowed max/min spread of the iterate norm");
  add_common(ill);

  // evolve
  double l = 20.0, dt = 0.01, T = 10.0;
  std::size_t modes = 256, stride = 10;
  std::string state_out;
  DataOptions data;
  auto* evo = app.add_subcommand("evolve", "periodic evolution with invariant monitoring");
  evo->add_option("--l", l, "half period");
  evo->add_option("--M", modes, "number of Fourier modes (even)");
  evo->add_option("--dt", dt, "time step");
  evo->add_option("--T", T, "final time");
  evo->add_option("--stride", stride, "steps between invariant snapshots");
  evo->add_option("--state-out", state_out, "CSV dump of the final coefficients");
  add_data_options(evo, data);
  add_common(evo);

  // picard-check
  PicardConfig picard;
  picard.eps_list = {0.4, 0.2, 0.1, 0.05};
  bool linear_only = false;
  double picard_l = 20.0, picard_dt = 0.005;
  std::size_t picard_modes = 256;
  DataOptions picard_data;
  auto* pic = app.add_subcommand("picard-check", "cubic scaling of the Picard remainder");
  pic->add_option("--l", picard_l, "half period");
  pic->add_option("--M", picard_modes, "number of Fourier modes (even)");
  pic->add_option("--dt", picard_dt, "time step");
  pic->add_option("--t", picard.t, "time");
  pic->add_option("--eps", picard.eps_list, "amplitude sweep")->delimiter(',');
  pic->add_option("--intervals", picard.quadrature_intervals, "Simpson intervals in time");
  pic->add_flag("--linear", linear_only, "drop the nonlinearity");
  add_data_options(pic, picard_data);
  add_common(pic);

  // period-limit
  std::vector<double> lp_list{10, 20, 40};
  double l_ref = 160.0, lp_T = 2.0;
  LongPeriodConfig lp;
  DataOptions lp_data;
  lp_data.v = "gaussian-derivative";
  auto* per = app.add_subcommand("period-limit", "long-period convergence towards the line solution");
  per->add_option("--l", lp_list, "half periods")->delimiter(',');
  per->add_option("--l-ref", l_ref, "half period of the reference run");
  per->add_option("--T", lp_T, "final time");
  per->add_option("--dx", lp.dx, "grid spacing");
  per->add_option("--dt", lp.dt, "time step");
  per->add_option("--samples", lp.samples, "sample intervals in [0, T]");
  per->add_option("--boundary-tol", lp.boundary_tol, "reference boundary tolerance");
  add_data_options(per, lp_data);
  add_common(per);

  // boundary-bound
  std::vector<double> bb_list{10, 20, 40};
  double bb_T = 1.0;
  SweepConfig bb;
  std::string scaling_out;
  DataOptions bb_data;
  bb_data.v = "gaussian-derivative";
  auto* bnd = app.add_subcommand("boundary-bound", "pointwise bound at x = l");
  bnd->add_option("--l", bb_list, "half periods")->delimiter(',');
  bnd->add_option("--T", bb_T, "final time");
  bnd->add_option("--dx", bb.dx, "grid spacing");
  bnd->add_option("--dt", bb.dt, "time step");
  bnd->add_option("--stride", bb.snapshot_stride, "steps between checked snapshots");
  bnd->add_option("--scaling-out", scaling_out, "CSV path for the l-scaling table");
  add_data_options(bnd, bb_data);
  add_common(bnd);

  // decay
  double dc_l = 40.0, dc_T = 1.0, dc_dx = 0.15625, dc_dt = 0.01, param = 1.0;
  std::string weight = "polynomial";
  DataOptions dc_data;
  auto* dec = app.add_subcommand("decay", "weighted decay bound");
  dec->add_option("--l", dc_l, "half period of the run");
  dec->add_option("--T", dc_T, "final time");
  dec->add_option("--dx", dc_dx, "grid spacing");
  dec->add_option("--dt", dc_dt, "time step");
  dec->add_option("--weight", weight, "polynomial or exponential")
      ->check(CLI::IsMember({"polynomial", "exponential"}));
  dec->add_option("--param", param, "sigma for polynomial, lambda for exponential");
  add_data_options(dec, dc_data);
  add_common(dec);

  if (argc < 2) {
    std::cerr << app.help();
    return kUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    workers = capped_workers(workers);
    if (*ill) {
      infl.flavor = flavor == "periodic" ? Flavor::periodic : Flavor::line;
      infl.workers = workers;
      auto report = inflation_experiment(infl);
      emit(report, ill, out);
      const auto in = report.column_values("input_norm_Xs");
      std::printf("illposedness: rows=%zu flag=%s input_decrease=%s max_ratio=%s\n", report.row_count(),
                  flag_text(report).c_str(), format_double(in.front() / in.back()).c_str(),
                  format_double(column_max(report, "ratio")).c_str());
      return kOk;
    }
    if (*evo) {
      const SpectralGrid grid = make_grid(l, modes);
      const StatePair u0 = sample_state(grid, data.u_profile(), data.v_profile());
      const auto result = evolve(u0, {.dt = dt, .t_final = T, .snapshot_stride = stride});
      auto report = invariants_report(result.snapshots);
      emit(report, evo, out);
      if (!state_out.empty()) {
        auto dump = state_dump(result.final_state);
        dump.set_config_line(resolved_config(evo));
        dump.write_csv(state_out);
      }
      const auto& a = result.snapshots.front();
      double dv = 0.0, de = 0.0, di = 0.0;
      for (const auto& s : result.snapshots) {
        dv = std::max(dv, std::abs(s.V - a.V) / std::max(a.V, 1e-300));
        de = std::max(de, std::abs(s.E - a.E) / std::max(std::abs(a.E), 1.0));
        di = std::max({di, std::abs(s.I1 - a.I1), std::abs(s.I2 - a.I2)});
      }
      std::printf("evolve: snapshots=%zu rel_dV=%s rel_dE=%s max_dI=%s\n", result.snapshots.size(),
                  format_double(dv).c_str(), format_double(de).c_str(), format_double(di).c_str());
      return kOk;
    }
    if (*pic) {
      const SpectralGrid grid = make_grid(picard_l, picard_modes);
      const StatePair u0 = sample_state(grid, picard_data.u_profile(), picard_data.v_profile());
      picard.evolution.dt = picard_dt;
      picard.nonlinear = !linear_only;
      auto report = picard_expansion_check(u0, picard);
      emit(report, pic, out);
      std::printf("picard-check: rows=%zu flag=%s max_R=%s\n", report.row_count(), flag_text(report).c_str(),
                  format_double(column_max(report, "R")).c_str());
      return kOk;
    }
    if (*per) {
      lp.workers = workers;
      const LineDatum datum{lp_data.u_profile(), lp_data.v_profile()};
      auto report = long_period_experiment(datum, lp_list, l_ref, lp_T, lp);
      emit(report, per, out);
      std::printf("period-limit: rows=%zu flag=%s max_err_X12=%s\n", report.row_count(),
                  flag_text(report).c_str(), format_double(column_max(report, "err_X12")).c_str());
      return kOk;
    }
    if (*bnd) {
      bb.workers = workers;
      const LineDatum datum{bb_data.u_profile(), bb_data.v_profile()};
      auto sweep = boundary_sweep(datum, bb_list, bb_T, bb);
      emit(sweep.bounds, bnd, out);
      if (!scaling_out.empty()) {
        sweep.scaling.set_config_line(resolved_config(bnd));
        sweep.scaling.write_csv(scaling_out);
      }
      std::printf("boundary-bound: rows=%zu flag=%s max_measured=%s\n", sweep.bounds.row_count(),
                  flag_text(sweep.bounds).c_str(),
                  format_double(column_max(sweep.bounds, "measured")).c_str());
      return sweep.bounds.has_flag("VIOLATION") ? kViolation : kOk;
    }
    if (*dec) {
      const WeightFunction r =
          weight == "polynomial" ? WeightFunction::polynomial(param) : WeightFunction::exponential(param);
      const LineDatum datum{dc_data.u_profile(), dc_data.v_profile()};
      const SpectralGrid grid = make_grid(dc_l, 2 * static_cast<std::size_t>(std::llround(dc_l / dc_dx)));
      const auto run = evolve(sample_state(grid, datum.psi, datum.phi),
                              {.dt = dc_dt, .t_final = dc_T, .snapshot_stride = 10, .keep_states = true});
      auto report = decay_check(datum, r, dc_T, run.trajectory);
      emit(report, dec, out);
      std::printf("decay: rows=%zu flag=%s max_measured=%s\n", report.row_count(), flag_text(report).c_str(),
                  format_double(column_max(report, "measured_sup")).c_str());
      return report.has_flag("VIOLATION") ? kViolation : kOk;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BlowupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
