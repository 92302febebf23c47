#include "srlw/illposedness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "srlw/errors.hpp"
#include "srlw/parallel.hpp"
#include "srlw/quadrature.hpp"

namespace srlw {

using symbols::alpha;

double CounterexampleDatum::phi_hat(double xi) const noexcept {
  if (flavor_ == Flavor::periodic) return a(std::lround(xi));
  const double d = std::abs(std::abs(xi) - n_);
  return d <= 1.0 ? 1.0 : 0.0;
}

double CounterexampleDatum::psi_hat(double xi) const noexcept {
  if (flavor_ == Flavor::periodic) return b(std::lround(xi));
  return std::sqrt(1.0 + xi * xi) * phi_hat(xi);
}

LineSpectrum CounterexampleDatum::phi_spectrum() const {
  return {[d = *this](double xi) { return Complex(d.phi_hat(xi)); },
          {-n_ - 1.0, -n_ + 1.0, n_ - 1.0, n_ + 1.0},
          n_ + 2.0};
}

LineSpectrum CounterexampleDatum::psi_spectrum() const {
  return {[d = *this](double xi) { return Complex(d.psi_hat(xi)); },
          {-n_ - 1.0, -n_ + 1.0, n_ - 1.0, n_ + 1.0},
          n_ + 2.0};
}

std::vector<long> CounterexampleDatum::band() const {
  const long c = std::lround(n_);
  return {-c - 1, -c, -c + 1, c - 1, c, c + 1};
}

double CounterexampleDatum::a(long n) const noexcept {
  const long c = std::lround(n_);
  return std::abs(std::abs(n) - c) <= 1 ? 1.0 : 0.0;
}

double CounterexampleDatum::b(long n) const noexcept {
  return a(n) * std::sqrt(1.0 + n_ * n_);
}

CounterexampleDatum build_counterexample(double n, Flavor flavor) {
  if (!(n >= 2.0) || !std::isfinite(n))
    throw PreconditionError("build_counterexample: N must be at least 2");
  if (flavor == Flavor::periodic && n != std::round(n))
    throw PreconditionError("build_counterexample: periodic flavour needs an integer N");
  return {n, flavor};
}

double counterexample_norm(const CounterexampleDatum& datum, SobolevIndex s) {
  if (datum.flavor() == Flavor::line)
    return xs_norm(datum.phi_spectrum(), datum.psi_spectrum(), s).value;
  double sum = 0.0;
  for (long n : datum.band()) {
    const double w = 1.0 + static_cast<double>(n * n);
    sum += std::pow(w, s.value()) * datum.a(n) * datum.a(n) +
           std::pow(w, s.value() - 1.0) * datum.b(n) * datum.b(n);
  }
  return std::sqrt(2.0 * std::numbers::pi * sum);
}

double theta(int k, double xi, double eta) {
  const double ax = alpha(xi);
  const double ad = alpha(xi - eta);
  const double ae = alpha(eta);
  switch (k) {
    case 1: return ax + ad + ae;
    case 2: return ax - ad + ae;
    case 3: return ax - ad - ae;
    case 4: return ax + ad - ae;
    default: throw PreconditionError("theta: index must be 1..4");
  }
}

double sinc_integral(double th, double t, double series_switch) {
  const double x = th * t;
  if (std::abs(x) < series_switch) {
    const double x2 = x * x;
    return t * (1.0 - x2 / 6.0 + x2 * x2 / 120.0);
  }
  return std::sin(x) / th;
}

double cosc_integral(double th, double t, double series_switch) {
  const double x = th * t;
  if (std::abs(x) < series_switch) {
    const double x2 = x * x;
    return -0.5 * th * t * t * (1.0 - x2 / 12.0 + x2 * x2 / 360.0);
  }
  const double h = std::sin(0.5 * x);
  return -2.0 * h * h / th;
}

ResonanceEvaluation j_closed(double xi, double eta, double t, double series_switch) {
  ResonanceEvaluation r;
  std::array<double, 4> sn{}, cs{};
  for (int k = 0; k < 4; ++k) {
    r.theta[k] = theta(k + 1, xi, eta);
    sn[k] = sinc_integral(r.theta[k], t, series_switch);
    cs[k] = cosc_integral(r.theta[k], t, series_switch);
  }
  r.j[0] = 0.25 * (sn[0] + sn[1] + sn[2] + sn[3]);
  r.j[1] = -0.25 * (sn[0] - sn[1] + sn[2] - sn[3]);
  r.j[2] = -0.25 * (cs[0] + cs[1] + cs[2] + cs[3]);
  r.j[3] = 0.25 * (cs[0] - cs[1] + cs[2] - cs[3]);
  return r;
}

ResonanceEvaluation j_oracle(double xi, double eta, double t, double tol) {
  ResonanceEvaluation r;
  for (int k = 0; k < 4; ++k) r.theta[k] = theta(k + 1, xi, eta);
  const double ax = alpha(xi);
  const double ad = alpha(xi - eta);
  const double ae = alpha(eta);
  auto integrate = [&](auto&& f) {
    if (t == 0.0) return 0.0;
    if (t > 0.0) return quad::adaptive(f, 0.0, t, tol).value;
    return -quad::adaptive(f, t, 0.0, tol).value;
  };
  r.j[0] = integrate([&](double s) { return std::cos(ax * s) * std::cos(ad * s) * std::cos(ae * s); });
  r.j[1] = integrate([&](double s) { return std::cos(ax * s) * std::sin(ad * s) * std::sin(ae * s); });
  r.j[2] = integrate([&](double s) { return std::sin(ax * s) * std::cos(ad * s) * std::cos(ae * s); });
  r.j[3] = integrate([&](double s) { return std::sin(ax * s) * std::sin(ad * s) * std::sin(ae * s); });
  return r;
}

double reduced_j12(double xi, double eta, double t, double series_switch) {
  return sinc_integral(theta(1, xi, eta), t, series_switch) +
         sinc_integral(theta(3, xi, eta), t, series_switch);
}

double reduced_j34(double xi, double eta, double t, double series_switch) {
  return cosc_integral(theta(1, xi, eta), t, series_switch) +
         cosc_integral(theta(3, xi, eta), t, series_switch);
}

std::vector<EtaPiece> interaction_set(double xi, double n) {
  std::vector<EtaPiece> pieces;
  for (int se : {1, -1}) {
    for (int sd : {1, -1}) {
      const double lo = std::max(se * n - 1.0, xi - sd * n - 1.0);
      const double hi = std::min(se * n + 1.0, xi - sd * n + 1.0);
      if (hi > lo) pieces.push_back({lo, hi, se, sd});
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const EtaPiece& p, const EtaPiece& q) { return p.lo < q.lo; });
  return pieces;
}

double cross_band_measure(double xi, double n) {
  double total = 0.0;
  for (const auto& p : interaction_set(xi, n))
    if (p.cross()) total += p.length();
  return total;
}

namespace {

// (int_{B_xi} [J1 - J2], int_{B_xi} [J3 - J4]) for the line datum.
std::pair<double, double> line_eta_integrals(double xi, double n, double t) {
  double p = 0.0;
  double q = 0.0;
  for (const auto& piece : interaction_set(xi, n)) {
    p += 0.5 * quad::gauss_legendre([&](double eta) { return reduced_j12(xi, eta, t); },
                                    piece.lo, piece.hi, 1.0);
    q -= 0.5 * quad::gauss_legendre([&](double eta) { return reduced_j34(xi, eta, t); },
                                    piece.lo, piece.hi, 1.0);
  }
  return {p, q};
}

// Mode sums replacing the eta integrals for the periodic datum.
std::pair<double, double> periodic_mode_sums(const CounterexampleDatum& d, long n, double t) {
  double p = 0.0;
  double q = 0.0;
  for (long m : d.band()) {
    const long k = n - m;
    const double aa = d.a(m) * d.a(k);
    if (aa == 0.0) continue;
    const double bb = d.b(m) * d.b(k) /
                      (std::sqrt(1.0 + static_cast<double>(m * m)) *
                       std::sqrt(1.0 + static_cast<double>(k * k)));
    const auto r = j_closed(static_cast<double>(n), static_cast<double>(m), t);
    p += r.j[0] * aa - r.j[1] * bb;
    q += r.j[2] * aa - r.j[3] * bb;
  }
  return {p, q};
}

}  // namespace

IterateSpectrum second_iterate_spectrum(const CounterexampleDatum& datum, double t, double xi) {
  std::pair<double, double> pq;
  if (datum.flavor() == Flavor::line) {
    pq = line_eta_integrals(xi, datum.N(), t);
  } else {
    if (xi != std::round(xi))
      throw PreconditionError("second_iterate_spectrum: periodic flavour needs an integer mode");
    pq = periodic_mode_sums(datum, std::lround(xi), t);
  }
  const auto [p, q] = pq;
  const double ph = symbols::phi(xi);
  const double r = std::sqrt(1.0 + xi * xi);
  const double c = std::cos(alpha(xi) * t);
  const double s = std::sin(alpha(xi) * t);
  return {Complex(ph * (c * p + s * q), 0.0), Complex(0.0, r * ph * (s * p - c * q))};
}

IterateNorm second_iterate_norm(const CounterexampleDatum& datum, double t, SobolevIndex s) {
  auto density = [&](double xi) {
    const auto ab = second_iterate_spectrum(datum, t, xi);
    const double w = 1.0 + xi * xi;
    return std::pow(w, s.value()) * std::norm(ab.a) + std::pow(w, s.value() - 1.0) * std::norm(ab.b);
  };

  if (datum.flavor() == Flavor::periodic) {
    const long top = std::lround(2.0 * datum.N()) + 2;
    double sum = 0.0;
    for (long n = -top; n <= top; ++n) sum += density(static_cast<double>(n));
    return {std::sqrt(2.0 * std::numbers::pi * sum), 0.0};
  }

  // A and B vanish outside |xi| <= 2 and ||xi| - 2N| <= 2; kinks at 0 and +-2N.
  const double n = datum.N();
  const std::array<std::pair<double, double>, 6> pieces{{{-2.0 * n - 2.0, -2.0 * n},
                                                         {-2.0 * n, -2.0 * n + 2.0},
                                                         {-2.0, 0.0},
                                                         {0.0, 2.0},
                                                         {2.0 * n - 2.0, 2.0 * n},
                                                         {2.0 * n, 2.0 * n + 2.0}}};
  auto integrate = [&](double panel) {
    double total = 0.0;
    for (const auto& [lo, hi] : pieces) total += quad::gauss_legendre(density, lo, hi, panel);
    return total;
  };
  const double coarse = integrate(0.5);
  const double fine = integrate(0.25);
  const double err = std::abs(fine - coarse);
  if (err > 1e-6 * std::abs(fine) && err > 0.0)
    throw ConvergenceError("second_iterate_norm: xi quadrature did not converge");
  const double value = std::sqrt(std::max(fine, 0.0));
  return {value, value > 0.0 ? err / (2.0 * value) : std::sqrt(err)};
}

ExperimentReport inflation_experiment(const InflationConfig& config) {
  ExperimentReport report("illposedness",
                          {"N", "s", "t", "input_norm_Xs", "iterate_norm_Xs", "ratio"});
  const SobolevIndex s(config.s);
  const std::size_t rows = config.n_list.size();
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> input(rows, nan), iterate(rows, nan);
  std::vector<std::string> failures(rows);

  parallel_for(rows, config.workers, [&](std::size_t i) {
    try {
      const auto datum = build_counterexample(config.n_list[i], config.flavor);
      input[i] = counterexample_norm(datum, s);
      iterate[i] = second_iterate_norm(datum, config.t, s).value;
    } catch (const ConvergenceError& e) {
      failures[i] = e.what();
    }
  });

  for (std::size_t i = 0; i < rows; ++i) {
    if (!failures[i].empty())
      report.add_warning("N=" + format_double(config.n_list[i]) + ": " + failures[i]);
    report.add_row({config.n_list[i], config.s, config.t, input[i], iterate[i],
                    iterate[i] / input[i]});
  }

  if (rows >= 2) {
    const bool finite = std::all_of(iterate.begin(), iterate.end(),
                                    [](double v) { return std::isfinite(v) && v > 0.0; }) &&
                        std::all_of(input.begin(), input.end(),
                                    [](double v) { return std::isfinite(v) && v > 0.0; });
    if (finite) {
      const double decay = input.front() / input.back();
      const auto [lo, hi] = std::minmax_element(iterate.begin(), iterate.end());
      if (decay >= config.min_input_decay && *hi / *lo <= config.max_iterate_band)
        report.set_flag("INFLATION");
    }
  }
  return report;
}

}  // namespace srlw
