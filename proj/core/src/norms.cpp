#include "srlw/norms.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "srlw/errors.hpp"
#include "srlw/quadrature.hpp"

namespace srlw {

SobolevIndex::SobolevIndex(double s) : s_(s) {
  if (!std::isfinite(s)) throw PreconditionError("SobolevIndex: index must be finite");
}

WeightFunction WeightFunction::polynomial(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw PreconditionError("WeightFunction: polynomial weight needs sigma > 0");
  return {Kind::polynomial, sigma};
}

WeightFunction WeightFunction::exponential(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw PreconditionError("WeightFunction: exponential weight needs 0 < lambda < 1");
  return {Kind::exponential, lambda};
}

double WeightFunction::operator()(double x) const noexcept {
  return kind_ == Kind::polynomial ? std::pow(1.0 + x * x, p_) : std::exp(p_ * x);
}

double WeightFunction::ratio(double x, double y) const noexcept {
  return kind_ == Kind::polynomial ? std::pow((1.0 + x * x) / (1.0 + y * y), p_)
                                   : std::exp(p_ * (x - y));
}

double WeightFunction::log_ratio(double x, double y) const noexcept {
  return kind_ == Kind::polynomial ? p_ * (std::log1p(x * x) - std::log1p(y * y)) : p_ * (x - y);
}

double hs_norm_periodic(std::span<const Complex> coeffs, double half_period, SobolevIndex s) {
  const std::size_t m = coeffs.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const long n = i < m / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(m);
    const double xi = static_cast<double>(n) * std::numbers::pi / half_period;
    sum += std::pow(1.0 + xi * xi, s.value()) * std::norm(coeffs[i]);
  }
  return std::sqrt(2.0 * half_period * sum);
}

namespace {

// int_a^b (1 + xi^2)^s |f^|^2, adaptive on every breakpoint-free piece.
quad::Estimate weighted_energy(const LineSpectrum& spec, double s, double a, double b) {
  std::vector<double> cuts{a};
  for (double x : spec.breakpoints)
    if (x > a && x < b) cuts.push_back(x);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  auto integrand = [&](double xi) { return std::pow(1.0 + xi * xi, s) * std::norm(spec.sampler(xi)); };
  quad::Estimate total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    auto e = quad::adaptive(integrand, cuts[i], cuts[i + 1], 1e-13);
    total.value += e.value;
    total.error += e.error;
  }
  return total;
}

}  // namespace

LineNormResult hs_norm_line(const LineSpectrum& spectrum, SobolevIndex s) {
  if (!spectrum.sampler) throw PreconditionError("hs_norm_line: empty sampler");
  const double cut = spectrum.cutoff;
  const double head = weighted_energy(spectrum, s.value(), -cut, cut).value;
  const double tail = weighted_energy(spectrum, s.value(), cut, 4.0 * cut).value +
                      weighted_energy(spectrum, s.value(), -4.0 * cut, -cut).value;
  if (tail > 1e-6 * head && tail > 0.0)
    throw ConvergenceError("hs_norm_line: spectrum not negligible beyond the cutoff");
  return {std::sqrt(std::max(head, 0.0)), std::sqrt(std::max(tail, 0.0))};
}

LineNormResult xs_norm(const LineSpectrum& first, const LineSpectrum& second, SobolevIndex s) {
  const auto a = hs_norm_line(first, s);
  const auto b = hs_norm_line(second, s.companion());
  return {std::hypot(a.value, b.value), std::hypot(a.tail, b.tail)};
}

double xs_norm(const StatePair& state, SobolevIndex s) {
  const double l = state.grid().half_period();
  return std::hypot(hs_norm_periodic(state.u_hat(), l, s),
                    hs_norm_periodic(state.v_hat(), l, s.companion()));
}

double x12_norm(const StatePair& state) {
  const double l = state.grid().half_period();
  return hs_norm_periodic(state.u_hat(), l, SobolevIndex(1.0)) +
         hs_norm_periodic(state.v_hat(), l, SobolevIndex(0.0));
}

double wm2_norm(const std::function<double(double)>& f,
                const std::function<double(double)>& derivative, Interval interval, int m) {
  if (m < 0) throw PreconditionError("wm2_norm: order must be nonnegative");
  auto integrand = [&](double x) {
    const double v = f(x);
    if (m == 0) return v * v;
    const double d = derivative(x);
    return v * v + d * d;
  };
  return std::sqrt(quad::gauss_legendre(integrand, interval.lo, interval.hi, 0.5));
}

double x12_norm_interval(const std::function<double(double)>& f,
                         const std::function<double(double)>& f_prime,
                         const std::function<double(double)>& g, Interval interval) {
  return wm2_norm(f, f_prime, interval, 1) + wm2_norm(g, {}, interval, 0);
}

WeightedSup weighted_sup_norm(const std::function<double(double)>& field, const WeightFunction& r,
                              Interval window, double step) {
  if (!(step > 0.0) || !(window.hi >= window.lo))
    throw PreconditionError("weighted_sup_norm: need a finite window and positive step");
  WeightedSup best{0.0, window.lo};
  const auto count = static_cast<std::size_t>(std::floor(window.length() / step + 1e-9));
  for (std::size_t k = 0; k <= count; ++k) {
    const double x = std::min(window.lo + step * static_cast<double>(k), window.hi);
    const double v = std::abs(r(x) * field(x));
    if (v > best.value) best = {v, x};
  }
  return best;
}

double kappa_profile(const WeightFunction& r, double x, double* error) {
  auto integrand = [&](double u) {
    return std::exp(r.log_ratio(x, x - u) - u) + std::exp(r.log_ratio(x, x + u) - u);
  };
  // The polynomial ratio peaks near u = |x|; split there so the adaptive rule sees it.
  const double split = std::abs(x) > 1.0 ? std::abs(x) : 1.0;
  auto head = quad::adaptive(integrand, 0.0, split, 1e-13);
  auto tail = quad::adaptive(integrand, split, std::numeric_limits<double>::infinity(), 1e-13);
  if (error) *error = head.error + tail.error;
  return head.value + tail.value;
}

KappaResult kappa(const WeightFunction& r, Interval window) {
  if (!(window.hi > window.lo)) throw PreconditionError("kappa: empty window");
  constexpr std::size_t samples = 400;
  const double h = window.length() / static_cast<double>(samples);
  std::vector<double> values(samples + 1);
  for (std::size_t k = 0; k <= samples; ++k)
    values[k] = kappa_profile(r, window.lo + h * static_cast<double>(k));
  const auto best = static_cast<std::size_t>(
      std::distance(values.begin(), std::max_element(values.begin(), values.end())));
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double spread = *hi_it - *lo_it;
  const bool flat = spread <= 1e-10 * std::abs(*hi_it);

  KappaResult out;
  if (flat) {
    out.argmax = 0.5 * (window.lo + window.hi);
    out.value = kappa_profile(r, out.argmax, &out.error);
    return out;
  }
  if (best == 0 || best == samples)
    throw ConvergenceError("kappa: maximiser sits on the window boundary; enlarge the window");

  const double a = window.lo + h * static_cast<double>(best - 1);
  const double b = window.lo + h * static_cast<double>(best + 1);
  auto neg = [&](double x) { return -kappa_profile(r, x); };
  auto [xmax, fmin] = boost::math::tools::brent_find_minima(neg, a, b, 40);
  out.argmax = xmax;
  out.value = std::max(-fmin, values[best]);
  kappa_profile(r, xmax, &out.error);
  return out;
}

}  // namespace srlw
