#pragma once

// Quadrature helpers shared by the norm, iterate and period-limit code.
// Fixed-order Gauss-Legendre panels and adaptive Gauss-Kronrod come from
// Boost.Math; the uniform-sample Simpson rule is local.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace srlw::quad {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

/// Composite 32-point Gauss-Legendre over [a, b] with panels no longer than
/// max_panel. Exact for polynomials of degree 63 on each panel.
template <class F>
double gauss_legendre(F&& f, double a, double b, double max_panel = 1.0) {
  if (b <= a) return 0.0;
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / max_panel)));
  const double width = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    total += boost::math::quadrature::gauss<double, 32>::integrate(f, lo, lo + width);
  }
  return total;
}

/// Same as gauss_legendre but splits at the given interior breakpoints first.
template <class F>
double gauss_legendre_split(F&& f, double a, double b, std::span<const double> breaks,
                            double max_panel = 1.0) {
  std::vector<double> cuts{a};
  for (double x : breaks)
    if (x > a && x < b) cuts.push_back(x);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += gauss_legendre(f, cuts[i], cuts[i + 1], max_panel);
  return total;
}

/// Adaptive 31-point Gauss-Kronrod; either bound may be infinite.
template <class F>
Estimate adaptive(F&& f, double a, double b, double tol = 1e-12, unsigned max_depth = 18) {
  Estimate e;
  double l1 = 0.0;
  e.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, max_depth, tol,
                                                                          &e.error, &l1);
  return e;
}

/// Composite Simpson rule on uniformly spaced samples. An odd number of
/// intervals is closed with the 3/8 rule on the last three.
double simpson(std::span<const double> samples, double h);

/// Simpson weights for n uniformly spaced samples (same rule as simpson()).
std::vector<double> simpson_weights(std::size_t n, double h);

}  // namespace srlw::quad
