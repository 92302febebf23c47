#pragma once

// Brute-force reference computations used to cross-check the fast paths.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "srlw/spectral.hpp"

namespace oracle {

using srlw::Complex;
using srlw::CoeffVector;

inline long mode_of(std::size_t i, std::size_t m) {
  return i < m / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(m);
}

// f_n = (1/M) sum_j f(x_j) exp(-i n pi x_j / l), O(M^2).
inline CoeffVector naive_dft(double l, const std::vector<double>& f) {
  const std::size_t m = f.size();
  CoeffVector c(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double k = std::numbers::pi * static_cast<double>(mode_of(i, m)) / l;
    Complex s{};
    for (std::size_t j = 0; j < m; ++j) {
      const double x = -l + 2.0 * l * static_cast<double>(j) / static_cast<double>(m);
      s += f[j] * std::exp(Complex(0.0, -k * x));
    }
    c[i] = s / static_cast<double>(m);
  }
  return c;
}

// Coefficients of f g for modes |n| < M/2 by direct convolution, O(M^2).
inline CoeffVector naive_product(const CoeffVector& f, const CoeffVector& g) {
  const std::size_t m = f.size();
  const long half = static_cast<long>(m / 2);
  auto idx = [m](long n) { return static_cast<std::size_t>(n < 0 ? n + static_cast<long>(m) : n); };
  CoeffVector out(m);
  for (long n = -half + 1; n < half; ++n) {
    Complex s{};
    for (long p = -half + 1; p < half; ++p) {
      const long q = n - p;
      if (q <= -half || q >= half) continue;
      s += f[idx(p)] * g[idx(q)];
    }
    out[idx(n)] = s;
  }
  return out;
}

// Random Hermitian coefficients confined to |n| <= band with geometric decay.
inline CoeffVector random_hermitian(std::size_t m, long band, std::mt19937_64& rng, double decay = 0.8) {
  std::normal_distribution<double> g;
  auto idx = [m](long n) { return static_cast<std::size_t>(n < 0 ? n + static_cast<long>(m) : n); };
  CoeffVector c(m);
  c[0] = g(rng);
  for (long n = 1; n <= band; ++n) {
    const Complex z = std::pow(decay, static_cast<double>(n)) * Complex(g(rng), g(rng));
    c[idx(n)] = z;
    c[idx(-n)] = std::conj(z);
  }
  return c;
}

inline double max_abs_diff(const CoeffVector& a, const CoeffVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const CoeffVector& a) {
  double m = 0.0;
  for (const auto& z : a) m = std::max(m, std::abs(z));
  return m;
}

inline double state_distance(const srlw::StatePair& a, const srlw::StatePair& b) {
  return std::max(max_abs_diff(a.u_hat(), b.u_hat()), max_abs_diff(a.v_hat(), b.v_hat()));
}

}  // namespace oracle
