#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "srlw/errors.hpp"
#include "srlw/illposedness.hpp"
#include "srlw/norms.hpp"
#include "srlw/quadrature.hpp"

using namespace srlw;
using std::numbers::pi;

TEST(PeriodicNorm, TrivialCases) {
  EXPECT_EQ(hs_norm_periodic(CoeffVector(16), 3.0, SobolevIndex(1.3)), 0.0);
  CoeffVector c(16);
  c[0] = 1.0;
  for (double s : {-2.0, 0.0, 0.7, 3.0}) EXPECT_NEAR(hs_norm_periodic(c, 3.0, SobolevIndex(s)), std::sqrt(6.0), 1e-14);
}

TEST(PeriodicNorm, H1MatchesPhysicalQuadrature) {
  const double l = 3.0;
  const SpectralGrid g = make_grid(l, 64);
  auto f = [l](double x) { return std::exp(std::sin(pi * x / l)); };
  auto df = [l](double x) { return pi / l * std::cos(pi * x / l) * std::exp(std::sin(pi * x / l)); };
  std::vector<double> s(64);
  for (std::size_t j = 0; j < 64; ++j) s[j] = f(g.node(j));
  const auto c = forward_transform(g, s);
  const double physical =
      std::sqrt(quad::gauss_legendre([&](double x) { return f(x) * f(x) + df(x) * df(x); }, -l, l, 0.25));
  EXPECT_NEAR(hs_norm_periodic(c, l, SobolevIndex(1.0)), physical, 1e-9);
}

TEST(PeriodicNorm, PlancherelOnRandomFields) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const double l = 2.0 + trial;
    const SpectralGrid g = make_grid(l, 64);
    const auto c = oracle::random_hermitian(64, 20, rng, 0.9);
    const double physical = std::sqrt(
        quad::gauss_legendre([&](double x) { return std::pow(synthesize_at(g, c, x), 2); }, -l, l, 0.1));
    EXPECT_NEAR(hs_norm_periodic(c, l, SobolevIndex(0.0)), physical, 1e-10 * physical);
  }
}

TEST(PeriodicNorm, MonotoneInIndexAndHomogeneous) {
  std::mt19937_64 rng(12);
  const auto c = oracle::random_hermitian(64, 30, rng, 0.95);
  double prev = 0.0;
  for (double s = -3.0; s <= 3.0; s += 0.25) {
    const double v = hs_norm_periodic(c, 1.7, SobolevIndex(s));
    EXPECT_GE(v, prev);
    prev = v;
  }
  CoeffVector scaled = c;
  for (auto& z : scaled) z *= -2.5;
  EXPECT_NEAR(hs_norm_periodic(scaled, 1.7, SobolevIndex(0.4)), 2.5 * hs_norm_periodic(c, 1.7, SobolevIndex(0.4)),
              1e-13);
}

TEST(LineNorm, IndicatorSpectrum) {
  const auto d = build_counterexample(10.0, Flavor::line);
  EXPECT_NEAR(hs_norm_line(d.phi_spectrum(), SobolevIndex(0.0)).value, 2.0, 1e-12);
  const auto d2 = build_counterexample(20.0, Flavor::line);
  for (double s : {-1.0, -0.5, -0.25}) {
    const double r = hs_norm_line(d2.phi_spectrum(), SobolevIndex(s)).value /
                     hs_norm_line(d.phi_spectrum(), SobolevIndex(s)).value;
    EXPECT_NEAR(r, std::pow(2.0, s), 0.02 * std::pow(2.0, s)) << s;
  }
}

TEST(LineNorm, ZeroAndGaussian) {
  LineSpectrum zero{[](double) { return Complex{}; }, {}, 20.0};
  EXPECT_EQ(hs_norm_line(zero, SobolevIndex(1.0)).value, 0.0);
  // |f^|^2 = e^{-xi^2 / 2}: integral sqrt(2 pi) at s = 0.
  LineSpectrum g{[](double x) { return Complex(std::exp(-x * x / 4.0)); }, {}, 60.0};
  EXPECT_NEAR(hs_norm_line(g, SobolevIndex(0.0)).value, std::pow(2.0 * pi, 0.25), 1e-12);
}

TEST(LineNorm, SignalsSlowTail) {
  LineSpectrum slow{[](double x) { return Complex(1.0 / std::sqrt(1.0 + std::abs(x))); }, {}, 60.0};
  EXPECT_THROW(hs_norm_line(slow, SobolevIndex(0.0)), ConvergenceError);
}

TEST(ProductNorm, PairIdentities) {
  LineSpectrum zero{[](double) { return Complex{}; }, {}, 20.0};
  EXPECT_EQ(xs_norm(zero, zero, SobolevIndex(0.5)).value, 0.0);
  LineSpectrum first{[](double x) { return Complex(std::exp(-x * x / 4.0)); }, {}, 60.0};
  LineSpectrum second{[](double x) { return std::sqrt(1.0 + x * x) * std::exp(-x * x / 4.0); }, {}, 60.0};
  for (double s : {-0.5, 0.0, 1.0}) {
    EXPECT_NEAR(xs_norm(first, second, SobolevIndex(s)).value,
                std::sqrt(2.0) * hs_norm_line(first, SobolevIndex(s)).value, 1e-11);
  }
}

TEST(ProductNorm, CounterexampleIsOrderOneAtZeroIndex) {
  for (double n : {4.0, 16.0, 64.0, 256.0}) {
    const auto d = build_counterexample(n, Flavor::line);
    const double v = xs_norm(d.phi_spectrum(), d.psi_spectrum(), SobolevIndex(0.0)).value;
    EXPECT_NEAR(v, 2.0 * std::sqrt(2.0), 1e-10) << n;
  }
}

TEST(WeightedSup, ClosedFormMaxima) {
  EXPECT_EQ(weighted_sup_norm([](double) { return 0.0; }, WeightFunction::polynomial(1.0), {-5, 5}, 0.01).value, 0.0);
  const auto e = weighted_sup_norm([](double x) { return std::exp(-std::abs(x)); }, WeightFunction::exponential(0.5),
                                   {-20, 20}, 0.001);
  EXPECT_NEAR(e.value, 1.0, 1e-12);
  EXPECT_NEAR(e.argmax, 0.0, 1e-9);
  const auto p = weighted_sup_norm([](double x) { return std::pow(1.0 + x * x, -2.0); },
                                   WeightFunction::polynomial(1.0), {-20, 20}, 0.001);
  EXPECT_NEAR(p.value, 1.0, 1e-12);
  EXPECT_NEAR(p.argmax, 0.0, 1e-9);
}

TEST(Kappa, ExponentialClosedForm) {
  for (double lam : {0.1, 0.25, 0.5, 0.8}) {
    const auto k = kappa(WeightFunction::exponential(lam), {-30, 30});
    EXPECT_NEAR(k.value, 2.0 / (1.0 - lam * lam), 1e-8) << lam;
  }
  EXPECT_NEAR(kappa(WeightFunction::exponential(0.5), {-30, 30}).value, 8.0 / 3.0, 1e-8);
  EXPECT_NEAR(kappa(WeightFunction::exponential(1e-6), {-30, 30}).value, 2.0, 1e-8);
}

TEST(Kappa, PolynomialAgainstDenseScan) {
  const auto r = WeightFunction::polynomial(1.0);
  const auto k = kappa(r, {-50, 50});
  // Independent route: trapezoid in y on a wide window, dense scan in x.
  double best = 0.0;
  for (double x = 0.0; x <= 8.0; x += 0.01) {
    double s = 0.0;
    const double h = 0.002;
    for (double y = x - 60.0; y <= x + 60.0; y += h)
      s += (1.0 + x * x) / (1.0 + y * y) * std::exp(-std::abs(x - y)) * h;
    best = std::max(best, s);
  }
  EXPECT_GE(k.value, 2.0 - 1e-6);
  EXPECT_NEAR(k.value, best, 1e-4);
  EXPECT_GT(k.error, 0.0);
  EXPECT_LT(k.error, 1e-8);
}

TEST(Kappa, WindowTooSmall) {
  EXPECT_THROW(kappa(WeightFunction::polynomial(1.0), {0.0, 2.0}), ConvergenceError);
}

TEST(Weights, Validation) {
  EXPECT_THROW(WeightFunction::polynomial(0.0), PreconditionError);
  EXPECT_THROW(WeightFunction::exponential(1.0), PreconditionError);
  EXPECT_THROW(WeightFunction::exponential(0.0), PreconditionError);
  EXPECT_THROW(SobolevIndex(std::nan("")), PreconditionError);
}

TEST(SobolevW, LowOrderNorms) {
  EXPECT_NEAR(wm2_norm([](double) { return 1.0; }, [](double) { return 0.0; }, {0, 2}, 0), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(wm2_norm([](double x) { return std::sin(x); }, [](double x) { return std::cos(x); }, {0, pi}, 1),
              std::sqrt(pi), 1e-13);
  EXPECT_NEAR(x12_norm_interval([](double x) { return std::sin(x); }, [](double x) { return std::cos(x); },
                                [](double) { return 1.0; }, {0, pi}),
              std::sqrt(pi) + std::sqrt(pi), 1e-13);
}
