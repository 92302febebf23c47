#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "srlw/errors.hpp"
#include "srlw/illposedness.hpp"
#include "srlw/quadrature.hpp"

using namespace srlw;

namespace {

// Relative error against the natural scale of a J value on [0, t].
double j_error(double a, double b, double t) { return std::abs(a - b) / std::max({std::abs(t), std::abs(b), 1e-300}); }

bool in_band(double x, double n) { return std::abs(std::abs(x) - n) <= 1.0; }

// A(xi) from its defining double integral: eta by Gauss-Kronrod on every
// cell between candidate breakpoints, J by quadrature in time.
double a_oracle(double n, double xi, double t) {
  std::vector<double> cuts{-n - 1, -n + 1, n - 1, n + 1, xi - n - 1, xi - n + 1, xi + n - 1, xi + n + 1};
  std::sort(cuts.begin(), cuts.end());
  double p = 0.0, q = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    const double mid = 0.5 * (lo + hi);
    if (hi <= lo || !in_band(mid, n) || !in_band(xi - mid, n)) continue;
    p += quad::adaptive([&](double eta) { auto j = j_oracle(xi, eta, t); return j.j[0] - j.j[1]; }, lo, hi, 1e-11).value;
    q += quad::adaptive([&](double eta) { auto j = j_oracle(xi, eta, t); return j.j[2] - j.j[3]; }, lo, hi, 1e-11).value;
  }
  const double a = symbols::alpha(xi) * t;
  return symbols::phi(xi) * (std::cos(a) * p + std::sin(a) * q);
}

}  // namespace

TEST(Counterexample, Preconditions) {
  EXPECT_THROW(build_counterexample(1.5, Flavor::line), PreconditionError);
  EXPECT_THROW(build_counterexample(10.5, Flavor::periodic), PreconditionError);
  EXPECT_NO_THROW(build_counterexample(2.0, Flavor::line));
}

TEST(Counterexample, SpectrumShape) {
  const auto d = build_counterexample(10.0, Flavor::line);
  for (double x = -12.0; x <= 12.0; x += 0.37) {
    EXPECT_EQ(d.phi_hat(-x), d.phi_hat(x));
    if (d.phi_hat(x) != 0.0) EXPECT_NEAR(d.psi_hat(x) / d.phi_hat(x), std::sqrt(1.0 + x * x), 1e-14);
  }
  EXPECT_EQ(d.phi_hat(0.0), 0.0);
  EXPECT_NEAR(hs_norm_line(d.phi_spectrum(), SobolevIndex(0.0)).value, 2.0, 1e-12);
}

TEST(Counterexample, NegativeIndexNormDecays) {
  const double r = counterexample_norm(build_counterexample(40.0, Flavor::line), SobolevIndex(-0.5)) /
                   counterexample_norm(build_counterexample(10.0, Flavor::line), SobolevIndex(-0.5));
  EXPECT_NEAR(r, 0.5, 0.025);
  double prev = 1e300;
  for (double n = 2.0; n <= 600.0; n *= 1.7) {
    const double v = counterexample_norm(build_counterexample(n, Flavor::line), SobolevIndex(-0.5));
    EXPECT_LT(v, prev) << n;
    prev = v;
  }
}

TEST(Counterexample, PeriodicBand) {
  const auto d = build_counterexample(8.0, Flavor::periodic);
  EXPECT_EQ(d.band(), (std::vector<long>{-9, -8, -7, 7, 8, 9}));
  EXPECT_EQ(d.a(0), 0.0);
  EXPECT_EQ(d.a(7), 1.0);
  EXPECT_NEAR(d.b(-9), std::sqrt(65.0), 1e-14);
}

TEST(Theta, Examples) {
  for (double eta : {-3.0, 0.5, 100.0}) EXPECT_NEAR(theta(1, 0.0, eta), 0.0, 1e-16);
  const double n = 500.0, xi = 0.3;
  // eta = N, xi - eta = -N exactly when xi = 0; shift eta so xi - eta = -N.
  EXPECT_NEAR(theta(3, xi, xi + n), symbols::alpha(xi) + symbols::alpha(n) - symbols::alpha(xi + n), 1e-15);
  EXPECT_NEAR(theta(3, 0.0, n), 0.0, 1e-16);
  EXPECT_LT(std::abs(theta(3, 0.1, 100.0)), 0.2);
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> d(-50, 50);
  for (int k = 0; k < 100; ++k) {
    const double x = d(rng), e = d(rng);
    EXPECT_NEAR(theta(2, x, e), theta(4, x, x - e), 1e-15);
  }
}

TEST(Resonance, Degenerate) {
  const auto z = j_closed(3.0, -2.0, 0.0);
  for (double j : z.j) EXPECT_EQ(j, 0.0);
  const auto o = j_closed(0.0, 0.0, 1.7);
  EXPECT_NEAR(o.j[0], 1.7, 1e-15);
  EXPECT_EQ(o.j[1], 0.0);
  EXPECT_EQ(o.j[2], 0.0);
  EXPECT_EQ(o.j[3], 0.0);
  EXPECT_NEAR(j_oracle(0.0, 0.0, 1.7).j[0], 1.7, 1e-14);
}

TEST(Resonance, ClosedFormMatchesQuadrature) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> x(-300, 300), tt(0, 2);
  for (int k = 0; k < 300; ++k) {
    const double xi = x(rng), eta = x(rng), t = tt(rng);
    const auto c = j_closed(xi, eta, t);
    const auto o = j_oracle(xi, eta, t);
    for (int i = 0; i < 4; ++i) EXPECT_LT(j_error(c.j[i], o.j[i], t), 1e-10) << xi << " " << eta << " " << t;
  }
}

TEST(Resonance, NearResonantSeriesBranch) {
  // theta_3 = 0 exactly at (0, N); the series branch must agree with quadrature.
  for (double eps : {0.0, 1e-9, 1e-6, 1e-4}) {
    const auto c = j_closed(eps, 40.0, 1.3);
    const auto o = j_oracle(eps, 40.0, 1.3);
    for (int i = 0; i < 4; ++i) EXPECT_LT(j_error(c.j[i], o.j[i], 1.3), 1e-12);
  }
  // Either side of the switch threshold.
  for (double th : {0.99e-4, 1.01e-4}) {
    EXPECT_NEAR(sinc_integral(th, 1.0), std::sin(th) / th, 2e-16);
    // Half-angle form avoids the cancellation in cos(th) - 1.
    EXPECT_NEAR(cosc_integral(th, 1.0), -2.0 * std::pow(std::sin(0.5 * th), 2) / th, 1e-14 * th);
  }
}

TEST(Resonance, OddnessOfSineMoment) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> x(-30, 30), tt(0, 2);
  for (int k = 0; k < 50; ++k) {
    const double xi = x(rng), eta = x(rng), t = tt(rng);
    EXPECT_NEAR(j_closed(-xi, -eta, t).j[2], -j_closed(xi, eta, t).j[2], 1e-14);
    EXPECT_NEAR(j_oracle(-xi, -eta, t).j[2], -j_oracle(xi, eta, t).j[2], 1e-13);
  }
}

TEST(Resonance, ReducedCombinations) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> x(-300, 300), tt(0, 2);
  for (int k = 0; k < 200; ++k) {
    const double xi = x(rng), eta = x(rng), t = tt(rng);
    const auto c = j_closed(xi, eta, t);
    EXPECT_LT(j_error(2.0 * (c.j[0] - c.j[1]), reduced_j12(xi, eta, t), t), 1e-12);
    EXPECT_LT(j_error(-2.0 * (c.j[2] - c.j[3]), reduced_j34(xi, eta, t), t), 1e-12);
  }
}

TEST(InteractionSet, CrossMeasure) {
  for (double xi = -2.0; xi <= 2.0; xi += 0.125) {
    for (double n : {5.0, 50.0}) {
      double cross = 0.0;
      int count = 0;
      for (const auto& p : interaction_set(xi, n))
        if (p.cross()) {
          EXPECT_NEAR(p.length(), 2.0 - std::abs(xi), 1e-12);
          cross += p.length();
          ++count;
        }
      EXPECT_EQ(count, std::abs(xi) < 2.0 ? 2 : 0);
      EXPECT_NEAR(cross_band_measure(xi, n), 2.0 * (2.0 - std::abs(xi)), 1e-12);
      if (std::abs(xi) <= 1.0) EXPECT_GE(cross_band_measure(xi, n) / 2.0, 1.0);
    }
  }
  EXPECT_TRUE(interaction_set(2.0 * 10.0 + 2.5, 10.0).empty());
  EXPECT_TRUE(interaction_set(5.0, 10.0).empty());
}

TEST(SecondIterate, VanishingCases) {
  const auto d = build_counterexample(20.0, Flavor::line);
  for (double xi : {-1.0, 0.3, 40.5}) {
    const auto ab = second_iterate_spectrum(d, 0.0, xi);
    EXPECT_EQ(std::abs(ab.a), 0.0);
    EXPECT_EQ(std::abs(ab.b), 0.0);
  }
  const auto z = second_iterate_spectrum(d, 0.5, 0.0);
  EXPECT_EQ(std::abs(z.a), 0.0);
  EXPECT_EQ(std::abs(z.b), 0.0);
  EXPECT_EQ(second_iterate_norm(d, 0.0, SobolevIndex(-0.5)).value, 0.0);
}

TEST(SecondIterate, MatchesDoubleQuadrature) {
  const auto d = build_counterexample(50.0, Flavor::line);
  const double t = 0.5;
  for (double xi : {0.5, -1.3, 99.2}) {
    const auto ab = second_iterate_spectrum(d, t, xi);
    const double ref = a_oracle(50.0, xi, t);
    EXPECT_NEAR(ab.a.real(), ref, 1e-9 * std::max(1.0, std::abs(ref))) << xi;
  }
  // Near-resonant size: J1 - J2 is close to t on both cross pieces.
  const auto ab = second_iterate_spectrum(d, t, 0.5);
  const double guess = symbols::phi(0.5) * t * cross_band_measure(0.5, 50.0);
  EXPECT_NEAR(std::abs(ab.a), guess, 0.1 * guess);
}

TEST(SecondIterate, RealOutputSymmetry) {
  const auto d = build_counterexample(30.0, Flavor::line);
  for (double xi : {0.2, 1.1, 1.9, 59.0, 61.5}) {
    const auto p = second_iterate_spectrum(d, 0.7, xi);
    const auto m = second_iterate_spectrum(d, 0.7, -xi);
    const Complex mi(0.0, -1.0);
    EXPECT_NEAR(std::abs(mi * m.a - std::conj(mi * p.a)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(mi * m.b - std::conj(mi * p.b)), 0.0, 1e-10);
    EXPECT_EQ(p.a.imag(), 0.0);
    EXPECT_EQ(p.b.real(), 0.0);
  }
}

TEST(SecondIterate, NormStaysOrderOne) {
  std::vector<double> values;
  for (double n : {32.0, 64.0, 128.0, 256.0})
    values.push_back(second_iterate_norm(build_counterexample(n, Flavor::line), 0.5, SobolevIndex(-0.25)).value);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  EXPECT_GT(*lo, 0.1);
  EXPECT_LT(*hi / *lo, 2.0);
}

TEST(SecondIterate, PeriodicFlavour) {
  const auto d = build_counterexample(16.0, Flavor::periodic);
  EXPECT_THROW(second_iterate_spectrum(d, 0.5, 0.5), PreconditionError);
  const auto ab = second_iterate_spectrum(d, 0.5, 1.0);
  EXPECT_GT(std::abs(ab.a), 0.0);
  EXPECT_GT(second_iterate_norm(d, 0.5, SobolevIndex(-0.5)).value, 0.0);
}

TEST(Inflation, FlagOnLongSweep) {
  InflationConfig c;
  c.s = -0.5;
  c.n_list = {32, 64, 128, 256, 512, 1024, 2048, 4096};
  const auto r = inflation_experiment(c);
  EXPECT_EQ(r.row_count(), 8u);
  EXPECT_TRUE(r.has_flag("INFLATION"));
  const auto in = r.column_values("input_norm_Xs");
  for (std::size_t i = 1; i < in.size(); ++i) EXPECT_NEAR(in[i] / in[i - 1], std::pow(2.0, -0.5), 0.01);
}

TEST(Inflation, NoFlagForPositiveIndex) {
  InflationConfig c;
  c.s = 0.5;
  c.n_list = {32, 64, 128, 256, 512};
  EXPECT_FALSE(inflation_experiment(c).has_flag("INFLATION"));
}

TEST(Inflation, EmptySweep) {
  InflationConfig c;
  const auto r = inflation_experiment(c);
  EXPECT_EQ(r.row_count(), 0u);
  EXPECT_TRUE(r.flags().empty());
  EXPECT_EQ(r.to_csv().substr(r.to_csv().find('\n') + 1), "N,s,t,input_norm_Xs,iterate_norm_Xs,ratio\n");
}
