#include "srlw/initial_data.hpp"

#include <cmath>
#include <numbers>

#include "srlw/errors.hpp"

namespace srlw {

namespace {
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
}

FieldProfile gaussian(double a, double w) {
  return {"gaussian",
          [a, w](double x) { return a * std::exp(-x * x / (w * w)); },
          [a, w](double x) { return -2.0 * a * x / (w * w) * std::exp(-x * x / (w * w)); },
          [a, w](double k) { return Complex(a * w / std::sqrt(2.0) * std::exp(-w * w * k * k / 4.0)); }};
}

FieldProfile gaussian_derivative(double a, double w) {
  const double w2 = w * w;
  return {"gaussian-derivative",
          [a, w2](double x) { return -2.0 * a * x / w2 * std::exp(-x * x / w2); },
          [a, w2](double x) {
            return a * (-2.0 / w2 + 4.0 * x * x / (w2 * w2)) * std::exp(-x * x / w2);
          },
          [a, w](double k) {
            return Complex(0.0, k) * (a * w / std::sqrt(2.0) * std::exp(-w * w * k * k / 4.0));
          }};
}

FieldProfile sech2(double a, double w) {
  return {"sech2",
          [a, w](double x) {
            const double c = 1.0 / std::cosh(x / w);
            return a * c * c;
          },
          [a, w](double x) {
            const double c = 1.0 / std::cosh(x / w);
            return -2.0 * a / w * c * c * std::tanh(x / w);
          },
          [a, w](double k) {
            const double z = std::numbers::pi * w * k / 2.0;
            const double ratio = std::abs(z) < 1e-8 ? 1.0 : z / std::sinh(z);
            return Complex(kInvSqrt2Pi * a * 2.0 * w * ratio);
          }};
}

FieldProfile cosine_mode(double a, double k) {
  return {"cosine-mode",
          [a, k](double x) { return a * std::cos(k * x); },
          [a, k](double x) { return -a * k * std::sin(k * x); },
          {}};
}

FieldProfile zero_profile() {
  return {"zero", [](double) { return 0.0; }, [](double) { return 0.0; },
          [](double) { return Complex{}; }};
}

FieldProfile profile_by_name(std::string_view name, double amplitude, double width) {
  if (name == "gaussian") return gaussian(amplitude, width);
  if (name == "gaussian-derivative") return gaussian_derivative(amplitude, width);
  if (name == "sech2") return sech2(amplitude, width);
  if (name == "cosine-mode") return cosine_mode(amplitude, width);
  if (name == "zero") return zero_profile();
  throw PreconditionError("unknown initial profile: " + std::string(name));
}

StatePair sample_state(const SpectralGrid& grid, const FieldProfile& u, const FieldProfile& v) {
  std::vector<double> us(grid.size()), vs(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.node(j);
    us[j] = u.value(x);
    vs[j] = v.value(x);
  }
  return StatePair::from_physical(grid, us, vs);
}

}  // namespace srlw
