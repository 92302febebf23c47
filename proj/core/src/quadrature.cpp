#include "srlw/quadrature.hpp"

#include "srlw/errors.hpp"

namespace srlw::quad {

std::vector<double> simpson_weights(std::size_t n, double h) {
  std::vector<double> w(n, 0.0);
  if (n < 2) return w;
  if (n == 2) {
    w[0] = w[1] = 0.5 * h;
    return w;
  }
  const std::size_t intervals = n - 1;
  // Simpson pairs cover [0, even_end]; a trailing odd block uses the 3/8 rule.
  const std::size_t even_end = intervals % 2 == 0 ? intervals : intervals - 3;
  for (std::size_t i = 0; i + 2 <= even_end; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  if (even_end != intervals) {
    const std::size_t i = even_end;
    w[i] += 3.0 * h / 8.0;
    w[i + 1] += 9.0 * h / 8.0;
    w[i + 2] += 9.0 * h / 8.0;
    w[i + 3] += 3.0 * h / 8.0;
  }
  return w;
}

double simpson(std::span<const double> samples, double h) {
  const auto w = simpson_weights(samples.size(), h);
  double total = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) total += w[i] * samples[i];
  return total;
}

}  // namespace srlw::quad
