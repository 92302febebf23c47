#include "srlw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "srlw/errors.hpp"

namespace srlw {

namespace symbols {

double alpha(double xi) noexcept { return xi / std::sqrt(1.0 + xi * xi); }
double phi(double xi) noexcept { return xi / (1.0 + xi * xi); }
double psi(double xi) noexcept { return xi; }

}  // namespace symbols

namespace {

// Mode number held at FFT-order index i of an array of size n (n even).
long mode_of(std::size_t i, std::size_t n) noexcept {
  return i < n / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(n);
}

std::size_t index_of(long mode, std::size_t n) noexcept {
  return mode >= 0 ? static_cast<std::size_t>(mode)
                   : static_cast<std::size_t>(static_cast<long>(n) + mode);
}

double parity(long n) noexcept { return (n % 2 == 0) ? 1.0 : -1.0; }

// Coefficients -> node samples on an n-point grid starting at -l.
std::vector<double> to_nodes(std::span<const Complex> coeffs) {
  const std::size_t n = coeffs.size();
  std::vector<Complex> work(coeffs.begin(), coeffs.end());
  for (std::size_t i = 0; i < n; ++i) work[i] *= parity(mode_of(i, n));
  detail::fft_backward(work);
  std::vector<double> out(n);
  std::transform(work.begin(), work.end(), out.begin(), [](Complex z) { return z.real(); });
  return out;
}

CoeffVector from_nodes(std::span<const double> samples) {
  const std::size_t n = samples.size();
  CoeffVector work(samples.begin(), samples.end());
  detail::fft_forward(work);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) work[i] *= parity(mode_of(i, n)) * scale;
  return work;
}

std::size_t padded_size(std::size_t m) {
  std::size_t k = 3 * m / 2;
  return k % 2 == 0 ? k : k + 1;
}

}  // namespace

SpectralGrid::SpectralGrid(double half_period, std::size_t mode_count)
    : l_(half_period), m_(mode_count) {
  auto xi = std::make_shared<std::vector<double>>(m_);
  for (std::size_t i = 0; i < m_; ++i)
    (*xi)[i] = static_cast<double>(mode_of(i, m_)) * std::numbers::pi / l_;
  xi_ = std::move(xi);
}

long SpectralGrid::mode(std::size_t i) const noexcept { return mode_of(i, m_); }
std::size_t SpectralGrid::index(long n) const noexcept { return index_of(n, m_); }

double SpectralGrid::node(std::size_t j) const noexcept {
  return -l_ + 2.0 * l_ * static_cast<double>(j) / static_cast<double>(m_);
}

std::vector<double> SpectralGrid::nodes() const {
  std::vector<double> x(m_);
  for (std::size_t j = 0; j < m_; ++j) x[j] = node(j);
  return x;
}

SpectralGrid make_grid(double half_period, std::size_t mode_count) {
  if (!(half_period > 0.0) || !std::isfinite(half_period))
    throw PreconditionError("make_grid: half period must be positive and finite");
  if (mode_count < 4 || mode_count % 2 != 0)
    throw PreconditionError("make_grid: mode count must be even and at least 4");
  return SpectralGrid(half_period, mode_count);
}

StatePair::StatePair(SpectralGrid grid)
    : grid_(std::move(grid)), u_(grid_.size()), v_(grid_.size()) {}

StatePair::StatePair(SpectralGrid grid, CoeffVector u_hat, CoeffVector v_hat)
    : grid_(std::move(grid)), u_(std::move(u_hat)), v_(std::move(v_hat)) {
  if (u_.size() != grid_.size() || v_.size() != grid_.size())
    throw PreconditionError("StatePair: coefficient arrays must match the grid size");
}

StatePair StatePair::from_physical(SpectralGrid grid, std::span<const double> u,
                                   std::span<const double> v) {
  if (u.size() != grid.size() || v.size() != grid.size())
    throw PreconditionError("StatePair::from_physical: sample count must match the grid");
  StatePair s(grid, from_nodes(u), from_nodes(v));
  s.enforce_hermitian();
  return s;
}

std::vector<double> StatePair::u_physical() const { return inverse_transform(grid_, u_); }
std::vector<double> StatePair::v_physical() const { return inverse_transform(grid_, v_); }

double StatePair::hermitian_defect() const noexcept {
  const std::size_t m = grid_.size();
  double worst = 0.0;
  for (const CoeffVector* c : {&u_, &v_}) {
    worst = std::max(worst, std::abs((*c)[0].imag()));
    worst = std::max(worst, std::abs((*c)[m / 2]));
    for (std::size_t n = 1; n < m / 2; ++n)
      worst = std::max(worst, std::abs((*c)[m - n] - std::conj((*c)[n])));
  }
  return worst;
}

void StatePair::enforce_hermitian() noexcept {
  const std::size_t m = grid_.size();
  for (CoeffVector* c : {&u_, &v_}) {
    (*c)[0] = (*c)[0].real();
    (*c)[m / 2] = 0.0;
    for (std::size_t n = 1; n < m / 2; ++n) {
      const Complex avg = 0.5 * ((*c)[n] + std::conj((*c)[m - n]));
      (*c)[n] = avg;
      (*c)[m - n] = std::conj(avg);
    }
  }
}

bool StatePair::all_finite() const noexcept {
  auto finite = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return std::all_of(u_.begin(), u_.end(), finite) && std::all_of(v_.begin(), v_.end(), finite);
}

StatePair& StatePair::operator+=(const StatePair& other) {
  if (!(grid_ == other.grid_)) throw PreconditionError("StatePair: grid mismatch");
  for (std::size_t i = 0; i < u_.size(); ++i) {
    u_[i] += other.u_[i];
    v_[i] += other.v_[i];
  }
  return *this;
}

StatePair& StatePair::operator-=(const StatePair& other) {
  if (!(grid_ == other.grid_)) throw PreconditionError("StatePair: grid mismatch");
  for (std::size_t i = 0; i < u_.size(); ++i) {
    u_[i] -= other.u_[i];
    v_[i] -= other.v_[i];
  }
  return *this;
}

StatePair& StatePair::operator*=(double c) noexcept {
  for (auto& z : u_) z *= c;
  for (auto& z : v_) z *= c;
  return *this;
}

CoeffVector forward_transform(const SpectralGrid& grid, std::span<const double> field) {
  if (field.size() != grid.size())
    throw PreconditionError("forward_transform: sample count must match the grid");
  return from_nodes(field);
}

std::vector<double> inverse_transform(const SpectralGrid& grid, std::span<const Complex> coeffs) {
  if (coeffs.size() != grid.size())
    throw PreconditionError("inverse_transform: coefficient count must match the grid");
  return to_nodes(coeffs);
}

double synthesize_at(const SpectralGrid& grid, std::span<const Complex> coeffs, double x) {
  const std::size_t m = coeffs.size();
  const double theta = std::numbers::pi * x / grid.half_period();
  const Complex step = std::polar(1.0, theta);
  const Complex back = std::conj(step);
  Complex sum = coeffs[0];
  Complex wp = step;
  Complex wn = back;
  for (std::size_t n = 1; n < m / 2; ++n) {
    sum += coeffs[n] * wp + coeffs[m - n] * wn;
    if (n % 64 == 0) {
      wp = std::polar(1.0, theta * static_cast<double>(n + 1));
      wn = std::conj(wp);
    } else {
      wp *= step;
      wn *= back;
    }
  }
  // Unpaired mode contributes as a cosine so the result stays real.
  const double half = static_cast<double>(m / 2);
  sum += coeffs[m / 2].real() * std::cos(theta * half);
  return sum.real();
}

std::vector<double> synthesize(const SpectralGrid& grid, std::span<const Complex> coeffs,
                               std::span<const double> points) {
  std::vector<double> out(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) out[k] = synthesize_at(grid, coeffs, points[k]);
  return out;
}

CoeffVector differentiate(const SpectralGrid& grid, std::span<const Complex> coeffs) {
  CoeffVector out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    out[i] = grid.is_nyquist(i) ? Complex{} : Complex(0.0, grid.frequency(i)) * coeffs[i];
  return out;
}

CoeffVector resample_modes(std::span<const Complex> coeffs, std::size_t new_size) {
  const std::size_t m = coeffs.size();
  CoeffVector out(new_size);
  const long keep = static_cast<long>(std::min(m, new_size) / 2);
  for (long n = -keep + 1; n < keep; ++n) out[index_of(n, new_size)] = coeffs[index_of(n, m)];
  return out;
}

CoeffVector dealiased_product(const SpectralGrid& grid, std::span<const Complex> f,
                              std::span<const Complex> g) {
  const std::size_t m = grid.size();
  const std::size_t k = padded_size(m);
  auto fp = to_nodes(resample_modes(f, k));
  auto gp = to_nodes(resample_modes(g, k));
  for (std::size_t j = 0; j < k; ++j) fp[j] *= gp[j];
  return resample_modes(from_nodes(fp), m);
}

CoeffVector full_product(const SpectralGrid& grid, std::span<const Complex> f,
                         std::span<const Complex> g) {
  const std::size_t k = 2 * grid.size();
  auto fp = to_nodes(resample_modes(f, k));
  auto gp = to_nodes(resample_modes(g, k));
  for (std::size_t j = 0; j < k; ++j) fp[j] *= gp[j];
  return from_nodes(fp);
}

StatePair linear_propagate(const StatePair& state, double t) {
  const SpectralGrid& grid = state.grid();
  StatePair out(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double xi = grid.frequency(i);
    const double r = std::sqrt(1.0 + xi * xi);
    const double a = symbols::alpha(xi) * t;
    const double c = std::cos(a);
    const double s = std::sin(a);
    const Complex u = state.u_hat()[i];
    const Complex v = state.v_hat()[i];
    out.u_hat()[i] = c * u + Complex(0.0, s / r) * v;
    out.v_hat()[i] = Complex(0.0, r * s) * u + c * v;
  }
  return out;
}

StatePair nonlinear_term(const StatePair& state) {
  const SpectralGrid& grid = state.grid();
  CoeffVector sq = dealiased_product(grid, state.u_hat(), state.u_hat());
  for (std::size_t i = 0; i < grid.size(); ++i) sq[i] *= 0.5 * symbols::phi(grid.frequency(i));
  return StatePair(grid, std::move(sq), CoeffVector(grid.size()));
}

}  // namespace srlw
