#pragma once

// Periodic spectral representation of the SRLW system
//
//   i u_t = phi(D)(u^2/2 - v),   i v_t = -psi(D) u,
//
// on (-l, l) with fields expanded as f(x) = sum_n f_n exp(i n pi x / l).
// Coefficient arrays are stored in FFT order: index i holds mode n = i for
// i < M/2 and n = i - M for i >= M/2. The unpaired mode n = -M/2 is kept by the
// raw transforms but forced to zero inside a StatePair.

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace srlw {

using Complex = std::complex<double>;
using CoeffVector = std::vector<Complex>;

namespace symbols {

/// Dispersion frequency of the linear group, xi / sqrt(1 + xi^2).
double alpha(double xi) noexcept;
/// Multiplier of the u-equation, xi / (1 + xi^2).
double phi(double xi) noexcept;
/// Multiplier of the v-equation, xi.
double psi(double xi) noexcept;

}  // namespace symbols

/// Uniform periodic grid of period 2l carrying M Fourier modes.
class SpectralGrid {
 public:
  SpectralGrid(double half_period, std::size_t mode_count);

  double half_period() const noexcept { return l_; }
  std::size_t size() const noexcept { return m_; }
  double spacing() const noexcept { return 2.0 * l_ / static_cast<double>(m_); }

  /// Mode number stored at FFT-order index i.
  long mode(std::size_t i) const noexcept;
  /// FFT-order index of mode n, which must satisfy -M/2 <= n < M/2.
  std::size_t index(long n) const noexcept;
  /// Angular frequency n pi / l at FFT-order index i.
  double frequency(std::size_t i) const noexcept { return (*xi_)[i]; }
  std::span<const double> frequencies() const noexcept { return *xi_; }
  /// Physical node x_j = -l + 2 l j / M.
  double node(std::size_t j) const noexcept;
  std::vector<double> nodes() const;

  bool is_nyquist(std::size_t i) const noexcept { return i == m_ / 2; }

  friend bool operator==(const SpectralGrid& a, const SpectralGrid& b) noexcept {
    return a.l_ == b.l_ && a.m_ == b.m_;
  }

 private:
  double l_;
  std::size_t m_;
  std::shared_ptr<const std::vector<double>> xi_;
};

/// Validating factory: l > 0, M even and at least 4.
SpectralGrid make_grid(double half_period, std::size_t mode_count);

/// The pair (u, v) of real fields, held as Hermitian coefficient arrays.
class StatePair {
 public:
  explicit StatePair(SpectralGrid grid);
  StatePair(SpectralGrid grid, CoeffVector u_hat, CoeffVector v_hat);

  /// Samples physical fields at the grid nodes and transforms them.
  static StatePair from_physical(SpectralGrid grid, std::span<const double> u,
                                 std::span<const double> v);

  const SpectralGrid& grid() const noexcept { return grid_; }
  const CoeffVector& u_hat() const noexcept { return u_; }
  const CoeffVector& v_hat() const noexcept { return v_; }
  CoeffVector& u_hat() noexcept { return u_; }
  CoeffVector& v_hat() noexcept { return v_; }

  std::vector<double> u_physical() const;
  std::vector<double> v_physical() const;

  /// Largest violation of f_{-n} = conj(f_n) over both components.
  double hermitian_defect() const noexcept;
  /// Symmetrises every mode pair and zeroes the unpaired mode.
  void enforce_hermitian() noexcept;
  bool all_finite() const noexcept;

  StatePair& operator+=(const StatePair& other);
  StatePair& operator-=(const StatePair& other);
  StatePair& operator*=(double c) noexcept;
  friend StatePair operator+(StatePair a, const StatePair& b) { return a += b; }
  friend StatePair operator-(StatePair a, const StatePair& b) { return a -= b; }
  friend StatePair operator*(double c, StatePair a) { return a *= c; }

 private:
  SpectralGrid grid_;
  CoeffVector u_;
  CoeffVector v_;
};

/// Forward transform of samples at the grid nodes to coefficients f_n.
CoeffVector forward_transform(const SpectralGrid& grid, std::span<const double> field);
/// Inverse transform: coefficients to real samples at the grid nodes.
std::vector<double> inverse_transform(const SpectralGrid& grid, std::span<const Complex> coeffs);

/// Evaluates Re sum_n c_n exp(i n pi x / l) at arbitrary points.
std::vector<double> synthesize(const SpectralGrid& grid, std::span<const Complex> coeffs,
                               std::span<const double> points);
double synthesize_at(const SpectralGrid& grid, std::span<const Complex> coeffs, double x);

/// Coefficients of the x-derivative (multiplication by i xi_n; unpaired mode dropped).
CoeffVector differentiate(const SpectralGrid& grid, std::span<const Complex> coeffs);

/// Re-embeds coefficients on a grid with a different mode count (zero padding
/// or truncation), preserving the mode numbers that both grids represent.
CoeffVector resample_modes(std::span<const Complex> coeffs, std::size_t new_size);

/// Exact coefficients of the product f g for |n| < M/2, computed with 3/2 zero
/// padding (equivalent to the 2/3 de-aliasing rule). Unpaired mode is zero.
CoeffVector dealiased_product(const SpectralGrid& grid, std::span<const Complex> f,
                              std::span<const Complex> g);

/// Exact coefficients of f g on the doubled grid (2M modes, no truncation).
CoeffVector full_product(const SpectralGrid& grid, std::span<const Complex> f,
                         std::span<const Complex> g);

/// Exact linear group S(t) applied mode by mode.
StatePair linear_propagate(const StatePair& state, double t);

/// G(u, v) = (phi(D)(u^2/2), 0) with de-aliased product.
StatePair nonlinear_term(const StatePair& state);

}  // namespace srlw
