#pragma once

// Built-in initial data with closed-form derivatives and, where one exists,
// the line Fourier transform in the unitary angular convention
//   f^(w) = (2 pi)^{-1/2} int f(x) e^{-i x w} dx.

#include <functional>
#include <string>
#include <string_view>

#include "srlw/spectral.hpp"

namespace srlw {

struct FieldProfile {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  /// Empty for profiles without a line transform (cosine-mode).
  std::function<Complex(double)> transform;
};

/// A exp(-x^2 / w^2).
FieldProfile gaussian(double amplitude = 1.0, double width = 1.0);
/// d/dx of gaussian(A, w): -2 A x / w^2 exp(-x^2 / w^2).
FieldProfile gaussian_derivative(double amplitude = 1.0, double width = 1.0);
/// A sech^2(x / w).
FieldProfile sech2(double amplitude = 1.0, double width = 1.0);
/// A cos(k x); periodic only.
FieldProfile cosine_mode(double amplitude, double wavenumber);
FieldProfile zero_profile();

/// Looks up "gaussian", "gaussian-derivative", "sech2", "cosine-mode" or "zero".
/// For cosine-mode `width` is read as the angular wavenumber.
FieldProfile profile_by_name(std::string_view name, double amplitude, double width);

/// Samples both profiles at the grid nodes.
StatePair sample_state(const SpectralGrid& grid, const FieldProfile& u, const FieldProfile& v);

}  // namespace srlw
