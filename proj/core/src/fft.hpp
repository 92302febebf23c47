#pragma once

// Thin wrapper over FFTW complex-to-complex plans. Plans are created once per
// size under a mutex and executed through the new-array interface, so the
// functions below are safe to call concurrently.

#include <complex>
#include <span>

namespace srlw::detail {

/// In-place X_k = sum_j x_j exp(-2 pi i j k / n).
void fft_forward(std::span<std::complex<double>> data);
/// In-place x_j = sum_k X_k exp(+2 pi i j k / n), unnormalised.
void fft_backward(std::span<std::complex<double>> data);

}  // namespace srlw::detail
