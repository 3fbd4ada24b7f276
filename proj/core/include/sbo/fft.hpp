#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace sbo {

using cplx = std::complex<double>;

/// Normalized Fourier coefficients in FFT order: f_j = sum_k c_k e^{2 pi i j k / n}.
using Spectrum = std::vector<cplx>;

namespace fft {

/// c_k = (1/n) sum_j f_j e^{-2 pi i j k / n}
Spectrum forward(std::span<const cplx> values);
/// f_j = sum_k c_k e^{2 pi i j k / n}
std::vector<cplx> inverse(std::span<const cplx> coeffs);

/// Row-major rows x cols array, same normalization as the 1-D pair.
std::vector<cplx> forward_2d(std::span<const cplx> values, std::size_t rows, std::size_t cols);
std::vector<cplx> inverse_2d(std::span<const cplx> coeffs, std::size_t rows, std::size_t cols);

/// Zero-pads (or truncates) a spectrum in FFT order to a new length,
/// keeping the modes representable on both. The Nyquist mode of the
/// shorter spectrum is dropped.
Spectrum resize(std::span<const cplx> coeffs, std::size_t new_size);

}  // namespace fft
}  // namespace sbo
