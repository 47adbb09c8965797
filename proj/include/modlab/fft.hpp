#pragma once

#include <complex>
#include <vector>

namespace modlab {

/// In-place radix-2 FFT; size must be a power of two.
void fft(std::vector<std::complex<double>>& a, bool inverse);

/// Linear convolution of two complex sequences (zero-padded FFT).
std::vector<std::complex<double>> fft_convolve(
    const std::vector<std::complex<double>>& a,
    const std::vector<std::complex<double>>& b);

/// Chirp-z transform out[k] = sum_j x[j] e^{-i w j k} for k = 0..K-1,
/// evaluated by Bluestein's identity through one linear convolution. Lets us
/// sample a Fourier integral on a frequency lattice whose spacing is not tied
/// to 2*pi/(N dt).
std::vector<std::complex<double>> czt(const std::vector<std::complex<double>>& x,
                                      double w, size_t K);

}  // namespace modlab
