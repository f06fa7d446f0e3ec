#pragma once

#include <complex>
#include <span>
#include <vector>

namespace dnls::fft {

using Complex = std::complex<double>;

// Unnormalized DFT, X[k] = sum_j x[j] exp(-2 pi i j k / n).
std::vector<Complex> forward(std::span<const Complex> x);

// Unnormalized inverse DFT, x[j] = sum_k X[k] exp(+2 pi i j k / n).
std::vector<Complex> backward(std::span<const Complex> x);

// Smallest size >= n of the form 2^a 3^b 5^c (fast for FFTW).
int good_size(int n);

}  // namespace dnls::fft
