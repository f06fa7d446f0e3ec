#pragma once

// Reference computations that do not share code paths with the library:
// closed forms, naive enumeration and direct physical-space sums.

#include <complex>
#include <vector>

#include "dnls/spectral_field.hpp"

namespace dnls::checks {

// A e^{i(n x + (n|A|^2 - n^2) t)}
SpectralField plane_wave_solution(int cutoff, Complex amplitude, int n, double t);

// Values u(x_j) on x_j = 2 pi j / G by direct summation of the series.
std::vector<Complex> direct_samples(const SpectralField& f, int gridsize);
// Coefficients of a band-limited function from samples by a direct DFT.
SpectralField direct_coefficients(const std::vector<Complex>& samples, int cutoff);

// i d/dx (|u|^2 u) via direct sums on a grid of 8N+1 points.
SpectralField direct_dnls_nonlinearity(const SpectralField& u);

// T(u1,u2,u3) at full output band by enumerating the restricted lattice sum
// and its diagonal term; the exact sum is divided by 2 pi once.
SpectralField enumerate_T(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3);

// Ordered pairs (d, r/d) by trial division.
long long naive_divisor_count(long long r);
// Ordered pairs with |d - r/d| <= r^{1/6}/3, comparing (3|d - r/d|)^6 with r in long double.
int naive_refined_count(long long r);

// sum_{1 <= |xi| <= N} <xi>^{-(2s + 1/2)} ln^{-2p} <xi>, forward summation in long double.
long double naive_counterexample_sum(long long n, double s_decay, double log_power);

// Both sides of the modulation identity in long double.
struct ResonanceSides {
  long double lhs = 0.0L, rhs = 0.0L;
};
ResonanceSides resonance_sides(long long xi, long long xi1, long long xi2, long double tau,
                               long double tau1, long double tau2);

}  // namespace dnls::checks
