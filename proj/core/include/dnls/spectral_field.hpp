#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace dnls {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline const double kSqrtTwoPi = std::sqrt(kTwoPi);

// Japanese bracket <x> = (1 + x^2)^{1/2}.
inline double bracket(double x) { return std::sqrt(1.0 + x * x); }

// A band-limited periodic function on [0, 2 pi), stored as Fourier
// coefficients u^(xi) for xi in {-N, ..., N} with the unitary convention
//   u^(xi) = (2 pi)^{-1/2} int_0^{2 pi} u(x) e^{-i x xi} dx,
//   u(x)   = (2 pi)^{-1/2} sum_xi u^(xi) e^{i x xi}.
// Frequencies outside the band are zero.
class SpectralField {
 public:
  SpectralField() : SpectralField(0) {}
  explicit SpectralField(int cutoff);
  SpectralField(int cutoff, std::vector<Complex> coefficients);

  // A e^{i n x}, i.e. u^(n) = sqrt(2 pi) A.
  static SpectralField plane_wave(int cutoff, Complex amplitude, int n);

  int cutoff() const { return cutoff_; }
  std::size_t size() const { return coeffs_.size(); }

  // Coefficient at frequency xi; zero outside the band.
  Complex operator[](int xi) const {
    return (xi < -cutoff_ || xi > cutoff_) ? Complex{} : coeffs_[xi + cutoff_];
  }
  // Mutable access; throws outside the band.
  Complex& at(int xi);

  std::span<const Complex> coefficients() const { return coeffs_; }
  std::span<Complex> coefficients() { return coeffs_; }

  // Coefficients of the complex conjugate function: conj(u)^(xi) = conj(u^(-xi)).
  SpectralField conj() const;
  // Coefficients of x -> u(-x).
  SpectralField reflected() const;

  // Same function viewed with a different cutoff (zero padding or truncation).
  SpectralField resized(int cutoff) const;
  // l2 mass of the coefficients with |xi| > n.
  double tail_l2(int n) const;

  // L2 norm on the torus, equal to the l2 norm of the coefficients.
  double l2_norm() const;
  bool is_zero() const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(Complex scale);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(SpectralField a, Complex s) { return a *= s; }
  friend SpectralField operator*(Complex s, SpectralField a) { return a *= s; }

 private:
  int cutoff_;
  std::vector<Complex> coeffs_;
};

// Samples on the uniform grid x_j = 2 pi j / G, G >= 2N+1.
SpectralField from_physical(std::span<const Complex> samples, int cutoff);
std::vector<Complex> to_physical(const SpectralField& f, int gridsize);

// Exact d/dx: multiplies u^(xi) by i xi.
SpectralField derivative(const SpectralField& f);

// Mean value (1/2pi) int u dx = (2 pi)^{-1/2} u^(0).
Complex mean_value(const SpectralField& f);

// L2 distance; fields may have different cutoffs.
double l2_distance(const SpectralField& a, const SpectralField& b);

}  // namespace dnls
