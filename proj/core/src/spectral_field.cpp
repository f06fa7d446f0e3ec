#include "dnls/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dnls/error.hpp"
#include "dnls/fft.hpp"

namespace dnls {

SpectralField::SpectralField(int cutoff) : cutoff_(cutoff) {
  require(cutoff >= 0, "cutoff must be nonnegative");
  coeffs_.assign(2 * cutoff + 1, Complex{});
}

SpectralField::SpectralField(int cutoff, std::vector<Complex> coefficients)
    : cutoff_(cutoff), coeffs_(std::move(coefficients)) {
  require(cutoff >= 0, "cutoff must be nonnegative");
  require(coeffs_.size() == static_cast<std::size_t>(2 * cutoff + 1),
          "coefficient count must be 2N+1");
}

SpectralField SpectralField::plane_wave(int cutoff, Complex amplitude, int n) {
  require(std::abs(n) <= cutoff, "plane-wave frequency outside the band");
  SpectralField f(cutoff);
  f.at(n) = kSqrtTwoPi * amplitude;
  return f;
}

Complex& SpectralField::at(int xi) {
  require(xi >= -cutoff_ && xi <= cutoff_,
          "frequency " + std::to_string(xi) + " outside band of cutoff " + std::to_string(cutoff_));
  return coeffs_[xi + cutoff_];
}

SpectralField SpectralField::conj() const {
  SpectralField out(cutoff_);
  for (int xi = -cutoff_; xi <= cutoff_; ++xi) out.coeffs_[xi + cutoff_] = std::conj((*this)[-xi]);
  return out;
}

SpectralField SpectralField::reflected() const {
  SpectralField out(cutoff_);
  for (int xi = -cutoff_; xi <= cutoff_; ++xi) out.coeffs_[xi + cutoff_] = (*this)[-xi];
  return out;
}

SpectralField SpectralField::resized(int cutoff) const {
  SpectralField out(cutoff);
  const int m = std::min(cutoff, cutoff_);
  for (int xi = -m; xi <= m; ++xi) out.coeffs_[xi + cutoff] = (*this)[xi];
  return out;
}

double SpectralField::tail_l2(int n) const {
  double sum = 0.0;
  for (int xi = -cutoff_; xi <= cutoff_; ++xi)
    if (std::abs(xi) > n) sum += std::norm(coeffs_[xi + cutoff_]);
  return std::sqrt(sum);
}

double SpectralField::l2_norm() const {
  double sum = 0.0;
  for (const auto& c : coeffs_) sum += std::norm(c);
  return std::sqrt(sum);
}

bool SpectralField::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  if (other.cutoff_ > cutoff_) *this = resized(other.cutoff_);
  for (int xi = -other.cutoff_; xi <= other.cutoff_; ++xi)
    coeffs_[xi + cutoff_] += other.coeffs_[xi + other.cutoff_];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  if (other.cutoff_ > cutoff_) *this = resized(other.cutoff_);
  for (int xi = -other.cutoff_; xi <= other.cutoff_; ++xi)
    coeffs_[xi + cutoff_] -= other.coeffs_[xi + other.cutoff_];
  return *this;
}

SpectralField& SpectralField::operator*=(Complex scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

SpectralField from_physical(std::span<const Complex> samples, int cutoff) {
  const int g = static_cast<int>(samples.size());
  require(cutoff >= 0, "cutoff must be nonnegative");
  require(g >= 2 * cutoff + 1, "grid of " + std::to_string(g) + " points is too small for cutoff " +
                                   std::to_string(cutoff) + " (need >= 2N+1)");
  const auto dft = fft::forward(samples);
  const double scale = kSqrtTwoPi / g;
  SpectralField out(cutoff);
  for (int xi = -cutoff; xi <= cutoff; ++xi) out.at(xi) = scale * dft[(xi + g) % g];
  return out;
}

std::vector<Complex> to_physical(const SpectralField& f, int gridsize) {
  const int n = f.cutoff();
  require(gridsize >= 2 * n + 1, "grid of " + std::to_string(gridsize) +
                                     " points is too small for cutoff " + std::to_string(n) +
                                     " (need >= 2N+1)");
  std::vector<Complex> spectrum(gridsize);
  for (int xi = -n; xi <= n; ++xi) spectrum[(xi + gridsize) % gridsize] = f[xi];
  auto samples = fft::backward(spectrum);
  const double scale = 1.0 / kSqrtTwoPi;
  for (auto& s : samples) s *= scale;
  return samples;
}

SpectralField derivative(const SpectralField& f) {
  SpectralField out(f.cutoff());
  for (int xi = -f.cutoff(); xi <= f.cutoff(); ++xi) out.at(xi) = Complex(0.0, xi) * f[xi];
  return out;
}

Complex mean_value(const SpectralField& f) { return f[0] / kSqrtTwoPi; }

double l2_distance(const SpectralField& a, const SpectralField& b) { return (a - b).l2_norm(); }

}  // namespace dnls
