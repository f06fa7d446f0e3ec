#include "dnls_checks/oracles.hpp"

#include <cmath>
#include <cstdlib>

namespace dnls::checks {

SpectralField plane_wave_solution(int cutoff, Complex amplitude, int n, double t) {
  const double a2 = std::norm(amplitude);
  const double theta = static_cast<double>(n) * a2 - static_cast<double>(n) * n;
  return SpectralField::plane_wave(cutoff, amplitude * std::polar(1.0, theta * t), n);
}

std::vector<Complex> direct_samples(const SpectralField& f, int gridsize) {
  std::vector<Complex> out(gridsize);
  const int n = f.cutoff();
  for (int j = 0; j < gridsize; ++j) {
    const double x = kTwoPi * j / gridsize;
    Complex acc{};
    for (int xi = -n; xi <= n; ++xi) acc += f[xi] * std::polar(1.0, xi * x);
    out[j] = acc / kSqrtTwoPi;
  }
  return out;
}

SpectralField direct_coefficients(const std::vector<Complex>& samples, int cutoff) {
  const int g = static_cast<int>(samples.size());
  SpectralField out(cutoff);
  for (int xi = -cutoff; xi <= cutoff; ++xi) {
    Complex acc{};
    for (int j = 0; j < g; ++j) acc += samples[j] * std::polar(1.0, -xi * kTwoPi * j / g);
    out.at(xi) = acc * kSqrtTwoPi / static_cast<double>(g);
  }
  return out;
}

SpectralField direct_dnls_nonlinearity(const SpectralField& u) {
  const int n = u.cutoff();
  const int g = 8 * n + 1;
  auto v = direct_samples(u, g);
  for (auto& z : v) z *= std::norm(z);
  auto c = direct_coefficients(v, 3 * n);
  SpectralField out(n);
  for (int xi = -n; xi <= n; ++xi) out.at(xi) = Complex(0.0, 1.0) * Complex(0.0, xi) * c[xi];
  return out;
}

SpectralField enumerate_T(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3) {
  const int n = u1.cutoff();
  const Complex i{0.0, 1.0};
  SpectralField out(3 * n);
  for (int xi = -3 * n; xi <= 3 * n; ++xi) {
    Complex acc{};
    for (int a = -n; a <= n; ++a)
      for (int b = -n; b <= n; ++b) {
        const int c = xi - a - b;
        if (a == xi || b == xi || c < -n || c > n) continue;
        // (conj u3)^(c) = conj(u3^(-c))
        acc += u1[a] * u2[b] * (i * static_cast<double>(c)) * std::conj(u3[-c]);
      }
    if (std::abs(xi) <= n) acc += u1[xi] * u2[xi] * (i * static_cast<double>(xi)) * std::conj(u3[xi]);
    out.at(xi) = acc / kTwoPi;
  }
  return out;
}

long long naive_divisor_count(long long r) {
  long long count = 0;
  for (long long d = 1; d <= r; ++d)
    if (r % d == 0) ++count;
  return count;
}

int naive_refined_count(long long r) {
  int count = 0;
  for (long long d = 1; d <= r; ++d) {
    if (r % d != 0) continue;
    const long double gap = 3.0L * std::llabs(d - r / d);
    if (std::pow(gap, 6.0L) <= static_cast<long double>(r)) ++count;
  }
  return count;
}

long double naive_counterexample_sum(long long n, double s_decay, double log_power) {
  long double sum = 0.0L;
  for (long long xi = 1; xi <= n; ++xi) {
    const long double b = std::sqrt(1.0L + static_cast<long double>(xi) * xi);
    sum += 2.0L * std::pow(b, -(2.0L * s_decay + 0.5L)) * std::pow(std::log(b), -2.0L * log_power);
  }
  return sum;
}

ResonanceSides resonance_sides(long long xi, long long xi1, long long xi2, long double tau,
                               long double tau1, long double tau2) {
  const long long xi3 = xi - xi1 - xi2;
  const long double tau3 = tau - tau1 - tau2;
  auto sq = [](long long k) { return static_cast<long double>(k) * static_cast<long double>(k); };
  const long double s0 = tau + sq(xi), s1 = tau1 + sq(xi1), s2 = tau2 + sq(xi2), s3 = tau3 - sq(xi3);
  return {s0 - s1 - s2 - s3, 2.0L * static_cast<long double>(xi - xi1) * static_cast<long double>(xi - xi2)};
}

}  // namespace dnls::checks
