#include "dnls/nonlinearity.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "dnls/error.hpp"
#include "dnls/fft.hpp"
#include "dnls/random.hpp"

namespace dnls::nonlinear {

bool FrequencyMask::admits(std::span<const int> tuple) const {
  return std::all_of(rules_.begin(), rules_.end(), [&](const Rule& r) { return r(tuple); });
}

FrequencyMask FrequencyMask::operator&&(const FrequencyMask& other) const {
  auto rules = rules_;
  rules.insert(rules.end(), other.rules_.begin(), other.rules_.end());
  return FrequencyMask(std::move(rules));
}

FrequencyMask FrequencyMask::trilinear() {
  return FrequencyMask({[](std::span<const int> t) { return t[1] != t[0]; },
                        [](std::span<const int> t) { return t[2] != t[0]; }});
}

FrequencyMask FrequencyMask::quintilinear() {
  return FrequencyMask({[](std::span<const int> t) { return t[1] + t[2] + t[3] + t[4] != 0; },
                        [](std::span<const int> t) { return t[1] + t[2] != 0; },
                        [](std::span<const int> t) { return t[3] + t[4] != 0; }});
}

namespace {

constexpr int kDirectMaxLength = 200;

int shared_cutoff(std::initializer_list<const SpectralField*> fields) {
  const int n = (*fields.begin())->cutoff();
  for (const auto* f : fields) require(f->cutoff() == n, "operator inputs must share one cutoff");
  return n;
}

// Divides rather than multiplies so integer-valued sums round like the oracles.
SpectralField finish(SpectralField f, double divisor, int n, Band band) {
  for (auto& c : f.coefficients()) c /= divisor;
  return band == Band::kInput ? f.resized(n) : f;
}

SpectralField conj_derivative(const SpectralField& u) { return derivative(u.conj()); }

// Field times the constant c, aligned at the wider cutoff.
SpectralField scaled(const SpectralField& f, Complex c, int cutoff) { return (f * c).resized(cutoff); }

}  // namespace

SpectralField raw_convolution(const SpectralField& a, const SpectralField& b) {
  const int na = a.cutoff(), nb = b.cutoff();
  SpectralField out(na + nb);
  if (static_cast<int>(std::min(a.size(), b.size())) <= kDirectMaxLength) {
    auto c = out.coefficients();
    const auto ca = a.coefficients();
    const auto cb = b.coefficients();
    for (std::size_t i = 0; i < ca.size(); ++i) {
      if (ca[i] == Complex{}) continue;
      for (std::size_t j = 0; j < cb.size(); ++j) c[i + j] += ca[i] * cb[j];
    }
    return out;
  }
  const int len = fft::good_size(static_cast<int>(a.size() + b.size()) - 1);
  std::vector<Complex> fa(len), fb(len);
  std::copy(a.coefficients().begin(), a.coefficients().end(), fa.begin());
  std::copy(b.coefficients().begin(), b.coefficients().end(), fb.begin());
  auto xa = fft::forward(fa);
  const auto xb = fft::forward(fb);
  for (int k = 0; k < len; ++k) xa[k] *= xb[k];
  const auto c = fft::backward(xa);
  auto dst = out.coefficients();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = c[i] / static_cast<double>(len);
  return out;
}

namespace {

// Unnormalized sums for the trilinear operators: returns the full-band
// bracket so that T* = bracket / (2 pi).
enum class Part { kStar, kFull, kDiag };

SpectralField trilinear_raw(const SpectralField& u1, const SpectralField& u2,
                            const SpectralField& w3, Part part) {
  const int n = u1.cutoff();
  const int big = 3 * n;
  // w3 is the already conjugated (and possibly differentiated) last factor
  SpectralField diag(big);
  for (int xi = -n; xi <= n; ++xi) diag.at(xi) = u1[xi] * u2[xi] * w3[-xi];
  if (part == Part::kDiag) return diag;
  auto full = raw_convolution(raw_convolution(u1, u2), w3);
  const Complex s23 = raw_convolution(u2, w3)[0];
  const Complex s13 = raw_convolution(u1, w3)[0];
  full -= scaled(u1, s23, big);
  full -= scaled(u2, s13, big);
  if (part == Part::kStar) full += diag;
  return full;
}

}  // namespace

SpectralField t_star(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3,
                     Band band) {
  const int n = shared_cutoff({&u1, &u2, &u3});
  return finish(trilinear_raw(u1, u2, conj_derivative(u3), Part::kStar), kTwoPi, n, band);
}

SpectralField t_dstar(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3,
                      Band band) {
  const int n = shared_cutoff({&u1, &u2, &u3});
  // weight i xi rather than i xi3 = -i xi
  return finish(trilinear_raw(u1, u2, conj_derivative(u3), Part::kDiag), -kTwoPi, n, band);
}

SpectralField t_full(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3,
                     Band band) {
  const int n = shared_cutoff({&u1, &u2, &u3});
  return finish(trilinear_raw(u1, u2, conj_derivative(u3), Part::kFull), kTwoPi, n, band);
}

SpectralField c1_op(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3,
                    Band band) {
  const int n = shared_cutoff({&u1, &u2, &u3});
  return finish(trilinear_raw(u1, u2, u3.conj(), Part::kStar), kTwoPi, n, band);
}

SpectralField cubic_product(const SpectralField& u1, const SpectralField& u2,
                            const SpectralField& u3) {
  shared_cutoff({&u1, &u2, &u3});
  auto out = raw_convolution(raw_convolution(u1, u2), u3.conj());
  for (auto& c : out.coefficients()) c /= kTwoPi;
  return out;
}

SpectralField q_op(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3,
                   const SpectralField& u4, const SpectralField& u5, Band band, QPath path) {
  const int n = shared_cutoff({&u1, &u2, &u3, &u4, &u5});
  if (path == QPath::kBrute) {
    require(n <= kBruteForceMaxCutoff, "brute-force quintilinear sum is limited to N <= " +
                                           std::to_string(kBruteForceMaxCutoff) +
                                           "; use the fast path");
    auto out = brute_quintilinear(u1, u2, u3, u4, u5, FrequencyMask::quintilinear());
    return band == Band::kInput ? out.resized(n) : out;
  }
  // each excluded index sum is a vanishing frequency of a partial product
  auto p = raw_convolution(u1, u2.conj());
  p.at(0) = 0.0;
  auto r = raw_convolution(u3, u4.conj());
  r.at(0) = 0.0;
  auto pr = raw_convolution(p, r);
  pr.at(0) = 0.0;
  return finish(raw_convolution(pr, u5), kTwoPi * kTwoPi, n, band);
}

SpectralField brute_trilinear(const SpectralField& u1, const SpectralField& u2,
                              const SpectralField& u3, bool derivative_weight,
                              const FrequencyMask& mask) {
  const int n = shared_cutoff({&u1, &u2, &u3});
  require(n <= kBruteForceMaxCutoff, "brute-force trilinear sum is limited to N <= " +
                                         std::to_string(kBruteForceMaxCutoff));
  const auto w3 = derivative_weight ? conj_derivative(u3) : u3.conj();
  SpectralField out(3 * n);
  std::array<int, 4> t{};
  for (int xi = -3 * n; xi <= 3 * n; ++xi) {
    Complex acc{};
    for (int a = -n; a <= n; ++a)
      for (int b = -n; b <= n; ++b) {
        const int c = xi - a - b;
        if (c < -n || c > n) continue;
        t = {xi, a, b, c};
        if (!mask.admits(t)) continue;
        acc += u1[a] * u2[b] * w3[c];
      }
    out.at(xi) = acc / kTwoPi;
  }
  return out;
}

SpectralField brute_quintilinear(const SpectralField& u1, const SpectralField& u2,
                                 const SpectralField& u3, const SpectralField& u4,
                                 const SpectralField& u5, const FrequencyMask& mask) {
  const int n = shared_cutoff({&u1, &u2, &u3, &u4, &u5});
  require(n <= kBruteForceMaxCutoff, "brute-force quintilinear sum is limited to N <= " +
                                         std::to_string(kBruteForceMaxCutoff));
  const auto c2 = u2.conj();
  const auto c4 = u4.conj();
  SpectralField out(5 * n);
  std::array<int, 6> t{};
  for (int xi = -5 * n; xi <= 5 * n; ++xi) {
    Complex acc{};
    for (int a = -n; a <= n; ++a)
      for (int b = -n; b <= n; ++b)
        for (int c = -n; c <= n; ++c)
          for (int d = -n; d <= n; ++d) {
            const int e = xi - a - b - c - d;
            if (e < -n || e > n) continue;
            t = {xi, a, b, c, d, e};
            if (!mask.admits(t)) continue;
            acc += u1[a] * c2[b] * u3[c] * c4[d] * u5[e];
          }
    out.at(xi) = acc / (kTwoPi * kTwoPi);
  }
  return out;
}

namespace {

// Samples of v, its conjugate derivative, on a grid fit for degree-`degree` products.
int product_grid(int n, int degree) { return fft::good_size(2 * degree * n + 1); }

SpectralField project(const std::vector<Complex>& x, int band_cutoff, int n, Band band) {
  auto f = from_physical(x, band_cutoff);
  return band == Band::kInput ? f.resized(n) : f;
}

}  // namespace

SpectralField script_T_physical(const SpectralField& v, Band band) {
  const int n = v.cutoff();
  const int g = product_grid(n, 3);
  const auto x = to_physical(v, g);
  const auto dx = to_physical(conj_derivative(v), g);
  double im_mean = 0.0;
  for (int j = 0; j < g; ++j) im_mean += (x[j] * dx[j]).imag();
  im_mean /= g;
  std::vector<Complex> y(g);
  for (int j = 0; j < g; ++j) y[j] = x[j] * x[j] * dx[j] - Complex(0.0, 2.0 * im_mean) * x[j];
  return project(y, 3 * n, n, band);
}

SpectralField script_Q_physical(const SpectralField& v, Band band) {
  const int n = v.cutoff();
  const int g = product_grid(n, 5);
  const auto x = to_physical(v, g);
  double m2 = 0.0, m4 = 0.0;
  for (const auto& z : x) {
    m2 += std::norm(z);
    m4 += std::norm(z) * std::norm(z);
  }
  m2 /= g;
  m4 /= g;
  std::vector<Complex> y(g);
  for (int j = 0; j < g; ++j) {
    const double a = std::norm(x[j]);
    y[j] = ((a * a - m4) - 2.0 * m2 * (a - m2)) * x[j];
  }
  return project(y, 5 * n, n, band);
}

SpectralField nls_star_fourier(const SpectralField& u, Band band) {
  const int n = u.cutoff();
  const auto w = u.conj();
  auto out = trilinear_raw(u, u, w, Part::kStar);
  out -= trilinear_raw(u, u, w, Part::kDiag);
  return finish(std::move(out), kTwoPi, n, band);
}

SpectralField nls_star_physical(const SpectralField& u, Band band) {
  const int n = u.cutoff();
  const int g = product_grid(n, 3);
  auto x = to_physical(u, g);
  double m = 0.0;
  for (const auto& z : x) m += std::norm(z);
  m /= g;
  for (auto& z : x) z *= std::norm(z) - 2.0 * m;
  return project(x, 3 * n, n, band);
}

SpectralField dnls_nonlinearity(const SpectralField& u, Band band) {
  auto p = cubic_product(u, u, u);
  p = derivative(p);
  p *= Complex(0.0, 1.0);
  return band == Band::kInput ? p.resized(u.cutoff()) : p;
}

SpectralField gauged_nonlinearity(const SpectralField& v, Band band) {
  const int n = v.cutoff();
  auto out = t_full(v, v, v, Band::kFull) * Complex(0.0, -1.0);
  out -= 0.5 * q_op(v, v, v, v, v, Band::kFull);
  return band == Band::kInput ? out.resized(n) : out;
}

Resonance resonance_check(long long xi, long long xi1, long long xi2, double tau, double tau1,
                          double tau2) {
  const long long xi3 = xi - xi1 - xi2;
  Resonance r;
  r.integer_lhs = xi * xi - xi1 * xi1 - xi2 * xi2 + xi3 * xi3;
  r.integer_rhs = 2 * (xi - xi1) * (xi - xi2);
  r.integer_alt = 2 * (xi1 * xi2 + xi * xi3);
  const double tau3 = tau - tau1 - tau2;
  const double s0 = tau + static_cast<double>(xi * xi);
  const double s1 = tau1 + static_cast<double>(xi1 * xi1);
  const double s2 = tau2 + static_cast<double>(xi2 * xi2);
  const double s3 = tau3 - static_cast<double>(xi3 * xi3);
  r.lhs = s0 - s1 - s2 - s3;
  r.rhs = static_cast<double>(r.integer_rhs);
  return r;
}

ResonanceScan resonance_scan(long long tuples, std::uint64_t seed, long long max_frequency,
                             double max_tau) {
  Rng rng(seed);
  ResonanceScan out;
  out.tuples = tuples;
  for (long long i = 0; i < tuples; ++i) {
    const long long xi = rng.integer(-max_frequency, max_frequency);
    const long long xi1 = rng.integer(-max_frequency, max_frequency);
    const long long xi2 = rng.integer(-max_frequency, max_frequency);
    const double tau = rng.uniform(-max_tau, max_tau);
    const double tau1 = rng.uniform(-max_tau, max_tau);
    const double tau2 = rng.uniform(-max_tau, max_tau);
    const auto r = resonance_check(xi, xi1, xi2, tau, tau1, tau2);
    if (r.integer_lhs != r.integer_rhs || r.integer_rhs != r.integer_alt) ++out.integer_failures;
    const double scale = std::max(
        {1.0, std::abs(tau), std::abs(tau1), std::abs(tau2), static_cast<double>(xi * xi),
         static_cast<double>(xi1 * xi1), static_cast<double>(xi2 * xi2)});
    out.max_mixed_error = std::max(out.max_mixed_error, std::abs(r.lhs - r.rhs) / scale);
  }
  return out;
}

}  // namespace dnls::nonlinear
