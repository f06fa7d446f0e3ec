#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dnls/spectral_field.hpp"

namespace dnls::nonlinear {

// Exclusion rules on index tuples. Trilinear tuples are (xi, xi1, xi2, xi3),
// quintilinear tuples are (xi, xi1, ..., xi5).
class FrequencyMask {
 public:
  using Rule = std::function<bool(std::span<const int>)>;

  FrequencyMask() = default;
  explicit FrequencyMask(std::vector<Rule> rules) : rules_(std::move(rules)) {}

  bool admits(std::span<const int> tuple) const;
  FrequencyMask operator&&(const FrequencyMask& other) const;

  // xi1 != xi and xi2 != xi
  static FrequencyMask trilinear();
  // xi1+...+xi4 != 0, xi1+xi2 != 0, xi3+xi4 != 0
  static FrequencyMask quintilinear();

 private:
  std::vector<Rule> rules_;
};

// Output band: the input cutoff N, or the full band of the product.
enum class Band { kInput, kFull };

// Multilinear operators. The last slot of the trilinear operators and the
// even slots of Q enter conjugated. All inputs must share one cutoff.
SpectralField t_star(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3,
                     Band band = Band::kInput);
SpectralField t_dstar(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3,
                      Band band = Band::kInput);
SpectralField t_full(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3,
                     Band band = Band::kInput);
SpectralField c1_op(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3,
                    Band band = Band::kInput);

enum class QPath { kFast, kBrute };
SpectralField q_op(const SpectralField& u1, const SpectralField& u2, const SpectralField& u3,
                   const SpectralField& u4, const SpectralField& u5, Band band = Band::kInput,
                   QPath path = QPath::kFast);

// Masked sums evaluated tuple by tuple with an explicit mask.
inline constexpr int kBruteForceMaxCutoff = 16;
SpectralField brute_trilinear(const SpectralField& u1, const SpectralField& u2,
                              const SpectralField& u3, bool derivative_weight,
                              const FrequencyMask& mask);
SpectralField brute_quintilinear(const SpectralField& u1, const SpectralField& u2,
                                 const SpectralField& u3, const SpectralField& u4,
                                 const SpectralField& u5, const FrequencyMask& mask);

// Plain products u1 u2 conj(u3) and its derivative variant u1 u2 d/dx conj(u3), full band.
SpectralField cubic_product(const SpectralField& u1, const SpectralField& u2,
                            const SpectralField& u3);

// Physical-space forms on a dealiased grid.
SpectralField script_T_physical(const SpectralField& v, Band band = Band::kInput);
SpectralField script_Q_physical(const SpectralField& v, Band band = Band::kInput);

// (|u|^2 - 2 mean |u|^2) u, from C1 minus the diagonal term, or pointwise.
SpectralField nls_star_fourier(const SpectralField& u, Band band = Band::kInput);
SpectralField nls_star_physical(const SpectralField& u, Band band = Band::kInput);

// i d/dx (|u|^2 u)
SpectralField dnls_nonlinearity(const SpectralField& u, Band band = Band::kInput);
// -i T(v) - Q(v) / 2
SpectralField gauged_nonlinearity(const SpectralField& v, Band band = Band::kInput);

// Convolution sum c(xi) = sum a(xi1) b(xi - xi1) without normalization;
// direct for small bands (exact on integer data), FFT otherwise.
SpectralField raw_convolution(const SpectralField& a, const SpectralField& b);

struct Resonance {
  long long integer_lhs = 0;  // xi^2 - xi1^2 - xi2^2 + xi3^2
  long long integer_rhs = 0;  // 2 (xi - xi1)(xi - xi2)
  long long integer_alt = 0;  // 2 (xi1 xi2 + xi xi3)
  double lhs = 0.0;           // sigma0 - sigma1 - sigma2 - sigma3
  double rhs = 0.0;
};
Resonance resonance_check(long long xi, long long xi1, long long xi2, double tau, double tau1,
                          double tau2);

struct ResonanceScan {
  long long tuples = 0;
  long long integer_failures = 0;
  double max_mixed_error = 0.0;  // relative to the largest modulation in the tuple
};
ResonanceScan resonance_scan(long long tuples, std::uint64_t seed, long long max_frequency = 1000,
                             double max_tau = 1e3);

}  // namespace dnls::nonlinear
