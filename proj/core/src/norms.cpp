#include "dnls/norms.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "dnls/error.hpp"
#include "dnls/fft.hpp"

namespace dnls {

double dual_exponent(double q) {
  if (q == 1.0) return kInfinity;
  if (std::isinf(q)) return 1.0;
  return q / (q - 1.0);
}

NormSpec NormSpec::spatial(double s, double r) {
  NormSpec spec{s, 0.0, r, 2.0};
  spec.validate();
  return spec;
}

NormSpec NormSpec::spacetime(double s, double b, double r, double p) {
  NormSpec spec{s, b, r, p};
  spec.validate();
  return spec;
}

double NormSpec::r_dual() const { return dual_exponent(r); }
double NormSpec::p_dual() const { return dual_exponent(p); }

void NormSpec::validate() const {
  require(std::isfinite(s) && std::isfinite(b), "norm indices s and b must be finite");
  require(r > 1.0 && std::isfinite(r), "spatial exponent r must lie in (1, inf)");
  require(p >= 1.0, "temporal exponent p must lie in [1, inf]");
}

double lq_norm(const std::vector<double>& values, double q) {
  if (std::isinf(q)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  // scale by the max to keep large exponents away from overflow
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  double acc = 0.0;
  for (double v : values) acc += std::pow(std::abs(v) / m, q);
  return m * std::pow(acc, 1.0 / q);
}

double h_norm(const SpectralField& f, const NormSpec& spec) {
  spec.validate();
  std::vector<double> w;
  w.reserve(f.size());
  for (int xi = -f.cutoff(); xi <= f.cutoff(); ++xi)
    w.push_back(std::pow(bracket(xi), spec.s) * std::abs(f[xi]));
  return lq_norm(w, spec.r_dual());
}

namespace {

int padded_length(int samples, int pad) {
  int len = 1;
  while (len < pad * samples) len *= 2;
  return len;
}

void check_window(const Trajectory& traj) {
  require(traj.size() >= 2, "trajectory is empty");
  // without a profile the samples are extended by zero outside the window
  if (traj.profile().kind == CutoffProfile::Kind::kNone) return;
  require(traj.profile().support() <= traj.half_width() * (1.0 + 1e-12),
          "cutoff profile support exceeds the trajectory window");
}

}  // namespace

ModulationProfile modulation_profile(const Trajectory& traj, int xi, const XstOptions& opt) {
  check_window(traj);
  require(opt.pad >= 4, "temporal zero padding factor must be at least 4");
  const int count = static_cast<int>(traj.size());
  const int len = padded_length(count, opt.pad);
  const double dt = traj.dt();
  const double x2 = static_cast<double>(xi) * xi;

  std::vector<Complex> w(len);
  for (int k = 0; k < count; ++k) {
    const double t = traj.time(k);
    const double weight = (k == 0 || k == count - 1) ? 0.5 : 1.0;
    w[k] = weight * traj.profile()(t) * traj[k][xi] * std::polar(1.0, x2 * t);
  }
  const auto spec = fft::forward(w);

  ModulationProfile out;
  out.dsigma = kTwoPi / (len * dt);
  out.sigma.resize(len);
  out.modulus.resize(len);
  for (int m = 0; m < len; ++m) {
    const int freq = m < len / 2 ? m : m - len;
    const int slot = freq + len / 2;
    out.sigma[slot] = freq * out.dsigma;
    out.modulus[slot] = dt / kSqrtTwoPi * std::abs(spec[m]);
  }
  return out;
}

double xst_norm(const Trajectory& traj, const NormSpec& spec, const XstOptions& opt) {
  spec.validate();
  check_window(traj);
  const int n = traj.cutoff();
  const double pd = spec.p_dual();
  std::vector<double> per_freq;
  per_freq.reserve(2 * n + 1);
  for (int xi = -n; xi <= n; ++xi) {
    bool zero = true;
    for (const auto& s : traj.samples())
      if (s[xi] != Complex{}) { zero = false; break; }
    if (zero) {
      per_freq.push_back(0.0);
      continue;
    }
    const auto prof = modulation_profile(traj, xi, opt);
    std::vector<double> g(prof.sigma.size());
    for (std::size_t m = 0; m < g.size(); ++m)
      g[m] = std::pow(bracket(prof.sigma[m]), spec.b) * prof.modulus[m];
    double v = lq_norm(g, pd);
    if (!std::isinf(pd)) v *= std::pow(prof.dsigma, 1.0 / pd);
    per_freq.push_back(std::pow(bracket(xi), spec.s) * v);
  }
  return lq_norm(per_freq, spec.r_dual());
}

double z_norm(const Trajectory& traj, double s, double r, const XstOptions& opt) {
  const double a = xst_norm(traj, NormSpec::spacetime(s, 0.5, r, 2.0), opt);
  const double b = xst_norm(traj, NormSpec::spacetime(s, 0.0, r, kInfinity), opt);
  return std::max(a, b);
}

double embedding_constant(double b1, double b2) {
  require(b1 > b2 + 0.5, "embedding needs b1 > b2 + 1/2");
  const double e = 2.0 * (b2 - b1);
  boost::math::quadrature::tanh_sinh<double> q;
  const double half = q.integrate([e](double x) { return std::pow(1.0 + x * x, 0.5 * e); }, 0.0,
                                  std::numeric_limits<double>::infinity());
  return std::sqrt(2.0 * half);
}

ScanReport embedding_scan(const std::vector<Trajectory>& samples, double s, double r, double b1,
                          double b2, const XstOptions& opt) {
  require(b1 > b2 + 0.5, "embedding scan needs b1 > b2 + 1/2");
  ScanReport rep;
  rep.name = "embedding";
  rep.parameter_names = {"sample"};
  rep.value_names = {"lhs", "rhs", "ratio"};
  rep.evidence = true;
  const auto lhs_spec = NormSpec::spacetime(s, b2, r, kInfinity);
  const auto rhs_spec = NormSpec::spacetime(s, b1, r, 2.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].is_zero()) continue;
    const double lhs = xst_norm(samples[i], lhs_spec, opt);
    const double rhs = xst_norm(samples[i], rhs_spec, opt);
    rep.rows.push_back({{static_cast<double>(i)}, {lhs, rhs, lhs / rhs}});
    worst = std::max(worst, lhs / rhs);
  }
  rep.summary["max_ratio"] = worst;
  rep.summary["constant"] = embedding_constant(b1, b2);
  rep.summary["samples"] = static_cast<double>(rep.rows.size());
  return rep;
}

}  // namespace dnls
