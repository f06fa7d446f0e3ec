#include "dnls/solver.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "dnls/error.hpp"
#include "dnls/nonlinearity.hpp"
#include "dnls/scan_report.hpp"
#include "dnls/version.hpp"

namespace dnls::solver {

std::string to_string(Equation eq) {
  switch (eq) {
    case Equation::kDnls: return "dnls";
    case Equation::kGauged: return "gauged";
    case Equation::kNlsStar: return "nls_star";
    case Equation::kLinear: return "linear";
  }
  return "unknown";
}

Equation equation_from_string(const std::string& name) {
  if (name == "dnls") return Equation::kDnls;
  if (name == "gauged" || name == "gauged_dnls") return Equation::kGauged;
  if (name == "nls_star" || name == "nls*") return Equation::kNlsStar;
  if (name == "linear") return Equation::kLinear;
  throw InvalidArgument("unknown equation '" + name + "' (expected dnls, gauged, nls_star or linear)");
}

SpectralField nonlinearity(Equation eq, const SpectralField& u) {
  switch (eq) {
    case Equation::kDnls: return nonlinear::dnls_nonlinearity(u);
    case Equation::kGauged: return nonlinear::gauged_nonlinearity(u);
    case Equation::kNlsStar: return nonlinear::nls_star_fourier(u);
    case Equation::kLinear: return SpectralField(u.cutoff());
  }
  return SpectralField(u.cutoff());
}

void SolveConfig::validate() const {
  require(cutoff >= 1, "cutoff must be positive");
  require(horizon > 0.0 && horizon <= 1.0, "time horizon T must lie in (0, 1]");
  require(steps >= 4 && steps % 2 == 0, "time steps M must be even and at least 4");
  require(max_iterations >= 1, "max iterations must be positive");
  require(tolerance > 0.0, "fixed-point tolerance must be positive");
}

SpectralField free_evolution(const SpectralField& u0, double t) {
  SpectralField out = u0;
  for (int xi = -u0.cutoff(); xi <= u0.cutoff(); ++xi)
    out.at(xi) *= std::polar(1.0, -t * xi * static_cast<double>(xi));
  return out;
}

namespace {

using Coeffs = std::vector<Complex>;

// a += c * b
void axpy(Coeffs& a, Complex c, const Coeffs& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

// Running integrals I_j = int_0^{j h} g for j = 0..J.
std::vector<Coeffs> cumulative_simpson(const std::vector<const Coeffs*>& g, double h) {
  const std::size_t len = g.front()->size();
  const int last = static_cast<int>(g.size()) - 1;
  std::vector<Coeffs> out(g.size(), Coeffs(len));
  if (last >= 1 && last < 2) {
    axpy(out[1], h / 2.0, *g[0]);
    axpy(out[1], h / 2.0, *g[1]);
    return out;
  }
  for (int j = 1; j <= last; ++j) {
    auto& cur = out[j];
    if (j == 1) {
      axpy(cur, 5.0 * h / 12.0, *g[0]);
      axpy(cur, 8.0 * h / 12.0, *g[1]);
      axpy(cur, -h / 12.0, *g[2]);
    } else if (j % 2 == 0) {
      cur = out[j - 2];
      axpy(cur, h / 3.0, *g[j - 2]);
      axpy(cur, 4.0 * h / 3.0, *g[j - 1]);
      axpy(cur, h / 3.0, *g[j]);
    } else {
      cur = out[j - 3];
      axpy(cur, 3.0 * h / 8.0, *g[j - 3]);
      axpy(cur, 9.0 * h / 8.0, *g[j - 2]);
      axpy(cur, 9.0 * h / 8.0, *g[j - 1]);
      axpy(cur, 3.0 * h / 8.0, *g[j]);
    }
  }
  return out;
}

}  // namespace

Trajectory duhamel(const Trajectory& forcing) {
  const int c = forcing.center_index();
  const int n = forcing.cutoff();
  const int m = forcing.steps();
  const double dt = forcing.dt();

  // interaction picture: g(t') = S(-t') F(t')
  std::vector<Coeffs> g(m + 1);
  for (int k = 0; k <= m; ++k) {
    const double t = forcing.time(k);
    g[k].assign(forcing[k].coefficients().begin(), forcing[k].coefficients().end());
    for (int xi = -n; xi <= n; ++xi) g[k][xi + n] *= std::polar(1.0, t * xi * static_cast<double>(xi));
  }
  std::vector<const Coeffs*> fwd, bwd;
  for (int k = c; k <= m; ++k) fwd.push_back(&g[k]);
  for (int k = c; k >= 0; --k) bwd.push_back(&g[k]);
  const auto ifwd = cumulative_simpson(fwd, dt);
  const auto ibwd = cumulative_simpson(bwd, -dt);

  std::vector<SpectralField> out(m + 1, SpectralField(n));
  for (int k = 0; k <= m; ++k) {
    const Coeffs& acc = k >= c ? ifwd[k - c] : ibwd[c - k];
    const double t = forcing.time(k);
    auto dst = out[k].coefficients();
    for (int xi = -n; xi <= n; ++xi)
      dst[xi + n] = Complex(0.0, -1.0) * std::polar(1.0, -t * xi * static_cast<double>(xi)) * acc[xi + n];
  }
  return Trajectory(forcing.half_width(), std::move(out), forcing.profile());
}

SpectralField duhamel(const Trajectory& forcing, int t_index) {
  require(t_index >= 0 && t_index <= forcing.steps(), "time index outside the grid");
  return duhamel(forcing)[t_index];
}

namespace {

Trajectory free_trajectory(const SpectralField& u0, double horizon, int steps) {
  return Trajectory::sample(horizon, steps, [&](double t) { return free_evolution(u0, t); });
}

Trajectory forcing_of(const Trajectory& u, Equation eq) {
  return u.map([eq](const SpectralField& f) { return nonlinearity(eq, f); });
}

void fill_mass(SolveReport& rep, const SpectralField& u0) {
  const double m0 = u0.l2_norm();
  rep.mass_drift.clear();
  for (const auto& s : rep.trajectory.samples()) rep.mass_drift.push_back(std::abs(s.l2_norm() - m0));
  rep.max_mass_drift = *std::max_element(rep.mass_drift.begin(), rep.mass_drift.end());
}

bool finite(const Trajectory& t) {
  for (const auto& s : t.samples())
    for (const auto& c : s.coefficients())
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

}  // namespace

SolveReport picard_solve(const SpectralField& u0_in, const SolveConfig& cfg,
                         const std::optional<Trajectory>& initial_iterate) {
  cfg.validate();
  const auto u0 = u0_in.resized(cfg.cutoff);
  const auto lin = free_trajectory(u0, cfg.horizon, cfg.steps);

  SolveReport rep;
  rep.equation = cfg.equation;
  Trajectory v = lin;
  if (initial_iterate) {
    require(initial_iterate->steps() == cfg.steps && initial_iterate->cutoff() == cfg.cutoff &&
                std::abs(initial_iterate->half_width() - cfg.horizon) < 1e-14,
            "initial iterate does not match the solver grid");
    v = *initial_iterate;
  }
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    auto phi = duhamel(forcing_of(v, cfg.equation));
    std::vector<SpectralField> next;
    next.reserve(lin.size());
    for (std::size_t k = 0; k < lin.size(); ++k)
      next.push_back(lin[static_cast<int>(k)] + phi[static_cast<int>(k)]);
    Trajectory nv(cfg.horizon, std::move(next));
    const double diff = finite(nv) ? sup_l2_distance(nv, v) : std::numeric_limits<double>::infinity();
    rep.residual_history.push_back(diff);
    rep.iterations = it;
    v = std::move(nv);
    if (diff <= cfg.tolerance) {
      rep.converged = true;
      break;
    }
    if (!std::isfinite(diff) || diff > 1e12) break;
  }
  rep.fixed_point_residual = rep.residual_history.back();
  rep.trajectory = std::move(v);
  if (!finite(rep.trajectory)) return rep;
  fill_mass(rep, u0);
  rep.integral_residual = residual_integral_equation(rep.trajectory, cfg.equation);
  if (cfg.cross_check)
    rep.cross_check_residual = sup_l2_distance(rep.trajectory, ifrk4_solve(u0, cfg));
  return rep;
}

Trajectory ifrk4_solve(const SpectralField& u0_in, const SolveConfig& cfg) {
  cfg.validate();
  const auto u0 = u0_in.resized(cfg.cutoff);
  const int m = cfg.steps;
  const int c = m / 2;
  const double dt = 2.0 * cfg.horizon / m;
  // w = S(-t) u satisfies w' = -i S(-t) F(S(t) w)
  auto rhs = [&](double t, const SpectralField& w) {
    auto f = nonlinearity(cfg.equation, free_evolution(w, t));
    f = free_evolution(f, -t);
    return f * Complex(0.0, -1.0);
  };
  std::vector<SpectralField> out(m + 1);
  out[c] = u0;
  for (int dir : {1, -1}) {
    SpectralField w = u0;
    const double h = dir * dt;
    for (int j = 0; j < c; ++j) {
      const double t = j * h;
      const auto k1 = rhs(t, w);
      const auto k2 = rhs(t + h / 2, w + (h / 2) * k1);
      const auto k3 = rhs(t + h / 2, w + (h / 2) * k2);
      const auto k4 = rhs(t + h, w + h * k3);
      w += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      out[c + dir * (j + 1)] = free_evolution(w, t + h);
    }
  }
  return Trajectory(cfg.horizon, std::move(out));
}

double residual_integral_equation(const Trajectory& traj, Equation eq) {
  const int c = traj.center_index();
  const auto phi = duhamel(forcing_of(traj, eq));
  double worst = 0.0;
  for (int k = 0; k <= traj.steps(); ++k) {
    auto r = traj[k] - free_evolution(traj[c], traj.time(k)) - phi[k];
    worst = std::max(worst, r.l2_norm());
  }
  return worst;
}

SolveReport solve_dnls_via_gauge(const SpectralField& u0_in, const SolveConfig& cfg) {
  cfg.validate();
  const auto u0 = u0_in.resized(cfg.cutoff);
  const auto ctx = gauge::GaugeContext::for_cutoff(cfg.cutoff);
  const auto v0 = gauge::gauge0(u0, ctx);
  auto gcfg = cfg;
  gcfg.equation = Equation::kGauged;
  gcfg.cross_check = false;
  auto rep = picard_solve(v0.field, gcfg);
  rep.equation = Equation::kDnls;
  rep.gauge_truncation = v0.truncated_l2;
  if (!finite(rep.trajectory)) return rep;
  const auto gauged = rep.trajectory;
  auto back = gauge::gauge_full_inv(gauged, ctx);
  rep.gauge_truncation = std::max(rep.gauge_truncation, back.truncated_l2);
  rep.trajectory = std::move(back.trajectory);
  fill_mass(rep, u0);
  rep.integral_residual = residual_integral_equation(rep.trajectory, Equation::kDnls);
  rep.gauge_residual = sup_l2_distance(gauge::gauge_full(rep.trajectory, ctx).trajectory, gauged);
  if (cfg.cross_check)
    rep.cross_check_residual = sup_l2_distance(rep.trajectory, ifrk4_solve(u0, cfg));
  return rep;
}

std::string to_json(const SolveReport& r) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["equation"] = to_string(r.equation);
  j["status"] = r.converged ? "CONVERGED" : "FAILED";
  j["iterations"] = r.iterations;
  j["fixed_point_residual"] = r.fixed_point_residual;
  j["residual_history"] = r.residual_history;
  j["max_mass_drift"] = r.max_mass_drift;
  j["mass_drift"] = r.mass_drift;
  j["integral_residual"] = r.integral_residual;
  j["cross_check_residual"] = r.cross_check_residual ? nlohmann::ordered_json(*r.cross_check_residual)
                                                     : nlohmann::ordered_json(nullptr);
  j["gauge_residual"] =
      r.gauge_residual ? nlohmann::ordered_json(*r.gauge_residual) : nlohmann::ordered_json(nullptr);
  j["gauge_truncation"] = r.gauge_truncation;
  j["cutoff"] = r.trajectory.cutoff();
  j["horizon"] = r.trajectory.half_width();
  j["steps"] = r.trajectory.steps();
  return j.dump(2) + "\n";
}

}  // namespace dnls::solver
