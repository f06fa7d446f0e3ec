#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dnls/gauge.hpp"
#include "dnls/spectral_field.hpp"
#include "dnls/trajectory.hpp"

namespace dnls::solver {

// i u_t + u_xx = F(u) with
//   kDnls:    F = i d/dx (|u|^2 u)
//   kGauged:  F = -i T(u) - Q(u) / 2
//   kNlsStar: F = (|u|^2 - 2 mean |u|^2) u
//   kLinear:  F = 0
enum class Equation { kDnls, kGauged, kNlsStar, kLinear };

std::string to_string(Equation eq);
Equation equation_from_string(const std::string& name);

// F(u) at the cutoff of u.
SpectralField nonlinearity(Equation eq, const SpectralField& u);

struct SolveConfig {
  int cutoff = 32;
  double horizon = 0.1;  // solution window [-T, T]
  int steps = 200;       // time cells over [-T, T]; even so that t = 0 is a grid point
  int max_iterations = 60;
  double tolerance = 1e-10;  // sup-in-time L2 distance of consecutive iterates
  Equation equation = Equation::kDnls;
  bool cross_check = false;  // also integrate with IFRK4 and compare

  void validate() const;
};

struct SolveReport {
  Equation equation = Equation::kDnls;
  Trajectory trajectory;
  bool converged = false;
  int iterations = 0;
  double fixed_point_residual = 0.0;
  std::vector<double> residual_history;
  std::vector<double> mass_drift;  // per time sample, | ||u(t)|| - ||u(0)|| |
  double max_mass_drift = 0.0;
  double integral_residual = 0.0;
  std::optional<double> cross_check_residual;
  std::optional<double> gauge_residual;
  double gauge_truncation = 0.0;
};

// e^{-i t xi^2} coefficient-wise
SpectralField free_evolution(const SpectralField& u0, double t);

// -i int_0^{t_k} S(t_k - t') F(t') dt' for every grid time, by cumulative
// Simpson quadrature from the centre sample (signed for t < 0). Odd cell
// counts close with the 3/8 rule; a single cell uses a three-point rule.
Trajectory duhamel(const Trajectory& forcing);
// One grid time only.
SpectralField duhamel(const Trajectory& forcing, int t_index);

// Picard iteration v <- S(t) u0 + Duhamel(F(v)) on the symmetric window.
SolveReport picard_solve(const SpectralField& u0, const SolveConfig& cfg,
                         const std::optional<Trajectory>& initial_iterate = std::nullopt);

// Integrating-factor RK4 on the same grid, stepping outward from t = 0.
Trajectory ifrk4_solve(const SpectralField& u0, const SolveConfig& cfg);

// Gauge the datum, solve the gauged equation, ungauge.
SolveReport solve_dnls_via_gauge(const SpectralField& u0, const SolveConfig& cfg);

// sup_k || u(t_k) - S(t_k) u(0) - Duhamel(F(u))(t_k) ||
double residual_integral_equation(const Trajectory& traj, Equation eq);

// Solve-report summary as JSON (trajectory excluded).
std::string to_json(const SolveReport& report);

}  // namespace dnls::solver
