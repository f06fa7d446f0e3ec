#include "dnls/estimates/ratio_scans.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/quadrature/gauss.hpp>

#include "dnls/error.hpp"
#include "dnls/nonlinearity.hpp"
#include "dnls/norms.hpp"
#include "dnls/random.hpp"

namespace dnls::estimates {

int steps_for_modulation(double omega, double support) {
  require(omega > 0.0 && support > 0.0, "modulation bound and support must be positive");
  const double dt = std::numbers::pi / (1.2 * omega);
  int steps = static_cast<int>(std::ceil(2.0 * support / dt));
  return steps + (steps % 2);
}

namespace {

void check_options(const RatioScanOptions& opt) {
  require(opt.samples >= 1, "scan needs at least one sample");
  require(opt.cutoff >= 1, "cutoff must be positive");
  require(opt.support > 0.0 && opt.support <= 1.0, "support T must lie in (0, 1]");
  require(opt.refine >= 0 && opt.refine_budget >= 0, "refinement counts must be nonnegative");
}

int scan_steps(const RatioScanOptions& opt, double omega) {
  return opt.steps > 0 ? opt.steps : steps_for_modulation(omega, opt.support);
}

// Pointwise-in-time map of several trajectories on a shared grid.
template <class F>
Trajectory combine(const std::vector<const Trajectory*>& in, F&& f) {
  const auto& first = *in.front();
  std::vector<SpectralField> out;
  out.reserve(first.size());
  std::vector<const SpectralField*> args(in.size());
  for (int k = 0; k <= first.steps(); ++k) {
    for (std::size_t i = 0; i < in.size(); ++i) args[i] = &(*in[i])[k];
    out.push_back(f(args));
  }
  return Trajectory(first.half_width(), std::move(out), first.profile());
}

SpectralField quintic_product(const SpectralField& u1, const SpectralField& u2,
                              const SpectralField& u3, const SpectralField& u4,
                              const SpectralField& u5) {
  using nonlinear::raw_convolution;
  auto p = raw_convolution(raw_convolution(u1, u2.conj()), raw_convolution(u3, u4.conj()));
  auto out = raw_convolution(p, u5);
  for (auto& c : out.coefficients()) c /= kTwoPi * kTwoPi;
  return out;
}

constexpr double kOmegaRange = 4.0;  // matches random_trajectory
constexpr int kRefinePool = 64;

struct Sides {
  double lhs = 0.0, rhs = 0.0;
};
using Evaluator = std::function<Sides(const std::vector<const Trajectory*>&)>;

// One active frequency: chi(2t/T) e^{i xi x} (e^{-i xi^2 t} + b e^{-i (xi^2 + omega) t}).
struct Slot {
  int xi = 0;
  Complex b;
  double omega = 0.0;
};
using Candidate = std::vector<Slot>;

Trajectory slot_trajectory(const Slot& s, int cutoff, int steps, double support) {
  const double x2 = static_cast<double>(s.xi) * s.xi;
  return Trajectory::sample(support, steps, [&](double t) {
    SpectralField f(cutoff);
    f.at(s.xi) = bump_cutoff(2.0 * t / support) *
                 (std::polar(1.0, -x2 * t) + s.b * std::polar(1.0, -(x2 + s.omega) * t));
    return f;
  });
}

class Search {
 public:
  Search(std::string name, int slots, int steps, const RatioScanOptions& opt, Evaluator eval)
      : slots_(slots), steps_(steps), opt_(opt), eval_(std::move(eval)) {
    rep_.name = std::move(name);
    rep_.seed = opt.seed;
    rep_.evidence = true;
    rep_.parameter_names = {"sample", "kind"};
    rep_.value_names = {"lhs", "rhs", "ratio"};
    rep_.notes["kind"] = "0 random, 1 single-mode, 2 refined single-mode, 3 injected";
  }

  // Records a row; returns the ratio, or -1 when the right side vanishes.
  double record(const std::vector<const Trajectory*>& in, int sample, int kind) {
    const auto s = eval_(in);
    ++evaluations_;
    if (!(s.rhs > 0.0)) return -1.0;
    const double ratio = s.lhs / s.rhs;
    rep_.rows.push_back({{static_cast<double>(sample), static_cast<double>(kind)}, {s.lhs, s.rhs, ratio}});
    return ratio;
  }

  ScanReport run() {
    random_stage();
    single_mode_stage();
    refine_stage();
    double best = 0.0;
    for (const auto& row : rep_.rows) best = std::max(best, row.values[2]);
    rep_.summary["max_ratio"] = best;
    rep_.summary["random_max_ratio"] = stage_max(0);
    rep_.summary["single_mode_max_ratio"] = stage_max(1);
    rep_.summary["refined_max_ratio"] = stage_max(2);
    rep_.summary["steps"] = steps_;
    rep_.summary["cutoff"] = opt_.cutoff;
    rep_.summary["samples"] = opt_.samples;
    rep_.summary["evaluations"] = static_cast<double>(evaluations_);
    return std::move(rep_);
  }

  ScanReport& report() { return rep_; }

 private:
  void random_stage() {
    Rng rng(opt_.seed);
    RandomFieldOptions fo;
    fo.decay = opt_.decay;
    for (int i = 0; i < opt_.samples; ++i) {
      std::vector<Trajectory> u;
      for (int k = 0; k < slots_; ++k)
        u.push_back(random_trajectory(opt_.cutoff, opt_.support, steps_, opt_.support, rng, fo));
      record(pointers(u), i, 0);
    }
  }

  Candidate draw_single_mode(Rng& rng) const {
    Candidate c(slots_);
    for (auto& s : c) {
      s.xi = static_cast<int>(rng.integer(-opt_.cutoff, opt_.cutoff));
      s.b = rng.complex_normal();
      s.omega = rng.uniform(-kOmegaRange, kOmegaRange);
    }
    return c;
  }

  void single_mode_stage() {
    Rng rng(opt_.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < opt_.samples; ++i) evaluate(draw_single_mode(rng), i, 1);
  }

  // Starts come from a fixed-size pool on their own stream, so the refined
  // maximum does not depend on the sample count.
  void refine_stage() {
    if (opt_.refine == 0) return;
    Rng rng(opt_.seed ^ 0xc2b2ae3d27d4eb4fULL);
    std::vector<std::pair<double, Candidate>> pool;
    for (int i = 0; i < kRefinePool; ++i) {
      auto c = draw_single_mode(rng);
      const double r = probe(c);
      if (r >= 0.0) pool.emplace_back(r, std::move(c));
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    const int starts = std::min<int>(opt_.refine, static_cast<int>(pool.size()));
    for (int i = 0; i < starts; ++i) refine(pool[i].second, pool[i].first, i);
  }

  // Compass search: frequency moves by one, continuous moves shrink on failure.
  void refine(Candidate c, double value, int start) {
    double d_omega = 1.0, d_amp = 0.5, d_phase = std::numbers::pi / 4.0;
    int budget = opt_.refine_budget;
    while (budget > 0 && d_omega > 1e-3) {
      bool improved = false;
      for (int k = 0; k < slots_ && budget > 0; ++k) {
        for (const auto& move : moves(c[k], opt_.cutoff, d_omega, d_amp, d_phase)) {
          if (budget <= 0) break;
          if (move.xi < -opt_.cutoff || move.xi > opt_.cutoff) continue;
          if (std::abs(move.omega) > kOmegaRange) continue;
          auto trial = c;
          trial[k] = move;
          --budget;
          const double r = probe(trial);
          if (r > value) {
            value = r;
            c = std::move(trial);
            improved = true;
            break;
          }
        }
      }
      if (!improved) {
        d_omega *= 0.5;
        d_amp *= 0.5;
        d_phase *= 0.5;
      }
    }
    evaluate(c, start, 2);
    rep_.notes["refined_" + std::to_string(start)] = describe(c);
  }

  static std::string describe(const Candidate& c) {
    std::string out;
    for (const auto& s : c) {
      if (!out.empty()) out += "; ";
      out += "xi=" + std::to_string(s.xi) + " |b|=" + format_double(std::abs(s.b)) +
             " omega=" + format_double(s.omega);
    }
    return out;
  }

  static std::vector<Slot> moves(const Slot& s, int cutoff, double d_omega, double d_amp,
                                 double d_phase) {
    std::vector<Slot> out;
    auto with = [&](auto f) {
      Slot t = s;
      f(t);
      out.push_back(t);
    };
    with([](Slot& t) { ++t.xi; });
    with([](Slot& t) { --t.xi; });
    for (int target : {0, -s.xi, cutoff, -cutoff})
      if (target != s.xi) with([&](Slot& t) { t.xi = target; });
    with([&](Slot& t) { t.omega += d_omega; });
    with([&](Slot& t) { t.omega -= d_omega; });
    with([&](Slot& t) { t.b *= 1.0 + d_amp; });
    with([&](Slot& t) { t.b /= 1.0 + d_amp; });
    with([&](Slot& t) { t.b *= std::polar(1.0, d_phase); });
    with([&](Slot& t) { t.b *= std::polar(1.0, -d_phase); });
    return out;
  }

  std::vector<Trajectory> build(const Candidate& c) const {
    std::vector<Trajectory> u;
    for (const auto& s : c) u.push_back(slot_trajectory(s, opt_.cutoff, steps_, opt_.support));
    return u;
  }

  double evaluate(const Candidate& c, int sample, int kind) {
    const auto u = build(c);
    return record(pointers(u), sample, kind);
  }

  double probe(const Candidate& c) {
    const auto u = build(c);
    const auto s = eval_(pointers(u));
    ++evaluations_;
    return s.rhs > 0.0 ? s.lhs / s.rhs : -1.0;
  }

  static std::vector<const Trajectory*> pointers(const std::vector<Trajectory>& u) {
    std::vector<const Trajectory*> p;
    for (const auto& t : u) p.push_back(&t);
    return p;
  }

  double stage_max(int kind) const {
    double best = 0.0;
    for (const auto& row : rep_.rows)
      if (static_cast<int>(row.params[1]) == kind) best = std::max(best, row.values[2]);
    return best;
  }

  int slots_, steps_;
  RatioScanOptions opt_;
  Evaluator eval_;
  ScanReport rep_;
  long long evaluations_ = 0;
};

Sides trilinear_sides(const std::vector<const Trajectory*>& u, double q, double r) {
  const auto t = combine(u, [](const auto& a) {
    return nonlinear::t_full(*a[0], *a[1], *a[2], nonlinear::Band::kFull);
  });
  const auto sq = NormSpec::spacetime(0.5, 0.5, q, 2.0);
  return {xst_norm(t, NormSpec::spacetime(0.5, -0.5, r, 2.0)),
          xst_norm(*u[0], sq) * xst_norm(*u[1], sq) *
              xst_norm(*u[2], NormSpec::spacetime(0.5, 0.5, r, 2.0))};
}

}  // namespace

CounterexampleTriple counterexample_trajectories(int cutoff, double support, int steps) {
  require(cutoff >= 2, "counterexample family needs cutoff >= 2");
  auto w = [](int xi) {
    if (xi == 0) return 0.0;
    const double b = bracket(xi);
    return std::pow(b, -0.25) * std::pow(std::log(b), -1.0 / 3.0);
  };
  auto chi = [support](double t) { return bump_cutoff(2.0 * t / support); };
  CounterexampleTriple out;
  out.u1 = Trajectory::sample(support, steps, [&](double t) {
    SpectralField f(cutoff);
    for (int xi = -cutoff; xi <= cutoff; ++xi) {
      if (xi == 0) continue;
      const double a = w(xi) / std::sqrt(bracket(xi) * bracket(2.0 * xi + 1.0));
      f.at(xi) = chi(t) * a * std::polar(1.0, -static_cast<double>(xi + 1) * (xi + 1) * t);
    }
    return f;
  });
  out.u2 = Trajectory::sample(support, steps, [&](double t) {
    SpectralField f(cutoff);
    f.at(1) = chi(t) / std::sqrt(bracket(1.0)) * std::polar(1.0, -t);
    return f;
  });
  out.u3 = Trajectory::sample(support, steps, [&](double t) {
    SpectralField f(cutoff);
    for (int xi = -cutoff; xi <= cutoff; ++xi)
      f.at(xi) = chi(t) * w(xi) / std::sqrt(bracket(xi)) *
                 std::polar(1.0, -static_cast<double>(xi) * xi * t);
    return f;
  });
  return out;
}

ScanReport trilinear_ratio_scan(double q, double r, const RatioScanOptions& opt) {
  check_options(opt);
  require(q >= 4.0 / 3.0 && q <= r && r <= 2.0, "trilinear scan needs 4/3 <= q <= r <= 2");
  const int n = opt.cutoff;
  const int steps = scan_steps(opt, 8.0 * n * n + 12.0);
  Search search("trilinear_ratio", 3, steps, opt,
                [q, r](const auto& u) { return trilinear_sides(u, q, r); });
  auto rep = search.run();
  if (opt.inject_counterexample) {
    const auto fam = counterexample_trajectories(n, opt.support, steps);
    const auto s = trilinear_sides({&fam.u1, &fam.u2, &fam.u3}, q, r);
    rep.rows.push_back({{0.0, 3.0}, {s.lhs, s.rhs, s.lhs / s.rhs}});
    rep.summary["injected_ratio"] = s.lhs / s.rhs;
    rep.summary["max_ratio"] = std::max(rep.summary["max_ratio"], s.lhs / s.rhs);
  }
  rep.summary["q"] = q;
  rep.summary["r"] = r;
  if (q == 4.0 / 3.0 || r == 4.0 / 3.0) rep.notes["endpoint"] = "r = 4/3 lies outside the estimate's range";
  return rep;
}

ScanReport strichartz_ratio_scan(double s, double b, const RatioScanOptions& opt) {
  check_options(opt);
  require(b > 1.0 / 3.0 && b < 0.5, "Strichartz scan needs 1/3 < b < 1/2");
  require(s > 3.0 * (0.5 - b), "Strichartz scan needs s > 3 (1/2 - b)");
  const int n = opt.cutoff;
  const int steps = scan_steps(opt, 8.0 * n * n + 12.0);
  const auto l2 = NormSpec::spacetime(0.0, 0.0, 2.0, 2.0);
  const auto xs = NormSpec::spacetime(s, b, 2.0, 2.0);
  const auto x0 = NormSpec::spacetime(0.0, b, 2.0, 2.0);
  Search search("strichartz_ratio", 3, steps, opt, [&](const auto& u) {
    const auto p = combine(u, [](const auto& a) { return nonlinear::cubic_product(*a[0], *a[1], *a[2]); });
    return Sides{xst_norm(p, l2), xst_norm(*u[0], xs) * xst_norm(*u[1], xs) * xst_norm(*u[2], x0)};
  });
  auto rep = search.run();
  rep.summary["s"] = s;
  rep.summary["b"] = b;
  return rep;
}

ScanReport quintilinear_ratio_scan(double q, double r, double b, const RatioScanOptions& opt) {
  check_options(opt);
  require(q > 4.0 / 3.0 && q <= r && r <= 2.0, "quintilinear scan needs 4/3 < q <= r <= 2");
  require(b > 1.0 / 6.0 + 1.0 / (3.0 * q), "quintilinear scan needs b > 1/6 + 1/(3q)");
  const int n = opt.cutoff;
  const int steps = scan_steps(opt, 27.0 * n * n + 20.0);
  const auto out_spec = NormSpec::spacetime(0.5, -b, r, 2.0);
  const auto r_spec = NormSpec::spacetime(0.5, b, r, 2.0);
  const auto q_spec = NormSpec::spacetime(0.5, b, q, 2.0);
  Search search("quintilinear_ratio", 5, steps, opt, [&](const auto& u) {
    const auto p = combine(u, [](const auto& a) {
      return quintic_product(*a[0], *a[1], *a[2], *a[3], *a[4]);
    });
    std::vector<double> nr, nq;
    for (const auto* t : u) {
      nr.push_back(xst_norm(*t, r_spec));
      nq.push_back(q == r ? nr.back() : xst_norm(*t, q_spec));
    }
    double rhs = 0.0;
    for (int k = 0; k < 5; ++k) {
      double term = nr[k];
      for (int i = 0; i < 5; ++i)
        if (i != k) term *= nq[i];
      rhs += term;
    }
    return Sides{xst_norm(p, out_spec), rhs};
  });
  auto rep = search.run();
  const auto pw = quintilinear_plane_wave_check(1, b, opt.support);
  rep.summary["plane_wave_lhs_error"] = std::abs(pw.lhs - pw.lhs_closed) / pw.lhs_closed;
  rep.summary["plane_wave_rhs_error"] = std::abs(pw.rhs - pw.rhs_closed) / pw.rhs_closed;
  rep.summary["q"] = q;
  rep.summary["r"] = r;
  rep.summary["b"] = b;
  return rep;
}

SlotComparison strichartz_slot_comparison(double s, double b, int low, int high, double support) {
  const int n = std::max(std::abs(low), std::abs(high));
  const int steps = steps_for_modulation(8.0 * n * n + 12.0, support);
  auto wave = [&](int freq) {
    return Trajectory::sample(support, steps, [&](double t) {
      auto f = SpectralField::plane_wave(n, bump_cutoff(2.0 * t / support), freq);
      f.at(freq) *= std::polar(1.0, -static_cast<double>(freq) * freq * t);
      return f;
    });
  };
  const auto lo = wave(low), hi = wave(high);
  const auto l2 = NormSpec::spacetime(0.0, 0.0, 2.0, 2.0);
  const auto xs = NormSpec::spacetime(s, b, 2.0, 2.0);
  const auto x0 = NormSpec::spacetime(0.0, b, 2.0, 2.0);
  auto lhs = [&](const Trajectory& a, const Trajectory& c, const Trajectory& d) {
    return xst_norm(combine({&a, &c, &d}, [](const auto& v) {
      return nonlinear::cubic_product(*v[0], *v[1], *v[2]);
    }), l2);
  };
  SlotComparison out;
  out.lhs_slot1 = lhs(hi, lo, lo);
  out.rhs_slot1 = xst_norm(hi, xs) * xst_norm(lo, xs) * xst_norm(lo, x0);
  out.lhs_slot3 = lhs(lo, lo, hi);
  out.rhs_slot3 = xst_norm(lo, xs) * xst_norm(lo, xs) * xst_norm(hi, x0);
  return out;
}

double free_wave_constant(double b, int power, double support) {
  require(power >= 1 && support > 0.0, "bad free-wave parameters");
  using GL = boost::math::quadrature::gauss<double, 40>;
  // chi(2t/support)^power is even and supported in |t| < support
  auto ft = [&](double sigma) {
    auto f = [&](double t) { return std::pow(bump_cutoff(2.0 * t / support), power) * std::cos(t * sigma); };
    double acc = 0.0;
    const int pieces = 8 + static_cast<int>(std::abs(sigma) * support / 4.0);
    for (int i = 0; i < pieces; ++i)
      acc += GL::integrate(f, support * i / pieces, support * (i + 1) / pieces);
    return 2.0 * acc / kSqrtTwoPi;
  };
  // the transform decays faster than any power; integrate until it is negligible
  double total = 0.0;
  const double h = 0.25 / support;
  double tail = 0.0;
  for (int k = 0;; ++k) {
    const double sigma = k * h;
    const double v = ft(sigma);
    const double term = std::pow(bracket(sigma), 2.0 * b) * v * v;
    total += (k == 0 ? 0.5 : 1.0) * term;
    tail = k > 0 ? term : tail;
    if (k > 200 && tail < 1e-13 * total) break;
    if (k > 200000) break;
  }
  // even integrand, trapezoid on [0, inf) doubled
  return std::sqrt(2.0 * h * total);
}

PlaneWaveCheck quintilinear_plane_wave_check(int n, double b, double support, int steps) {
  require(n >= 0, "frequency must be nonnegative");
  const int cutoff = std::max(n, 1);
  auto wave = Trajectory::sample(support, steps, [&](double t) {
    auto f = SpectralField::plane_wave(cutoff, bump_cutoff(2.0 * t / support), n);
    f.at(n) *= std::polar(1.0, -static_cast<double>(n) * n * t);
    return f;
  });
  const auto p = combine({&wave, &wave, &wave, &wave, &wave}, [](const auto& a) {
    return quintic_product(*a[0], *a[1], *a[2], *a[3], *a[4]);
  });
  PlaneWaveCheck out;
  const double w = std::sqrt(bracket(n)) * kSqrtTwoPi;
  out.lhs = xst_norm(p, NormSpec::spacetime(0.5, -b, 2.0, 2.0));
  out.lhs_closed = w * free_wave_constant(-b, 5, support);
  const double one = xst_norm(wave, NormSpec::spacetime(0.5, b, 2.0, 2.0));
  out.rhs = 5.0 * std::pow(one, 5);
  out.rhs_closed = 5.0 * std::pow(w * free_wave_constant(b, 1, support), 5);
  return out;
}

}  // namespace dnls::estimates
