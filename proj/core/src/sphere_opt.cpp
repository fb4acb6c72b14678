#include "mono/sphere_opt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "mono/orthopoly.hpp"
#include "mono/rng.hpp"

namespace mono {

namespace {

// Pair energy term f(t) and the half-derivative "bracket" f'(t)/2 used by
// the gradient; both objectives share the machinery.
double pair_energy(BasisKind kind, int k, double t) {
  const double p = legendre(k, t);
  if (kind == BasisKind::kHarmonic) return p * p;
  const double c32 = k >= 1 ? gegenbauer(k - 1, 1.5, t) : 0.0;
  const double kp1 = k + 1.0;
  return kp1 * kp1 * p * p + (1.0 - t * t) * c32 * c32;
}

double pair_bracket(BasisKind kind, int k, double t) {
  const double p = legendre(k, t);
  const double c32 = k >= 1 ? gegenbauer(k - 1, 1.5, t) : 0.0;
  if (kind == BasisKind::kHarmonic) return p * c32;
  const double dc32 = k >= 2 ? 3.0 * gegenbauer(k - 2, 2.5, t) : 0.0;
  const double kp1 = k + 1.0;
  return kp1 * kp1 * p * c32 - t * c32 * c32 + (1.0 - t * t) * c32 * dc32;
}

}  // namespace

int ensemble_size(BasisKind kind, int k) {
  if (k < 0) throw std::invalid_argument("ensemble_size: k must be >= 0");
  return kind == BasisKind::kHarmonic ? 2 * k + 1 : k + 1;
}

double objective(BasisKind kind, int k, const std::vector<Vec3>& points) {
  double acc = 0.0;
  for (std::size_t a = 0; a + 1 < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      acc += pair_energy(kind, k, dot(points[a], points[b]));
    }
  }
  return acc;
}

GradientInfo steepest_direction(BasisKind kind, int k,
                                const std::vector<Vec3>& points, int l,
                                double grad_tol) {
  if (l < 0 || static_cast<std::size_t>(l) >= points.size()) {
    throw std::out_of_range("steepest_direction: point index out of range");
  }
  const Vec3& x = points[static_cast<std::size_t>(l)];
  Vec3 g{0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (j == static_cast<std::size_t>(l)) continue;
    const double t = dot(points[j], x);
    const double b = pair_bracket(kind, k, t);
    // tangent part of eta_j at x, weighted by f'(t)/2
    g = add(g, scale(sub(points[j], scale(x, t)), b));
  }
  GradientInfo info;
  info.grad_norm = norm(g);
  if (info.grad_norm < grad_tol) {
    info.zero = true;
    return info;
  }
  info.direction = scale(g, -1.0 / info.grad_norm);
  info.derivative = -2.0 * info.grad_norm;
  return info;
}

OptimizationResult optimize_single(const OptimizerConfig& config,
                                   const std::vector<Vec3>& start_points,
                                   int start_index) {
  const std::size_t n =
      static_cast<std::size_t>(ensemble_size(config.kind, config.k));
  if (start_points.size() != n) {
    throw std::invalid_argument(
        "optimize_single: wrong ensemble size for kind/k");
  }

  LineSearchParams ls = config.line_search;
  if (ls.t_max <= 0.0) ls.t_max = 0.25 * std::numbers::pi;

  OptimizationResult result;
  result.start_index = start_index;
  result.points.reserve(n);
  for (const Vec3& p : start_points) result.points.push_back(normalized(p));

  double current = objective(config.kind, config.k, result.points);
  result.trace.push_back(current);

  // One candidate move of a single point; returns the achieved objective or
  // `current` when no acceptable step exists.
  const auto try_move = [&](const std::vector<Vec3>& pts, int l,
                            Vec3& out_point, double base) -> double {
    const GradientInfo info =
        steepest_direction(config.kind, config.k, pts, l, config.grad_tol);
    if (info.zero) return base;
    std::vector<Vec3> trial = pts;
    double t = ls.t_max;
    for (int h = 0; h < ls.max_halvings; ++h) {
      trial[static_cast<std::size_t>(l)] =
          geodesic_step(pts[static_cast<std::size_t>(l)], info.direction, t);
      const double candidate = objective(config.kind, config.k, trial);
      if (candidate <= base + ls.armijo * t * info.derivative) {
        out_point = trial[static_cast<std::size_t>(l)];
        return candidate;
      }
      t *= ls.shrink;
    }
    return base;
  };

  for (int sweep = 0; sweep < config.max_iters; ++sweep) {
    const double before = current;
    if (!config.greedy) {
      for (std::size_t l = 0; l < n; ++l) {
        Vec3 moved{};
        const double achieved =
            try_move(result.points, static_cast<int>(l), moved, current);
        if (achieved < current) {
          result.points[l] = moved;
          current = achieved;
        }
      }
    } else {
      // Greedy: evaluate every single-point move, apply only the best.
      double best_val = current;
      std::size_t best_l = n;
      Vec3 best_point{};
      for (std::size_t l = 0; l < n; ++l) {
        Vec3 moved{};
        const double achieved =
            try_move(result.points, static_cast<int>(l), moved, current);
        if (achieved < best_val) {
          best_val = achieved;
          best_l = l;
          best_point = moved;
        }
      }
      if (best_l < n) {
        result.points[best_l] = best_point;
        current = best_val;
      }
    }
    ++result.iterations;
    result.trace.push_back(current);
    if (before - current < config.grad_tol) {
      result.converged = true;
      break;
    }
  }
  result.objective = current;
  return result;
}

MultiStartResult optimize(const OptimizerConfig& config) {
  if (config.starts < 1) {
    throw std::invalid_argument("optimize: starts must be >= 1");
  }
  const std::size_t n =
      static_cast<std::size_t>(ensemble_size(config.kind, config.k));

  std::vector<OptimizationResult> results(
      static_cast<std::size_t>(config.starts));
  const auto run_start = [&](int s) {
    SplitMix64 rng = SplitMix64::stream(config.seed, static_cast<std::uint64_t>(s));
    results[static_cast<std::size_t>(s)] =
        optimize_single(config, rng.sphere_points(n), s);
  };

  int threads = config.threads;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }
  threads = std::min(threads, config.starts);

  if (threads == 1) {
    for (int s = 0; s < config.starts; ++s) run_start(s);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t]() {
        for (int s = t; s < config.starts; s += threads) run_start(s);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  MultiStartResult multi;
  multi.objectives.reserve(results.size());
  int best = -1;
  for (int s = 0; s < config.starts; ++s) {
    const OptimizationResult& r = results[static_cast<std::size_t>(s)];
    multi.objectives.push_back(r.objective);
    if (r.converged) ++multi.converged_count;
    if (best < 0 ||
        r.objective < results[static_cast<std::size_t>(best)].objective) {
      best = s;  // strict '<' keeps the lowest index on ties
    }
  }
  multi.best = results[static_cast<std::size_t>(best)];
  return multi;
}

}  // namespace mono
