#pragma once

// Projected gradient descent on products of spheres.  The objective is the
// off-diagonal Gram energy of a reproducing-kernel ensemble:
//   harmonic  (2k+1 points): sum_{a<b} P_k(<eta_a, eta_b>)^2
//   monogenic (k+1  points): sum_{a<b} (k+1)^2 P_k(t)^2 + (1-t^2) C_{k-1}^{3/2}(t)^2
// (the squared entry norms of the respective kernels, up to the constant
// diagonal).  Minimizing it drives the kernel Gram toward diagonal, which is
// what makes the resulting orthonormalized basis near-zonal.
//
// One move updates a single point along a great circle in the steepest
// descent direction with Armijo backtracking; sweeps are cyclic by default.
// Multi-start is deterministic: start i draws from the counter-based stream
// (seed, i), so results are reproducible and thread-count independent.

#include <cstdint>
#include <vector>

#include "mono/sphere.hpp"

namespace mono {

enum class BasisKind { kHarmonic, kMonogenic };

// Number of ensemble points the basis construction expects.
int ensemble_size(BasisKind kind, int k);

// The pair energy; accepts any number of points (size checks belong to the
// basis builders, not the objective).
double objective(BasisKind kind, int k, const std::vector<Vec3>& points);

struct GradientInfo {
  Vec3 direction{0.0, 0.0, 0.0};  // unit tangent at points[l], or 0
  double grad_norm = 0.0;         // |projected gradient| / 2
  double derivative = 0.0;        // dG/dt at t=0 along direction = -2 grad_norm
  bool zero = false;              // gradient below tolerance: stationary point
};

// Steepest-descent data for moving the single point points[l].
GradientInfo steepest_direction(BasisKind kind, int k,
                                const std::vector<Vec3>& points, int l,
                                double grad_tol = 1e-10);

struct LineSearchParams {
  double t_max = 0.0;      // initial arc step; 0 means pi/4
  double shrink = 0.5;     // backtracking factor
  double armijo = 1e-4;    // sufficient-decrease constant
  int max_halvings = 60;
};

struct OptimizerConfig {
  BasisKind kind = BasisKind::kHarmonic;
  int k = 1;
  int starts = 1;
  std::uint64_t seed = 0;
  int max_iters = 500;      // full sweeps per start
  double grad_tol = 1e-10;  // stationarity / sweep-improvement tolerance
  LineSearchParams line_search{};
  bool greedy = false;      // best-single-move iteration instead of cyclic
  int threads = 0;          // 0: hardware concurrency
};

struct OptimizationResult {
  std::vector<Vec3> points;
  double objective = 0.0;
  int iterations = 0;  // sweeps performed
  bool converged = false;
  std::vector<double> trace;  // objective after each sweep (monotone)
  int start_index = 0;
};

// Descend from an explicit starting ensemble (must have ensemble_size(kind,k)
// points; throws std::invalid_argument otherwise).
OptimizationResult optimize_single(const OptimizerConfig& config,
                                   const std::vector<Vec3>& start_points,
                                   int start_index = 0);

struct MultiStartResult {
  OptimizationResult best;  // lowest objective; ties -> lowest start index
  std::vector<double> objectives;  // per start
  int converged_count = 0;
};

// Run config.starts independent descents in parallel and keep the best.
MultiStartResult optimize(const OptimizerConfig& config);

}  // namespace mono
