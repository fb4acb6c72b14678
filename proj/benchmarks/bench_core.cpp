#include <benchmark/benchmark.h>

#include <vector>

#include "mono/clifford.hpp"
#include "mono/harmonics.hpp"
#include "mono/monogenics.hpp"
#include "mono/orthopoly.hpp"
#include "mono/qlinalg.hpp"
#include "mono/rng.hpp"
#include "mono/sphere.hpp"
#include "mono/sphere_opt.hpp"

namespace {

void BM_MultivectorProduct(benchmark::State& state) {
  mono::SplitMix64 rng(1);
  mono::Multivector3 a, b;
  for (int i = 0; i < 8; ++i) {
    a[i] = rng.uniform(-1.0, 1.0);
    b[i] = rng.uniform(-1.0, 1.0);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_MultivectorProduct);

void BM_JacobiEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mono::jacobi(n, 1.0, 1.0, x));
  }
}
BENCHMARK(BM_JacobiEval)->Arg(4)->Arg(8)->Arg(16);

void BM_EvalF(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  const mono::SpherePoint p{0.7, 1.1};
  for (auto _ : state) {
    for (int n = 0; n <= deg; ++n) {
      benchmark::DoNotOptimize(mono::eval_F(deg, n, p));
    }
  }
}
BENCHMARK(BM_EvalF)->Arg(2)->Arg(4)->Arg(6);

void BM_QuadratureGram(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  const mono::QuadratureRule rule = mono::product_rule(deg + 3);
  for (auto _ : state) {
    double worst = 0.0;
    for (int a = 0; a <= deg; ++a) {
      for (int b = a + 1; b <= deg; ++b) {
        mono::Multivector3 acc;
        for (std::size_t i = 0; i < rule.size(); ++i) {
          acc += rule.weights[i] * (mono::conj(mono::eval_F(deg, a, rule.nodes[i])) *
                                    mono::eval_F(deg, b, rule.nodes[i]));
        }
        worst = std::max(worst, acc.max_abs());
      }
    }
    benchmark::DoNotOptimize(worst);
  }
}
BENCHMARK(BM_QuadratureGram)->Arg(2)->Arg(4);

void BM_KernelK(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  mono::SplitMix64 rng(2);
  const mono::Vec3 x = rng.unit_vector();
  const mono::Vec3 y = rng.unit_vector();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mono::kernel_K(3, k, x, y));
  }
}
BENCHMARK(BM_KernelK)->Arg(2)->Arg(6);

void BM_HermitianInvSqrt(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  mono::SplitMix64 rng(3);
  mono::ComplexMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b(i, j) = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
  }
  mono::ComplexMatrix c = mono::adjoint(b) * b;
  for (std::size_t i = 0; i < n; ++i) c(i, i) += 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mono::hermitian_inv_sqrt(c));
  }
}
BENCHMARK(BM_HermitianInvSqrt)->Arg(6)->Arg(12);

void BM_ObjectiveSweep(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  mono::SplitMix64 rng(4);
  const std::vector<mono::Vec3> pts = rng.sphere_points(
      static_cast<std::size_t>(mono::ensemble_size(mono::BasisKind::kMonogenic, k)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mono::objective(mono::BasisKind::kMonogenic, k, pts));
    for (std::size_t l = 0; l < pts.size(); ++l) {
      benchmark::DoNotOptimize(mono::steepest_direction(
          mono::BasisKind::kMonogenic, k, pts, static_cast<int>(l)));
    }
  }
}
BENCHMARK(BM_ObjectiveSweep)->Arg(2)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
