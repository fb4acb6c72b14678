#pragma once

// Deterministic counter-based pseudo-random numbers (splitmix64 finalizer).
// The i-th raw output depends only on (seed, i), so parallel optimizer
// restarts can draw from per-start streams without sharing state, and any
// run is reproducible from its seed alone.

#include <cstdint>
#include <vector>

#include "mono/sphere.hpp"

namespace mono {

// finalize(seed + (i+1) * golden gamma); the canonical splitmix64 sequence.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

  // Independent stream: seeded from the index-th raw output of `seed`.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(splitmix64_at(seed, index));
  }

  std::uint64_t next() { return splitmix64_at(seed_, counter_++); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01();
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Standard normal via Box-Muller (second deviate cached).
  double normal();

  // Uniform on S^2.
  Vec3 unit_vector();
  std::vector<Vec3> sphere_points(std::size_t n);

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace mono
