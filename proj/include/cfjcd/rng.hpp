#pragma once

#include "cfjcd/types.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>

namespace cfjcd {

// Deterministic counter-based stream split: every Monte Carlo task derives its
// own generator from (master seed, path of ids), so tasks can run in any order
// or in parallel and still reproduce bit-identical draws.
std::uint64_t splitmix64(std::uint64_t& state);

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::mt19937_64& engine() { return engine_; }

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  // Circularly-symmetric complex normal with variance `var` (per complex sample).
  cplx cnormal(double var) {
    const double s = std::sqrt(var / 2.0);
    const double re = normal();
    const double im = normal();
    return {s * re, s * im};
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

RngStream derive_stream(std::uint64_t master, std::initializer_list<std::uint64_t> path);

}  // namespace cfjcd
