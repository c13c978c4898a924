#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace hsf {

/// Deterministic random source. Every random quantity in the library flows
/// from an explicit 64-bit seed through this type. std::mt19937_64 is fully
/// specified by the standard, but std::*_distribution output is
/// implementation-defined, so the uniform and normal transforms are written
/// out here; identical seeds give identical streams on every platform.
///
/// The two-argument constructor derives an independent substream from
/// (seed, stream). Loops that draw one generator per restart index give the
/// same set of starts no matter how the loop is ordered or parallelized.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  Rng(std::uint64_t seed, std::uint64_t stream)
      : engine_(mix(seed + 0x9e3779b97f4a7c15ull * (stream + 1))) {}

  /// Uniform in [0, 1) with 53 random mantissa bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform_signed() { return 2.0 * uniform() - 1.0; }

  /// Standard normal via Box-Muller; the second value of each pair is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = uniform();
    while (u == 0.0) u = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double a = 2.0 * 3.14159265358979323846 * uniform();
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Eigen::VectorXd normal_vector(Eigen::Index n) {
    Eigen::VectorXd x(n);
    for (Eigen::Index i = 0; i < n; ++i) x[i] = normal();
    return x;
  }

 private:
  // splitmix64 finalizer; spreads small seeds over the full state space and
  // decorrelates neighbouring stream indices
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace hsf
