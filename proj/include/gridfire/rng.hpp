#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace gridfire {

// Deterministic seeded generator (splitmix64). All randomness in the
// simulator flows from a single 64-bit seed through this type, so results
// are reproducible across platforms and thread counts.
class SplitMix64 {
public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<std::uint64_t>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1).
  double next_double() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

// Order-free hash combine; used to key per-(cell, axis) draws so that
// identical seeds give identical streams no matter how work is split
// across threads.
inline std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
  return g();
}

// Standard normal via Box-Muller from two uniform draws.
template <class Urbg>
double standard_normal(Urbg& g) {
  // u1 in (0,1] so the log is finite.
  double u1 = (static_cast<double>(g() >> 11) + 1.0) * 0x1.0p-53;
  double u2 = static_cast<double>(g() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Multiplies a base rate by a draw from N(1, cv) truncated at zero.
// cv = 0 is an exact identity (no draw is consumed).
template <class Urbg>
double perturb_ros(double base, double cv, Urbg& g) {
  if (cv <= 0.0) return base;
  double factor = 1.0 + cv * standard_normal(g);
  return base * std::max(0.0, factor);
}

// The perturbation factor for one (cell, axis) pair. A pure function of the
// key, so every period sees the same factor that was "drawn" at ignition.
inline double keyed_ros_factor(std::uint64_t run_seed, int cell_id, int axis, double cv) {
  if (cv <= 0.0) return 1.0;
  SplitMix64 g(hash_mix(hash_mix(run_seed, static_cast<std::uint64_t>(cell_id)),
                        static_cast<std::uint64_t>(axis) + 0x51ed2701ULL));
  double factor = 1.0 + cv * standard_normal(g);
  return std::max(0.0, factor);
}

}  // namespace gridfire
