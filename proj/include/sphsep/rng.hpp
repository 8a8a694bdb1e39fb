#pragma once

#include "sphsep/types.hpp"

#include <cstdint>

namespace sphsep {

// SplitMix64. Self-contained so streams replay byte-for-byte on any
// platform, independent of standard-library distributions.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Lattice rational: numerator in [lo, hi], fixed denominator.
  Rational lattice(std::int64_t lo = -100, std::int64_t hi = 100, std::int64_t den = 100) {
    return Rational(int_in(lo, hi)) / Rational(den);
  }

  VectorXr lattice_vector(Index n, std::int64_t lo = -100, std::int64_t hi = 100,
                          std::int64_t den = 100) {
    VectorXr v(n);
    for (Index i = 0; i < n; ++i) v[i] = lattice(lo, hi, den);
    return v;
  }

  // Lattice vector rejected until nonzero.
  VectorXr nonzero_lattice_vector(Index n, std::int64_t lo = -100, std::int64_t hi = 100,
                                  std::int64_t den = 100) {
    for (;;) {
      VectorXr v = lattice_vector(n, lo, hi, den);
      for (Index i = 0; i < n; ++i)
        if (v[i] != 0) return v;
    }
  }
};

// Documented per-trial derivation: trial k of master seed s draws from
// splitmix64 seeded with s + (k+1) * golden ratio increment.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial_index) {
  Rng mix(master + (trial_index + 1) * 0x9E3779B97F4A7C15ull);
  return mix.next();
}

}  // namespace sphsep
