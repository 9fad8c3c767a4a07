#pragma once

#include <cstdint>
#include <string_view>

#include "geo/lie_algebra.hpp"
#include "geo/rational.hpp"

namespace geo {

/// Deterministic 64-bit generator (splitmix64).  Chosen over the standard
/// <random> engines because its output stream is fully specified by the
/// algorithm, so a seed reproduces bit-identical samples on every platform
/// and standard library.  The generator name is recorded in verification
/// report headers.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline constexpr const char* kGeneratorName = "splitmix64";

/// Stable 64-bit hash (FNV-1a) used to give each verification suite its own
/// substream of a shared seed.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Random-coefficient source for the verification suites: numerators
/// uniform in −N..N, denominators in 1..M.
struct RationalSampler {
  SplitMix64 rng;
  long long num_range;  // N
  long long den_range;  // M

  RationalSampler(std::uint64_t seed, long long n, long long m)
      : rng(seed), num_range(n), den_range(m) {}

  Rational value() {
    const long long num =
        static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * num_range + 1))) - num_range;
    const long long den = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(den_range)));
    return Rational(Rational::Int(num), Rational::Int(den));
  }

  Rational nonzero() {
    const long long num = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(num_range)));
    const long long sign = rng.below(2) == 0 ? 1 : -1;
    const long long den = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(den_range)));
    return Rational(Rational::Int(sign * num), Rational::Int(den));
  }

  SchemaParams<Rational> schema() {
    SchemaParams<Rational> p;
    for (const auto& [name, member] : schema_fields<Rational>()) p.*member = value();
    return p;
  }

  /// Fully random antisymmetric bracket table (generally not a Lie algebra).
  LieAlgebra4<Rational> antisymmetric_table() {
    std::vector<std::tuple<Axis, Axis, FrameVector<Rational>>> entries;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        entries.emplace_back(Axis(i), Axis(j), FrameVector<Rational>{value(), value(), value(), value()});
    return LieAlgebra4<Rational>::from_table(entries);
  }
};

}  // namespace geo
