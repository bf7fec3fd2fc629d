#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace netmult {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Derives an independent stream seed from a base seed and a tuple of indices,
/// so results do not depend on evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(seed);
  for (std::uint64_t v : path) h = splitmix64(h ^ splitmix64(v + 0x632be59bd9b4e019ull));
  return h;
}

/// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
inline std::complex<double> complex_gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 0.7071067811865476);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace netmult
