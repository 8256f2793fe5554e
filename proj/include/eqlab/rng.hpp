#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "eqlab/types.hpp"

namespace eqlab {

using Rng = std::mt19937_64;

// Deterministically derive an independent stream seed from a base seed and a
// role tag, so every component of a run gets its own reproducible stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (char c : tag) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    h *= 0x100000001b3ULL;
  }
  // splitmix64 finalizer
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

inline Matrix uniform_matrix(Eigen::Index rows, Eigen::Index cols, double lo,
                             double hi, Rng& rng) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

// Weight init used throughout: uniform in [-sqrt(1/fan_in), +sqrt(1/fan_in)].
inline Matrix scaled_uniform(Eigen::Index rows, Eigen::Index cols,
                             Eigen::Index fan_in, Rng& rng) {
  const double bound = std::sqrt(1.0 / static_cast<double>(fan_in));
  return uniform_matrix(rows, cols, -bound, bound, rng);
}

}  // namespace eqlab
