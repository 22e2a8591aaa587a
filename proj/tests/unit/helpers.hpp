#pragma once

#include <cstdint>
#include <vector>

#include "lnfft/bench.hpp"
#include "lnfft/types.hpp"

namespace lnfft::testing {

inline NonuniformGrid jittered_grid(std::size_t n, std::uint64_t seed, double jitter = 0.6) {
  return generate_trial(n, seed, jitter).grid;
}

inline CVector random_vector(std::size_t n, std::uint64_t seed) {
  return generate_trial(n < 2 ? 2 : n, seed ^ 0xabcdef12345ULL, 0.0).amplitudes;
}

inline NonuniformGrid uniform_grid(std::size_t n) {
  std::vector<double> t(n);
  for (std::size_t p = 0; p < n; ++p) t[p] = static_cast<double>(p) / static_cast<double>(n);
  return validate_grid(t);
}

}  // namespace lnfft::testing
