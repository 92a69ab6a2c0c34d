#ifndef SPECLAB_RNG_HPP
#define SPECLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace speclab {

// splitmix64 finalizer; full-period mixer over uint64.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-replication seed derivation: decorrelates consecutive indices so
// replications can run on independent workers yet stay reproducible.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
  return splitmix64(splitmix64(base_seed) ^ splitmix64(index + 1));
}

inline std::vector<double> standard_normal(std::size_t count,
                                           std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<double> out(count);
  for (auto& v : out) v = dist(gen);
  return out;
}

}  // namespace speclab

#endif  // SPECLAB_RNG_HPP
