#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace treeswap {

std::uint64_t fnv1a64(std::string_view data);
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic random stream. All sampling goes through the methods below;
// std::uniform_int_distribution and friends are implementation-defined and
// would break cross-platform reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0, n). n must be > 0.
  std::size_t below(std::size_t n);

  // Uniform in [0, 1) with 53-bit resolution.
  double real01();

  // Child stream for an independent pipeline stage. Deriving the same label
  // from the same seed always yields the same stream, regardless of how much
  // this stream has been consumed.
  Rng derive(std::string_view label) const;

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      using std::swap;
      swap(v[i - 1], v[below(i)]);
    }
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace treeswap
