#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace qdig {

// Finalizer of splitmix64. Bijective on 64-bit values.
std::uint64_t mix64(std::uint64_t x);

// FNV-1a over raw bytes. Used wherever a string feeds a seed so results do
// not depend on std::hash, which varies across standard libraries.
std::uint64_t fnv1a64(std::string_view bytes);

// All randomness in the engine flows through this generator so that runs are
// reproducible bit-for-bit on any platform. std::mt19937 plus the standard
// distributions would not give that guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53 bits of precision.
  double next_double();

  // Uniform in [0, bound), unbiased via rejection. bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound);

  // Fisher-Yates using next_below.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      using std::swap;
      swap(values[i - 1], values[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed from the master seed, a purpose label,
// and up to two counters. The scheme is fixed: adding instructions or
// rollouts never perturbs seeds handed to unrelated streams.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view label,
                          std::uint64_t a = 0, std::uint64_t b = 0);

}  // namespace qdig
