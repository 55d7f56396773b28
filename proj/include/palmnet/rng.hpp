#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace palmnet {

// Counter-style splitmix64 generator. Pure integer state transitions plus
// power-of-two scaling, so identical seeds give identical sequences on every
// platform. std::mt19937 with std distributions would not: the distributions
// are implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), state_(seed) {}

  uint64_t seed() const { return seed_; }

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // [0,1) with 24 random bits.
  float uniform_f32() { return static_cast<float>(next_u64() >> 40) * 0x1.0p-24f; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  float uniform_f32(float lo, float hi) { return lo + (hi - lo) * uniform_f32(); }

  // [0,n). Modulo bias is below 2^-32 for every n used here.
  uint64_t uniform_int(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  template <typename V>
  void shuffle(std::vector<V>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent stream derived from the original seed, not the current state.
  Rng fork(uint64_t stream) const { return Rng(mix(seed_, stream)); }

  static uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9E3779B97F4A7C15ull * (b + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  uint64_t seed_;
  uint64_t state_;
};

}  // namespace palmnet
