#pragma once

#include <cstdint>

namespace drsub {

// Counter-based 64-bit generator: output k is mix64(key + k * golden) with the
// SplitMix64 finalizer. The sequence depends only on (seed, counter), so runs
// are reproducible across platforms and streams can be split cheaply.
class Rng {
 public:
  explicit Rng(uint64_t seed) : key_(mix64(seed ^ 0x9e3779b97f4a7c15ull)) {}

  uint64_t next_u64() { return mix64(key_ + (++counter_) * 0x9e3779b97f4a7c15ull); }

  // [0, 1)
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // inclusive on both ends
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  // Independent stream derived from this generator's key and a stream id;
  // does not advance this generator.
  Rng split(uint64_t stream) const { return Rng(mix64(key_ ^ mix64(stream + 0xd6e8feb86659fd93ull))); }

  static uint64_t mix64(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace drsub
