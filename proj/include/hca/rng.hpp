#pragma once

#include <cstdint>

namespace hca {

// Counter-based splittable generator (splitmix64 finalizer over key+counter).
// Deterministic across platforms; child streams never overlap the parent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

  std::uint64_t next_u64() {
    std::uint64_t z = key_ + 0x9e3779b97f4a7c15ull * ++counter_;
    return mix(z);
  }

  // Independent stream labelled by idx; safe to draw from concurrently.
  Rng split(std::uint64_t idx) const {
    Rng child(0);
    child.key_ = mix(key_ ^ mix(idx + 0xbf58476d1ce4e5b9ull));
    child.counter_ = 0;
    return child;
  }

  // Uniform in [0, n), n > 0; rejection-free modulo is fine at these scales.
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Uniform in [0, 1).
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  bool coin() { return next_u64() & 1; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace hca
