#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ecg {

// Deterministic random source. std::mt19937_64 output is pinned by the
// standard, but the std distributions are not, so the few draws we need are
// implemented here directly. Reports quote (seed, trial) pairs and must
// reproduce bit-for-bit across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // Uniform in [0, n), n >= 1. Rejection sampling, no modulo bias.
  int below(int n) {
    uint64_t bound = ~uint64_t{0} - ~uint64_t{0} % static_cast<uint64_t>(n);
    uint64_t x;
    do {
      x = gen_();
    } while (x >= bound);
    return static_cast<int>(x % static_cast<uint64_t>(n));
  }

  bool chance(double p) {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p;
  }

  // Failure count before the first success; caller caps the tail.
  int geometric(double p, int cap) {
    int k = 0;
    while (k < cap && !chance(p)) ++k;
    return k;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(static_cast<int>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent per-trial stream so verdicts do not depend on how trials are
  // sharded across workers. splitmix64 finalizer over (seed, trial).
  static Rng for_trial(uint64_t seed, uint64_t trial) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ecg
