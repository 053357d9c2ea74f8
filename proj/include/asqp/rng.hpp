// rng.hpp - deterministic splitmix64 generator.
//
// std::uniform_int_distribution is implementation-defined, so corpora built
// with it would not be byte-identical across standard libraries. Everything
// seeded in this toolkit (synthesis, simulation) goes through this generator
// instead; its output is part of the reproducibility contract.
#pragma once

#include <cstdint>

namespace asqp {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::uint64_t state_;
};

// Stable mix of two seeds. Per-example streams are derived as
// derive_seed(global_seed, example_index) so output does not depend on
// processing order.
inline std::uint64_t derive_seed(std::uint64_t a, std::uint64_t b) {
  Rng r(a ^ (b * 0x9e3779b97f4a7c15ULL));
  r.next();
  return r.next() ^ b;
}

}  // namespace asqp
