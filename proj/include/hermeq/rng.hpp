#pragma once

#include <cstdint>

#include "hermeq/matrix.hpp"

namespace hermeq {

// splitmix64 stream. Hand-rolled (rather than <random> distributions) so the
// exact draw sequence is identical on every platform and standard library,
// which keeps seeded reports bit-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough integer in [lo, hi]; modulo bias is irrelevant for test
  // instance generation and keeping this trivial keeps it portable.
  long nextInt(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }

  // Derives an independent stream: mixes a stream index into a seed so
  // per-trial generators are order-independent.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    return r.next();
  }

 private:
  std::uint64_t state_;
};

// Numerators in [-bound, bound], denominators in [1, bound].
Rational drawRational(Rng& rng, int bound);
GaussianRational drawGaussian(Rng& rng, int bound);
Matrix drawMatrix(Rng& rng, int m, int n, int bound);
Matrix drawHermitian(Rng& rng, int n, int bound);
Matrix drawPsd(Rng& rng, int n, int bound);          // V V* for a random V
Matrix drawNonsingular(Rng& rng, int n, int bound);  // redraws until full rank

}  // namespace hermeq
