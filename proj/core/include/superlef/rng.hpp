#pragma once

#include <cstdint>
#include <random>

#include "superlef/rational.hpp"

namespace superlef {

/// Deterministic 64-bit generator for seeded property checks. All draws go
/// through explicit modular reduction (never distribution adapters, whose
/// output is implementation-defined), so identical seeds give identical
/// streams on every platform — a requirement for byte-stable reports.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  /// Uniform-ish integer in [lo, hi], deterministic across platforms.
  long nextInt(long lo, long hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(gen_() % span);
  }

  /// Small exact rational with numerator in [-maxNum, maxNum] and
  /// denominator in [1, maxDen].
  Rat nextRat(long maxNum = 9, long maxDen = 5) {
    long num = nextInt(-maxNum, maxNum);
    long den = nextInt(1, maxDen);
    return ratio(num, den);
  }

  /// Nonzero variant of nextRat.
  Rat nextNonzeroRat(long maxNum = 9, long maxDen = 5) {
    Rat r = nextRat(maxNum, maxDen);
    while (sgn(r) == 0) r = nextRat(maxNum, maxDen);
    return r;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace superlef
