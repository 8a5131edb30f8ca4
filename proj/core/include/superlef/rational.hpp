#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace superlef {

/// Exact arbitrary-precision rational scalar. Always canonical: lowest terms,
/// positive denominator. All arithmetic in the library is exact; there is no
/// floating point anywhere.
using Rat = mpq_class;

/// Builds the canonical rational num/den (den != 0).
inline Rat ratio(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool isZero(const Rat& r) { return sgn(r) == 0; }

/// Canonical decimal-free rendering: "n" or "n/d" with d > 0.
inline std::string toString(const Rat& r) { return r.get_str(); }

/// Entry interface used by the generic dense/sparse containers. Specialized
/// for every scalar and for polynomials over every scalar.
template <class T>
struct EntryTraits;

template <>
struct EntryTraits<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool isZero(const Rat& v) { return sgn(v) == 0; }
  static std::string str(const Rat& v) { return v.get_str(); }
};

}  // namespace superlef
