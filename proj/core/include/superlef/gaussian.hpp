#pragma once

#include <string>

#include "superlef/rational.hpp"

namespace superlef {

/// Exact Gaussian rational a + b·i. Field operations only; used where complex
/// scalars are genuinely required (holomorphic/antiholomorphic splittings of
/// operators); everything else runs over plain rationals.
struct GaussRat {
  Rat re{0};
  Rat im{0};

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}  // NOLINT: implicit real embedding
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  GaussRat conj() const { return GaussRat(re, Rat(-im)); }
  Rat normSq() const { return Rat(re * re + im * im); }
  bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(Rat(a.re + b.re), Rat(a.im + b.im));
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(Rat(a.re - b.re), Rat(a.im - b.im));
  }
  friend GaussRat operator-(const GaussRat& a) {
    return GaussRat(Rat(-a.re), Rat(-a.im));
  }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return GaussRat(Rat(a.re * b.re - a.im * b.im),
                    Rat(a.re * b.im + a.im * b.re));
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n = b.normSq();
    return GaussRat(Rat((a.re * b.re + a.im * b.im) / n),
                    Rat((a.im * b.re - a.re * b.im) / n));
  }
  GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
  GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
  GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
  GaussRat& operator/=(const GaussRat& b) { return *this = *this / b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) {
    return !(a == b);
  }
};

inline GaussRat conj(const GaussRat& v) { return v.conj(); }
inline Rat normSq(const GaussRat& v) { return v.normSq(); }
inline bool isZero(const GaussRat& v) { return v.isZero(); }

inline std::string toString(const GaussRat& v) {
  if (sgn(v.im) == 0) return v.re.get_str();
  std::string s = v.re.get_str();
  s += (sgn(v.im) < 0) ? "-" : "+";
  Rat a = abs(v.im);
  s += a.get_str();
  s += "i";
  return s;
}

template <>
struct EntryTraits<GaussRat> {
  static GaussRat zero() { return GaussRat(); }
  static GaussRat one() { return GaussRat(Rat(1)); }
  static bool isZero(const GaussRat& v) { return v.isZero(); }
  static std::string str(const GaussRat& v) { return toString(v); }
};

}  // namespace superlef
