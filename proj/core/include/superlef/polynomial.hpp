#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superlef/gaussian.hpp"
#include "superlef/rational.hpp"

namespace superlef {

/// Maximum number of coordinates a polynomial can mention (y_1..y_8 and the
/// matching covector variables xi_1..xi_8); every model in this library runs
/// on R^m with m <= 8.
inline constexpr int kMaxVars = 8;

/// Exponent vector of one monomial in the coordinates y_j and the formal
/// covector coordinates xi_j. Plain polynomials leave every xi exponent
/// zero; principal symbols use both halves.
struct Mono {
  std::array<std::uint8_t, kMaxVars> y{};
  std::array<std::uint8_t, kMaxVars> xi{};

  auto operator<=>(const Mono&) const = default;

  static Mono one() { return {}; }
  static Mono yPow(int j, int e = 1) {
    assert(j >= 0 && j < kMaxVars);
    Mono m;
    m.y[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(e);
    return m;
  }
  static Mono xiPow(int j, int e = 1) {
    assert(j >= 0 && j < kMaxVars);
    Mono m;
    m.xi[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(e);
    return m;
  }

  Mono times(const Mono& o) const {
    Mono out;
    for (int j = 0; j < kMaxVars; ++j) {
      const int ey = y[static_cast<std::size_t>(j)] + o.y[static_cast<std::size_t>(j)];
      const int ex = xi[static_cast<std::size_t>(j)] + o.xi[static_cast<std::size_t>(j)];
      assert(ey < 256 && ex < 256);
      out.y[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(ey);
      out.xi[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(ex);
    }
    return out;
  }

  int degY() const {
    int d = 0;
    for (auto e : y) d += e;
    return d;
  }
  int degXi() const {
    int d = 0;
    for (auto e : xi) d += e;
    return d;
  }
};

/// Exact polynomial with scalar coefficients S (Rat or GaussRat) in the
/// variables y_1..y_m and xi_1..xi_m. Canonical: no zero coefficients are
/// stored, so operator== is semantic equality.
template <class S>
class Poly {
 public:
  Poly() = default;

  static Poly constant(S v) {
    Poly p;
    if (!EntryTraits<S>::isZero(v)) p.c_.emplace(Mono::one(), std::move(v));
    return p;
  }
  static Poly monomial(const Mono& m, S v) {
    Poly p;
    if (!EntryTraits<S>::isZero(v)) p.c_.emplace(m, std::move(v));
    return p;
  }
  static Poly yVar(int j) { return monomial(Mono::yPow(j), EntryTraits<S>::one()); }
  static Poly xiVar(int j) { return monomial(Mono::xiPow(j), EntryTraits<S>::one()); }

  const std::map<Mono, S>& terms() const { return c_; }
  bool isZero() const { return c_.empty(); }

  S coeff(const Mono& m) const {
    auto it = c_.find(m);
    return it == c_.end() ? EntryTraits<S>::zero() : it->second;
  }

  /// Highest total degree in y (and in xi); -1 for the zero polynomial.
  int degY() const {
    int d = -1;
    for (const auto& [m, v] : c_) d = std::max(d, m.degY());
    return d;
  }
  int degXi() const {
    int d = -1;
    for (const auto& [m, v] : c_) d = std::max(d, m.degXi());
    return d;
  }

  void addTerm(const Mono& m, const S& v) {
    if (EntryTraits<S>::isZero(v)) return;
    auto [it, fresh] = c_.emplace(m, v);
    if (!fresh) {
      it->second = it->second + v;
      if (EntryTraits<S>::isZero(it->second)) c_.erase(it);
    }
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, v] : b.c_) out.addTerm(m, v);
    return out;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, v] : b.c_) out.addTerm(m, -v);
    return out;
  }
  friend Poly operator-(const Poly& a) {
    Poly out;
    for (const auto& [m, v] : a.c_) out.c_.emplace(m, -v);
    return out;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, va] : a.c_) {
      for (const auto& [mb, vb] : b.c_) out.addTerm(ma.times(mb), va * vb);
    }
    return out;
  }
  Poly scaled(const S& s) const {
    Poly out;
    if (EntryTraits<S>::isZero(s)) return out;
    for (const auto& [m, v] : c_) {
      S w = v * s;
      if (!EntryTraits<S>::isZero(w)) out.c_.emplace(m, std::move(w));
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Partial derivative with respect to y_j.
  Poly dyDeriv(int j) const {
    assert(j >= 0 && j < kMaxVars);
    Poly out;
    for (const auto& [m, v] : c_) {
      const int e = m.y[static_cast<std::size_t>(j)];
      if (e == 0) continue;
      Mono d = m;
      d.y[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(e - 1);
      out.addTerm(d, v * S(Rat(e)));
    }
    return out;
  }

  /// Substitutes rational points for the y (and optionally xi) variables.
  S evaluate(const std::vector<S>& ys, const std::vector<S>& xis = {}) const {
    S out = EntryTraits<S>::zero();
    for (const auto& [m, v] : c_) {
      S term = v;
      for (int j = 0; j < kMaxVars; ++j) {
        for (int e = 0; e < m.y[static_cast<std::size_t>(j)]; ++e) {
          assert(static_cast<std::size_t>(j) < ys.size());
          term = term * ys[static_cast<std::size_t>(j)];
        }
        for (int e = 0; e < m.xi[static_cast<std::size_t>(j)]; ++e) {
          assert(static_cast<std::size_t>(j) < xis.size());
          term = term * xis[static_cast<std::size_t>(j)];
        }
      }
      out = out + term;
    }
    return out;
  }

 private:
  std::map<Mono, S> c_;
};

template <class S>
std::string toString(const Poly<S>& p) {
  if (p.isZero()) return "0";
  std::string out;
  for (const auto& [m, v] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += EntryTraits<S>::str(v);
    for (int j = 0; j < kMaxVars; ++j) {
      const int ey = m.y[static_cast<std::size_t>(j)];
      const int ex = m.xi[static_cast<std::size_t>(j)];
      if (ey > 0) {
        out += " y" + std::to_string(j + 1);
        if (ey > 1) out += "^" + std::to_string(ey);
      }
      if (ex > 0) {
        out += " xi" + std::to_string(j + 1);
        if (ex > 1) out += "^" + std::to_string(ex);
      }
    }
  }
  return out;
}

template <class S>
struct EntryTraits<Poly<S>> {
  static Poly<S> zero() { return Poly<S>(); }
  static Poly<S> one() { return Poly<S>::constant(EntryTraits<S>::one()); }
  static bool isZero(const Poly<S>& v) { return v.isZero(); }
  static std::string str(const Poly<S>& v) { return toString(v); }
};

/// Uniform access to the real/imaginary decomposition of the scalar domain,
/// so rational linear solves extend coefficient-wise to Gaussian scalars.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
  static Rat fromRat(const Rat& v) { return v; }
  static Rat realPart(const Rat& v) { return v; }
  static Rat imagPart(const Rat&) { return Rat(0); }
  static Rat fromParts(const Rat& re, const Rat& im) {
    assert(sgn(im) == 0);
    (void)im;
    return re;
  }
};

template <>
struct ScalarOps<GaussRat> {
  static GaussRat fromRat(const Rat& v) { return GaussRat(v); }
  static Rat realPart(const GaussRat& v) { return v.re; }
  static Rat imagPart(const GaussRat& v) { return v.im; }
  static GaussRat fromParts(const Rat& re, const Rat& im) { return GaussRat(re, im); }
};

}  // namespace superlef
