#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "superlef/clifford.hpp"
#include "superlef/polynomial.hpp"
#include "superlef/sparse.hpp"

namespace superlef {

/// Derivative multi-index: exponents of (d/dy_1, ..., d/dy_m).
using DerivIndex = std::array<std::uint8_t, kMaxVars>;

inline int derivOrder(const DerivIndex& b) {
  int d = 0;
  for (auto e : b) d += e;
  return d;
}

inline DerivIndex derivUnit(int j, int e = 1) {
  DerivIndex b{};
  b[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(e);
  return b;
}

/// A section of the exterior-algebra bundle with polynomial coefficients:
/// component s (a subset mask of {1..m}) is the coefficient of the basis
/// form indexed by s. This is the value space every DiffOp acts on.
template <class S>
using PolySection = std::vector<Poly<S>>;

template <class S>
PolySection<S> zeroSection(int m) {
  return PolySection<S>(static_cast<std::size_t>(1) << m);
}

/// A polynomial-coefficient differential operator sum_b A_b(y) d^b on
/// sections of the 2^m-dimensional spinor bundle over flat R^m. Terms are
/// canonical (no zero coefficient matrices), so operator equality is
/// coefficient-wise equality. The parity tag drives the super bracket; it is
/// metadata and does not participate in equality.
template <class S>
struct DiffOp {
  int m = 0;
  std::map<DerivIndex, SparseMat<Poly<S>>> terms;
  std::optional<Parity> parity;

  static DiffOp zero(int m) {
    DiffOp op;
    op.m = m;
    op.parity = Parity::Even;
    return op;
  }

  static DiffOp identity(int m) {
    DiffOp op = zero(m);
    op.terms.emplace(DerivIndex{}, SparseMat<Poly<S>>::identity(1 << m));
    return op;
  }

  /// Adds A(y) d^b to the operator.
  void addTerm(const DerivIndex& b, const SparseMat<Poly<S>>& a) {
    if (a.isZero()) return;
    auto [it, fresh] = terms.emplace(b, a);
    if (!fresh) {
      it->second = it->second + a;
      if (it->second.isZero()) terms.erase(it);
    }
  }

  int order() const {
    int k = -1;
    for (const auto& [b, a] : terms) k = std::max(k, derivOrder(b));
    return k;
  }

  bool isZero() const { return terms.empty(); }

  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.m == b.m && a.terms == b.terms;
  }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }
};

namespace detail {

inline std::optional<Parity> paritySum(std::optional<Parity> a, std::optional<Parity> b) {
  if (!a.has_value() || !b.has_value()) return std::nullopt;
  return *a == *b ? Parity::Even : Parity::Odd;
}

inline std::optional<Parity> parityMerge(std::optional<Parity> a, std::optional<Parity> b,
                                         bool aZero, bool bZero) {
  if (aZero) return b;
  if (bZero) return a;
  if (a.has_value() && b.has_value() && *a == *b) return a;
  return std::nullopt;
}

inline Rat multiBinomial(const DerivIndex& b, const DerivIndex& d) {
  Rat out(1);
  for (int j = 0; j < kMaxVars; ++j) {
    const int n = b[static_cast<std::size_t>(j)];
    const int k = d[static_cast<std::size_t>(j)];
    long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    out *= Rat(c);
  }
  return out;
}

template <class S>
SparseMat<Poly<S>> matDyDeriv(const SparseMat<Poly<S>>& a, int j) {
  SparseMat<Poly<S>> out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (const auto& [c, p] : a.row(i)) out.set(i, c, p.dyDeriv(j));
  }
  return out;
}

}  // namespace detail

template <class S>
DiffOp<S> add(const DiffOp<S>& a, const DiffOp<S>& b) {
  if (a.m != b.m) throw std::invalid_argument("operators live on different R^m");
  DiffOp<S> out = a;
  for (const auto& [idx, mat] : b.terms) out.addTerm(idx, mat);
  out.parity = detail::parityMerge(a.parity, b.parity, a.isZero(), b.isZero());
  return out;
}

template <class S>
DiffOp<S> scale(const S& s, const DiffOp<S>& a) {
  DiffOp<S> out = DiffOp<S>::zero(a.m);
  out.parity = a.parity;
  const Poly<S> ps = Poly<S>::constant(s);
  for (const auto& [idx, mat] : a.terms) out.addTerm(idx, mat.scaled(ps));
  return out;
}

template <class S>
DiffOp<S> sub(const DiffOp<S>& a, const DiffOp<S>& b) {
  return add(a, scale(-EntryTraits<S>::one(), b));
}

/// Exact Leibniz composition:
/// A d^b . B d^g = sum_{d <= b} binom(b, d) A (d^{b-d} B) d^{d+g}.
template <class S>
DiffOp<S> compose(const DiffOp<S>& a, const DiffOp<S>& b) {
  if (a.m != b.m) throw std::invalid_argument("operators live on different R^m");
  DiffOp<S> out = DiffOp<S>::zero(a.m);
  out.parity = detail::paritySum(a.parity, b.parity);
  if (a.isZero() || b.isZero()) {
    if (!out.parity.has_value()) out.parity = Parity::Even;
    return out;
  }
  for (const auto& [bIdx, aMat] : a.terms) {
    // Enumerate all d with d[j] <= bIdx[j] by odometer.
    DerivIndex d{};
    while (true) {
      const Rat binom = detail::multiBinomial(bIdx, d);
      DerivIndex rem{};
      for (int j = 0; j < kMaxVars; ++j) {
        rem[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
            bIdx[static_cast<std::size_t>(j)] - d[static_cast<std::size_t>(j)]);
      }
      for (const auto& [gIdx, bMat] : b.terms) {
        SparseMat<Poly<S>> deriv = bMat;
        bool vanished = false;
        for (int j = 0; j < kMaxVars && !vanished; ++j) {
          for (int e = 0; e < rem[static_cast<std::size_t>(j)]; ++e) {
            deriv = detail::matDyDeriv(deriv, j);
            if (deriv.isZero()) {
              vanished = true;
              break;
            }
          }
        }
        if (vanished) continue;
        DerivIndex key{};
        for (int j = 0; j < kMaxVars; ++j) {
          key[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(
              d[static_cast<std::size_t>(j)] + gIdx[static_cast<std::size_t>(j)]);
        }
        SparseMat<Poly<S>> prod = aMat * deriv;
        if (binom != Rat(1)) prod = prod.scaled(Poly<S>::constant(ScalarOps<S>::fromRat(binom)));
        out.addTerm(key, prod);
      }
      // Advance the odometer.
      int j = 0;
      while (j < kMaxVars) {
        if (d[static_cast<std::size_t>(j)] < bIdx[static_cast<std::size_t>(j)]) {
          ++d[static_cast<std::size_t>(j)];
          break;
        }
        d[static_cast<std::size_t>(j)] = 0;
        ++j;
      }
      if (j == kMaxVars) break;
    }
  }
  return out;
}

/// Commutator, or anticommutator when both operands are tagged odd. Throws
/// if either parity tag is missing (mixed or undeclared parity).
template <class S>
DiffOp<S> superCommutator(const DiffOp<S>& a, const DiffOp<S>& b) {
  if (!a.parity.has_value() || !b.parity.has_value()) {
    throw std::invalid_argument("super bracket needs homogeneous parity tags");
  }
  const bool anti = *a.parity == Parity::Odd && *b.parity == Parity::Odd;
  DiffOp<S> ab = compose(a, b);
  DiffOp<S> ba = compose(b, a);
  DiffOp<S> out = anti ? add(ab, ba) : sub(ab, ba);
  out.parity = detail::paritySum(a.parity, b.parity);
  return out;
}

/// Applies the operator to a section (vector of polynomial coefficients over
/// the 2^m spinor basis).
template <class S>
PolySection<S> applyOp(const DiffOp<S>& op, const PolySection<S>& phi) {
  const std::size_t dim = static_cast<std::size_t>(1) << op.m;
  if (phi.size() != dim) throw std::invalid_argument("section has wrong dimension");
  PolySection<S> out(dim);
  for (const auto& [bIdx, mat] : op.terms) {
    PolySection<S> d = phi;
    for (int j = 0; j < kMaxVars; ++j) {
      for (int e = 0; e < bIdx[static_cast<std::size_t>(j)]; ++e) {
        for (auto& p : d) p = p.dyDeriv(j);
      }
    }
    for (int i = 0; i < static_cast<int>(dim); ++i) {
      for (const auto& [c, a] : mat.row(i)) {
        out[static_cast<std::size_t>(i)] =
            out[static_cast<std::size_t>(i)] + a * d[static_cast<std::size_t>(c)];
      }
    }
  }
  return out;
}

/// Principal symbol of order k: the terms with |b| = k, with d^b replaced by
/// the covector monomial xi^b. Requires k >= order (lower-order terms are
/// discarded as the symbol-space quotient; higher-order terms present would
/// make "order k" a lie). symbolOf(a, k) == 0 iff order(a) < k.
template <class S>
SparseMat<Poly<S>> symbolOf(const DiffOp<S>& a, int k) {
  if (a.order() > k) throw std::invalid_argument("operator order exceeds requested symbol order");
  SparseMat<Poly<S>> out(1 << a.m, 1 << a.m);
  for (const auto& [bIdx, mat] : a.terms) {
    if (derivOrder(bIdx) != k) continue;
    Mono xim;
    for (int j = 0; j < kMaxVars; ++j) xim.xi[static_cast<std::size_t>(j)] = bIdx[static_cast<std::size_t>(j)];
    out = out + mat.scaled(Poly<S>::monomial(xim, EntryTraits<S>::one()));
  }
  return out;
}

}  // namespace superlef
