#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superlef/matrix.hpp"
#include "superlef/rational.hpp"
#include "superlef/sparse.hpp"

namespace superlef {

/// Element of W = V (+) V* over V = R^m: a vector part X (coordinates over
/// the basis f_1..f_m) and a covector part xi (coordinates over the dual
/// basis f^1..f^m).
struct WElement {
  std::vector<Rat> vec;  // X, length m
  std::vector<Rat> cov;  // xi, length m

  static WElement zero(int m);
  /// f_j (0-based j).
  static WElement vectorBasis(int m, int j);
  /// f^j (0-based j).
  static WElement covectorBasis(int m, int j);
  /// Hyperbolic basis diagonalizing Q with signature (m, m):
  /// e_i = f^i + f_i for i < m (Q = +1), e_i = f^{i-m} - f_{i-m} for
  /// m <= i < 2m (Q = -1). 0-based i in [0, 2m).
  static WElement eBasis(int m, int i);
  /// Flat coordinates: entries 0..m-1 are the vector part, m..2m-1 the
  /// covector part.
  static WElement fromFlat(const std::vector<Rat>& flat);
  std::vector<Rat> toFlat() const;

  int dimV() const { return static_cast<int>(vec.size()); }
  bool isZero() const;
  bool operator==(const WElement& other) const = default;
};

WElement add(const WElement& a, const WElement& b);
WElement sub(const WElement& a, const WElement& b);
WElement neg(const WElement& a);
WElement scale(const Rat& s, const WElement& a);

/// The split pairing Q(X + xi, Y + eta) = (eta(X) + xi(Y)) / 2.
Rat quadQ(const WElement& w, const WElement& v);

/// Gram matrix of Q in flat coordinates: [[0, I/2], [I/2, 0]].
Mat<Rat> quadQMatrix(int m);

/// x is in so(W, Q): Q(xw, w') + Q(w, xw') = 0 for all w, w'.
bool isQAntisymmetric(const Mat<Rat>& x);

/// Exterior-algebra element of /\ V*, stored densely over the subset basis:
/// index s in [0, 2^m) has bit j set iff f^{j+1} is a factor; the degree of
/// basis element s is popcount(s).
struct Spinor {
  int m = 0;
  std::vector<Rat> a;  // size 2^m

  static Spinor zero(int m);
  /// The scalar 1 (empty subset).
  static Spinor scalarOne(int m);
  static Spinor basis(int m, std::uint32_t mask);

  bool isZero() const;
  bool operator==(const Spinor& other) const = default;
};

Spinor add(const Spinor& x, const Spinor& y);
Spinor sub(const Spinor& x, const Spinor& y);
Spinor neg(const Spinor& x);
Spinor scale(const Rat& s, const Spinor& x);

/// Dimension of the spinor space, 2^m.
std::size_t spinorDim(int m);

/// Sign of inserting f^{j+1} in front of the sorted factors of mask
/// (requires bit j clear), and of removing it (requires bit j set):
/// (-1)^(number of set bits below j).
int slotSign(std::uint32_t mask, int j);

/// The Clifford action (X + xi) . phi = xi /\ phi - i_X phi.
Spinor spinAct(const WElement& w, const Spinor& phi);

/// Matrix of spinAct(w, .) on the subset basis (odd operator; at most one
/// entry per column for hyperbolic basis elements).
SparseMat<Rat> cliffordOp(int m, const WElement& w);

/// cliffordOp of eBasis(m, i).
SparseMat<Rat> cliffordE(int m, int i);

enum class Parity { Even, Odd };

/// Parity of an operator with respect to the degree grading mod 2: Even if
/// every entry preserves popcount parity, Odd if every entry flips it,
/// nullopt if mixed. The zero matrix reports Even.
std::optional<Parity> homogeneousParity(const SparseMat<Rat>& op);

/// For c in the span of quadratic Clifford monomials, the matrix on W
/// (flat coordinates) of w |-> the element u with [c, E_w] = E_u.
/// Throws std::domain_error("not in spin degree 2") if some commutator is
/// not the image of any element of W. The result is Q-antisymmetric.
Mat<Rat> adOf(const SparseMat<Rat>& c, int m);

/// The unique element of span{ E_{e_i} E_{e_j} : 0 <= i < j < 2m } whose
/// adOf is x, by exact linear solve (factorization cached per m).
/// Throws std::domain_error("Q-antisymmetry violated") unless x is in
/// so(W, Q).
SparseMat<Rat> adInverse(const Mat<Rat>& x, int m);

/// Diagonal embedding so(m) -> so(W, Q): block diag(A, A) (the dual action
/// -A^T equals A for antisymmetric A). Throws std::invalid_argument if A is
/// not antisymmetric.
Mat<Rat> psi4(const Mat<Rat>& a);

/// Spinor image of the volume element e_1 e_2 ... e_m of the positive
/// hyperbolic basis: the matrix product cliffordE(m,0) * ... * cliffordE(m,m-1).
SparseMat<Rat> nuOp(int m);

/// Flat Hodge star with the standard orientation f^1 /\ ... /\ f^m:
/// star(f^I) = sign(I, I^c) f^{I^c}, the sign of the shuffle permutation.
Spinor hodgeStar(const Spinor& phi);

/// Matrix of hodgeStar.
SparseMat<Rat> hodgeStarOp(int m);

std::string toString(const WElement& w);
std::string toString(const Spinor& phi);

inline WElement operator+(const WElement& a, const WElement& b) { return add(a, b); }
inline WElement operator-(const WElement& a, const WElement& b) { return sub(a, b); }
inline WElement operator-(const WElement& a) { return neg(a); }
inline WElement operator*(const Rat& s, const WElement& a) { return scale(s, a); }
inline Spinor operator+(const Spinor& a, const Spinor& b) { return add(a, b); }
inline Spinor operator-(const Spinor& a, const Spinor& b) { return sub(a, b); }
inline Spinor operator-(const Spinor& a) { return neg(a); }
inline Spinor operator*(const Rat& s, const Spinor& a) { return scale(s, a); }

}  // namespace superlef
