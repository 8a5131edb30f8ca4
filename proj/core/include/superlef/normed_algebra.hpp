#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superlef/matrix.hpp"
#include "superlef/rational.hpp"

namespace superlef {

/// The four normed division algebras over the rationals (real forms of
/// R, C, the quaternions H, and the octonions O).
enum class Algebra { R, C, H, O };

/// Real dimension of the algebra: 1, 2, 4, 8.
int algebraDim(Algebra alg);

/// One-letter name "R", "C", "H", "O".
std::string algebraName(Algebra alg);

/// Parse "R"/"C"/"H"/"O" (throws std::invalid_argument otherwise).
Algebra algebraFromName(const std::string& name);

/// Element of one of the four algebras, with exact rational coordinates
/// over the basis (1, e1, ..., e_{dim-1}).
struct NormedElement {
  Algebra algebra;
  std::vector<Rat> coords;  // size algebraDim(algebra)

  static NormedElement zero(Algebra alg);
  static NormedElement one(Algebra alg);
  /// Basis element e_i (e_0 = 1).
  static NormedElement basis(Algebra alg, int i);
  static NormedElement fromCoords(Algebra alg, std::vector<Rat> coords);

  bool isZero() const;
  bool operator==(const NormedElement& other) const = default;
};

/// Basis product e_i * e_j = sign * e_k; returns {sign, k}.
/// Valid for i, j < algebraDim(alg); each algebra is the top-left block of
/// the next in the doubling tower, so one frozen table serves all four.
std::pair<int, int> mulBasis(Algebra alg, int i, int j);

NormedElement add(const NormedElement& a, const NormedElement& b);
NormedElement sub(const NormedElement& a, const NormedElement& b);
NormedElement neg(const NormedElement& a);
NormedElement scale(const Rat& s, const NormedElement& a);

/// Bilinear product under the frozen multiplication table.
/// Throws std::invalid_argument if the algebra tags differ.
NormedElement mul(const NormedElement& a, const NormedElement& b);

/// Conjugation: negates the coordinates of e1, ..., e_{dim-1}.
NormedElement conj(const NormedElement& a);

/// Real part: the coordinate of 1.
Rat re(const NormedElement& a);

/// Imaginary part: a - re(a) * 1.
NormedElement im(const NormedElement& a);

/// Squared norm: sum of squared coordinates. Multiplicative:
/// normSq(a*b) = normSq(a)*normSq(b).
Rat normSq(const NormedElement& a);

/// Deterministic rational point on the unit sphere (normSq == 1 exactly),
/// via the stereographic parametrization (1 - |v|^2 + 2v) / (1 + |v|^2).
NormedElement sampleUnit(Algebra alg, std::uint64_t seed);

/// Matrix of x |-> x * a on column coordinate vectors:
/// column j holds the coordinates of e_j * a.
Mat<Rat> rightMulMatrix(const NormedElement& a);

/// Matrix of x |-> a * x on column coordinate vectors:
/// column j holds the coordinates of a * e_j.
Mat<Rat> leftMulMatrix(const NormedElement& a);

/// Human-readable form like "1/2 + 3 e1 - e4"; "0" for zero.
std::string toString(const NormedElement& a);

inline NormedElement operator+(const NormedElement& a, const NormedElement& b) { return add(a, b); }
inline NormedElement operator-(const NormedElement& a, const NormedElement& b) { return sub(a, b); }
inline NormedElement operator-(const NormedElement& a) { return neg(a); }
inline NormedElement operator*(const NormedElement& a, const NormedElement& b) { return mul(a, b); }
inline NormedElement operator*(const Rat& s, const NormedElement& a) { return scale(s, a); }

}  // namespace superlef
