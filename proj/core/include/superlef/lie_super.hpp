#pragma once

#include <string>
#include <vector>

#include "superlef/clifford.hpp"
#include "superlef/matrix.hpp"
#include "superlef/normed_algebra.hpp"
#include "superlef/rational.hpp"

namespace superlef {

/// 2x2 matrix with entries in one of the four normed algebras.
struct Mat2K {
  NormedElement a11, a12, a21, a22;

  Algebra algebra() const { return a11.algebra; }
  static Mat2K zero(Algebra alg);
  static Mat2K identity(Algebra alg);
  bool operator==(const Mat2K& other) const = default;
};

Mat2K mat2Add(const Mat2K& a, const Mat2K& b);
Mat2K mat2Sub(const Mat2K& a, const Mat2K& b);
Mat2K mat2Neg(const Mat2K& a);
Mat2K mat2Scale(const Rat& s, const Mat2K& a);
/// Formal entrywise matrix product (unambiguous for associative entries).
Mat2K mat2Mul(const Mat2K& a, const Mat2K& b);
Mat2K mat2Bracket(const Mat2K& a, const Mat2K& b);
Mat2K conjTranspose(const Mat2K& a);
/// a11 + a22 == 0 in K.
bool isTraceFree(const Mat2K& a);

/// The operator phi_A(u) = u A^* on K^2 viewed as a real vector space, as a
/// (2 dimK) x (2 dimK) rational matrix. Flat coordinates on K^2: the e_r
/// coefficient of slot i sits at index i*dimK + r.
/// Composition satisfies phi_A . phi_B = phi_{AB} for associative K.
Mat<Rat> phiA(const Mat2K& a);

/// Named 2x2 generators of the raising/lowering/grading action (s in 1..3
/// indexes the imaginary units where applicable).
Mat2K slLower(Algebra alg, int s = 1);    // [[0, 0], [-e_s, 0]]
Mat2K slRaise(Algebra alg, int s = 1);    // [[0, e_s], [0, 0]]
Mat2K slGrading(Algebra alg);             // [[-1, 0], [0, 1]]
Mat2K slCompact(Algebra alg, int s = 1);  // [[e_s, 0], [0, e_s]]

/// Basis of the smallest bracket-closed subspace containing the generators,
/// as a deterministic reduced-echelon list (over flattened matrices).
std::vector<Mat<Rat>> lieClosure(const std::vector<Mat<Rat>>& generators);

/// Cached basis of the Lie algebra generated by {phi_A : trace-free A}.
/// Dimensions 3, 6, 15, 45 for K = R, C, H, O.
const std::vector<Mat<Rat>>& slBasis(Algebra alg);

/// Cached basis of the split-pairing-antisymmetric part of slBasis:
/// the intersection with so(K^{1,1}, qCheck). Dimensions 1, 3, 10, 36.
const std::vector<Mat<Rat>>& suBasis(Algebra alg);

/// suBasis(C) together with phi of i * identity; dimension 4.
std::vector<Mat<Rat>> uC11Basis();

/// Element u = (u1, u2) of K^{1,1}.
struct K11Element {
  NormedElement u1, u2;

  Algebra algebra() const { return u1.algebra; }
  static K11Element zero(Algebra alg);
  /// epsilon_1 = (1, 0), epsilon_2 = (0, 1).
  static K11Element epsilon(Algebra alg, int slot);
  /// Real basis: b < dimK gives (e_b, 0); otherwise (0, e_{b-dimK}).
  static K11Element basis(Algebra alg, int b);
  static K11Element fromFlat(Algebra alg, const std::vector<Rat>& flat);
  std::vector<Rat> toFlat() const;
  bool isZero() const;
  bool operator==(const K11Element& other) const = default;
};

K11Element add(const K11Element& a, const K11Element& b);
K11Element sub(const K11Element& a, const K11Element& b);
K11Element neg(const K11Element& a);
K11Element scale(const Rat& s, const K11Element& a);

/// The split pairing Re((u1 conj(v2) + u2 conj(v1)) / 2) of signature
/// (dimK, dimK).
Rat qCheck(const K11Element& u, const K11Element& v);

/// Gram matrix of qCheck in flat coordinates: [[0, I/2], [I/2, 0]].
Mat<Rat> qCheckMatrix(Algebra alg);

/// x is in so(K^{1,1}, qCheck): qCheck(xu, v) + qCheck(u, xv) = 0.
bool isQCheckAntisymmetric(Algebra alg, const Mat<Rat>& x);

/// Element of the Lie superalgebra su_K(1,1) (+) K^{1,1} (+) R (or its
/// u_C(1,1) variant): an even operator, an odd vector, and a central scalar.
struct SuperElement {
  Algebra algebra;
  Mat<Rat> even;    // (2 dimK) x (2 dimK)
  K11Element odd;
  Rat center;

  static SuperElement zero(Algebra alg);
  static SuperElement fromEven(Algebra alg, Mat<Rat> x);
  static SuperElement fromOdd(K11Element u);
  static SuperElement fromCenter(Algebra alg, Rat a);
  bool operator==(const SuperElement& other) const = default;
};

SuperElement add(const SuperElement& a, const SuperElement& b);
SuperElement scale(const Rat& s, const SuperElement& a);

/// Graded bracket: even-even is the matrix commutator, even-odd applies the
/// operator, odd-odd is -2 qCheck into the center, the center is central.
SuperElement superBracket(const SuperElement& a, const SuperElement& b);

/// The quadratic form on Hom(V*, W) (2m x m matrices T): the trace pairing
/// sum_j Q(T f^j, T' f^j).
Rat quadQHat(const Mat<Rat>& t, const Mat<Rat>& tp);

/// Element of the Lie superalgebra so(W,Q) (+) Hom(V*,W) (+) R.
struct LElement {
  Mat<Rat> so;      // 2m x 2m
  Mat<Rat> hom;     // 2m x m
  Rat scalar;

  static LElement zero(int m);
  static LElement fromSO(Mat<Rat> x);
  static LElement fromHom(Mat<Rat> t);
  static LElement fromScalar(int m, Rat a);
  bool operator==(const LElement& other) const = default;
};

LElement add(const LElement& a, const LElement& b);
LElement scale(const Rat& s, const LElement& a);

/// Graded bracket on L: even-even is the commutator, even-odd is
/// post-composition on Hom(V*, W), odd-odd is -2 quadQHat into the scalar.
LElement lSuperBracket(const LElement& a, const LElement& b);

/// Embeds an operator on K^{1,1} as an operator on W = V (+) V* for
/// V = K^n, acting in each K-slot. Real coordinate layout on W: the e_r
/// coefficient of slot j of the vector part is r*n + j, of the covector part
/// m + r*n + j (m = n dimK). Throws UnsupportedError for K = O with n > 1.
Mat<Rat> iotaSO(Algebra alg, const Mat<Rat>& x, int n);

/// Embeds u in K^{1,1} as the map V* -> W sending a covector xi to
/// (xi u1, xi u2), computed K-slotwise. Throws UnsupportedError for K = O
/// with n > 1.
Mat<Rat> iotaHom(Algebra alg, const K11Element& u, int n);

/// Central scaling of the embedding: a |-> m a.
Rat iotaScalar(const Rat& a, int m);

/// All three graded pieces at once.
LElement iotaSuper(Algebra alg, const SuperElement& s, int n);

/// Dimensions of the octonion odd spans inside Hom(V*, W) at m = 8:
/// the embedded O^{1,1} alone, and the span of all compositions
/// iotaSO(x) . iotaHom(u).
struct OddSpanDims {
  std::size_t iotaSpan;     // expected 16
  std::size_t productSpan;  // expected 128 = dim Hom(V*, W)
};
OddSpanDims octonionSpanCheck();

/// True iff the graded subspace iotaSO(su_O(1,1)) (+) span{iotaSO(x) .
/// iotaHom(u)} (+) R is closed under lSuperBracket, checked on a basis.
bool octonionGradedClosure();

/// Names for the ten 2x2 generators over the quaternions.
enum class SlTag { L1, L2, L3, Lam1, Lam2, Lam3, K1, K2, K3, H };
const std::vector<SlTag>& allSlTags();
std::string slTagName(SlTag tag);
SlTag slTagFromName(const std::string& name);
/// The 2x2 quaternion matrix for the tag (L_s lowers, Lam_s raises, K_s is
/// compact, H grades).
Mat2K slTagMatrix(SlTag tag);

/// Closed-form image of the tagged generator under the derivative of the
/// double cover Sp(1,1) -> SO_0(1,4) realized on R^{1,1} (+) H, as a 6x6
/// matrix (coordinates: 0,1 span R^{1,1}; 2 is Re H; 3,4,5 are Im H).
Mat<Rat> tauStar(SlTag tag);

/// Extends tauStar linearly to any operator in the span of the ten tagged
/// generators' phi-images (exact solve; throws std::invalid_argument if the
/// operator is outside that span).
Mat<Rat> tauStarOfOperator(const Mat<Rat>& x);

/// For unit quaternions p, q, checks the twisted-isomorphism laws of the
/// pair (phi, theta) with phi(x) = p x conj(q), theta(a) = q a conj(q):
/// (i) phi(x a) = phi(x) theta(a); (ii) the slotwise action (theta u1,
/// theta u2) preserves qCheck; (iii) conjugation by that action preserves
/// the embedded image of su_H(1,1) (+) H^{1,1}. Throws std::invalid_argument
/// unless normSq(p) = normSq(q) = 1.
bool twistEquivariance(const NormedElement& p, const NormedElement& q);

}  // namespace superlef
