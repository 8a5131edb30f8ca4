#include <gtest/gtest.h>

#include <vector>

#include "superlef/normed_algebra.hpp"
#include "superlef/rng.hpp"

namespace superlef {
namespace {

// ---------------------------------------------------------------------------
// Independent oracle: recursive doubling on raw coordinate vectors, written
// without reference to the library's frozen table. An element of the 2^k-dim
// algebra in the tower is a vector of 2^k rationals; the product of a pair
// (a, b) with (c, d) is (ac - conj(d) b, da + b conj(c)).
// ---------------------------------------------------------------------------
using Vec = std::vector<Rat>;

Vec cdConj(const Vec& a) {
  Vec out = a;
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = -out[k];
  return out;
}

Vec cdAdd(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  return out;
}

Vec cdNeg(const Vec& a) {
  Vec out = a;
  for (Rat& c : out) c = -c;
  return out;
}

Vec cdMul(const Vec& x, const Vec& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  Vec a(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(h));
  Vec b(x.begin() + static_cast<std::ptrdiff_t>(h), x.end());
  Vec c(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(h));
  Vec d(y.begin() + static_cast<std::ptrdiff_t>(h), y.end());
  Vec first = cdAdd(cdMul(a, c), cdNeg(cdMul(cdConj(d), b)));
  Vec second = cdAdd(cdMul(d, a), cdMul(b, cdConj(c)));
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

NormedElement randomElement(Algebra alg, SeededRng& rng) {
  std::vector<Rat> coords;
  for (int k = 0; k < algebraDim(alg); ++k) coords.push_back(rng.nextRat(9, 5));
  return NormedElement::fromCoords(alg, std::move(coords));
}

const Algebra kAll[] = {Algebra::R, Algebra::C, Algebra::H, Algebra::O};

// The frozen table must agree entry-by-entry with the recursive doubling
// oracle, for every algebra in the tower.
TEST(NormedAlgebra, TableMatchesDoublingOracle) {
  for (Algebra alg : kAll) {
    const int d = algebraDim(alg);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        Vec ei(static_cast<std::size_t>(d), Rat(0));
        Vec ej(static_cast<std::size_t>(d), Rat(0));
        ei[static_cast<std::size_t>(i)] = 1;
        ej[static_cast<std::size_t>(j)] = 1;
        const Vec expected = cdMul(ei, ej);
        const NormedElement got = mul(NormedElement::basis(alg, i), NormedElement::basis(alg, j));
        EXPECT_EQ(got.coords, expected)
            << algebraName(alg) << ": e" << i << " * e" << j << " = " << toString(got);
        auto [sign, idx] = mulBasis(alg, i, j);
        EXPECT_EQ(got, scale(Rat(sign), NormedElement::basis(alg, idx)));
      }
    }
  }
}

TEST(NormedAlgebra, QuaternionUnitRelations) {
  const auto e = [](int i) { return NormedElement::basis(Algebra::H, i); };
  const NormedElement minusOne = neg(NormedElement::one(Algebra::H));
  EXPECT_EQ(mul(e(1), e(1)), minusOne);
  EXPECT_EQ(mul(e(2), e(2)), minusOne);
  EXPECT_EQ(mul(e(3), e(3)), minusOne);
  EXPECT_EQ(mul(mul(e(1), e(2)), e(3)), minusOne);
  EXPECT_EQ(mul(e(1), e(2)), e(3));
  EXPECT_EQ(mul(e(2), e(3)), e(1));
  EXPECT_EQ(mul(e(3), e(1)), e(2));
  EXPECT_EQ(mul(e(2), e(1)), neg(e(3)));
}

TEST(NormedAlgebra, OctonionWitnessProducts) {
  const auto e = [](int i) { return NormedElement::basis(Algebra::O, i); };
  EXPECT_EQ(mul(e(1), e(4)), e(5));
  EXPECT_EQ(mul(e(1), e(5)), neg(e(4)));
  EXPECT_EQ(mul(e(4), e(5)), e(1));
  for (int i = 1; i < 8; ++i) {
    EXPECT_EQ(mul(e(i), e(i)), neg(NormedElement::one(Algebra::O)));
    for (int j = 1; j < 8; ++j) {
      if (i != j) EXPECT_EQ(mul(e(i), e(j)), neg(mul(e(j), e(i))));
    }
  }
}

// (e1 e2) e4 = e7 while e1 (e2 e4) = -e7: associativity genuinely fails,
// and the failure itself is pinned as an identity.
TEST(NormedAlgebra, OctonionNonAssociativityWitness) {
  const auto e = [](int i) { return NormedElement::basis(Algebra::O, i); };
  const NormedElement lhs = mul(mul(e(1), e(2)), e(4));
  const NormedElement rhs = mul(e(1), mul(e(2), e(4)));
  EXPECT_EQ(lhs, e(7));
  EXPECT_EQ(rhs, neg(e(7)));
  EXPECT_NE(lhs, rhs);
  EXPECT_EQ(lhs, neg(rhs));
}

TEST(NormedAlgebra, NormMultiplicativeOnSeededPairs) {
  for (Algebra alg : kAll) {
    SeededRng rng(1000 + static_cast<std::uint64_t>(algebraDim(alg)));
    for (int trial = 0; trial < 100; ++trial) {
      const NormedElement a = randomElement(alg, rng);
      const NormedElement b = randomElement(alg, rng);
      EXPECT_EQ(normSq(mul(a, b)), normSq(a) * normSq(b))
          << algebraName(alg) << ": a = " << toString(a) << ", b = " << toString(b);
    }
  }
}

TEST(NormedAlgebra, ConjIsAntiAutomorphism) {
  for (Algebra alg : kAll) {
    SeededRng rng(2000 + static_cast<std::uint64_t>(algebraDim(alg)));
    for (int trial = 0; trial < 25; ++trial) {
      const NormedElement a = randomElement(alg, rng);
      const NormedElement b = randomElement(alg, rng);
      EXPECT_EQ(conj(mul(a, b)), mul(conj(b), conj(a)));
      EXPECT_EQ(mul(a, conj(a)), scale(normSq(a), NormedElement::one(alg)));
      EXPECT_EQ(add(a, conj(a)), scale(Rat(2) * re(a), NormedElement::one(alg)));
      EXPECT_EQ(sub(a, im(a)), scale(re(a), NormedElement::one(alg)));
    }
  }
}

TEST(NormedAlgebra, AssociativeForRCH) {
  for (Algebra alg : {Algebra::R, Algebra::C, Algebra::H}) {
    SeededRng rng(3000 + static_cast<std::uint64_t>(algebraDim(alg)));
    for (int trial = 0; trial < 25; ++trial) {
      const NormedElement a = randomElement(alg, rng);
      const NormedElement b = randomElement(alg, rng);
      const NormedElement c = randomElement(alg, rng);
      EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    }
  }
}

TEST(NormedAlgebra, OctonionAlternativity) {
  SeededRng rng(4000);
  for (int trial = 0; trial < 25; ++trial) {
    const NormedElement a = randomElement(Algebra::O, rng);
    const NormedElement b = randomElement(Algebra::O, rng);
    EXPECT_EQ(mul(a, mul(a, b)), mul(mul(a, a), b));
    EXPECT_EQ(mul(mul(a, b), b), mul(a, mul(b, b)));
    EXPECT_EQ(mul(mul(a, b), a), mul(a, mul(b, a)));  // flexible law
  }
}

TEST(NormedAlgebra, SampleUnitExactAndReproducible) {
  for (Algebra alg : kAll) {
    for (std::uint64_t seed : {0ull, 1ull, 7ull, 123456789ull}) {
      const NormedElement u = sampleUnit(alg, seed);
      EXPECT_EQ(normSq(u), Rat(1)) << algebraName(alg) << " seed " << seed;
      EXPECT_EQ(u, sampleUnit(alg, seed));
    }
    EXPECT_NE(sampleUnit(alg, 2), sampleUnit(alg, 3));
  }
  EXPECT_EQ(sampleUnit(Algebra::C, 5).algebra, Algebra::C);
}

TEST(NormedAlgebra, MismatchedTagsThrow) {
  const NormedElement a = NormedElement::one(Algebra::C);
  const NormedElement b = NormedElement::one(Algebra::H);
  EXPECT_THROW(mul(a, b), std::invalid_argument);
  EXPECT_THROW(add(a, b), std::invalid_argument);
  EXPECT_THROW(NormedElement::fromCoords(Algebra::C, {Rat(1)}), std::invalid_argument);
  EXPECT_THROW(algebraFromName("Q"), std::invalid_argument);
}

// Right/left multiplication matrices realize the algebra action on column
// coordinates; the adjoint of right multiplication by a is right
// multiplication by conj(a), in every algebra of the tower.
TEST(NormedAlgebra, MultiplicationMatrices) {
  for (Algebra alg : kAll) {
    SeededRng rng(5000 + static_cast<std::uint64_t>(algebraDim(alg)));
    for (int trial = 0; trial < 10; ++trial) {
      const NormedElement a = randomElement(alg, rng);
      const NormedElement x = randomElement(alg, rng);
      EXPECT_EQ(rightMulMatrix(a).applyTo(x.coords), mul(x, a).coords);
      EXPECT_EQ(leftMulMatrix(a).applyTo(x.coords), mul(a, x).coords);
      EXPECT_EQ(rightMulMatrix(conj(a)), rightMulMatrix(a).transpose());
      EXPECT_EQ(leftMulMatrix(conj(a)), leftMulMatrix(a).transpose());
    }
    // Composition is order-reversing for right multiplication in the
    // associative members of the tower.
    if (alg != Algebra::O) {
      SeededRng rng2(6000);
      const NormedElement a = randomElement(alg, rng2);
      const NormedElement b = randomElement(alg, rng2);
      EXPECT_EQ(rightMulMatrix(mul(a, b)), rightMulMatrix(b) * rightMulMatrix(a));
      EXPECT_EQ(leftMulMatrix(mul(a, b)), leftMulMatrix(a) * leftMulMatrix(b));
    }
  }
}

TEST(NormedAlgebra, ToStringReadable) {
  NormedElement a = NormedElement::zero(Algebra::H);
  EXPECT_EQ(toString(a), "0");
  a.coords[0] = ratio(1, 2);
  a.coords[2] = Rat(-1);
  a.coords[3] = Rat(3);
  EXPECT_EQ(toString(a), "1/2 - e2 + 3 e3");
  EXPECT_EQ(toString(neg(NormedElement::one(Algebra::R))), "-1");
}

}  // namespace
}  // namespace superlef
