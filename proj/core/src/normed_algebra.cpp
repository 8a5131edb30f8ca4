#include "superlef/normed_algebra.hpp"

#include <stdexcept>

#include "superlef/rng.hpp"

namespace superlef {

namespace {

// Frozen basis multiplication table for the octonions, generated once from
// the doubling rule (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)) applied to
// the quaternions with e1e2 = e3 cyclic. Each algebra in the tower R, C, H, O
// sits as the top-left block of the next, so the R/C/H products are read from
// the same table. IDX[i][j] is the basis index of e_i*e_j, SGN[i][j] its sign.
constexpr int kIdx[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
};
constexpr int kSgn[8][8] = {
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, -1, +1},
    {+1, -1, -1, +1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, -1, +1, -1},
    {+1, -1, -1, -1, -1, +1, +1, +1},
    {+1, +1, -1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, -1, +1, -1, -1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
};

void requireSameAlgebra(const NormedElement& a, const NormedElement& b) {
  if (a.algebra != b.algebra) {
    throw std::invalid_argument("algebra tag mismatch: " + algebraName(a.algebra) + " vs " +
                                algebraName(b.algebra));
  }
}

}  // namespace

int algebraDim(Algebra alg) {
  switch (alg) {
    case Algebra::R: return 1;
    case Algebra::C: return 2;
    case Algebra::H: return 4;
    case Algebra::O: return 8;
  }
  throw std::logic_error("unknown algebra tag");
}

std::string algebraName(Algebra alg) {
  switch (alg) {
    case Algebra::R: return "R";
    case Algebra::C: return "C";
    case Algebra::H: return "H";
    case Algebra::O: return "O";
  }
  throw std::logic_error("unknown algebra tag");
}

Algebra algebraFromName(const std::string& name) {
  if (name == "R") return Algebra::R;
  if (name == "C") return Algebra::C;
  if (name == "H") return Algebra::H;
  if (name == "O") return Algebra::O;
  throw std::invalid_argument("unknown algebra name: " + name);
}

NormedElement NormedElement::zero(Algebra alg) {
  return {alg, std::vector<Rat>(static_cast<std::size_t>(algebraDim(alg)), Rat(0))};
}

NormedElement NormedElement::one(Algebra alg) { return basis(alg, 0); }

NormedElement NormedElement::basis(Algebra alg, int i) {
  if (i < 0 || i >= algebraDim(alg)) throw std::out_of_range("basis index out of range");
  NormedElement out = zero(alg);
  out.coords[static_cast<std::size_t>(i)] = 1;
  return out;
}

NormedElement NormedElement::fromCoords(Algebra alg, std::vector<Rat> coords) {
  if (coords.size() != static_cast<std::size_t>(algebraDim(alg))) {
    throw std::invalid_argument("coordinate vector has wrong length for algebra");
  }
  return {alg, std::move(coords)};
}

bool NormedElement::isZero() const {
  for (const Rat& c : coords) {
    if (!superlef::isZero(c)) return false;
  }
  return true;
}

std::pair<int, int> mulBasis(Algebra alg, int i, int j) {
  const int d = algebraDim(alg);
  if (i < 0 || i >= d || j < 0 || j >= d) throw std::out_of_range("basis index out of range");
  return {kSgn[i][j], kIdx[i][j]};
}

NormedElement add(const NormedElement& a, const NormedElement& b) {
  requireSameAlgebra(a, b);
  NormedElement out = a;
  for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] += b.coords[k];
  return out;
}

NormedElement sub(const NormedElement& a, const NormedElement& b) {
  requireSameAlgebra(a, b);
  NormedElement out = a;
  for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] -= b.coords[k];
  return out;
}

NormedElement neg(const NormedElement& a) {
  NormedElement out = a;
  for (Rat& c : out.coords) c = -c;
  return out;
}

NormedElement scale(const Rat& s, const NormedElement& a) {
  NormedElement out = a;
  for (Rat& c : out.coords) c *= s;
  return out;
}

NormedElement mul(const NormedElement& a, const NormedElement& b) {
  requireSameAlgebra(a, b);
  const int d = algebraDim(a.algebra);
  NormedElement out = NormedElement::zero(a.algebra);
  for (int i = 0; i < d; ++i) {
    const Rat& ai = a.coords[static_cast<std::size_t>(i)];
    if (superlef::isZero(ai)) continue;
    for (int j = 0; j < d; ++j) {
      const Rat& bj = b.coords[static_cast<std::size_t>(j)];
      if (superlef::isZero(bj)) continue;
      Rat term = ai * bj;
      if (kSgn[i][j] < 0) term = -term;
      out.coords[static_cast<std::size_t>(kIdx[i][j])] += term;
    }
  }
  return out;
}

NormedElement conj(const NormedElement& a) {
  NormedElement out = a;
  for (std::size_t k = 1; k < out.coords.size(); ++k) out.coords[k] = -out.coords[k];
  return out;
}

Rat re(const NormedElement& a) { return a.coords[0]; }

NormedElement im(const NormedElement& a) {
  NormedElement out = a;
  out.coords[0] = 0;
  return out;
}

Rat normSq(const NormedElement& a) {
  Rat out(0);
  for (const Rat& c : a.coords) out += c * c;
  return out;
}

NormedElement sampleUnit(Algebra alg, std::uint64_t seed) {
  SeededRng rng(seed);
  const int d = algebraDim(alg);
  if (d == 1) {
    return (rng.next() % 2 == 0) ? NormedElement::one(alg) : neg(NormedElement::one(alg));
  }
  // Stereographic image of a rational (d-1)-vector v:
  //   (1 - |v|^2 + 2v) / (1 + |v|^2),
  // which has squared norm ((1-|v|^2)^2 + 4|v|^2) / (1+|v|^2)^2 == 1.
  std::vector<Rat> v;
  Rat vnorm(0);
  for (int k = 1; k < d; ++k) {
    Rat t = rng.nextRat(9, 5);
    vnorm += t * t;
    v.push_back(std::move(t));
  }
  const Rat denom = Rat(1) + vnorm;
  NormedElement out = NormedElement::zero(alg);
  out.coords[0] = (Rat(1) - vnorm) / denom;
  for (int k = 1; k < d; ++k) {
    out.coords[static_cast<std::size_t>(k)] = Rat(2) * v[static_cast<std::size_t>(k - 1)] / denom;
  }
  return out;
}

Mat<Rat> rightMulMatrix(const NormedElement& a) {
  const int d = algebraDim(a.algebra);
  Mat<Rat> out(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    const NormedElement col = mul(NormedElement::basis(a.algebra, j), a);
    for (int i = 0; i < d; ++i) {
      out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          col.coords[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

Mat<Rat> leftMulMatrix(const NormedElement& a) {
  const int d = algebraDim(a.algebra);
  Mat<Rat> out(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    const NormedElement col = mul(a, NormedElement::basis(a.algebra, j));
    for (int i = 0; i < d; ++i) {
      out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          col.coords[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

std::string toString(const NormedElement& a) {
  std::string out;
  for (std::size_t k = 0; k < a.coords.size(); ++k) {
    const Rat& c = a.coords[k];
    if (superlef::isZero(c)) continue;
    const bool negative = sgn(c) < 0;
    Rat mag = negative ? Rat(-c) : c;
    std::string coef = mag.get_str();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += coef;
    } else {
      if (coef != "1") out += coef + " ";
      out += "e" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace superlef
