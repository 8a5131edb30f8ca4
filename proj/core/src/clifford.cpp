#include "superlef/clifford.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace superlef {

namespace {

void requireSameM(int a, int b) {
  if (a != b) throw std::invalid_argument("dimension mismatch between W elements / spinors");
}

std::vector<Rat> zeros(int n) { return std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)); }

}  // namespace

WElement WElement::zero(int m) { return {zeros(m), zeros(m)}; }

WElement WElement::vectorBasis(int m, int j) {
  WElement w = zero(m);
  w.vec.at(static_cast<std::size_t>(j)) = 1;
  return w;
}

WElement WElement::covectorBasis(int m, int j) {
  WElement w = zero(m);
  w.cov.at(static_cast<std::size_t>(j)) = 1;
  return w;
}

WElement WElement::eBasis(int m, int i) {
  if (i < 0 || i >= 2 * m) throw std::out_of_range("hyperbolic basis index out of range");
  const int j = i < m ? i : i - m;
  WElement w = zero(m);
  w.cov[static_cast<std::size_t>(j)] = 1;
  w.vec[static_cast<std::size_t>(j)] = (i < m) ? 1 : -1;
  return w;
}

WElement WElement::fromFlat(const std::vector<Rat>& flat) {
  if (flat.size() % 2 != 0) throw std::invalid_argument("flat W vector must have even length");
  const std::size_t m = flat.size() / 2;
  WElement w;
  w.vec.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(m));
  w.cov.assign(flat.begin() + static_cast<std::ptrdiff_t>(m), flat.end());
  return w;
}

std::vector<Rat> WElement::toFlat() const {
  std::vector<Rat> out = vec;
  out.insert(out.end(), cov.begin(), cov.end());
  return out;
}

bool WElement::isZero() const {
  for (const Rat& c : vec) {
    if (!superlef::isZero(c)) return false;
  }
  for (const Rat& c : cov) {
    if (!superlef::isZero(c)) return false;
  }
  return true;
}

WElement add(const WElement& a, const WElement& b) {
  requireSameM(a.dimV(), b.dimV());
  WElement out = a;
  for (std::size_t k = 0; k < out.vec.size(); ++k) {
    out.vec[k] += b.vec[k];
    out.cov[k] += b.cov[k];
  }
  return out;
}

WElement sub(const WElement& a, const WElement& b) { return add(a, neg(b)); }

WElement neg(const WElement& a) {
  WElement out = a;
  for (Rat& c : out.vec) c = -c;
  for (Rat& c : out.cov) c = -c;
  return out;
}

WElement scale(const Rat& s, const WElement& a) {
  WElement out = a;
  for (Rat& c : out.vec) c *= s;
  for (Rat& c : out.cov) c *= s;
  return out;
}

Rat quadQ(const WElement& w, const WElement& v) {
  requireSameM(w.dimV(), v.dimV());
  Rat out(0);
  for (std::size_t k = 0; k < w.vec.size(); ++k) {
    out += v.cov[k] * w.vec[k] + w.cov[k] * v.vec[k];
  }
  return out / 2;
}

Mat<Rat> quadQMatrix(int m) {
  const std::size_t n = static_cast<std::size_t>(m);
  Mat<Rat> q(2 * n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    q.at(j, n + j) = ratio(1, 2);
    q.at(n + j, j) = ratio(1, 2);
  }
  return q;
}

bool isQAntisymmetric(const Mat<Rat>& x) {
  if (x.rows() != x.cols() || x.rows() % 2 != 0) return false;
  const Mat<Rat> q = quadQMatrix(static_cast<int>(x.rows() / 2));
  return (q * x + x.transpose() * q).isZero();
}

Spinor Spinor::zero(int m) {
  return {m, std::vector<Rat>(spinorDim(m), Rat(0))};
}

Spinor Spinor::scalarOne(int m) { return basis(m, 0); }

Spinor Spinor::basis(int m, std::uint32_t mask) {
  if (mask >= spinorDim(m)) throw std::out_of_range("spinor basis mask out of range");
  Spinor s = zero(m);
  s.a[mask] = 1;
  return s;
}

bool Spinor::isZero() const {
  for (const Rat& c : a) {
    if (!superlef::isZero(c)) return false;
  }
  return true;
}

Spinor add(const Spinor& x, const Spinor& y) {
  requireSameM(x.m, y.m);
  Spinor out = x;
  for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] += y.a[k];
  return out;
}

Spinor sub(const Spinor& x, const Spinor& y) { return add(x, neg(y)); }

Spinor neg(const Spinor& x) {
  Spinor out = x;
  for (Rat& c : out.a) c = -c;
  return out;
}

Spinor scale(const Rat& s, const Spinor& x) {
  Spinor out = x;
  for (Rat& c : out.a) c *= s;
  return out;
}

std::size_t spinorDim(int m) {
  if (m < 0 || m > 20) throw std::out_of_range("spinor dimension out of supported range");
  return std::size_t{1} << m;
}

int slotSign(std::uint32_t mask, int j) {
  const std::uint32_t below = mask & ((std::uint32_t{1} << j) - 1);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

Spinor spinAct(const WElement& w, const Spinor& phi) {
  const int m = w.dimV();
  requireSameM(m, phi.m);
  Spinor out = Spinor::zero(m);
  for (std::uint32_t s = 0; s < phi.a.size(); ++s) {
    const Rat& c = phi.a[s];
    if (superlef::isZero(c)) continue;
    for (int j = 0; j < m; ++j) {
      const std::uint32_t bit = std::uint32_t{1} << j;
      if (!(s & bit)) {
        const Rat& xi = w.cov[static_cast<std::size_t>(j)];
        if (!superlef::isZero(xi)) {
          Rat term = xi * c;
          if (slotSign(s, j) < 0) term = -term;
          out.a[s | bit] += term;
        }
      } else {
        const Rat& xj = w.vec[static_cast<std::size_t>(j)];
        if (!superlef::isZero(xj)) {
          Rat term = xj * c;
          if (slotSign(s, j) > 0) term = -term;  // minus sign of the contraction
          out.a[s ^ bit] += term;
        }
      }
    }
  }
  return out;
}

SparseMat<Rat> cliffordOp(int m, const WElement& w) {
  requireSameM(m, w.dimV());
  const std::size_t dim = spinorDim(m);
  SparseMat<Rat> out(dim, dim);
  for (std::uint32_t s = 0; s < dim; ++s) {
    for (int j = 0; j < m; ++j) {
      const std::uint32_t bit = std::uint32_t{1} << j;
      if (!(s & bit)) {
        const Rat& xi = w.cov[static_cast<std::size_t>(j)];
        if (!superlef::isZero(xi)) {
          out.add(s | bit, s, slotSign(s, j) > 0 ? xi : Rat(-xi));
        }
      } else {
        const Rat& xj = w.vec[static_cast<std::size_t>(j)];
        if (!superlef::isZero(xj)) {
          out.add(s ^ bit, s, slotSign(s, j) > 0 ? Rat(-xj) : xj);
        }
      }
    }
  }
  return out;
}

SparseMat<Rat> cliffordE(int m, int i) { return cliffordOp(m, WElement::eBasis(m, i)); }

std::optional<Parity> homogeneousParity(const SparseMat<Rat>& op) {
  bool sawEven = false;
  bool sawOdd = false;
  for (std::size_t i = 0; i < op.rows(); ++i) {
    for (const auto& [j, value] : op.row(i)) {
      (void)value;
      const bool flip =
          (std::popcount(static_cast<std::uint32_t>(i)) + std::popcount(static_cast<std::uint32_t>(j))) % 2 != 0;
      (flip ? sawOdd : sawEven) = true;
    }
  }
  if (sawEven && sawOdd) return std::nullopt;
  return sawOdd ? Parity::Odd : Parity::Even;
}

Mat<Rat> adOf(const SparseMat<Rat>& c, int m) {
  const std::size_t dim = spinorDim(m);
  if (c.rows() != dim || c.cols() != dim) throw std::invalid_argument("operator has wrong size");
  const std::size_t n = static_cast<std::size_t>(m);
  Mat<Rat> out(2 * n, 2 * n);
  for (int k = 0; k < 2 * m; ++k) {
    const WElement wk = (k < m) ? WElement::vectorBasis(m, k) : WElement::covectorBasis(m, k - m);
    const SparseMat<Rat> ew = cliffordOp(m, wk);
    const SparseMat<Rat> b = c * ew - ew * c;
    // If b = E_u then u's covector part is b applied to the scalar spinor and
    // u's vector part is read off the scalar component of b on degree-1 inputs.
    WElement u = WElement::zero(m);
    for (int j = 0; j < m; ++j) {
      const std::uint32_t bit = std::uint32_t{1} << j;
      u.cov[static_cast<std::size_t>(j)] = b.get(bit, 0);
      u.vec[static_cast<std::size_t>(j)] = -b.get(0, bit);
    }
    if (cliffordOp(m, u) != b) throw std::domain_error("not in spin degree 2");
    const std::vector<Rat> flat = u.toFlat();
    for (std::size_t i = 0; i < 2 * n; ++i) out.at(i, static_cast<std::size_t>(k)) = flat[i];
  }
  return out;
}

namespace {

/// Per-m factorization of the map (coefficients over the quadratic monomial
/// basis E_{e_i} E_{e_j}, i < j) -> (flattened matrix on W).
struct AdSolveCache {
  std::vector<std::pair<int, int>> pairs;
  std::vector<SparseMat<Rat>> monomials;
  std::unique_ptr<LinearSolver<Rat>> solver;
};

const AdSolveCache& adSolveCache(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<AdSolveCache>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return *it->second;

  auto entry = std::make_unique<AdSolveCache>();
  std::vector<SparseMat<Rat>> es;
  for (int i = 0; i < 2 * m; ++i) es.push_back(cliffordE(m, i));
  for (int i = 0; i < 2 * m; ++i) {
    for (int j = i + 1; j < 2 * m; ++j) {
      entry->pairs.emplace_back(i, j);
      entry->monomials.push_back(es[static_cast<std::size_t>(i)] * es[static_cast<std::size_t>(j)]);
    }
  }
  const std::size_t cols = entry->monomials.size();
  const std::size_t rows = static_cast<std::size_t>(2 * m) * static_cast<std::size_t>(2 * m);
  Mat<Rat> system(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const std::vector<Rat> image = adOf(entry->monomials[c], m).flatten();
    for (std::size_t r = 0; r < rows; ++r) system.at(r, c) = image[r];
  }
  entry->solver = std::make_unique<LinearSolver<Rat>>(system);
  if (!entry->solver->fullColumnRank()) {
    throw std::logic_error("quadratic Clifford monomials unexpectedly dependent");
  }
  auto [pos, inserted] = cache.emplace(m, std::move(entry));
  (void)inserted;
  return *pos->second;
}

}  // namespace

SparseMat<Rat> adInverse(const Mat<Rat>& x, int m) {
  if (x.rows() != static_cast<std::size_t>(2 * m) || x.cols() != static_cast<std::size_t>(2 * m)) {
    throw std::invalid_argument("matrix has wrong size for so(W, Q)");
  }
  if (!isQAntisymmetric(x)) throw std::domain_error("Q-antisymmetry violated");
  const AdSolveCache& cache = adSolveCache(m);
  const auto coeffs = cache.solver->solve(x.flatten());
  if (!coeffs.has_value()) throw std::domain_error("Q-antisymmetry violated");
  const std::size_t dim = spinorDim(m);
  SparseMat<Rat> out(dim, dim);
  for (std::size_t k = 0; k < coeffs->size(); ++k) {
    const Rat& c = (*coeffs)[k];
    if (superlef::isZero(c)) continue;
    out = out + cache.monomials[k].scaled(c);
  }
  return out;
}

Mat<Rat> psi4(const Mat<Rat>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
  if (!(a + a.transpose()).isZero()) throw std::invalid_argument("matrix must be antisymmetric");
  const std::size_t m = a.rows();
  Mat<Rat> out(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out.at(i, j) = a.at(i, j);
      out.at(m + i, m + j) = a.at(i, j);
    }
  }
  return out;
}

SparseMat<Rat> nuOp(int m) {
  SparseMat<Rat> out = SparseMat<Rat>::identity(spinorDim(m));
  for (int i = 0; i < m; ++i) out = out * cliffordE(m, i);
  return out;
}

namespace {

int complementSign(std::uint32_t mask, int m) {
  // Sign of the permutation sorting (I, I^c) into 1..m: one inversion for
  // every a in I, b in I^c with a > b.
  int inversions = 0;
  for (int a = 0; a < m; ++a) {
    if (!(mask & (std::uint32_t{1} << a))) continue;
    for (int b = 0; b < a; ++b) {
      if (!(mask & (std::uint32_t{1} << b))) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Spinor hodgeStar(const Spinor& phi) {
  const std::uint32_t full = static_cast<std::uint32_t>(spinorDim(phi.m)) - 1;
  Spinor out = Spinor::zero(phi.m);
  for (std::uint32_t s = 0; s < phi.a.size(); ++s) {
    const Rat& c = phi.a[s];
    if (superlef::isZero(c)) continue;
    out.a[full ^ s] = complementSign(s, phi.m) > 0 ? c : Rat(-c);
  }
  return out;
}

SparseMat<Rat> hodgeStarOp(int m) {
  const std::size_t dim = spinorDim(m);
  const std::uint32_t full = static_cast<std::uint32_t>(dim) - 1;
  SparseMat<Rat> out(dim, dim);
  for (std::uint32_t s = 0; s < dim; ++s) {
    out.set(full ^ s, s, Rat(complementSign(s, m)));
  }
  return out;
}

namespace {

std::string maskName(std::uint32_t mask) {
  std::string out;
  for (int j = 0; mask >> j; ++j) {
    if (!(mask & (std::uint32_t{1} << j))) continue;
    if (!out.empty()) out += "^";
    out += "f" + std::to_string(j + 1);
  }
  return out;
}

void appendTerm(std::string& out, const Rat& c, const std::string& name) {
  const bool negative = sgn(c) < 0;
  Rat mag = negative ? Rat(-c) : c;
  std::string coef = mag.get_str();
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (name.empty()) {
    out += coef;
  } else {
    if (coef != "1") out += coef + " ";
    out += name;
  }
}

}  // namespace

std::string toString(const WElement& w) {
  std::string out;
  for (std::size_t j = 0; j < w.vec.size(); ++j) {
    if (!superlef::isZero(w.vec[j])) appendTerm(out, w.vec[j], "f_" + std::to_string(j + 1));
  }
  for (std::size_t j = 0; j < w.cov.size(); ++j) {
    if (!superlef::isZero(w.cov[j])) appendTerm(out, w.cov[j], "f^" + std::to_string(j + 1));
  }
  return out.empty() ? "0" : out;
}

std::string toString(const Spinor& phi) {
  std::string out;
  for (std::uint32_t s = 0; s < phi.a.size(); ++s) {
    if (!superlef::isZero(phi.a[s])) appendTerm(out, phi.a[s], maskName(s));
  }
  return out.empty() ? "0" : out;
}

}  // namespace superlef
