#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sympcalc/linalg.hpp"
#include "sympcalc/matrix.hpp"
#include "sympcalc/partitions.hpp"

namespace sympcalc {

// Roots of type C_n in the standard coordinates e_1..e_n. Indices are
// one-based. Two-index kinds keep i != j; Sum and NegSum keep i < j.
class RootLabel {
 public:
  enum class Kind { Diff, Sum, NegSum, Double, NegDouble };

  RootLabel() = default;
  static RootLabel diff(int i, int j);  // e_i - e_j
  static RootLabel sum(int i, int j);   // e_i + e_j
  static RootLabel neg_sum(int i, int j);  // -e_i - e_j
  static RootLabel twice(int i);        // 2e_i
  static RootLabel neg_twice(int i);    // -2e_i
  // Root with the given coordinate vector; throws BadIndices if none.
  static RootLabel from_weight(const std::vector<int>& w);
  // "e1-e2", "e2+e3", "-e1-e2", "2e1", "-2e1" (also "-e5-e2", "e3-e2").
  static RootLabel parse(std::string_view text);

  Kind kind() const { return kind_; }
  int i() const { return i_; }
  int j() const { return j_; }

  // Coordinates in e_1..e_n.
  std::vector<int> weight(int n) const;
  RootLabel negated() const;
  bool positive() const;
  bool is_long() const { return kind_ == Kind::Double || kind_ == Kind::NegDouble; }
  int max_index() const { return std::max(i_, j_); }

  // Matrix entries (zero-based row, col, sign) of the unit root vector.
  struct Entry {
    std::size_t row;
    std::size_t col;
    int sign;
  };
  std::vector<Entry> entries(int n) const;
  // The entry carrying coefficient +1; the root's coordinate is read there.
  Entry primary(int n) const { return entries(n).front(); }

  std::string to_string() const;

  friend bool operator==(const RootLabel&, const RootLabel&) = default;
  friend auto operator<=>(const RootLabel&, const RootLabel&) = default;

 private:
  RootLabel(Kind k, int i, int j) : kind_(k), i_(i), j_(j) {}
  Kind kind_ = Kind::Diff;
  int i_ = 1;
  int j_ = 2;
};

// All 2n^2 roots of C_n in a fixed order.
const std::vector<RootLabel>& all_roots(int n);

// Exponents d_1..d_n; the torus element is diag(t^{d_1},...,t^{d_n},
// t^{-d_n},...,t^{-d_1}).
struct Cocharacter {
  std::vector<int> exponents;

  int rank() const { return static_cast<int>(exponents.size()); }
  int pair(const RootLabel& a) const;
  // Exponent attached to matrix row/column r (zero-based).
  int diagonal(std::size_t r) const;
  // Differential of the cocharacter: diag(d, -reverse(d)).
  RationalMatrix cartan() const;
  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
};

// Element of the standard basis of sp(2n): a Cartan generator
// h_i = E_ii - E_{i'i'} or a unit root vector.
struct BasisElement {
  bool cartan = false;
  int index = 0;  // one-based Cartan index when cartan
  RootLabel root;

  std::string to_string() const;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

int sp_dimension(int n);
// Cartan generators first, then all_roots(n).
const std::vector<BasisElement>& sp_basis(int n);

template <typename T>
Matrix<T> basis_matrix(const BasisElement& b, int n) {
  Matrix<T> m(2 * static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n));
  if (b.cartan) {
    auto k = static_cast<std::size_t>(b.index - 1);
    m(k, k) = T(1);
    m(2 * n - 1 - k, 2 * n - 1 - k) = T(-1);
    return m;
  }
  for (const auto& e : b.root.entries(n)) m(e.row, e.col) = T(e.sign);
  return m;
}

template <typename T>
Matrix<T> root_matrix(const RootLabel& a, const T& c, int n) {
  Matrix<T> m(2 * static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n));
  if (is_zero(c)) return m;
  for (const auto& e : a.entries(n)) m(e.row, e.col) = e.sign > 0 ? c : T(-c);
  return m;
}

// Root vector x_a(c) in sp(2n). Throws BadIndices when a exceeds rank n.
inline RationalMatrix root_vector(const RootLabel& a, const Rational& c, int n) {
  if (a.max_index() > n) throw Error(ErrorCode::BadIndices, "root " + a.to_string() + " exceeds rank");
  return root_matrix(a, c, n);
}

// Coordinates of M in sp_basis(n). Assumes M lies in sp(2n).
template <typename T>
Vector<T> sp_coordinates(const Matrix<T>& m) {
  if (!m.is_square() || m.rows() % 2 != 0) throw Error(ErrorCode::OddDimension, "matrix is not of even size");
  int n = static_cast<int>(m.rows() / 2);
  Vector<T> v;
  v.reserve(static_cast<std::size_t>(sp_dimension(n)));
  for (int i = 0; i < n; ++i) v.push_back(m(i, i));
  for (const auto& r : all_roots(n)) {
    auto e = r.primary(n);
    v.push_back(m(e.row, e.col));
  }
  return v;
}

template <typename T>
Matrix<T> sp_from_coordinates(const Vector<T>& v, int n) {
  const auto& basis = sp_basis(n);
  if (v.size() != basis.size()) throw Error(ErrorCode::BadIndices, "coordinate vector length mismatch");
  Matrix<T> m(2 * static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (is_zero(v[k])) continue;
    const auto& b = basis[k];
    if (b.cartan) {
      auto i = static_cast<std::size_t>(b.index - 1);
      m(i, i) += v[k];
      m(2 * n - 1 - i, 2 * n - 1 - i) -= v[k];
      continue;
    }
    for (const auto& e : b.root.entries(n)) {
      if (e.sign > 0) {
        m(e.row, e.col) += v[k];
      } else {
        m(e.row, e.col) -= v[k];
      }
    }
  }
  return m;
}

// The fixed form J with J_{i,2n+1-i} = 1 for i <= n and -1 for i > n.
RationalMatrix symplectic_form(int n);

// M^T J + J M = 0.
template <typename T>
bool sp_membership(const Matrix<T>& m) {
  if (!m.is_square() || m.rows() % 2 != 0) throw Error(ErrorCode::OddDimension, "matrix is not of even size");
  std::size_t d = m.rows();
  std::size_t n = d / 2;
  // (JM)_{rc} = J_{r,r'} M_{r',c}; membership is symmetry of JM.
  auto jm = [&](std::size_t r, std::size_t c) {
    std::size_t rp = d - 1 - r;
    return r < n ? T(m(rp, c)) : T(-m(rp, c));
  };
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = r + 1; c < d; ++c)
      if (!(jm(r, c) == jm(c, r))) return false;
  return true;
}

// g^T J g = J.
template <typename T>
bool is_symplectic(const Matrix<T>& g) {
  if (!g.is_square() || g.rows() % 2 != 0) return false;
  auto j = lift<T>(symplectic_form(static_cast<int>(g.rows() / 2)));
  return g.transpose() * j * g == j;
}

// Nilpotent X_{p,a}: unit-half root vectors along each block chain plus the
// long negative root with coefficient a_i at the end of every even block.
RationalMatrix build_nilpotent(const SymplecticPartition& p, const SquareClassAssignment& a);

struct NilpotentSummand {
  RootLabel root;
  Rational coefficient;
};
// The root summands that make up X_{p,a}, in block order.
std::vector<NilpotentSummand> nilpotent_summands(const SymplecticPartition& p, const SquareClassAssignment& a);

Cocharacter build_cocharacter(const SymplecticPartition& p);

struct GradedDecomposition {
  int n = 0;
  std::map<int, std::vector<BasisElement>> levels;
  int max_level = 0;

  std::size_t dim(int level) const;
  std::size_t total_dim() const;
  // Basis of the sum of levels >= j.
  std::vector<BasisElement> at_least(int j) const;
};

GradedDecomposition grade(const Cocharacter& d);
GradedDecomposition grade(const SymplecticPartition& p);

struct Sl2Triple {
  RationalMatrix x;
  RationalMatrix h;
  RationalMatrix y;
};

// Solves [Y, X] = H with Y in the +2 eigenspace of ad H. Throws NoSolution.
Sl2Triple complete_sl2(const RationalMatrix& x, const RationalMatrix& h);

struct TripleCheck {
  bool hx = false;  // [H,X] = -2X
  bool hy = false;  // [H,Y] = 2Y
  bool yx = false;  // [Y,X] = H
  bool membership = false;
  bool ok() const { return hx && hy && yx && membership; }
};
TripleCheck check_triple(const Sl2Triple& t);

// Coordinate basis of {Z : tr(X[Z,Z']) = 0 for all Z'}, from the kernel of
// the form matrix on sp_basis.
std::vector<Vector<Rational>> annihilator_sharp(const RationalMatrix& x);
// Coordinate basis of the kernel of ad X on sp(2n).
std::vector<Vector<Rational>> centralizer(const RationalMatrix& x);

enum class ExpLog { Exp, Log };

RationalMatrix exp_log(ExpLog direction, const RationalMatrix& m);

template <typename T>
Matrix<T> exp_nilpotent(const Matrix<T>& m) {
  if (!is_nilpotent(m)) throw Error(ErrorCode::NotNilpotent, "exponential needs a nilpotent matrix");
  Matrix<T> result = Matrix<T>::identity(m.rows());
  Matrix<T> power = Matrix<T>::identity(m.rows());
  Rational coef = 1;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    power = power * m;
    if (power.is_zero()) break;
    coef /= static_cast<unsigned long>(k);
    result += power * T(coef);
  }
  return result;
}

template <typename T>
Matrix<T> log_unipotent(const Matrix<T>& u) {
  Matrix<T> n = u - Matrix<T>::identity(u.rows());
  if (!is_nilpotent(n)) throw Error(ErrorCode::NotUnipotent, "logarithm needs a unipotent matrix");
  Matrix<T> result(u.rows(), u.cols());
  Matrix<T> power = Matrix<T>::identity(u.rows());
  for (std::size_t k = 1; k <= u.rows(); ++k) {
    power = power * n;
    if (power.is_zero()) break;
    Rational c = Rational(k % 2 == 1 ? 1 : -1) / static_cast<unsigned long>(k);
    result += power * T(c);
  }
  return result;
}

}  // namespace sympcalc
