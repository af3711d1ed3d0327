#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympcalc/fourier.hpp"
#include "sympcalc/liealg.hpp"

namespace sympcalc {

// Weyl group element of type C_n: e_i -> signs[i] * e_{perm[i]} (one-based
// images, zero-based vector positions).
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> signs;

  static SignedPermutation identity(int n);
  int rank() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;
  // Monomial matrix in Sp(2n) realizing the element.
  RationalMatrix matrix() const;
  Cocharacter apply(const Cocharacter& d) const;
  SignedPermutation inverse() const;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

enum class TieBreak { LaterFirst, EarlierFirst };

// Element carrying d to a cocharacter with d'_1 >= ... >= d'_n >= 0. Equal
// absolute exponents are ordered by `blocks` (one label per coordinate;
// defaults to the coordinate index) according to `tie`.
SignedPermutation weyl_sorter(const Cocharacter& d, TieBreak tie = TieBreak::LaterFirst,
                              const std::vector<int>& blocks = {});

// g^{-1} = J^{-1} g^T J for symplectic g.
template <typename T>
Matrix<T> symplectic_inverse(const Matrix<T>& g) {
  auto j = lift<T>(symplectic_form(static_cast<int>(g.rows() / 2)));
  return -(j * g.transpose() * j);
}

// g X g^{-1}. Throws NotSymplectic.
template <typename T>
Matrix<T> conjugate_nilpotent(const Matrix<T>& x, const Matrix<T>& g) {
  if (!g.is_square() || g.rows() != x.rows()) throw Error(ErrorCode::NotSymplectic, "g has the wrong size");
  if (!is_symplectic(g)) throw Error(ErrorCode::NotSymplectic, "g does not preserve the symplectic form");
  return g * x * symplectic_inverse(g);
}

// diag(m, I, m*) in Sp(2n) with m* = w m^{-T} w and w the antidiagonal of
// ones. Throws NoSolution when m is singular.
template <typename T>
Matrix<T> levi_embedding(const Matrix<T>& m, int n) {
  std::size_t k = m.rows();
  if (!m.is_square() || k > static_cast<std::size_t>(n)) throw Error(ErrorCode::BadIndices, "Levi block too large");
  auto inv = inverse(m);
  if (!inv) throw Error(ErrorCode::NoSolution, "Levi block is singular");
  std::size_t d = 2 * static_cast<std::size_t>(n);
  Matrix<T> g = Matrix<T>::identity(d);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      g(r, c) = m(r, c);
      // (w m^{-T} w)_{rc} = (m^{-1})_{k-1-c, k-1-r}
      g(d - k + r, d - k + c) = (*inv)(k - 1 - c, k - 1 - r);
    }
  }
  return g;
}

// Coefficient of the entry functional v -> v_{primary(root)} in the
// character tr(X log v), restricted to root coordinates.
template <typename T>
T character_coefficient(const Matrix<T>& x, const RootLabel& root) {
  int n = static_cast<int>(x.rows() / 2);
  T s(0);
  for (const auto& e : root.entries(n)) {
    if (e.sign > 0) {
      s += x(e.col, e.row);
    } else {
      s -= x(e.col, e.row);
    }
  }
  return s;
}

// Nilpotent whose character is sum coeff * v_{primary(root)}.
template <typename T>
Matrix<T> nilpotent_from_character(const std::vector<std::pair<RootLabel, T>>& terms, int n) {
  Matrix<T> x(2 * static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n));
  for (const auto& [root, coeff] : terms) {
    // tr(E_{-r} E_r) is 1 for long roots and 2 for short ones.
    T scaled = coeff * T(Rational(1, root.is_long() ? 1 : 2));
    x += root_matrix<T>(root.negated(), scaled, n);
  }
  return x;
}

// The rank-n setting of the two-stage merge: the character
//   z_12 + z_13 + sum_{i<k} (z_{2i,2i+2} + z_{2i+1,2i+3}) + beta q(2k,2) + alpha q(2k+1,1)
// with q(i,j) = v_{i,2n-2k-1+j}, and the Levi elements diag(1, A, ..., A)
// and diag(1, B, ..., B) that transform it.
struct MergeSetting {
  int n = 0;
  int k = 0;
  Matrix<RatFunc> x;          // nilpotent of the old character, in alpha, beta
  Matrix<RatFunc> epsilon;    // Levi element built from A
  Matrix<RatFunc> x_epsilon;  // epsilon X epsilon^{-1}
  Matrix<RatFunc> x_antidiag;   // old nilpotent with beta = -alpha
  Matrix<RatFunc> epsilon_bar;  // Levi element built from B
  Matrix<RatFunc> x_bar;        // epsilon_bar X epsilon_bar^{-1}
};

// alpha is variable 0 and beta is variable 1. Requires k >= 1, n >= 2k+1.
MergeSetting merge_setting(int k, int n);

// q(i,j) of the merge setting as a root label.
RootLabel merge_q(int k, int n, int i, int j);

struct MergeCheck {
  std::string name;
  RootLabel root;
  RatFunc expected;
  RatFunc actual;
  bool holds() const { return expected == actual; }
};

// Coefficients after both conjugations compared with the expected patterns.
std::vector<MergeCheck> merge_checks(int k, int n);

// Nilpotent Lie subalgebra of sp(2n) generated by root vectors and optional
// extra elements. The basis is kept in sp coordinates.
class UnipotentGroupSpec {
 public:
  UnipotentGroupSpec() = default;
  // Throws NotNilpotentSubalgebra if the generated algebra is not nilpotent.
  UnipotentGroupSpec(int n, std::vector<RootLabel> roots, std::vector<RationalMatrix> extra = {});

  int rank() const { return n_; }
  const std::vector<RootLabel>& roots() const { return roots_; }
  const std::vector<RationalMatrix>& extra() const { return extra_; }
  const std::vector<Vector<Rational>>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  bool contains(const Vector<Rational>& v) const;

 private:
  int n_ = 0;
  std::vector<RootLabel> roots_;
  std::vector<RationalMatrix> extra_;
  std::vector<Vector<Rational>> basis_;
};

struct ExchangeQuadruple {
  UnipotentGroupSpec c;
  CharacterFunctional psi;
  UnipotentGroupSpec xt;
  UnipotentGroupSpec yt;
};

struct ConditionResult {
  int number = 0;
  bool passed = true;
  std::string witness;  // empty when passed
};

struct QuadrupleReport {
  std::vector<ConditionResult> conditions;  // (1)..(6)
  bool ok() const;
};

// Throws RankMismatch.
QuadrupleReport validate_quadruple(const ExchangeQuadruple& q);

// (V_{p,2}, psi_{p,a}, X, Y) with X, Y from lagrangian_halves.
ExchangeQuadruple corollary24_quadruple(const SymplecticPartition& p, const SquareClassAssignment& a);
// Same, but with X and Y spanned by the bare polarization root lists.
ExchangeQuadruple corollary24_root_quadruple(const SymplecticPartition& p, const SquareClassAssignment& a);

bool certify_corollary24(const SymplecticPartition& p, const SquareClassAssignment& a);

}  // namespace sympcalc
