#pragma once

#include <optional>
#include <vector>

#include "sympcalc/matrix.hpp"

namespace sympcalc {

template <typename T>
using Vector = std::vector<T>;

template <typename T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan reduction to reduced row-echelon form over an exact field.
template <typename T>
Echelon<T> rref(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = m.rows();
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (!is_zero(m(r, col))) {
        sel = r;
        break;
      }
    }
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!is_zero(m(row, c))) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      T factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

// Basis of {v : m v = 0}, one vector per free column.
template <typename T>
std::vector<Vector<T>> nullspace(const Matrix<T>& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename T>
struct SolveResult {
  Vector<T> solution;  // particular solution with free variables set to zero
  bool unique = false;
};

// Solve a x = b exactly; nullopt when the system is inconsistent.
template <typename T>
std::optional<SolveResult<T>> solve(const Matrix<T>& a, const Vector<T>& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::BadIndices, "right-hand side length mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto [r, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  SolveResult<T> out;
  out.solution.assign(a.cols(), T(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) out.solution[pivots[i]] = r(i, a.cols());
  out.unique = pivots.size() == a.cols();
  return out;
}

template <typename T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (!m.is_square()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto [r, pivots] = rref(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

// Matrix whose rows are the given vectors.
template <typename T>
Matrix<T> rows_matrix(const std::vector<Vector<T>>& vectors, std::size_t dim) {
  Matrix<T> m(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw Error(ErrorCode::BadIndices, "vector length mismatch");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  }
  return m;
}

// Reduced basis of the span of the given vectors (rows of the RREF).
template <typename T>
std::vector<Vector<T>> span_basis(const std::vector<Vector<T>>& vectors, std::size_t dim) {
  auto [r, pivots] = rref(rows_matrix(vectors, dim));
  std::vector<Vector<T>> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.emplace_back(r.row(i).begin(), r.row(i).end());
  return basis;
}

template <typename T>
std::size_t span_dimension(const std::vector<Vector<T>>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(rows_matrix(vectors, dim));
}

// Basis of span(a) ∩ span(b), computed from the kernel of [A^T | -B^T].
template <typename T>
std::vector<Vector<T>> intersection_basis(const std::vector<Vector<T>>& a, const std::vector<Vector<T>>& b,
                                          std::size_t dim) {
  if (a.empty() || b.empty()) return {};
  auto ba = span_basis(a, dim);
  auto bb = span_basis(b, dim);
  Matrix<T> sys(dim, ba.size() + bb.size());
  for (std::size_t j = 0; j < ba.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) sys(i, j) = ba[j][i];
  for (std::size_t j = 0; j < bb.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) sys(i, ba.size() + j) = -bb[j][i];
  std::vector<Vector<T>> out;
  for (const auto& k : nullspace(sys)) {
    Vector<T> v(dim, T(0));
    for (std::size_t j = 0; j < ba.size(); ++j) {
      if (is_zero(k[j])) continue;
      for (std::size_t i = 0; i < dim; ++i) v[i] += k[j] * ba[j][i];
    }
    out.push_back(std::move(v));
  }
  return span_basis(out, dim);
}

// True when every vector of `sub` lies in span(`space`).
template <typename T>
bool contained_in(const std::vector<Vector<T>>& sub, const std::vector<Vector<T>>& space, std::size_t dim) {
  if (sub.empty()) return true;
  std::size_t base = span_dimension(space, dim);
  std::vector<Vector<T>> joined = space;
  joined.insert(joined.end(), sub.begin(), sub.end());
  return span_dimension(joined, dim) == base;
}

// Span kept in reduced echelon form; membership tests and insertions cost
// one pass over the pivots.
template <typename T>
class SpanMembership {
 public:
  explicit SpanMembership(std::size_t dim) : dim_(dim) {}
  SpanMembership(const std::vector<Vector<T>>& vectors, std::size_t dim) : dim_(dim) {
    for (const auto& v : vectors) insert(v);
  }

  std::size_t dim() const { return rows_.size(); }

  bool contains(Vector<T> v) const {
    reduce(v);
    return leading(v) == dim_;
  }

  // Adds v to the span; false when it was already there.
  bool insert(Vector<T> v) {
    reduce(v);
    std::size_t p = leading(v);
    if (p == dim_) return false;
    T inv = T(1) / v[p];
    for (std::size_t j = p; j < dim_; ++j) {
      if (!is_zero(v[j])) v[j] *= inv;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      T c = rows_[i][p];
      if (is_zero(c)) continue;
      for (std::size_t j = p; j < dim_; ++j) {
        if (!is_zero(v[j])) rows_[i][j] -= c * v[j];
      }
    }
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  void reduce(Vector<T>& v) const {
    if (v.size() != dim_) throw Error(ErrorCode::BadIndices, "vector length mismatch");
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      T c = v[pivots_[i]];
      if (is_zero(c)) continue;
      for (std::size_t j = pivots_[i]; j < dim_; ++j) {
        if (!is_zero(rows_[i][j])) v[j] -= c * rows_[i][j];
      }
    }
  }

  std::size_t leading(const Vector<T>& v) const {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!is_zero(v[j])) return j;
    }
    return dim_;
  }

  std::size_t dim_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector<T>> rows_;
};

}  // namespace sympcalc
