#include "sympcalc/exchange.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sympcalc {

// --- Weyl elements ------------------------------------------------------------

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation s;
  s.perm.resize(static_cast<std::size_t>(n));
  std::iota(s.perm.begin(), s.perm.end(), 1);
  s.signs.assign(static_cast<std::size_t>(n), 1);
  return s;
}

bool SignedPermutation::is_identity() const { return *this == identity(rank()); }

RationalMatrix SignedPermutation::matrix() const {
  const int n = rank();
  const std::size_t d = 2 * static_cast<std::size_t>(n);
  RationalMatrix g(d, d);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    auto target = static_cast<std::size_t>(perm[i] - 1);
    std::size_t i_bar = d - 1 - i;
    std::size_t t_bar = d - 1 - target;
    if (signs[i] > 0) {
      g(target, i) = 1;
      g(t_bar, i_bar) = 1;
    } else {
      // e_i -> e_{t'} forces e_{i'} -> -e_t.
      g(t_bar, i) = 1;
      g(target, i_bar) = -1;
    }
  }
  return g;
}

Cocharacter SignedPermutation::apply(const Cocharacter& d) const {
  Cocharacter out;
  out.exponents.assign(d.exponents.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.exponents[static_cast<std::size_t>(perm[i] - 1)] = signs[i] * d.exponents[i];
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation s;
  s.perm.assign(perm.size(), 0);
  s.signs.assign(perm.size(), 1);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    auto t = static_cast<std::size_t>(perm[i] - 1);
    s.perm[t] = static_cast<int>(i) + 1;
    s.signs[t] = signs[i];
  }
  return s;
}

SignedPermutation weyl_sorter(const Cocharacter& d, TieBreak tie, const std::vector<int>& blocks) {
  const std::size_t n = d.exponents.size();
  std::vector<int> label = blocks;
  if (label.empty()) {
    label.resize(n);
    std::iota(label.begin(), label.end(), 1);
  }
  if (label.size() != n) throw Error(ErrorCode::BadIndices, "one block label per coordinate is required");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int da = std::abs(d.exponents[a]);
    int db = std::abs(d.exponents[b]);
    if (da != db) return da > db;
    return tie == TieBreak::LaterFirst ? label[a] > label[b] : label[a] < label[b];
  });
  SignedPermutation s;
  s.perm.assign(n, 0);
  s.signs.assign(n, 1);
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::size_t i = order[pos];
    s.perm[i] = static_cast<int>(pos) + 1;
    s.signs[i] = d.exponents[i] < 0 ? -1 : 1;
  }
  return s;
}

// --- the two-stage merge computation ---------------------------------------------

RootLabel merge_q(int k, int n, int i, int j) {
  const auto row = static_cast<std::size_t>(i - 1);
  const auto col = static_cast<std::size_t>(2 * n - 2 * k - 1 + j - 1);
  for (const auto& r : all_roots(n)) {
    auto e = r.primary(n);
    if (e.row == row && e.col == col) return r;
  }
  throw Error(ErrorCode::BadIndices, "entry is not a root coordinate");
}

namespace {

template <typename T>
Matrix<T> block_levi(int k, int n, const Matrix<T>& block) {
  const std::size_t size = 2 * static_cast<std::size_t>(k) + 1;
  Matrix<T> m = Matrix<T>::identity(size);
  for (std::size_t b = 0; b < static_cast<std::size_t>(k); ++b) {
    std::size_t base = 1 + 2 * b;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) m(base + r, base + c) = block(r, c);
  }
  return levi_embedding(m, n);
}

template <typename T>
std::vector<std::pair<RootLabel, T>> merge_terms(int k, int n, const T& alpha, const T& beta) {
  std::vector<std::pair<RootLabel, T>> terms;
  terms.emplace_back(RootLabel::diff(1, 2), T(1));
  terms.emplace_back(RootLabel::diff(1, 3), T(1));
  for (int i = 1; i < k; ++i) {
    terms.emplace_back(RootLabel::diff(2 * i, 2 * i + 2), T(1));
    terms.emplace_back(RootLabel::diff(2 * i + 1, 2 * i + 3), T(1));
  }
  terms.emplace_back(merge_q(k, n, 2 * k, 2), beta);
  terms.emplace_back(merge_q(k, n, 2 * k + 1, 1), alpha);
  return terms;
}

}  // namespace

MergeSetting merge_setting(int k, int n) {
  if (k < 1 || n < 2 * k + 1) throw Error(ErrorCode::HypothesisViolated, "merge setting needs k >= 1 and n >= 2k+1");
  MergeSetting s;
  s.n = n;
  s.k = k;
  const Poly a = Poly::variable(0);
  const Poly b = Poly::variable(1);
  const RatFunc alpha(a), beta(b);

  s.x = nilpotent_from_character<RatFunc>(merge_terms<RatFunc>(k, n, alpha, beta), n);
  Matrix<RatFunc> block(2, 2);
  const RatFunc scale = RatFunc(Poly(1), a + b);
  block(0, 0) = beta * scale;
  block(0, 1) = alpha * scale;
  block(1, 0) = RatFunc(-1) * scale;
  block(1, 1) = scale;
  s.epsilon = block_levi(k, n, block);
  s.x_epsilon = conjugate_nilpotent(s.x, s.epsilon);

  s.x_antidiag = nilpotent_from_character<RatFunc>(merge_terms<RatFunc>(k, n, alpha, -alpha), n);
  Matrix<RatFunc> bar(2, 2);
  const RatFunc half(Rational(1, 2));
  bar(0, 0) = half;
  bar(0, 1) = -half;
  bar(1, 0) = half;
  bar(1, 1) = half;
  s.epsilon_bar = block_levi(k, n, bar);
  s.x_bar = conjugate_nilpotent(s.x_antidiag, s.epsilon_bar);
  return s;
}

std::vector<MergeCheck> merge_checks(int k, int n) {
  auto s = merge_setting(k, n);
  const Poly a = Poly::variable(0);
  const Poly b = Poly::variable(1);
  std::vector<MergeCheck> out;
  auto add = [&](std::string name, const RootLabel& r, const RatFunc& expected, const RatFunc& actual) {
    out.push_back({std::move(name), r, expected, actual});
  };
  add("epsilon: z_12", RootLabel::diff(1, 2), RatFunc(1), character_coefficient(s.x_epsilon, RootLabel::diff(1, 2)));
  add("epsilon: z_13", RootLabel::diff(1, 3), RatFunc(0), character_coefficient(s.x_epsilon, RootLabel::diff(1, 3)));
  for (int i = 1; i < k; ++i) {
    for (int off = 0; off < 2; ++off) {
      auto r = RootLabel::diff(2 * i + off, 2 * i + off + 2);
      add("epsilon: z_" + std::to_string(2 * i + off) + "," + std::to_string(2 * i + off + 2), r, RatFunc(1),
          character_coefficient(s.x_epsilon, r));
    }
  }
  auto q22 = merge_q(k, n, 2 * k, 2);
  auto q31 = merge_q(k, n, 2 * k + 1, 1);
  add("epsilon: q(2k,2)", q22, RatFunc(a + b), character_coefficient(s.x_epsilon, q22));
  add("epsilon: q(2k+1,1)", q31, RatFunc(a * b * (a + b)), character_coefficient(s.x_epsilon, q31));

  auto q21 = merge_q(k, n, 2 * k, 1);
  add("epsilon_bar: q(2k,1)", q21, RatFunc(Poly(-4) * a), character_coefficient(s.x_bar, q21));
  add("epsilon_bar: q(2k,2)", q22, RatFunc(0), character_coefficient(s.x_bar, q22));
  add("epsilon_bar: q(2k+1,1)", q31, RatFunc(0), character_coefficient(s.x_bar, q31));
  return out;
}

// --- unipotent groups and quadruples -----------------------------------------

namespace {

std::string render(const RationalMatrix& m) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (is_zero(m(r, c))) continue;
      out << (first ? "" : " ") << "(" << r + 1 << "," << c + 1 << ")=" << to_string(m(r, c));
      first = false;
    }
  }
  return first ? "0" : out.str();
}

RationalMatrix as_matrix(const Vector<Rational>& v, int n) { return sp_from_coordinates(v, n); }

Vector<Rational> bracket(const Vector<Rational>& u, const Vector<Rational>& v, int n) {
  return sp_coordinates(commutator(as_matrix(u, n), as_matrix(v, n)));
}

}  // namespace

UnipotentGroupSpec::UnipotentGroupSpec(int n, std::vector<RootLabel> roots, std::vector<RationalMatrix> extra)
    : n_(n), roots_(std::move(roots)), extra_(std::move(extra)) {
  const auto dim = static_cast<std::size_t>(sp_dimension(n_));
  std::vector<Vector<Rational>> gens;
  for (const auto& r : roots_) gens.push_back(sp_coordinates(root_matrix(r, Rational(1), n_)));
  for (const auto& m : extra_) {
    if (m.rows() != 2 * static_cast<std::size_t>(n_) || !sp_membership(m)) {
      throw Error(ErrorCode::NotNilpotentSubalgebra, "generator is not in sp(2n)");
    }
    gens.push_back(sp_coordinates(m));
  }
  if (gens.empty()) return;
  // Close under brackets, bracketing each new element with all earlier ones.
  SpanMembership<Rational> span(dim);
  for (auto& g : gens) {
    if (span.insert(g)) basis_.push_back(std::move(g));
  }
  for (std::size_t done = 0; done < basis_.size(); ++done) {
    for (std::size_t a = 0; a < done; ++a) {
      auto br = bracket(basis_[a], basis_[done], n_);
      if (span.insert(br)) basis_.push_back(std::move(br));
    }
  }
  basis_ = span_basis(basis_, dim);
  // Nilpotency: the lower central series reaches zero.
  std::vector<Vector<Rational>> term = basis_;
  for (std::size_t step = 0; step <= basis_.size() && !term.empty(); ++step) {
    SpanMembership<Rational> next(dim);
    std::vector<Vector<Rational>> next_basis;
    for (const auto& u : basis_) {
      for (const auto& v : term) {
        auto br = bracket(u, v, n_);
        if (next.insert(br)) next_basis.push_back(std::move(br));
      }
    }
    term = std::move(next_basis);
  }
  if (!term.empty()) throw Error(ErrorCode::NotNilpotentSubalgebra, "generated Lie algebra is not nilpotent");
}

bool UnipotentGroupSpec::contains(const Vector<Rational>& v) const {
  return SpanMembership<Rational>(basis_, static_cast<std::size_t>(sp_dimension(n_))).contains(v);
}

bool QuadrupleReport::ok() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.passed; });
}

namespace {

struct Checker {
  int n;
  std::size_t dim;
  const RationalMatrix& x_psi;

  Rational ell(const Vector<Rational>& v) const { return trace_product(x_psi, as_matrix(v, n)); }

  // First bracket [u, w] (u in a, w in b) that leaves `target`, if any.
  std::optional<std::string> bracket_escape(const std::vector<Vector<Rational>>& a,
                                            const std::vector<Vector<Rational>>& b,
                                            const std::vector<Vector<Rational>>& target) const {
    SpanMembership<Rational> span(target, dim);
    for (const auto& u : a) {
      for (const auto& w : b) {
        auto br = bracket(u, w, n);
        if (!span.contains(br)) {
          return "[" + render(as_matrix(u, n)) + ", " + render(as_matrix(w, n)) + "] = " + render(as_matrix(br, n));
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> functional_nonzero(const std::vector<Vector<Rational>>& vs) const {
    for (const auto& v : vs) {
      auto val = ell(v);
      if (!is_zero(val)) return "psi(" + render(as_matrix(v, n)) + ") = " + to_string(val);
    }
    return std::nullopt;
  }

  std::optional<std::string> functional_on_brackets(const std::vector<Vector<Rational>>& a,
                                                    const std::vector<Vector<Rational>>& b) const {
    for (const auto& u : a) {
      for (const auto& w : b) {
        auto val = ell(bracket(u, w, n));
        if (!is_zero(val)) {
          return "psi([" + render(as_matrix(u, n)) + ", " + render(as_matrix(w, n)) + "]) = " + to_string(val);
        }
      }
    }
    return std::nullopt;
  }

  // Vectors of `space` completing a basis of `sub` to one of `space`.
  std::vector<Vector<Rational>> complement(const std::vector<Vector<Rational>>& space,
                                           const std::vector<Vector<Rational>>& sub) const {
    std::vector<Vector<Rational>> acc = sub;
    std::vector<Vector<Rational>> out;
    std::size_t current = span_dimension(acc, dim);
    for (const auto& v : space) {
      acc.push_back(v);
      std::size_t next = span_dimension(acc, dim);
      if (next > current) {
        out.push_back(v);
        current = next;
      } else {
        acc.pop_back();
      }
    }
    return out;
  }
};

}  // namespace

QuadrupleReport validate_quadruple(const ExchangeQuadruple& q) {
  const int n = q.c.rank();
  if (q.xt.rank() != n || q.yt.rank() != n || static_cast<int>(q.psi.x.rows()) != 2 * n) {
    throw Error(ErrorCode::RankMismatch, "quadruple members live in different ranks");
  }
  Checker chk{n, static_cast<std::size_t>(sp_dimension(n)), q.psi.x};
  const auto& c = q.c.basis();
  const auto& x = q.xt.basis();
  const auto& y = q.yt.basis();
  auto xc = intersection_basis(x, c, chk.dim);
  auto yc = intersection_basis(y, c, chk.dim);
  QuadrupleReport rep;
  auto record = [&](int number, std::optional<std::string> failure) {
    rep.conditions.push_back({number, !failure.has_value(), failure.value_or("")});
  };
  auto first_of = [](std::optional<std::string> a, std::optional<std::string> b) { return a ? a : b; };

  record(1, first_of(chk.bracket_escape(x, c, c), chk.bracket_escape(y, c, c)));

  std::optional<std::string> two = chk.bracket_escape(x, xc, xc);
  if (!two) two = chk.bracket_escape(x, x, xc);
  if (!two) two = chk.bracket_escape(y, yc, yc);
  if (!two) two = chk.bracket_escape(y, y, yc);
  record(2, two);

  record(3, first_of(chk.functional_on_brackets(x, c), chk.functional_on_brackets(y, c)));
  record(4, first_of(chk.functional_nonzero(xc), chk.functional_nonzero(yc)));
  record(5, chk.bracket_escape(x, y, c));

  auto xq = chk.complement(x, xc);
  auto yq = chk.complement(y, yc);
  if (xq.size() != yq.size()) {
    record(6, "quotients have dimensions " + std::to_string(xq.size()) + " and " + std::to_string(yq.size()));
  } else {
    RationalMatrix gram(xq.size(), yq.size());
    for (std::size_t i = 0; i < xq.size(); ++i)
      for (std::size_t j = 0; j < yq.size(); ++j) gram(i, j) = chk.ell(bracket(xq[i], yq[j], n));
    auto kernel = nullspace(gram);
    if (kernel.empty()) {
      record(6, std::nullopt);
    } else {
      Vector<Rational> v(chk.dim, Rational(0));
      for (std::size_t i = 0; i < xq.size(); ++i)
        for (std::size_t t = 0; t < chk.dim; ++t) v[t] += kernel.front()[i] * xq[i][t];
      record(6, "pairing is degenerate; " + render(as_matrix(v, n)) + " pairs to zero with Y");
    }
  }
  return rep;
}

namespace {

UnipotentGroupSpec level_group(const SymplecticPartition& p, int from) {
  std::vector<RootLabel> roots;
  for (const auto& b : grade(p).at_least(from)) {
    if (!b.cartan) roots.push_back(b.root);
  }
  return UnipotentGroupSpec(p.rank(), roots);
}

UnipotentGroupSpec half_group(const SymplecticPartition& p, const std::vector<RootLabel>& basis,
                              const std::vector<Vector<Rational>>& half) {
  std::vector<RationalMatrix> gens;
  const int n = p.rank();
  for (const auto& v : half) {
    RationalMatrix m(2 * static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!is_zero(v[k])) m += root_matrix(basis[k], v[k], n);
    }
    gens.push_back(std::move(m));
  }
  return UnipotentGroupSpec(n, {}, gens);
}

}  // namespace

ExchangeQuadruple corollary24_quadruple(const SymplecticPartition& p, const SquareClassAssignment& a) {
  auto lag = lagrangian_halves(p, a);
  return {level_group(p, 2), character_data(p, a), half_group(p, lag.basis, lag.x_half),
          half_group(p, lag.basis, lag.y_half)};
}

ExchangeQuadruple corollary24_root_quadruple(const SymplecticPartition& p, const SquareClassAssignment& a) {
  auto roots = polarization_roots(p);
  return {level_group(p, 2), character_data(p, a), UnipotentGroupSpec(p.rank(), roots.x_roots),
          UnipotentGroupSpec(p.rank(), roots.y_roots)};
}

bool certify_corollary24(const SymplecticPartition& p, const SquareClassAssignment& a) {
  return validate_quadruple(corollary24_quadruple(p, a)).ok();
}

}  // namespace sympcalc
