#include "sympcalc/liealg.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>

namespace sympcalc {

namespace {

void check_index(int i) {
  if (i < 1) throw Error(ErrorCode::BadIndices, "root index " + std::to_string(i) + " is not positive");
}

void check_pair(int i, int j) {
  check_index(i);
  check_index(j);
  if (i == j) throw Error(ErrorCode::BadIndices, "root indices must differ");
}

}  // namespace

RootLabel RootLabel::diff(int i, int j) {
  check_pair(i, j);
  return {Kind::Diff, i, j};
}

RootLabel RootLabel::sum(int i, int j) {
  check_pair(i, j);
  return {Kind::Sum, std::min(i, j), std::max(i, j)};
}

RootLabel RootLabel::neg_sum(int i, int j) {
  check_pair(i, j);
  return {Kind::NegSum, std::min(i, j), std::max(i, j)};
}

RootLabel RootLabel::twice(int i) {
  check_index(i);
  return {Kind::Double, i, i};
}

RootLabel RootLabel::neg_twice(int i) {
  check_index(i);
  return {Kind::NegDouble, i, i};
}

RootLabel RootLabel::from_weight(const std::vector<int>& w) {
  std::vector<std::pair<int, int>> nz;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] != 0) nz.emplace_back(static_cast<int>(k) + 1, w[k]);
  }
  if (nz.size() == 1) {
    if (nz[0].second == 2) return twice(nz[0].first);
    if (nz[0].second == -2) return neg_twice(nz[0].first);
  } else if (nz.size() == 2) {
    auto [i, a] = nz[0];
    auto [j, b] = nz[1];
    if (a == 1 && b == 1) return sum(i, j);
    if (a == -1 && b == -1) return neg_sum(i, j);
    if (a == 1 && b == -1) return diff(i, j);
    if (a == -1 && b == 1) return diff(j, i);
  }
  throw Error(ErrorCode::BadIndices, "weight is not a root of type C");
}

RootLabel RootLabel::parse(std::string_view text) {
  // Terms of the form [+-][2]e<k>, at most two of them.
  std::vector<int> coeff;
  std::size_t pos = 0;
  int terms = 0;
  auto fail = [&]() -> RootLabel { throw Error(ErrorCode::ParseError, "not a root label: '" + std::string(text) + "'"); };
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (terms > 0) {
      return fail();
    }
    int mult = 1;
    if (pos < text.size() && text[pos] == '2') {
      mult = 2;
      ++pos;
    }
    if (pos >= text.size() || text[pos] != 'e') return fail();
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 6) return fail();
    int k = std::stoi(std::string(text.substr(start, pos - start)));
    if (k < 1) return fail();
    if (coeff.size() < static_cast<std::size_t>(k)) coeff.resize(static_cast<std::size_t>(k), 0);
    coeff[static_cast<std::size_t>(k - 1)] += sign * mult;
    ++terms;
  }
  if (terms == 0 || terms > 2) return fail();
  try {
    return from_weight(coeff);
  } catch (const Error&) {
    return fail();
  }
}

std::vector<int> RootLabel::weight(int n) const {
  if (max_index() > n) throw Error(ErrorCode::BadIndices, to_string() + " does not fit rank " + std::to_string(n));
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  auto at = [&](int k) -> int& { return w[static_cast<std::size_t>(k - 1)]; };
  switch (kind_) {
    case Kind::Diff: at(i_) += 1; at(j_) -= 1; break;
    case Kind::Sum: at(i_) += 1; at(j_) += 1; break;
    case Kind::NegSum: at(i_) -= 1; at(j_) -= 1; break;
    case Kind::Double: at(i_) += 2; break;
    case Kind::NegDouble: at(i_) -= 2; break;
  }
  return w;
}

RootLabel RootLabel::negated() const {
  switch (kind_) {
    case Kind::Diff: return {Kind::Diff, j_, i_};
    case Kind::Sum: return {Kind::NegSum, i_, j_};
    case Kind::NegSum: return {Kind::Sum, i_, j_};
    case Kind::Double: return {Kind::NegDouble, i_, i_};
    case Kind::NegDouble: return {Kind::Double, i_, i_};
  }
  return *this;
}

bool RootLabel::positive() const {
  switch (kind_) {
    case Kind::Diff: return i_ < j_;
    case Kind::Sum:
    case Kind::Double: return true;
    default: return false;
  }
}

std::vector<RootLabel::Entry> RootLabel::entries(int n) const {
  if (max_index() > n) throw Error(ErrorCode::BadIndices, to_string() + " does not fit rank " + std::to_string(n));
  auto z = [](int k) { return static_cast<std::size_t>(k - 1); };
  auto mirror = [n](int k) { return static_cast<std::size_t>(2 * n - k); };  // zero-based k'
  switch (kind_) {
    case Kind::Diff: return {{z(i_), z(j_), 1}, {mirror(j_), mirror(i_), -1}};
    case Kind::Sum: return {{z(i_), mirror(j_), 1}, {z(j_), mirror(i_), 1}};
    case Kind::NegSum: return {{mirror(j_), z(i_), 1}, {mirror(i_), z(j_), 1}};
    case Kind::Double: return {{z(i_), mirror(i_), 1}};
    case Kind::NegDouble: return {{mirror(i_), z(i_), 1}};
  }
  return {};
}

std::string RootLabel::to_string() const {
  auto e = [](int k) { return "e" + std::to_string(k); };
  switch (kind_) {
    case Kind::Diff: return e(i_) + "-" + e(j_);
    case Kind::Sum: return e(i_) + "+" + e(j_);
    case Kind::NegSum: return "-" + e(i_) + "-" + e(j_);
    case Kind::Double: return "2" + e(i_);
    case Kind::NegDouble: return "-2" + e(i_);
  }
  return "?";
}

namespace {

std::vector<RootLabel> build_roots(int n) {
  std::vector<RootLabel> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) roots.push_back(RootLabel::diff(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.push_back(RootLabel::sum(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) roots.push_back(RootLabel::neg_sum(i, j));
  for (int i = 1; i <= n; ++i) roots.push_back(RootLabel::twice(i));
  for (int i = 1; i <= n; ++i) roots.push_back(RootLabel::neg_twice(i));
  return roots;
}

std::vector<BasisElement> build_basis(int n) {
  std::vector<BasisElement> basis;
  for (int i = 1; i <= n; ++i) basis.push_back({true, i, RootLabel{}});
  for (const auto& r : all_roots(n)) basis.push_back({false, 0, r});
  return basis;
}

// Per-rank cache with stable references.
template <typename V>
const V& cached(int n, V (*build)(int)) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<V>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<V>(build(n));
  return *slot;
}

}  // namespace

const std::vector<RootLabel>& all_roots(int n) { return cached(n, build_roots); }

int Cocharacter::pair(const RootLabel& a) const {
  auto w = a.weight(rank());
  int s = 0;
  for (std::size_t k = 0; k < w.size(); ++k) s += w[k] * exponents[k];
  return s;
}

int Cocharacter::diagonal(std::size_t r) const {
  auto n = exponents.size();
  return r < n ? exponents[r] : -exponents[2 * n - 1 - r];
}

RationalMatrix Cocharacter::cartan() const {
  auto d = 2 * exponents.size();
  RationalMatrix h(d, d);
  for (std::size_t r = 0; r < d; ++r) h(r, r) = diagonal(r);
  return h;
}

std::string BasisElement::to_string() const {
  return cartan ? "h" + std::to_string(index) : root.to_string();
}

int sp_dimension(int n) { return n * (2 * n + 1); }

const std::vector<BasisElement>& sp_basis(int n) { return cached(n, build_basis); }

RationalMatrix symplectic_form(int n) {
  auto d = 2 * static_cast<std::size_t>(n);
  RationalMatrix j(d, d);
  for (std::size_t i = 0; i < d; ++i) j(i, d - 1 - i) = i < static_cast<std::size_t>(n) ? 1 : -1;
  return j;
}

std::vector<NilpotentSummand> nilpotent_summands(const SymplecticPartition& p, const SquareClassAssignment& a) {
  a.require_complete(p);
  std::vector<NilpotentSummand> out;
  auto blocks = block_form(p);
  const Rational half(1, 2);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& blk = blocks[b];
    int base = blk.first - 1;
    for (int j = 1; j < blk.length; ++j) out.push_back({RootLabel::diff(base + j + 1, base + j), half});
    if (blk.even()) out.push_back({RootLabel::neg_twice(base + blk.length), Rational(a.at(b))});
  }
  return out;
}

RationalMatrix build_nilpotent(const SymplecticPartition& p, const SquareClassAssignment& a) {
  int n = p.rank();
  RationalMatrix x(2 * static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n));
  for (const auto& s : nilpotent_summands(p, a)) x += root_matrix(s.root, s.coefficient, n);
  return x;
}

Cocharacter build_cocharacter(const SymplecticPartition& p) {
  Cocharacter d;
  for (const auto& blk : block_form(p)) {
    for (int k = 0; k < blk.length; ++k) d.exponents.push_back(blk.part - 1 - 2 * k);
  }
  return d;
}

std::size_t GradedDecomposition::dim(int level) const {
  auto it = levels.find(level);
  return it == levels.end() ? 0 : it->second.size();
}

std::size_t GradedDecomposition::total_dim() const {
  std::size_t s = 0;
  for (const auto& [l, b] : levels) s += b.size();
  return s;
}

std::vector<BasisElement> GradedDecomposition::at_least(int j) const {
  std::vector<BasisElement> out;
  for (auto it = levels.lower_bound(j); it != levels.end(); ++it) out.insert(out.end(), it->second.begin(), it->second.end());
  return out;
}

GradedDecomposition grade(const Cocharacter& d) {
  GradedDecomposition g;
  g.n = d.rank();
  for (const auto& b : sp_basis(g.n)) {
    int level = b.cartan ? 0 : d.pair(b.root);
    g.levels[level].push_back(b);
    g.max_level = std::max(g.max_level, level);
  }
  return g;
}

GradedDecomposition grade(const SymplecticPartition& p) { return grade(build_cocharacter(p)); }

namespace {

// tr(c * b) for a basis element b, reading only the entries b touches.
Rational pair_with_basis(const RationalMatrix& c, const BasisElement& b, int n) {
  if (b.cartan) {
    auto k = static_cast<std::size_t>(b.index - 1);
    return c(k, k) - c(2 * n - 1 - k, 2 * n - 1 - k);
  }
  Rational s = 0;
  for (const auto& e : b.root.entries(n)) {
    if (e.sign > 0) {
      s += c(e.col, e.row);
    } else {
      s -= c(e.col, e.row);
    }
  }
  return s;
}

int matrix_rank_n(const RationalMatrix& x) {
  if (!x.is_square() || x.rows() % 2 != 0) throw Error(ErrorCode::OddDimension, "matrix is not of even size");
  return static_cast<int>(x.rows() / 2);
}

}  // namespace

Sl2Triple complete_sl2(const RationalMatrix& x, const RationalMatrix& h) {
  int n = matrix_rank_n(x);
  if (h.rows() != x.rows() || h.cols() != x.cols()) throw Error(ErrorCode::BadIndices, "X and H differ in size");
  if (!sp_membership(x) || !sp_membership(h)) throw Error(ErrorCode::NoSolution, "X or H is not in sp(2n)");
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c)
      if (r != c && !is_zero(h(r, c))) throw Error(ErrorCode::NoSolution, "H is not diagonal");
  if (!(commutator(h, x) == x * Rational(-2))) throw Error(ErrorCode::NoSolution, "X is not in the -2 eigenspace of ad H");

  std::vector<RootLabel> level_two;
  for (const auto& r : all_roots(n)) {
    auto e = r.primary(n);
    if (h(e.row, e.row) - h(e.col, e.col) == 2) level_two.push_back(r);
  }
  auto d = x.rows();
  RationalMatrix system(d * d, level_two.size());
  for (std::size_t k = 0; k < level_two.size(); ++k) {
    auto br = commutator(root_matrix(level_two[k], Rational(1), n), x);
    for (std::size_t i = 0; i < d * d; ++i) system(i, k) = br.data()[i];
  }
  Vector<Rational> rhs(h.data().begin(), h.data().end());
  auto sol = solve(system, rhs);
  if (!sol) throw Error(ErrorCode::NoSolution, "[Y,X] = H has no solution with Y in the +2 eigenspace");
  RationalMatrix y(d, d);
  for (std::size_t k = 0; k < level_two.size(); ++k) y += root_matrix(level_two[k], sol->solution[k], n);
  return {x, h, y};
}

TripleCheck check_triple(const Sl2Triple& t) {
  TripleCheck c;
  c.hx = commutator(t.h, t.x) == t.x * Rational(-2);
  c.hy = commutator(t.h, t.y) == t.y * Rational(2);
  c.yx = commutator(t.y, t.x) == t.h;
  c.membership = sp_membership(t.x) && sp_membership(t.h) && sp_membership(t.y);
  return c;
}

std::vector<Vector<Rational>> annihilator_sharp(const RationalMatrix& x) {
  int n = matrix_rank_n(x);
  const auto& basis = sp_basis(n);
  RationalMatrix form(basis.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    // tr(X[b_k, b_l]) = tr([X, b_k] b_l)
    auto c = commutator(x, basis_matrix<Rational>(basis[k], n));
    if (c.is_zero()) continue;
    for (std::size_t l = 0; l < basis.size(); ++l) form(k, l) = pair_with_basis(c, basis[l], n);
  }
  return nullspace(form);
}

std::vector<Vector<Rational>> centralizer(const RationalMatrix& x) {
  int n = matrix_rank_n(x);
  const auto& basis = sp_basis(n);
  RationalMatrix ad(basis.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto coords = sp_coordinates(commutator(x, basis_matrix<Rational>(basis[k], n)));
    for (std::size_t r = 0; r < basis.size(); ++r) ad(r, k) = coords[r];
  }
  return nullspace(ad);
}

RationalMatrix exp_log(ExpLog direction, const RationalMatrix& m) {
  return direction == ExpLog::Exp ? exp_nilpotent(m) : log_unipotent(m);
}

}  // namespace sympcalc
