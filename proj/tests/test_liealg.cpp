#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "sympcalc/liealg.hpp"

using namespace sympcalc;

namespace {

SymplecticPartition P(std::vector<int> v) { return validate_symplectic(std::move(v)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

Rational R(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

RationalMatrix power(const RationalMatrix& m, int k) {
  auto r = RationalMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

TEST_CASE("root labels") {
  CHECK(RootLabel::parse("e1-e2") == RootLabel::diff(1, 2));
  CHECK(RootLabel::parse("-e5-e2") == RootLabel::neg_sum(2, 5));
  CHECK(RootLabel::parse("e3+e1") == RootLabel::sum(1, 3));
  CHECK(RootLabel::parse("2e4") == RootLabel::twice(4));
  CHECK(RootLabel::parse("-2e1") == RootLabel::neg_twice(1));
  CHECK(code_of([] { RootLabel::parse("e1+e1+e2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { RootLabel::parse("3e1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { RootLabel::diff(2, 2); }) == ErrorCode::BadIndices);
  CHECK(code_of([] { RootLabel::from_weight({1, 1, 1}); }) == ErrorCode::BadIndices);

  for (int n = 1; n <= 5; ++n) {
    const auto& roots = all_roots(n);
    CHECK(roots.size() == static_cast<std::size_t>(2 * n * n));
    std::set<std::vector<int>> weights;
    for (const auto& r : roots) {
      CHECK(RootLabel::parse(r.to_string()) == r);
      CHECK(RootLabel::from_weight(r.weight(n)) == r);
      CHECK(r.negated().negated() == r);
      CHECK(r.positive() != r.negated().positive());
      weights.insert(r.weight(n));
    }
    CHECK(weights.size() == roots.size());
  }
}

TEST_CASE("root vectors lie in sp and carry their weight") {
  for (int n = 1; n <= 4; ++n) {
    Cocharacter d;
    for (int i = 0; i < n; ++i) d.exponents.push_back(3 * i + 1);  // regular
    auto h = d.cartan();
    for (const auto& r : all_roots(n)) {
      auto e = root_matrix(r, Rational(1), n);
      CHECK(sp_membership(e));
      CHECK(commutator(h, e) == e * Rational(d.pair(r)));
      auto pe = r.primary(n);
      CHECK(e(pe.row, pe.col) == 1);
    }
  }
  auto low = root_vector(RootLabel::neg_twice(1), Rational(5), 1);
  CHECK(low(1, 0) == 5);
  CHECK(low(0, 0) == 0);
  CHECK(low(0, 1) == 0);
  CHECK(root_vector(RootLabel::twice(1), Rational(0), 2).is_zero());
  auto half = root_vector(RootLabel::diff(2, 1), R(1, 2), 3);
  CHECK(half(1, 0) == R(1, 2));
  CHECK(half(5, 4) == R(-1, 2));
  CHECK(code_of([] { root_vector(RootLabel::diff(1, 4), Rational(1), 3); }) == ErrorCode::BadIndices);
  // e1 - e2 in sp(6): entries (1,2) and (5,6) in one-based indices.
  auto e = root_matrix(RootLabel::diff(1, 2), Rational(1), 3);
  CHECK(e(0, 1) == 1);
  CHECK(e(4, 5) == -1);
}

TEST_CASE("standard basis and coordinates") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int n = 1; n <= 4; ++n) {
    const auto& basis = sp_basis(n);
    CHECK(basis.size() == static_cast<std::size_t>(n * (2 * n + 1)));
    CHECK(sp_dimension(n) == n * (2 * n + 1));
    for (const auto& b : basis) CHECK(sp_membership(basis_matrix<Rational>(b, n)));
    for (int t = 0; t < 20; ++t) {
      Vector<Rational> v;
      for (std::size_t k = 0; k < basis.size(); ++k) v.push_back(R(coef(rng), 1 + static_cast<long>(k % 3)));
      auto m = sp_from_coordinates(v, n);
      CHECK(sp_membership(m));
      CHECK(sp_coordinates(m) == v);
    }
    auto j = symplectic_form(n);
    CHECK(j.transpose() == -j);
    CHECK(is_symplectic(RationalMatrix::identity(2 * static_cast<std::size_t>(n))));
  }
}

TEST_CASE("cocharacters of the worked examples") {
  CHECK(build_cocharacter(P({4, 1, 1})).exponents == std::vector<int>{3, 1, 0});
  CHECK(build_cocharacter(P({4, 3, 3})).exponents == std::vector<int>{3, 1, 2, 0, -2});
}

TEST_CASE("grading of [4,1,1]") {
  auto g = grade(P({4, 1, 1}));
  std::map<int, std::size_t> want = {{0, 5}, {1, 2}, {2, 2}, {3, 2}, {4, 1}, {6, 1}};
  for (auto [l, d] : want) {
    CHECK(g.dim(l) == d);
    CHECK(g.dim(-l) == d);
  }
  CHECK(g.dim(5) == 0);
  CHECK(g.total_dim() == 21);
  CHECK(g.at_least(2).size() == 6);
}

TEST_CASE("recipe nilpotent has the right Jordan type and centralizer") {
  for (int two_n = 2; two_n <= 10; two_n += 2) {
    for (const auto& p : enumerate_symplectic(two_n)) {
      INFO(p.to_string());
      auto a = SquareClassAssignment::trivial(p);
      auto x = build_nilpotent(p, a);
      CHECK(sp_membership(x));
      for (int k = 1; k <= p[0]; ++k) CHECK(static_cast<int>(rank(power(x, k))) == oracle::power_rank(p.parts(), k));
      CHECK(static_cast<int>(centralizer(x).size()) == oracle::centralizer_dim(p.parts()));
      auto d = build_cocharacter(p);
      for (const auto& s : nilpotent_summands(p, a)) CHECK(d.pair(s.root) == -2);
    }
  }
}

TEST_CASE("sl2 triples") {
  for (int two_n = 2; two_n <= 10; two_n += 2) {
    for (const auto& p : enumerate_symplectic(two_n)) {
      INFO(p.to_string());
      auto t = complete_sl2(build_nilpotent(p, SquareClassAssignment::trivial(p)), build_cocharacter(p).cartan());
      auto c = check_triple(t);
      CHECK(c.hx);
      CHECK(c.hy);
      CHECK(c.yx);
      CHECK(c.membership);
      auto g = grade(p);
      CHECK(g.total_dim() == static_cast<std::size_t>(sp_dimension(p.rank())));
      for (const auto& [l, basis] : g.levels) CHECK(basis.size() == g.dim(-l));
    }
  }
}

TEST_CASE("sl2 completion rejects bad input") {
  auto p = P({4, 1, 1});
  auto x = build_nilpotent(p, SquareClassAssignment::trivial(p));
  auto h = build_cocharacter(p).cartan();
  CHECK(code_of([&] { complete_sl2(x * Rational(0), h); }) == ErrorCode::NoSolution);
  CHECK(code_of([&] { complete_sl2(x, h * Rational(2)); }) == ErrorCode::NoSolution);
  CHECK(code_of([&] { complete_sl2(RationalMatrix(3, 3), RationalMatrix(3, 3)); }) == ErrorCode::OddDimension);
}

TEST_CASE("annihilator of the trace form equals the centralizer") {
  for (const auto& p : enumerate_symplectic(8)) {
    auto x = build_nilpotent(p, SquareClassAssignment::trivial(p));
    // The annihilator of tr(X[.,.]) is the centralizer.
    CHECK(span_dimension(annihilator_sharp(x), static_cast<std::size_t>(sp_dimension(p.rank()))) ==
          centralizer(x).size());
  }
}

TEST_CASE("exp and log are inverse on nilpotent elements") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const auto& p : enumerate_symplectic(8)) {
    auto g = grade(p);
    int n = p.rank();
    RationalMatrix m(2 * static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n));
    for (const auto& b : g.at_least(1)) {
      if (!b.cartan) m += root_matrix(b.root, R(coef(rng), 2), n);
    }
    auto u = exp_nilpotent(m);
    CHECK(is_symplectic(u));
    CHECK(log_unipotent(u) == m);
    CHECK(exp_log(ExpLog::Log, exp_log(ExpLog::Exp, m)) == m);
  }
  CHECK(code_of([] { exp_nilpotent(RationalMatrix::identity(2)); }) == ErrorCode::NotNilpotent);
  CHECK(code_of([] { log_unipotent(RationalMatrix(2, 2)); }) == ErrorCode::NotUnipotent);
}
