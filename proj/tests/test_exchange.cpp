#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "sympcalc/exchange.hpp"

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

}  // namespace

TEST_CASE("signed permutations") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 5; ++n) {
    CHECK(SignedPermutation::identity(n).is_identity());
    CHECK(SignedPermutation::identity(n).matrix() == RationalMatrix::identity(2 * static_cast<std::size_t>(n)));
    for (int t = 0; t < 10; ++t) {
      Cocharacter d;
      std::uniform_int_distribution<int> e(-4, 4);
      for (int i = 0; i < n; ++i) d.exponents.push_back(e(rng));
      auto s = weyl_sorter(d);
      auto sorted = s.apply(d).exponents;
      for (int i = 0; i < n; ++i) {
        CHECK(sorted[static_cast<std::size_t>(i)] >= 0);
        if (i > 0) CHECK(sorted[static_cast<std::size_t>(i - 1)] >= sorted[static_cast<std::size_t>(i)]);
      }
      auto g = s.matrix();
      CHECK(is_symplectic(g));
      // Conjugating the torus element by the monomial matrix permutes exponents.
      CHECK(conjugate_nilpotent(d.cartan(), g) == s.apply(d).cartan());
      CHECK(s.inverse().apply(s.apply(d)) == d);
      CHECK(conjugate_nilpotent(s.apply(d).cartan(), s.inverse().matrix()) == d.cartan());
    }
  }
  Cocharacter tie{{2, 2, -2}};
  CHECK(weyl_sorter(tie, TieBreak::EarlierFirst).perm == std::vector<int>{1, 2, 3});
  CHECK(weyl_sorter(tie, TieBreak::LaterFirst).perm == std::vector<int>{3, 2, 1});
  CHECK(weyl_sorter(tie, TieBreak::LaterFirst).signs == std::vector<int>{1, 1, -1});
  CHECK(code_of([&] { weyl_sorter(tie, TieBreak::LaterFirst, {1, 2}); }) == ErrorCode::BadIndices);
}

TEST_CASE("Levi embedding and conjugation") {
  RationalMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = R(1, 3);
  m(1, 1) = -1;
  for (int n = 2; n <= 4; ++n) {
    auto g = levi_embedding(m, n);
    CHECK(is_symplectic(g));
    CHECK(g * symplectic_inverse(g) == RationalMatrix::identity(2 * static_cast<std::size_t>(n)));
  }
  auto p = P({4, 1, 1});
  auto x = build_nilpotent(p, SquareClassAssignment::trivial(p));
  auto y = conjugate_nilpotent(x, levi_embedding(m, 3));
  CHECK(sp_membership(y));
  CHECK(rank(y) == rank(x));
  CHECK(code_of([] { levi_embedding(RationalMatrix(2, 2), 3); }) == ErrorCode::NoSolution);
  CHECK(code_of([&] { levi_embedding(RationalMatrix::identity(4), 3); }) == ErrorCode::BadIndices);
  RationalMatrix bad = RationalMatrix::identity(6);
  bad(0, 0) = 2;
  CHECK(code_of([&] { conjugate_nilpotent(x, bad); }) == ErrorCode::NotSymplectic);
}

TEST_CASE("character coefficients invert the nilpotent construction") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& r : all_roots(n)) {
      auto x = nilpotent_from_character<Rational>({{r, R(3, 2)}}, n);
      CHECK(sp_membership(x));
      for (const auto& s : all_roots(n)) CHECK(character_coefficient(x, s) == (s == r ? R(3, 2) : Rational(0)));
    }
  }
}

TEST_CASE("two-stage merge identities") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 5}}) {
    auto checks = merge_checks(k, n);
    CHECK_FALSE(checks.empty());
    for (const auto& c : checks) {
      INFO(k << "," << n << " " << c.name << " " << c.root.to_string());
      CHECK(c.holds());
    }
    auto s = merge_setting(k, n);
    CHECK(s.n == n);
    CHECK(s.k == k);
  }
  CHECK(code_of([] { merge_setting(1, 2); }) == ErrorCode::HypothesisViolated);
  CHECK(code_of([] { merge_setting(0, 3); }) == ErrorCode::HypothesisViolated);
  CHECK(merge_q(1, 3, 1, 1) == RootLabel::sum(1, 3));
}

TEST_CASE("unipotent group specs") {
  UnipotentGroupSpec g(3, {RootLabel::diff(1, 2), RootLabel::diff(2, 3)});
  CHECK(g.dim() == 3);
  auto coords = sp_coordinates(root_matrix(RootLabel::diff(1, 3), Rational(1), 3));
  CHECK(g.contains(coords));
  CHECK_FALSE(g.contains(sp_coordinates(root_matrix(RootLabel::twice(1), Rational(1), 3))));
  UnipotentGroupSpec h(2, {RootLabel::diff(1, 2), RootLabel::twice(2)});
  CHECK(h.dim() == 4);
  CHECK(code_of([] { UnipotentGroupSpec(2, {RootLabel::diff(1, 2), RootLabel::diff(2, 1)}); }) ==
        ErrorCode::NotNilpotentSubalgebra);
  CHECK(code_of([] { UnipotentGroupSpec(2, {}, {RationalMatrix::identity(4)}); }) ==
        ErrorCode::NotNilpotentSubalgebra);
}

TEST_CASE("quadruple validation") {
  for (int two_n = 2; two_n <= 8; two_n += 2) {
    for (const auto& p : enumerate_symplectic(two_n)) {
      for (auto a : {SquareClassAssignment::trivial(p), cycled_assignment(p, 1)}) {
        INFO(p.to_string());
        auto rep = validate_quadruple(corollary24_quadruple(p, a));
        CHECK(rep.conditions.size() == 6);
        CHECK(rep.ok());
        CHECK(certify_corollary24(p, a));
      }
    }
  }
  auto p = P({4, 3, 3});
  auto lit = validate_quadruple(corollary24_root_quadruple(p, SquareClassAssignment::trivial(p)));
  CHECK_FALSE(lit.ok());
  for (const auto& c : lit.conditions) {
    CHECK(c.passed == (c.number != 4));
    CHECK(c.witness.empty() == c.passed);
  }
  auto q = P({4, 1, 1});
  CHECK(validate_quadruple(corollary24_root_quadruple(q, SquareClassAssignment::trivial(q))).ok());

  auto mixed = corollary24_quadruple(q, SquareClassAssignment::trivial(q));
  mixed.xt = UnipotentGroupSpec(4, {RootLabel::diff(1, 2)});
  CHECK(code_of([&] { validate_quadruple(mixed); }) == ErrorCode::RankMismatch);
}

TEST_CASE("quadruple conditions detect broken inputs") {
  auto p = P({4, 1, 1});
  auto a = SquareClassAssignment::trivial(p);
  auto q = corollary24_quadruple(p, a);
  auto swapped = q;
  std::swap(swapped.xt, swapped.yt);
  CHECK(validate_quadruple(swapped).ok() == validate_quadruple(q).ok());
  auto empty = q;
  empty.xt = UnipotentGroupSpec(p.rank(), {});
  CHECK_FALSE(validate_quadruple(empty).ok());
}
