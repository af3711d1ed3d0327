#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "sympcalc/fourier.hpp"

using namespace sympcalc;

namespace {

SymplecticPartition P(std::vector<int> v) { return validate_symplectic(std::move(v)); }

SquareClassAssignment A(const SymplecticPartition& p, std::vector<std::int64_t> v) {
  return SquareClassAssignment::aligned(p, v);
}

std::set<RootLabel> roots_of(std::initializer_list<const char*> names) {
  std::set<RootLabel> out;
  for (const auto* s : names) out.insert(RootLabel::parse(s));
  return out;
}

std::set<RootLabel> as_set(const std::vector<RootLabel>& v) { return {v.begin(), v.end()}; }

RationalMatrix restrict_gram(const RationalMatrix& gram, const std::vector<Vector<Rational>>& a,
                             const std::vector<Vector<Rational>>& b) {
  RationalMatrix out(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < gram.rows(); ++k)
        for (std::size_t l = 0; l < gram.cols(); ++l) {
          if (!is_zero(a[i][k]) && !is_zero(b[j][l])) s += a[i][k] * gram(k, l) * b[j][l];
        }
      out(i, j) = s;
    }
  return out;
}

}  // namespace

TEST_CASE("character terms of the worked examples") {
  for (std::int64_t alpha : {1, -1, 2, 3, -5}) {
    auto p = P({4, 1, 1});
    auto cf = character_data(p, A(p, {alpha}));
    std::vector<CharacterTerm> want = {{1, 2, 1}, {2, 5, Rational(alpha)}};
    CHECK(cf.terms == want);

    auto q = P({4, 3, 3});
    auto cq = character_data(q, A(q, {alpha}));
    std::vector<CharacterTerm> want_q = {{1, 2, 1}, {2, 9, Rational(alpha)}, {3, 4, 1}, {4, 5, 1}};
    CHECK(cq.terms == want_q);
  }
}

TEST_CASE("entry form equals the trace form on the level two group") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int two_n = 2; two_n <= 8; two_n += 2) {
    for (const auto& p : enumerate_symplectic(two_n)) {
      auto cf = character_data(p, cycled_assignment(p, 2));
      int n = p.rank();
      for (int t = 0; t < 3; ++t) {
        RationalMatrix m(2 * static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n));
        for (const auto& b : grade(p).at_least(2)) {
          if (!b.cartan) m += root_matrix(b.root, Rational(coef(rng)), n);
        }
        auto v = exp_nilpotent(m);
        CHECK(cf.entry_form(v) == cf.trace_form(v));
      }
    }
  }
}

TEST_CASE("polarization roots of the worked examples") {
  auto a = polarization_roots(P({4, 1, 1}));
  CHECK(as_set(a.y_roots) == roots_of({"e2+e3"}));
  CHECK(as_set(a.x_roots) == roots_of({"e2-e3"}));
  auto b = polarization_roots(P({4, 3, 3}));
  CHECK(as_set(b.y_roots) == roots_of({"e1-e3", "e1+e5", "e2+e4"}));
  CHECK(as_set(b.x_roots) == roots_of({"e3-e2", "-e5-e2", "e2-e4"}));
}

TEST_CASE("polarization roots split level one") {
  for (int two_n = 2; two_n <= 12; two_n += 2) {
    for (const auto& p : enumerate_symplectic(two_n)) {
      INFO(p.to_string());
      auto r = polarization_roots(p);
      auto level = as_set(level_one_roots(p));
      std::set<RootLabel> both = as_set(r.x_roots);
      both.insert(r.y_roots.begin(), r.y_roots.end());
      CHECK(r.x_roots.size() == r.y_roots.size());
      CHECK(both.size() == r.x_roots.size() + r.y_roots.size());
      CHECK(both == level);
    }
  }
}

TEST_CASE("Heisenberg form is nondegenerate on level one") {
  for (int two_n = 2; two_n <= 10; two_n += 2) {
    for (const auto& p : enumerate_symplectic(two_n)) {
      for (std::int64_t s : {1, -1, 2}) {
        INFO(p.to_string() << " class " << s);
        auto rep = heisenberg_form(p, sample_assignment(p, s));
        CHECK(rep.nondegenerate);
        CHECK(rep.rank == rep.dim_g1);
        CHECK(rep.sharp_intersection_dim == 0);
        CHECK(rep.gram_radical_dim == 0);
        CHECK(rep.gram.transpose() == -rep.gram);
      }
    }
  }
}

TEST_CASE("Lagrangian halves are isotropic and dual") {
  int literal_failures = 0;
  for (int two_n = 2; two_n <= 10; two_n += 2) {
    for (const auto& p : enumerate_symplectic(two_n)) {
      INFO(p.to_string());
      auto a = cycled_assignment(p, 1);
      auto lag = lagrangian_halves(p, a);
      auto gram = heisenberg_form(p, a).gram;
      auto xx = restrict_gram(gram, lag.x_half, lag.x_half);
      auto yy = restrict_gram(gram, lag.y_half, lag.y_half);
      auto xy = restrict_gram(gram, lag.x_half, lag.y_half);
      CHECK(xx.is_zero());
      CHECK(yy.is_zero());
      CHECK(rank(xy) == lag.x_half.size());
      CHECK(lag.roots_y_isotropic);
      if (!lag.roots_x_isotropic) ++literal_failures;
    }
  }
  // The bare x root lists are isotropic except for a few shapes such as [4,3,3].
  CHECK(literal_failures > 0);
  CHECK_FALSE(lagrangian_halves(P({4, 3, 3}), A(P({4, 3, 3}), {1})).roots_x_isotropic);
  CHECK(lagrangian_halves(P({4, 1, 1}), A(P({4, 1, 1}), {1})).roots_x_isotropic);
}

TEST_CASE("root group normalization") {
  auto p = P({4, 3, 3});
  CHECK(root_group_scale(p, RootLabel::sum(2, 4)) == Rational(1, 2));
  CHECK(root_group_scale(p, RootLabel::sum(1, 5)) == 1);
  CHECK(root_group_scale(p, RootLabel::diff(1, 3)) == 1);
}

TEST_CASE("symbolic pairing identities") {
  auto p = P({4, 1, 1});
  auto ids = pairing_identities(p, A(p, {3}));
  REQUIRE(ids.size() == 1);
  CHECK(ids[0].holds());
  for (int two_n = 2; two_n <= 10; two_n += 2) {
    for (const auto& q : enumerate_symplectic(two_n)) {
      for (std::int64_t s : {1, -1, 2}) {
        auto list = pairing_identities(q, sample_assignment(q, s));
        CHECK(list.size() == polarization_roots(q).x_roots.size());
        for (const auto& id : list) {
          INFO(q.to_string() << " " << id.first.to_string() << " / " << id.second.to_string());
          CHECK(id.holds());
        }
      }
    }
  }
}

TEST_CASE("sweep summary") {
  auto s = verify_lemma21(6);
  CHECK(s.ok());
  CHECK(s.partitions == 2 + 4 + 8);
  CHECK(s.dim_g1.size() == 14);
  auto t = verify_lemma21(8);
  CHECK(t.ok());
}
