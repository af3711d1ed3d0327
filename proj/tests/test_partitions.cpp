#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "sympcalc/error.hpp"
#include "sympcalc/partitions.hpp"

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

}  // namespace

TEST_CASE("validation") {
  auto p = P({1, 4, 1});
  CHECK(p.parts() == std::vector<int>{4, 1, 1});
  CHECK(p.rank() == 3);
  CHECK(P({1, 1}).rank() == 1);
  CHECK(code_of([] { P({5, 1}); }) == ErrorCode::OddMultiplicity);
  CHECK(code_of([] { P({3}); }) == ErrorCode::OddTotal);
  CHECK(code_of([] { P({2, 0}); }) == ErrorCode::NonPositivePart);
  CHECK(code_of([] { P({}); }) == ErrorCode::EmptyInput);
}

TEST_CASE("block form of [4,3,3]") {
  auto blocks = block_form(P({4, 3, 3}));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].part == 4);
  CHECK(blocks[0].length == 2);
  CHECK(blocks[0].first == 1);
  CHECK(blocks[1].exponent == 2);
  CHECK(blocks[1].length == 3);
  CHECK(blocks[1].first == 3);
  CHECK(blocks[1].last() == 5);
}

TEST_CASE("enumeration matches filtered integer partitions") {
  CHECK(enumerate_symplectic(2).size() == 2);
  CHECK(enumerate_symplectic(4).size() == 4);
  auto six = enumerate_symplectic(6);
  std::vector<std::vector<int>> got;
  for (const auto& p : six) got.push_back(p.parts());
  std::vector<std::vector<int>> want = {{6}, {4, 2}, {4, 1, 1}, {3, 3}, {2, 2, 2}, {2, 2, 1, 1}, {2, 1, 1, 1, 1},
                                        {1, 1, 1, 1, 1, 1}};
  CHECK(got == want);
  for (int two_n = 2; two_n <= 16; two_n += 2) {
    auto all = enumerate_symplectic(two_n);
    auto oracle = oracle::symplectic_partitions(two_n);
    CHECK(all.size() == oracle.size());
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] > all[i + 1]);
  }
  CHECK(code_of([] { enumerate_symplectic(5); }) == ErrorCode::OddTotal);
}

TEST_CASE("specialness") {
  CHECK_FALSE(is_special(P({6, 5, 5, 4, 3, 3, 2, 1, 1})));
  CHECK(is_special(P({6, 6, 4, 4, 3, 3, 2, 2})));
  CHECK(is_special(P({2, 2, 1, 1})));
  CHECK_FALSE(is_special(P({4, 1, 1})));
  CHECK(is_special(P({1, 1})));
}

TEST_CASE("expansion") {
  CHECK(sp_expansion(P({6, 5, 5, 4, 3, 3, 2, 1, 1})).parts() == std::vector<int>{6, 6, 4, 4, 3, 3, 2, 2});
  CHECK(sp_expansion(P({4, 1, 1})).parts() == std::vector<int>{4, 2});
  CHECK(sp_expansion(P({2, 2})).parts() == std::vector<int>{2, 2});

  auto trace = expansion_via_steps(P({6, 5, 5, 4, 3, 3, 2, 1, 1}));
  CHECK(trace.result.parts() == std::vector<int>{6, 6, 4, 4, 3, 3, 2, 2});
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].leading_even == 6);
  CHECK(trace.steps[0].odd_part == 5);
  CHECK(trace.steps[1].leading_even == 2);
  CHECK(trace.steps[1].odd_part == 1);

  auto small = expansion_via_steps(P({2, 1, 1}));
  CHECK(small.result.parts() == std::vector<int>{2, 2});
  CHECK(small.steps.size() == 1);
  auto mid = expansion_via_steps(P({4, 3, 3}));
  CHECK(mid.result.parts() == std::vector<int>{4, 4, 2});
  CHECK(mid.steps.size() == 1);
  CHECK(expansion_via_steps(P({2, 2})).steps.empty());
}

TEST_CASE("expansion agrees with the brute-force minimal special partition") {
  for (int two_n = 2; two_n <= 14; two_n += 2) {
    auto all = enumerate_symplectic(two_n);
    for (const auto& p : all) {
      auto minimal = oracle::minimal_special_above(p, all);
      REQUIRE(minimal.size() == 1);
      CHECK(sp_expansion(p) == minimal.front());
      CHECK(expansion_via_steps(p).result == minimal.front());
    }
  }
}

TEST_CASE("dominance") {
  CHECK(dominance_compare(P({4, 2}), P({4, 1, 1})) == PartitionOrdering::Greater);
  CHECK(dominance_compare(P({4, 1, 1}), P({4, 2})) == PartitionOrdering::Less);
  CHECK(dominance_compare(P({4, 1, 1}), P({3, 3})) == PartitionOrdering::Incomparable);
  CHECK(dominance_compare(P({3, 3}), P({3, 3})) == PartitionOrdering::Equal);
  CHECK(code_of([] { dominance_compare(P({2}), P({4})); }) == ErrorCode::MismatchedTotal);
}

TEST_CASE("maximal elements") {
  std::vector<SymplecticPartition> s = {P({4, 2}), P({4, 1, 1}), P({3, 3})};
  auto r = maximal_elements(s);
  REQUIRE(r.maximal.size() == 1);
  CHECK(r.maximal[0].parts() == std::vector<int>{4, 2});

  std::vector<SymplecticPartition> t = {P({4, 1, 1}), P({3, 3})};
  auto r2 = maximal_elements(t);
  CHECK(r2.maximal.size() == 2);
  CHECK(r2.non_special.size() == 1);
  CHECK(r2.non_special[0].parts() == std::vector<int>{4, 1, 1});
}

TEST_CASE("descent") {
  auto d = descend(P({4, 2}), GroupKind::Linear);
  CHECK(d.partition.parts() == std::vector<int>{2});
  CHECK(d.kind == GroupKind::Metaplectic);
  auto e = descend(d.partition, d.kind);
  CHECK(e.partition.empty());
  CHECK(e.kind == GroupKind::Linear);
  CHECK(descend(P({6, 4, 2}), GroupKind::Linear).partition.parts() == std::vector<int>{4, 2});
  CHECK(code_of([] { descend(P({3, 3}), GroupKind::Linear); }) == ErrorCode::OddLeadingPart);
  std::vector<int> raw = {2, 4};
  CHECK(code_of([&] { descend(std::span<const int>(raw), GroupKind::Linear); }) == ErrorCode::LeadingNotMaximal);
}

TEST_CASE("composite rewrites") {
  auto p = P({4, 2});
  std::vector<std::int64_t> ones = {1, 1};
  auto c = CompositePartition::plain(p, SquareClassAssignment::aligned(p, ones));
  auto split = composite_rewrite(c, CompositeRule::SplitLeadingEven);
  REQUIRE(split.stages().size() == 2);
  CHECK(split.stages()[0].partition.parts() == std::vector<int>{4, 1, 1});
  CHECK(split.stages()[0].classes.values() == std::vector<std::int64_t>{1});
  CHECK(split.stages()[1].partition.parts() == std::vector<int>{2});
  auto merged = composite_rewrite(split, CompositeRule::MergeLeadingEven);
  CHECK(merged == c);

  auto first = P({2, 1, 1, 1, 1, 1, 1});
  auto second = P({4, 1, 1});
  auto make = [&](std::int64_t alpha, std::int64_t beta) {
    std::vector<std::int64_t> a = {alpha}, b = {beta};
    return CompositePartition({{first, SquareClassAssignment::aligned(first, a)},
                               {second, SquareClassAssignment::aligned(second, b)}});
  };
  auto r = composite_rewrite(make(1, -1), CompositeRule::Prop32Merge);
  CHECK(r.is_plain());
  CHECK(r.stages()[0].partition.parts() == std::vector<int>{3, 3, 1, 1});
  CHECK(composite_rewrite(make(3, -12), CompositeRule::Prop32Merge).is_plain());
  CHECK(code_of([&] { composite_rewrite(make(1, 1), CompositeRule::Prop32Merge); }) ==
        ErrorCode::HypothesisViolated);

  // Stage totals must chain: [2,1^4] leaves rank 2, not 3.
  auto short_first = P({2, 1, 1, 1, 1});
  std::vector<std::int64_t> a = {1}, b = {-1};
  CHECK(code_of([&] {
          CompositePartition({{short_first, SquareClassAssignment::aligned(short_first, a)},
                              {second, SquareClassAssignment::aligned(second, b)}});
        }) == ErrorCode::InvalidComposite);

  auto odd = P({3, 3, 1, 1, 1, 1});
  auto tail = P({2, 2});
  std::vector<std::int64_t> tc = {1, 5};
  auto c33 = CompositePartition({{odd, SquareClassAssignment{}}, {tail, SquareClassAssignment::aligned(tail, tc)}});
  auto r33 = composite_rewrite(c33, CompositeRule::Prop33Merge);
  CHECK(r33.stages()[0].partition.parts() == std::vector<int>{3, 3, 2, 2});
  CHECK(r33.stages()[0].classes.values() == tc);

  auto l = P({6, 5, 5, 4, 3, 3, 2, 1, 1});
  auto cl = CompositePartition::plain(l, SquareClassAssignment::trivial(l));
  auto rl = composite_rewrite(cl, CompositeRule::Lemma43Step);
  CHECK(rl.stages()[0].partition.parts() == std::vector<int>{6, 6, 4, 4, 3, 3, 2, 1, 1});
  CHECK(code_of([&] {
          auto q = P({4, 4});
          composite_rewrite(CompositePartition::plain(q, SquareClassAssignment::trivial(q)),
                            CompositeRule::Lemma43Step);
        }) == ErrorCode::HypothesisViolated);
}

TEST_CASE("split then merge restores every even-leading partition") {
  for (int two_n = 2; two_n <= 12; two_n += 2) {
    for (const auto& p : enumerate_symplectic(two_n)) {
      if (p[0] % 2 != 0) continue;
      auto c = CompositePartition::plain(p, SquareClassAssignment::trivial(p));
      auto split = composite_rewrite(c, CompositeRule::SplitLeadingEven);
      CHECK(split.stages()[1].partition == descend(p, GroupKind::Linear).partition);
      CHECK(composite_rewrite(split, CompositeRule::MergeLeadingEven) == c);
    }
  }
}

TEST_CASE("square classes are canonical") {
  auto p = P({4, 2});
  std::vector<std::int64_t> v = {8, -12};
  auto a = SquareClassAssignment::aligned(p, v);
  CHECK(a.values() == std::vector<std::int64_t>{2, -3});
  std::vector<std::int64_t> short_v = {1};
  CHECK(code_of([&] { SquareClassAssignment::aligned(p, short_v); }) == ErrorCode::MissingSquareClass);
}
