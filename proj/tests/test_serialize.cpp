#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "generators.hpp"
#include "sympcalc/serialize.hpp"

using namespace sympcalc;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

Json reparse(const Json& j) { return parse_document(dump(j)); }

}  // namespace

TEST_CASE("scalar and partition round trips") {
  gen::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    auto q = gen::rational(rng);
    CHECK(rational_from_json(reparse(to_json(q))) == q);
    auto p = gen::partition(rng, 16);
    CHECK(partition_from_json(reparse(to_json(p))) == p);
    auto a = gen::assignment(rng, p);
    CHECK(classes_from_json(reparse(to_json(a)), p) == a);
  }
  CHECK(rational_from_json(Json(7)) == 7);
  CHECK(rational_from_json(Json("-3/6")) == Rational(-1, 2));
  CHECK(to_json(Rational(4)) == Json("4/1"));
}

TEST_CASE("composite round trips") {
  gen::Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    auto c = gen::composite(rng, 14);
    auto text = dump(to_json(c));
    auto back = composite_from_json(parse_document(text));
    CHECK(back == c);
    CHECK(dump(to_json(back)) == text);
  }
}

TEST_CASE("matrix, root and form round trips") {
  gen::Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    RationalMatrix m(3, 4);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = gen::rational(rng);
    CHECK(matrix_from_json(reparse(to_json(m))) == m);
  }
  CHECK(to_json(RationalMatrix(2, 0)).at("rows") == 2);
  CHECK(matrix_from_json(to_json(RationalMatrix(2, 0))).rows() == 2);
  CHECK(matrix_from_json(parse_document(R"([["1/2", 3]])"))(0, 1) == 3);
  for (const auto& r : all_roots(4)) CHECK(root_from_json(reparse(to_json(r))) == r);
  DiagonalQuadraticForm f({1, -2, 3, 5});
  CHECK(form_from_json(reparse(to_json(f))) == f);
}

TEST_CASE("quadruple round trips") {
  for (const auto& p : enumerate_symplectic(6)) {
    auto q = corollary24_quadruple(p, cycled_assignment(p, 1));
    auto text = dump(to_json(q));
    auto back = quadruple_from_json(parse_document(text));
    CHECK(dump(to_json(back)) == text);
    CHECK(validate_quadruple(back).ok());
  }
}

TEST_CASE("dumps are deterministic") {
  auto p = validate_symplectic({4, 3, 3});
  auto a = SquareClassAssignment::trivial(p);
  auto one = dump(to_json(character_data(p, a)), true);
  auto two = dump(to_json(character_data(p, a)), true);
  CHECK(one == two);
  auto j = to_json(decide_isotropy(DiagonalQuadraticForm({1, -1})));
  CHECK(dump(j) ==
        R"({"isotropic":true,"local_data":[{"hasse":1,"isotropic":true,"place":"inf"},)"
        R"({"hasse":1,"isotropic":true,"place":"2"}],"witness":[1,1]})");
}

TEST_CASE("malformed input is a parse error") {
  CHECK(code_of([] { parse_document("{\"stages\": ["); }) == ErrorCode::ParseError);
  CHECK(code_of([] { composite_from_json(parse_document("{}")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { composite_from_json(parse_document(R"({"stages": []})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { composite_from_json(parse_document(R"({"stages": [{"partition": "x"}]})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { partition_from_json(parse_document("[2, 1.5]")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { rational_from_json(Json(true)); }) == ErrorCode::ParseError);
  CHECK(code_of([] { rational_from_json(Json("1/0")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { matrix_from_json(parse_document("[[1,2],[3]]")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { matrix_from_json(parse_document(R"({"rows": 2, "cols": 1, "entries": [["1"]]})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { root_from_json(Json(3)); }) == ErrorCode::ParseError);
  CHECK(code_of([] { quadruple_from_json(parse_document(R"({"psi": {"partition": [2]}})")); }) ==
        ErrorCode::ParseError);
  // Semantic failures keep their own codes.
  CHECK(code_of([] { partition_from_json(parse_document("[3, 1]")); }) == ErrorCode::OddMultiplicity);
  CHECK(code_of([] { form_from_json(parse_document("[1, 0]")); }) == ErrorCode::ZeroCoefficient);
  CHECK(code_of([] {
          quadruple_from_json(parse_document(
              R"({"C": {"roots": ["e1-e3"]}, "psi": {"partition": [2, 2]}, "Xt": {"roots": []}, "Yt": {"roots": []}})"));
        }) == ErrorCode::RankMismatch);
}
