#include "sympcalc/serialize.hpp"

#include <utility>

namespace sympcalc {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

// Structural errors from the JSON library surface as ParseError.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    fail(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

std::vector<std::int64_t> integers(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(std::string(what) + " must contain integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

Json group_to_json(const UnipotentGroupSpec& g) {
  Json roots = Json::array();
  for (const auto& r : g.roots()) roots.push_back(to_json(r));
  Json out{{"roots", roots}};
  if (!g.extra().empty()) {
    Json ms = Json::array();
    for (const auto& m : g.extra()) ms.push_back(to_json(m));
    out["matrices"] = ms;
  }
  return out;
}

UnipotentGroupSpec group_from_json(const Json& j, int n) {
  std::vector<RootLabel> roots;
  for (const auto& r : field(j, "roots")) roots.push_back(root_from_json(r));
  std::vector<RationalMatrix> extra;
  if (j.contains("matrices")) {
    for (const auto& m : j.at("matrices")) {
      auto mat = matrix_from_json(m);
      if (mat.rows() != 2 * static_cast<std::size_t>(n)) {
        throw Error(ErrorCode::RankMismatch, "generator matrix has the wrong size");
      }
      extra.push_back(std::move(mat));
    }
  }
  for (const auto& r : roots) {
    if (r.max_index() > n) throw Error(ErrorCode::RankMismatch, "root " + r.to_string() + " exceeds rank");
  }
  return UnipotentGroupSpec(n, std::move(roots), std::move(extra));
}

}  // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed document: ") + e.what());
  }
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("rational must be a string or an integer");
}

Json to_json(const SymplecticPartition& p) { return p.parts(); }

SymplecticPartition partition_from_json(const Json& j) {
  auto values = integers(j, "partition");
  std::vector<int> parts(values.begin(), values.end());
  return SymplecticPartition::validate(std::move(parts));
}

Json to_json(const SquareClassAssignment& a) { return a.values(); }

SquareClassAssignment classes_from_json(const Json& j, const SymplecticPartition& p) {
  auto values = integers(j, "square classes");
  return SquareClassAssignment::aligned(p, values);
}

Json to_json(const CompositePartition& c) {
  Json stages = Json::array();
  for (const auto& s : c.stages()) {
    stages.push_back({{"partition", to_json(s.partition)}, {"square_classes", to_json(s.classes)}});
  }
  return {{"stages", stages}};
}

CompositePartition composite_from_json(const Json& j) {
  return guarded("composite", [&] {
    const auto& stages = field(j, "stages");
    if (!stages.is_array() || stages.empty()) fail("stages must be a non-empty array");
    std::vector<CompositeStage> out;
    for (const auto& s : stages) {
      auto p = partition_from_json(field(s, "partition"));
      auto a = s.contains("square_classes") ? classes_from_json(s.at("square_classes"), p)
                                            : SquareClassAssignment{};
      out.push_back({std::move(p), std::move(a)});
    }
    return CompositePartition(std::move(out));
  });
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

RationalMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    // A bare array of rows is accepted as well.
    const Json& entries = j.is_object() ? field(j, "entries") : j;
    if (!entries.is_array()) fail("matrix must be an array of rows");
    std::size_t rows = entries.size();
    std::size_t cols = entries.empty() ? 0 : entries.front().size();
    if (j.is_object()) {
      rows = field(j, "rows").get<std::size_t>();
      cols = field(j, "cols").get<std::size_t>();
      if (entries.size() != rows) fail("matrix row count does not match \"rows\"");
    }
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!entries[r].is_array() || entries[r].size() != cols) fail("matrix rows must be arrays of length \"cols\"");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(entries[r][c]);
    }
    return m;
  });
}

Json to_json(const RootLabel& r) { return r.to_string(); }

RootLabel root_from_json(const Json& j) {
  if (!j.is_string()) fail("root must be a string such as \"e1-e2\"");
  return RootLabel::parse(j.get<std::string>());
}

Json to_json(const Cocharacter& d) { return d.exponents; }

Json to_json(const DiagonalQuadraticForm& f) { return f.coefficients(); }

DiagonalQuadraticForm form_from_json(const Json& j) { return DiagonalQuadraticForm(integers(j, "form")); }

Json to_json(const IsotropyDecision& d) {
  Json local = Json::array();
  for (const auto& l : d.local) {
    local.push_back({{"place", l.place.to_string()}, {"hasse", l.hasse}, {"isotropic", l.isotropic}});
  }
  Json out{{"isotropic", d.isotropic}, {"local_data", local}};
  if (d.witness) out["witness"] = *d.witness;
  return out;
}

Json to_json(const StabilizerShape& s) {
  Json orth = Json::array();
  for (const auto& b : s.orthogonal_blocks) orth.push_back({{"part", b.part}, {"form", to_json(b.form)}});
  Json symp = Json::array();
  for (const auto& f : s.symplectic_ranks) symp.push_back({{"part", f.part}, {"rank", f.rank}});
  return {{"orthogonal_blocks", orth}, {"symplectic_ranks", symp}};
}

Json to_json(const CharacterFunctional& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms) terms.push_back({{"row", t.row}, {"col", t.col}, {"coeff", to_json(t.coeff)}});
  return {{"partition", to_json(f.partition)},
          {"square_classes", to_json(f.classes)},
          {"terms", terms},
          {"x", to_json(f.x)}};
}

Json to_json(const ExchangeQuadruple& q) {
  return {{"C", group_to_json(q.c)},
          {"psi", {{"partition", to_json(q.psi.partition)}, {"square_classes", to_json(q.psi.classes)}}},
          {"Xt", group_to_json(q.xt)},
          {"Yt", group_to_json(q.yt)}};
}

ExchangeQuadruple quadruple_from_json(const Json& j) {
  return guarded("quadruple", [&] {
    const auto& psi = field(j, "psi");
    auto p = partition_from_json(field(psi, "partition"));
    auto a = psi.contains("square_classes") ? classes_from_json(psi.at("square_classes"), p)
                                            : SquareClassAssignment::trivial(p);
    int n = p.rank();
    return ExchangeQuadruple{group_from_json(field(j, "C"), n), character_data(p, a),
                             group_from_json(field(j, "Xt"), n), group_from_json(field(j, "Yt"), n)};
  });
}

Json to_json(const QuadrupleReport& r) {
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    Json entry{{"condition", c.number}, {"passed", c.passed}};
    if (!c.passed) entry["witness"] = c.witness;
    conds.push_back(std::move(entry));
  }
  return {{"conditions", conds}, {"ok", r.ok()}};
}

}  // namespace sympcalc
