#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sympcalc/serialize.hpp"

using namespace sympcalc;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCounterexample = 2;

struct Outcome {
  Json report;
  bool verified = true;
};

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Error(ErrorCode::ParseError, std::string("bad entry \"") + item + "\" in " + what);
    }
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::EmptyInput, std::string(what) + " is empty");
  return out;
}

std::vector<int> parse_parts(const std::string& text) {
  auto v = parse_list(text, "partition");
  return {v.begin(), v.end()};
}

SymplecticPartition partition_arg(const std::string& text) { return SymplecticPartition::validate(parse_parts(text)); }

SquareClassAssignment classes_arg(const SymplecticPartition& p, const std::string& text) {
  if (text.empty()) return SquareClassAssignment::trivial(p);
  auto v = parse_list(text, "square classes");
  return SquareClassAssignment::aligned(p, v);
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

int sweep_limit() {
  if (const char* env = std::getenv("SYMPCALC_MAX_TWO_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "SYMPCALC_MAX_TWO_N is not an integer");
    }
  }
  return 16;
}

void check_limit(int two_n) {
  int limit = sweep_limit();
  if (two_n > limit) {
    throw Error(ErrorCode::HypothesisViolated, "2n = " + std::to_string(two_n) + " exceeds the sweep limit " +
                                                   std::to_string(limit) + " (set SYMPCALC_MAX_TWO_N to raise it)");
  }
}

// Text mode: one "key: value" line per field, nested objects indented.
void render_text(std::ostream& out, const Json& j, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalarish = [](const Json& v) {
    if (!v.is_array()) return !v.is_object();
    for (const auto& x : v) {
      if (x.is_object()) return false;
      if (x.is_array()) {
        for (const auto& y : x) {
          if (y.is_structured()) return false;
        }
      }
    }
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (scalarish(v)) {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        out << pad << k << ":\n";
        render_text(out, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (scalarish(v)) {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else {
        out << pad << "-\n";
        render_text(out, v, indent + 2);
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

Json steps_json(const ExpansionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"before", to_json(s.before)},
                     {"after", to_json(s.after)},
                     {"leading_even", s.leading_even},
                     {"odd_part", s.odd_part},
                     {"odd_count", s.odd_count},
                     {"position", s.position}});
  }
  return steps;
}

Json basis_json(const std::vector<BasisElement>& basis) {
  Json out = Json::array();
  for (const auto& b : basis) out.push_back(b.to_string());
  return out;
}

Json roots_json(const std::vector<RootLabel>& roots) {
  Json out = Json::array();
  for (const auto& r : roots) out.push_back(to_json(r));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with symplectic partitions, nilpotent orbits and quadratic forms"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string p_text, q_text, a_text, file, rule, kind = "sp", form_text;
  int two_n = 0;
  bool trace = false;
  std::function<Outcome()> action;

  auto add = [&](const char* name, const char* help, std::function<Outcome()> run) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&action, run] { action = run; });
    return sub;
  };
  auto need_p = [&](CLI::App* s) { s->add_option("-p,--partition", p_text, "Comma-separated parts")->required(); };
  auto opt_a = [&](CLI::App* s) {
    s->add_option("-a,--classes", a_text, "Square classes aligned with the even parts (default: all 1)");
  };

  auto* s_enum = add("enumerate", "List the symplectic partitions of 2n", [&] {
    check_limit(two_n);
    auto parts = enumerate_symplectic(two_n);
    Json list = Json::array();
    for (const auto& p : parts) list.push_back(to_json(p));
    return Outcome{{{"two_n", two_n}, {"count", parts.size()}, {"partitions", list}}};
  });
  s_enum->add_option("--two-n", two_n, "Total 2n")->required();

  need_p(add("special", "Test whether a partition is special",
             [&] { return Outcome{{{"special", is_special(partition_arg(p_text))}}}; }));

  auto* s_expand = add("expand", "Smallest special partition dominating p", [&] {
    auto p = partition_arg(p_text);
    Json out{{"expansion", to_json(sp_expansion(p))}};
    if (trace) out["steps"] = steps_json(expansion_via_steps(p));
    return Outcome{out};
  });
  need_p(s_expand);
  s_expand->add_flag("--trace", trace, "Also report the rewriting steps");

  auto* s_dom = add("dominance", "Compare two partitions in the dominance order", [&] {
    auto p = partition_arg(p_text);
    auto q = SymplecticPartition::validate(parse_parts(q_text));
    return Outcome{{{"ordering", to_string(dominance_compare(p, q))}}};
  });
  need_p(s_dom);
  s_dom->add_option("-q", q_text, "Second partition")->required();

  auto* s_max = add("maximal", "Maximal elements of a set of partitions", [&] {
    auto doc = read_file(file);
    const Json& list = doc.is_object() && doc.contains("partitions") ? doc.at("partitions") : doc;
    if (!list.is_array()) throw Error(ErrorCode::ParseError, "expected an array of partitions");
    std::vector<SymplecticPartition> set;
    for (const auto& x : list) set.push_back(partition_from_json(x));
    auto r = maximal_elements(set);
    Json maximal = Json::array(), non_special = Json::array();
    for (const auto& p : r.maximal) maximal.push_back(to_json(p));
    for (const auto& p : r.non_special) non_special.push_back(to_json(p));
    return Outcome{{{"maximal", maximal}, {"non_special", non_special}}};
  });
  s_max->add_option("--set", file, "JSON file: array of partitions")->required();

  auto* s_desc = add("descend", "Drop the leading part and toggle the group kind", [&] {
    auto parts = parse_parts(p_text);
    auto d = descend(parts, kind == "sp" ? GroupKind::Linear : GroupKind::Metaplectic);
    return Outcome{{{"partition", to_json(d.partition)}, {"kind", to_string(d.kind)}}};
  });
  need_p(s_desc);
  s_desc->add_option("--kind", kind, "Group kind")->check(CLI::IsMember({"sp", "mp"}));

  auto* s_sl2 = add("sl2", "Nilpotent, neutral element and completion of the triple", [&] {
    auto p = partition_arg(p_text);
    auto a = classes_arg(p, a_text);
    auto t = complete_sl2(build_nilpotent(p, a), build_cocharacter(p).cartan());
    auto c = check_triple(t);
    Json checks{{"hx", c.hx}, {"hy", c.hy}, {"yx", c.yx}, {"membership", c.membership}};
    return Outcome{{{"x", to_json(t.x)}, {"h", to_json(t.h)}, {"y", to_json(t.y)}, {"checks", checks}, {"ok", c.ok()}},
                   c.ok()};
  });
  need_p(s_sl2);
  opt_a(s_sl2);

  need_p(add("grade", "Grading of sp(2n) by the cocharacter of p", [&] {
    auto p = partition_arg(p_text);
    auto d = build_cocharacter(p);
    auto g = grade(d);
    Json levels = Json::array();
    for (const auto& [l, basis] : g.levels) {
      levels.push_back({{"level", l}, {"dim", basis.size()}, {"basis", basis_json(basis)}});
    }
    return Outcome{{{"cocharacter", to_json(d)}, {"levels", levels}, {"total_dim", g.total_dim()}}};
  }));

  auto* s_char = add("character", "Character terms on the level >= 2 unipotent", [&] {
    auto p = partition_arg(p_text);
    auto out = to_json(character_data(p, classes_arg(p, a_text)));
    out["cocharacter"] = to_json(build_cocharacter(p));
    return Outcome{out};
  });
  need_p(s_char);
  opt_a(s_char);

  need_p(add("polarization", "Root lists of the two halves of level one", [&] {
    auto p = partition_arg(p_text);
    auto r = polarization_roots(p);
    return Outcome{
        {{"x_roots", roots_json(r.x_roots)}, {"y_roots", roots_json(r.y_roots)}, {"level_one", roots_json(level_one_roots(p))}}};
  }));

  auto* s_heis = add("heisenberg", "Alternating form on level one", [&] {
    auto p = partition_arg(p_text);
    auto r = heisenberg_form(p, classes_arg(p, a_text));
    bool ok = r.nondegenerate && r.sharp_intersection_dim == 0;
    return Outcome{{{"dim_g1", r.dim_g1},
                    {"rank", r.rank},
                    {"nondegenerate", r.nondegenerate},
                    {"sharp_intersection_dim", r.sharp_intersection_dim},
                    {"gram_radical_dim", r.gram_radical_dim},
                    {"gram", to_json(r.gram)}},
                   ok};
  });
  need_p(s_heis);
  opt_a(s_heis);

  auto* s_lemma = add("verify-lemma21", "Nondegeneracy sweep over all partitions up to 2n", [&] {
    check_limit(two_n);
    auto s = verify_lemma21(two_n);
    Json failures = Json::array();
    for (const auto& f : s.failures) {
      failures.push_back({{"partition", to_json(f.partition)}, {"square_classes", to_json(f.classes)}, {"reason", f.reason}});
    }
    return Outcome{{{"max_two_n", two_n},
                    {"partitions", s.partitions},
                    {"instances", s.instances},
                    {"failures", failures},
                    {"ok", s.ok()}},
                   s.ok()};
  });
  s_lemma->add_option("--max-two-n", two_n, "Largest 2n")->required();

  add("quadruple", "Check the six exchange conditions for a quadruple file", [&] {
       auto r = validate_quadruple(quadruple_from_json(read_file(file)));
       return Outcome{to_json(r), r.ok()};
     })->add_option("--file", file, "Quadruple specification")->required();

  auto* s_cert = add("certify-cor24", "Build and check the polarization quadruple", [&] {
    auto p = partition_arg(p_text);
    auto q = corollary24_quadruple(p, classes_arg(p, a_text));
    auto r = validate_quadruple(q);
    return Outcome{{{"certified", r.ok()}, {"report", to_json(r)}, {"quadruple", to_json(q)}}, r.ok()};
  });
  need_p(s_cert);
  opt_a(s_cert);

  auto* s_stab = add("stabilizer", "Orthogonal block forms of the stabilizer", [&] {
    auto p = partition_arg(p_text);
    auto a = classes_arg(p, a_text);
    auto shape = stabilizer_forms(p, a);
    Json blocks = Json::array();
    for (const auto& b : shape.orthogonal_blocks) {
      blocks.push_back({{"part", b.part}, {"form", to_json(b.form)}, {"isotropic", is_isotropic_rational(b.form)}});
    }
    return Outcome{{{"orthogonal_blocks", blocks},
                    {"symplectic_ranks", to_json(shape)["symplectic_ranks"]},
                    {"anisotropic", is_anisotropic_stabilizer(p, a)},
                    {"odd_parts_excluded", !shape.symplectic_ranks.empty()}}};
  });
  need_p(s_stab);
  opt_a(s_stab);

  add("isotropic", "Decide isotropy of a diagonal form over Q", [&] {
    auto coeffs = parse_list(form_text, "form");
    return Outcome{to_json(decide_isotropy(DiagonalQuadraticForm(coeffs)))};
  })->add_option("--form", form_text, "Comma-separated coefficients (use --form=-1,... for a leading minus)")->required();

  need_p(add("imaginary-check", "Multiplicity bound for even partitions", [&] {
    auto c = totally_imaginary_constraint(partition_arg(p_text));
    Json violators = Json::array();
    for (const auto& [part, mult] : c.violators) violators.push_back({{"part", part}, {"multiplicity", mult}});
    return Outcome{{{"ok", c.ok}, {"violators", violators}}, c.ok};
  }));

  auto* s_comp = add("composite", "Apply a rewriting rule to a composite partition", [&] {
    auto r = parse_composite_rule(rule);
    if (!r) throw Error(ErrorCode::ParseError, "unknown rule " + rule);
    auto result = composite_rewrite(composite_from_json(read_file(file)), *r);
    return Outcome{{{"rule", to_string(*r)}, {"result", to_json(result)}, {"plain", result.is_plain()}}};
  });
  s_comp->add_option("--file", file, "Composite specification")->required();
  s_comp->add_option("--rule", rule, "MergeLeadingEven, SplitLeadingEven, Prop32Merge, Prop33Merge or Lemma43Step")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    Outcome out = action();
    if (format == "text") {
      render_text(std::cout, out.report, 0);
    } else {
      std::cout << dump(out.report) << "\n";
    }
    return out.verified ? kOk : kCounterexample;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
