#include "zgpd/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "zgpd/serialize.hpp"
#include "zgpd/universe.hpp"

namespace zgpd::cli {

using Report = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Malformed, "cannot read " + path, {path});
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::PoolExhausted:
      return kExhausted;
    case ErrorCode::NotAFibration:
    case ErrorCode::NotFibrant:
    case ErrorCode::DomainNotFibrant:
    case ErrorCode::NotAcyclicCofibration:
    case ErrorCode::NotACovering:
    case ErrorCode::Internal:
      return kFails;
    default:
      return kInvalidInput;
  }
}

// Images of objects and morphisms, by name.
Report images(const EquivariantFunctor& f) {
  const Groupoid& s = f.source->g();
  const Groupoid& t = f.target->g();
  Report objects = Report::array();
  for (ObjectId x : s.objects()) objects.push_back({s.object_name(x), t.object_name(f(x))});
  Report morphisms = Report::array();
  for (MorphismId m : s.morphisms()) morphisms.push_back({s.morphism_name(m), t.morphism_name(f(m))});
  return Report{{"objects", std::move(objects)}, {"morphisms", std::move(morphisms)}};
}

Report square_report(const LiftingProblem& p) {
  return Report{{"top", images(p.top)}, {"bottom", images(p.bottom)}};
}

Report sizes(const ZTwoGroupoid& a) {
  return Report{{"objects", a.g().object_count()}, {"morphisms", a.g().morphism_count()}};
}

std::string scalar(const Report& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool flat(const Report& j) {
  return std::all_of(j.begin(), j.end(), [](const Report& e) { return e.is_primitive(); });
}

void render(const Report& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Report& v = it.value();
    const std::string key = j.is_object() ? it.key() : "-";
    if (v.is_primitive()) {
      out << pad << key << ": " << scalar(v) << "\n";
    } else if (v.is_array() && flat(v)) {
      out << pad << key << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
      out << "]\n";
    } else {
      out << pad << key << ":\n";
      render(v, out, indent + 1);
    }
  }
}

struct Context {
  SearchLimits limits = SearchLimits::defaults();
};

// ---- commands ----

Report cmd_validate(const std::string& path) {
  const Document d = deserialize(read_file(path));
  Report r{{"command", "validate"}, {"kind", std::string(document_kind(d))}, {"holds", true}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GroupoidPtr>) {
          r["objects"] = v->object_count();
          r["morphisms"] = v->morphism_count();
        } else if constexpr (std::is_same_v<T, ZTwoPtr>) {
          r["objects"] = v->g().object_count();
          r["morphisms"] = v->g().morphism_count();
          r["fixed_objects"] = fixed_points(*v).size();
        } else if constexpr (std::is_same_v<T, EquivariantFunctor>) {
          r["source"] = sizes(*v.source);
          r["target"] = sizes(*v.target);
        } else if constexpr (std::is_same_v<T, LiftingProblem>) {
          r["commutes"] = true;
        } else {
          r["pool"] = v.pool;
        }
      },
      d);
  return r;
}

Report cmd_check(const std::string& what, const std::string& path, const Context& ctx) {
  const EquivariantFunctor f = deserialize_map(read_file(path));
  const Groupoid& s = f.source->g();
  const Groupoid& t = f.target->g();
  Report r{{"command", "check"}, {"what", what}};
  auto cofibration = [&](Report& into) {
    into["injective_on_objects"] = is_cofibration(f);
    std::vector<std::optional<ObjectId>> seen(t.object_count());
    for (ObjectId x : s.objects()) {
      auto& slot = seen[f(x).index()];
      if (slot) {
        into["collision"] = {s.object_name(*slot), s.object_name(x)};
        break;
      }
      slot = x;
    }
  };
  auto equivalence = [&](Report& into) {
    const EquivalenceReport e = is_equivalence(f.map);
    into["equivalence"] = e.holds;
    into["hom_pairs_checked"] = e.hom_pairs_checked;
    if (!e.holds) {
      into["failure"] = e.failure;
      if (e.failing_pair) into["failing_pair"] = {s.object_name(e.failing_pair->first), s.object_name(e.failing_pair->second)};
      if (e.failing_target) into["failing_target"] = t.object_name(*e.failing_target);
    }
  };
  if (what == "cofibration") {
    r["property"] = "injective-on-objects";
    cofibration(r);
    r["holds"] = r["injective_on_objects"];
  } else if (what == "weq") {
    r["property"] = "equivalence-of-groupoids";
    equivalence(r);
    r["holds"] = r["equivalence"];
  } else if (what == "acyclic-cofibration") {
    r["property"] = "injective-on-objects-and-equivalence";
    cofibration(r);
    equivalence(r);
    r["holds"] = is_acyclic_cofibration(f);
  } else if (what == "proj-fibration") {
    r["property"] = "isofibration";
    const IsofibrationReport iso = is_isofibration(f.map);
    r["holds"] = iso.holds;
    if (iso.witness)
      r["unliftable"] = {{"object", s.object_name(iso.witness->first)}, {"morphism", t.morphism_name(iso.witness->second)}};
  } else if (what == "inj-fibration") {
    const FibrationReport fib = is_injective_fibration(f, ctx.limits);
    r["property"] = fib.property;
    r["holds"] = fib.holds;
    r["isofibration"] = fib.isofibration;
    r["i_prime_lifting"] = fib.i_prime_lifting;
    r["i_prime_squares_checked"] = fib.squares_checked;
    if (fib.failing_square) {
      const bool against_i_prime = fib.failing_square->left.source == check_I();
      r["failing_square"] = square_report(*fib.failing_square);
      r["failing_square"]["generator"] = against_i_prime ? "i_prime" : "s_i";
    }
  } else {
    throw Error(ErrorCode::Malformed, "unknown property '" + what + "'", {what});
  }
  return r;
}

Report cmd_lift(const std::string& path, const Context& ctx) {
  const LiftingProblem p = deserialize_square(read_file(path));
  const auto filler = solve_lifting(p, ctx.limits);
  Report r{{"command", "lift"}, {"property", "diagonal-filler"}, {"holds", filler.has_value()}};
  if (filler) r["diagonal"] = images(filler->diagonal);
  return r;
}

Report cmd_decompose(const std::string& path, const Context& ctx) {
  const EquivariantFunctor f = deserialize_map(read_file(path));
  const CellDecomposition d = cell_decompose(f);
  const DecompositionCheck check = verify_decomposition(f, d, {one(), check_I(), nabla()}, ctx.limits);
  Report cells = Report::array();
  for (const CellStage& c : d.cells) {
    const Groupoid& g = c.inclusion.target->g();
    Report added = Report::array();
    for (ObjectId x : c.new_objects) added.push_back(g.object_name(x));
    cells.push_back({{"generator", c.kind == CellStage::Kind::SCell ? "s_i" : "i_prime"},
                     {"new_objects", std::move(added)},
                     {"attaching", images(c.attaching)}});
  }
  Report r{{"command", "decompose"}, {"property", "cell-decomposition"}, {"holds", check.ok()}};
  r["cells"] = std::move(cells);
  r["composite_matches"] = check.composite_matches;
  r["matching_is_iso"] = check.matching_is_iso;
  r["squares_commute"] = check.squares_commute;
  r["pushouts_universal"] = check.pushouts_universal;
  r["stages_acyclic"] = check.stages_acyclic;
  return r;
}

Report cmd_factorize(const std::string& path, const Context& ctx) {
  const EquivariantFunctor f = deserialize_map(read_file(path));
  const Factorization fac = factorize(f, ctx.limits);
  const bool j_ok = is_acyclic_cofibration(fac.j);
  const bool q_ok = is_injective_fibration(fac.q, ctx.limits).holds;
  const bool composite = compose(fac.q, fac.j) == f;
  Report r{{"command", "factorize"}, {"property", "acyclic-cofibration-then-fibration"},
           {"holds", j_ok && q_ok && composite}};
  r["middle"] = sizes(*fac.middle);
  r["j_acyclic_cofibration"] = j_ok;
  r["q_injective_fibration"] = q_ok;
  r["composite_equals_input"] = composite;
  r["middle_fibrant"] = is_fibrant(fac.middle, ctx.limits);
  return r;
}

Report cmd_path_object(const std::string& path, const Context& ctx) {
  const EquivariantFunctor f = deserialize_map(read_file(path));
  const PathObject p = path_object(f, ctx.limits);
  const PathObjectReport rep = check_path_object(p, ctx.limits);
  Report r{{"command", "path-object"}, {"property", "very-good-path-object"}, {"holds", rep.ok()}};
  r["total"] = sizes(*p.total);
  r["delta1_acyclic_cofibration"] = rep.delta1_acyclic_cofibration;
  r["delta2_fibration"] = rep.delta2_fibration;
  r["composite_is_diagonal"] = rep.composite_is_diagonal;
  r["equivariant"] = rep.equivariant;
  r["witness_isos"] = rep.witness_isos;
  if (rep.total_fibrant) r["total_fibrant"] = *rep.total_fibrant;
  return r;
}

Report cmd_pi(const std::string& g_path, const std::string& f_path, const Context& ctx) {
  const EquivariantFunctor g = deserialize_map(read_file(g_path));
  const EquivariantFunctor f = deserialize_map(read_file(f_path));
  const DependentProduct pi = pi_along(g, f, ctx.limits);
  const bool fib = is_injective_fibration(pi.projection, ctx.limits).holds;
  std::size_t checked = 0;
  bool adjunction = true;
  for (const ZTwoPtr& y : small_test_objects()) {
    for (const EquivariantFunctor& m : enumerate_equivariant_maps(y, g.target, ctx.limits)) {
      adjunction = adjunction && check_pi_adjunction(pi, m, ctx.limits).ok();
      ++checked;
    }
  }
  Report r{{"command", "pi"}, {"property", "dependent-product"}, {"holds", fib && adjunction}};
  r["total"] = sizes(*pi.total);
  r["projection_fibration"] = fib;
  r["adjunction_instances"] = checked;
  r["adjunction_counts_match"] = adjunction;
  return r;
}

Report cmd_pullback(const std::string& g_path, const std::string& h_path, const Context& ctx) {
  const EquivariantFunctor g = deserialize_map(read_file(g_path));
  const EquivariantFunctor h = deserialize_map(read_file(h_path));
  const FibrationPullback pb = pullback_fibration(g, h, ctx.limits);
  const bool fib = is_injective_fibration(pb.fibration, ctx.limits).holds;
  Report r{{"command", "pullback"}, {"property", "pullback-of-fibration"}, {"holds", fib}};
  r["object"] = sizes(*pb.square.object);
  r["projection_fibration"] = fib;
  return r;
}

Report cmd_universe(std::size_t pool, const std::string& verify, const Context& ctx) {
  const UniverseBundle b = build_universe(pool, ctx.limits);
  const bool all = verify == "all";
  Report r{{"command", "universe"}, {"pool", pool}};
  r["U"] = sizes(*b.U);
  r["U"]["fixed_objects"] = fixed_points(*b.U).size();
  r["Utilde"] = sizes(*b.Utilde);
  bool holds = true;
  if (all || verify == "maps") {
    const UniverseMapsReport m = check_universe_maps(b, ctx.limits);
    r["maps"] = {{"property", "universe-maps-fibrant"},
                 {"p_fibration", m.p_fibration},
                 {"u_fibrant", m.u_fibrant},
                 {"utilde_fibrant", m.utilde_fibrant},
                 {"explicit_fillers", m.explicit_fillers},
                 {"u_fillers_checked", m.u_fillers_checked},
                 {"p_fillers_checked", m.p_fillers_checked},
                 {"holds", m.passed()}};
    holds = holds && m.passed();
  }
  if (all || verify == "axioms") {
    const UniverseAxiomReport a = universe_axiom_check(b, covering_corpus(), 3, ctx.limits);
    std::size_t classified = 0, exhausted = 0, inconsistent = 0;
    Report failures = Report::array();
    for (const auto& i : a.instances) {
      classified += i.classified;
      exhausted += i.exhausted;
      if (!i.consistent) {
        ++inconsistent;
        failures.push_back(i.clause + ": " + i.description);
      }
    }
    r["axioms"] = {{"property", "universe-closure"},
                   {"instances", a.instances.size()},
                   {"classified", classified},
                   {"pool_exhausted", exhausted},
                   {"inconsistent", inconsistent},
                   {"holds", a.passed()}};
    if (!failures.empty()) r["axioms"]["failures"] = std::move(failures);
    holds = holds && a.passed();
  }
  if (all || verify == "univalence") {
    const UnivalenceCertificate c = check_univalence(b, ctx.limits);
    const EquivalenceType e = equivalence_type(b, ctx.limits);
    r["univalence"] = {{"property", "univalence"},
                       {"path_objects", c.path_objects},
                       {"delta1_acyclic_cofibration", c.delta1_acyclic_cofibration},
                       {"u_fibrant", c.u_fibrant},
                       {"path_fibrant", c.path_fibrant},
                       {"delta1_weak_equivalence", c.delta1_weak_equivalence},
                       {"hom_pairs_checked", c.hom_pairs_checked},
                       {"equivalence_type_matches_path_object", e.section_matches && e.fiberwise_count},
                       {"conclusion", c.conclusion}};
    holds = holds && c.conclusion;
  }
  r["holds"] = holds;
  return r;
}

Report cmd_classify(const std::string& path, std::size_t pool, const Context& ctx) {
  const EquivariantFunctor q = deserialize_map(read_file(path));
  const UniverseBundle b = build_universe(pool, ctx.limits);
  const SmallFibrationWitness w = classify(q, b);
  const bool iso = is_isomorphism(w.comparison.map);
  const bool over = compose(w.pullback.first, w.comparison) == q;
  Report r{{"command", "classify"}, {"property", "pullback-of-universe"}, {"pool", pool}, {"holds", iso && over}};
  r["chi"] = images(w.chi);
  r["comparison_iso"] = iso;
  r["comparison_over_base"] = over;
  return r;
}

std::string cmd_export(const std::string& name, std::size_t pool, const Context& ctx) {
  static constexpr std::string_view to_one_prefix = "to-one:";
  if (name == "universe" || name == "universe-projection") {
    const UniverseBundle b = build_universe(pool, ctx.limits);
    return name == "universe" ? serialize(*b.U) : serialize(b.p);
  }
  if (name == "universe-config") return serialize(BundleConfig{pool});
  if (name.starts_with(to_one_prefix)) {
    auto v = standard(name.substr(to_one_prefix.size()));
    if (!std::holds_alternative<ZTwoPtr>(v)) throw Error(ErrorCode::UnknownName, "not a standard object", {name});
    return serialize(to_one(std::get<ZTwoPtr>(v)));
  }
  auto v = standard(name);
  if (auto* a = std::get_if<ZTwoPtr>(&v)) return serialize(**a);
  return serialize(std::get<EquivariantFunctor>(v));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks for Z2-equivariant groupoids under the injective model structure", "zgpd"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::uint64_t budget = 0;
  app.add_flag("--json", json, "Print the report as one JSON object");
  app.add_option("--budget", budget, "Search node budget (default: $ZGPD_SEARCH_BUDGET or built-in)");

  std::string what, file, second, verify = "all", name;
  std::size_t pool = 2;
  const std::vector<std::string> properties{"cofibration", "weq", "inj-fibration", "proj-fibration",
                                            "acyclic-cofibration"};

  auto* validate = app.add_subcommand("validate", "Parse and validate a document");
  validate->add_option("file", file)->required();
  auto* check = app.add_subcommand("check", "Check a property of a map");
  check->add_option("--what", what)->required()->check(CLI::IsMember(properties));
  check->add_option("file", file)->required();
  auto* lift = app.add_subcommand("lift", "Solve a lifting problem");
  lift->add_option("file", file)->required();
  auto* decompose = app.add_subcommand("decompose", "Decompose an acyclic cofibration into generator cells");
  decompose->add_option("file", file)->required();
  auto* factor = app.add_subcommand("factorize", "Factor a map as an acyclic cofibration then a fibration");
  factor->add_option("file", file)->required();
  auto* path_obj = app.add_subcommand("path-object", "Build and check the path object of a map");
  path_obj->add_option("file", file)->required();
  auto* pi = app.add_subcommand("pi", "Dependent product of f along g");
  pi->add_option("along", file)->required();
  pi->add_option("fibration", second)->required();
  auto* pb = app.add_subcommand("pullback", "Pullback of a fibration g along h");
  pb->add_option("fibration", file)->required();
  pb->add_option("along", second)->required();
  auto* universe = app.add_subcommand("universe", "Build and verify the finite universe");
  universe->add_option("--pool", pool)->required();
  universe->add_option("--verify", verify)->check(CLI::IsMember({"maps", "axioms", "univalence", "all"}));
  auto* classify_cmd = app.add_subcommand("classify", "Classify a covering by a map into the universe");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--pool", pool);
  auto* export_cmd = app.add_subcommand("export", "Print the document of a standard object, map or universe");
  export_cmd->add_option("name", name)->required();
  export_cmd->add_option("--pool", pool);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kInvalidInput;
  }

  Context ctx;
  if (budget) ctx.limits.max_nodes = budget;
  Report report;
  try {
    if (export_cmd->parsed()) {
      out << cmd_export(name, pool, ctx);
      return kHolds;
    }
    if (validate->parsed()) report = cmd_validate(file);
    if (check->parsed()) report = cmd_check(what, file, ctx);
    if (lift->parsed()) report = cmd_lift(file, ctx);
    if (decompose->parsed()) report = cmd_decompose(file, ctx);
    if (factor->parsed()) report = cmd_factorize(file, ctx);
    if (path_obj->parsed()) report = cmd_path_object(file, ctx);
    if (pi->parsed()) report = cmd_pi(file, second, ctx);
    if (pb->parsed()) report = cmd_pullback(file, second, ctx);
    if (universe->parsed()) report = cmd_universe(pool, verify, ctx);
    if (classify_cmd->parsed()) report = cmd_classify(file, pool, ctx);
  } catch (const PoolExhausted& e) {
    report = Report{{"error", "POOL_EXHAUSTED"}, {"message", e.what()}, {"fiber_size", e.fiber_size()}, {"pool", e.pool()}};
  } catch (const Error& e) {
    report = Report{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}, {"witnesses", e.witnesses()}};
  }
  int code = kHolds;
  if (report.contains("error")) {
    const std::string name_of = report["error"].get<std::string>();
    code = kFails;
    for (int c = 0; c <= static_cast<int>(ErrorCode::Internal); ++c)
      if (error_code_name(static_cast<ErrorCode>(c)) == name_of) code = exit_code_for(static_cast<ErrorCode>(c));
  } else if (!report.value("holds", false)) {
    code = kFails;
  }
  if (json)
    out << report.dump(2) << "\n";
  else
    render(report, out, 0);
  return code;
}

}  // namespace zgpd::cli
