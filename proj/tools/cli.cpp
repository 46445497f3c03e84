#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "corebound/core_weber.hpp"
#include "corebound/error.hpp"
#include "corebound/io.hpp"
#include "corebound/lattice.hpp"
#include "corebound/normal.hpp"
#include "corebound/rays.hpp"
#include "corebound/setsystem.hpp"

namespace corebound::cli {

std::filesystem::path default_fixture_dir() {
#ifdef COREBOUND_FIXTURE_DIR
  return COREBOUND_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

namespace {

using io::Json;

struct Options {
  std::string system;
  std::string poset;
  std::string game;
  std::string collection;
  std::string format = "report";
  std::string out;
  std::string method;
  std::string fixtures;
  bool update = false;
};

Json sets_json(std::span<const Coalition> sets) {
  Json out = Json::array();
  for (Coalition s : sets) out.push_back(io::coalition_to_json(s));
  return out;
}

Json vectors_json(const std::vector<RationalVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(io::vector_to_json(v));
  return out;
}

Json structure_json(const StructureReport& r) {
  return Json{{"regular", r.is_regular},
              {"weakly_union_closed", r.is_weakly_union_closed},
              {"union_intersection_closed", r.is_union_intersection_closed},
              {"height", r.height},
              {"closure_height", r.closure_height}};
}

SetSystem load_system(const Options& o) {
  if (!o.system.empty()) return io::load_set_system(io::read_file(o.system));
  if (!o.poset.empty()) return downsets(io::load_poset(io::read_file(o.poset)));
  throw Error(ErrorCode::MalformedDocument, "--system or --poset is required");
}

Game load_game(const Options& o) {
  if (o.game.empty()) throw Error(ErrorCode::MalformedDocument, "--game is required");
  return io::load_game(io::read_file(o.game));
}

std::vector<OrderedPairRay> pair_rays_of(const SetSystem& f) {
  const auto report = rays_general(f);
  if (!report.all_pair_form) {
    throw Error(ErrorCode::NoFeasibleLift, "C(0) has directions that are not pair rays");
  }
  std::vector<OrderedPairRay> out;
  for (const auto& r : report.extremal_rays) out.push_back(*as_pair_ray(r));
  std::sort(out.begin(), out.end());
  return out;
}

struct CollectionOutcome {
  NormalCollection candidate;
  std::optional<LiftResult> lift;
  NormalCollection final;
};

struct CollectionSetup {
  SetSystem closed;
  PlayerPoset poset;
  bool lifted;
  std::vector<CollectionOutcome> outcomes;
};

CollectionSetup keyword_collections(const SetSystem& f, const std::vector<CollectionKind>& kinds) {
  const bool is_closed = is_union_intersection_closed(f);
  SetSystem closed = is_closed ? f : closure(f);
  PlayerPoset p = extract_poset(closed);
  CollectionSetup setup{closed, p, !is_closed, {}};
  const NormalCollection irredundant = algo1_irredundant(p);
  std::optional<std::vector<OrderedPairRay>> rays;
  for (CollectionKind kind : kinds) {
    CollectionOutcome outcome;
    switch (kind) {
      case CollectionKind::irredundant: outcome.candidate = irredundant; break;
      case CollectionKind::weber: outcome.candidate = weber_collection(irredundant); break;
      case CollectionKind::grabisch_xie: outcome.candidate = grabisch_xie_collection(p); break;
      case CollectionKind::custom: throw Error(ErrorCode::WrongCollectionKind, "custom collections come from files");
    }
    if (is_closed) {
      outcome.final = outcome.candidate;
    } else {
      if (!rays) rays = pair_rays_of(f);
      outcome.lift = lift_collection(f, outcome.candidate, *rays);
      outcome.final = outcome.lift->collection;
    }
    if (!validate_normal(f, outcome.final)) {
      throw Error(ErrorCode::InternalInconsistency,
                  std::string(to_string(kind)) + " collection does not bound the core");
    }
    setup.outcomes.push_back(std::move(outcome));
  }
  return setup;
}

NormalCollection resolve_collection(const SetSystem& f, const std::string& spec) {
  if (spec.empty() || spec == "none") return NormalCollection{};
  if (spec == "irredundant" || spec == "weber" || spec == "gx" || spec == "grabisch_xie") {
    return keyword_collections(f, {parse_collection_kind(spec)}).outcomes.front().final;
  }
  return io::load_collection(io::read_file(spec), f.players());
}

bool raw(const Options& o) { return o.format == "raw"; }

Json cmd_classify(const Options& o) {
  const SetSystem f = load_system(o);
  Json s = structure_json(classify(f));
  if (raw(o)) return s;
  Json out{{"command", "classify"}, {"players", f.players()}, {"set_count", f.size()}};
  out.update(s);
  return out;
}

Json cmd_closure(const Options& o) {
  const SetSystem f = load_system(o);
  const SetSystem closed = closure(f);
  if (raw(o)) return io::dump_set_system(closed);
  std::vector<Coalition> added;
  for (Coalition s : closed.sets()) {
    if (!f.contains(s)) added.push_back(s);
  }
  Json out{{"command", "closure"},
           {"closure", io::dump_set_system(closed)},
           {"added", sets_json(added)},
           {"height", height(closed)}};
  if (height(closed) == f.players()) {
    const PlayerPoset p = extract_poset(closed);
    out["poset"] = io::dump_poset(p);
    out["levels"] = sets_json(level_partition(p).levels);
  } else {
    out["poset"] = nullptr;
  }
  return out;
}

Json cmd_chains(const Options& o) {
  const SetSystem f = load_system(o);
  const auto chains = maximal_chains(f);
  Json list = Json::array();
  for (const auto& c : chains) {
    if (raw(o)) {
      list.push_back(sets_json(c.sets));
      continue;
    }
    Json entry{{"sets", sets_json(c.sets)}};
    if (c.has_unit_steps()) {
      Json order = Json::array();
      for (int p : c.induced_order()) order.push_back(p + 1);
      entry["order"] = std::move(order);
    } else {
      entry["order"] = nullptr;
    }
    list.push_back(std::move(entry));
  }
  if (raw(o)) return list;
  return Json{{"command", "chains"}, {"count", chains.size()}, {"chains", std::move(list)}};
}

Json cmd_rays(const Options& o) {
  const SetSystem f = load_system(o);
  const int n = f.players();
  std::string method = o.method.empty() ? "auto" : o.method;
  const StructureReport structure = classify(f);
  if (method == "auto") {
    if (structure.is_union_intersection_closed && structure.height == n) {
      method = "distributive";
    } else if (structure.is_regular) {
      method = "regular";
    } else {
      method = "dd";
    }
  }
  const RayReport report = rays_general(f);
  std::optional<std::vector<OrderedPairRay>> pairs;
  if (method == "distributive") {
    const PlayerPoset p = o.poset.empty() ? extract_poset(f) : io::load_poset(io::read_file(o.poset));
    pairs = rays_distributive(p);
  } else if (method == "regular") {
    pairs = rays_regular(f);
  } else if (method != "dd") {
    throw Error(ErrorCode::MalformedDocument, "unknown ray method '" + method + "'");
  }
  std::vector<RationalVector> rays = report.extremal_rays;
  if (pairs) {
    std::vector<RationalVector> vs;
    for (const auto& r : *pairs) vs.push_back(r.to_vector(n));
    std::sort(vs.begin(), vs.end(), lex_less<Rational>);
    std::vector<RationalVector> expected;
    for (const auto& r : rays) {
      if (method == "distributive" || as_pair_ray(r)) expected.push_back(r);
    }
    const bool agree = report.lineality.empty() && vs.size() == expected.size() &&
                       std::equal(vs.begin(), vs.end(), expected.begin(), same_vector<Rational>);
    if (!agree) throw Error(ErrorCode::InternalInconsistency, method + " rays disagree with double description");
  }
  if (raw(o)) return Json{{"rays", vectors_json(rays)}, {"lineality", vectors_json(report.lineality)}};

  Json pair_list = Json::array();
  for (const auto& r : rays) {
    if (auto pr = as_pair_ray(r)) pair_list.push_back(Json{{"plus", pr->plus + 1}, {"minus", pr->minus + 1}});
  }
  Json out{{"command", "rays"},
           {"method", method},
           {"rays", vectors_json(rays)},
           {"lineality", vectors_json(report.lineality)},
           {"pairs", std::move(pair_list)},
           {"bounded", rays.empty() && report.lineality.empty()},
           {"all_pair_form", report.all_pair_form},
           {"closure_rays", vectors_json(report.closure_rays)},
           {"closure_lineality", vectors_json(report.closure_lineality)},
           {"closure_has_full_height", report.closure_has_full_height},
           {"equals_closure_cone", report.equals_closure_cone}};
  out["wuc_condition"] = structure.is_weakly_union_closed ? Json(wuc_ray_equality_condition(f)) : Json(nullptr);
  return out;
}

Json cmd_normal(const Options& o) {
  const SetSystem f = load_system(o);
  const std::string method = o.method.empty() ? "all" : o.method;
  std::vector<CollectionKind> kinds;
  if (method == "all") {
    kinds = {CollectionKind::irredundant, CollectionKind::weber, CollectionKind::grabisch_xie};
  } else {
    kinds = {parse_collection_kind(method)};
    if (kinds.front() == CollectionKind::custom) {
      throw Error(ErrorCode::MalformedDocument, "method must be irredundant, weber, gx or all");
    }
  }
  const CollectionSetup setup = keyword_collections(f, kinds);
  Json list = Json::array();
  for (const auto& outcome : setup.outcomes) {
    if (raw(o)) {
      list.push_back(io::dump_collection(outcome.final));
      continue;
    }
    Json entry{{"kind", std::string(to_string(outcome.final.kind))},
               {"sets", sets_json(outcome.final.sets)},
               {"nested", outcome.final.is_nested()},
               {"bounds_core", true}};
    if (outcome.lift) {
      entry["candidate"] = sets_json(outcome.candidate.sets);
      entry["candidate_in_system"] = std::all_of(outcome.candidate.sets.begin(), outcome.candidate.sets.end(),
                                                 [&f](Coalition s) { return f.contains(s); });
      Json steps = Json::array();
      for (const auto& step : outcome.lift->replacements) {
        steps.push_back(Json{{"original", io::coalition_to_json(step.original)},
                             {"chosen", step.chosen ? io::coalition_to_json(*step.chosen) : Json(nullptr)},
                             {"alternatives", sets_json(step.alternatives)}});
      }
      entry["replacements"] = std::move(steps);
      entry["appended"] = sets_json(outcome.lift->appended);
      entry["exceeds_candidate_size"] = outcome.lift->exceeds_candidate_size;
    }
    list.push_back(std::move(entry));
  }
  if (raw(o)) return list;
  return Json{{"command", "normal"},
              {"bounded_before", is_bounded(build_recession_cone(f))},
              {"lifted", setup.lifted},
              {"poset", io::dump_poset(setup.poset)},
              {"height", setup.poset.height()},
              {"collections", std::move(list)}};
}

Coalition row_coalition(const RationalVector& row) {
  Coalition s;
  for (Eigen::Index i = 0; i < row.size(); ++i) {
    if (row[i] != 0) s = s | Coalition::singleton(static_cast<int>(i));
  }
  return s;
}

Json rows_json(const RationalMatrix& lhs, const RationalVector& rhs) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < lhs.rows(); ++r) {
    out.push_back(Json{{"coalition", io::coalition_to_json(row_coalition(lhs.row(r).transpose()))},
                       {"rhs", format_rational(rhs[r])}});
  }
  return out;
}

Json cmd_core(const Options& o) {
  const Game v = load_game(o);
  const NormalCollection nc = resolve_collection(v.system(), o.collection);
  const auto h = build_restricted_core(v, nc);
  const auto vrep = dd_generators(h);
  if (raw(o)) return io::vrep_to_json(vrep);
  return Json{{"command", "core"},
              {"collection", io::dump_collection(nc)},
              {"collection_bounds_core", validate_normal(v.system(), nc)},
              {"inequalities", rows_json(h.ineq_lhs, h.ineq_rhs)},
              {"equalities", rows_json(h.eq_lhs, h.eq_rhs)},
              {"bounded", vrep.is_bounded()},
              {"core", io::vrep_to_json(vrep)}};
}

Json cmd_weber(const Options& o) {
  const Game v = load_game(o);
  const NormalCollection nc = resolve_collection(v.system(), o.collection);
  const auto vrep = restricted_weber(v, nc);
  if (raw(o)) return io::vrep_to_json(vrep);
  Json chains = Json::array();
  for (const auto& c : maximal_chains_through(v.system(), nc.sets)) {
    chains.push_back(Json{{"sets", sets_json(c.sets)}, {"payoff", io::vector_to_json(marginal_vector(v, c).payoff)}});
  }
  return Json{{"command", "weber"},
              {"collection", io::dump_collection(nc)},
              {"collection_bounds_core", validate_normal(v.system(), nc)},
              {"chains", std::move(chains)},
              {"weber", io::vrep_to_json(vrep)}};
}

Json cmd_verify(const Options& o) {
  const Game v = load_game(o);
  const NormalCollection nc = resolve_collection(v.system(), o.collection);
  const InclusionVerdict verdict = verify_inclusion(v, nc);
  Json out{{"holds", verdict.holds},
           {"witness_kind", std::string(to_string(verdict.witness_kind))},
           {"witness", verdict.witness ? io::vector_to_json(*verdict.witness) : Json(nullptr)}};
  if (raw(o)) return out;
  Json full{{"command", "verify-inclusion"},
            {"collection", io::dump_collection(nc)},
            {"collection_bounds_core", validate_normal(v.system(), nc)}};
  full.update(out);
  full["core"] = io::vrep_to_json(verdict.core);
  full["weber"] = io::vrep_to_json(verdict.weber);
  return full;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedDocument, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  const std::filesystem::path dir = o.fixtures.empty() ? default_fixture_dir() : std::filesystem::path(o.fixtures);
  const Json manifest = io::read_file(dir / "manifest.json");
  if (!manifest.contains("cases") || !manifest["cases"].is_array()) {
    throw Error(ErrorCode::MalformedDocument, "manifest needs a 'cases' array");
  }
  int failures = 0;
  for (const auto& c : manifest["cases"]) {
    const std::string name = c.at("name").get<std::string>();
    std::vector<std::string> args;
    for (const auto& a : c.at("args")) {
      std::string s = a.get<std::string>();
      if (s.rfind("@/", 0) == 0) s = (dir / s.substr(2)).string();
      args.push_back(s);
    }
    const int expected_exit = c.value("exit", 0);
    std::ostringstream got;
    std::ostringstream diag;
    const int code = run(args, got, diag);
    std::string problem;
    if (code != expected_exit) {
      problem = "exit " + std::to_string(code) + ", expected " + std::to_string(expected_exit);
    } else if (c.contains("golden")) {
      const std::filesystem::path golden = dir / c["golden"].get<std::string>();
      if (o.update) {
        std::filesystem::create_directories(golden.parent_path());
        std::ofstream(golden, std::ios::binary) << got.str();
      } else if (!std::filesystem::exists(golden) || got.str() != read_text(golden)) {
        problem = "output differs from golden";
      }
    }
    if (problem.empty()) {
      out << "PASS " << name << "\n";
    } else {
      ++failures;
      out << "FAIL " << name << ": " << problem << "\n";
    }
  }
  out << (failures == 0 ? "all cases reproduced" : std::to_string(failures) + " case(s) failed") << "\n";
  return failures == 0 ? 0 : 2;
}

void emit(const Json& doc, const Options& o, std::ostream& out) {
  const std::string text = io::to_text(doc);
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::MalformedDocument, "cannot write " + o.out);
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Core, recession cone and normal collections for games on set systems", "corebound"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "report or raw")->check(CLI::IsMember({"report", "raw"}));
    sub->add_option("--out", o.out, "write the report to this file");
  };
  auto add_system = [&o](CLI::App* sub) {
    sub->add_option("--system", o.system, "set-system document");
    sub->add_option("--poset", o.poset, "poset document; its downsets form the system");
  };
  auto add_game = [&o](CLI::App* sub) {
    sub->add_option("--game", o.game, "game document")->required();
    sub->add_option("--collection", o.collection, "irredundant, weber, gx, none or a collection document");
  };

  std::map<CLI::App*, std::function<Json(const Options&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, std::function<Json(const Options&)> fn) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s);
    handlers[s] = std::move(fn);
    return s;
  };
  add_system(sub("classify", "structural properties of a set system", cmd_classify));
  add_system(sub("closure", "closure under union and intersection", cmd_closure));
  add_system(sub("chains", "maximal chains", cmd_chains));
  CLI::App* rays = sub("rays", "extremal rays of the recession cone", cmd_rays);
  add_system(rays);
  rays->add_option("--method", o.method, "auto, distributive, regular or dd");
  CLI::App* normal = sub("normal", "normal collections", cmd_normal);
  add_system(normal);
  normal->add_option("--method", o.method, "irredundant, weber, gx or all");
  add_game(sub("core", "restricted core", cmd_core));
  add_game(sub("weber", "restricted Weber set", cmd_weber));
  add_game(sub("verify-inclusion", "check that the restricted core lies in the restricted Weber set", cmd_verify));
  CLI::App* reproduce = app.add_subcommand("reproduce", "run every fixture and compare with golden reports");
  reproduce->add_option("--fixtures", o.fixtures, "fixture directory containing manifest.json");
  reproduce->add_flag("--update", o.update, "rewrite the golden reports instead of comparing");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (reproduce->parsed()) return cmd_reproduce(o, out);
    for (const auto& [s, fn] : handlers) {
      if (s->parsed()) emit(fn(o), o, out);
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::InternalInconsistency ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: MalformedDocument: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace corebound::cli
