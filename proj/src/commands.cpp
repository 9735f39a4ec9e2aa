#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "regcat/braiding.hpp"
#include "regcat/cli.hpp"
#include "regcat/diagrams.hpp"
#include "regcat/higher_regularity.hpp"
#include "regcat/inverses.hpp"
#include "regcat/workspace.hpp"
#include "regcat/ybe_solver.hpp"

namespace regcat {

namespace {

Json map_json(const FinMap& f) {
  Json table = Json::array();
  for (Index x = 0; x < f.size(); ++x) table.push_back(f.cod()->label(f(x)));
  return Json{{"name", f.name()}, {"dom", f.dom()->id()}, {"cod", f.cod()->id()}, {"table", table}};
}

Json path_json(const Diagram& d, const std::vector<std::size_t>& path) {
  Json out = Json::array();
  for (auto i : path) out.push_back(d.edges()[i].name());
  return out;
}

std::optional<Index> first_difference(const FinMap& a, const FinMap& b) {
  for (Index x = 0; x < a.size(); ++x) {
    if (a(x) != b(x)) return x;
  }
  return std::nullopt;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::map<std::string, std::string> parse_pairs(const std::string& s) {
  std::map<std::string, std::string> out;
  for (const auto& item : split(s, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw Error(Errc::InvalidArgument, "expected NAME=NAME, got '" + item + "'");
    }
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

Workspace load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

InverseKind parse_kind(const std::string& s) {
  if (s == "inner") return InverseKind::inner;
  if (s == "outer") return InverseKind::outer;
  return InverseKind::generalized;
}

std::vector<FinMap> lookup_maps(const Workspace& w, const std::string& names) {
  std::vector<FinMap> out;
  for (const auto& n : split(names, ',')) out.push_back(w.map(n));
  return out;
}

Json verdict_json(const ChainVerdict& v) {
  Json out;
  out["odd_closure"] = v.odd_closure ? Json(*v.odd_closure) : Json(nullptr);
  out["even_closure"] = v.even_closure ? Json(*v.even_closure) : Json(nullptr);
  out["ef_form"] = v.ef_form;
  out["obstructor"] = map_json(v.obstructor);
  out["obstructor_idempotent"] = v.obstructor_idempotent;
  return out;
}

void add_chain_failures(Report& r, const ChainVerdict& v) {
  for (const auto& f : v.failures) {
    r.witnesses.push_back(Json{{"equation", f.equation}, {"element", f.over->label(f.element)}});
  }
}

Json chain_json(const StarChain& c) {
  Json stars = Json::array();
  for (const auto& s : c.stars()) stars.push_back(map_json(s));
  return Json{{"base", map_json(c.base())}, {"stars", stars}};
}

Json cycle3_json(const RegularThreeCycle& c) {
  return Json{{"objects", {c.x->id(), c.y->id(), c.z->id()}},
              {"maps", {c.f.name(), c.g.name(), c.h.name()}},
              {"obstructor", map_json(c.e)},
              {"obstructor_idempotent", is_idempotent(c.e)}};
}

struct Options {
  bool json = false;
  std::uint64_t max_space = default_search_bound;
  std::string file;
  std::string map;
  std::string kind = "inner";
  bool count_only = false;
  std::optional<std::size_t> limit;
  std::size_t n = 1;
  bool search = false;
  std::string stars;
  std::string name;
  std::string mode;
  std::size_t max_len = 3;
  std::string object;
  std::size_t max_n = 3;
  std::string from, to, objects, maps;
  std::string braiding, star, e;
  std::size_t size = 2;
  std::string e_choice = "identity";
  bool bijective = false;
  bool symmetric = false;
  unsigned jobs = 1;
};

void cmd_check_map(const Workspace& w, const Options& o, Report& r) {
  const FinMap& f = w.map(o.map);
  MapClass c = classify_map(f);
  r.result["map"] = map_json(f);
  r.result["injective"] = c.injective;
  r.result["surjective"] = c.surjective;
  r.result["bijective"] = c.bijective;
  r.result["idempotent"] = c.idempotent ? Json(*c.idempotent) : Json(nullptr);
  if (f.dom()->empty() && !f.cod()->empty()) {
    r.ok = false;
    r.result["regular"] = false;
    r.witnesses.push_back(Json{{"reason", "no map from the empty domain"},
                               {"element", f.cod()->label(0)}});
    r.counts["inner_inverses"] = 0;
    return;
  }
  FinMap g = section_inner_inverse(f);
  FinMap star = generalized_from_inner(f, g);
  InvertibilityClass inv = invertibility_class(f);
  ProjectorPair p = projectors(f, star);
  r.result["regular"] = true;
  r.result["inner_inverse"] = map_json(g);
  r.result["generalized_inverse"] = map_json(star);
  r.result["retraction"] = inv.retraction;
  r.result["coretraction"] = inv.coretraction;
  r.result["projector_codomain"] = map_json(p.p_f);
  r.result["projector_domain"] = map_json(p.p_fstar);
  if (f.dom()->size() <= 16 && f.cod()->size() <= 16) {
    r.result["subset_image_regularity"] = check_subset_regularity(f, g, RegularityMode::image).holds;
    r.result["subset_reflexive_regularity"] =
        check_subset_regularity(f, star, RegularityMode::reflexive).holds;
  }
  r.counts["inner_inverses"] = static_cast<std::int64_t>(inner_inverse_count(f));
}

void cmd_inverses(const Workspace& w, const Options& o, Report& r) {
  const FinMap& f = w.map(o.map);
  const InverseKind kind = parse_kind(o.kind);
  std::optional<std::size_t> limit = o.limit;
  if (o.count_only) {
    if (!limit && map_space_size(f.cod()->size(), f.dom()->size()) > o.max_space) {
      throw Error(Errc::SearchSpaceTooLarge, "inverse candidates exceed --max-space");
    }
    limit = 0;
  }
  InverseList list = enumerate_inverses(f, kind, limit, o.max_space);
  r.result["map"] = f.name();
  r.result["kind"] = o.kind;
  if (!o.count_only) {
    Json all = Json::array();
    for (const auto& g : list.maps) all.push_back(map_json(g));
    r.result["inverses"] = all;
    r.result["truncated"] = list.truncated;
  }
  r.counts["inverses"] = static_cast<std::int64_t>(list.count);
}

void cmd_chain(const Workspace& w, const Options& o, Report& r) {
  const FinMap& f = w.map(o.map);
  r.result["map"] = f.name();
  r.result["order"] = o.n;
  if (o.search) {
    ChainSearch s = find_chains(f, o.n, o.limit, o.max_space);
    Json chains = Json::array();
    for (const auto& c : s.chains) chains.push_back(chain_json(c)["stars"]);
    r.result["chains"] = chains;
    r.result["truncated"] = s.truncated;
    r.counts["chains"] = static_cast<std::int64_t>(s.chains.size());
    return;
  }
  StarChain chain = [&] {
    if (!o.stars.empty()) {
      auto stars = lookup_maps(w, o.stars);
      if (stars.size() != o.n) {
        throw Error(Errc::InvalidArgument, "--n " + std::to_string(o.n) + " but " +
                                               std::to_string(stars.size()) + " stars given");
      }
      return make_chain(f, std::move(stars));
    }
    FinMap star = generalized_from_inner(f, section_inner_inverse(f));
    return extend_periodic(f, star, o.n);
  }();
  ChainVerdict v = check_chain(chain);
  r.result["chain"] = chain_json(chain);
  r.result["verdict"] = verdict_json(v);
  r.ok = v.holds();
  add_chain_failures(r, v);
}

void cmd_projector(const Workspace& w, const Options& o, Report& r) {
  StarChain chain = make_chain(w.map(o.map), lookup_maps(w, o.stars));
  HigherProjector p = higher_projector(chain);
  r.result["order"] = chain.order();
  r.result["side"] = p.side == ProjectorSide::domain ? "domain" : "codomain";
  r.result["projector"] = map_json(p.projector);
  r.result["idempotent"] = p.idempotent;
  r.result["absorption"] = p.absorption;
  r.ok = p.idempotent && p.absorption;
  if (!p.idempotent) {
    FinMap pp = compose(p.projector, p.projector);
    Index x = *first_difference(pp, p.projector);
    r.witnesses.push_back(Json{{"property", "idempotent"}, {"element", p.projector.dom()->label(x)}});
  }
  if (!p.absorption) {
    const FinMap& absorbed = p.side == ProjectorSide::codomain ? chain.base() : chain.stars().front();
    FinMap lhs = compose(p.projector, absorbed);
    Index x = *first_difference(lhs, absorbed);
    r.witnesses.push_back(Json{{"property", "absorption"}, {"element", absorbed.dom()->label(x)}});
  }
}

void violations_json(const Diagram& d, const DiagramVerdict& v, Report& r) {
  for (const auto& viol : v.violations) {
    Json j{{"kind", viol.kind}, {"path", path_json(d, viol.path)}};
    if (viol.kind == "parallel") j["other"] = path_json(d, viol.other);
    if (viol.kind == "absorption") j["edge"] = d.edges()[viol.other.front()].name();
    j["object"] = viol.over;
    if (viol.element) j["element"] = (*d.object(viol.over))->label(*viol.element);
    r.witnesses.push_back(std::move(j));
  }
}

void cmd_diagram(const Workspace& w, const Options& o, Report& r) {
  const Diagram& d = w.diagram(o.name);
  if (o.max_len == 0) throw Error(Errc::InvalidArgument, "--max-len must be at least 1");
  DiagramVerdict v = o.mode == "commutative" ? is_commutative(d, o.max_len)
                                             : is_semicommutative(d, o.max_len);
  auto cycles = enumerate_cycles(d, o.max_len);
  Json obstructors = Json::array();
  for (const auto& c : cycles) {
    Obstructor e = obstructor(d, c);
    obstructors.push_back(Json{{"base", c.base},
                               {"cycle", path_json(d, c.edges)},
                               {"obstructor", map_json(e.e)},
                               {"identity", e.is_identity},
                               {"idempotent", e.is_idempotent}});
  }
  r.result["diagram"] = d.name();
  r.result["mode"] = o.mode;
  r.result["holds"] = v.holds;
  r.result["obstructors"] = obstructors;
  r.counts["cycles"] = static_cast<std::int64_t>(cycles.size());
  r.ok = v.holds;
  violations_json(d, v, r);
}

void cmd_obstruction(const Workspace& w, const Options& o, Report& r) {
  const Diagram& d = w.diagram(o.name);
  ObstructionNumber n = obstruction_number(d, o.object, o.max_n);
  r.result["diagram"] = d.name();
  r.result["object"] = o.object;
  r.result["max_n"] = o.max_n;
  r.result["n_obstr"] = n.n_obstr ? Json(*n.n_obstr) : Json(nullptr);
  if (n.witness) {
    r.result["cycle"] = path_json(d, n.witness->edges);
    r.result["obstructor"] = map_json(obstructor(d, *n.witness).e);
  } else {
    r.result["cycle"] = nullptr;
  }
}

void cmd_cycles3(const Workspace& w, const Options& o, Report& r) {
  const Diagram& d = w.diagram(o.name);
  auto cycles = find_regular_3cycles(d);
  Json all = Json::array();
  for (const auto& c : cycles) all.push_back(cycle3_json(c));
  r.result["diagram"] = d.name();
  r.result["cycles"] = all;
  r.counts["cycles3"] = static_cast<std::int64_t>(cycles.size());
}

void cmd_functor(const Workspace& w, const Options& o, Report& r) {
  FunctorData fd{w.diagram(o.from), w.diagram(o.to), parse_pairs(o.objects), parse_pairs(o.maps)};
  FunctorVerdict v = check_regular_functor(fd, o.n);
  r.result["from"] = o.from;
  r.result["to"] = o.to;
  r.result["n"] = o.n;
  r.result["composition_preserved"] = v.composition_preserved;
  r.result["e_preserved"] = v.e_preserved;
  r.counts["cycles"] = static_cast<std::int64_t>(v.cycles_checked);
  r.ok = v.composition_preserved && v.e_preserved;
  for (const auto& viol : v.violations) {
    Json j{{"kind", viol.kind}, {"path", path_json(fd.source, viol.source_path)}};
    if (viol.source_edge) {
      j[viol.kind == "composition" ? "composite" : "absorbed"] = fd.source.edges()[*viol.source_edge].name();
    }
    r.witnesses.push_back(std::move(j));
  }
}

void cmd_braid_check(const Workspace& w, const Options& o, Report& r) {
  const Braiding& b = w.braiding(o.braiding);
  r.result["braiding"] = map_json(b.map());
  bool regular = true;
  FinMap star = o.star.empty() ? section_inner_inverse(b.map()) : w.braiding(o.star).map();
  if (!o.star.empty()) {
    const Braiding& s = w.braiding(o.star);
    r.result["symmetric"] = check_symmetry(b, s);
    regular = check_regular_braiding(b, s);
  } else {
    regular = check_prebraid_regularity(b.map(), star);
  }
  r.result["star"] = map_json(star);
  r.result["regular"] = regular;
  if (!regular) {
    FinMap bsb = compose(b.map(), compose(star, b.map()));
    Index x = *first_difference(bsb, b.map());
    r.witnesses.push_back(Json{{"property", "regular"}, {"element", b.map().dom()->label(x)}});
  }
  bool ybe = true;
  if (b.left()->id() == b.right()->id()) {
    const SetRef& x = b.left();
    FinMap e = o.e.empty() ? identity(x) : w.map(o.e);
    YbeMode mode = o.e.empty() ? YbeMode::classical : YbeMode::regular;
    YbeCheck c = check_ybe(b, e, mode);
    ybe = c.holds;
    r.result["ybe"] = Json{{"mode", mode == YbeMode::classical ? "classical" : "regular"},
                           {"obstructor", map_json(e)},
                           {"holds", c.holds}};
    if (c.witness) {
      const auto& t = *c.witness;
      r.witnesses.push_back(Json{{"property", "ybe"},
                                 {"triple", {x->label(t[0]), x->label(t[1]), x->label(t[2])}}});
    }
  } else if (!o.e.empty()) {
    throw Error(Errc::TypeMismatch, "--e needs a braiding on a single carrier");
  }
  r.ok = regular && ybe;
}

void cmd_ybe(const Options& o, Report& r) {
  YbeProblem p;
  p.size = o.size;
  p.mode = o.mode == "classical" ? YbeMode::classical : YbeMode::regular;
  p.require_bijective = o.bijective;
  p.require_symmetric = o.symmetric;
  if (o.e_choice == "identity") {
    p.obstructors = ObstructorChoice::identity;
  } else if (o.e_choice == "all") {
    p.obstructors = ObstructorChoice::all;
  } else if (o.e_choice.rfind("table:", 0) == 0) {
    p.obstructors = ObstructorChoice::given;
    for (const auto& v : split(o.e_choice.substr(6), ',')) {
      try {
        p.given_e.push_back(static_cast<Index>(std::stoul(v)));
      } catch (const std::exception&) {
        throw Error(Errc::InvalidArgument, "bad --e table entry '" + v + "'");
      }
    }
  } else {
    throw Error(Errc::InvalidArgument, "--e must be identity, all or table:...");
  }
  YbeSolverOptions opts;
  opts.jobs = std::max(1U, o.jobs);
  opts.count_only = o.count_only;
  if (o.limit) opts.limit = *o.limit;
  YbeSolveResult s = solve_ybe(p, opts);

  r.result["size"] = o.size;
  r.result["mode"] = o.mode;
  r.result["obstructors"] = o.e_choice;
  r.result["bijective"] = o.bijective;
  r.result["symmetric"] = o.symmetric;
  r.result["truncated"] = s.truncated;
  if (!o.count_only) {
    Json all = Json::array();
    for (const auto& sol : s.solutions) {
      all.push_back(Json{{"e", map_json(solution_obstructor(s.carrier, sol))["table"]},
                         {"B", map_json(solution_braiding(s.carrier, sol).map())["table"]}});
    }
    r.result["solutions"] = all;
  }
  r.counts["solutions"] = static_cast<std::int64_t>(s.count);
  r.counts["nodes"] = static_cast<std::int64_t>(s.nodes);
}

int exit_for(Errc code) {
  return code == Errc::SearchSpaceTooLarge || code == Errc::CarrierTooLarge ? exit_resource
                                                                            : exit_usage;
}

void render_value(std::ostream& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, item] : v.items()) {
      if (item.is_structured() && !item.empty() && !(item.is_array() && !item.front().is_structured())) {
        out << pad << k << ":\n";
        render_value(out, item, indent + 2);
      } else {
        out << pad << k << ": " << item.dump() << '\n';
      }
    }
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (item.is_structured()) {
        out << pad << "-\n";
        render_value(out, item, indent + 2);
      } else {
        out << pad << "- " << item.dump() << '\n';
      }
    }
  } else {
    out << pad << v.dump() << '\n';
  }
}

}  // namespace

Json to_json(const Report& report) {
  Json counts = Json::object();
  for (const auto& [k, v] : report.counts) counts[k] = v;
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(w);
  return Json{{"command", report.command},     {"ok", report.ok},
              {"result", report.result},       {"witnesses", witnesses},
              {"counts", counts},              {"elapsed_ms", report.elapsed_ms}};
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << report.command << ": " << (report.ok ? "ok" : "FAILED") << '\n';
  render_value(out, report.result, 2);
  if (!report.witnesses.empty()) {
    out << "witnesses:\n";
    for (const auto& w : report.witnesses) out << "  " << w.dump() << '\n';
  }
  if (!report.counts.empty()) {
    out << "counts:\n";
    for (const auto& [k, v] : report.counts) out << "  " << k << ": " << v << '\n';
  }
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regularity calculus on finite sets", "regcat"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print the report as JSON");
  app.add_option("--max-space", o.max_space, "Largest candidate space searched without --limit");

  auto file_arg = [&](CLI::App* cmd) { cmd->add_option("file", o.file, "Workspace file")->required(); };
  auto limit_opt = [&](CLI::App* cmd) {
    cmd->add_option_function<std::size_t>("--limit", [&](const std::size_t& k) { o.limit = k; },
                                          "Stop after K results");
  };

  auto* check_map = app.add_subcommand("check-map", "Classify a map and exhibit its inverses");
  file_arg(check_map);
  check_map->add_option("--map", o.map)->required();

  auto* inverses = app.add_subcommand("inverses", "Enumerate inner, outer or generalized inverses");
  file_arg(inverses);
  inverses->add_option("--map", o.map)->required();
  inverses->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"inner", "outer", "generalized"}));
  inverses->add_flag("--count-only", o.count_only);
  limit_opt(inverses);

  auto* chain = app.add_subcommand("chain", "Check or search n-regularity star chains");
  file_arg(chain);
  chain->add_option("--map", o.map)->required();
  chain->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  auto* search_flag = chain->add_flag("--search", o.search);
  auto* stars_opt = chain->add_option("--stars", o.stars);
  search_flag->excludes(stars_opt);
  limit_opt(chain);

  auto* projector = app.add_subcommand("projector", "Higher projector of a star chain");
  file_arg(projector);
  projector->add_option("--map", o.map)->required();
  projector->add_option("--stars", o.stars)->required();

  auto* diagram = app.add_subcommand("diagram", "Commutativity or semicommutativity of a diagram");
  file_arg(diagram);
  diagram->add_option("--name", o.name)->required();
  diagram->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"commutative", "semicommutative"}));
  diagram->add_option("--max-len", o.max_len)->required();

  auto* obstruction = app.add_subcommand("obstruction", "Obstruction number at an object");
  file_arg(obstruction);
  obstruction->add_option("--name", o.name)->required();
  obstruction->add_option("--object", o.object)->required();
  obstruction->add_option("--max-n", o.max_n)->required();

  auto* cycles3 = app.add_subcommand("cycles3", "Regular 3-cycles of a diagram");
  file_arg(cycles3);
  cycles3->add_option("--name", o.name)->required();

  auto* functor = app.add_subcommand("functor", "Check a generalized functor between diagrams");
  file_arg(functor);
  functor->add_option("--from", o.from)->required();
  functor->add_option("--to", o.to)->required();
  functor->add_option("--objects", o.objects)->required();
  functor->add_option("--maps", o.maps)->required();
  functor->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);

  auto* braid = app.add_subcommand("braid-check", "Regularity and Yang-Baxter checks for a braiding");
  file_arg(braid);
  braid->add_option("--braiding", o.braiding)->required();
  braid->add_option("--star", o.star);
  braid->add_option("--e", o.e);

  auto* format = app.add_subcommand("format", "Print the workspace in canonical form");
  file_arg(format);

  auto* ybe = app.add_subcommand("ybe", "Search Yang-Baxter solutions on {0..M-1}");
  ybe->add_option("--size", o.size)->required();
  ybe->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"classical", "regular"}));
  ybe->add_option("--e", o.e_choice);
  ybe->add_flag("--bijective", o.bijective);
  ybe->add_flag("--symmetric", o.symmetric, "Require B∘B = Id");
  ybe->add_flag("--count-only", o.count_only);
  ybe->add_option("--jobs", o.jobs);
  limit_opt(ybe);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_holds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return exit_usage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  Report report;
  report.command = cmd->get_name();
  const auto start = std::chrono::steady_clock::now();
  int code = exit_holds;
  try {
    if (cmd == ybe) {
      cmd_ybe(o, report);
    } else {
      Workspace w = load(o.file);
      if (cmd == check_map) cmd_check_map(w, o, report);
      else if (cmd == inverses) cmd_inverses(w, o, report);
      else if (cmd == chain) cmd_chain(w, o, report);
      else if (cmd == projector) cmd_projector(w, o, report);
      else if (cmd == diagram) cmd_diagram(w, o, report);
      else if (cmd == obstruction) cmd_obstruction(w, o, report);
      else if (cmd == cycles3) cmd_cycles3(w, o, report);
      else if (cmd == functor) cmd_functor(w, o, report);
      else if (cmd == braid) cmd_braid_check(w, o, report);
      else if (cmd == format) report.result["text"] = render_workspace(w);
    }
    code = report.witnesses.empty() ? exit_holds : exit_fails;
    report.ok = report.ok && report.witnesses.empty();
  } catch (const Error& e) {
    code = exit_for(e.code());
    report.ok = false;
    report.result = Json{{"error", Json{{"code", std::string(to_string(e.code()))}, {"detail", e.detail()}}}};
    report.witnesses.clear();
    report.counts.clear();
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    code = exit_resource;
    report.ok = false;
    report.result = Json{{"error", Json{{"code", "Internal"}, {"detail", e.what()}}}};
    report.witnesses.clear();
    report.counts.clear();
    err << "internal error: " << e.what() << '\n';
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  if (o.json) {
    out << to_json(report).dump(2) << '\n';
  } else if (cmd == format && code == exit_holds) {
    out << report.result["text"].get<std::string>();
  } else if (!report.result.contains("error")) {
    out << render_text(report);
  }
  return code;
}

}  // namespace regcat
