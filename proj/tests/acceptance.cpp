// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status
// nonzero if any fails. Every check compares against the brute-force
// oracles in oracles.hpp rather than against stored numbers.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "regcat/braiding.hpp"
#include "regcat/cli.hpp"
#include "regcat/diagrams.hpp"
#include "regcat/higher_regularity.hpp"
#include "regcat/inverses.hpp"
#include "regcat/workspace.hpp"
#include "regcat/ybe_solver.hpp"

using namespace regcat;
using oracle::after;
using oracle::Table;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

template <class Fn>
void criterion(int id, const char* title, double limit_s, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = o.ok && s < limit_s;
  if (!pass) ++failures;
  std::printf("%s %2d %-34s %8.2fs (limit %.0fs)  %s\n", pass ? "PASS" : "FAIL", id, title, s, limit_s,
              o.detail.c_str());
  std::fflush(stdout);
}

constexpr std::size_t max_size = 3;

SetRef carrier(const char* prefix, std::size_t n) {
  return FiniteSet::range(prefix + std::to_string(n), n);
}

FinMap as_map(const char* name, std::size_t nx, std::size_t ny, const Table& t) {
  return FinMap(name, carrier("X", nx), carrier("X", ny), t);
}

// All generalized pairs (f, f*) with f: n -> m, by brute force.
using Pair = std::pair<Table, Table>;
std::map<std::pair<std::size_t, std::size_t>, std::vector<Pair>> generalized_pairs() {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Pair>> out;
  for (std::size_t n = 0; n <= max_size; ++n)
    for (std::size_t m = 0; m <= max_size; ++m) {
      auto& v = out[{n, m}];
      for (const auto& f : oracle::all_tables(n, m))
        for (const auto& g : oracle::all_tables(m, n))
          if (oracle::inner(f, g) && oracle::outer(f, g)) v.emplace_back(f, g);
    }
  return out;
}

std::uint64_t formula_count(const Table& f, std::size_t nx, std::size_t ny) {
  std::vector<std::uint64_t> fibre(ny, 0);
  for (auto y : f) ++fibre[y];
  std::uint64_t c = 1;
  for (auto k : fibre) {
    c *= k == 0 ? nx : k;
  }
  return c;
}

std::vector<Table> tables(const std::vector<FinMap>& maps) {
  std::vector<Table> out;
  for (const auto& m : maps) out.push_back(m.table());
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) { return std::string(REGCAT_FIXTURES) + "/" + name; }

std::string json_without_timing(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  run_cli(args, out, err);
  Json j = Json::parse(out.str());
  j.erase("elapsed_ms");
  return j.dump();
}

Outcome inner_completeness() {
  std::size_t maps = 0, inverses = 0;
  for (std::size_t nx = 0; nx <= max_size; ++nx)
    for (std::size_t ny = 0; ny <= max_size; ++ny)
      for (const auto& t : oracle::all_tables(nx, ny)) {
        ++maps;
        FinMap f = as_map("f", nx, ny, t);
        std::vector<Table> naive;
        for (const auto& g : oracle::all_tables(ny, nx))
          if (oracle::inner(t, g)) naive.push_back(g);
        auto got = tables(enumerate_inverses(f, InverseKind::inner, std::nullopt).maps);
        std::sort(got.begin(), got.end());
        const auto expected = formula_count(t, nx, ny);
        if (got != naive || naive.size() != expected || inner_inverse_count(f) != expected) {
          return {false, "mismatch at |X|=" + std::to_string(nx) + " |Y|=" + std::to_string(ny)};
        }
        inverses += naive.size();
      }
  return {true, std::to_string(maps) + " maps, " + std::to_string(inverses) + " inner inverses"};
}

Outcome fin_soundness() {
  std::size_t checked = 0;
  for (std::size_t nx = 0; nx <= max_size; ++nx)
    for (std::size_t ny = 0; ny <= max_size; ++ny)
      for (const auto& t : oracle::all_tables(nx, ny)) {
        FinMap f = as_map("f", nx, ny, t);
        for (const auto& g : enumerate_inverses(f, InverseKind::inner, std::nullopt).maps) {
          Table s = generalized_from_inner(f, g).table();
          if (s != after(g.table(), after(t, g.table())) || !oracle::inner(t, s) || !oracle::outer(t, s)) {
            return {false, "failed for a map " + std::to_string(nx) + " -> " + std::to_string(ny)};
          }
          ++checked;
        }
      }
  return {true, std::to_string(checked) + " inner inverses, 0 failures"};
}

Outcome projector_laws(const std::map<std::pair<std::size_t, std::size_t>, std::vector<Pair>>& pairs) {
  std::size_t checked = 0;
  for (const auto& [sizes, list] : pairs)
    for (const auto& [f, s] : list) {
      auto p = projectors(as_map("f", sizes.first, sizes.second, f), as_map("s", sizes.second, sizes.first, s));
      const Table pf = after(f, s), pfs = after(s, f);
      bool ok = p.p_f.table() == pf && p.p_fstar.table() == pfs && oracle::idempotent(pf) &&
                oracle::idempotent(pfs) && after(pf, f) == f && after(f, pfs) == f && p.p_f_idempotent &&
                p.p_fstar_idempotent && p.p_f_absorbs && p.p_fstar_absorbs;
      if (!ok) return {false, "projector law broken"};
      ++checked;
    }
  return {true, std::to_string(checked) + " generalized pairs"};
}

Outcome closure(const std::map<std::pair<std::size_t, std::size_t>, std::vector<Pair>>& pairs) {
  std::size_t total = 0, commuting = 0, regular_anyway = 0;
  for (std::size_t nx = 0; nx <= max_size; ++nx)
    for (std::size_t ny = 0; ny <= max_size; ++ny)
      for (std::size_t nz = 0; nz <= max_size; ++nz)
        for (const auto& [f, fs] : pairs.at({nx, ny})) {
          FinMap F = as_map("f", nx, ny, f), Fs = as_map("fs", ny, nx, fs);
          for (const auto& [g, gs] : pairs.at({ny, nz})) {
            auto r = closure_composite(F, Fs, as_map("g", ny, nz, g), as_map("gs", nz, ny, gs));
            const Table pf = after(f, fs), pgs = after(gs, g);
            const bool commute = after(pf, pgs) == after(pgs, pf);
            const Table gf = after(g, f), star = after(fs, gs);
            const bool regular = oracle::inner(gf, star) && oracle::outer(gf, star);
            if (r.projectors_commute != commute || r.composite_regular != regular ||
                r.composite_star.table() != star || (commute && !regular)) {
              return {false, "closure fails at sizes " + std::to_string(nx) + "," + std::to_string(ny) + "," +
                                 std::to_string(nz)};
            }
            ++total;
            commuting += commute;
            regular_anyway += !commute && regular;
          }
        }
  return {true, std::to_string(total) + " composable pairs, " + std::to_string(commuting) + " commuting, " +
                    std::to_string(regular_anyway) + " regular without commuting"};
}

Outcome towers(const std::map<std::pair<std::size_t, std::size_t>, std::vector<Pair>>& pairs) {
  std::size_t chains = 0;
  for (const auto& [sizes, list] : pairs)
    for (const auto& [f, s] : list) {
      FinMap F = as_map("f", sizes.first, sizes.second, f), S = as_map("s", sizes.second, sizes.first, s);
      for (std::size_t n = 1; n <= 7; ++n) {
        if (!check_chain(extend_periodic(F, S, n)).holds()) {
          return {false, "periodic tower of order " + std::to_string(n) + " fails"};
        }
        ++chains;
      }
    }
  std::size_t maps = 0;
  for (std::size_t nx = 0; nx <= max_size; ++nx)
    for (std::size_t ny = 0; ny <= max_size; ++ny)
      for (const auto& t : oracle::all_tables(nx, ny)) {
        FinMap f = as_map("f", nx, ny, t);
        std::vector<Table> order1;
        for (const auto& c : find_chains(f, 1, std::nullopt).chains) order1.push_back(c.stars()[0].table());
        if (order1 != tables(enumerate_inverses(f, InverseKind::inner, std::nullopt).maps)) {
          return {false, "order-1 search differs from inner inverses"};
        }
        ++maps;
      }
  return {true, std::to_string(chains) + " periodic towers, " + std::to_string(maps) + " order-1 searches"};
}

Outcome obstructor_idempotence() {
  std::mt19937 rng(20240611);
  constexpr std::size_t samples = 10000;
  std::size_t semi = 0, nontrivial = 0, obstructors = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    Diagram d = oracle::random_diagram(rng, 5);
    const bool lib = is_semicommutative(d, 4).holds;
    if (lib != oracle::semicommutative(d, 4)) return {false, "semicommutativity verdict disagrees"};
    if (!lib) continue;
    ++semi;
    bool any = false;
    for (const auto& c : oracle::cycles(d, 4)) {
      const Table e = oracle::walk_table(d, c);
      if (!oracle::idempotent(e)) return {false, "non-idempotent obstructor in sample " + std::to_string(i)};
      any |= e != oracle::ident(e.size());
      ++obstructors;
    }
    nontrivial += any;
  }
  return {true, std::to_string(samples) + " diagrams, " + std::to_string(semi) + " semicommutative (" +
                    std::to_string(nontrivial) + " with e != Id), " + std::to_string(obstructors) + " obstructors"};
}

Outcome triangle_fixture() {
  Workspace w = parse_workspace(slurp(fixture("triangle.rc")));
  const Diagram& d = w.diagram("D");
  Table e;
  for (const auto& c : enumerate_cycles_at(d, "X", 3))
    if (c.length() == 3) e = obstructor(d, c).e.table();
  const bool semi = is_semicommutative(d, 3).holds;
  const bool comm = is_commutative(d, 3).holds;
  const auto n = obstruction_number(d, "X", 3).n_obstr;
  const auto c3 = find_regular_3cycles(d).size();
  const bool ok = e == Table{0, 1, 1} && semi && !comm && n == 3 && c3 == 1;
  return {ok, "e=[" + std::to_string(e.size() == 3 ? e[0] : 9) + "," + std::to_string(e.size() == 3 ? e[1] : 9) +
                  "," + std::to_string(e.size() == 3 ? e[2] : 9) + "] semicommutative=" + (semi ? "1" : "0") +
                  " commutative=" + (comm ? "1" : "0") + " n_obstr=" + (n ? std::to_string(*n) : "none") +
                  " 3-cycles=" + std::to_string(c3)};
}

Outcome ybe_reduction() {
  SetRef x = FiniteSet::range("X", 2);
  const FinMap id = identity(x);
  std::size_t holding = 0;
  for (const auto& t : oracle::all_tables(4, 4)) {
    Braiding b = Braiding::from_table("B", x, x, t);
    const bool reg = check_ybe(b, id, YbeMode::regular).holds;
    if (reg != check_ybe(b, id, YbeMode::classical).holds || reg != oracle::ybe_holds(2, t, {0, 1})) {
      return {false, "modes disagree"};
    }
    holding += reg;
  }
  return {true, "256 maps, " + std::to_string(holding) + " satisfy the equation"};
}

Outcome solver_vs_naive() {
  std::vector<Table> idem;
  for (const auto& t : oracle::all_tables(2, 2))
    if (oracle::idempotent(t)) idem.push_back(t);
  std::string detail;
  bool fixture_found = false;
  for (auto mode : {YbeMode::classical, YbeMode::regular})
    for (bool bij : {false, true}) {
      YbeProblem p;
      p.size = 2;
      p.mode = mode;
      p.obstructors = mode == YbeMode::classical ? ObstructorChoice::identity : ObstructorChoice::all;
      p.require_bijective = bij;
      const auto es = mode == YbeMode::classical ? std::vector<Table>{{0, 1}} : idem;
      std::vector<YbeSolution> naive;
      for (const auto& e : es)
        for (const auto& b : oracle::all_tables(4, 4)) {
          if (bij && !oracle::injective(b, 4)) continue;
          if (oracle::ybe_holds(2, b, e)) naive.push_back({e, b});
        }
      auto r = solve_ybe(p, {.jobs = 2});
      if (r.solutions != naive || r.count != naive.size()) return {false, "solution sets differ"};
      if (mode == YbeMode::regular) {
        fixture_found |= std::find(r.solutions.begin(), r.solutions.end(),
                                   YbeSolution{{0, 0}, {0, 2, 1, 3}}) != r.solutions.end();
      }
      detail += (detail.empty() ? "" : " ") + std::string(mode == YbeMode::classical ? "classical" : "regular") +
                (bij ? "/bij=" : "/any=") + std::to_string(naive.size());
    }
  if (!fixture_found) return {false, "swap with e=const0 missing"};
  return {true, detail + ", swap/const0 present"};
}

Outcome solver_scale() {
  YbeProblem p;
  p.size = 3;
  p.mode = YbeMode::regular;
  p.obstructors = ObstructorChoice::identity;
  double times[2];
  std::uint64_t counts[2];
  unsigned jobs[2] = {1, 8};
  for (int i = 0; i < 2; ++i) {
    const auto start = std::chrono::steady_clock::now();
    auto r = solve_ybe(p, {.jobs = jobs[i], .count_only = true});
    times[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    counts[i] = r.count;
    if (r.truncated) return {false, "truncated"};
  }
  const bool ok = counts[0] == counts[1] && counts[0] > 0 && times[0] < 600 && times[1] < 600;
  char buf[160];
  std::snprintf(buf, sizeof buf, "count %llu (jobs 1: %.1fs, jobs 8: %llu in %.1fs)",
                static_cast<unsigned long long>(counts[0]), times[0], static_cast<unsigned long long>(counts[1]),
                times[1]);
  return {ok, buf};
}

Outcome dsl_determinism() {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(REGCAT_FIXTURES)) {
    if (entry.path().extension() != ".rc") continue;
    Workspace w1 = parse_workspace(slurp(entry.path()));
    const std::string r1 = render_workspace(w1);
    Workspace w2 = parse_workspace(r1);
    if (!(w1 == w2) || render_workspace(w2) != r1) return {false, entry.path().filename().string() + " not a fixpoint"};
    const std::vector<std::string> fmt{"--json", "format", entry.path().string()};
    if (json_without_timing(fmt) != json_without_timing(fmt)) return {false, "format output differs"};
    ++files;
  }
  const std::vector<std::vector<std::string>> runs = {
      {"--json", "check-map", fixture("maps.rc"), "--map", "f"},
      {"--json", "inverses", fixture("maps.rc"), "--map", "f", "--kind", "generalized"},
      {"--json", "chain", fixture("maps.rc"), "--map", "f", "--n", "2", "--search"},
      {"--json", "diagram", fixture("triangle.rc"), "--name", "D", "--mode", "commutative", "--max-len", "4"},
      {"--json", "obstruction", fixture("triangle.rc"), "--name", "D", "--object", "X", "--max-n", "4"},
      {"--json", "cycles3", fixture("functor.rc"), "--name", "E"},
      {"--json", "functor", fixture("functor.rc"), "--from", "D", "--to", "E", "--objects", "X=X,Y=Y,Z=Z", "--maps",
       "f=f,g=g,h=h2", "--n", "3"},
      {"--json", "braid-check", fixture("braids.rc"), "--braiding", "const", "--e", "e0"},
      {"--json", "ybe", "--size", "2", "--mode", "regular", "--e", "all", "--jobs", "4"},
  };
  for (const auto& args : runs) {
    if (json_without_timing(args) != json_without_timing(args)) return {false, args[1] + " report differs"};
  }
  return {true, std::to_string(files) + " fixtures, " + std::to_string(runs.size()) + " repeated reports"};
}

// Standard functor check: named composites are preserved and identity
// edges go to identities.
bool standard_functor(const Diagram& src, const Diagram& tgt, const std::map<std::string, std::string>& em) {
  const auto& es = src.edges();
  auto image = [&](const FinMap& a) { return tgt.edges()[*tgt.edge_index(em.at(a.name()))].table(); };
  for (const auto& a : es) {
    if (a.is_endo() && a.table() == oracle::ident(a.size()) && image(a) != oracle::ident(a.size())) return false;
    for (const auto& b : es) {
      if (a.cod()->id() != b.dom()->id()) continue;
      const Table ba = after(b.table(), a.table());
      for (const auto& c : es) {
        if (c.dom()->id() == a.dom()->id() && c.cod()->id() == b.cod()->id() && c.table() == ba &&
            after(image(b), image(a)) != image(c)) {
          return false;
        }
      }
    }
  }
  return true;
}

Outcome functor_reduction() {
  std::mt19937 rng(7);
  std::size_t passing = 0;
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<std::size_t> n_obj(1, 3), sz(1, 3), n_edges(1, 4);
    std::vector<SetRef> objs;
    const std::size_t k = n_obj(rng);
    for (std::size_t j = 0; j < k; ++j) objs.push_back(FiniteSet::range("O" + std::to_string(j), sz(rng)));
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    std::vector<FinMap> src;
    for (const auto& o : objs) src.push_back(identity(o).renamed("id_" + o->id()));
    const std::size_t m = n_edges(rng);
    for (std::size_t j = 0; j < m; ++j) {
      src.push_back(oracle::random_map(rng, "a" + std::to_string(j), objs[pick(rng)], objs[pick(rng)]));
    }
    // Name a few composites so that composition preservation has teeth.
    const std::size_t base = src.size();
    for (std::size_t a = 0; a < base; ++a)
      for (std::size_t b = 0; b < base; ++b)
        if (src.size() < base + 2 && a != b && src[a].cod()->id() == src[b].dom()->id() && rng() % 3 == 0) {
          src.push_back(compose(src[b], src[a]).renamed("c" + std::to_string(src.size())));
        }
    std::vector<FinMap> tgt;
    std::map<std::string, std::string> em;
    for (const auto& a : src) {
      tgt.push_back(rng() % 4 == 0 ? oracle::random_map(rng, a.name(), a.dom(), a.cod()) : a);
      em[a.name()] = a.name();
    }
    std::map<std::string, std::string> om;
    for (const auto& o : objs) om[o->id()] = o->id();
    Diagram s("S", objs, src), t("T", objs, tgt);
    auto v = check_regular_functor(FunctorData{s, t, om, em}, 1);
    const bool lib = v.composition_preserved && v.e_preserved;
    if (lib != standard_functor(s, t, em)) return {false, "pair " + std::to_string(i) + " disagrees"};
    passing += lib;
  }
  return {true, "100 pairs, " + std::to_string(passing) + " functors, " + std::to_string(100 - passing) +
                    " rejected"};
}

}  // namespace

int main() {
  const auto pairs = generalized_pairs();
  criterion(1, "inner-inverse completeness", 30, inner_completeness);
  criterion(2, "generalized-from-inner soundness", 60, fin_soundness);
  criterion(3, "projector laws", 60, [&] { return projector_laws(pairs); });
  criterion(4, "closure of composites", 300, [&] { return closure(pairs); });
  criterion(5, "periodic towers / order-1 search", 300, [&] { return towers(pairs); });
  criterion(6, "obstructor idempotence", 300, obstructor_idempotence);
  criterion(7, "triangle fixture", 5, triangle_fixture);
  criterion(8, "YBE reduction at |X|=2", 1, ybe_reduction);
  criterion(9, "YBE solver vs naive at |X|=2", 5, solver_vs_naive);
  criterion(10, "YBE solver at |X|=3", 1200, solver_scale);
  criterion(11, "DSL and report determinism", 60, dsl_determinism);
  criterion(12, "functor reduction at n=1", 60, functor_reduction);
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
