#include "regcat/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace regcat {

Diagram::Diagram(std::string name, std::vector<SetRef> objects, std::vector<FinMap> edges)
    : name_(std::move(name)), edges_(std::move(edges)) {
  auto add_object = [&](const SetRef& s) {
    for (const auto& o : objects_) {
      if (o->id() == s->id()) {
        if (o != s && o->labels() != s->labels()) {
          throw Error(Errc::TypeMismatch, "two different sets named " + s->id());
        }
        return;
      }
    }
    objects_.push_back(s);
  };
  for (const auto& o : objects) add_object(o);
  std::set<std::string> names;
  for (const auto& e : edges_) {
    if (!names.insert(e.name()).second) throw Error(Errc::DuplicateName, e.name());
    add_object(e.dom());
    add_object(e.cod());
  }
}

Diagram Diagram::from_edges(std::string name, std::vector<FinMap> edges) {
  return Diagram(std::move(name), {}, std::move(edges));
}

std::optional<std::size_t> Diagram::edge_index(const std::string& name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].name() == name) return i;
  }
  return std::nullopt;
}

const SetRef* Diagram::object(const std::string& id) const {
  for (const auto& o : objects_) {
    if (o->id() == id) return &o;
  }
  return nullptr;
}

FinMap path_compose(const Diagram& d, const std::vector<std::size_t>& path) {
  if (path.empty()) throw Error(Errc::BrokenPath, "empty path");
  FinMap acc = d.edges().at(path[0]);
  for (std::size_t i = 1; i < path.size(); ++i) {
    const FinMap& next = d.edges().at(path[i]);
    if (next.dom()->id() != acc.cod()->id()) throw Error(Errc::BrokenPath, std::to_string(i));
    acc = compose(next, acc);
  }
  return acc;
}

FinMap path_compose(const Diagram& d, const std::vector<std::string>& path) {
  std::vector<std::size_t> idx;
  idx.reserve(path.size());
  for (const auto& name : path) {
    auto i = d.edge_index(name);
    if (!i) throw Error(Errc::UnknownReference, name);
    idx.push_back(*i);
  }
  return path_compose(d, idx);
}

namespace {

// Simple paths (no repeated edge) from `start`, length 1..max_len, in DFS
// preorder. visit(path, end_object) returns false to stop.
void walk_paths(const Diagram& d, const std::string& start, std::size_t max_len,
                const std::function<bool(const std::vector<std::size_t>&, const std::string&)>& visit) {
  std::vector<std::size_t> path;
  std::vector<bool> used(d.edges().size(), false);
  bool stop = false;
  std::function<void(const std::string&)> step = [&](const std::string& at) {
    for (std::size_t i = 0; i < d.edges().size() && !stop; ++i) {
      const FinMap& e = d.edges()[i];
      if (used[i] || e.dom()->id() != at) continue;
      used[i] = true;
      path.push_back(i);
      if (!visit(path, e.cod()->id())) stop = true;
      if (!stop && path.size() < max_len) step(e.cod()->id());
      path.pop_back();
      used[i] = false;
    }
  };
  if (max_len > 0) step(start);
}

std::optional<Index> first_difference(const FinMap& a, const FinMap& b) {
  for (Index x = 0; x < a.size(); ++x) {
    if (a(x) != b(x)) return x;
  }
  return std::nullopt;
}

std::optional<Index> first_non_fixed(const FinMap& e) {
  for (Index x = 0; x < e.size(); ++x) {
    if (e(x) != x) return x;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Cycle> enumerate_cycles_at(const Diagram& d, const std::string& base,
                                       std::size_t max_len) {
  std::vector<Cycle> out;
  walk_paths(d, base, max_len, [&](const std::vector<std::size_t>& path, const std::string& end) {
    if (end == base) out.push_back(Cycle{base, path});
    return true;
  });
  return out;
}

std::vector<Cycle> enumerate_cycles(const Diagram& d, std::size_t max_len) {
  std::vector<Cycle> out;
  for (const auto& o : d.objects()) {
    auto at = enumerate_cycles_at(d, o->id(), max_len);
    out.insert(out.end(), std::make_move_iterator(at.begin()), std::make_move_iterator(at.end()));
  }
  return out;
}

Obstructor obstructor(const Diagram& d, const Cycle& c) {
  FinMap e = path_compose(d, c.edges).renamed("e_" + c.base + "^(" + std::to_string(c.length()) + ")");
  if (e.dom()->id() != c.base || e.cod()->id() != c.base) {
    throw Error(Errc::BrokenPath, "cycle does not close at " + c.base);
  }
  const bool id = is_identity(e);
  const bool idem = is_idempotent(e);
  return Obstructor{std::move(e), id, idem};
}

DiagramVerdict is_commutative(const Diagram& d, std::size_t max_len) {
  DiagramVerdict out;
  for (const auto& c : enumerate_cycles(d, max_len)) {
    FinMap e = path_compose(d, c.edges);
    if (auto x = first_non_fixed(e)) {
      out.holds = false;
      out.violations.push_back({"cycle", c.edges, {}, *x, c.base});
      break;
    }
  }
  bool found = false;
  for (const auto& o : d.objects()) {
    if (found) break;
    struct Path {
      std::vector<std::size_t> edges;
      std::string end;
      FinMap value;
    };
    std::vector<Path> paths;
    walk_paths(d, o->id(), max_len, [&](const std::vector<std::size_t>& p, const std::string& end) {
      paths.push_back({p, end, path_compose(d, p)});
      return true;
    });
    for (std::size_t i = 0; i < paths.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < paths.size() && !found; ++j) {
        if (paths[i].end != paths[j].end) continue;
        if (auto x = first_difference(paths[i].value, paths[j].value)) {
          out.holds = false;
          out.violations.push_back({"parallel", paths[i].edges, paths[j].edges, *x, o->id()});
          found = true;
        }
      }
    }
  }
  return out;
}

DiagramVerdict is_semicommutative(const Diagram& d, std::size_t max_len) {
  DiagramVerdict out;
  for (const auto& c : enumerate_cycles(d, max_len)) {
    FinMap e = path_compose(d, c.edges);
    for (std::size_t i = 0; i < d.edges().size(); ++i) {
      const FinMap& f = d.edges()[i];
      if (f.dom()->id() != c.base) continue;
      if (auto x = first_difference(compose(f, e), f)) {
        out.holds = false;
        out.violations.push_back({"absorption", c.edges, {i}, *x, c.base});
        return out;
      }
    }
  }
  return out;
}

ObstructionNumber obstruction_number(const Diagram& d, const std::string& object,
                                     std::size_t max_n) {
  if (!d.object(object)) throw Error(Errc::UnknownObject, object);
  ObstructionNumber out;
  for (const auto& c : enumerate_cycles_at(d, object, max_n)) {
    if (out.n_obstr && c.length() >= *out.n_obstr) continue;
    if (!is_identity(path_compose(d, c.edges))) {
      out.n_obstr = c.length();
      out.witness = c;
    }
  }
  return out;
}

bool is_regular_3cycle(const FinMap& f, const FinMap& g, const FinMap& h) {
  return compose(f, compose(h, compose(g, f))) == f;
}

RegularThreeCycle make_3cycle(const FinMap& f, const FinMap& g, const FinMap& h) {
  if (f.cod()->id() != g.dom()->id() || g.cod()->id() != h.dom()->id() ||
      h.cod()->id() != f.dom()->id()) {
    throw Error(Errc::TypeMismatch, "edges " + f.name() + ", " + g.name() + ", " + h.name() +
                                        " do not form a 3-cycle");
  }
  if (!is_regular_3cycle(f, g, h)) {
    throw Error(Errc::InvalidArgument, "f∘h∘g∘f ≠ f for " + f.name() + ", " + g.name() + ", " +
                                           h.name());
  }
  FinMap e = compose(h, compose(g, f)).renamed("e_" + f.dom()->id() + "^(3)");
  return RegularThreeCycle{f.dom(), g.dom(), h.dom(), f, g, h, std::move(e)};
}

std::vector<RegularThreeCycle> find_regular_3cycles(const Diagram& d) {
  std::vector<RegularThreeCycle> out;
  const auto& edges = d.edges();
  const std::size_t m = edges.size();
  auto links = [&](std::size_t a, std::size_t b) { return edges[a].cod()->id() == edges[b].dom()->id(); };
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!links(a, b)) continue;
      for (std::size_t c = a + 1; c < m; ++c) {
        if (c == b || !links(b, c) || !links(c, a)) continue;
        const std::size_t rot[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
        for (const auto& r : rot) {
          if (is_regular_3cycle(edges[r[0]], edges[r[1]], edges[r[2]])) {
            out.push_back(make_3cycle(edges[r[0]], edges[r[1]], edges[r[2]]));
            break;
          }
        }
      }
    }
  }
  return out;
}

bool is_cycle_morphism(const FinMap& f, const RegularThreeCycle& c1, const RegularThreeCycle& c2) {
  if (f.dom()->id() != c1.x->id() || f.cod()->id() != c2.x->id()) {
    throw Error(Errc::TypeMismatch, describe_type(f) + " does not run " + c1.x->id() + " -> " +
                                        c2.x->id());
  }
  return compose(f, c1.e) == compose(c2.e, f);
}

RegularThreeCycle product_3cycle(const RegularThreeCycle& c1, const RegularThreeCycle& c2) {
  FinMap f = tensor(c1.f, c2.f);
  FinMap g = tensor(c1.g, c2.g);
  FinMap h = tensor(c1.h, c2.h);
  if (!is_regular_3cycle(f, g, h)) {
    throw Error(Errc::InvalidArgument, "monoidal product of regular 3-cycles is not regular");
  }
  return make_3cycle(f, g, h);
}

FunctorVerdict check_regular_functor(const FunctorData& fd, std::size_t n) {
  const Diagram& src = fd.source;
  const Diagram& tgt = fd.target;

  auto mapped_object = [&](const std::string& id) -> const std::string& {
    auto it = fd.object_map.find(id);
    if (it == fd.object_map.end()) throw Error(Errc::IncompatibleEdgeMap, "object " + id + " is not mapped");
    if (!tgt.object(it->second)) throw Error(Errc::IncompatibleEdgeMap, "object " + it->second + " is not in " + tgt.name());
    return it->second;
  };

  std::vector<std::size_t> image(src.edges().size());
  for (std::size_t i = 0; i < src.edges().size(); ++i) {
    const FinMap& e = src.edges()[i];
    auto it = fd.edge_map.find(e.name());
    if (it == fd.edge_map.end()) throw Error(Errc::IncompatibleEdgeMap, "edge " + e.name() + " is not mapped");
    auto j = tgt.edge_index(it->second);
    if (!j) throw Error(Errc::IncompatibleEdgeMap, "edge " + it->second + " is not in " + tgt.name());
    const FinMap& t = tgt.edges()[*j];
    if (t.dom()->id() != mapped_object(e.dom()->id()) || t.cod()->id() != mapped_object(e.cod()->id())) {
      throw Error(Errc::IncompatibleEdgeMap, e.name() + " -> " + t.name() + " breaks endpoints");
    }
    image[i] = *j;
  }
  for (const auto& [from, to] : fd.edge_map) {
    if (!src.edge_index(from)) throw Error(Errc::IncompatibleEdgeMap, "edge " + from + " is not in " + src.name());
  }

  FunctorVerdict out;
  const auto& edges = src.edges();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = 0; b < edges.size(); ++b) {
      if (edges[a].cod()->id() != edges[b].dom()->id()) continue;
      FinMap ba = compose(edges[b], edges[a]);
      for (std::size_t c = 0; c < edges.size(); ++c) {
        if (!(edges[c] == ba)) continue;
        FinMap lhs = compose(tgt.edges()[image[b]], tgt.edges()[image[a]]);
        if (!(lhs == tgt.edges()[image[c]])) {
          out.composition_preserved = false;
          out.violations.push_back({"composition", {a, b}, c});
        }
      }
    }
  }

  // The relations a source obstructor satisfies (e = Id, a∘e = a for edges
  // a leaving the base) must hold for the image obstructor too.
  for (const auto& c : enumerate_cycles(src, n)) {
    ++out.cycles_checked;
    const FinMap e = path_compose(src, c.edges);
    std::vector<std::size_t> mapped;
    mapped.reserve(c.edges.size());
    for (auto i : c.edges) mapped.push_back(image[i]);
    const FinMap e2 = path_compose(tgt, mapped);
    if (is_identity(e) && !is_identity(e2)) {
      out.e_preserved = false;
      out.violations.push_back({"obstructor", c.edges, std::nullopt});
      continue;
    }
    for (std::size_t a = 0; a < edges.size(); ++a) {
      if (edges[a].dom()->id() != c.base) continue;
      if (!(compose(edges[a], e) == edges[a])) continue;
      const FinMap& fa = tgt.edges()[image[a]];
      if (!(compose(fa, e2) == fa)) {
        out.e_preserved = false;
        out.violations.push_back({"obstructor", c.edges, a});
        break;
      }
    }
  }
  return out;
}

}  // namespace regcat
