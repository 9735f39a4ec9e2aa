#include "regcat/inverses.hpp"

#include <limits>

namespace regcat {

namespace {

void require_reverse_type(const FinMap& f, const FinMap& g) {
  if (g.dom()->id() != f.cod()->id() || g.cod()->id() != f.dom()->id()) {
    throw Error(Errc::TypeMismatch, describe_type(g) + " is not typed " + f.cod()->id() +
                                        " -> " + f.dom()->id());
  }
}

bool inner_holds(const std::vector<Index>& f, const std::vector<Index>& g) {
  for (Index x = 0; x < f.size(); ++x) {
    if (f[g[f[x]]] != f[x]) return false;
  }
  return true;
}

bool outer_holds(const std::vector<Index>& f, const std::vector<Index>& g) {
  for (Index y = 0; y < g.size(); ++y) {
    if (g[f[g[y]]] != g[y]) return false;
  }
  return true;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::string star_name(const FinMap& f) { return f.name() + "*"; }

}  // namespace

FinMap section_inner_inverse(const FinMap& f) {
  const auto n_cod = f.cod()->size();
  if (f.dom()->empty() && n_cod > 0) {
    throw Error(Errc::NoInverseExists, "no map " + f.cod()->id() + " -> empty " + f.dom()->id());
  }
  constexpr Index unset = std::numeric_limits<Index>::max();
  std::vector<Index> g(n_cod, unset);
  for (Index x = 0; x < f.size(); ++x) {
    if (g[f(x)] == unset) g[f(x)] = x;
  }
  for (auto& v : g) {
    if (v == unset) v = 0;
  }
  return FinMap(star_name(f), f.cod(), f.dom(), std::move(g));
}

std::uint64_t inner_inverse_count(const FinMap& f) {
  std::vector<std::uint64_t> fibre(f.cod()->size(), 0);
  for (Index v : f.table()) ++fibre[v];
  std::uint64_t count = 1;
  for (auto size : fibre) {
    count = saturating_mul(count, size == 0 ? f.dom()->size() : size);
  }
  return count;
}

InverseList enumerate_inverses(const FinMap& f, InverseKind kind,
                               std::optional<std::size_t> limit, std::uint64_t bound) {
  const auto n_dom = f.dom()->size();
  const auto n_cod = f.cod()->size();
  if (!limit && map_space_size(n_cod, n_dom) > bound) {
    throw Error(Errc::SearchSpaceTooLarge,
                std::to_string(n_dom) + "^" + std::to_string(n_cod) + " candidate maps");
  }

  InverseList out;
  auto keep = [&](const std::vector<Index>& g) {
    ++out.count;
    if (limit && out.maps.size() >= *limit) {
      out.truncated = true;
      return;
    }
    out.maps.emplace_back(star_name(f), f.cod(), f.dom(), g);
  };

  if (kind == InverseKind::outer) {
    for_each_table(n_cod, n_dom, [&](const std::vector<Index>& g) {
      if (outer_holds(f.table(), g)) keep(g);
      return true;
    });
    return out;
  }

  // Inner inverses are exactly the tables choosing a preimage on im f and
  // anything off it; walk that product in lexicographic order.
  std::vector<std::vector<Index>> choices(n_cod);
  for (Index x = 0; x < n_dom; ++x) choices[f(x)].push_back(x);
  for (auto& c : choices) {
    if (c.empty()) {
      for (Index x = 0; x < n_dom; ++x) c.push_back(x);
    }
    if (c.empty()) return out;
  }
  std::vector<std::size_t> pos(n_cod, 0);
  std::vector<Index> g(n_cod);
  while (true) {
    for (std::size_t y = 0; y < n_cod; ++y) g[y] = choices[y][pos[y]];
    if (kind == InverseKind::inner || outer_holds(f.table(), g)) keep(g);
    bool advanced = false;
    for (std::size_t y = n_cod; y-- > 0;) {
      if (++pos[y] < choices[y].size()) {
        advanced = true;
        break;
      }
      pos[y] = 0;
    }
    if (!advanced) break;
  }
  return out;
}

bool is_inverse(const FinMap& f, const FinMap& g, InverseKind kind) {
  require_reverse_type(f, g);
  switch (kind) {
    case InverseKind::inner: return inner_holds(f.table(), g.table());
    case InverseKind::outer: return outer_holds(f.table(), g.table());
    case InverseKind::generalized:
      return inner_holds(f.table(), g.table()) && outer_holds(f.table(), g.table());
  }
  return false;
}

FinMap generalized_from_inner(const FinMap& f, const FinMap& inner) {
  if (!is_inverse(f, inner, InverseKind::inner)) {
    throw Error(Errc::NotAnInnerInverse, inner.name() + " for " + f.name());
  }
  return compose(inner, compose(f, inner)).renamed(star_name(f));
}

ProjectorPair projectors(const FinMap& f, const FinMap& fstar) {
  require_reverse_type(f, fstar);
  FinMap p_f = compose(f, fstar).renamed("P_" + f.name());
  FinMap p_fstar = compose(fstar, f).renamed("P_" + fstar.name());
  ProjectorPair out{p_f, p_fstar};
  out.p_f_idempotent = is_idempotent(p_f);
  out.p_fstar_idempotent = is_idempotent(p_fstar);
  out.p_f_absorbs = compose(p_f, f) == f;
  out.p_fstar_absorbs = compose(f, p_fstar) == f;
  out.fstar_absorbs = compose(p_fstar, fstar) == fstar;
  return out;
}

InvertibilityClass invertibility_class(const FinMap& f) {
  InvertibilityClass out;
  if (f.dom()->empty() && !f.cod()->empty()) return out;
  // The canonical section serves both sides: it is a right inverse when f
  // is onto and a left inverse when f is one-to-one.
  FinMap g = section_inner_inverse(f);
  if (is_identity(compose(f, g))) {
    out.retraction = true;
    out.retraction_witness = g;
  }
  if (is_identity(compose(g, f))) {
    out.coretraction = true;
    out.coretraction_witness = g;
  }
  return out;
}

ClosureReport closure_composite(const FinMap& f, const FinMap& fstar, const FinMap& g,
                                const FinMap& gstar) {
  require_reverse_type(f, fstar);
  require_reverse_type(g, gstar);
  if (f.cod()->id() != g.dom()->id()) {
    throw Error(Errc::TypeMismatch, describe_type(g) + " cannot follow " + describe_type(f));
  }
  FinMap p_f = compose(f, fstar);
  FinMap p_gstar = compose(gstar, g);
  FinMap gf = compose(g, f);
  FinMap star = compose(fstar, gstar);
  ClosureReport out{false, false, star};
  out.projectors_commute = compose(p_f, p_gstar) == compose(p_gstar, p_f);
  out.composite_regular = is_inverse(gf, star, InverseKind::generalized);
  return out;
}

bool unique_generalized_inverse(const FinMap& f, std::uint64_t bound) {
  return enumerate_inverses(f, InverseKind::generalized, std::nullopt, bound).count == 1;
}

}  // namespace regcat
