#include "regcat/higher_regularity.hpp"

#include <limits>

namespace regcat {

namespace {

std::string star_label(const FinMap& base, std::size_t k) {
  return base.name() + "^(" + std::to_string(k) + ")";
}

// Expected typing of the k-th star (1-based).
bool star_typed(const FinMap& base, const FinMap& star, std::size_t k) {
  const auto& want_dom = k % 2 == 1 ? base.cod() : base.dom();
  const auto& want_cod = k % 2 == 1 ? base.dom() : base.cod();
  return star.dom()->id() == want_dom->id() && star.cod()->id() == want_cod->id();
}

std::optional<Index> first_difference(const FinMap& a, const FinMap& b) {
  for (Index x = 0; x < a.size(); ++x) {
    if (a(x) != b(x)) return x;
  }
  return std::nullopt;
}

// Image of `src` as a membership mask over its codomain.
std::vector<bool> image_mask(const std::vector<Index>& table, std::size_t cod_size) {
  std::vector<bool> mask(cod_size, false);
  for (Index v : table) mask[v] = true;
  return mask;
}

bool covers(const std::vector<bool>& have, const std::vector<bool>& need) {
  for (std::size_t i = 0; i < need.size(); ++i) {
    if (need[i] && !have[i]) return false;
  }
  return true;
}

}  // namespace

StarChain make_chain(FinMap base, std::vector<FinMap> stars) {
  if (stars.empty()) throw Error(Errc::InvalidArgument, "a star chain needs at least one star");
  for (std::size_t k = 1; k <= stars.size(); ++k) {
    if (!star_typed(base, stars[k - 1], k)) {
      throw Error(Errc::AlternationViolation, std::to_string(k));
    }
  }
  return StarChain(std::move(base), std::move(stars));
}

ChainVerdict check_chain(const StarChain& chain) {
  const FinMap& f = chain.base();
  const auto& stars = chain.stars();
  const bool odd = chain.order() % 2 == 1;

  // tail = f⁽¹⁾∘…∘f⁽ⁿ⁾
  FinMap tail = compose_all(stars);
  FinMap obstructor = odd ? compose(tail, f) : tail;
  obstructor = obstructor.renamed("e_" + f.dom()->id());

  ChainVerdict v{std::nullopt, std::nullopt, false, obstructor, false, {}};
  v.obstructor_idempotent = is_idempotent(obstructor);
  v.ef_form = compose(f, obstructor) == f;

  if (odd) {
    FinMap lhs = compose(f, obstructor);
    auto diff = first_difference(lhs, f);
    v.odd_closure = !diff;
    if (diff) v.failures.push_back({"nreg2", *diff, f.dom()});
  } else {
    const FinMap& first = stars.front();
    FinMap lhs = compose(tail, first);
    auto diff = first_difference(lhs, first);
    v.even_closure = !diff;
    if (diff) v.failures.push_back({"nreg1", *diff, first.dom()});
  }
  return v;
}

StarChain extend_periodic(const FinMap& f, const FinMap& fstar, std::size_t n) {
  if (fstar.dom()->id() != f.cod()->id() || fstar.cod()->id() != f.dom()->id() ||
      !is_inverse(f, fstar, InverseKind::generalized)) {
    throw Error(Errc::NotAGeneralizedInverse, fstar.name() + " for " + f.name());
  }
  std::vector<FinMap> stars;
  stars.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) stars.push_back(k % 2 == 1 ? fstar : f);
  return make_chain(f, std::move(stars));
}

ChainSearch find_chains(const FinMap& f, std::size_t n, std::optional<std::size_t> limit,
                        std::uint64_t bound) {
  if (n == 0) throw Error(Errc::InvalidArgument, "chain order must be at least 1");
  const auto nx = f.dom()->size();
  const auto ny = f.cod()->size();
  if (!limit) {
    const std::uint64_t odd_space = map_space_size(ny, nx);
    const std::uint64_t even_space = map_space_size(nx, ny);
    std::uint64_t total = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      const std::uint64_t s = k % 2 == 1 ? odd_space : even_space;
      if (s != 0 && total > std::numeric_limits<std::uint64_t>::max() / s) {
        total = std::numeric_limits<std::uint64_t>::max();
        break;
      }
      total *= s;
    }
    if (total > bound) {
      throw Error(Errc::SearchSpaceTooLarge, "star towers of order " + std::to_string(n));
    }
  }

  ChainSearch out;
  if (limit && *limit == 0) {
    out.truncated = true;
    return out;
  }
  const bool odd = n % 2 == 1;
  const std::vector<Index>& base = f.table();
  const std::vector<bool> need_odd = image_mask(base, ny);

  std::vector<std::vector<Index>> tower(n);
  bool stop = false;

  // partial: the composite f∘f⁽¹⁾∘…∘f⁽ᵐ⁾ (odd order) or f⁽¹⁾∘…∘f⁽ᵐ⁾ (even
  // order) as a table over the domain of f⁽ᵐ⁾; its image must keep covering
  // what the closure has to reproduce.
  std::function<void(std::size_t, const std::vector<Index>&)> descend =
      [&](std::size_t level, const std::vector<Index>& partial) {
        const std::size_t k = level + 1;
        const bool from_y = k % 2 == 1;
        const std::size_t dom_size = from_y ? ny : nx;
        const std::size_t cod_size = from_y ? nx : ny;
        for_each_table(dom_size, cod_size, [&](const std::vector<Index>& star) {
          std::vector<Index> next(dom_size);
          if (level == 0 && !odd) {
            next = star;
          } else {
            for (Index i = 0; i < dom_size; ++i) next[i] = partial[star[i]];
          }
          const std::size_t partial_cod = odd ? ny : nx;
          const std::vector<bool>& need =
              odd ? need_odd : image_mask(level == 0 ? star : tower[0], nx);
          if (!covers(image_mask(next, partial_cod), need)) return true;
          tower[level] = star;
          if (k < n) {
            descend(level + 1, next);
          } else {
            bool ok = true;
            if (odd) {
              // next: Y→Y; close with f.
              for (Index x = 0; x < nx && ok; ++x) ok = next[base[x]] == base[x];
            } else {
              const auto& first = tower[0];
              for (Index y = 0; y < ny && ok; ++y) ok = next[first[y]] == first[y];
            }
            if (ok) {
              if (limit && out.chains.size() >= *limit) {
                out.truncated = true;
                stop = true;
                return false;
              }
              std::vector<FinMap> stars;
              for (std::size_t j = 0; j < n; ++j) {
                const bool y_side = (j + 1) % 2 == 1;
                stars.emplace_back(star_label(f, j + 1), y_side ? f.cod() : f.dom(),
                                   y_side ? f.dom() : f.cod(), tower[j]);
              }
              out.chains.push_back(make_chain(f, std::move(stars)));
            }
          }
          return !stop;
        });
      };

  std::vector<Index> start = base;  // odd: f itself as a table over X
  descend(0, start);
  return out;
}

HigherProjector higher_projector(const StarChain& chain) {
  const FinMap& f = chain.base();
  FinMap tail = compose_all(chain.stars());
  if (chain.order() % 2 == 1) {
    FinMap p = compose(f, tail).renamed("P_" + f.cod()->id());
    return {p, ProjectorSide::codomain, is_idempotent(p), compose(p, f) == f};
  }
  FinMap p = tail.renamed("P_" + f.dom()->id());
  const FinMap& first = chain.stars().front();
  return {p, ProjectorSide::domain, is_idempotent(p), compose(p, first) == first};
}

ComposedChain star_compose(const StarChain& cf, const StarChain& cg) {
  if (cf.order() != cg.order()) {
    throw Error(Errc::OrderMismatch,
                std::to_string(cf.order()) + " vs " + std::to_string(cg.order()));
  }
  FinMap gf = compose(cg.base(), cf.base());
  std::vector<FinMap> stars;
  stars.reserve(cf.order());
  for (std::size_t k = 1; k <= cf.order(); ++k) {
    const FinMap& fk = cf.stars()[k - 1];
    const FinMap& gk = cg.stars()[k - 1];
    stars.push_back(k % 2 == 1 ? compose(fk, gk) : compose(gk, fk));
  }
  StarChain chain = make_chain(gf, std::move(stars));
  ChainVerdict verdict = check_chain(chain);
  return {std::move(chain), std::move(verdict)};
}

}  // namespace regcat
