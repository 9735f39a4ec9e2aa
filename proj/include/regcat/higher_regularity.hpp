#pragma once

// Towers of higher star maps f, f⁽¹⁾, f⁽²⁾, ... with alternating types and
// their n-regularity closure conditions.

#include <optional>
#include <string>
#include <vector>

#include "regcat/finmap.hpp"
#include "regcat/inverses.hpp"

namespace regcat {

/// Base f: X→Y plus stars where f⁽ᵏ⁾: Y→X for odd k and X→Y for even k.
class StarChain {
 public:
  const FinMap& base() const noexcept { return base_; }
  const std::vector<FinMap>& stars() const noexcept { return stars_; }
  std::size_t order() const noexcept { return stars_.size(); }

 private:
  friend StarChain make_chain(FinMap base, std::vector<FinMap> stars);
  StarChain(FinMap base, std::vector<FinMap> stars)
      : base_(std::move(base)), stars_(std::move(stars)) {}

  FinMap base_;
  std::vector<FinMap> stars_;
};

/// Throws AlternationViolation(k) at the first mistyped star (1-based),
/// InvalidArgument for an empty tower.
StarChain make_chain(FinMap base, std::vector<FinMap> stars);

struct ChainFailure {
  std::string equation;  // "nreg2" (odd order) or "nreg1" (even order)
  Index element;         // first point where the two sides differ
  SetRef over;           // the set `element` indexes
};

struct ChainVerdict {
  std::optional<bool> odd_closure;   // f∘f⁽¹⁾∘…∘f⁽ⁿ⁾∘f = f
  std::optional<bool> even_closure;  // f⁽¹⁾∘…∘f⁽ⁿ⁾∘f⁽¹⁾ = f⁽¹⁾
  bool ef_form = false;              // base∘obstructor = base
  FinMap obstructor;                 // endomap of dom(base)
  bool obstructor_idempotent = false;
  std::vector<ChainFailure> failures;

  bool holds() const { return odd_closure.value_or(true) && even_closure.value_or(true); }
};

/// Odd order: obstructor f⁽¹⁾∘…∘f⁽ⁿ⁾∘f. Even order: f⁽¹⁾∘…∘f⁽ⁿ⁾, and the
/// closure drops the leading f so that both sides are maps Y→X.
ChainVerdict check_chain(const StarChain& chain);

/// [f*, f, f*, f, ...] of length n. Throws NotAGeneralizedInverse.
StarChain extend_periodic(const FinMap& f, const FinMap& fstar, std::size_t n);

struct ChainSearch {
  std::vector<StarChain> chains;  // lexicographic by star tables
  bool truncated = false;
};

/// Depth-first search over all towers of order n that pass check_chain.
/// A prefix is abandoned once the image of its partial composite no
/// longer covers the image the closure has to reproduce. Without a limit
/// the tower space must not exceed `bound`.
ChainSearch find_chains(const FinMap& f, std::size_t n, std::optional<std::size_t> limit,
                        std::uint64_t bound = default_search_bound);

enum class ProjectorSide { domain, codomain };

struct HigherProjector {
  FinMap projector;
  ProjectorSide side;
  bool idempotent = false;
  bool absorption = false;
};

/// Odd order: P = f∘f⁽¹⁾∘…∘f⁽ⁿ⁾ on Y, absorption P∘f = f.
/// Even order: P = f⁽¹⁾∘…∘f⁽ⁿ⁾ on X, absorption P∘f⁽¹⁾ = f⁽¹⁾.
HigherProjector higher_projector(const StarChain& chain);

struct ComposedChain {
  StarChain chain;
  ChainVerdict verdict;
};

/// Chain over g∘f with f⁽ᵏ⁾∘g⁽ᵏ⁾ at odd k and g⁽ᵏ⁾∘f⁽ᵏ⁾ at even k. The
/// verdict is computed, never assumed.
ComposedChain star_compose(const StarChain& cf, const StarChain& cg);

}  // namespace regcat
