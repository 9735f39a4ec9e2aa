#pragma once

// Inner, outer and generalized inverses of finite maps, projection
// operators, retraction/coretraction witnesses and closure of regularity
// under composition.

#include <cstdint>
#include <optional>
#include <vector>

#include "regcat/finmap.hpp"

namespace regcat {

/// inner: f∘g∘f = f. outer: g∘f∘g = g. generalized: both.
enum class InverseKind { inner, outer, generalized };

inline constexpr std::uint64_t default_search_bound = 100'000'000;

/// The canonical inner inverse: least preimage on the image, index 0
/// elsewhere. Throws NoInverseExists when dom f = ∅ and cod f ≠ ∅.
FinMap section_inner_inverse(const FinMap& f);

struct InverseList {
  std::vector<FinMap> maps;  // lexicographic by table
  std::uint64_t count = 0;   // exact total, independent of the limit
  bool truncated = false;
};

/// All g: cod f → dom f of the given kind. Without a limit the candidate
/// space |dom|^|cod| must not exceed `bound` (SearchSpaceTooLarge).
InverseList enumerate_inverses(const FinMap& f, InverseKind kind,
                               std::optional<std::size_t> limit = std::nullopt,
                               std::uint64_t bound = default_search_bound);

/// Throws TypeMismatch unless g: cod f → dom f.
bool is_inverse(const FinMap& f, const FinMap& g, InverseKind kind);

/// g∘f∘g, a generalized inverse whenever g is inner.
FinMap generalized_from_inner(const FinMap& f, const FinMap& inner);

struct ProjectorPair {
  FinMap p_f;      // f∘f*, endomap of cod f
  FinMap p_fstar;  // f*∘f, endomap of dom f
  bool p_f_idempotent = false;
  bool p_fstar_idempotent = false;
  bool p_f_absorbs = false;      // 𝒫_f∘f = f
  bool p_fstar_absorbs = false;  // f∘𝒫_{f*} = f
  bool fstar_absorbs = false;    // 𝒫_{f*}∘f* = f*
};

ProjectorPair projectors(const FinMap& f, const FinMap& fstar);

struct InvertibilityClass {
  bool retraction = false;    // ∃g. f∘g = Id_cod
  bool coretraction = false;  // ∃g. g∘f = Id_dom
  std::optional<FinMap> retraction_witness;
  std::optional<FinMap> coretraction_witness;
};

InvertibilityClass invertibility_class(const FinMap& f);

struct ClosureReport {
  bool projectors_commute = false;  // 𝒫_f∘𝒫_{g*} = 𝒫_{g*}∘𝒫_f on Y
  bool composite_regular = false;   // f*∘g* generalized for g∘f
  FinMap composite_star;            // f*∘g*
};

/// f: X→Y, g: Y→Z with chosen stars.
ClosureReport closure_composite(const FinMap& f, const FinMap& fstar, const FinMap& g,
                                const FinMap& gstar);

bool unique_generalized_inverse(const FinMap& f, std::uint64_t bound = default_search_bound);

/// (∏_{y∈im f} |f⁻¹(y)|)·|dom f|^|cod f∖im f|, saturating.
std::uint64_t inner_inverse_count(const FinMap& f);

}  // namespace regcat
