#pragma once

// Finite sets, total maps between them, and the subset-level
// invertibility / regularity conditions.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "regcat/error.hpp"

namespace regcat {

using Index = std::uint32_t;

class FiniteSet;
using SetRef = std::shared_ptr<const FiniteSet>;

/// A named finite carrier. Identity is nominal: two sets are the same
/// object iff their ids agree, whatever their elements.
class FiniteSet {
 public:
  /// Throws DuplicateLabel if two labels coincide.
  static SetRef make(std::string id, std::vector<std::string> labels);
  /// Set with labels "0", "1", ..., "n-1".
  static SetRef range(std::string id, std::size_t n);

  const std::string& id() const noexcept { return id_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::string& label(Index i) const { return labels_.at(i); }
  std::optional<Index> index_of(std::string_view label) const;

  /// Factors when this set was built as a product; empty otherwise.
  const std::vector<SetRef>& factors() const noexcept { return factors_; }

 private:
  friend class ProductSet;
  FiniteSet(std::string id, std::vector<std::string> labels,
            std::vector<SetRef> factors);

  std::string id_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
  std::vector<SetRef> factors_;
};

inline bool same_object(const FiniteSet& a, const FiniteSet& b) {
  return a.id() == b.id();
}

/// Cartesian product with row-major indexing, leftmost factor most
/// significant. The carrier id is the factor ids joined by '*', with
/// composite factor ids parenthesised; tuple labels read "(a,b,...)".
class ProductSet {
 public:
  explicit ProductSet(std::vector<SetRef> factors);
  /// Recover the product view of a carrier built by this class.
  static ProductSet of(const SetRef& carrier);

  const std::vector<SetRef>& factors() const noexcept { return factors_; }
  const SetRef& carrier() const noexcept { return carrier_; }
  std::size_t arity() const noexcept { return factors_.size(); }

  Index index(std::span<const Index> tuple) const;
  std::vector<Index> tuple(Index i) const;

 private:
  ProductSet(std::vector<SetRef> factors, SetRef carrier);

  std::vector<SetRef> factors_;
  SetRef carrier_;
};

/// A total function between two finite sets, stored as a table of
/// codomain indices, one per domain index.
class FinMap {
 public:
  /// Throws TypeMismatch on a wrong table length or out-of-range entry.
  FinMap(std::string name, SetRef dom, SetRef cod, std::vector<Index> table);

  const std::string& name() const noexcept { return name_; }
  const SetRef& dom() const noexcept { return dom_; }
  const SetRef& cod() const noexcept { return cod_; }
  const std::vector<Index>& table() const noexcept { return table_; }
  std::size_t size() const noexcept { return table_.size(); }
  bool is_endo() const noexcept { return dom_->id() == cod_->id(); }

  Index operator()(Index x) const { return table_[x]; }

  FinMap renamed(std::string name) const;

  /// Value equality: dom id, cod id and table. Names are ignored.
  friend bool operator==(const FinMap& a, const FinMap& b);

 private:
  std::string name_;
  SetRef dom_;
  SetRef cod_;
  std::vector<Index> table_;
};

struct Subset {
  SetRef of;
  std::vector<Index> members;  // sorted, unique

  static Subset make(SetRef of, std::vector<Index> members);
  friend bool operator==(const Subset& a, const Subset& b) {
    return a.of->id() == b.of->id() && a.members == b.members;
  }
};

/// Throws MissingAssignment, DuplicateAssignment or UnknownLabel naming
/// the offending label.
FinMap build_map(std::string name, SetRef dom, SetRef cod,
                 std::span<const std::pair<std::string, std::string>> assignments);

/// g ∘ f; throws TypeMismatch unless cod(f) and dom(g) share an id.
FinMap compose(const FinMap& g, const FinMap& f);

/// Right-to-left composite: compose_all({a, b, c}) = a ∘ b ∘ c.
FinMap compose_all(std::span<const FinMap> maps);

FinMap identity(const SetRef& x);

bool is_identity(const FinMap& f);
bool is_idempotent(const FinMap& f);
std::vector<Index> image(const FinMap& f);

struct MapClass {
  bool injective = false;
  bool surjective = false;
  bool bijective = false;
  std::optional<bool> idempotent;  // only for endomaps
};

MapClass classify_map(const FinMap& f);

Subset direct_image(const FinMap& f, const Subset& a);
Subset inverse_image(const FinMap& f, const Subset& b);

enum class RegularityMode { image, reflexive };

struct SubsetRegularity {
  bool holds = true;
  std::optional<Subset> witness;  // least counterexample
};

/// image: f(g(f(A))) = f(A) for every A ⊆ dom f.
/// reflexive: g(f(g(B))) = g(B) for every B ⊆ cod f.
/// Subsets are compared as sorted member lists; the least failing one is
/// reported. Sets larger than 24 elements are rejected.
SubsetRegularity check_subset_regularity(const FinMap& f, const FinMap& g,
                                         RegularityMode mode);

/// (f⊗g)(x, y) = (f(x), g(y)) on the row-major product carriers.
FinMap tensor(const FinMap& f, const FinMap& g);

/// Number of maps dom → cod, saturating at UINT64_MAX.
std::uint64_t map_space_size(std::size_t dom_size, std::size_t cod_size);

/// Calls visit with every table of length dom_size over 0..cod_size-1 in
/// lexicographic order (first entry most significant). Stops early when
/// visit returns false.
void for_each_table(std::size_t dom_size, std::size_t cod_size,
                    const std::function<bool(const std::vector<Index>&)>& visit);

std::string describe_type(const FinMap& f);

}  // namespace regcat
