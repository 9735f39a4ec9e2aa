#pragma once

// Braidings B: X⊗Y → Y⊗X on finite sets, their regularity, the slot-wise
// prebraidings and the classical / regularized Yang-Baxter equations.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regcat/finmap.hpp"

namespace regcat {

class Braiding {
 public:
  /// Throws TypeMismatch unless map: X⊗Y → Y⊗X (row-major products).
  Braiding(SetRef left, SetRef right, FinMap map);
  static Braiding from_table(std::string name, SetRef left, SetRef right, std::vector<Index> table);
  /// (x, y) ↦ (y, x).
  static Braiding swap(const SetRef& left, const SetRef& right);

  const SetRef& left() const noexcept { return left_; }
  const SetRef& right() const noexcept { return right_; }
  const FinMap& map() const noexcept { return map_; }
  const std::string& name() const noexcept { return map_.name(); }

  /// (B(x, y).first, B(x, y).second) as indices into right × left.
  std::pair<Index, Index> apply(Index x, Index y) const;

 private:
  SetRef left_;
  SetRef right_;
  FinMap map_;
};

/// B_rev∘B = Id_{X⊗Y}. Throws TypeMismatch unless b_rev: Y⊗X → X⊗Y.
bool check_symmetry(const Braiding& b, const Braiding& b_rev);

/// B∘B*∘B = B. Throws TypeMismatch unless b_star: Y⊗X → X⊗Y.
bool check_regular_braiding(const Braiding& b, const Braiding& b_star);

enum class Side { left, right };

/// left:  e_X ⊗ B_{Y,Z} on X⊗Y⊗Z (e acts on the passive first slot).
/// right: B_{X,Y} ⊗ e_Z on X⊗Y⊗Z (e acts on the passive last slot).
/// Throws NotIdempotent or TypeMismatch.
FinMap prebraid(const Braiding& b, Side side, const FinMap& e);

/// Per-object idempotent obstructors. Objects without an entry use the
/// identity; level 1 admits only identities.
class ObstructorAssignment {
 public:
  explicit ObstructorAssignment(std::size_t level = 1) : level_(level) {}
  /// Throws NotIdempotent, or InvalidArgument for a non-identity at level 1.
  void assign(const FinMap& e);

  std::size_t level() const noexcept { return level_; }
  FinMap for_object(const SetRef& x) const;

 private:
  std::size_t level_;
  std::map<std::string, FinMap> by_object_;
};

enum class CompositeKind {
  product_left,   // B_{X⊗Y,Z} = (B_{X,Z} ⊗ e_Y)∘(e_X ⊗ B_{Y,Z})
  product_right,  // B_{Z,X⊗Y} = (e_X ⊗ B_{Z,Y})∘(B_{Z,X} ⊗ e_Y)
};

/// product_left takes (B_{Y,Z}, B_{X,Z}); product_right takes
/// (B_{Z,X}, B_{Z,Y}) — the braiding applied first comes first.
FinMap composite_prebraid(const Braiding& first, const Braiding& second,
                          const ObstructorAssignment& e, CompositeKind which);

/// p∘p*∘p = p. Throws TypeMismatch.
bool check_prebraid_regularity(const FinMap& p, const FinMap& p_star);

enum class YbeMode { classical, regular };

struct YbeCheck {
  bool holds = true;
  std::optional<std::array<Index, 3>> witness;  // least failing (x, y, z)
};

/// Single carrier X. With L = e⊗B and R = B⊗e, compares R∘L∘R with
/// L∘R∘L on every triple. Classical mode demands e = Id. Throws
/// NotIdempotent, TypeMismatch, InvalidArgument.
YbeCheck check_ybe(const Braiding& b, const FinMap& e, YbeMode mode);

/// Both sides of the regularized equation as maps on X⊗X⊗X, assembled
/// from prebraid() and compose().
std::pair<FinMap, FinMap> ybe_sides(const Braiding& b, const FinMap& e);

/// Every t: X→X with t∘t = t, lexicographic.
std::vector<FinMap> enumerate_idempotents(const SetRef& x);

}  // namespace regcat
