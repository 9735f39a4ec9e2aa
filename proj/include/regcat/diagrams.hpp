#pragma once

// Diagrams of finite sets: commutativity, semicommutativity, obstructors,
// regular 3-cycles and generalized functors.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regcat/finmap.hpp"

namespace regcat {

/// A directed multigraph whose vertices are finite sets and whose edges
/// are named maps between them.
class Diagram {
 public:
  Diagram() = default;
  /// Objects are added in the given order, then any edge endpoint not yet
  /// present. Throws DuplicateName for a repeated edge name and
  /// TypeMismatch when two distinct sets share an id.
  Diagram(std::string name, std::vector<SetRef> objects, std::vector<FinMap> edges);
  static Diagram from_edges(std::string name, std::vector<FinMap> edges);

  const std::string& name() const noexcept { return name_; }
  const std::vector<SetRef>& objects() const noexcept { return objects_; }
  const std::vector<FinMap>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> edge_index(const std::string& name) const;
  const SetRef* object(const std::string& id) const;

 private:
  std::string name_;
  std::vector<SetRef> objects_;
  std::vector<FinMap> edges_;
};

/// A closed path of edge indices e₁,…,eₙ starting and ending at `base`.
struct Cycle {
  std::string base;
  std::vector<std::size_t> edges;

  std::size_t length() const { return edges.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Composite of the path, first edge applied first. Throws BrokenPath(i)
/// at the first edge that does not start where the previous one ended.
FinMap path_compose(const Diagram& d, const std::vector<std::size_t>& path);
FinMap path_compose(const Diagram& d, const std::vector<std::string>& path);

/// Closed paths without repeated edges, length 1..max_len, grouped by base
/// object in declaration order, each group in lexicographic edge order.
std::vector<Cycle> enumerate_cycles(const Diagram& d, std::size_t max_len);
std::vector<Cycle> enumerate_cycles_at(const Diagram& d, const std::string& base,
                                       std::size_t max_len);

struct Obstructor {
  FinMap e;
  bool is_identity = false;
  bool is_idempotent = false;
};

Obstructor obstructor(const Diagram& d, const Cycle& c);

struct Violation {
  std::string kind;  // "cycle", "parallel", "absorption"
  std::vector<std::size_t> path;
  std::vector<std::size_t> other;  // second path, or the absorbed edge
  std::optional<Index> element;    // first differing point
  std::string over;                // set id for `element`
};

struct DiagramVerdict {
  bool holds = true;
  std::vector<Violation> violations;
};

/// Every cycle composes to the identity and parallel paths agree. At most
/// one violation per class is reported.
DiagramVerdict is_commutative(const Diagram& d, std::size_t max_len);

/// f∘e = f for every cycle obstructor e at X and every edge f out of X.
DiagramVerdict is_semicommutative(const Diagram& d, std::size_t max_len);

struct ObstructionNumber {
  std::optional<std::size_t> n_obstr;
  std::optional<Cycle> witness;
};

/// Least cycle length ≤ max_n at `object` whose obstructor is not the
/// identity. Throws UnknownObject.
ObstructionNumber obstruction_number(const Diagram& d, const std::string& object,
                                     std::size_t max_n);

struct RegularThreeCycle {
  SetRef x, y, z;
  FinMap f, g, h;   // f: X→Y, g: Y→Z, h: Z→X
  FinMap e;         // h∘g∘f
};

/// f∘h∘g∘f = f.
bool is_regular_3cycle(const FinMap& f, const FinMap& g, const FinMap& h);
RegularThreeCycle make_3cycle(const FinMap& f, const FinMap& g, const FinMap& h);

/// Each closed edge triple is reported once, at the first rotation
/// (starting from its earliest-declared edge) satisfying f∘h∘g∘f = f.
std::vector<RegularThreeCycle> find_regular_3cycles(const Diagram& d);

/// f∘e₁ = e₂∘f for f: X₁→X₂. Throws TypeMismatch.
bool is_cycle_morphism(const FinMap& f, const RegularThreeCycle& c1,
                       const RegularThreeCycle& c2);

RegularThreeCycle product_3cycle(const RegularThreeCycle& c1, const RegularThreeCycle& c2);

struct FunctorData {
  Diagram source;
  Diagram target;
  std::map<std::string, std::string> object_map;
  std::map<std::string, std::string> edge_map;
};

struct FunctorViolation {
  std::string kind;  // "composition" or "obstructor"
  std::vector<std::size_t> source_path;
  // composition: the named composite; obstructor: the edge a with
  // a∘e = a whose image fails to absorb (none when e = Id was lost)
  std::optional<std::size_t> source_edge;
};

struct FunctorVerdict {
  bool composition_preserved = true;
  bool e_preserved = true;
  std::vector<FunctorViolation> violations;
  std::size_t cycles_checked = 0;
};

/// composition: whenever b∘a equals a named source edge c, F(b)∘F(a) = F(c).
/// obstructors: for every source cycle of length ≤ n with obstructor e, the
/// mapped cycle's obstructor e' keeps the relations of e: e = Id gives
/// e' = Id, and a∘e = a (a an edge out of the base) gives F(a)∘e' = F(a).
/// With n = 1 this is identity preservation. Throws IncompatibleEdgeMap.
FunctorVerdict check_regular_functor(const FunctorData& fd, std::size_t n);

}  // namespace regcat
