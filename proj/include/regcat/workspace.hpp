#pragma once

// The workspace language: declarations of sets, maps, diagrams and
// braidings in one text file.
//
//   set X = { a, b, c }
//   map f : X -> Y { a -> p, b -> p, c -> q }
//   diagram D { f, g, h }
//   braiding B : X * Y { (a,p) -> (q,b), ... }
//
// '#' starts a comment that runs to the end of the line.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "regcat/braiding.hpp"
#include "regcat/diagrams.hpp"
#include "regcat/finmap.hpp"

namespace regcat {

struct Workspace {
  std::map<std::string, SetRef> sets;
  std::map<std::string, FinMap> maps;
  std::map<std::string, Diagram> diagrams;
  std::map<std::string, Braiding> braidings;

  const SetRef& set(const std::string& name) const;
  const FinMap& map(const std::string& name) const;
  const Diagram& diagram(const std::string& name) const;
  const Braiding& braiding(const std::string& name) const;

  bool empty() const {
    return sets.empty() && maps.empty() && diagrams.empty() && braidings.empty();
  }
};

/// Structural equality: same names, carriers, tables and diagram members.
bool operator==(const Workspace& a, const Workspace& b);

/// Errors: SyntaxError and UnknownReference with "line:col" in the
/// detail, DuplicateName, NotTotal ("map: element"), UnknownLabel,
/// DuplicateAssignment, DuplicateLabel.
Workspace parse_workspace(std::string_view source);

/// Canonical text: sets, maps, diagrams, braidings, each group sorted by
/// name, one assignment per line.
std::string render_workspace(const Workspace& w);

}  // namespace regcat
