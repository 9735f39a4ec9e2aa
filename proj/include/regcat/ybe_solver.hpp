#pragma once

// Exhaustive pruned search for solutions (B, e) of the set-theoretic
// Yang-Baxter equation on a single carrier, classical or regularized.

#include <cstdint>
#include <optional>
#include <vector>

#include "regcat/braiding.hpp"

namespace regcat {

enum class ObstructorChoice { identity, all, given };

struct YbeProblem {
  std::size_t size = 2;  // |X|; the carrier is {0, …, size-1}
  YbeMode mode = YbeMode::regular;
  ObstructorChoice obstructors = ObstructorChoice::identity;
  std::vector<Index> given_e;  // used with ObstructorChoice::given
  bool require_bijective = false;
  bool require_symmetric = false;  // B∘B = Id on X⊗X
};

struct YbeSolverOptions {
  unsigned jobs = 1;
  bool count_only = false;
  std::optional<std::uint64_t> limit;  // stop after this many solutions
  std::size_t max_size = 3;
};

struct YbeSolution {
  std::vector<Index> e;  // endomap of X
  std::vector<Index> b;  // map X⊗X → X⊗X, row-major
  friend auto operator<=>(const YbeSolution&, const YbeSolution&) = default;
};

struct YbeSolveResult {
  SetRef carrier;
  std::vector<YbeSolution> solutions;  // sorted by (e, b); empty when count_only
  std::uint64_t count = 0;
  bool truncated = false;
  std::uint64_t nodes = 0;  // search nodes visited
};

/// Throws CarrierTooLarge beyond options.max_size, NotIdempotent for a
/// given non-idempotent e, InvalidArgument for a non-identity e in
/// classical mode. Output is identical for every value of options.jobs.
YbeSolveResult solve_ybe(const YbeProblem& problem, const YbeSolverOptions& options = {});

Braiding solution_braiding(const SetRef& carrier, const YbeSolution& s);
FinMap solution_obstructor(const SetRef& carrier, const YbeSolution& s);

}  // namespace regcat
