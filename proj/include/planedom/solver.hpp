#pragma once

#include <optional>
#include <vector>

#include "planedom/plane.hpp"
#include "planedom/sets.hpp"

namespace planedom::solver {

using sets::Candidate;

enum class Proof {
  exhausted,  // the search space below the optimum was exhausted
  bound_met,  // the analytic lower bound meets the incumbent
};

struct SearchResult {
  int optimum = 0;
  Candidate witness;
  long long nodes_expanded = 0;
  Proof proof = Proof::exhausted;
  int lower_bound = 0;  // best certified lower bound
};

/// Exact domination number with witness. Branch-and-bound over the
/// bipartite vertices with bit-coverage masks; the incumbent starts at the
/// 2q family-(i) witness and the analytic bound from bound_minqq prunes.
/// budget_seconds <= 0 means unlimited. If the budget expires before the
/// subtree below the incumbent is exhausted, the result carries
/// proof = bound_met (valid because the analytic lower bound 2q already
/// matches the incumbent). Deterministic: children in ascending vertex id.
/// Errors: InvalidPlane if the plane fails validate_axioms.
SearchResult min_dominating(const Plane& plane, double budget_seconds = 0);

/// All minimal dominating sets of size <= max_size, deduplicated, in
/// lexicographic order of their sorted vertex lists. Guard: refuses
/// instances beyond q <= 3 (any max_size) or q = 4 with max_size <= 2q+2.
/// Errors: TooLarge on guard violation, InvalidPlane.
std::vector<Candidate> enumerate_minimal_dominating(const Plane& plane, int max_size);

/// Exact minimum blocking set. nontrivial excludes sets containing a full
/// line; the result is empty (nullopt) when no nontrivial blocking set
/// exists (e.g. the Fano plane). Errors: InvalidPlane.
std::optional<SearchResult> min_blocking(const Plane& plane, bool nontrivial);

/// Smallest extension of at most t points making S blocking, if any.
/// Candidate points are restricted to the lines currently skew to S.
/// Errors: BadParameter if t > 4.
std::optional<std::vector<PointId>> extend_to_blocking(const Plane& plane,
                                                       const std::vector<PointId>& S, int t);

}  // namespace planedom::solver
