#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "betadyn/expansion.hpp"

namespace betadyn {

// Closed intervals [breakpoints[i], breakpoints[i+1]] covering [0,(beta-1)^-1],
// each mapped by one greedy branch exactly onto a union of consecutive intervals.
// Neighbouring intervals share their endpoint.
struct MarkovPartition {
  enum class Construction { Explicit, OrbitClosure };

  std::vector<FieldElement> breakpoints;
  std::vector<int> branch;                        // digit applied on each interval
  std::vector<std::vector<std::size_t>> images;   // T_branch(A_i) = union of A_j, j in images[i]
  std::vector<std::size_t> hole;                  // intervals inside [0, hole_endpoint]
  FieldElement hole_endpoint;
  int hole_depth = 0;
  Construction construction = Construction::OrbitClosure;

  std::size_t interval_count() const { return breakpoints.size() - 1; }
  // Intervals containing x; a shared endpoint reports both neighbours.
  std::vector<std::size_t> locate(const FieldElement& x) const;
};

struct AdjacencyMatrix {
  std::vector<std::vector<int>> entries;

  std::size_t size() const { return entries.size(); }
  int operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
  // Rows of space-separated integers, one row per line.
  std::string to_grid() const;

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;
};

// Checks the Markov property for the given breakpoints and returns the partition;
// throws NotMarkov if a branch boundary or an image endpoint is not a breakpoint.
MarkovPartition partition_from_breakpoints(const BetaDynamics& dyn, std::vector<FieldElement> breakpoints, int N);

// Greedy-map partition with hole [0, beta^-N (beta-1)^-1], N >= 3. The golden base
// uses the closed-form breakpoints 0, beta^-k (beta-1)^-1 (k = N..1), (beta-1)^-1;
// every other Pisot base uses the closure of {0, beta^-1, (beta-1)^-1, hole endpoint}
// under the greedy branches (both one-sided branches at beta^-1).
MarkovPartition build_partition(const BetaDynamics& dyn, int N, std::size_t cap = 1'000'000);

// Breakpoints of the closed-form golden construction (any base; only Markov for golden).
std::vector<FieldElement> explicit_breakpoints(const BetaDynamics& dyn, int N);
std::vector<FieldElement> closure_breakpoints(const BetaDynamics& dyn, int N, std::size_t cap = 1'000'000);

AdjacencyMatrix adjacency(const MarkovPartition& p);

// Submatrix without row and column `hole` (0-based).
AdjacencyMatrix delete_hole(const AdjacencyMatrix& s, std::size_t hole);
AdjacencyMatrix delete_states(const AdjacencyMatrix& s, const std::vector<std::size_t>& states);

// Shortest, then lexicographically least, admissible word eta with
// T_eta(h) strictly inside (0, h) for h = beta^-N (beta-1)^-1.
std::optional<DigitWord> gd_witness(const BetaDynamics& dyn, int N, std::size_t p_max,
                                    std::size_t node_budget = kDefaultNodeBudget);

// Value of the hole endpoint beta^-N (beta-1)^-1.
FieldElement hole_endpoint(const BetaDynamics& dyn, int N);

}  // namespace betadyn
