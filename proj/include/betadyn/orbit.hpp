#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "betadyn/expansion.hpp"

namespace betadyn {

struct OrbitTransition {
  std::size_t from;
  int digit;
  std::size_t to;

  friend bool operator==(const OrbitTransition&, const OrbitTransition&) = default;
  friend auto operator<=>(const OrbitTransition&, const OrbitTransition&) = default;
};

// Closure of a point under every admissible branch of the random map, with
// points sorted by value.
struct OrbitSet {
  std::vector<FieldElement> points;
  // Minimal number of steps from the seed to each point.
  std::vector<std::size_t> depth;
  std::vector<OrbitTransition> transitions;
  std::size_t seed_index = 0;
  // C = max{(beta-1)^-1, (b^-1 max|a_i| + 1)/(1 - eta)}, rounded up.
  Rational bound;
  // Bound valid for the first d steps, where beta_j^(n-i) with n < i exceeds 1
  // and the constant above does not apply.
  Rational early_bound;

  std::optional<std::size_t> index_of(const FieldElement& x) const;
  bool contains(const FieldElement& x) const { return index_of(x).has_value(); }
};

inline constexpr std::size_t kDefaultOrbitBudget = 1'000'000;

// Requires a Pisot base; throws NotPisot otherwise and BudgetExceeded when the
// closure grows beyond `cap` points.
OrbitSet orbit_set(const BetaDynamics& dyn, const FieldElement& x, std::size_t cap = kDefaultOrbitBudget);

struct EndpointOrbit {
  DigitWord word;     // cylinder word; empty for the whole interval
  bool right = false; // right endpoint f_w((beta-1)^-1) instead of left f_w(0)
  FieldElement seed;
  OrbitSet orbit;
};

// Orbits of both endpoints of every cylinder f_w([0,(beta-1)^-1]) with |w| <= max_len,
// plus the orbit of (beta-1)^-1 - 1. Duplicate seeds are kept once, first occurrence wins.
std::vector<EndpointOrbit> endpoint_orbits(const BetaDynamics& dyn, std::size_t max_len,
                                           std::size_t cap = kDefaultOrbitBudget);

// Union of the points of several orbit sets, sorted by value.
std::vector<FieldElement> union_points(const std::vector<EndpointOrbit>& orbits);

// Sorts by real value and drops duplicates.
void sort_unique(std::vector<FieldElement>& points);

}  // namespace betadyn
