#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "betadyn/expansion.hpp"

namespace betadyn {

// True iff every 0/1 block of length k is a factor of w.
bool contains_all_blocks(const DigitWord& w, std::size_t k);

enum class Verdict { InF, NotInF, InE_depth, NotInE, Unknown };
std::string_view to_string(Verdict v);

struct MembershipCertificate {
  Verdict verdict = Verdict::Unknown;
  std::size_t depth = 0;
  std::optional<DigitWord> witness;  // T_witness(x) lies in the hole
};

struct Membership {
  MembershipCertificate f;  // greedy orbit
  MembershipCertificate e;  // every branch of the random map
};

// F: the greedy orbit is followed until it enters the hole or repeats a point,
// which makes the verdict absolute; Unknown after `greedy_steps` otherwise.
// E: all branch words up to `depth` are searched; NotInE comes with the shortest,
// then lexicographically least, word driving x into the hole.
Membership membership(const BetaDynamics& dyn, const FieldElement& x, int N, std::size_t depth,
                      std::size_t greedy_steps = 100000, std::size_t node_budget = kDefaultNodeBudget);

// Prefix of length `length` of 1 0^{i_1} 1 0^{i_2} ... with n+1 <= i_k <= N-1 and i_1 = N-1.
DigitWord pD_sampler(int n, int N, std::size_t length, std::uint64_t seed);

}  // namespace betadyn
