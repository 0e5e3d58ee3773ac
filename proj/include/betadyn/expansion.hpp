#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betadyn/number_field.hpp"

namespace betadyn {

// Finite word over {0,1}.
struct DigitWord {
  std::vector<int> digits;

  DigitWord() = default;
  explicit DigitWord(std::vector<int> d);
  static DigitWord parse(std::string_view text);

  std::size_t size() const { return digits.size(); }
  bool empty() const { return digits.empty(); }
  int operator[](std::size_t i) const { return digits[i]; }
  std::string str() const;
  // Whether the word contains `count` consecutive zeros.
  bool contains_zero_run(std::size_t count) const;

  friend bool operator==(const DigitWord&, const DigitWord&) = default;
  friend auto operator<=>(const DigitWord&, const DigitWord&) = default;
};

DigitWord concat(const DigitWord& a, const DigitWord& b);

// Eventually periodic sequence preperiod.period^inf in canonical (shortest) form.
// Eventually-zero sequences use the period "0".
class DigitStream {
 public:
  DigitStream(DigitWord preperiod, DigitWord period);
  // "11(0)" style.
  static DigitStream parse(std::string_view text);

  const DigitWord& preperiod() const { return pre_; }
  const DigitWord& period() const { return per_; }
  int at(std::size_t i) const;
  DigitWord prefix(std::size_t n) const;
  bool eventually_zero() const { return per_.digits == std::vector<int>{0}; }
  std::string str() const;

  friend bool operator==(const DigitStream&, const DigitStream&) = default;

 private:
  DigitWord pre_;
  DigitWord per_;
};

// Lexicographic comparison of sigma^shift(a) with b; exact for eventually periodic streams.
std::strong_ordering compare_tail(const DigitStream& a, std::size_t shift, const DigitStream& b);

enum class Tri { False, True, Unknown };
std::string_view to_string(Tri t);

// The maps T_0(x) = beta x and T_1(x) = beta x - 1 on [0, (beta-1)^-1], with
// the switch region [beta^-1, beta^-1 (beta-1)^-1] where both digits apply.
// Endpoints of the switch region admit both digits.
class BetaDynamics {
 public:
  explicit BetaDynamics(NumberField field);

  const NumberField& field() const { return field_; }
  const FieldElement& switch_lo() const { return switch_lo_; }
  const FieldElement& switch_hi() const { return switch_hi_; }
  const FieldElement& max_point() const { return max_; }

  bool in_domain(const FieldElement& x) const;
  bool in_switch_region(const FieldElement& x) const;
  bool admissible(const FieldElement& x, int digit) const;
  // Greedy choice: 1 whenever x >= beta^-1.
  int greedy_digit(const FieldElement& x) const;

  // T_d(x) with domain and admissibility checks.
  FieldElement step(const FieldElement& x, int digit) const;
  // T_d(x) without checks.
  FieldElement apply(const FieldElement& x, int digit) const;
  // T_{w}(x) = T_{w_n} o ... o T_{w_1}(x), each step checked.
  FieldElement apply_word(const FieldElement& x, const DigitWord& w) const;

 private:
  NumberField field_;
  FieldElement switch_lo_;
  FieldElement switch_hi_;
  FieldElement max_;
};

// Exact value sum a_i beta^-i of an eventually periodic stream.
FieldElement stream_value(const NumberField& field, const DigitStream& s);

DigitWord greedy_expand(const BetaDynamics& dyn, const FieldElement& x, std::size_t len);

// Exact greedy expansion as an eventually periodic stream, found by detecting a
// repeated orbit point. nullopt if no repeat appears within `max_steps`.
std::optional<DigitStream> greedy_stream(const BetaDynamics& dyn, const FieldElement& x,
                                         std::size_t max_steps = 100000);

DigitWord quasi_greedy_of_one(const BetaDynamics& dyn, std::size_t len);
std::optional<DigitStream> quasi_greedy_stream(const BetaDynamics& dyn, std::size_t max_steps = 100000);

// Parry's criterion: for every k with a_k = 0, sigma^k(a) < alpha.
bool is_greedy(const DigitStream& a, const DigitStream& alpha);
// Truncated form: Unknown when some comparison runs off the end of the word.
Tri is_greedy(const DigitWord& a, const DigitWord& alpha_prefix);
// Uses the exact quasi-greedy stream when it is available.
Tri is_greedy(const DigitWord& a, const BetaDynamics& dyn);
bool is_greedy(const DigitStream& a, const BetaDynamics& dyn);

// Repeatedly replaces the leftmost factor 0 1^n by 1 0^n. Value-preserving in
// the n-bonacci base.
DigitWord rewrite_normalize(const DigitWord& w, int n);
// Replaces the factor 1 0^n starting at `pos` by 0 1^n.
DigitWord apply_lazy_rewrite(const DigitWord& w, int n, std::size_t pos);

struct BranchPath {
  DigitWord word;
  FieldElement end;  // T_word(x)
};

inline constexpr std::size_t kDefaultNodeBudget = std::size_t{1} << 22;

// Every digit word of length `depth` realizable by some branch sequence of the
// random transformation, sorted lexicographically.
std::vector<BranchPath> branch_expansions(const BetaDynamics& dyn, const FieldElement& x, std::size_t depth,
                                          std::size_t node_budget = kDefaultNodeBudget);

}  // namespace betadyn
