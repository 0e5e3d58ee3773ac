#include "betadyn/universal.hpp"

#include <map>
#include <random>
#include <vector>

#include "betadyn/error.hpp"
#include "betadyn/markov.hpp"

namespace betadyn {

bool contains_all_blocks(const DigitWord& w, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "block length must be positive");
  if (k > 24) throw Error(ErrorKind::BudgetExceeded, "block length too large to enumerate");
  if (w.size() < k) return false;
  const std::size_t total = std::size_t{1} << k;
  std::vector<bool> seen(total, false);
  std::size_t found = 0, code = 0;
  const std::size_t mask = total - 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    code = ((code << 1) | static_cast<std::size_t>(w[i])) & mask;
    if (i + 1 >= k && !seen[code]) {
      seen[code] = true;
      if (++found == total) return true;
    }
  }
  return false;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::InF: return "InF";
    case Verdict::NotInF: return "NotInF";
    case Verdict::InE_depth: return "InE_depth";
    case Verdict::NotInE: return "NotInE";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

Membership membership(const BetaDynamics& dyn, const FieldElement& x, int N, std::size_t depth,
                      std::size_t greedy_steps, std::size_t node_budget) {
  if (!dyn.in_domain(x)) throw Error(ErrorKind::OutOfDomain, "x outside [0, (beta-1)^-1]");
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "hole depth must be positive");
  const FieldElement h = hole_endpoint(dyn, N);
  auto in_hole = [&](const FieldElement& y) { return (h - y).sign() >= 0; };
  Membership out;

  {
    std::map<FieldElement, bool, RepresentationLess> seen;
    FieldElement y = x;
    DigitWord word;
    out.f.verdict = Verdict::Unknown;
    for (std::size_t step = 0;; ++step) {
      if (in_hole(y)) {
        out.f = {Verdict::NotInF, step, word};
        break;
      }
      if (!seen.emplace(y, true).second) {
        out.f = {Verdict::InF, step, std::nullopt};
        break;
      }
      if (step == greedy_steps) {
        out.f = {Verdict::Unknown, step, std::nullopt};
        break;
      }
      const int d = dyn.greedy_digit(y);
      word.digits.push_back(d);
      y = dyn.apply(y, d);
    }
  }

  {
    out.e = {Verdict::InE_depth, depth, std::nullopt};
    if (in_hole(x)) {
      out.e = {Verdict::NotInE, 0, DigitWord{}};
      return out;
    }
    std::map<FieldElement, bool, RepresentationLess> visited;
    visited.emplace(x, true);
    std::vector<std::pair<FieldElement, DigitWord>> level{{x, DigitWord{}}};
    std::size_t nodes = 1;
    for (std::size_t len = 1; len <= depth && !level.empty(); ++len) {
      std::vector<std::pair<FieldElement, DigitWord>> next;
      for (const auto& [y, word] : level) {
        for (int d : {0, 1}) {
          if (!dyn.admissible(y, d)) continue;
          FieldElement z = dyn.apply(y, d);
          DigitWord w = word;
          w.digits.push_back(d);
          if (in_hole(z)) {
            out.e = {Verdict::NotInE, len, w};
            return out;
          }
          if (!visited.emplace(z, true).second) continue;
          if (++nodes > node_budget) throw Error(ErrorKind::BudgetExceeded, "branch search exceeds the node budget");
          next.emplace_back(std::move(z), std::move(w));
        }
      }
      level = std::move(next);
    }
  }
  return out;
}

DigitWord pD_sampler(int n, int N, std::size_t length, std::uint64_t seed) {
  if (N < n + 2) throw Error(ErrorKind::EmptyGapSet, "gap set {n+1, ..., N-1} is empty");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gap(n + 1, N - 1);
  DigitWord w;
  int next_gap = N - 1;
  while (w.size() < length) {
    w.digits.push_back(1);
    for (int i = 0; i < next_gap && w.size() < length; ++i) w.digits.push_back(0);
    next_gap = gap(rng);
  }
  w.digits.resize(length);
  return w;
}

}  // namespace betadyn
