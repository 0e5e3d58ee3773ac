#include "betadyn/markov.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "betadyn/error.hpp"
#include "betadyn/orbit.hpp"

namespace betadyn {

namespace {

std::optional<std::size_t> find_breakpoint(const std::vector<FieldElement>& bps, const FieldElement& x) {
  auto it = std::lower_bound(bps.begin(), bps.end(), x, [](const FieldElement& a, const FieldElement& b) { return a < b; });
  if (it != bps.end() && *it == x) return static_cast<std::size_t>(it - bps.begin());
  return std::nullopt;
}

bool is_golden(const NumberField& f) { return f.minpoly() == nbonacci_polynomial(2); }

}  // namespace

std::vector<std::size_t> MarkovPartition::locate(const FieldElement& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (breakpoints[i] <= x && x <= breakpoints[i + 1]) out.push_back(i);
  return out;
}

std::string AdjacencyMatrix::to_grid() const {
  std::ostringstream os;
  for (const auto& row : entries) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
  return os.str();
}

FieldElement hole_endpoint(const BetaDynamics& dyn, int N) {
  return dyn.max_point() * dyn.field().beta_power(-N);
}

MarkovPartition partition_from_breakpoints(const BetaDynamics& dyn, std::vector<FieldElement> bps, int N) {
  sort_unique(bps);
  const auto& f = dyn.field();
  if (bps.size() < 2 || !(bps.front() == f.zero()) || !(bps.back() == dyn.max_point()))
    throw Error(ErrorKind::NotMarkov, "breakpoints must start at 0 and end at (beta-1)^-1");
  MarkovPartition p{.breakpoints = {}, .branch = {}, .images = {}, .hole = {}, .hole_endpoint = hole_endpoint(dyn, N), .hole_depth = N};
  const std::size_t m = bps.size() - 1;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& lo = bps[i];
    const auto& hi = bps[i + 1];
    int digit;
    if ((hi - dyn.switch_lo()).sign() <= 0) {
      digit = 0;
    } else if ((lo - dyn.switch_lo()).sign() >= 0) {
      digit = 1;
    } else {
      throw Error(ErrorKind::NotMarkov, "interval straddles beta^-1");
    }
    const auto a = find_breakpoint(bps, dyn.apply(lo, digit));
    const auto b = find_breakpoint(bps, dyn.apply(hi, digit));
    if (!a || !b) throw Error(ErrorKind::NotMarkov, "image endpoint of interval " + std::to_string(i) + " is not a breakpoint");
    std::vector<std::size_t> targets;
    for (std::size_t j = *a; j < *b; ++j) targets.push_back(j);
    p.branch.push_back(digit);
    p.images.push_back(std::move(targets));
  }
  const auto h = find_breakpoint(bps, p.hole_endpoint);
  if (!h) throw Error(ErrorKind::NotMarkov, "hole endpoint is not a breakpoint");
  for (std::size_t i = 0; i < *h; ++i) p.hole.push_back(i);
  p.breakpoints = std::move(bps);
  return p;
}

std::vector<FieldElement> explicit_breakpoints(const BetaDynamics& dyn, int N) {
  std::vector<FieldElement> bps{dyn.field().zero()};
  for (int k = N; k >= 1; --k) bps.push_back(hole_endpoint(dyn, k));
  bps.push_back(dyn.max_point());
  return bps;
}

std::vector<FieldElement> closure_breakpoints(const BetaDynamics& dyn, int N, std::size_t cap) {
  const auto& f = dyn.field();
  std::map<FieldElement, bool, RepresentationLess> seen;
  std::deque<FieldElement> work;
  auto push = [&](const FieldElement& x) {
    if (seen.emplace(x, true).second) {
      if (seen.size() > cap) throw Error(ErrorKind::BudgetExceeded, "breakpoint closure exceeded the budget");
      work.push_back(x);
    }
  };
  push(f.zero());
  push(dyn.switch_lo());
  push(dyn.max_point());
  push(hole_endpoint(dyn, N));
  while (!work.empty()) {
    const FieldElement x = work.front();
    work.pop_front();
    const int s = (x - dyn.switch_lo()).sign();
    if (s <= 0) push(dyn.apply(x, 0));
    if (s >= 0) push(dyn.apply(x, 1));
  }
  std::vector<FieldElement> out;
  for (const auto& [x, unused] : seen) out.push_back(x);
  sort_unique(out);
  return out;
}

MarkovPartition build_partition(const BetaDynamics& dyn, int N, std::size_t cap) {
  if (N < 3) throw Error(ErrorKind::InvalidArgument, "hole depth N must be at least 3");
  if (is_golden(dyn.field())) {
    auto p = partition_from_breakpoints(dyn, explicit_breakpoints(dyn, N), N);
    p.construction = MarkovPartition::Construction::Explicit;
    return p;
  }
  if (!is_pisot(dyn.field()).is_pisot) throw Error(ErrorKind::NotPisot, "general partition construction needs a Pisot base");
  auto p = partition_from_breakpoints(dyn, closure_breakpoints(dyn, N, cap), N);
  p.construction = MarkovPartition::Construction::OrbitClosure;
  return p;
}

AdjacencyMatrix adjacency(const MarkovPartition& p) {
  const std::size_t m = p.interval_count();
  AdjacencyMatrix s{std::vector<std::vector<int>>(m, std::vector<int>(m, 0))};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j : p.images[i]) s.entries[i][j] = 1;
  return s;
}

AdjacencyMatrix delete_states(const AdjacencyMatrix& s, const std::vector<std::size_t>& states) {
  std::vector<bool> drop(s.size(), false);
  for (std::size_t k : states) {
    if (k >= s.size()) throw Error(ErrorKind::IndexOutOfRange, "state " + std::to_string(k) + " out of range");
    drop[k] = true;
  }
  AdjacencyMatrix out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (drop[i]) continue;
    std::vector<int> row;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (!drop[j]) row.push_back(s(i, j));
    out.entries.push_back(std::move(row));
  }
  return out;
}

AdjacencyMatrix delete_hole(const AdjacencyMatrix& s, std::size_t hole) { return delete_states(s, {hole}); }

std::optional<DigitWord> gd_witness(const BetaDynamics& dyn, int N, std::size_t p_max, std::size_t node_budget) {
  if (N < 3) throw Error(ErrorKind::InvalidArgument, "hole depth N must be at least 3");
  const FieldElement h = hole_endpoint(dyn, N);
  std::map<FieldElement, bool, RepresentationLess> visited;
  visited.emplace(h, true);
  // Each level is kept in lexicographic order of its words, so the first hit is
  // the least word of minimal length.
  std::vector<std::pair<FieldElement, DigitWord>> level{{h, DigitWord{}}};
  std::size_t nodes = 1;
  for (std::size_t len = 1; len <= p_max && !level.empty(); ++len) {
    std::vector<std::pair<FieldElement, DigitWord>> next;
    for (const auto& [x, word] : level) {
      for (int d : {0, 1}) {
        if (!dyn.admissible(x, d)) continue;
        FieldElement y = dyn.apply(x, d);
        DigitWord w = word;
        w.digits.push_back(d);
        if (y.sign() > 0 && (h - y).sign() > 0) return w;
        if (!visited.emplace(y, true).second) continue;
        if (++nodes > node_budget) throw Error(ErrorKind::DepthLimit, "witness search exceeds the node budget");
        next.emplace_back(std::move(y), std::move(w));
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

}  // namespace betadyn
