#include "betadyn/expansion.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "betadyn/error.hpp"

namespace betadyn {

DigitWord::DigitWord(std::vector<int> d) : digits(std::move(d)) {
  for (int v : digits)
    if (v != 0 && v != 1) throw Error(ErrorKind::InvalidArgument, "digits must be 0 or 1");
}

DigitWord DigitWord::parse(std::string_view text) {
  std::vector<int> d;
  d.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw Error(ErrorKind::InvalidArgument, "digit word must be a 0/1 string");
    d.push_back(c - '0');
  }
  return DigitWord(std::move(d));
}

std::string DigitWord::str() const {
  std::string s;
  s.reserve(digits.size());
  for (int v : digits) s.push_back(static_cast<char>('0' + v));
  return s;
}

bool DigitWord::contains_zero_run(std::size_t count) const {
  if (count == 0) return true;
  std::size_t run = 0;
  for (int v : digits) {
    run = (v == 0) ? run + 1 : 0;
    if (run >= count) return true;
  }
  return false;
}

DigitWord concat(const DigitWord& a, const DigitWord& b) {
  DigitWord out = a;
  out.digits.insert(out.digits.end(), b.digits.begin(), b.digits.end());
  return out;
}

// ---------------------------------------------------------------------------

DigitStream::DigitStream(DigitWord preperiod, DigitWord period) : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) per_.digits = {0};
  const std::size_t n = per_.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < n && repeats; ++i) repeats = per_[i] == per_[i - p];
    if (repeats) {
      per_.digits.resize(p);
      break;
    }
  }
  while (!pre_.empty() && pre_.digits.back() == per_.digits.back()) {
    pre_.digits.pop_back();
    std::rotate(per_.digits.rbegin(), per_.digits.rbegin() + 1, per_.digits.rend());
  }
}

DigitStream DigitStream::parse(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw Error(ErrorKind::InvalidArgument, "digit stream must look like preperiod(period)");
  return DigitStream(DigitWord::parse(text.substr(0, open)),
                     DigitWord::parse(text.substr(open + 1, text.size() - open - 2)));
}

int DigitStream::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

DigitWord DigitStream::prefix(std::size_t n) const {
  std::vector<int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = at(i);
  return DigitWord(std::move(d));
}

std::string DigitStream::str() const { return pre_.str() + "(" + per_.str() + ")"; }

std::strong_ordering compare_tail(const DigitStream& a, std::size_t shift, const DigitStream& b) {
  const std::size_t pre_a = a.preperiod().size() > shift ? a.preperiod().size() - shift : 0;
  const std::size_t limit = std::max(pre_a, b.preperiod().size()) + std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < limit; ++i) {
    const int x = a.at(shift + i);
    const int y = b.at(i);
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

BetaDynamics::BetaDynamics(NumberField field)
    : field_(std::move(field)),
      switch_lo_(field_.beta_power(-1)),
      switch_hi_(field_.max_point().div_by_beta()),
      max_(field_.max_point()) {}

bool BetaDynamics::in_domain(const FieldElement& x) const { return x.sign() >= 0 && (max_ - x).sign() >= 0; }

bool BetaDynamics::in_switch_region(const FieldElement& x) const {
  return (x - switch_lo_).sign() >= 0 && (switch_hi_ - x).sign() >= 0;
}

bool BetaDynamics::admissible(const FieldElement& x, int digit) const {
  if (digit == 0) return (switch_hi_ - x).sign() >= 0;
  if (digit == 1) return (x - switch_lo_).sign() >= 0;
  return false;
}

int BetaDynamics::greedy_digit(const FieldElement& x) const { return (x - switch_lo_).sign() >= 0 ? 1 : 0; }

FieldElement BetaDynamics::apply(const FieldElement& x, int digit) const {
  FieldElement y = x.mul_by_beta();
  if (digit == 1) y = y - field_.one();
  return y;
}

FieldElement BetaDynamics::step(const FieldElement& x, int digit) const {
  if (digit != 0 && digit != 1) throw Error(ErrorKind::InvalidArgument, "digit must be 0 or 1");
  if (!in_domain(x)) throw Error(ErrorKind::OutOfDomain, "point outside [0, (beta-1)^-1]");
  if (!admissible(x, digit))
    throw Error(ErrorKind::InadmissibleDigit, "digit " + std::to_string(digit) + " not admissible at this point");
  return apply(x, digit);
}

FieldElement BetaDynamics::apply_word(const FieldElement& x, const DigitWord& w) const {
  FieldElement y = x;
  for (int d : w.digits) y = step(y, d);
  return y;
}

// ---------------------------------------------------------------------------

FieldElement stream_value(const NumberField& field, const DigitStream& s) {
  const auto& pre = s.preperiod().digits;
  const auto& per = s.period().digits;
  const FieldElement shift = field.beta_power(-static_cast<int>(pre.size()));
  // per^inf = per * (1 - beta^-p)^-1
  const FieldElement cycle = field.from_digits(per) * (field.one() - field.beta_power(-static_cast<int>(per.size()))).inverse();
  return field.from_digits(pre) + shift * cycle;
}

DigitWord greedy_expand(const BetaDynamics& dyn, const FieldElement& x, std::size_t len) {
  if (!dyn.in_domain(x)) throw Error(ErrorKind::OutOfDomain, "point outside [0, (beta-1)^-1]");
  std::vector<int> digits;
  digits.reserve(len);
  FieldElement y = x;
  for (std::size_t i = 0; i < len; ++i) {
    const int d = dyn.greedy_digit(y);
    digits.push_back(d);
    y = dyn.apply(y, d);
  }
  return DigitWord(std::move(digits));
}

std::optional<DigitStream> greedy_stream(const BetaDynamics& dyn, const FieldElement& x, std::size_t max_steps) {
  if (!dyn.in_domain(x)) throw Error(ErrorKind::OutOfDomain, "point outside [0, (beta-1)^-1]");
  std::map<FieldElement, std::size_t, RepresentationLess> seen;
  std::vector<int> digits;
  FieldElement y = x;
  for (std::size_t i = 0; i <= max_steps; ++i) {
    auto [it, inserted] = seen.emplace(y, i);
    if (!inserted) {
      const std::size_t j = it->second;
      return DigitStream(DigitWord(std::vector<int>(digits.begin(), digits.begin() + static_cast<long>(j))),
                         DigitWord(std::vector<int>(digits.begin() + static_cast<long>(j), digits.end())));
    }
    const int d = dyn.greedy_digit(y);
    digits.push_back(d);
    y = dyn.apply(y, d);
  }
  return std::nullopt;
}

DigitWord quasi_greedy_of_one(const BetaDynamics& dyn, std::size_t len) {
  std::vector<int> digits;
  FieldElement y = dyn.field().one();
  for (std::size_t i = 0; i < len; ++i) {
    const int d = dyn.greedy_digit(y);
    digits.push_back(d);
    y = dyn.apply(y, d);
    if (y.is_zero()) {
      // Finite greedy expansion a_1..a_m of 1: the quasi-greedy one is (a_1..a_{m-1}0)^inf.
      std::vector<int> block(digits);
      block.back() = 0;
      return DigitStream(DigitWord{}, DigitWord(std::move(block))).prefix(len);
    }
  }
  return DigitWord(std::move(digits));
}

std::optional<DigitStream> quasi_greedy_stream(const BetaDynamics& dyn, std::size_t max_steps) {
  auto g = greedy_stream(dyn, dyn.field().one(), max_steps);
  if (!g) return std::nullopt;
  if (!g->eventually_zero()) return g;
  std::vector<int> block = g->preperiod().digits;
  block.back() = 0;
  return DigitStream(DigitWord{}, DigitWord(std::move(block)));
}

bool is_greedy(const DigitStream& a, const DigitStream& alpha) {
  const std::size_t horizon = a.preperiod().size() + a.period().size();
  for (std::size_t k = 1; k <= horizon; ++k) {
    if (a.at(k - 1) != 0) continue;
    if (compare_tail(a, k, alpha) != std::strong_ordering::less) return false;
  }
  return true;
}

Tri is_greedy(const DigitWord& a, const DigitWord& alpha_prefix) {
  bool unknown = false;
  const std::size_t n = a.size();
  for (std::size_t k = 1; k <= n; ++k) {
    if (a[k - 1] != 0) continue;
    bool decided = false;
    for (std::size_t i = 0; k + i < n; ++i) {
      if (i >= alpha_prefix.size()) break;
      const int x = a[k + i];
      const int y = alpha_prefix[i];
      if (x == y) continue;
      if (x > y) return Tri::False;
      decided = true;
      break;
    }
    if (!decided) unknown = true;
  }
  return unknown ? Tri::Unknown : Tri::True;
}

Tri is_greedy(const DigitWord& a, const BetaDynamics& dyn) { return is_greedy(a, quasi_greedy_of_one(dyn, a.size())); }

bool is_greedy(const DigitStream& a, const BetaDynamics& dyn) {
  auto alpha = quasi_greedy_stream(dyn);
  if (!alpha) throw Error(ErrorKind::BudgetExceeded, "quasi-greedy expansion of 1 is not eventually periodic within budget");
  return is_greedy(a, *alpha);
}

DigitWord rewrite_normalize(const DigitWord& w, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "rewrite order must be positive");
  std::vector<int> d = w.digits;
  const std::size_t block = static_cast<std::size_t>(n) + 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + block <= d.size(); ++i) {
      if (d[i] != 0) continue;
      if (!std::all_of(d.begin() + static_cast<long>(i + 1), d.begin() + static_cast<long>(i + block),
                       [](int v) { return v == 1; }))
        continue;
      d[i] = 1;
      std::fill(d.begin() + static_cast<long>(i + 1), d.begin() + static_cast<long>(i + block), 0);
      changed = true;
      break;
    }
  }
  return DigitWord(std::move(d));
}

DigitWord apply_lazy_rewrite(const DigitWord& w, int n, std::size_t pos) {
  const std::size_t block = static_cast<std::size_t>(n) + 1;
  if (n < 1 || pos + block > w.size()) throw Error(ErrorKind::IndexOutOfRange, "rewrite block out of range");
  if (w[pos] != 1 || std::any_of(w.digits.begin() + static_cast<long>(pos + 1),
                                 w.digits.begin() + static_cast<long>(pos + block), [](int v) { return v != 0; }))
    throw Error(ErrorKind::InvalidArgument, "no factor 1 0^n at the given position");
  std::vector<int> d = w.digits;
  d[pos] = 0;
  std::fill(d.begin() + static_cast<long>(pos + 1), d.begin() + static_cast<long>(pos + block), 1);
  return DigitWord(std::move(d));
}

namespace {

void explore(const BetaDynamics& dyn, const FieldElement& y, std::size_t depth, std::vector<int>& prefix,
             std::vector<BranchPath>& out, std::size_t& nodes, std::size_t budget) {
  if (++nodes > budget) throw Error(ErrorKind::DepthLimit, "branch tree exceeds the node budget");
  if (prefix.size() == depth) {
    out.push_back({DigitWord(prefix), y});
    return;
  }
  for (int d : {0, 1}) {
    if (!dyn.admissible(y, d)) continue;
    prefix.push_back(d);
    explore(dyn, dyn.apply(y, d), depth, prefix, out, nodes, budget);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<BranchPath> branch_expansions(const BetaDynamics& dyn, const FieldElement& x, std::size_t depth,
                                          std::size_t node_budget) {
  if (!dyn.in_domain(x)) throw Error(ErrorKind::OutOfDomain, "point outside [0, (beta-1)^-1]");
  std::vector<BranchPath> out;
  std::vector<int> prefix;
  std::size_t nodes = 0;
  explore(dyn, x, depth, prefix, out, nodes, node_budget);
  return out;
}

}  // namespace betadyn
