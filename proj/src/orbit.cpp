#include "betadyn/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <map>
#include <stdexcept>

#include "betadyn/error.hpp"

namespace betadyn {

std::optional<std::size_t> OrbitSet::index_of(const FieldElement& x) const {
  auto it = std::lower_bound(points.begin(), points.end(), x, [](const FieldElement& a, const FieldElement& b) {
    return a < b;
  });
  if (it != points.end() && *it == x) return static_cast<std::size_t>(it - points.begin());
  return std::nullopt;
}

void sort_unique(std::vector<FieldElement>& points) {
  std::sort(points.begin(), points.end(), [](const FieldElement& a, const FieldElement& b) { return a < b; });
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

namespace {

std::complex<double> conjugate_value(const FieldElement& x, std::complex<double> conj) {
  std::complex<double> acc = 0;
  std::complex<double> p = 1;
  for (const auto& a : x.numerators()) {
    p /= conj;
    acc += a.get_d() * p;
  }
  return acc / x.denominator().get_d();
}

}  // namespace

OrbitSet orbit_set(const BetaDynamics& dyn, const FieldElement& x, std::size_t cap) {
  const auto& field = dyn.field();
  const auto pisot = is_pisot(field);
  if (!pisot.is_pisot) throw Error(ErrorKind::NotPisot, "orbit closure needs a Pisot base");
  if (!dyn.in_domain(x)) throw Error(ErrorKind::OutOfDomain, "point outside [0, (beta-1)^-1]");

  std::map<FieldElement, std::size_t, RepresentationLess> index;
  std::vector<FieldElement> found{x};
  std::vector<std::size_t> depth{0};
  std::vector<OrbitTransition> edges;
  index.emplace(x, 0);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (int d : {0, 1}) {
      if (!dyn.admissible(found[i], d)) continue;
      FieldElement y = dyn.apply(found[i], d);
      auto [it, inserted] = index.emplace(y, found.size());
      if (inserted) {
        if (found.size() >= cap)
          throw Error(ErrorKind::BudgetExceeded, "orbit closure exceeded " + std::to_string(cap) + " points");
        found.push_back(std::move(y));
        depth.push_back(depth[i] + 1);
        frontier.push_back(it->second);
      }
      edges.push_back({i, d, it->second});
    }
  }

  // Canonical order by value.
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
  std::vector<std::size_t> rank(found.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  OrbitSet out;
  for (std::size_t r = 0; r < order.size(); ++r) {
    out.points.push_back(found[order[r]]);
    out.depth.push_back(depth[order[r]]);
  }
  for (const auto& e : edges) out.transitions.push_back({rank[e.from], e.digit, rank[e.to]});
  std::sort(out.transitions.begin(), out.transitions.end());
  out.seed_index = rank[0];

  // Bounds on the conjugate coordinates.
  Integer amax(0);
  for (const auto& a : x.numerators()) amax = std::max(amax, Integer(abs(a)));
  const Rational coeff(amax, x.denominator());
  const Rational max_hi = dyn.max_point().enclosure(Rational(1, 1 << 20)).hi;
  const Rational tail = (coeff + 1) / (1 - pisot.eta_upper);
  out.bound = std::max(max_hi, tail);
  out.early_bound = out.bound;
  const int d = field.degree();
  if (d > 1) {
    Rational mu(1);
    for (const auto& disk : *field.conjugates()) mu = std::min(mu, disk.modulus_lower);
    if (mu > 0) {
      Rational geometric(0), inv(1);
      for (int i = 1; i <= d; ++i) {
        inv /= mu;
        geometric += inv;
      }
      out.early_bound = std::max(out.bound, Rational(coeff * geometric + 1 / (1 - pisot.eta_upper)));
    }
  }

  for (std::size_t i = 0; i < out.points.size(); ++i) {
    const auto& p = out.points[i];
    if (p.sign() < 0 || (dyn.max_point() - p).sign() < 0)
      throw std::logic_error("orbit point left the domain");
    if (d == 1) continue;
    const double limit = (out.depth[i] >= static_cast<std::size_t>(d) ? out.bound : out.early_bound).get_d();
    for (const auto& disk : *field.conjugates())
      if (std::abs(conjugate_value(p, disk.center)) > limit * (1 + 1e-9))
        throw std::logic_error("orbit point violates the conjugate bound");
  }
  return out;
}

std::vector<EndpointOrbit> endpoint_orbits(const BetaDynamics& dyn, std::size_t max_len, std::size_t cap) {
  const auto& field = dyn.field();
  std::vector<EndpointOrbit> out;
  std::map<FieldElement, bool, RepresentationLess> seen;
  auto add = [&](DigitWord word, bool right, FieldElement seed) {
    if (!seen.emplace(seed, true).second) return;
    auto orbit = orbit_set(dyn, seed, cap);
    out.push_back({std::move(word), right, std::move(seed), std::move(orbit)});
  };
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::size_t code = 0; code < (std::size_t{1} << len); ++code) {
      std::vector<int> d(len);
      for (std::size_t k = 0; k < len; ++k) d[k] = static_cast<int>((code >> (len - 1 - k)) & 1U);
      const DigitWord w(d);
      const FieldElement left = field.from_digits(d);
      add(w, false, left);
      add(w, true, left + dyn.max_point() * field.beta_power(-static_cast<int>(len)));
    }
  }
  add(DigitWord{}, false, dyn.max_point() - field.one());
  return out;
}

std::vector<FieldElement> union_points(const std::vector<EndpointOrbit>& orbits) {
  std::vector<FieldElement> all;
  for (const auto& o : orbits) all.insert(all.end(), o.orbit.points.begin(), o.orbit.points.end());
  sort_unique(all);
  return all;
}

}  // namespace betadyn
