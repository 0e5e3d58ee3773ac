// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "betadyn/dimension.hpp"
#include "betadyn/error.hpp"
#include "betadyn/markov.hpp"
#include "betadyn/orbit.hpp"
#include "betadyn/spectrum.hpp"
#include "betadyn/universal.hpp"

using namespace betadyn;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

// Largest root in [lo, hi] of a polynomial with double coefficients (constant first).
double bisect(const std::vector<double>& c, double lo, double hi) {
  auto f = [&](double x) {
    double v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
  };
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    ((f(mid) > 0) == (f(hi) > 0) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// Cofactor expansion over the integers, independent of the library routine.
Integer det(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    total += (j % 2 ? -1 : 1) * a[0][j] * det(minor);
  }
  return total;
}

BetaDynamics golden() { return BetaDynamics(NumberField::make(nbonacci_polynomial(2))); }

void c1(Outcome& o) {
  auto dyn = golden();
  const auto start = std::chrono::steady_clock::now();
  double worst = 0;
  for (int N = 3; N <= 12; ++N) {
    const auto p = build_partition(dyn, N);
    const auto pr = perron_root(delete_hole(adjacency(p), 0));
    const double closed = bisect([&] {
      std::vector<double> c(static_cast<std::size_t>(N), 0.0);
      for (int i = 0; i <= N - 3; ++i) c[static_cast<std::size_t>(i)] = -1;
      c[static_cast<std::size_t>(N - 1)] = 1;
      return c;
    }(), 0.5, 2.0);
    const double lib = solve_lambda_N(N).root_mid();
    worst = std::max({worst, std::abs(pr.root.midpoint().get_d() - closed), std::abs(pr.root.midpoint().get_d() - lib)});
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(worst <= 1e-9, "max deviation " + std::to_string(worst));
  o.require(secs < 5, "runtime " + std::to_string(secs) + " s");
  o.detail << (o.pass ? "" : "; ") << "max |perron - closed form| = " << worst << ", " << secs << " s";
}

void c2(Outcome& o) {
  auto dyn = golden();
  const auto p = build_partition(dyn, 3);
  const auto reduced = delete_hole(adjacency(p), 0);
  const auto pr = perron_root(reduced);
  o.require(pr.exact && pr.root.lo == 1, "Perron root not exactly 1");
  const auto d = survivor_dimension(dyn, 3);
  o.require(d.dimension.lo == 0 && d.dimension.hi == 0, "dimension not 0");
  // det(xI - S') at several integers against (x-1)^2 (x+1)
  const auto chi = characteristic_polynomial(reduced);
  for (int x = -3; x <= 3; ++x) {
    std::vector<std::vector<Integer>> m(3, std::vector<Integer>(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m[i][j] = (i == j ? x : 0) - reduced(i, j);
    const Integer expect = Integer((x - 1) * (x - 1) * (x + 1));
    o.require(det(m) == expect && chi(Rational(x)) == Rational(expect), "characteristic polynomial mismatch at x=" + std::to_string(x));
  }
  std::string grid = reduced.to_grid();
  grid.pop_back();
  for (auto& ch : grid)
    if (ch == '\n') ch = '/';
  o.detail << (o.pass ? "" : "; ") << "S' = " << grid << ", chi = " << chi.to_string();
}

void c3(Outcome& o) {
  double prev = -1;
  int first_above = 0;
  for (int N = 3; N <= 40; ++N) {
    const auto d = solve_lambda_N(N).dimension;
    o.require(d.mid() >= prev - 1e-12, "dimension decreases at N=" + std::to_string(N));
    if (!first_above && d.lo > 0.99) first_above = N;
    prev = d.mid();
  }
  o.require(first_above > 0, "never exceeds 0.99 for N <= 40");
  int tested = 0;
  for (int N = 4; N <= 40; ++N, ++tested) {
    const auto [lo, hi] = dim_bounds_E(2, N);
    o.require(lo.dimension.lo <= hi.dimension.hi, "bounds inverted for n=2 N=" + std::to_string(N));
  }
  for (int N = 4; N <= 9; ++N, ++tested) {
    const auto [lo, hi] = dim_bounds_E(3, N);
    o.require(lo.dimension.lo <= hi.dimension.hi, "bounds inverted for n=3 N=" + std::to_string(N));
  }
  o.detail << (o.pass ? "" : "; ") << "first N with dim > 0.99: " << first_above << ", " << tested << " bound pairs ordered";
}

void c4(Outcome& o) {
  for (int N : {2, 3, 4}) {
    // exact counts of binary words avoiding 0^N, by trailing zero run
    std::vector<Integer> count(static_cast<std::size_t>(N), 0);
    count[0] = 1;
    Integer prev_total = 1, total = 1;
    for (int L = 1; L <= 40; ++L) {
      std::vector<Integer> next(static_cast<std::size_t>(N), 0);
      for (int z = 0; z < N; ++z) {
        next[0] += count[static_cast<std::size_t>(z)];
        if (z + 1 < N) next[static_cast<std::size_t>(z + 1)] += count[static_cast<std::size_t>(z)];
      }
      count = next;
      prev_total = total;
      total = 0;
      for (const auto& c : count) total += c;
    }
    const double growth = Rational(total, prev_total).get_d();
    const double gamma = nbonacci_root(N).midpoint().get_d();
    o.require(std::abs(growth - gamma) < 1e-3, "growth mismatch for N=" + std::to_string(N));
    const auto d = doubling_hole_dimension(N).dimension;
    o.require(std::abs(d.mid() - std::log(gamma) / std::log(2.0)) < 1e-12, "dimension formula mismatch for N=" + std::to_string(N));
    o.detail << (o.pass ? "" : "; ") << "N=" << N << " growth " << growth << " dim " << d.mid() << " ";
  }
  o.require(std::abs(doubling_hole_dimension(2).dimension.mid() - 0.6942) < 1e-4, "N=2 value");
  o.require(std::abs(doubling_hole_dimension(3).dimension.mid() - 0.8792) < 1e-4, "N=3 value");
}

void c5(Outcome& o) {
  auto dyn = golden();
  const auto& f = dyn.field();
  const auto orbit = orbit_set(dyn, f.one());
  const std::vector<FieldElement> expect{f.zero(), f.beta_power(-1), f.one(), f.beta_power(1)};
  o.require(orbit.points == expect, "golden orbit of 1 is not {0, 1/beta, 1, beta}");

  BetaDynamics trib(NumberField::make(nbonacci_polynomial(3)));
  const auto t = orbit_set(trib, trib.field().one());
  std::size_t checked = 0;
  for (const auto* set : {&orbit, &t}) {
    const auto& field = set->points.front().field();
    const auto& disks = field.conjugates();
    if (!disks) {
      o.require(false, "conjugates unavailable");
      continue;
    }
    const double limit = std::max(set->bound, set->early_bound).get_d();
    for (const auto& p : set->points) {
      for (const auto& disk : *disks) {
        std::complex<double> v = 0, zinv = 1.0 / disk.center, pw = 1;
        for (const auto& a : p.numerators()) {
          pw *= zinv;
          v += a.get_d() * pw;
        }
        v /= p.denominator().get_d();
        o.require(std::abs(v) <= limit, "conjugate bound violated");
        ++checked;
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << "golden orbit size " << orbit.points.size() << ", tribonacci orbit size " << t.points.size()
           << ", " << checked << " conjugate values within C";
}

void c6(Outcome& o) {
  auto dyn = golden();
  const auto& f = dyn.field();
  std::mt19937 rng(2024);
  std::size_t branches = 0;
  for (int sample = 0; sample < 200; ++sample) {
    FieldElement x = f.zero();
    if (sample % 2 == 0) {
      std::vector<int> d(1 + rng() % 14);
      for (auto& v : d) v = static_cast<int>(rng() % 2);
      x = f.from_digits(d);
    } else {
      // a + b beta^-1 with small rationals, kept inside the domain
      do {
        const Rational a(static_cast<long>(rng() % 41) - 20, 1 + rng() % 9);
        const Rational b(static_cast<long>(rng() % 41) - 20, 1 + rng() % 9);
        x = f.rational(a) + f.beta_power(-1) * b;
      } while (!dyn.in_domain(x));
    }
    const auto paths = branch_expansions(dyn, x, 10);
    const auto greedy = greedy_expand(dyn, x, 10);
    o.require(paths.back().word == greedy, "greedy word is not the lexicographic maximum");
    for (const auto& path : paths) {
      const auto tail = greedy_stream(dyn, path.end);
      if (!tail) {
        o.require(false, "greedy tail not periodic");
        continue;
      }
      DigitWord pre = concat(path.word, tail->preperiod());
      const bool accepted = is_greedy(DigitStream(pre, tail->period()), dyn);
      o.require(accepted == (path.word == greedy), "is_greedy disagrees with the brute-force maximum");
      ++branches;
    }
  }
  o.detail << (o.pass ? "" : "; ") << "200 points, " << branches << " branch words classified";
}

void c7(Outcome& o) {
  auto dyn = golden();
  const auto& f = dyn.field();
  const std::size_t L = 14;
  std::size_t points = 0, words = 0;
  for (int N : {4, 5}) {
    for (unsigned mask = 0; mask < (1u << L); ++mask) {
      std::vector<int> d(L);
      for (std::size_t i = 0; i < L; ++i) d[i] = (mask >> (L - 1 - i)) & 1;
      const DigitStream s(DigitWord(d), d.back() == 1 ? DigitWord::parse("010") : DigitWord::parse("100"));
      if (!is_greedy(s, dyn)) continue;
      if (s.prefix(L + 4).contains_zero_run(static_cast<std::size_t>(N - 1))) continue;
      const FieldElement x = stream_value(f, s);
      for (const auto& path : branch_expansions(dyn, x, L)) {
        o.require(!path.word.contains_zero_run(static_cast<std::size_t>(N)), "branch word with 0^N found");
        ++words;
      }
      ++points;
    }
  }
  std::mt19937 rng(7);
  for (int i = 0; i < 10000; ++i) {
    std::vector<int> d(4 + rng() % 20);
    for (auto& v : d) v = static_cast<int>(rng() % 2);
    const DigitWord w(d);
    const auto r = rewrite_normalize(w, 2);
    if (!(f.from_digits(r.digits) == f.from_digits(w.digits))) {
      o.require(false, "rewrite changed a value: " + w.str());
      break;
    }
  }
  o.detail << (o.pass ? "" : "; ") << points << " greedy points, " << words << " branch words at depth 14, 10000 rewrites exact";
}

void c8(Outcome& o) {
  const auto f = NumberField::make(nbonacci_polynomial(2));
  double smallest = 1;
  for (int N = 9; N <= 15; ++N) {
    const auto s = moran_solve({beta_power_enclosure(f, 4), beta_power_enclosure(f, N)});
    o.require(s.dimension.lo > 0, "s not certified positive for N=" + std::to_string(N));
    smallest = std::min(smallest, s.dimension.lo);
  }
  const auto e = sgap_entropy(2, 5);
  const Polynomial p({-1, -1, 0, 0, 0, 1});
  o.require(e.root.width() <= Rational(mpz_class(1), mpz_class("1000000000000")), "root interval wider than 1e-12");
  o.require(e.root.is_point() ? p(e.root.lo) == 0 : sign_of(p(e.root.lo)) * sign_of(p(e.root.hi)) <= 0, "no sign change on the root interval");
  const double oracle = bisect({-1, -1, 0, 0, 0, 1}, 1, 2);
  o.require(std::abs(e.root.midpoint().get_d() - oracle) <= 1e-12, "root differs from bisection oracle");
  o.detail << (o.pass ? "" : "; ") << "min certified s = " << smallest << ", x^5 = x + 1 root in [" << e.root.lo.get_d() << ", "
           << e.root.hi.get_d() << "]";
}

void c9(Outcome& o) {
  const auto g = enumerate_spectrum(NumberField::make(nbonacci_polynomial(2)), 2);
  o.require(g.size() == 6, "golden level 2 has " + std::to_string(g.size()) +
                               " distinct values (0, 1, b, b^2, 1+b^2, b+b^2, 1+b+b^2), not 6");
  const auto s = NumberField::make(MinimalPolynomial::parse("-2,0,1"));
  const auto g4 = max_gap(enumerate_spectrum(s, 4));
  const auto g10 = max_gap(enumerate_spectrum(s, 10));
  o.require(g4.gap && g10.gap && *g10.gap < *g4.gap, "sqrt 2 level-10 gap not below level 4");
  o.detail << (o.pass ? "" : "; ") << "sqrt 2 max gap " << g4.value.mid() << " (level 4) -> " << g10.value.mid() << " (level 10)";
}

void c10(Outcome& o) {
  auto dyn = golden();
  o.require(!gd_witness(dyn, 3, 12).has_value(), "golden N=3 returned a word");
  BetaDynamics num(NumberField::rational_base(Rational(9, 5)));
  const auto w = gd_witness(num, 3, 20);
  o.require(w.has_value(), "no word for beta = 1.8");
  if (w) {
    const FieldElement h = hole_endpoint(num, 3);
    FieldElement y = h;
    for (int d : w->digits) y = num.step(y, d);
    o.require(y.sign() > 0 && (h - y).sign() > 0, "image not strictly inside the hole");
    o.detail << (o.pass ? "" : "; ") << "beta = 1.8 word " << w->str() << ", image " << y.to_double() << " in (0, " << h.to_double() << ")";
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"partition Perron root equals closed-form lambda_N, golden N=3..12", c1},
      {"golden N=3: Perron root exactly 1, dimension 0", c2},
      {"dim F_N nondecreasing, exceeds 0.99, bounds ordered", c3},
      {"doubling map: word-count growth and dimension", c4},
      {"finite Pisot orbits and conjugate bound", c5},
      {"greedy word is the maximal branch word; Parry test agrees", c6},
      {"greedy avoidance of 0^(N-1) excludes 0^N in branches; rewrite exact", c7},
      {"Moran dimension positive for N=9..15; S-gap root", c8},
      {"spectrum level counts and shrinking sqrt 2 gaps", c9},
      {"graph-directed witness search", c10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2zu: %s  %s  [%s]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
