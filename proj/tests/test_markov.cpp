#include "doctest.h"

#include "betadyn/error.hpp"
#include "betadyn/markov.hpp"
#include "betadyn/orbit.hpp"

using namespace betadyn;

namespace {
BetaDynamics golden() { return BetaDynamics(NumberField::make(nbonacci_polynomial(2))); }
AdjacencyMatrix grid(std::vector<std::vector<int>> rows) { return AdjacencyMatrix{std::move(rows)}; }
}  // namespace

TEST_CASE("golden N=3 partition") {
  auto dyn = golden();
  const auto& f = dyn.field();
  const auto p = build_partition(dyn, 3);
  CHECK(p.construction == MarkovPartition::Construction::Explicit);
  REQUIRE(p.interval_count() == 4);
  const std::vector<FieldElement> bps{f.zero(), f.beta_power(-2), f.beta_power(-1), f.one(), f.beta_power(1)};
  CHECK(p.breakpoints == bps);
  CHECK(p.branch == std::vector<int>{0, 0, 1, 1});
  CHECK(p.hole == std::vector<std::size_t>{0});
  CHECK(adjacency(p) == grid({{1, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}}));
  CHECK(delete_hole(adjacency(p), 0) == grid({{0, 1, 0}, {1, 0, 0}, {0, 1, 1}}));
}

TEST_CASE("golden N=4 matches the closed-form row pattern") {
  auto dyn = golden();
  const auto p = build_partition(dyn, 4);
  REQUIRE(p.interval_count() == 5);
  // T0(A1) = A1 u A2, T0(A_i) = A_{i+1} for 2 <= i < N, T1(A_N) = A1 u ... u A_{N-1}, T1(A_{N+1}) = A_N u A_{N+1}
  CHECK(adjacency(p) == grid({{1, 1, 0, 0, 0},
                              {0, 0, 1, 0, 0},
                              {0, 0, 0, 1, 0},
                              {1, 1, 1, 0, 0},
                              {0, 0, 0, 1, 1}}));
  CHECK(delete_hole(adjacency(p), 0).size() == 4);
}

TEST_CASE("closed form and orbit closure agree for the golden base") {
  auto dyn = golden();
  for (int N = 3; N <= 10; ++N) {
    auto a = explicit_breakpoints(dyn, N);
    sort_unique(a);
    CHECK(a == closure_breakpoints(dyn, N));
  }
}

TEST_CASE("general Pisot partitions satisfy the Markov property") {
  for (const char* poly : {"-1,-1,-1,1", "-1,0,0,-1,1", "-1,-1,-1,-1,1"}) {
    BetaDynamics dyn(NumberField::make(MinimalPolynomial::parse(poly)));
    for (int N = 3; N <= 6; ++N) {
      const auto p = build_partition(dyn, N);
      CHECK(p.construction == MarkovPartition::Construction::OrbitClosure);
      for (std::size_t i = 0; i < p.interval_count(); ++i) {
        REQUIRE_FALSE(p.images[i].empty());
        const auto lo = dyn.apply(p.breakpoints[i], p.branch[i]);
        const auto hi = dyn.apply(p.breakpoints[i + 1], p.branch[i]);
        CHECK(lo == p.breakpoints[p.images[i].front()]);
        CHECK(hi == p.breakpoints[p.images[i].back() + 1]);
      }
      CHECK(p.breakpoints[p.hole.size()] == p.hole_endpoint);
    }
  }
}

TEST_CASE("shared endpoints belong to both intervals") {
  auto dyn = golden();
  const auto p = build_partition(dyn, 3);
  CHECK(p.locate(dyn.field().beta_power(-1)) == std::vector<std::size_t>{1, 2});
  CHECK(p.locate(dyn.field().rational(Rational(1, 10))) == std::vector<std::size_t>{0});
}

TEST_CASE("partition errors") {
  auto dyn = golden();
  CHECK_THROWS_AS(build_partition(dyn, 2), Error);
  BetaDynamics sqrt2(NumberField::make(MinimalPolynomial::parse("-2,0,1")));
  try {
    build_partition(sqrt2, 3);
    FAIL("expected NotPisot");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPisot);
  }
  // Breakpoints that miss beta^-1 are not Markov.
  const auto& f = dyn.field();
  try {
    partition_from_breakpoints(dyn, {f.zero(), f.beta_power(-2), f.one(), f.max_point()}, 3);
    FAIL("expected NotMarkov");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMarkov);
  }
}

TEST_CASE("hole deletion") {
  CHECK(delete_hole(grid({{1, 0}, {0, 1}}), 0) == grid({{1}}));
  try {
    delete_hole(grid({{1}}), 1);
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
  const auto s = grid({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  const auto t = delete_states(s, {1});
  CHECK(t == grid({{1, 0}, {1, 1}}));
}

TEST_CASE("degenerate single-interval matrix") {
  MarkovPartition p{.breakpoints = {}, .images = {{0}}, .hole_endpoint = golden().field().zero()};
  p.breakpoints = {golden().field().zero(), golden().field().one()};
  CHECK(adjacency(p) == grid({{1}}));
}

TEST_CASE("graph-directed witness") {
  auto dyn = golden();
  CHECK_FALSE(gd_witness(dyn, 3, 12).has_value());
  CHECK_FALSE(gd_witness(dyn, 5, 0).has_value());
  BetaDynamics num(NumberField::rational_base(Rational(9, 5)));
  const auto w = gd_witness(num, 3, 20);
  REQUIRE(w.has_value());
  CHECK(w->size() <= 20);
  MESSAGE("beta=1.8, N=3 witness: " << w->str());
  FieldElement x = hole_endpoint(num, 3);
  for (int d : w->digits) x = num.step(x, d);
  CHECK(x.sign() > 0);
  CHECK((hole_endpoint(num, 3) - x).sign() > 0);
}
