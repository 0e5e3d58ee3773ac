#include "doctest.h"

#include <sstream>

#include "betadyn/cli.hpp"
#include "betadyn/error.hpp"
#include "betadyn/serialize.hpp"

using namespace betadyn;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("text subcommands") {
  const auto e = run({"expand", "--base", "nbonacci:2", "--x", "1", "--len", "6"});
  CHECK(e.code == 0);
  CHECK(e.out == "110000\n");
  CHECK(run({"blocks", "--word", "0000", "--k", "1"}).out == "false\n");
  CHECK(run({"blocks", "--word", "0001011100", "--k", "3"}).out == "true\n");
  CHECK(run({"quasi-greedy", "--base", "nbonacci:2", "--len", "6"}).out == "101010\n");
}

TEST_CASE("dim for the golden base") {
  const auto r = run({"dim", "--base", "nbonacci:2", "--hole-N", "5"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j.at("equation_tag") == "perron");
  const auto d = dimension_from_json(j);
  CHECK(d.dimension.mid() == doctest::Approx(0.7944).epsilon(1e-4));
  CHECK(d.root.midpoint().get_d() == doctest::Approx(1.4655712319).epsilon(1e-9));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"nonsense"}).code == kExitUsage);
  CHECK(run({"expand", "--len", "abc"}).code == kExitUsage);
  CHECK(run({"expand", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  const auto dom = run({"sgap", "--n", "2", "--N", "3"});
  CHECK(dom.code == kExitDomain);
  CHECK(dom.err.find("EmptyGapSet") != std::string::npos);
  CHECK(run({"orbit", "--base", "poly:-2,0,1"}).code == kExitDomain);
  CHECK(run({"expand", "--base", "poly:-5,0,1"}).code == kExitDomain);
  CHECK(run({"expand", "--base", "bogus"}).code == kExitUsage);
  CHECK(run({"partition", "--hole-N", "2"}).code == kExitUsage);
  CHECK(run({"expand", "--x", "5"}).code == kExitDomain);
}

TEST_CASE("every subcommand runs and is deterministic") {
  const std::vector<std::vector<std::string>> cases{
      {"expand", "--base", "num:1.8", "--x", "1/2", "--len", "12", "--format", "json"},
      {"quasi-greedy", "--base", "nbonacci:3", "--format", "json"},
      {"orbit", "--base", "nbonacci:2", "--x", "1"},
      {"partition", "--base", "nbonacci:3", "--hole-N", "4"},
      {"dim", "--base", "poly:-1,-1,-1,1", "--hole-N", "4"},
      {"dim-bounds", "--n", "2", "--N-range", "4:8"},
      {"doubling", "--N", "3"},
      {"sgap", "--n", "2", "--N", "5"},
      {"moran", "--ratios", "1/2,1/4"},
      {"moran", "--base", "nbonacci:2", "--powers", "4,9"},
      {"spectrum", "--base", "poly:-2,0,1", "--level", "5"},
      {"spectrum", "--base", "nbonacci:2", "--level", "6", "--format", "json"},
      {"membership", "--base", "nbonacci:2", "--x", "stream:(1000)", "--hole-N", "4", "--depth", "10"},
      {"witness", "--base", "num:1.8", "--hole-N", "3", "--p-max", "20"},
      {"blocks", "--word", "0110", "--k", "2", "--format", "json"},
  };
  for (const auto& args : cases) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK_MESSAGE(a.code == 0, args[0] << ": " << a.err);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("JSON payloads re-parse into their types") {
  const auto d = solve_lambda_N(7);
  const auto back = dimension_from_json(Json::parse(to_json(d).dump()));
  CHECK(back.root.lo == d.root.lo);
  CHECK(back.root.hi == d.root.hi);
  CHECK(back.dimension.lo == d.dimension.lo);
  CHECK(back.dimension.hi == d.dimension.hi);
  CHECK(back.equation_tag == d.equation_tag);

  const AdjacencyMatrix s{{{1, 1, 0}, {0, 0, 1}, {1, 1, 0}}};
  CHECK(adjacency_from_json(Json::parse(to_json(s).dump())) == s);

  const MembershipCertificate c{Verdict::NotInE, 3, DigitWord::parse("101")};
  const auto c2 = certificate_from_json(Json::parse(to_json(c).dump()));
  CHECK(c2.verdict == c.verdict);
  CHECK(c2.depth == c.depth);
  CHECK(c2.witness == c.witness);

  const auto w = run({"witness", "--base", "nbonacci:2", "--hole-N", "3", "--p-max", "12"});
  CHECK(Json::parse(w.out).at("witness").is_null());
}

TEST_CASE("base and point parsing") {
  CHECK(parse_base("nbonacci:3").degree() == 3);
  CHECK(parse_base("num:1.8").beta_interval().lo == Rational(9, 5));
  CHECK(parse_base("poly:-1,-1,1") == parse_base("nbonacci:2"));
  const auto f = parse_base("nbonacci:2");
  CHECK(parse_point(f, "beta^-1") == f.beta_power(-1));
  CHECK(parse_point(f, "digits:01") == f.beta_power(-2));
  CHECK(parse_point(f, "stream:(10)") == f.one());
  CHECK(parse_point(f, "max") == f.max_point());
  CHECK(parse_point(f, "0.25") == f.rational(Rational(1, 4)));
  CHECK(parse_point(f, "-3/6") == f.rational(Rational(-1, 2)));
  CHECK_THROWS_AS(parse_point(f, "abc"), Error);
  CHECK(parse_rational("1.80") == Rational(9, 5));
}

TEST_CASE("decimal parsing keeps leading zeros decimal") {
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("010") == Rational(10));
  CHECK(parse_rational("-0.08") == Rational(-2, 25));
  CHECK(parse_rational("07/09") == Rational(7, 9));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}
