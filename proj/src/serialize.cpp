#include "betadyn/serialize.hpp"

#include "betadyn/error.hpp"

namespace betadyn {

std::string rational_text(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  const auto dot = s.find('.');
  try {
    if (slash != std::string::npos) {
      Rational q(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
      if (q.get_den() == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + s + "'");
      q.canonicalize();
      return q;
    }
    if (dot != std::string::npos) {
      const std::string frac = s.substr(dot + 1);
      std::string digits = s.substr(0, dot) + frac;
      if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("no digits");
      if (digits[0] == '+') digits.erase(0, 1);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      Rational q(mpz_class(digits, 10), den);
      q.canonicalize();
      return q;
    }
    return Rational(mpz_class(s[0] == '+' ? s.substr(1) : s, 10));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + s + "'");
  }
}

Json to_json(const FieldElement& x) { return Json{{"repr", x.to_string()}, {"value", x.to_double()}}; }

Json to_json(const AdjacencyMatrix& m) { return Json(m.entries); }

AdjacencyMatrix adjacency_from_json(const Json& j) { return AdjacencyMatrix{j.get<std::vector<std::vector<int>>>()}; }

Json to_json(const DimensionResult& r) {
  Json j{{"equation_tag", r.equation_tag},
         {"root_lo", rational_text(r.root.lo)},
         {"root_hi", rational_text(r.root.hi)},
         {"dimension_lo", r.dimension.lo},
         {"dimension_hi", r.dimension.hi},
         {"residual", r.residual}};
  if (r.zero_radius) j["zero_radius"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

DimensionResult dimension_from_json(const Json& j) {
  DimensionResult r;
  r.equation_tag = j.at("equation_tag").get<std::string>();
  r.root = {parse_rational(j.at("root_lo").get<std::string>()), parse_rational(j.at("root_hi").get<std::string>())};
  r.dimension = {j.at("dimension_lo").get<double>(), j.at("dimension_hi").get<double>()};
  r.residual = j.at("residual").get<double>();
  r.zero_radius = j.value("zero_radius", false);
  r.note = j.value("note", std::string{});
  return r;
}

Json to_json(const EntropyResult& r) {
  return Json{{"equation_tag", "sgap"},
              {"root_lo", rational_text(r.root.lo)},
              {"root_hi", rational_text(r.root.hi)},
              {"entropy_lo", r.entropy.lo},
              {"entropy_hi", r.entropy.hi}};
}

Json to_json(const MembershipCertificate& c) {
  return Json{{"verdict", std::string(to_string(c.verdict))},
              {"depth", c.depth},
              {"witness", c.witness ? Json(c.witness->str()) : Json(nullptr)}};
}

MembershipCertificate certificate_from_json(const Json& j) {
  MembershipCertificate c;
  const auto v = j.at("verdict").get<std::string>();
  bool known = false;
  for (Verdict candidate : {Verdict::InF, Verdict::NotInF, Verdict::InE_depth, Verdict::NotInE, Verdict::Unknown})
    if (to_string(candidate) == v) {
      c.verdict = candidate;
      known = true;
    }
  if (!known) throw Error(ErrorKind::InvalidArgument, "unknown verdict '" + v + "'");
  c.depth = j.at("depth").get<std::size_t>();
  if (!j.at("witness").is_null()) c.witness = DigitWord::parse(j.at("witness").get<std::string>());
  return c;
}

Json to_json(const Membership& m) { return Json{{"F", to_json(m.f)}, {"E", to_json(m.e)}}; }

Json to_json(const OrbitSet& o) {
  Json points = Json::array();
  for (const auto& p : o.points) points.push_back(to_json(p));
  Json transitions = Json::array();
  for (const auto& t : o.transitions) transitions.push_back(Json{t.from, t.digit, t.to});
  return Json{{"size", o.points.size()},
              {"depth", o.depth},
              {"seed_index", o.seed_index},
              {"bound", o.bound.get_d()},
              {"points", points},
              {"transitions", transitions}};
}

Json to_json(const MarkovPartition& p) {
  Json bps = Json::array();
  for (const auto& b : p.breakpoints) bps.push_back(to_json(b));
  const auto s = adjacency(p);
  return Json{{"construction", p.construction == MarkovPartition::Construction::Explicit ? "explicit" : "orbit-closure"},
              {"hole_depth", p.hole_depth},
              {"hole_endpoint", to_json(p.hole_endpoint)},
              {"breakpoints", bps},
              {"branch", p.branch},
              {"images", p.images},
              {"hole", p.hole},
              {"adjacency", to_json(s)},
              {"reduced", to_json(delete_states(s, p.hole))}};
}

Json to_json(const GapResult& g) {
  return Json{{"window", g.window},
              {"index", g.index},
              {"gap", g.gap ? to_json(*g.gap) : Json(nullptr)},
              {"gap_lo", g.value.lo},
              {"gap_hi", g.value.hi}};
}

}  // namespace betadyn
