#pragma once

#include <json.hpp>

#include "betadyn/dimension.hpp"
#include "betadyn/markov.hpp"
#include "betadyn/orbit.hpp"
#include "betadyn/spectrum.hpp"
#include "betadyn/universal.hpp"

namespace betadyn {

using Json = nlohmann::ordered_json;

// Exact rationals travel as "p/q" strings.
std::string rational_text(const Rational& q);
Rational parse_rational(std::string_view text);

Json to_json(const FieldElement& x);
Json to_json(const AdjacencyMatrix& m);
Json to_json(const DimensionResult& r);
Json to_json(const EntropyResult& r);
Json to_json(const MembershipCertificate& c);
Json to_json(const Membership& m);
Json to_json(const OrbitSet& o);
Json to_json(const MarkovPartition& p);
Json to_json(const GapResult& g);

AdjacencyMatrix adjacency_from_json(const Json& j);
DimensionResult dimension_from_json(const Json& j);
MembershipCertificate certificate_from_json(const Json& j);

}  // namespace betadyn
