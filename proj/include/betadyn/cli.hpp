#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "betadyn/number_field.hpp"

namespace betadyn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

// "nbonacci:n", "poly:c0,c1,...,1" (constant term first) or "num:1.8".
NumberField parse_base(std::string_view text);

// "max", "beta^k", "digits:0101", "stream:1(01)" or a rational such as 3/5 or 0.25.
FieldElement parse_point(const NumberField& field, std::string_view text);

// Runs one subcommand; args excludes the program name. Returns 0, 2 for a
// library error, or 64 for bad arguments (including InvalidArgument errors).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betadyn
