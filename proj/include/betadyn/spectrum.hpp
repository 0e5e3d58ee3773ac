#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "betadyn/dimension.hpp"
#include "betadyn/number_field.hpp"

namespace betadyn {

// Distinct values of sum_{i=0}^{level} a_i beta^i, a_i in {0,1}, strictly increasing.
struct SpectrumTable {
  int level = 0;
  std::vector<FieldElement> values;
  std::vector<double> approx;  // double approximation of values[k], used to skip exact comparisons

  std::size_t size() const { return values.size(); }
};

constexpr int kMaxSpectrumLevel = 24;

SpectrumTable enumerate_spectrum(const NumberField& field, int level);

struct GapResult {
  std::optional<FieldElement> gap;  // empty for a table with fewer than two values in range
  CertifiedReal value;
  std::size_t index = 0;            // the gap is values[index+1] - values[index]
  std::string window;               // description of the value window used
};

// Largest gap between consecutive values that both lie in [lo, hi].
GapResult max_gap(const SpectrumTable& t, const FieldElement& lo, const FieldElement& hi);

// Default window [beta^floor(level/2), beta^level]. Below beta^level the table
// already agrees with the whole spectrum; the lower end discards the small values
// whose gaps never shrink (0 -> 1 is always a gap). Without a window every
// consecutive pair counts.
GapResult max_gap(const SpectrumTable& t, bool use_window = true);

// Columns index,value,gap_to_next; the last row has an empty gap.
std::string spectrum_csv(const SpectrumTable& t, int digits = 17);

// Decimal rendering of a field element to `digits` significant digits.
std::string to_decimal(const FieldElement& x, int digits);

}  // namespace betadyn
