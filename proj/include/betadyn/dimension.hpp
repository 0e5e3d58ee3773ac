#pragma once

#include <string>
#include <utility>
#include <vector>

#include "betadyn/markov.hpp"
#include "betadyn/polynomial.hpp"

namespace betadyn {

// Outward-rounded double enclosure of a real number.
struct CertifiedReal {
  double lo = 0;
  double hi = 0;

  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

struct DimensionResult {
  std::string equation_tag;
  RationalInterval root;
  double residual = 0;       // |f(midpoint)| for the defining function f
  CertifiedReal dimension;
  bool zero_radius = false;  // spectral radius 0: empty survivor set
  std::string note;

  double root_mid() const { return root.midpoint().get_d(); }
};

struct PerronRoot {
  RationalInterval root;
  double estimate = 0;  // power iteration
  bool exact = false;
  bool zero = false;
};

// Characteristic polynomial det(xI - M), computed without division.
Polynomial characteristic_polynomial(const AdjacencyMatrix& m);

PerronRoot perron_root(const AdjacencyMatrix& m, const Rational& tolerance = default_tolerance());

// log(root) / log(base), both given as rational enclosures.
CertifiedReal log_ratio(const RationalInterval& root, const RationalInterval& base);
CertifiedReal log_enclosure(const RationalInterval& x);

// Largest root of x^k = x^(k-1) + ... + 1; k = 1 gives 1.
RationalInterval nbonacci_root(int k, const Rational& tolerance = default_tolerance());

// Largest positive root lambda_N of x^(N-1) = sum_{i=0}^{N-3} x^i and log(lambda_N)/log(golden ratio).
DimensionResult solve_lambda_N(int N);

// log(gamma_N)/log 2, gamma_N the N-bonacci number.
DimensionResult doubling_hole_dimension(int N);

struct EntropyResult {
  RationalInterval root;
  CertifiedReal entropy;
};

// Entropy of the S-gap shift with gaps {n+1, ..., N-1}: log of the largest root
// of x^N = sum_{k=n+1}^{N-1} x^(N-k-1).
EntropyResult sgap_entropy(int n, int N);

// Unique s >= 0 with sum r_i^s = 1; ratios are rational enclosures inside (0,1).
DimensionResult moran_solve(const std::vector<RationalInterval>& ratios);

// Enclosure of beta^-k for k >= 0.
RationalInterval beta_power_enclosure(const NumberField& field, int k);

// Survivor-set dimension log(rho(S'))/log(beta) from the verified partition with hole depth N.
DimensionResult survivor_dimension(const BetaDynamics& dyn, int N);

// (dim F_{beta_n, N-1}, dim F_{beta_n, N}).
std::pair<DimensionResult, DimensionResult> dim_bounds_E(int n, int N);

}  // namespace betadyn
