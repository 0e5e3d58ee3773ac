#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace betadyn {

using Integer = mpz_class;
using Rational = mpq_class;

// Closed interval with exact rational endpoints, lo <= hi.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool is_point() const { return lo == hi; }
};

// Dense univariate polynomial over Q, coefficients stored constant term first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial from_integers(std::span<const Integer> coefficients);
  static Polynomial monomial(const Rational& c, int power);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int power) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  double eval_double(double x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  // Same polynomial scaled to integer coefficients with content 1 and positive leading term.
  std::vector<Integer> primitive_integer_coefficients() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  // Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial gcd(Polynomial a, Polynomial b);
Polynomial squarefree_part(const Polynomial& p);

int sign_of(const Rational& x);

// Upper bound on the modulus of every complex root (Cauchy).
Rational cauchy_bound(const Polynomial& p);

// Sturm chain of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& squarefree);

  int sign_changes(const Rational& x) const;
  // Number of distinct real roots in the half-open interval (a, b].
  int count_roots(const Rational& a, const Rational& b) const;

 private:
  std::vector<Polynomial> chain_;
};

// Bisection on an interval across which p changes sign (or vanishes at an
// endpoint) until the width is at most `tolerance`. Exact roots hit by a
// midpoint collapse the interval to a point.
RationalInterval refine_root(const Polynomial& p, RationalInterval bracket,
                             const Rational& tolerance);

// Certified enclosure of the largest real root of p, or nullopt if p has no
// real roots. The returned interval brackets a sign change of the squarefree
// part of p, or is a single exact point.
std::optional<RationalInterval> largest_real_root(const Polynomial& p,
                                                  const Rational& tolerance);

// Every real root of p in the open interval (a, b), isolated then refined.
std::vector<RationalInterval> real_roots_in(const Polynomial& p, const Rational& a,
                                            const Rational& b, const Rational& tolerance);

// 10^-12 as an exact rational; the default root-interval width target.
Rational default_tolerance();

}  // namespace betadyn
