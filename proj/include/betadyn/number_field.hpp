#pragma once

// Exact arithmetic in Q(beta) for a real algebraic base beta in (1,2).
//
// Elements are stored as x = b^-1 * sum_{i=1..d} a_i beta^-i with integer a_i
// and minimal positive b. Since the minimal polynomial has degree d the powers
// beta^-1..beta^-d form a basis, so the representation is unique and equality
// is coefficient equality. Signs are decided by interval evaluation over a
// refinable rational isolating interval of beta.

#include <compare>
#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "betadyn/polynomial.hpp"

namespace betadyn {

struct MinimalPolynomial {
  // Constant term first; the leading coefficient is positive.
  std::vector<Integer> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  bool is_monic() const { return !coefficients.empty() && coefficients.back() == 1; }
  Polynomial as_polynomial() const { return Polynomial::from_integers(coefficients); }

  // "-1,-1,1" for x^2 - x - 1.
  static MinimalPolynomial parse(std::string_view csv);
  std::string to_csv() const;

  friend bool operator==(const MinimalPolynomial&, const MinimalPolynomial&) = default;
};

// x^n - x^(n-1) - ... - x - 1.
MinimalPolynomial nbonacci_polynomial(int n);

// A certified disk around one non-real-base root of the minimal polynomial.
struct ConjugateDisk {
  std::complex<double> center;
  Rational radius_upper;
  Rational modulus_lower;
  Rational modulus_upper;
};

class FieldElement;

class NumberField {
 public:
  // Exact field for a monic integer minimal polynomial with a unique root in (1,2).
  static NumberField make(const MinimalPolynomial& minpoly);
  // Degree-one field Q with beta an exact rational in (1,2). Used for decimal bases.
  static NumberField rational_base(const Rational& beta);

  int degree() const;
  const MinimalPolynomial& minpoly() const;
  bool irreducibility_verified() const;
  bool is_algebraic_integer() const;
  // Isolating interval of beta, width at most 2^-64 (a point for rational beta).
  const RationalInterval& beta_interval() const;
  double beta_approx() const;
  // Certified disks of the conjugates beta_2..beta_d; nullopt when certification
  // failed or the degree is above the supported limit.
  const std::optional<std::vector<ConjugateDisk>>& conjugates() const;

  // Coefficients q_k (as rationals) of the identity 1 = sum_k q_k beta^-k.
  const std::vector<Rational>& reduction() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement rational(const Rational& r) const;
  FieldElement beta_power(int k) const;
  // (beta - 1)^-1, the right end of the expansion domain.
  FieldElement max_point() const;
  // sum_k digits[k-1] beta^-k.
  FieldElement from_digits(std::span<const int> digits) const;
  FieldElement from_coefficients(std::vector<Integer> numerators, Integer denominator) const;

  friend bool operator==(const NumberField& a, const NumberField& b);

  struct Impl;

 private:
  explicit NumberField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
  friend class FieldElement;
};

inline constexpr int kMaxConjugateDegree = 8;

class FieldElement {
 public:
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }
  NumberField field() const { return NumberField(field_); }

  bool is_zero() const;
  // Exact sign of the represented real.
  int sign() const;
  // Rational enclosure of the value, narrower than `width` when possible.
  RationalInterval enclosure(const Rational& width) const;
  double to_double() const;

  FieldElement mul_by_beta() const;
  FieldElement div_by_beta() const;
  FieldElement inverse() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const Rational& r);
  friend FieldElement operator*(const Rational& r, const FieldElement& a) { return a * r; }

  // Representation equality, which is value equality by canonical form.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  // Order of the real values; decided exactly.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  // "[a1,...,ad]/b".
  std::string to_string() const;

 private:
  FieldElement(std::shared_ptr<const NumberField::Impl> field, std::vector<Integer> num, Integer den);
  void canonicalize();
  void check_same_field(const FieldElement& other) const;

  std::shared_ptr<const NumberField::Impl> field_;
  std::vector<Integer> num_;
  Integer den_;

  friend class NumberField;
};

// Cheap total order on representations; for use as a map key only.
struct RepresentationLess {
  bool operator()(const FieldElement& a, const FieldElement& b) const;
};

struct PisotCheck {
  bool is_pisot = false;
  // Certified upper bound on max_j |beta_j| over the conjugates (0 when d = 1).
  Rational eta_upper;
};

// Throws Undecidable when a conjugate modulus cannot be separated from 1.
PisotCheck is_pisot(const NumberField& field);

// Exact rational bounds on sqrt(q) for q >= 0.
Rational sqrt_upper(const Rational& q);
Rational sqrt_lower(const Rational& q);

}  // namespace betadyn
