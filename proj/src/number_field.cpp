#include "betadyn/number_field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "betadyn/error.hpp"

namespace betadyn {

struct NumberField::Impl {
  MinimalPolynomial minpoly;
  Polynomial poly;
  int d = 0;
  bool irreducible_verified = false;
  RationalInterval beta;
  int sign_at_lo = 0;
  std::vector<Rational> q;
  std::vector<Integer> qnum;
  Integer qden;
  std::optional<std::vector<ConjugateDisk>> conjugates;
  std::vector<Integer> one_num;
  Integer one_den;
  std::vector<Integer> max_num;
  Integer max_den;
};

// ---------------------------------------------------------------------------
// MinimalPolynomial

MinimalPolynomial MinimalPolynomial::parse(std::string_view csv) {
  MinimalPolynomial mp;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string token(csv.substr(start, end - start));
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    Integer value;
    if (token.empty() || value.set_str(token, 10) != 0)
      throw Error(ErrorKind::InvalidPolynomial, "bad coefficient '" + token + "' in '" + std::string(csv) + "'");
    mp.coefficients.push_back(value);
    start = end + 1;
  }
  while (!mp.coefficients.empty() && mp.coefficients.back() == 0) mp.coefficients.pop_back();
  if (mp.coefficients.size() < 2) throw Error(ErrorKind::InvalidPolynomial, "degree must be at least 1");
  return mp;
}

std::string MinimalPolynomial::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out += ',';
    out += coefficients[i].get_str();
  }
  return out;
}

MinimalPolynomial nbonacci_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n-bonacci order must be positive");
  MinimalPolynomial mp;
  mp.coefficients.assign(static_cast<std::size_t>(n), Integer(-1));
  mp.coefficients.emplace_back(1);
  return mp;
}

// ---------------------------------------------------------------------------
// Square-root bounds and Gaussian rationals for conjugate certification.

Rational sqrt_upper(const Rational& q) {
  if (q <= 0) return Rational(0);
  Rational s(std::sqrt(q.get_d()) * (1.0 + 0x1p-40) + 1e-300);
  while (s * s < q) s *= Rational(1025, 1024);
  return s;
}

Rational sqrt_lower(const Rational& q) {
  if (q <= 0) return Rational(0);
  Rational s(std::sqrt(q.get_d()) * (1.0 - 0x1p-40));
  while (s * s > q) s *= Rational(1023, 1024);
  return s;
}

namespace {

struct Gaussian {
  Rational re;
  Rational im;
};

Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
Gaussian operator*(const Gaussian& a, const Gaussian& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rational norm2(const Gaussian& a) { return a.re * a.re + a.im * a.im; }

using Cld = std::complex<long double>;

std::vector<Cld> aberth_roots(const std::vector<Integer>& coeffs) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  std::vector<long double> c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = static_cast<long double>(coeffs[i].get_d());
  auto eval = [&](Cld z, Cld& deriv) {
    Cld p = 0;
    deriv = 0;
    for (int k = d; k >= 0; --k) {
      deriv = deriv * z + p;
      p = p * z + c[static_cast<std::size_t>(k)];
    }
    return p;
  };
  long double bound = 0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, std::fabs(c[static_cast<std::size_t>(i)] / c.back()));
  bound += 1;
  std::vector<Cld> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k)
    z[static_cast<std::size_t>(k)] =
        std::polar(0.9L * bound, 2.0L * std::numbers::pi_v<long double> * k / d + 0.4L);
  for (int iter = 0; iter < 2000; ++iter) {
    long double biggest = 0;
    for (int k = 0; k < d; ++k) {
      Cld deriv;
      const Cld p = eval(z[static_cast<std::size_t>(k)], deriv);
      if (p == Cld(0)) continue;
      const Cld ratio = p / deriv;
      Cld s = 0;
      for (int j = 0; j < d; ++j)
        if (j != k) s += 1.0L / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
      const Cld w = ratio / (1.0L - ratio * s);
      z[static_cast<std::size_t>(k)] -= w;
      biggest = std::max(biggest, std::abs(w) / std::max(1.0L, std::abs(z[static_cast<std::size_t>(k)])));
    }
    if (biggest < 1e-18L) break;
  }
  return z;
}

// Inclusion disks D(z_i, d*|W_i|) with Weierstrass corrections W_i, evaluated
// exactly at double-rounded centres. Disjoint disks each hold exactly one root.
std::optional<std::vector<ConjugateDisk>> certify_conjugates(const std::vector<Integer>& coeffs,
                                                             const RationalInterval& beta) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  if (d == 1) return std::vector<ConjugateDisk>{};
  if (d > kMaxConjugateDegree) return std::nullopt;
  const auto approx = aberth_roots(coeffs);
  std::vector<Gaussian> centers;
  std::vector<std::complex<double>> centers_d;
  for (const auto& z : approx) {
    const std::complex<double> zd(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    if (!std::isfinite(zd.real()) || !std::isfinite(zd.imag())) return std::nullopt;
    centers_d.push_back(zd);
    centers.push_back({Rational(zd.real()), Rational(zd.imag())});
  }
  std::vector<Rational> radius(static_cast<std::size_t>(d));
  const Rational lc2 = Rational(coeffs.back()) * Rational(coeffs.back());
  for (int i = 0; i < d; ++i) {
    const auto& zi = centers[static_cast<std::size_t>(i)];
    Gaussian p{Rational(0), Rational(0)};
    for (int k = d; k >= 0; --k) {
      p = p * zi;
      p.re += coeffs[static_cast<std::size_t>(k)];
    }
    Rational denom = lc2;
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      const Rational dist2 = norm2(zi - centers[static_cast<std::size_t>(j)]);
      if (dist2 == 0) return std::nullopt;
      denom *= dist2;
    }
    radius[static_cast<std::size_t>(i)] = sqrt_upper(Rational(d * d) * norm2(p) / denom);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Rational sum = radius[static_cast<std::size_t>(i)] + radius[static_cast<std::size_t>(j)];
      if (sum * sum >= norm2(centers[static_cast<std::size_t>(i)] - centers[static_cast<std::size_t>(j)]))
        return std::nullopt;
    }
  const double beta_mid = beta.midpoint().get_d();
  int beta_index = 0;
  for (int i = 1; i < d; ++i)
    if (std::abs(centers_d[static_cast<std::size_t>(i)] - beta_mid) <
        std::abs(centers_d[static_cast<std::size_t>(beta_index)] - beta_mid))
      beta_index = i;
  {
    const auto& zb = centers[static_cast<std::size_t>(beta_index)];
    const Rational r2 = radius[static_cast<std::size_t>(beta_index)] * radius[static_cast<std::size_t>(beta_index)];
    for (const Rational* e : {&beta.lo, &beta.hi}) {
      const Rational dx = *e - zb.re;
      if (dx * dx + zb.im * zb.im > r2) return std::nullopt;
    }
  }
  std::vector<ConjugateDisk> out;
  for (int i = 0; i < d; ++i) {
    if (i == beta_index) continue;
    const auto& zi = centers[static_cast<std::size_t>(i)];
    const Rational& r = radius[static_cast<std::size_t>(i)];
    const Rational mod2 = norm2(zi);
    Rational lower = sqrt_lower(mod2) - r;
    if (lower < 0) lower = 0;
    out.push_back({centers_d[static_cast<std::size_t>(i)], r, lower, sqrt_upper(mod2) + r});
  }
  return out;
}

Integer integer_root_bound(const std::vector<Integer>& c) {
  Integer m(0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, Integer(abs(c[i])));
  return m + 1;
}

bool divides(const Polynomial& factor, const Polynomial& p) {
  return Polynomial::divmod(p, factor).second.is_zero();
}

std::vector<Integer> signed_divisors(const Integer& n, const Integer& limit, bool& complete) {
  std::vector<Integer> out;
  const Integer a = abs(n);
  if (a > 1000000) {
    complete = false;
    return out;
  }
  for (Integer k = 1; k <= a && k <= limit; ++k) {
    if (a % k == 0) {
      out.push_back(k);
      out.push_back(-k);
    }
  }
  return out;
}

// Trial search for monic integer factors of degree 1..3. Returns true when a
// factor is found; `complete` reports whether the search was exhaustive.
bool has_small_factor(const std::vector<Integer>& c, bool& complete) {
  const Polynomial p = Polynomial::from_integers(c);
  const int d = p.degree();
  const Integer bound = integer_root_bound(c);
  complete = true;
  constexpr long kSearchCap = 4'000'000;
  // Linear factors: integer roots divide the constant term.
  for (const auto& r : signed_divisors(c.front(), bound, complete)) {
    if (p(Rational(r)) == 0) return true;
  }
  if (d >= 4) {
    // x^2 + s x + t: |t| <= B^2, |s| <= 2B.
    const Integer tb = bound * bound;
    const auto ts = signed_divisors(c.front(), tb, complete);
    const Integer sb = 2 * bound;
    if (Integer(ts.size()) * (2 * sb + 1) > kSearchCap) {
      complete = false;
    } else {
      for (const auto& t : ts)
        for (Integer s = -sb; s <= sb; ++s) {
          const Integer f[] = {t, s, Integer(1)};
          if (divides(Polynomial::from_integers(f), p)) return true;
        }
    }
  }
  if (d >= 6) {
    // x^3 + a x^2 + b x + e: |e| <= B^3, |b| <= 3B^2, |a| <= 3B.
    const auto es = signed_divisors(c.front(), bound * bound * bound, complete);
    const Integer ab = 3 * bound;
    const Integer bb = 3 * bound * bound;
    if (Integer(es.size()) * (2 * ab + 1) * (2 * bb + 1) > kSearchCap) {
      complete = false;
    } else {
      for (const auto& e : es)
        for (Integer a = -ab; a <= ab; ++a)
          for (Integer b = -bb; b <= bb; ++b) {
            const Integer f[] = {e, b, a, Integer(1)};
            if (divides(Polynomial::from_integers(f), p)) return true;
          }
    }
  }
  if (d >= 8) complete = false;
  return false;
}

Rational initial_width() {
  Rational w(1);
  mpz_mul_2exp(w.get_den_mpz_t(), w.get_den_mpz_t(), 64);
  return w;
}

void canonicalize_parts(std::vector<Integer>& num, Integer& den) {
  if (den < 0) {
    den = -den;
    for (auto& a : num) a = -a;
  }
  Integer g = den;
  for (const auto& a : num) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  if (g == 0) {
    den = 1;
    return;
  }
  bool all_zero = std::all_of(num.begin(), num.end(), [](const Integer& a) { return a == 0; });
  if (all_zero) {
    den = 1;
    return;
  }
  if (g != 1) {
    den /= g;
    for (auto& a : num) a /= g;
  }
}

// Bounds of sum_k a_k t^k for t in [tlo, thi], 0 < tlo.
RationalInterval eval_in_inverse_powers(const std::vector<Integer>& num, const Rational& tlo, const Rational& thi) {
  Rational pos_lo(0), pos_hi(0), neg_lo(0), neg_hi(0);
  Rational plo(1), phi(1);
  for (const auto& a : num) {
    plo *= tlo;
    phi *= thi;
    if (a > 0) {
      pos_lo += a * plo;
      pos_hi += a * phi;
    } else if (a < 0) {
      neg_lo -= a * plo;
      neg_hi -= a * phi;
    }
  }
  return {pos_lo - neg_hi, pos_hi - neg_lo};
}

std::shared_ptr<NumberField::Impl> build_impl(const MinimalPolynomial& minpoly, RationalInterval beta,
                                              bool irreducible) {
  auto impl = std::make_shared<NumberField::Impl>();
  impl->minpoly = minpoly;
  impl->poly = minpoly.as_polynomial();
  impl->d = minpoly.degree();
  impl->irreducible_verified = irreducible;
  impl->beta = beta;
  impl->sign_at_lo = sign_of(impl->poly(beta.lo));
  const auto& c = minpoly.coefficients;
  const int d = impl->d;
  impl->qden = c.back();
  for (int k = 1; k <= d; ++k) {
    impl->qnum.push_back(-c[static_cast<std::size_t>(d - k)]);
    impl->q.emplace_back(impl->qnum.back(), impl->qden);
    impl->q.back().canonicalize();
  }
  impl->one_num = impl->qnum;
  impl->one_den = impl->qden;
  canonicalize_parts(impl->one_num, impl->one_den);
  impl->conjugates = certify_conjugates(c, beta);
  return impl;
}

}  // namespace

// ---------------------------------------------------------------------------
// NumberField

NumberField NumberField::make(const MinimalPolynomial& minpoly) {
  if (minpoly.degree() < 1) throw Error(ErrorKind::InvalidPolynomial, "degree must be at least 1");
  if (!minpoly.is_monic()) throw Error(ErrorKind::InvalidPolynomial, "minimal polynomial must be monic");
  if (minpoly.coefficients.front() == 0)
    throw Error(ErrorKind::InvalidPolynomial, "constant term must be nonzero");
  const Polynomial p = minpoly.as_polynomial();
  const auto roots = real_roots_in(p, Rational(1), Rational(2), initial_width());
  if (roots.empty()) throw Error(ErrorKind::NoRootInRange, "no real root in (1,2) for " + p.to_string());
  if (roots.size() > 1) throw Error(ErrorKind::MultipleRootsInRange, "several roots in (1,2) for " + p.to_string());
  if (roots.front().is_point() || minpoly.degree() == 1)
    throw Error(ErrorKind::NotIrreducible, "rational root in (1,2) for " + p.to_string());
  bool complete = false;
  if (has_small_factor(minpoly.coefficients, complete))
    throw Error(ErrorKind::NotIrreducible, "integer factor found for " + p.to_string());
  auto impl = build_impl(minpoly, roots.front(), complete);
  auto field = NumberField(impl);
  auto m = field.max_point();
  impl->max_num = m.numerators();
  impl->max_den = m.denominator();
  return field;
}

NumberField NumberField::rational_base(const Rational& beta_in) {
  Rational beta(beta_in);
  beta.canonicalize();
  if (beta <= 1 || beta >= 2) throw Error(ErrorKind::NoRootInRange, "base " + beta.get_str() + " not in (1,2)");
  MinimalPolynomial mp;
  mp.coefficients = {-Integer(beta.get_num()), Integer(beta.get_den())};
  auto impl = build_impl(mp, {beta, beta}, true);
  auto field = NumberField(impl);
  auto m = field.max_point();
  impl->max_num = m.numerators();
  impl->max_den = m.denominator();
  return field;
}

int NumberField::degree() const { return impl_->d; }
const MinimalPolynomial& NumberField::minpoly() const { return impl_->minpoly; }
bool NumberField::irreducibility_verified() const { return impl_->irreducible_verified; }
bool NumberField::is_algebraic_integer() const { return impl_->minpoly.is_monic(); }
const RationalInterval& NumberField::beta_interval() const { return impl_->beta; }
double NumberField::beta_approx() const { return impl_->beta.midpoint().get_d(); }
const std::optional<std::vector<ConjugateDisk>>& NumberField::conjugates() const { return impl_->conjugates; }
const std::vector<Rational>& NumberField::reduction() const { return impl_->q; }

FieldElement NumberField::zero() const {
  return FieldElement(impl_, std::vector<Integer>(static_cast<std::size_t>(impl_->d), Integer(0)), Integer(1));
}

FieldElement NumberField::one() const { return FieldElement(impl_, impl_->one_num, impl_->one_den); }

FieldElement NumberField::rational(const Rational& r) const { return one() * r; }

FieldElement NumberField::beta_power(int k) const {
  FieldElement x = one();
  for (; k > 0; --k) x = x.mul_by_beta();
  for (; k < 0; ++k) x = x.div_by_beta();
  return x;
}

FieldElement NumberField::max_point() const {
  if (!impl_->max_num.empty()) return FieldElement(impl_, impl_->max_num, impl_->max_den);
  return (beta_power(1) - one()).inverse();
}

FieldElement NumberField::from_digits(std::span<const int> digits) const {
  // Horner from the last digit: x = (a_1 + (a_2 + ...)/beta)/beta.
  FieldElement x = zero();
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it != 0) x = x + rational(Rational(*it));
    x = x.div_by_beta();
  }
  return x;
}

FieldElement NumberField::from_coefficients(std::vector<Integer> numerators, Integer denominator) const {
  if (static_cast<int>(numerators.size()) != impl_->d)
    throw Error(ErrorKind::InvalidArgument, "coefficient vector length must equal the field degree");
  if (denominator == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  return FieldElement(impl_, std::move(numerators), std::move(denominator));
}

bool operator==(const NumberField& a, const NumberField& b) {
  return a.impl_ == b.impl_ || a.impl_->minpoly == b.impl_->minpoly;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(std::shared_ptr<const NumberField::Impl> field, std::vector<Integer> num, Integer den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void FieldElement::canonicalize() { canonicalize_parts(num_, den_); }

void FieldElement::check_same_field(const FieldElement& other) const {
  if (field_ != other.field_ && !(field_->minpoly == other.field_->minpoly))
    throw Error(ErrorKind::FieldMismatch, "operands belong to different fields");
}

bool FieldElement::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& a) { return a == 0; });
}

RationalInterval FieldElement::enclosure(const Rational& width) const {
  const auto& f = *field_;
  RationalInterval beta = f.beta;
  for (int guard = 0;; ++guard) {
    auto v = eval_in_inverse_powers(num_, 1 / beta.hi, 1 / beta.lo);
    v.lo /= den_;
    v.hi /= den_;
    if (v.width() <= width || beta.is_point() || guard > 4096) return v;
    const Rational mid = beta.midpoint();
    const int s = sign_of(f.poly(mid));
    if (s == 0) {
      beta = {mid, mid};
    } else if (s == f.sign_at_lo) {
      beta.lo = mid;
    } else {
      beta.hi = mid;
    }
  }
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  const auto& f = *field_;
  RationalInterval beta = f.beta;
  for (int guard = 0; guard < 8192; ++guard) {
    const auto v = eval_in_inverse_powers(num_, 1 / beta.hi, 1 / beta.lo);
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    if (beta.is_point()) return sign_of(v.lo);
    const Rational mid = beta.midpoint();
    const int s = sign_of(f.poly(mid));
    if (s == 0) {
      beta = {mid, mid};
    } else if (s == f.sign_at_lo) {
      beta.lo = mid;
    } else {
      beta.hi = mid;
    }
  }
  throw Error(ErrorKind::Undecidable, "sign refinement did not separate a nonzero element from 0 "
                                      "(minimal polynomial may be reducible)");
}

double FieldElement::to_double() const {
  Rational w(1);
  mpz_mul_2exp(w.get_den_mpz_t(), w.get_den_mpz_t(), 60);
  return enclosure(w).midpoint().get_d();
}

FieldElement FieldElement::mul_by_beta() const {
  // beta * sum a_k beta^-k = sum_k (a_1 q_k + a_{k+1}) beta^-k with q_k = qnum_k / qden.
  const auto& f = *field_;
  const int d = f.d;
  std::vector<Integer> out(static_cast<std::size_t>(d));
  const Integer& a1 = num_[0];
  for (int k = 0; k < d; ++k) {
    Integer next = (k + 1 < d) ? num_[static_cast<std::size_t>(k + 1)] : Integer(0);
    out[static_cast<std::size_t>(k)] = a1 * f.qnum[static_cast<std::size_t>(k)] + f.qden * next;
  }
  return FieldElement(field_, std::move(out), den_ * f.qden);
}

FieldElement FieldElement::div_by_beta() const {
  // beta^-(d+1) = (beta^-1 - sum_{k<d} q_k beta^-(k+1)) / q_d.
  const auto& f = *field_;
  const int d = f.d;
  const Integer& qd = f.qnum[static_cast<std::size_t>(d - 1)];
  const Integer& ad = num_[static_cast<std::size_t>(d - 1)];
  std::vector<Integer> out(static_cast<std::size_t>(d));
  out[0] = ad * f.qden;
  for (int k = 1; k < d; ++k)
    out[static_cast<std::size_t>(k)] =
        num_[static_cast<std::size_t>(k - 1)] * qd - ad * f.qnum[static_cast<std::size_t>(k - 1)];
  return FieldElement(field_, std::move(out), den_ * qd);
}

FieldElement FieldElement::operator-() const {
  std::vector<Integer> out(num_);
  for (auto& a : out) a = -a;
  return FieldElement(field_, std::move(out), den_);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
  const Integer fa = l / a.den_;
  const Integer fb = l / b.den_;
  std::vector<Integer> out(a.num_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.num_[i] * fa + b.num_[i] * fb;
  return FieldElement(a.field_, std::move(out), l);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const Rational& r) {
  std::vector<Integer> out(a.num_);
  for (auto& x : out) x *= r.get_num();
  return FieldElement(a.field_, std::move(out), a.den_ * r.get_den());
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  FieldElement acc = a.field().zero();
  FieldElement shifted = a;
  for (std::size_t k = 0; k < b.num_.size(); ++k) {
    shifted = shifted.div_by_beta();
    if (b.num_[k] != 0) acc = acc + shifted * Rational(b.num_[k]);
  }
  return acc * Rational(Integer(1), b.den_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  const int d = field_->d;
  // Column k holds the coordinates of this * beta^-(k+1); solve M y = coords(1).
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d) + 1));
  FieldElement shifted = *this;
  for (int k = 0; k < d; ++k) {
    shifted = shifted.div_by_beta();
    for (int r = 0; r < d; ++r)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
          Rational(shifted.num_[static_cast<std::size_t>(r)], shifted.den_);
  }
  for (int r = 0; r < d; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)] = field_->q[static_cast<std::size_t>(r)];
  for (auto& row : m)
    for (auto& v : row) v.canonicalize();
  for (int col = 0; col < d; ++col) {
    int piv = col;
    while (piv < d && m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == 0) ++piv;
    if (piv == d) throw Error(ErrorKind::NotIrreducible, "element is a zero divisor");
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(col)]);
    const Rational inv = 1 / m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (auto& v : m[static_cast<std::size_t>(col)]) v *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const Rational factor = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int c = col; c <= d; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= factor * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }
  Integer den(1);
  for (int r = 0; r < d; ++r)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)].get_den_mpz_t());
  std::vector<Integer> out(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    const Rational& v = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(d)];
    out[static_cast<std::size_t>(r)] = v.get_num() * (den / v.get_den());
  }
  return FieldElement(field_, std::move(out), den);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same_field(b);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  if (a == b) return std::strong_ordering::equal;
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string FieldElement::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i) out += ',';
    out += num_[i].get_str();
  }
  out += "]/";
  out += den_.get_str();
  return out;
}

bool RepresentationLess::operator()(const FieldElement& a, const FieldElement& b) const {
  if (a.denominator() != b.denominator()) return a.denominator() < b.denominator();
  return a.numerators() < b.numerators();
}

PisotCheck is_pisot(const NumberField& field) {
  if (field.degree() == 1) return {field.is_algebraic_integer(), Rational(0)};
  const auto& disks = field.conjugates();
  if (!disks) throw Error(ErrorKind::Undecidable, "conjugate moduli could not be certified");
  Rational eta(0);
  bool all_inside = true;
  bool some_outside = false;
  for (const auto& disk : *disks) {
    eta = std::max(eta, disk.modulus_upper);
    if (disk.modulus_upper >= 1) all_inside = false;
    if (disk.modulus_lower >= 1) some_outside = true;
  }
  if (!all_inside && !some_outside)
    throw Error(ErrorKind::Undecidable, "a conjugate modulus cannot be separated from 1");
  return {all_inside && field.is_algebraic_integer(), eta};
}

}  // namespace betadyn
