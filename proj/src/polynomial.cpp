#include "betadyn/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "betadyn/error.hpp"

namespace betadyn {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::from_integers(std::span<const Integer> coefficients) {
  std::vector<Rational> q;
  q.reserve(coefficients.size());
  for (const auto& c : coefficients) q.emplace_back(c);
  return Polynomial(std::move(q));
}

Polynomial Polynomial::monomial(const Rational& c, int power) {
  std::vector<Rational> q(static_cast<std::size_t>(power) + 1, Rational(0));
  q.back() = c;
  return Polynomial(std::move(q));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double Polynomial::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Rational> m(coeffs_);
  const Rational lead = leading();
  for (auto& c : m) c /= lead;
  return Polynomial(std::move(m));
}

std::vector<Integer> Polynomial::primitive_integer_coefficients() const {
  Integer den(1);
  for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  Integer content(0);
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content == 0) return out;
  if (!out.empty() && out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem(a.coeffs_);
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / b.leading();
    quot[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = Polynomial::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() < 1) return p.monic();
  const Polynomial g = gcd(p, p.derivative());
  return Polynomial::divmod(p, g).first.monic();
}

int sign_of(const Rational& x) { return sgn(x); }

Rational cauchy_bound(const Polynomial& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coefficient(i) / p.leading())));
  return m + 1;
}

SturmSequence::SturmSequence(const Polynomial& squarefree) {
  chain_.push_back(squarefree);
  chain_.push_back(squarefree.derivative());
  while (!chain_.back().is_zero()) {
    auto r = Polynomial::divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    // Only signs matter along the chain; normalizing keeps coefficients small.
    std::vector<Rational> neg;
    const Rational lead = abs(r.leading());
    for (const auto& c : r.coefficients()) neg.push_back(-c / lead);
    chain_.emplace_back(std::move(neg));
  }
  if (chain_.back().is_zero()) chain_.pop_back();
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = sign_of(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  return sign_changes(a) - sign_changes(b);
}

RationalInterval refine_root(const Polynomial& p, RationalInterval bracket, const Rational& tolerance) {
  int slo = sign_of(p(bracket.lo));
  if (slo == 0) return {bracket.lo, bracket.lo};
  const int shi = sign_of(p(bracket.hi));
  if (shi == 0) return {bracket.hi, bracket.hi};
  if (slo == shi) throw Error(ErrorKind::InvalidArgument, "refine_root: interval does not bracket a sign change");
  while (bracket.width() > tolerance) {
    const Rational mid = bracket.midpoint();
    const int s = sign_of(p(mid));
    if (s == 0) return {mid, mid};
    if (s == slo) {
      bracket.lo = mid;
    } else {
      bracket.hi = mid;
    }
  }
  return bracket;
}

namespace {

// Splits (a, b] until every piece holds exactly one root of the squarefree q.
void isolate(const SturmSequence& sturm, const Rational& a, const Rational& b,
             std::vector<RationalInterval>& out) {
  const int n = sturm.count_roots(a, b);
  if (n == 0) return;
  if (n == 1) {
    out.push_back({a, b});
    return;
  }
  const Rational mid = (a + b) / 2;
  isolate(sturm, a, mid, out);
  isolate(sturm, mid, b, out);
}

RationalInterval refine_isolated(const Polynomial& q, const SturmSequence& sturm,
                                 RationalInterval piece, const Rational& tolerance) {
  // q has exactly one simple root in (lo, hi]; it either sits at hi or q changes sign.
  // lo itself may be a neighbouring root, in which case shrink away from it.
  for (;;) {
    if (q(piece.hi) == 0) return {piece.hi, piece.hi};
    if (q(piece.lo) != 0) break;
    const Rational mid = piece.midpoint();
    if (sturm.count_roots(piece.lo, mid) == 1) {
      piece.hi = mid;
    } else {
      piece.lo = mid;
    }
  }
  return refine_root(q, piece, tolerance);
}

}  // namespace

std::optional<RationalInterval> largest_real_root(const Polynomial& p, const Rational& tolerance) {
  if (p.degree() < 1) return std::nullopt;
  const Polynomial q = squarefree_part(p);
  const SturmSequence sturm(q);
  const Rational bound = cauchy_bound(q);
  Rational lo = -bound;
  Rational hi = bound;
  if (sturm.count_roots(lo, hi) == 0) return std::nullopt;
  while (sturm.count_roots(lo, hi) > 1) {
    const Rational mid = (lo + hi) / 2;
    if (sturm.count_roots(mid, hi) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return refine_isolated(q, sturm, {lo, hi}, tolerance);
}

std::vector<RationalInterval> real_roots_in(const Polynomial& p, const Rational& a, const Rational& b,
                                            const Rational& tolerance) {
  std::vector<RationalInterval> out;
  if (p.degree() < 1) return out;
  const Polynomial q = squarefree_part(p);
  const SturmSequence sturm(q);
  std::vector<RationalInterval> pieces;
  isolate(sturm, a, b, pieces);
  for (const auto& piece : pieces) {
    auto r = refine_isolated(q, sturm, piece, tolerance);
    if (r.hi == b && r.is_point()) continue;  // (a, b) is open on the right
    out.push_back(r);
  }
  return out;
}

Rational default_tolerance() {
  Rational t(1);
  for (int i = 0; i < 12; ++i) t /= 10;
  return t;
}

}  // namespace betadyn
