#include "betadyn/dimension.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <optional>

#include "betadyn/error.hpp"

namespace betadyn {

namespace {

constexpr mpfr_prec_t kPrecision = 256;

class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, kPrecision); }
  Mpfr(const Rational& q, mpfr_rnd_t rnd) : Mpfr() { mpfr_set_q(v_, q.get_mpq_t(), rnd); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(v_, rnd); }

 private:
  mpfr_t v_;
};

double rational_down(const Rational& q) { return Mpfr(q, MPFR_RNDD).to_double(MPFR_RNDD); }
double rational_up(const Rational& q) { return Mpfr(q, MPFR_RNDU).to_double(MPFR_RNDU); }

Polynomial from_coefficients(std::vector<Rational> c) { return Polynomial(std::move(c)); }

// Largest real root, collapsed to a point when it is an integer.
RationalInterval certified_largest_root(const Polynomial& p, const Rational& tolerance) {
  auto r = largest_real_root(p, tolerance);
  if (!r) throw Error(ErrorKind::NoRootInRange, "polynomial " + p.to_string() + " has no real root");
  if (!r->is_point()) {
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), r->midpoint().get_num_mpz_t(), r->midpoint().get_den_mpz_t());
    for (const Rational& c : {Rational(k), Rational(k + 1)})
      if (r->contains(c) && p(c) == 0) return {c, c};
  }
  return *r;
}

double residual_at_mid(const Polynomial& p, const RationalInterval& r) {
  Rational v = p(r.midpoint());
  return rational_up(abs(v));
}

Polynomial lambda_polynomial(int N) {
  std::vector<Rational> c(static_cast<std::size_t>(N), Rational(0));
  for (int i = 0; i <= N - 3; ++i) c[static_cast<std::size_t>(i)] = -1;
  c[static_cast<std::size_t>(N - 1)] = 1;
  return from_coefficients(std::move(c));
}

Polynomial nbonacci_poly(int k) {
  std::vector<Rational> c(static_cast<std::size_t>(k + 1), Rational(-1));
  c[static_cast<std::size_t>(k)] = 1;
  return from_coefficients(std::move(c));
}

const Rational& tight_tolerance() {
  static const Rational t(mpz_class(1), mpz_class("1000000000000000000000000000000"));
  return t;
}

}  // namespace

Polynomial characteristic_polynomial(const AdjacencyMatrix& m) {
  const std::size_t n = m.size();
  // Berkowitz: coefficients kept highest degree first.
  std::vector<Integer> vect{1};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Integer> col{1, -m(r, r)};
    // c_{k+2} = -R A_r^k S with R the row, S the column bordering the leading r x r block.
    std::vector<Integer> s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer dot = 0;
      for (std::size_t j = 0; j < r; ++j) dot += m(r, j) * s[j];
      col.push_back(-dot);
      std::vector<Integer> next(r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * s[j];
      s = std::move(next);
    }
    std::vector<Integer> out(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] += col[i - j] * vect[j];
    vect = std::move(out);
  }
  std::vector<Rational> c(vect.rbegin(), vect.rend());
  return Polynomial(std::move(c));
}

PerronRoot perron_root(const AdjacencyMatrix& m, const Rational& tolerance) {
  PerronRoot out;
  const std::size_t n = m.size();
  if (n == 0) {
    out.root = {0, 0};
    out.exact = out.zero = true;
    return out;
  }
  // Power iteration on M + I avoids oscillation on periodic components.
  std::vector<double> v(n, 1.0);
  double lambda = 0;
  for (int it = 0; it < 500; ++it) {
    std::vector<double> w(v);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += m(i, j) * v[j];
    double norm = 0;
    for (double x : w) norm = std::max(norm, x);
    for (auto& x : w) x /= norm;
    lambda = norm;
    v = std::move(w);
  }
  out.estimate = lambda - 1;

  const Polynomial p = characteristic_polynomial(m);
  out.root = certified_largest_root(p, tolerance);
  out.exact = out.root.is_point();
  out.zero = out.exact && out.root.lo == 0;
  return out;
}

CertifiedReal log_enclosure(const RationalInterval& x) {
  if (sign_of(x.lo) <= 0) throw Error(ErrorKind::OutOfDomain, "logarithm of a non-positive enclosure");
  Mpfr lo(x.lo, MPFR_RNDD), hi(x.hi, MPFR_RNDU);
  mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_double(MPFR_RNDD), hi.to_double(MPFR_RNDU)};
}

CertifiedReal log_ratio(const RationalInterval& root, const RationalInterval& base) {
  if (base.lo <= 1) throw Error(ErrorKind::OutOfDomain, "base enclosure must exceed 1");
  Mpfr nlo(root.lo, MPFR_RNDD), nhi(root.hi, MPFR_RNDU), dlo(base.lo, MPFR_RNDD), dhi(base.hi, MPFR_RNDU);
  mpfr_log(nlo.get(), nlo.get(), MPFR_RNDD);
  mpfr_log(nhi.get(), nhi.get(), MPFR_RNDU);
  mpfr_log(dlo.get(), dlo.get(), MPFR_RNDD);
  mpfr_log(dhi.get(), dhi.get(), MPFR_RNDU);
  Mpfr lo, hi;
  // Denominator is positive; pick the extreme quotients by sign of the numerator.
  mpfr_div(lo.get(), nlo.get(), mpfr_sgn(nlo.get()) >= 0 ? dhi.get() : dlo.get(), MPFR_RNDD);
  mpfr_div(hi.get(), nhi.get(), mpfr_sgn(nhi.get()) >= 0 ? dlo.get() : dhi.get(), MPFR_RNDU);
  return {lo.to_double(MPFR_RNDD), hi.to_double(MPFR_RNDU)};
}

RationalInterval nbonacci_root(int k, const Rational& tolerance) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "n-bonacci order must be at least 1");
  return certified_largest_root(nbonacci_poly(k), tolerance);
}

DimensionResult solve_lambda_N(int N) {
  if (N < 3) throw Error(ErrorKind::InvalidArgument, "N must be at least 3");
  const Polynomial p = lambda_polynomial(N);
  DimensionResult r;
  r.equation_tag = "lambda_N";
  r.root = certified_largest_root(p, default_tolerance());
  r.residual = residual_at_mid(p, r.root);
  r.dimension = log_ratio(r.root, nbonacci_root(2, tight_tolerance()));
  return r;
}

DimensionResult doubling_hole_dimension(int N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "N must be at least 1");
  DimensionResult r;
  r.equation_tag = "doubling";
  r.root = nbonacci_root(N);
  r.residual = residual_at_mid(nbonacci_poly(N), r.root);
  r.dimension = log_ratio(r.root, {2, 2});
  return r;
}

EntropyResult sgap_entropy(int n, int N) {
  if (N < n + 2) throw Error(ErrorKind::EmptyGapSet, "gap set {n+1, ..., N-1} is empty");
  std::vector<Rational> c(static_cast<std::size_t>(N + 1), Rational(0));
  for (int k = n + 1; k <= N - 1; ++k) c[static_cast<std::size_t>(N - k - 1)] = -1;
  c[static_cast<std::size_t>(N)] = 1;
  EntropyResult r;
  r.root = certified_largest_root(from_coefficients(std::move(c)), default_tolerance());
  r.entropy = log_enclosure(r.root);
  return r;
}

namespace {

struct MoranSums {
  double lo_minus_one;
  double hi_minus_one;
  std::optional<int> sign;  // +1 if sum r_i^s > 1, -1 if < 1, 0 if exactly 1, nullopt if undecided
};

MoranSums moran_sums(const std::vector<RationalInterval>& ratios, const Rational& s) {
  Mpfr se(s, MPFR_RNDN);
  if (mpfr_cmp_q(se.get(), s.get_mpq_t()) != 0) throw Error(ErrorKind::Undecidable, "exponent not representable");
  Mpfr lo_sum, hi_sum, t;
  mpfr_set_zero(lo_sum.get(), 1);
  mpfr_set_zero(hi_sum.get(), 1);
  for (const auto& r : ratios) {
    Mpfr a(r.lo, MPFR_RNDD), b(r.hi, MPFR_RNDU);
    mpfr_pow(t.get(), a.get(), se.get(), MPFR_RNDD);
    mpfr_add(lo_sum.get(), lo_sum.get(), t.get(), MPFR_RNDD);
    mpfr_pow(t.get(), b.get(), se.get(), MPFR_RNDU);
    mpfr_add(hi_sum.get(), hi_sum.get(), t.get(), MPFR_RNDU);
  }
  MoranSums out;
  if (mpfr_cmp_ui(lo_sum.get(), 1) > 0)
    out.sign = 1;
  else if (mpfr_cmp_ui(hi_sum.get(), 1) < 0)
    out.sign = -1;
  else if (mpfr_equal_p(lo_sum.get(), hi_sum.get()))
    out.sign = 0;
  mpfr_sub_ui(lo_sum.get(), lo_sum.get(), 1, MPFR_RNDD);
  mpfr_sub_ui(hi_sum.get(), hi_sum.get(), 1, MPFR_RNDU);
  out.lo_minus_one = lo_sum.to_double(MPFR_RNDD);
  out.hi_minus_one = hi_sum.to_double(MPFR_RNDU);
  return out;
}

std::optional<int> moran_sign(const std::vector<RationalInterval>& ratios, const Rational& s) {
  return moran_sums(ratios, s).sign;
}

}  // namespace

DimensionResult moran_solve(const std::vector<RationalInterval>& ratios) {
  if (ratios.empty()) throw Error(ErrorKind::InvalidArgument, "no contraction ratios");
  for (const auto& r : ratios)
    if (sign_of(r.lo) <= 0 || r.hi >= 1) throw Error(ErrorKind::InvalidArgument, "contraction ratios must lie in (0,1)");
  DimensionResult out;
  out.equation_tag = "moran";
  auto finish = [&](Rational lo, Rational hi) {
    out.root = {lo, hi};
    out.dimension = {rational_down(lo), rational_up(hi)};
    const auto at_mid = moran_sums(ratios, out.root.midpoint());
    out.residual = std::max(std::abs(at_mid.lo_minus_one), std::abs(at_mid.hi_minus_one));
    return out;
  };
  if (ratios.size() == 1) return finish(0, 0);

  // Called when rounding cannot separate sum r_i^s from 1 at s; the root is within reach.
  auto tight = [&](const Rational& s) {
    const Rational eps(mpz_class(1), mpz_class(1) << 80);
    if (moran_sign(ratios, s - eps) == 1 && moran_sign(ratios, s + eps) == -1) return finish(s - eps, s + eps);
    throw Error(ErrorKind::Undecidable, "Moran equation undecided near the root");
  };
  Rational lo = 0, hi = 1;
  for (;;) {
    const auto s = moran_sign(ratios, hi);
    if (!s) return tight(hi);
    if (*s == 0) return finish(hi, hi);
    if (*s < 0) break;
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > default_tolerance()) {
    const Rational mid = (lo + hi) / 2;
    const auto s = moran_sign(ratios, mid);
    if (!s) return tight(mid);
    if (*s == 0) return finish(mid, mid);
    (*s > 0 ? lo : hi) = mid;
  }
  return finish(lo, hi);
}

RationalInterval beta_power_enclosure(const NumberField& field, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "exponent must be non-negative");
  const auto& b = field.beta_interval();
  Rational lo = 1, hi = 1;
  for (int i = 0; i < k; ++i) {
    lo /= b.hi;
    hi /= b.lo;
  }
  return {lo, hi};
}

DimensionResult survivor_dimension(const BetaDynamics& dyn, int N) {
  const auto p = build_partition(dyn, N);
  const auto reduced = delete_states(adjacency(p), p.hole);
  const auto pr = perron_root(reduced);
  DimensionResult r;
  r.equation_tag = "perron";
  r.root = pr.root;
  r.residual = residual_at_mid(characteristic_polynomial(reduced), pr.root);
  r.note = "survivor set and graph-directed set differ by at most a countable set";
  if (pr.zero) {
    r.zero_radius = true;
    r.dimension = {0, 0};
    return r;
  }
  r.dimension = log_ratio(pr.root, dyn.field().beta_interval());
  return r;
}

std::pair<DimensionResult, DimensionResult> dim_bounds_E(int n, int N) {
  if (n < 2 || N < 4) throw Error(ErrorKind::InvalidArgument, "need n >= 2 and N >= 4");
  if (n == 2) return {solve_lambda_N(N - 1), solve_lambda_N(N)};
  BetaDynamics dyn(NumberField::make(nbonacci_polynomial(n)));
  return {survivor_dimension(dyn, N - 1), survivor_dimension(dyn, N)};
}

}  // namespace betadyn
