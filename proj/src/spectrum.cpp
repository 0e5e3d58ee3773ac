#include "betadyn/spectrum.hpp"

#include <mpfr.h>

#include <cmath>
#include <sstream>

#include "betadyn/error.hpp"

namespace betadyn {

namespace {

// Exact comparison with a floating-point shortcut when the approximations are far apart.
int compare(const FieldElement& a, double da, const FieldElement& b, double db) {
  const double slack = 1e-9 * (1 + std::abs(da) + std::abs(db));
  if (da < db - slack) return -1;
  if (da > db + slack) return 1;
  const auto c = a <=> b;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

CertifiedReal certify(const FieldElement& x) {
  Rational w(1);
  mpz_mul_2exp(w.get_den_mpz_t(), w.get_den_mpz_t(), 70);
  const auto e = x.enclosure(w);
  mpfr_t t;
  mpfr_init2(t, 128);
  mpfr_set_q(t, e.lo.get_mpq_t(), MPFR_RNDD);
  const double lo = mpfr_get_d(t, MPFR_RNDD);
  mpfr_set_q(t, e.hi.get_mpq_t(), MPFR_RNDU);
  const double hi = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return {lo, hi};
}

}  // namespace

SpectrumTable enumerate_spectrum(const NumberField& field, int level) {
  if (level < 0 || level > kMaxSpectrumLevel)
    throw Error(ErrorKind::BudgetExceeded, "spectrum level must lie in [0, " + std::to_string(kMaxSpectrumLevel) + "]");
  SpectrumTable t;
  t.values = {field.zero(), field.one()};
  t.approx = {0.0, 1.0};
  for (int n = 1; n <= level; ++n) {
    const FieldElement shift = field.beta_power(n);
    const double dshift = shift.to_double();
    std::vector<FieldElement> values;
    std::vector<double> approx;
    values.reserve(2 * t.size());
    approx.reserve(2 * t.size());
    auto emit = [&](const FieldElement& v, double d) {
      values.push_back(v);
      approx.push_back(d);
    };
    std::size_t i = 0, j = 0;
    std::optional<FieldElement> pending;  // shifted value j, computed once
    while (i < t.size() || j < t.size()) {
      if (j < t.size() && !pending) pending = t.values[j] + shift;
      const double dj = j < t.size() ? t.approx[j] + dshift : 0;
      if (j == t.size()) {
        emit(t.values[i], t.approx[i]);
        ++i;
        continue;
      }
      if (i == t.size()) {
        emit(*pending, dj);
        pending.reset();
        ++j;
        continue;
      }
      const int c = compare(t.values[i], t.approx[i], *pending, dj);
      if (c <= 0) {
        emit(t.values[i], t.approx[i]);
        ++i;
        if (c == 0) {
          pending.reset();
          ++j;
        }
      } else {
        emit(*pending, dj);
        pending.reset();
        ++j;
      }
    }
    t.values = std::move(values);
    t.approx = std::move(approx);
  }
  t.level = level;
  return t;
}

GapResult max_gap(const SpectrumTable& t, const FieldElement& lo, const FieldElement& hi) {
  GapResult r;
  std::size_t k = 0;
  while (k < t.size() && t.values[k] < lo) ++k;
  for (; k + 1 < t.size() && t.values[k + 1] <= hi; ++k) {
    const FieldElement g = t.values[k + 1] - t.values[k];
    if (!r.gap || *r.gap < g) {
      r.gap = g;
      r.index = k;
    }
  }
  r.value = r.gap ? certify(*r.gap) : CertifiedReal{0, 0};
  return r;
}

GapResult max_gap(const SpectrumTable& t, bool use_window) {
  if (t.values.empty()) throw Error(ErrorKind::InvalidArgument, "empty spectrum table");
  if (!use_window) {
    auto r = max_gap(t, t.values.front(), t.values.back());
    r.window = "none";
    return r;
  }
  const NumberField f = t.values.front().field();
  const int top = t.level;
  const int bottom = top / 2;
  auto r = max_gap(t, f.beta_power(bottom), f.beta_power(top));
  r.window = "[beta^" + std::to_string(bottom) + ", beta^" + std::to_string(top) + "]";
  return r;
}

std::string to_decimal(const FieldElement& x, int digits) {
  Rational w(1);
  const auto bits = static_cast<mp_bitcnt_t>(4 * digits + 16);
  mpz_mul_2exp(w.get_den_mpz_t(), w.get_den_mpz_t(), bits);
  const auto e = x.enclosure(w);
  mpfr_t t;
  mpfr_init2(t, static_cast<mpfr_prec_t>(bits + 16));
  mpfr_set_q(t, e.midpoint().get_mpq_t(), MPFR_RNDN);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, t);
  std::string out(s);
  mpfr_free_str(s);
  mpfr_clear(t);
  return out;
}

std::string spectrum_csv(const SpectrumTable& t, int digits) {
  std::ostringstream os;
  os << "index,value,gap_to_next\n";
  for (std::size_t k = 0; k < t.size(); ++k) {
    os << k << ',' << to_decimal(t.values[k], digits) << ',';
    if (k + 1 < t.size()) os << to_decimal(t.values[k + 1] - t.values[k], digits);
    os << '\n';
  }
  return os.str();
}

}  // namespace betadyn
