#include "jescheck/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace jescheck {

const char* to_string(Cert c) {
  switch (c) {
    case Cert::certified_true: return "certified_true";
    case Cert::certified_false: return "certified_false";
    case Cert::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

namespace {

int prec_of(mpfr_srcptr x) { return static_cast<int>(mpfr_get_prec(x)); }

int join_prec(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Interval::Interval(int bits) {
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
}

Interval::Interval() : Interval(64) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v, int bits) : Interval(bits) {
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
  assert_valid();
}

Interval::Interval(const Interval& other) : Interval(other.precision()) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, 64);
  mpfr_init2(hi_, 64);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void Interval::assert_valid() const {
  if (!mpfr_number_p(lo_) || !mpfr_number_p(hi_))
    throw std::overflow_error("interval endpoint not finite");
  if (mpfr_cmp(lo_, hi_) > 0)
    throw std::logic_error("interval endpoints out of order");
}

Interval Interval::from_integer(const mpz_class& v, int bits) {
  Interval r(bits);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  r.assert_valid();
  return r;
}

Interval Interval::from_rational(const mpq_class& q, int bits) {
  Interval r(bits);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  r.assert_valid();
  return r;
}

Interval Interval::hull(const mpq_class& lo, const mpq_class& hi, int bits) {
  if (lo > hi) throw std::invalid_argument("hull endpoints out of order");
  Interval r(bits);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  r.assert_valid();
  return r;
}

int Interval::precision() const {
  return std::max(prec_of(lo_), prec_of(hi_));
}

bool Interval::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& other) const {
  return mpfr_cmp(lo_, other.lo_) <= 0 && mpfr_cmp(hi_, other.hi_) >= 0;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::is_strictly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::is_strictly_negative() const { return mpfr_sgn(hi_) < 0; }

mpq_class Interval::width() const {
  mpq_class qlo, qhi;
  mpfr_get_q(qlo.get_mpq_t(), lo_);
  mpfr_get_q(qhi.get_mpq_t(), hi_);
  return qhi - qlo;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string Interval::str_lo(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*RDe", digits, lo_);
  return buf.data();
}

std::string Interval::str_hi(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*RUe", digits, hi_);
  return buf.data();
}

std::string Interval::str(int digits) const {
  return "[" + str_lo(digits) + ", " + str_hi(digits) + "]";
}

Interval add(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  r.assert_valid();
  return r;
}

Interval sub(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  r.assert_valid();
  return r;
}

// Products and quotients take the min/max over all endpoint combinations,
// each computed in both rounding directions.
Interval mul(const Interval& a, const Interval& b) {
  int bits = join_prec(a, b);
  Interval r(bits);
  mpfr_t t;
  mpfr_init2(t, bits);
  bool first = true;
  for (mpfr_srcptr x : {a.lo(), a.hi()})
    for (mpfr_srcptr y : {b.lo(), b.hi()}) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  r.assert_valid();
  return r;
}

Interval div(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("division by interval containing 0");
  int bits = join_prec(a, b);
  Interval r(bits);
  mpfr_t t;
  mpfr_init2(t, bits);
  bool first = true;
  for (mpfr_srcptr x : {a.lo(), a.hi()})
    for (mpfr_srcptr y : {b.lo(), b.hi()}) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  r.assert_valid();
  return r;
}

Interval neg(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  r.assert_valid();
  return r;
}

Interval abs(const Interval& a) {
  if (mpfr_sgn(a.lo()) >= 0) return a;
  if (mpfr_sgn(a.hi()) <= 0) return neg(a);
  Interval r(a.precision());
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  if (mpfr_cmp(a.hi(), r.hi_) > 0) mpfr_set(r.hi_, a.hi(), MPFR_RNDU);
  r.assert_valid();
  return r;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.hi()) < 0) throw std::domain_error("sqrt of interval with negative upper endpoint");
  Interval r(a.precision());
  if (mpfr_sgn(a.lo()) < 0)
    mpfr_set_zero(r.lo_, 1);  // restrict to the domain of sqrt
  else
    mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  r.assert_valid();
  return r;
}

Interval pow_int(const Interval& a, long n) {
  int bits = a.precision();
  Interval r(bits);
  if (n == 0) {
    mpfr_set_si(r.lo_, 1, MPFR_RNDD);
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  if (n < 0) return div(Interval(1, bits), pow_int(a, -n));
  bool even = n % 2 == 0;
  if (!even || mpfr_sgn(a.lo()) >= 0) {
    mpfr_pow_si(r.lo_, a.lo_, n, MPFR_RNDD);
    mpfr_pow_si(r.hi_, a.hi_, n, MPFR_RNDU);
  } else if (mpfr_sgn(a.hi()) <= 0) {
    mpfr_pow_si(r.lo_, a.hi_, n, MPFR_RNDD);
    mpfr_pow_si(r.hi_, a.lo_, n, MPFR_RNDU);
  } else {
    // even power of an interval straddling 0
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, bits);
    mpfr_pow_si(t, a.lo_, n, MPFR_RNDU);
    mpfr_pow_si(r.hi_, a.hi_, n, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
  }
  r.assert_valid();
  return r;
}

Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo()) <= 0) throw std::domain_error("log of non-positive interval");
  Interval r(a.precision());
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  r.assert_valid();
  return r;
}

Interval exp(const Interval& a) {
  Interval r(a.precision());
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  r.assert_valid();
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  r.assert_valid();
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  r.assert_valid();
  return r;
}

Interval log_of(const mpz_class& v, int bits) {
  if (v <= 0) throw std::domain_error("log of non-positive integer");
  return log(Interval::from_integer(v, bits));
}

Interval log_of(const mpq_class& q, int bits) {
  if (q <= 0) throw std::domain_error("log of non-positive rational");
  return log(Interval::from_rational(q, bits));
}

Interval exp_of(const mpq_class& q, int bits) {
  return exp(Interval::from_rational(q, bits));
}

Cert certify_less(const Interval& a, const Interval& b) {
  if (mpfr_cmp(a.hi(), b.lo()) < 0) return Cert::certified_true;
  if (mpfr_cmp(a.lo(), b.hi()) > 0) return Cert::certified_false;
  return Cert::indeterminate;
}

Cert certify_less(const Interval& a, const mpq_class& b) {
  if (mpfr_cmp_q(a.hi(), b.get_mpq_t()) < 0) return Cert::certified_true;
  if (mpfr_cmp_q(a.lo(), b.get_mpq_t()) > 0) return Cert::certified_false;
  return Cert::indeterminate;
}

Cert certify_less(const mpq_class& a, const Interval& b) {
  if (mpfr_cmp_q(b.lo(), a.get_mpq_t()) > 0) return Cert::certified_true;
  if (mpfr_cmp_q(b.hi(), a.get_mpq_t()) < 0) return Cert::certified_false;
  return Cert::indeterminate;
}

}  // namespace jescheck
