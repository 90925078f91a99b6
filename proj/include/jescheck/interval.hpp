#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace jescheck {

// Working mantissa precision plus the cap used by adaptive refinement.
struct Precision {
  int bits = 192;
  int max_bits = 1024;
};

enum class Cert { certified_true, certified_false, indeterminate };

const char* to_string(Cert c);

// A certified enclosure [lo, hi] of a real number. Endpoints are binary
// floats of explicit mantissa precision; every operation rounds lo toward
// -inf and hi toward +inf, so the represented value never escapes. Both
// endpoints stay finite; an operation that would produce an infinity or
// an empty interval throws instead.
class Interval {
 public:
  Interval();  // [0, 0]
  explicit Interval(long v, int bits = 64);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval from_integer(const mpz_class& v, int bits);
  static Interval from_rational(const mpq_class& q, int bits);
  // Hull of two exact rationals (lo, hi), outward rounded.
  static Interval hull(const mpq_class& lo, const mpq_class& hi, int bits);

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  int precision() const;

  bool contains(const mpq_class& q) const;
  bool contains(const Interval& other) const;  // other subset of *this
  bool contains_zero() const;
  bool is_strictly_positive() const;  // lo > 0
  bool is_strictly_negative() const;  // hi < 0

  // hi - lo as an exact rational (endpoints are dyadic).
  mpq_class width() const;
  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up

  std::string str_lo(int digits = 21) const;  // decimal, rounded down
  std::string str_hi(int digits = 21) const;  // decimal, rounded up
  std::string str(int digits = 21) const;     // "[lo, hi]"

 private:
  explicit Interval(int bits);  // uninitialized value, endpoints allocated
  void assert_valid() const;    // lo <= hi, both finite

  mpfr_t lo_;
  mpfr_t hi_;

  friend Interval add(const Interval&, const Interval&);
  friend Interval sub(const Interval&, const Interval&);
  friend Interval mul(const Interval&, const Interval&);
  friend Interval div(const Interval&, const Interval&);
  friend Interval neg(const Interval&);
  friend Interval abs(const Interval&);
  friend Interval sqrt(const Interval&);
  friend Interval pow_int(const Interval&, long);
  friend Interval log(const Interval&);
  friend Interval exp(const Interval&);
  friend Interval min(const Interval&, const Interval&);
  friend Interval max(const Interval&, const Interval&);
};

Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
Interval mul(const Interval& a, const Interval& b);
Interval div(const Interval& a, const Interval& b);  // 0 not in b
Interval neg(const Interval& a);
Interval abs(const Interval& a);
Interval sqrt(const Interval& a);  // clamps at 0 if lo < 0 <= hi; hi < 0 throws
Interval pow_int(const Interval& a, long n);
Interval log(const Interval& a);  // requires lo > 0
Interval exp(const Interval& a);
Interval min(const Interval& a, const Interval& b);  // pointwise
Interval max(const Interval& a, const Interval& b);  // pointwise

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }

// Enclosure of log of an exact positive integer / rational.
Interval log_of(const mpz_class& v, int bits);
Interval log_of(const mpq_class& q, int bits);
// Enclosure of e^q for an exact rational q.
Interval exp_of(const mpq_class& q, int bits);

// certified_true  iff a.hi < b.lo   (every point of a below every point of b)
// certified_false iff a.lo > b.hi
// indeterminate otherwise; the caller refines precision and retries.
Cert certify_less(const Interval& a, const Interval& b);
Cert certify_less(const Interval& a, const mpq_class& b);
Cert certify_less(const mpq_class& a, const Interval& b);

struct Certified {
  Cert verdict = Cert::indeterminate;
  Interval value;  // enclosure at the deciding precision
  int bits = 0;
};

// Re-evaluates claim(bits) -> {Cert, Interval} at doubled precision until
// the verdict is decided or max_bits is reached. Indeterminate at the cap
// is returned as-is (reported, never silently widened).
template <typename F>
Certified decide(F&& claim, Precision p) {
  int bits = p.bits;
  for (;;) {
    auto [cert, value] = claim(bits);
    if (cert != Cert::indeterminate || bits >= p.max_bits)
      return Certified{cert, std::move(value), bits};
    bits = bits * 2 < p.max_bits ? bits * 2 : p.max_bits;
  }
}

}  // namespace jescheck
