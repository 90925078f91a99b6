#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

#include "jescheck/interval.hpp"
#include "jescheck/report.hpp"

namespace jescheck {

// A hypothesis of the lower-bound machinery failed (or could not be
// certified at the precision cap). The message names the inequality.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// rho > 1, either an exact rational or e^q for an exact rational q > 0.
// The e^q form keeps lambda = delta * q exact.
struct Rho {
  bool is_exp = true;
  mpq_class value;  // q when is_exp, rho itself otherwise

  static Rho exp_of(mpq_class q) { return Rho{true, std::move(q)}; }
  static Rho rational(mpq_class r) { return Rho{false, std::move(r)}; }
};

struct LaurentParams {
  Rho rho = Rho::exp_of(mpq_class(63, 40));  // e^1.575
  mpq_class mu = mpq_class(1, 3);
};

// delta = (1 + 2*mu - mu^2)/2 is always an exact rational; lambda =
// delta * log(rho) is exact precisely when rho = e^q.
struct DerivedParams {
  mpq_class delta;
  std::optional<mpq_class> lambda_exact;
};

DerivedParams derive_params(const LaurentParams& params);
Interval lambda_enclosure(const LaurentParams& params, int bits);
Interval log_rho_enclosure(const LaurentParams& params, int bits);

// The linear form b1*log(a1) - b2*log(a2) with a1, a2 >= 2 coprime and
// b1, b2 >= 1. Construction validates the hypotheses.
struct LinearFormInstance {
  mpz_class a1, a2;
  mpz_class b1, b2;
};

LinearFormInstance make_instance(mpz_class a1, mpz_class a2, mpz_class b1, mpz_class b2);

struct BoundTerms {
  Interval A1, A2;
  Interval B, H;
  Interval omega, theta;
  Interval C0, C, Cprime;
};

// Derived quantities of the lower bound, with A_j = coeff * log(a_j).
// When a_coeff_override is absent the exact rho+1 is used; an override
// must certify >= rho+1. B is the minimal admissible value.
BoundTerms assemble_terms(const LinearFormInstance& inst, const LaurentParams& params,
                          const std::optional<mpq_class>& a_coeff_override, Precision p);

// Enclosure of the general lower bound for log|Lambda|:
//   -C*A1*A2*B^2 - sqrt(omega*theta)*B - log(C'*A1*A2*B^2).
// The usable one-sided bound is the lower endpoint.
Interval laurent_lower_bound(const LinearFormInstance& inst, const LaurentParams& params,
                             Precision p);

// Enclosure of Lambda itself at the given precision.
Interval linear_form(const LinearFormInstance& inst, int bits);

// Enclosure of log|Lambda|, refining until the sign of Lambda is resolved.
Certified log_abs_linear_form(const LinearFormInstance& inst, Precision p);

// The specialized closed-form lower bound
//   -coeff * log(a1) * log(a2) * (1.8248 + log(b1/log(a2) + b2/log(a1)))^2,
// valid when min{a1,a2} >= 2704 and b1/A2 > b2/A1 > 240 with
// A_j = 5.8314*log(a_j). Hypothesis failures throw HypothesisError.
Interval specialized_lower_bound(const LinearFormInstance& inst, Precision p);
Interval specialized_lower_bound(const LinearFormInstance& inst, Precision p,
                                 const mpq_class& coeff);

// Hypothesis floor for the specialized bound's constant chain.
struct SpecializationConfig {
  mpz_class a_min = 2704;
  mpq_class ratio_floor = 240;
  mpq_class closed_form_coeff = mpq_class(29673, 2000);  // 14.8365
  Precision prec;
};

// Certifies every displayed constant of the specialization, evaluated at
// the extremal admissible configuration (base floor a_min, ratio floor):
// the A_j floor, the B and H floors, the omega/theta ceilings, the C0, C,
// C' ceilings, the two small-term ceilings, the aggregate coefficient and
// the closed-form coefficient. Failures become report entries, never
// exceptions.
CertificationReport verify_specialization_constants(const SpecializationConfig& cfg);

inline CertificationReport verify_specialization_constants() {
  return verify_specialization_constants(SpecializationConfig{});
}

}  // namespace jescheck
