#pragma once

#include <gmpxx.h>

#include "jescheck/interval.hpp"
#include "jescheck/pairs.hpp"
#include "jescheck/report.hpp"

namespace jescheck {

// Knobs for the contradiction pipeline. k_floor and f_coefficient exist
// for sensitivity reruns; the defaults are the replicated constants.
struct ChainConfig {
  mpq_class k_floor = mpq_class(154, 5);                   // 30.8
  long n_floor = 85;
  mpq_class f_coefficient = mpq_class(29673, 2000);        // 14.8365
  mpq_class root_tolerance = mpq_class(1, 100);
  mpq_class granularity = mpq_class(1, 10);
  Precision prec;
};

// Certifies the base floor: m+n > (k_floor+1)*n_floor, which reaches 2703
// at the default floors, hence m^2+n^2 > m^2-n^2 >= 2704 over integers.
CertificationReport verify_pair_floor(long n_floor, const mpq_class& k_floor, Precision p);

// Exact (3/2)(k^2 - 1), the certified lower bound for z/log(m^2-n^2).
// k < 1 is a domain error; k = 1 degenerates to 0.
mpq_class lower_ratio_bound(const mpq_class& k);

// Certifies the two exclusion steps forcing x - z >= 3 for a pair:
// x <= z is impossible by the exact square-gap identity, and x - z = 1 is
// removed through the unit-residue congruence.
CertificationReport verify_exponent_gap(const PythagoreanPair& p);

// Certifies log(4mn) / (log(m^2+n^2) * log(m^2-n^2)) < 0.1266 over the
// hypothesis region, via the factorization m^2-n^2 = (m+n)(m-n) and the
// floors m+n > (k+1)n, m-n > (k-1)n. Also records that the displayed
// intermediate bound exceeds 0.1266 at the floor (a known display-level
// discrepancy) while the end-to-end claim certifies.
CertificationReport verify_log_ratio_ceiling(const ChainConfig& cfg);

// f(t) = t - 0.1266 - coeff*(1.8248 + log(2t))^2; t <= 0 is a domain error.
Interval threshold_fn(const mpq_class& t, const mpq_class& coeff, int bits);

// Certifies f'(t) > 0 for all t >= t_min: the slope term
// (1.8248 + log(2t))/t is decreasing there and f'(t_min) > 0.
// Refused (domain error) below 250, where the claim is not made.
CertificationReport verify_threshold_fn_monotone(const mpq_class& t_min, const ChainConfig& cfg);

struct RootBracket {
  mpq_class lo, hi;  // f(lo) < 0 < f(hi), certified
};

// Certified bisection bracket of the largest zero of f, width at most
// root_tolerance, starting from (250, 1420) and expanding upward if the
// coefficient override moved the root.
RootBracket bracket_threshold_root(const ChainConfig& cfg);

// Smallest k on the granularity grid with (3/2)(k^2-1) > root.hi (exact
// rational arithmetic throughout).
mpq_class derive_ratio_threshold(const RootBracket& root, const mpq_class& granularity);

struct ContradictionReport {
  Interval lower_bound_ratio;  // enclosure of (3/2)(k_floor^2 - 1)
  RootBracket root;
  mpq_class k_star;
  bool verdict = false;
  CertificationReport steps;
};

// Runs the whole pipeline at the hypothesis floor: pair floor, ratio
// lower bound, the two ratio-floor records, the specialization constant
// chain, the log-ratio ceiling, the monotonicity and root bracket of f,
// and the threshold derivation. verdict is true iff every step certifies
// and the ratio lower bound clears the root bracket.
ContradictionReport verify_full_chain(const ChainConfig& cfg);

inline ContradictionReport verify_full_chain() { return verify_full_chain(ChainConfig{}); }

}  // namespace jescheck
