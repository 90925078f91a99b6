#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace jescheck {

// Generator pair of a primitive Pythagorean triple: m > n >= 1, coprime,
// opposite parity, with legs/hypotenuse a = m^2-n^2, b = 2mn, c = m^2+n^2.
struct PythagoreanPair {
  mpz_class m, n;
  mpz_class a, b, c;
};

// Validates and derives the triple; throws std::invalid_argument naming
// the violated condition.
PythagoreanPair make_pair(mpz_class m, mpz_class n);

// True when the generators additionally satisfy mn = 2 (mod 4), i.e. the
// even generator is = 2 (mod 4).
bool in_even_family(const PythagoreanPair& p);

struct ExponentTriple {
  unsigned long x = 0, y = 0, z = 0;
  auto operator<=>(const ExponentTriple&) const = default;
};

// Exact test of a^x + b^y == c^z over big integers.
bool check_solution(const PythagoreanPair& p, const ExponentTriple& e);

// Returns x >= 0 with base^x == value, if any. Bracketing by bit length,
// then binary search over exact powers.
std::optional<unsigned long> exact_power_exponent(const mpz_class& value, const mpz_class& base);

struct SearchCaps {
  unsigned long max_z = 100;
  unsigned long max_y = 100;
  unsigned long bit_budget = 1'000'000;  // guard on the size of c^z
};

struct SearchResult {
  std::vector<ExponentTriple> solutions;  // lexicographically sorted
  bool cap_hit = false;                   // bit budget stopped the z loop
  unsigned long z_reached = 0;
};

// All solutions of a^x + b^y = c^z with z <= max_z, y <= max_y; x is
// recovered per (y, z) by the exact power test. Always contains (2,2,2).
SearchResult exhaustive_search(const PythagoreanPair& p, const SearchCaps& caps);

enum class Criterion { lemma_2_5, lemma_2_3, lemma_2_1, lemma_2_2, theorem_30_8 };

constexpr std::array<Criterion, 5> kFilterOrder = {
    Criterion::lemma_2_5, Criterion::lemma_2_3, Criterion::lemma_2_1, Criterion::lemma_2_2,
    Criterion::theorem_30_8};

const char* to_string(Criterion c);

struct FilterVerdict {
  Criterion criterion;
  bool settled = false;
  std::optional<mpz_class> witness;  // e.g. the prime divisor for lemma_2_3
};

// Applies one settling criterion:
//   lemma_2_5    c = 1 (mod 2mn)
//   lemma_2_3    some prime p | m+n has p != 1 (mod 16); witness = smallest
//   lemma_2_1    n = 2 (mod 4) and n < 600
//   lemma_2_2    m = 2 (mod 4), n != 1 (mod 8), n < 85
//   theorem_30_8 mn = 2 (mod 4) and 10m > 308n (exact integers)
// lemma_2_3 requires mn = 2 (mod 4) and throws std::invalid_argument
// otherwise.
FilterVerdict apply_filter(const PythagoreanPair& p, Criterion c);

// Shape a non-(2,2,2) solution must have in the even family: x even,
// y = 1, z odd. Used to prune counterexample hunts.
bool exponent_shape_consistent(const ExponentTriple& e);

// c^d = 1 (mod 2mn) via modular exponentiation.
bool power_congruence(const PythagoreanPair& p, unsigned long d);

// Multiplicative order of c modulo 2mn (gcd(c, 2mn) = 1 by primitivity).
mpz_class multiplicative_order(const PythagoreanPair& p);

// Complete factorization, smallest prime first. Trial division up to 10^6,
// then a primality test on the cofactor; throws std::runtime_error if the
// cofactor is composite (beyond desk scale).
std::vector<std::pair<mpz_class, unsigned long>> factorize(const mpz_class& n);

struct SurveyRecord {
  PythagoreanPair pair;
  std::array<FilterVerdict, 5> verdicts;  // in kFilterOrder
  std::optional<Criterion> first_settling;
};

// All generator pairs with m <= m_max in the even family, in (m, n) order.
std::vector<std::pair<unsigned long, unsigned long>> enumerate_even_family(unsigned long m_max);

// One record per pair, all filters applied in kFilterOrder. Deterministic
// output independent of the worker count.
std::vector<SurveyRecord> run_survey(unsigned long m_max, unsigned workers);

}  // namespace jescheck
