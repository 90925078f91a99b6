#include "jescheck/pairs.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace jescheck {

PythagoreanPair make_pair(mpz_class m, mpz_class n) {
  if (n < 1) throw std::invalid_argument("n >= 1 fails");
  if (m <= n) throw std::invalid_argument("m > n fails");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  if (g != 1) throw std::invalid_argument("gcd(m, n) = 1 fails");
  if (mpz_even_p(m.get_mpz_t()) == mpz_even_p(n.get_mpz_t()))
    throw std::invalid_argument("m and n must have opposite parity");

  PythagoreanPair p;
  p.a = m * m - n * n;
  p.b = 2 * m * n;
  p.c = m * m + n * n;
  p.m = std::move(m);
  p.n = std::move(n);
  return p;
}

bool in_even_family(const PythagoreanPair& p) {
  const mpz_class& even = mpz_even_p(p.m.get_mpz_t()) ? p.m : p.n;
  return mpz_class(even % 4) == 2;
}

bool check_solution(const PythagoreanPair& p, const ExponentTriple& e) {
  if (e.x < 1 || e.y < 1 || e.z < 1) return false;
  mpz_class ax, by, cz;
  mpz_pow_ui(ax.get_mpz_t(), p.a.get_mpz_t(), e.x);
  mpz_pow_ui(by.get_mpz_t(), p.b.get_mpz_t(), e.y);
  mpz_pow_ui(cz.get_mpz_t(), p.c.get_mpz_t(), e.z);
  return ax + by == cz;
}

std::optional<unsigned long> exact_power_exponent(const mpz_class& value, const mpz_class& base) {
  if (value < 1 || base < 2) throw std::invalid_argument("need value >= 1 and base >= 2");
  if (value == 1) return 0;

  // base^x has between x*(bits(base)-1) and x*bits(base) bits
  unsigned long vbits = mpz_sizeinbase(value.get_mpz_t(), 2);
  unsigned long bbits = mpz_sizeinbase(base.get_mpz_t(), 2);
  unsigned long hi = vbits / (bbits - 1 > 0 ? bbits - 1 : 1) + 2;
  unsigned long lo = 1;
  mpz_class pw;
  while (lo <= hi) {
    unsigned long mid = lo + (hi - lo) / 2;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), mid);
    int cmp = mpz_cmp(pw.get_mpz_t(), value.get_mpz_t());
    if (cmp == 0) return mid;
    if (cmp < 0)
      lo = mid + 1;
    else {
      if (mid == 0) break;
      hi = mid - 1;
    }
  }
  return std::nullopt;
}

SearchResult exhaustive_search(const PythagoreanPair& p, const SearchCaps& caps) {
  if (caps.max_z < 2 || caps.max_y < 2) throw std::invalid_argument("caps must be >= 2");
  SearchResult result;

  // Powers of a, indexed by exponent, for O(1) recovery of x from
  // N = c^z - b^y: a^x and N match only if their bit lengths do.
  const unsigned long cbits = mpz_sizeinbase(p.c.get_mpz_t(), 2);
  const unsigned long max_needed = caps.max_z * cbits + 2;
  std::vector<mpz_class> apow{1};
  std::vector<unsigned long> apow_bits{1};
  while (apow_bits.back() <= max_needed && apow.size() < 4 * caps.max_z + 4) {
    apow.push_back(apow.back() * p.a);
    apow_bits.push_back(mpz_sizeinbase(apow.back().get_mpz_t(), 2));
  }

  auto recover_x = [&](const mpz_class& N) -> std::optional<unsigned long> {
    unsigned long nbits = mpz_sizeinbase(N.get_mpz_t(), 2);
    // bit lengths are nondecreasing in x; only matching lengths can be equal
    auto it = std::lower_bound(apow_bits.begin(), apow_bits.end(), nbits);
    for (; it != apow_bits.end() && *it == nbits; ++it) {
      auto x = static_cast<unsigned long>(it - apow_bits.begin());
      if (apow[x] == N) return x;
    }
    return std::nullopt;
  };

  mpz_class cz = 1;
  for (unsigned long z = 1; z <= caps.max_z; ++z) {
    cz *= p.c;
    if (mpz_sizeinbase(cz.get_mpz_t(), 2) > caps.bit_budget) {
      result.cap_hit = true;
      break;
    }
    result.z_reached = z;
    mpz_class by = 1;
    for (unsigned long y = 1; y <= caps.max_y; ++y) {
      by *= p.b;
      if (by >= cz) break;  // c^z - b^y must stay >= a^1 > 0
      mpz_class n = cz - by;
      if (auto x = recover_x(n); x && *x >= 1)
        result.solutions.push_back({*x, y, z});
    }
  }
  std::sort(result.solutions.begin(), result.solutions.end());
  return result;
}

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::lemma_2_5: return "lemma_2_5";
    case Criterion::lemma_2_3: return "lemma_2_3";
    case Criterion::lemma_2_1: return "lemma_2_1";
    case Criterion::lemma_2_2: return "lemma_2_2";
    case Criterion::theorem_30_8: return "theorem_30_8";
  }
  return "?";
}

namespace {

FilterVerdict filter_unit_residue(const PythagoreanPair& p) {
  mpz_class mod = 2 * p.m * p.n;
  return {Criterion::lemma_2_5, mpz_class(p.c % mod) == 1, std::nullopt};
}

FilterVerdict filter_prime_divisor(const PythagoreanPair& p) {
  if (!in_even_family(p))
    throw std::invalid_argument("criterion needs mn = 2 (mod 4)");
  for (const auto& [prime, mult] : factorize(p.m + p.n)) {
    (void)mult;
    if (mpz_class(prime % 16) != 1) return {Criterion::lemma_2_3, true, prime};
  }
  return {Criterion::lemma_2_3, false, std::nullopt};
}

FilterVerdict filter_small_even_n(const PythagoreanPair& p) {
  bool settled = mpz_class(p.n % 4) == 2 && p.n < 600;
  return {Criterion::lemma_2_1, settled, std::nullopt};
}

FilterVerdict filter_small_odd_n(const PythagoreanPair& p) {
  bool settled = mpz_class(p.m % 4) == 2 && mpz_class(p.n % 8) != 1 && p.n < 85;
  return {Criterion::lemma_2_2, settled, std::nullopt};
}

FilterVerdict filter_ratio(const PythagoreanPair& p) {
  bool settled = in_even_family(p) && 10 * p.m > 308 * p.n;
  return {Criterion::theorem_30_8, settled, std::nullopt};
}

}  // namespace

FilterVerdict apply_filter(const PythagoreanPair& p, Criterion c) {
  switch (c) {
    case Criterion::lemma_2_5: return filter_unit_residue(p);
    case Criterion::lemma_2_3: return filter_prime_divisor(p);
    case Criterion::lemma_2_1: return filter_small_even_n(p);
    case Criterion::lemma_2_2: return filter_small_odd_n(p);
    case Criterion::theorem_30_8: return filter_ratio(p);
  }
  throw std::logic_error("unknown criterion");
}

bool exponent_shape_consistent(const ExponentTriple& e) {
  return e.x % 2 == 0 && e.y == 1 && e.z % 2 == 1;
}

bool power_congruence(const PythagoreanPair& p, unsigned long d) {
  mpz_class mod = 2 * p.m * p.n;
  mpz_class r;
  mpz_powm_ui(r.get_mpz_t(), p.c.get_mpz_t(), d, mod.get_mpz_t());
  return r == 1;
}

std::vector<std::pair<mpz_class, unsigned long>> factorize(const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("factorize needs n >= 1");
  std::vector<std::pair<mpz_class, unsigned long>> factors;
  mpz_class rest = n;
  auto strip = [&](const mpz_class& p) {
    unsigned long mult = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++mult;
    }
    if (mult) factors.emplace_back(p, mult);
  };
  strip(2);
  for (mpz_class d = 3; d <= 1'000'000 && d * d <= rest; d += 2) strip(d);
  if (rest > 1) {
    if (mpz_probab_prime_p(rest.get_mpz_t(), 40) == 0)
      throw std::runtime_error("composite cofactor beyond trial division range: " +
                               rest.get_str());
    factors.emplace_back(rest, 1);
  }
  return factors;
}

mpz_class multiplicative_order(const PythagoreanPair& p) {
  mpz_class mod = 2 * p.m * p.n;
  // phi is multiplicative over the coprime parts 2^k, m_odd, n_odd
  mpz_class phi = 1;
  for (const auto& [prime, mult] : factorize(mod)) {
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), prime.get_mpz_t(), mult - 1);
    phi *= pk * (prime - 1);
  }
  mpz_class order = phi, r;
  for (const auto& [prime, mult] : factorize(phi)) {
    (void)mult;
    for (;;) {
      if (!mpz_divisible_p(order.get_mpz_t(), prime.get_mpz_t())) break;
      mpz_class candidate = order / prime;
      mpz_powm(r.get_mpz_t(), p.c.get_mpz_t(), candidate.get_mpz_t(), mod.get_mpz_t());
      if (r != 1) break;
      order = candidate;
    }
  }
  return order;
}

std::vector<std::pair<unsigned long, unsigned long>> enumerate_even_family(unsigned long m_max) {
  std::vector<std::pair<unsigned long, unsigned long>> pairs;
  for (unsigned long m = 2; m <= m_max; ++m)
    for (unsigned long n = 1; n < m; ++n) {
      if ((m + n) % 2 == 0) continue;
      if (std::gcd(m, n) != 1) continue;
      unsigned long even = m % 2 == 0 ? m : n;
      if (even % 4 != 2) continue;
      pairs.emplace_back(m, n);
    }
  return pairs;
}

std::vector<SurveyRecord> run_survey(unsigned long m_max, unsigned workers) {
  auto pairs = enumerate_even_family(m_max);
  std::vector<SurveyRecord> records(pairs.size());
  if (workers == 0) workers = 1;

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= pairs.size()) return;
      SurveyRecord rec;
      rec.pair = make_pair(mpz_class(pairs[i].first), mpz_class(pairs[i].second));
      for (std::size_t k = 0; k < kFilterOrder.size(); ++k) {
        rec.verdicts[k] = apply_filter(rec.pair, kFilterOrder[k]);
        if (rec.verdicts[k].settled && !rec.first_settling)
          rec.first_settling = kFilterOrder[k];
      }
      records[i] = std::move(rec);
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return records;
}

}  // namespace jescheck
