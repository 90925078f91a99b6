#include "jescheck/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace jescheck {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

mpq_class rational_from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  // fraction form p/q
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (num.empty() || !all_digits(den) || den.find_first_not_of('0') == std::string::npos)
      throw std::invalid_argument("malformed fraction: " + std::string(s));
    mpq_class q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
  }

  bool negative = false;
  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') negative = (s[i++] == '-');

  std::string digits;
  long frac_digits = 0;
  bool seen_point = false, seen_digit = false;
  long exp10 = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      std::string tail(s.substr(i + 1));
      char* end = nullptr;
      exp10 = std::strtol(tail.c_str(), &end, 10);
      if (end == tail.c_str() || *end != '\0')
        throw std::invalid_argument("malformed exponent: " + std::string(s));
      break;
    } else {
      throw std::invalid_argument("malformed rational literal: " + std::string(s));
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational literal: " + std::string(s));

  mpz_class mantissa(digits.empty() ? "0" : digits);
  if (negative) mantissa = -mantissa;
  long shift = exp10 - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  mpq_class q = shift >= 0 ? mpq_class(mantissa * pow10) : mpq_class(mantissa, pow10);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& q) {
  mpz_class num = q.get_num(), den = q.get_den();
  if (den == 1) return num.get_str();

  // strip factors of 2 and 5; finite decimal expansion iff nothing remains
  mpz_class d = den;
  unsigned long twos = 0, fives = 0;
  while (mpz_even_p(d.get_mpz_t())) { d /= 2; ++twos; }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) { d /= 5; ++fives; }
  if (d != 1) return num.get_str() + "/" + den.get_str();

  unsigned long places = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  mpz_class scaled = num * scale / den;  // exact by construction
  bool neg = scaled < 0;
  std::string s = (neg ? mpz_class(-scaled) : scaled).get_str();
  if (s.size() <= places) s.insert(0, places + 1 - s.size(), '0');
  s.insert(s.size() - places, ".");
  return (neg ? "-" : "") + s;
}

}  // namespace jescheck
