#include "jescheck/laurent.hpp"

#include <algorithm>
#include <utility>

#include "jescheck/rational.hpp"

namespace jescheck {

namespace {

mpq_class dec(const char* s) { return rational_from_decimal(s); }

Interval rho_enclosure(const LaurentParams& params, int bits) {
  return params.rho.is_exp ? exp_of(params.rho.value, bits)
                           : Interval::from_rational(params.rho.value, bits);
}

Interval a_coeff_enclosure(const LaurentParams& params, const std::optional<mpq_class>& override,
                           int bits) {
  if (override) return Interval::from_rational(*override, bits);
  return rho_enclosure(params, bits) + Interval(1, bits);
}

Interval c0_term(const Interval& omega, const Interval& theta, const Interval& A1,
                 const Interval& A2, const Interval& H, const Interval& lam, int bits) {
  Interval one(1, bits);
  Interval theta_q = sqrt(sqrt(theta));            // theta^(1/4)
  Interval omega_q = omega * sqrt(sqrt(omega));    // omega^(5/4)
  Interval t1 = pow_int(omega, 2) / Interval(9, bits);
  Interval t2 =
      Interval(8, bits) * lam * omega_q * theta_q / (Interval(3, bits) * sqrt(A1 * A2 * H));
  Interval t3 = Interval::from_rational(mpq_class(4, 3), bits) * (one / A1 + one / A2) *
                (lam * omega / H);
  Interval inner = omega / Interval(6, bits) + sqrt(t1 + t2 + t3) / Interval(2, bits);
  return pow_int(inner, 2);
}

BoundTerms build_terms_at(const LinearFormInstance& inst, const LaurentParams& params,
                          const std::optional<mpq_class>& override, int bits) {
  DerivedParams dp = derive_params(params);
  Interval one(1, bits);
  Interval lam = lambda_enclosure(params, bits);
  Interval coeff = a_coeff_enclosure(params, override, bits);

  BoundTerms t;
  t.A1 = max(one, coeff * log_of(inst.a1, bits));
  t.A2 = max(one, coeff * log_of(inst.a2, bits));

  Interval ratio_sum = Interval::from_integer(inst.b1, bits) / t.A2 +
                       Interval::from_integer(inst.b2, bits) / t.A1;
  Interval half_log2 = log_of(mpz_class(2), bits) / Interval(2, bits);
  Interval log_branch = Interval::from_rational(dec("1.81"), bits) + log(lam) + log(ratio_sum);
  t.B = log_rho_enclosure(params, bits) + max(max(half_log2, lam), log_branch);

  t.H = t.B / lam;
  Interval root = sqrt(one + one / (Interval(4, bits) * pow_int(t.H, 2)));
  t.omega = Interval(2, bits) + Interval(2, bits) * root;
  t.theta = one / (Interval(2, bits) * t.H) + root;

  t.C0 = c0_term(t.omega, t.theta, t.A1, t.A2, t.H, lam, bits);
  t.C = t.C0 * Interval::from_rational(params.mu, bits) /
        (pow_int(lam, 3) * Interval::from_rational(dp.delta, bits));
  t.Cprime = sqrt(t.C0 * t.omega * t.theta) / pow_int(lam, 3);
  return t;
}

}  // namespace

DerivedParams derive_params(const LaurentParams& params) {
  if (params.mu < mpq_class(1, 3) || params.mu > 1)
    throw HypothesisError("mu outside [1/3, 1]");
  if (params.rho.is_exp) {
    if (params.rho.value <= 0) throw HypothesisError("rho = e^q needs q > 0");
  } else if (params.rho.value <= 1) {
    throw HypothesisError("rho > 1 fails");
  }
  DerivedParams dp;
  dp.delta = (1 + 2 * params.mu - params.mu * params.mu) / 2;
  if (params.rho.is_exp) dp.lambda_exact = dp.delta * params.rho.value;
  return dp;
}

Interval log_rho_enclosure(const LaurentParams& params, int bits) {
  return params.rho.is_exp ? Interval::from_rational(params.rho.value, bits)
                           : log_of(params.rho.value, bits);
}

Interval lambda_enclosure(const LaurentParams& params, int bits) {
  DerivedParams dp = derive_params(params);
  if (dp.lambda_exact) return Interval::from_rational(*dp.lambda_exact, bits);
  return Interval::from_rational(dp.delta, bits) * log_rho_enclosure(params, bits);
}

LinearFormInstance make_instance(mpz_class a1, mpz_class a2, mpz_class b1, mpz_class b2) {
  if (a1 < 2 || a2 < 2) throw HypothesisError("min{a1, a2} > 1 fails");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a1.get_mpz_t(), a2.get_mpz_t());
  if (g != 1) throw HypothesisError("gcd(a1, a2) = 1 fails");
  if (b1 < 1 || b2 < 1) throw HypothesisError("b1, b2 >= 1 fails");
  return LinearFormInstance{std::move(a1), std::move(a2), std::move(b1), std::move(b2)};
}

BoundTerms assemble_terms(const LinearFormInstance& inst, const LaurentParams& params,
                          const std::optional<mpq_class>& a_coeff_override, Precision p) {
  derive_params(params);  // validates the parameter ranges

  if (a_coeff_override) {
    if (params.rho.is_exp) {
      auto ok = decide(
          [&](int bits) {
            Interval rp1 = rho_enclosure(params, bits) + Interval(1, bits);
            return std::pair{certify_less(rp1, *a_coeff_override), rp1};
          },
          p);
      if (ok.verdict != Cert::certified_true)
        throw HypothesisError("a-coefficient override >= rho + 1 fails");
    } else if (*a_coeff_override < params.rho.value + 1) {
      throw HypothesisError("a-coefficient override >= rho + 1 fails");
    }
  }

  auto hyp = decide(
      [&](int bits) {
        BoundTerms t = build_terms_at(inst, params, a_coeff_override, bits);
        Interval lam = lambda_enclosure(params, bits);
        Interval prod = t.A1 * t.A2;
        return std::pair{certify_less(pow_int(lam, 2), prod), prod};
      },
      p);
  if (hyp.verdict != Cert::certified_true)
    throw HypothesisError("A1*A2 >= lambda^2 fails");

  return build_terms_at(inst, params, a_coeff_override, p.bits);
}

Interval laurent_lower_bound(const LinearFormInstance& inst, const LaurentParams& params,
                             Precision p) {
  BoundTerms t = assemble_terms(inst, params, std::nullopt, p);
  Interval prod = t.A1 * t.A2 * pow_int(t.B, 2);
  return -(t.C * prod) - sqrt(t.omega * t.theta) * t.B - log(t.Cprime * prod);
}

Interval linear_form(const LinearFormInstance& inst, int bits) {
  return Interval::from_integer(inst.b1, bits) * log_of(inst.a1, bits) -
         Interval::from_integer(inst.b2, bits) * log_of(inst.a2, bits);
}

Certified log_abs_linear_form(const LinearFormInstance& inst, Precision p) {
  return decide(
      [&](int bits) {
        Interval lam = linear_form(inst, bits);
        if (lam.contains_zero()) return std::pair{Cert::indeterminate, lam};
        return std::pair{Cert::certified_true, log(abs(lam))};
      },
      p);
}

Interval specialized_lower_bound(const LinearFormInstance& inst, Precision p) {
  return specialized_lower_bound(inst, p, dec("14.8365"));
}

Interval specialized_lower_bound(const LinearFormInstance& inst, Precision p,
                                 const mpq_class& coeff) {
  if (std::min(inst.a1, inst.a2) < 2704)
    throw HypothesisError("min{a1, a2} >= 2704 fails");
  const mpq_class a_coeff = dec("5.8314");
  const mpq_class floor(240);

  auto inner_ratio = decide(
      [&](int bits) {
        Interval A1 = Interval::from_rational(a_coeff, bits) * log_of(inst.a1, bits);
        Interval r2 = Interval::from_integer(inst.b2, bits) / A1;
        return std::pair{certify_less(floor, r2), r2};
      },
      p);
  if (inner_ratio.verdict != Cert::certified_true)
    throw HypothesisError("b2/A1 > 240 fails");

  // b1/A2 > b2/A1 is equivalent to b1*log(a1) > b2*log(a2)
  auto ordering = decide(
      [&](int bits) {
        Interval lhs = Interval::from_integer(inst.b1, bits) * log_of(inst.a1, bits);
        Interval rhs = Interval::from_integer(inst.b2, bits) * log_of(inst.a2, bits);
        return std::pair{certify_less(rhs, lhs), lhs - rhs};
      },
      p);
  if (ordering.verdict != Cert::certified_true)
    throw HypothesisError("b1/A2 > b2/A1 fails");

  int bits = p.bits;
  Interval L1 = log_of(inst.a1, bits), L2 = log_of(inst.a2, bits);
  Interval inner = Interval::from_rational(dec("1.8248"), bits) +
                   log(Interval::from_integer(inst.b1, bits) / L2 +
                       Interval::from_integer(inst.b2, bits) / L1);
  return -(Interval::from_rational(coeff, bits) * L1 * L2 * pow_int(inner, 2));
}

namespace {

// All derived quantities at the extremal admissible configuration:
// both bases at the floor, both ratios at the floor.
struct Boundary {
  Interval A, B, H, omega, theta, C0, C, Cprime;
  Interval small_sqrt_term;   // sqrt(omega*theta) / (A1*A2*B)
  Interval small_log_term;    // log(2.0829*A1*A2*B^2) / (A1*A2*B^2)
  Interval small_log_arg;     // 2.0829*A1*A2*B^2
};

Boundary boundary_at(const SpecializationConfig& cfg, int bits) {
  LaurentParams paper;
  DerivedParams dp = derive_params(paper);
  Interval one(1, bits);
  Interval lam = Interval::from_rational(*dp.lambda_exact, bits);

  Boundary b;
  b.A = Interval::from_rational(dec("5.8314"), bits) * log_of(cfg.a_min, bits);
  b.B = Interval::from_rational(dec("3.5880"), bits) +
        log(Interval::from_rational(2 * cfg.ratio_floor, bits));
  b.H = b.B / lam;
  Interval root = sqrt(one + one / (Interval(4, bits) * pow_int(b.H, 2)));
  b.omega = Interval(2, bits) + Interval(2, bits) * root;
  b.theta = one / (Interval(2, bits) * b.H) + root;
  b.C0 = c0_term(b.omega, b.theta, b.A, b.A, b.H, lam, bits);
  b.C = b.C0 * Interval::from_rational(paper.mu, bits) /
        (pow_int(lam, 3) * Interval::from_rational(dp.delta, bits));
  b.Cprime = sqrt(b.C0 * b.omega * b.theta) / pow_int(lam, 3);

  Interval AAB2 = b.A * b.A * pow_int(b.B, 2);
  b.small_sqrt_term = sqrt(b.omega * b.theta) / (b.A * b.A * b.B);
  b.small_log_arg = Interval::from_rational(dec("2.0829"), bits) * AAB2;
  b.small_log_term = log(b.small_log_arg) / AAB2;
  return b;
}

}  // namespace

CertificationReport verify_specialization_constants(const SpecializationConfig& cfg) {
  CertificationReport rep;
  const Precision p = cfg.prec;
  LaurentParams paper;
  DerivedParams dp = derive_params(paper);

  rep.add_exact("delta-exact", "2.12", "delta = (1 + 2/3 - 1/9)/2 equals 7/9 exactly", dp.delta,
                dp.delta == mpq_class(7, 9));
  rep.add_exact("lambda-exact", "2.12", "lambda = (7/9)*1.575 equals 1.225 exactly",
                *dp.lambda_exact, *dp.lambda_exact == dec("1.225"));

  rep.add("a-coeff-admissible", "2.13", "rho + 1 < 5.8314, so A_j = 5.8314*log(a_j) is admissible",
          decide(
              [&](int bits) {
                Interval rp1 = rho_enclosure(paper, bits) + Interval(1, bits);
                return std::pair{certify_less(rp1, dec("5.8314")), rp1};
              },
              p),
          "5.8314 over-rounds rho + 1 ~= 5.8307416; only >= is required");

  rep.add("b-const-admissible", "2.15", "log(rho) + 1.81 + log(lambda) < 3.5880",
          decide(
              [&](int bits) {
                Interval v = Interval::from_rational(paper.rho.value + dec("1.81"), bits) +
                             log(Interval::from_rational(*dp.lambda_exact, bits));
                return std::pair{certify_less(v, dec("3.5880")), v};
              },
              p));

  rep.add("b-branch-dominant", "2.15",
          "1.81 + log(lambda) + log(2*ratio_floor) exceeds max(lambda, log(2)/2)",
          decide(
              [&](int bits) {
                Interval branch = Interval::from_rational(dec("1.81"), bits) +
                                  log(Interval::from_rational(*dp.lambda_exact, bits)) +
                                  log(Interval::from_rational(2 * cfg.ratio_floor, bits));
                Interval other = max(Interval::from_rational(*dp.lambda_exact, bits),
                                     log_of(mpz_class(2), bits) / Interval(2, bits));
                Cert c = certify_less(other, branch);
                return std::pair{c, branch};
              },
              p));

  auto bounded_claim = [&](const char* id, const char* eq, const char* text, auto value_of,
                           const mpq_class& target, bool value_below_target,
                           std::string note = {}) {
    auto res = decide(
        [&](int bits) {
          Boundary b = boundary_at(cfg, bits);
          Interval v = value_of(b);
          Cert c = value_below_target ? certify_less(v, target) : certify_less(target, v);
          return std::pair{c, v};
        },
        p);
    rep.add(id, eq, text, res, std::move(note));
  };

  bounded_claim("a-floor", "2.14", "A_j > 46.0803 at the base floor",
                [](const Boundary& b) { return b.A; }, dec("46.0803"), false);
  bounded_claim("b-floor", "2.16", "B > 9.7617 at the ratio floor",
                [](const Boundary& b) { return b.B; }, dec("9.7617"), false);
  bounded_claim("h-floor", "2.17", "H = B/lambda > 7.9688",
                [](const Boundary& b) { return b.H; }, dec("7.9688"), false);
  bounded_claim("omega-ceiling", "2.18", "omega < 4.0040",
                [](const Boundary& b) { return b.omega; }, dec("4.0040"), true,
                "omega decreases in H; evaluated at the H floor");
  bounded_claim("theta-ceiling", "2.18", "theta < 1.0648",
                [](const Boundary& b) { return b.theta; }, dec("1.0648"), true,
                "theta decreases in H; evaluated at the H floor");
  bounded_claim("c0-ceiling", "2.19", "C0 < 1.8706",
                [](const Boundary& b) { return b.C0; }, dec("1.8706"), true,
                "C0 increases in omega and theta, decreases in A_j and H");
  bounded_claim("c-ceiling", "2.20", "C = C0*mu/(lambda^3*delta) < 0.4361",
                [](const Boundary& b) { return b.C; }, dec("0.4361"), true);
  bounded_claim("cprime-ceiling", "2.20", "C' = sqrt(C0*omega*theta)/lambda^3 < 2.0829",
                [](const Boundary& b) { return b.Cprime; }, dec("2.0829"), true);
  bounded_claim("sqrt-term-ceiling", "2.22", "sqrt(omega*theta)/(A1*A2*B) < 1.0026e-4",
                [](const Boundary& b) { return b.small_sqrt_term; }, dec("1.0026e-4"), true);

  rep.add("log-term-decreasing", "2.23", "2.0829*A1*A2*B^2 > e at the floor",
          decide(
              [&](int bits) {
                Boundary b = boundary_at(cfg, bits);
                Interval e = exp_of(mpq_class(1), bits);
                return std::pair{certify_less(e, b.small_log_arg), b.small_log_arg};
              },
              p),
          "log(t)/t decreases past t = e, so the floor argument maximizes the quotient");

  bounded_claim("log-term-ceiling", "2.23", "log(2.0829*A1*A2*B^2)/(A1*A2*B^2) < 0.6401e-4",
                [](const Boundary& b) { return b.small_log_term; }, dec("0.6401e-4"), true);

  mpq_class aggregate = dec("0.4361") + dec("1.0026e-4") + dec("0.6401e-4");
  rep.add_exact("aggregate-coefficient", "2.24",
                "0.4361 + 1.0026e-4 + 0.6401e-4 < 0.4363 (exact rationals)", aggregate,
                aggregate < dec("0.4363"));

  mpq_class folded = dec("0.4363") * dec("5.8314") * dec("5.8314");
  bool closed_ok = folded <= cfg.closed_form_coeff &&
                   abs(folded - cfg.closed_form_coeff) < mpq_class(1, 1000);
  rep.add_exact("closed-form-coefficient", "2.24",
                "0.4363*5.8314^2 <= closed-form coefficient, equal within 1e-3", folded,
                closed_ok);

  rep.add("closed-form-constant", "2.10", "3.5880 - log(5.8314) < 1.8248",
          decide(
              [&](int bits) {
                Interval v = Interval::from_rational(dec("3.5880"), bits) -
                             log_of(dec("5.8314"), bits);
                return std::pair{certify_less(v, dec("1.8248")), v};
              },
              p),
          "rounding up keeps the closed form one-sided");

  return rep;
}

}  // namespace jescheck
