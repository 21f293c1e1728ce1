#include "arborist/verdict.hpp"

#include <algorithm>

#include "arborist/critorbit.hpp"
#include "arborist/errors.hpp"
#include "arborist/independence.hpp"

namespace arborist {

namespace {

bool is_even(const Integer& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

void audit(const Verdict& verdict, const QuadMap& map, std::size_t depth_check) {
  if (depth_check == 0) return;
  const AdjustedOrbit orbit = d_sequence(map, depth_check);
  const IndependenceResult check = two_independent(orbit.d_values());
  if (!check.independent) {
    throw InvariantViolation("audit failed: " + std::string(status_name(verdict.status)) +
                             " for a = " + verdict.a.to_string() +
                             " but D_1..D_" + std::to_string(depth_check) + " are dependent");
  }
}

void finish_conditions(Verdict& verdict, const QuadMap& map, std::size_t depth_check,
                       const std::string& no_condition_reason) {
  if (verdict.conditions.empty()) {
    verdict.status = Status::Inapplicable;
    verdict.reason = no_condition_reason;
    return;
  }
  verdict.status = Status::ProvenSurjective;
  verdict.condition = verdict.conditions.front();
  verdict.depth = depth_check;
  audit(verdict, map, depth_check);
}

}  // namespace

std::string_view status_name(Status status) {
  switch (status) {
    case Status::ProvenSurjective: return "ProvenSurjective";
    case Status::NotSurjective: return "NotSurjective";
    case Status::Inapplicable: return "Inapplicable";
    case Status::IndependentToDepth: return "IndependentToDepth";
    case Status::DependentAtLevel: return "DependentAtLevel";
  }
  return "Inapplicable";
}

std::string_view condition_tag(Condition condition) {
  switch (condition) {
    case Condition::Family1Mod3: return "family1-mod3";
    case Condition::Family1Mod4: return "family1-mod4";
    case Condition::Family1Nonresidue: return "family1-nonresidue";
    case Condition::Family2R1SEven: return "family2-r1-s-even";
    case Condition::Family2R2SMod3: return "family2-r2-s-mod3";
    case Condition::Family2R2PrimeMod4: return "family2-r2-q-3mod4";
  }
  return "";
}

int condition_index(Condition condition) {
  switch (condition) {
    case Condition::Family1Mod3:
    case Condition::Family2R1SEven: return 1;
    case Condition::Family1Mod4:
    case Condition::Family2R2SMod3: return 2;
    case Condition::Family1Nonresidue:
    case Condition::Family2R2PrimeMod4: return 3;
  }
  return 0;
}

DeltaE compute_delta_e(const Rational& a) {
  if (a.is_zero()) throw InvalidInput("delta/e undefined at a = 0");
  DeltaE out;
  out.e = is_even(a.num()) ? 1 : 0;
  const Rational one(1);
  if (a.sign() > 0 && a < one) {
    // a^4 + 2a^3 - 2a < 0 exactly on (0, beta).
    const Rational a3 = a * a * a;
    if ((a3 * a + Rational(2) * a3 - Rational(2) * a).sign() < 0) out.delta = 1;
  } else if (a > one || (a.sign() < 0 && a != Rational(-1) && a != Rational(-2))) {
    out.delta = 0;
  }
  return out;
}

OddPrimeDivisors odd_prime_divisors(const Integer& n, std::uint64_t limit) {
  if (sgn(n) <= 0) throw InvalidInput("odd_prime_divisors needs n > 0");
  OddPrimeDivisors out;
  Integer rest = n;
  mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), Integer(2).get_mpz_t());
  for (std::uint64_t d = 3; d <= limit && Integer(d) * d <= rest; d += 2) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d) == 0) continue;
    out.primes.emplace_back(static_cast<unsigned long>(d));
    mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), Integer(static_cast<unsigned long>(d)).get_mpz_t());
  }
  if (rest > 1) {
    if (primality(rest) == Primality::Prime) {
      out.primes.push_back(rest);
    } else {
      out.complete = false;
    }
  }
  return out;
}

Verdict theorem1(const Rational& a, std::size_t depth_check, std::uint64_t trial_limit) {
  const QuadMap map = family1(a);
  Verdict verdict;
  verdict.a = a;
  verdict.family = Family::Family1;
  const DeltaE de = compute_delta_e(a);
  verdict.delta_e = de;

  const Rational d1 = a - map.c();
  if (d1.is_zero()) {
    verdict.reason = "a - c = 0: the base point lies on the critical orbit";
    return verdict;
  }
  if (rational_is_square(d1)) {
    verdict.status = Status::NotSurjective;
    verdict.reason = "a - c = " + d1.to_string() + " is a rational square";
    return verdict;
  }
  if (!de.delta) {
    verdict.reason = "delta undefined: a lies in [beta, 1] or in {-2, -1, 1}";
    return verdict;
  }

  Integer m = abs(a.num()) << static_cast<mp_bitcnt_t>(de.e);
  if (*de.delta == 1) m = -m;
  if (mod_u(m, 3) == 2) verdict.conditions.push_back(Condition::Family1Mod3);
  if (mod_u(m, 4) == 3) verdict.conditions.push_back(Condition::Family1Mod4);
  const OddPrimeDivisors divisors = odd_prime_divisors(a.den(), trial_limit);
  for (const Integer& q : divisors.primes) {
    if (jacobi(m, q) == -1) {
      verdict.conditions.push_back(Condition::Family1Nonresidue);
      verdict.q = q;
      break;
    }
  }
  std::string why = "no sufficient condition holds";
  if (!divisors.complete && !verdict.q) why += " (s has an unfactored cofactor)";
  finish_conditions(verdict, map, depth_check, why);
  return verdict;
}

Verdict theorem2(const Rational& a, std::size_t depth_check, std::uint64_t trial_limit) {
  const QuadMap map = family2(a);
  Verdict verdict;
  verdict.a = a;
  verdict.family = Family::Family2;

  const Rational d1 = a - map.c();
  if (rational_is_square(d1)) {
    verdict.status = Status::NotSurjective;
    verdict.reason = "a - c = " + d1.to_string() + " is a rational square";
    return verdict;
  }

  const Integer& r = a.num();
  const Integer& s = a.den();
  bool undecided = false;
  if (r == 1 && s > 2 && is_even(s)) verdict.conditions.push_back(Condition::Family2R1SEven);
  if (r == 2 && s > 3 && mod_u(s, 3) == 1) verdict.conditions.push_back(Condition::Family2R2SMod3);
  if (r == 2) {
    const OddPrimeDivisors divisors = odd_prime_divisors(s, trial_limit);
    auto q = std::find_if(divisors.primes.begin(), divisors.primes.end(),
                          [](const Integer& p) { return mod_u(p, 4) == 3; });
    if (q != divisors.primes.end()) {
      verdict.conditions.push_back(Condition::Family2R2PrimeMod4);
      verdict.q = *q;
    } else {
      undecided = !divisors.complete;
    }
  }
  std::string why = "no sufficient condition holds";
  if (undecided) why += " (s has an unfactored cofactor)";
  finish_conditions(verdict, map, depth_check, why);
  return verdict;
}

Verdict certify(const Rational& a, Family family, std::size_t depth) {
  if (depth == 0) throw InvalidInput("certify depth must be positive");
  Verdict verdict;
  switch (family) {
    case Family::Family1: verdict = theorem1(a, depth); break;
    case Family::Family2: verdict = theorem2(a, depth); break;
    case Family::Custom: throw InvalidInput("certify supports family1 and family2 only");
  }
  if (verdict.status != Status::Inapplicable) return verdict;

  const QuadMap map = family == Family::Family1 ? family1(a) : family2(a);
  const AdjustedOrbit orbit = d_sequence(map, depth);
  for (std::size_t i = 1; i <= depth; ++i) {
    if (orbit.d(i).is_zero()) {
      verdict.reason += "; D_" + std::to_string(i) + " = 0, no fallback";
      return verdict;
    }
  }
  const IndependenceResult result = two_independent(orbit.d_values());
  verdict.depth = depth;
  if (result.independent) {
    verdict.status = Status::IndependentToDepth;
    verdict.reason += "; fallback: independence verified to finite depth only, not a proof";
  } else {
    verdict.reason += "; fallback: a prefix of D is dependent, so the representation is not surjective";
    verdict.status = Status::DependentAtLevel;
    verdict.level = result.witness.back() + 1;
    verdict.witness = result.witness;
  }
  return verdict;
}

}  // namespace arborist
