#include "arborist/critorbit.hpp"

#include <algorithm>
#include <string>

#include "arborist/errors.hpp"

namespace arborist {

namespace {

const Integer kTwo(2);

void require_family(const AdjustedOrbit& orbit, Family family, const char* op) {
  if (orbit.map().family() != family) {
    throw InvalidInput(std::string(op) + " requires a " + std::string(family_name(family)) +
                       " orbit");
  }
}

bool is_even(const Integer& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

// Evaluates `pred` at each index in [first, last] and records the outcome.
template <typename Pred>
void evaluate(ValuationItem& item, std::size_t first, std::size_t last, Pred pred) {
  for (std::size_t n = first; n <= last; ++n) {
    item.checked.push_back(n);
    if (!pred(n)) item.violations.push_back(n);
  }
  item.holds = item.violations.empty();
}

ValuationItem denominator_primes_item(const AdjustedOrbit& orbit, const Integer& p,
                                      const Valuation& va) {
  // v_p(a) < 0 iff v_p(f^n(0)-a) < 0 for some n iff for all n.
  ValuationItem item{1, "denominator-primes", true, true, {}, {}};
  bool any = false;
  bool all = true;
  for (std::size_t n = 1; n <= orbit.depth(); ++n) {
    item.checked.push_back(n);
    const bool neg = valuation(orbit.shifted(n), p).negative();
    any = any || neg;
    all = all && neg;
    if (neg != va.negative()) item.violations.push_back(n);
  }
  item.holds = (va.negative() == any) && (any == all);
  return item;
}

ValuationItem repeated_primes_item(const AdjustedOrbit& orbit, const Integer& p,
                                   const Valuation& conclusion) {
  // Two distinct n >= 1 with positive valuation force `conclusion` > 0.
  ValuationItem item{5, "repeated-primes", true, true, {}, {}};
  std::vector<std::size_t> hits;
  for (std::size_t n = 1; n <= orbit.depth(); ++n) {
    item.checked.push_back(n);
    if (valuation(orbit.shifted(n), p).positive()) hits.push_back(n);
  }
  if (hits.size() >= 2 && !conclusion.positive()) {
    item.violations = hits;
    item.holds = false;
  }
  return item;
}

std::vector<ValuationItem> family1_items(const AdjustedOrbit& orbit, const Integer& p) {
  const Valuation va = valuation(orbit.a(), p);
  const std::size_t depth = orbit.depth();
  const bool p_is_two = p == 2;
  auto v = [&](std::size_t n) { return valuation(orbit.shifted(n), p); };

  std::vector<ValuationItem> items;
  items.push_back(denominator_primes_item(orbit, p, va));

  ValuationItem odd_a{2, "odd-a-2adic", p_is_two && va == Valuation{false, 0}, true, {}, {}};
  if (odd_a.applicable) evaluate(odd_a, 1, depth, [&](std::size_t n) { return v(n) == Valuation{false, 0}; });
  items.push_back(std::move(odd_a));

  ValuationItem even_a{3, "even-a-2adic", p_is_two && va.positive(), true, {}, {}};
  if (even_a.applicable) {
    const Valuation expect{false, va.value + 1};
    evaluate(even_a, 2, depth, [&](std::size_t n) { return v(n) == expect; });
  }
  items.push_back(std::move(even_a));

  ValuationItem num_primes{4, "numerator-primes", !p_is_two && va.positive(), true, {}, {}};
  if (num_primes.applicable) evaluate(num_primes, 1, depth, [&](std::size_t n) { return v(n) == va; });
  items.push_back(std::move(num_primes));

  items.push_back(repeated_primes_item(orbit, p, va));
  return items;
}

std::vector<ValuationItem> family2_items(const AdjustedOrbit& orbit, const Integer& p) {
  const Valuation va = valuation(orbit.a(), p);
  const std::size_t depth = orbit.depth();
  const bool p_is_two = p == 2;
  auto v = [&](std::size_t n) { return valuation(orbit.shifted(n), p); };
  const Valuation zero{false, 0};

  std::vector<ValuationItem> items;
  items.push_back(denominator_primes_item(orbit, p, va));

  ValuationItem parity{2, "even-a-parity", p_is_two && va.positive(), true, {}, {}};
  if (parity.applicable) {
    evaluate(parity, 1, depth, [&](std::size_t n) {
      return n % 2 == 0 ? v(n).positive() : v(n) == zero;
    });
  }
  items.push_back(std::move(parity));

  ValuationItem two_mod4{3, "a-2mod4-2adic", p_is_two && va == Valuation{false, 1}, true, {}, {}};
  if (two_mod4.applicable) {
    evaluate(two_mod4, 1, depth, [&](std::size_t n) {
      return v(n) == (n % 2 == 0 ? Valuation{false, 2} : zero);
    });
  }
  items.push_back(std::move(two_mod4));

  ValuationItem odd_a{4, "odd-a-2adic", p_is_two && va == zero, true, {}, {}};
  if (odd_a.applicable) {
    evaluate(odd_a, 1, depth, [&](std::size_t n) {
      return v(n) == (n % 2 == 1 ? Valuation{false, 1} : zero);
    });
  }
  items.push_back(std::move(odd_a));

  Valuation v2a = va;
  if (p_is_two && !va.infinite) v2a.value += 1;
  items.push_back(repeated_primes_item(orbit, p, v2a));
  return items;
}

}  // namespace

// ---------------------------------------------------------------- AdjustedOrbit

const Rational& AdjustedOrbit::d(std::size_t i) const {
  if (i == 0 || i > d_.size()) {
    throw InvalidInput("D index " + std::to_string(i) + " outside 1.." + std::to_string(d_.size()));
  }
  return d_[i - 1];
}

Rational AdjustedOrbit::shifted(std::size_t n) const {
  return n == 1 ? -d(1) : d(n);
}

const Integer& AdjustedOrbit::r(std::size_t n) const {
  if (n >= r_.size()) {
    throw InvalidInput("numerator index " + std::to_string(n) + " outside 0.." +
                       std::to_string(d_.size()));
  }
  return r_[n];
}

AdjustedOrbit AdjustedOrbit::extended(std::size_t depth) const { return d_sequence(map_, depth); }

AdjustedOrbit d_sequence(const QuadMap& map, std::size_t depth) {
  if (depth == 0) throw InvalidInput("orbit depth must be positive");
  const Rational& a = map.a();

  std::vector<Rational> d;
  std::vector<Integer> r{-a.num()};
  d.reserve(depth);
  r.reserve(depth + 1);
  Rational orbit_point;  // f^0(0)
  for (std::size_t n = 1; n <= depth; ++n) {
    orbit_point = map(orbit_point);
    Rational shifted = orbit_point - a;
    r.push_back(shifted.num());
    d.push_back(n == 1 ? -shifted : std::move(shifted));
  }

  if (map.family() != Family::Custom) {
    const std::vector<Integer> closed = numerator_recursion(map.family(), a.num(), a.den(), depth);
    Integer den = a.den();
    for (std::size_t n = 1; n <= depth; ++n) {
      den *= den;  // s^(2^n)
      const Rational& dn = d[n - 1];
      const Integer& expected_den = sgn(closed[n - 1]) == 0 ? Integer(1) : den;
      if (closed[n - 1] != r[n] || dn.den() != expected_den) {
        throw InvariantViolation("numerator recursion disagrees with iteration at n = " +
                                 std::to_string(n) + " for a = " + a.to_string());
      }
    }
  }
  return AdjustedOrbit(map, std::move(d), std::move(r), a.den());
}

std::vector<Integer> numerator_recursion(Family family, const Integer& r, const Integer& s,
                                         std::size_t depth) {
  if (family == Family::Custom) throw InvalidInput("numerator_recursion needs a known family");
  if (s < 1 || gcd(r, s) != 1) {
    throw InvalidInput("numerator_recursion needs s >= 1 and gcd(r, s) = 1");
  }
  std::vector<Integer> out;
  out.reserve(depth);
  if (depth == 0) return out;

  Integer current = family == Family::Family1 ? Integer(-r * r - 2 * r * s) : Integer(-r * r - s * s);
  Integer s_pow = s * s;  // s^(2^n) for the current n
  out.push_back(current);
  for (std::size_t n = 1; n < depth; ++n) {
    const Integer s_pow_minus = s_pow / s;  // s^(2^n - 1)
    const Integer s_pow_next = s_pow * s_pow;
    Integer next = current * current + 2 * current * r * s_pow_minus;
    if (family == Family::Family1) {
      next -= 2 * r * (s_pow_next / s);
    } else {
      next -= s_pow_next;
    }
    current = std::move(next);
    s_pow = s_pow_next;
    out.push_back(current);
  }
  return out;
}

// ---------------------------------------------------------------- decompositions

Decomposition1 decompose1(const AdjustedOrbit& orbit, std::size_t n) {
  require_family(orbit, Family::Family1, "decompose1");
  if (n < 2 || n > orbit.depth()) {
    throw InvalidInput("decompose1 index must lie in 2.." + std::to_string(orbit.depth()));
  }
  const Integer& r = orbit.a().num();
  const Integer& rn = orbit.r(n);
  Decomposition1 out;
  out.n = n;
  out.e = is_even(r) ? 1 : 0;
  out.delta_sign = sgn(rn) < 0 ? -1 : 1;

  const Integer divisor = abs(r) << static_cast<mp_bitcnt_t>(out.e);
  const Integer abs_rn = abs(rn);
  if (sgn(rn) == 0 || mpz_divisible_p(abs_rn.get_mpz_t(), divisor.get_mpz_t()) == 0) {
    throw InvariantViolation("decompose1: 2^e|r| does not divide r_" + std::to_string(n) +
                             " for a = " + orbit.a().to_string());
  }
  out.t = abs_rn / divisor;
  if (is_even(out.t) || gcd(out.t, r) != 1) {
    throw InvariantViolation("decompose1: cofactor t_" + std::to_string(n) +
                             " is even or shares a factor with r for a = " + orbit.a().to_string());
  }
  return out;
}

Decomposition2 decompose2(const AdjustedOrbit& orbit, std::size_t n) {
  require_family(orbit, Family::Family2, "decompose2");
  if (n < 1 || n > orbit.depth()) {
    throw InvalidInput("decompose2 index must lie in 1.." + std::to_string(orbit.depth()));
  }
  const Integer& r = orbit.a().num();
  const Integer& s = orbit.s();
  const bool r_one = r == 1 && is_even(s);
  const bool r_two = r == 2 && s > 2;
  if (!r_one && !r_two) {
    throw InvalidInput("decompose2 defined only for r = 1 with s even, or r = 2; a = " +
                       orbit.a().to_string());
  }
  const Integer& rn = orbit.r(n);
  if (sgn(rn) >= 0) {
    throw InvariantViolation("decompose2: r_" + std::to_string(n) + " not negative for a = " +
                             orbit.a().to_string());
  }
  Decomposition2 out;
  out.n = n;
  out.two_part = static_cast<unsigned>(valuation(rn, kTwo));
  const unsigned expected = r_two && n % 2 == 0 ? 2U : 0U;
  if (out.two_part != expected) {
    throw InvariantViolation("decompose2: v_2(r_" + std::to_string(n) + ") = " +
                             std::to_string(out.two_part) + ", expected " + std::to_string(expected));
  }
  out.t = abs(rn) >> static_cast<mp_bitcnt_t>(out.two_part);
  return out;
}

// ---------------------------------------------------------------- valuations

bool ValuationReport::all_hold() const {
  return std::all_of(items.begin(), items.end(),
                     [](const ValuationItem& it) { return !it.applicable || it.holds; });
}

const ValuationItem& ValuationReport::item(int index) const {
  for (const ValuationItem& it : items) {
    if (it.item == index) return it;
  }
  throw InvalidInput("no valuation item " + std::to_string(index));
}

ValuationReport check_valuations(const AdjustedOrbit& orbit, const Integer& p) {
  if (primality(p) == Primality::Composite) {
    throw InvalidInput("check_valuations needs a prime, got " + p.get_str());
  }
  ValuationReport report{p, {}};
  switch (orbit.map().family()) {
    case Family::Family1: report.items = family1_items(orbit, p); break;
    case Family::Family2: report.items = family2_items(orbit, p); break;
    case Family::Custom: throw InvalidInput("check_valuations needs a known family");
  }
  return report;
}

// ---------------------------------------------------------------- signs

std::string SignClass::to_string() const {
  switch (kind) {
    case Kind::AllPositiveFrom: return "AllPositiveFrom(" + std::to_string(from) + ")";
    case Kind::AllNegativeFrom: return "AllNegativeFrom(" + std::to_string(from) + ")";
    case Kind::Mixed: return "Mixed";
    case Kind::Boundary: return "Boundary";
  }
  return "Mixed";
}

SignClass sign_predict(const QuadMap& map) {
  using Kind = SignClass::Kind;
  const Rational& a = map.a();
  const Rational a2 = a * a;
  const Rational a3 = a2 * a;
  const Rational a4 = a2 * a2;

  if (map.family() == Family::Family1) {
    if (a == Rational(-2) || a == Rational(-1) || a == Rational(1)) return {Kind::Boundary, 0};
    if (a > Rational(-2) && a.sign() < 0) return {Kind::AllPositiveFrom, 1};
    if (a < Rational(-2) || a > Rational(1)) return {Kind::AllPositiveFrom, 2};
    // 0 < a < 1: f^2(0) - a = a^4 + 2a^3 - 2a changes sign only at beta.
    if ((a4 + Rational(2) * a3 - Rational(2) * a).sign() < 0) return {Kind::AllNegativeFrom, 1};
    return {Kind::Mixed, 0};
  }
  if (map.family() == Family::Family2) {
    // Outside the roots 1/2 +- sqrt(5)/2 of a^2 - a - 1.
    if ((a2 - a - Rational(1)).sign() > 0) return {Kind::AllPositiveFrom, 2};
    // f^2(0) - a = a^4 - 2a^3 + 2a^2 - 2a is negative exactly on (0, gamma).
    if (a.sign() > 0 &&
        (a4 - Rational(2) * a3 + Rational(2) * a2 - Rational(2) * a).sign() < 0) {
      return {Kind::AllNegativeFrom, 1};
    }
    return {Kind::Mixed, 0};
  }
  throw InvalidInput("sign_predict needs a known family");
}

// ---------------------------------------------------------------- congruences

CongruenceReport congruence_check(const AdjustedOrbit& orbit, unsigned modulus) {
  if (modulus != 3 && modulus != 4) throw InvalidInput("congruence modulus must be 3 or 4");
  CongruenceReport report;
  report.modulus = modulus;
  if (orbit.map().family() != Family::Family1) {
    report.reason = "congruences are stated for family1 only";
    return report;
  }
  const Integer& r = orbit.a().num();
  if (modulus == 3 && mod_u(r, 3) == 0) {
    report.reason = "r is divisible by 3";
    return report;
  }
  if (modulus == 4 && is_even(r)) {
    report.reason = "r is even";
    return report;
  }
  report.applicable = true;
  for (std::size_t n = 2; n <= orbit.depth(); ++n) {
    if (mod_u(orbit.r(n), modulus) != 1) {
      report.first_failure = n;
      break;
    }
  }
  report.holds = !report.first_failure.has_value();
  return report;
}

}  // namespace arborist
