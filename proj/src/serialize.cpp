#include "arborist/serialize.hpp"

#include <algorithm>

namespace arborist {

namespace {

constexpr unsigned long kReportTrialLimit = 10'000;

Json tags(const std::vector<Condition>& conditions) {
  Json out = Json::array();
  for (Condition c : conditions) out.push_back(std::string(condition_tag(c)));
  return out;
}

Json rationals(std::span<const Rational> values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(v.to_string());
  return out;
}

void add_prime_divisors(const Integer& n, std::vector<Integer>& out) {
  Integer rest = abs(n);
  for (unsigned long d = 2; d <= kReportTrialLimit && rest > 1; ++d) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d) == 0) continue;
    out.emplace_back(d);
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
  }
  if (rest > 1 && primality(rest) == Primality::Prime) out.push_back(rest);
}

}  // namespace

Json to_json(const Verdict& verdict) {
  Json out;
  out["a"] = verdict.a.to_string();
  out["family"] = family_number(verdict.family);
  out["status"] = std::string(status_name(verdict.status));
  if (verdict.condition) {
    out["condition"] = std::string(condition_tag(*verdict.condition));
    out["condition_index"] = condition_index(*verdict.condition);
  } else {
    out["condition"] = nullptr;
    out["condition_index"] = nullptr;
  }
  out["conditions"] = tags(verdict.conditions);
  out["proof"] = verdict.is_proof();
  out["depth"] = verdict.depth;
  if (verdict.delta_e) {
    out["delta"] = verdict.delta_e->delta ? Json(*verdict.delta_e->delta) : Json(nullptr);
    out["e"] = verdict.delta_e->e;
  }
  if (verdict.q) out["q"] = verdict.q->get_str();
  if (verdict.level) out["level"] = *verdict.level;
  if (!verdict.witness.empty()) out["witness"] = verdict.witness;
  out["reason"] = verdict.reason;
  return out;
}

Json to_json(const ValuationReport& report) {
  Json out;
  out["p"] = report.p.get_str();
  out["all_hold"] = report.all_hold();
  Json items = Json::array();
  for (const ValuationItem& item : report.items) {
    Json j;
    j["item"] = item.item;
    j["name"] = item.name;
    j["applicable"] = item.applicable;
    j["holds"] = item.holds;
    j["checked"] = item.checked;
    j["violations"] = item.violations;
    items.push_back(std::move(j));
  }
  out["items"] = std::move(items);
  return out;
}

Json to_json(const CongruenceReport& report) {
  Json out;
  out["modulus"] = report.modulus;
  out["applicable"] = report.applicable;
  if (report.applicable) {
    out["holds"] = report.holds;
    out["first_failure"] = report.first_failure ? Json(*report.first_failure) : Json(nullptr);
  } else {
    out["reason"] = report.reason;
  }
  return out;
}

Json to_json(const IndependenceResult& result, std::span<const Rational> values) {
  Json out;
  out["status"] = result.independent ? "Independent" : "Dependent";
  if (!result.independent) {
    out["witness"] = result.witness;
    Json w = Json::array();
    for (std::size_t i : result.witness) w.push_back(values[i].to_string());
    out["witness_values"] = std::move(w);
  }
  return out;
}

std::vector<Integer> default_report_primes(const AdjustedOrbit& orbit) {
  std::vector<Integer> primes{Integer(2)};
  add_prime_divisors(orbit.a().num(), primes);
  add_prime_divisors(orbit.a().den(), primes);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

Json orbit_report(const AdjustedOrbit& orbit, const std::vector<Integer>& primes) {
  const QuadMap& map = orbit.map();
  Json out;
  out["a"] = map.base_point() ? Json(map.base_point()->to_string()) : Json(nullptr);
  out["family"] = family_number(map.family());
  out["c"] = map.c().to_string();
  out["N"] = orbit.depth();
  out["D"] = rationals(orbit.d_values());
  if (map.family() == Family::Custom) return out;

  Json valuations = Json::array();
  for (const Integer& p : primes) valuations.push_back(to_json(check_valuations(orbit, p)));
  out["valuation_checks"] = std::move(valuations);
  out["sign_class"] = sign_predict(map).to_string();
  out["congruence_checks"] = Json::array({to_json(congruence_check(orbit, 3)), to_json(congruence_check(orbit, 4))});
  return out;
}

}  // namespace arborist
