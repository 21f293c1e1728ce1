#pragma once

// JSON forms of verdicts, orbit reports and independence results. Key order
// is fixed so that serialized output is byte-stable.

#include <span>
#include <vector>

#include <json.hpp>

#include "arborist/critorbit.hpp"
#include "arborist/independence.hpp"
#include "arborist/verdict.hpp"

namespace arborist {

using Json = nlohmann::ordered_json;

Json to_json(const Verdict& verdict);
Json to_json(const ValuationReport& report);
Json to_json(const CongruenceReport& report);

/// {status, witness, witness_values}; the last two only when dependent.
Json to_json(const IndependenceResult& result, std::span<const Rational> values);

/// 2 together with the prime divisors of r and s (trial division only, so
/// large unfactored cofactors are left out).
std::vector<Integer> default_report_primes(const AdjustedOrbit& orbit);

/// {a, family, N, D, valuation_checks, sign_class, congruence_checks}.
/// Custom maps get D only; the analyzers need a family.
Json orbit_report(const AdjustedOrbit& orbit, const std::vector<Integer>& primes);

}  // namespace arborist
