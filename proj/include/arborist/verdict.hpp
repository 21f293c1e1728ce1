#pragma once

// Certification of surjectivity for the two families: the sufficient
// conditions on a = r/s, the square test on a - c, and the generic
// independence check used both as an audit and as a fallback.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arborist/dynamics.hpp"
#include "arborist/exactnum.hpp"

namespace arborist {

enum class Status { ProvenSurjective, NotSurjective, Inapplicable, IndependentToDepth, DependentAtLevel };

/// Sufficient conditions, in their fixed numerical order per family.
enum class Condition {
  Family1Mod3,         // (-1)^delta 2^e |r| = 2 mod 3
  Family1Mod4,         // (-1)^delta 2^e |r| = 3 mod 4
  Family1Nonresidue,   // (-1)^delta 2^e |r| a non-residue mod some prime q | s
  Family2R1SEven,      // r = 1, s > 2 even
  Family2R2SMod3,      // r = 2, s > 3, s = 1 mod 3
  Family2R2PrimeMod4,  // r = 2, some prime q | s with q = 3 mod 4
};

std::string_view status_name(Status status);
std::string_view condition_tag(Condition condition);
/// 1, 2 or 3 within the condition's family.
int condition_index(Condition condition);

struct DeltaE {
  std::optional<int> delta;  // nullopt where the sign pattern is not uniform
  int e = 0;
};

/// delta = 1 on (0, beta), 0 on (-inf,-2) u (-2,-1) u (-1,0) u (1,inf),
/// undefined on [beta, 1] and at -2, -1, 1. e = 1 iff v_2(a) > 0.
DeltaE compute_delta_e(const Rational& a);

struct Verdict {
  Rational a;
  Family family = Family::Family1;
  Status status = Status::Inapplicable;
  std::optional<Condition> condition;  // first firing condition
  std::vector<Condition> conditions;   // all firing conditions
  std::optional<Integer> q;            // prime used by a non-residue / 3 mod 4 condition
  std::size_t depth = 0;               // audit depth, or depth of fallback evidence
  std::optional<std::size_t> level;    // DependentAtLevel: first dependent prefix length
  std::vector<std::size_t> witness;    // DependentAtLevel: 0-based indices into D
  std::optional<DeltaE> delta_e;       // family1 only
  std::string reason;

  /// IndependentToDepth is finite-depth evidence only; a dependent prefix
  /// already rules out surjectivity.
  bool is_proof() const {
    return status == Status::ProvenSurjective || status == Status::NotSurjective ||
           status == Status::DependentAtLevel;
  }
};

inline constexpr std::size_t kDefaultAuditDepth = 10;
inline constexpr std::uint64_t kDefaultTrialDivisionLimit = 1'000'000;

/// Family1 criterion. When it proves surjectivity, D_1..D_depth_check must
/// also pass the generic independence check, otherwise InvariantViolation.
/// depth_check = 0 skips the audit.
Verdict theorem1(const Rational& a, std::size_t depth_check = kDefaultAuditDepth,
                 std::uint64_t trial_limit = kDefaultTrialDivisionLimit);

/// Family2 criterion, audited the same way.
Verdict theorem2(const Rational& a, std::size_t depth_check = kDefaultAuditDepth,
                 std::uint64_t trial_limit = kDefaultTrialDivisionLimit);

/// Applicable criterion first; when it is inapplicable, falls back to the
/// independence of D_1..D_depth and reports IndependentToDepth or
/// DependentAtLevel.
Verdict certify(const Rational& a, Family family, std::size_t depth = kDefaultAuditDepth);

/// Odd prime divisors of n > 0 found by trial division up to `limit`, plus
/// the remaining cofactor when it is certified prime. `complete` is false if
/// an uncertified cofactor remains.
struct OddPrimeDivisors {
  std::vector<Integer> primes;
  bool complete = true;
};

OddPrimeDivisors odd_prime_divisors(const Integer& n, std::uint64_t limit);

}  // namespace arborist
