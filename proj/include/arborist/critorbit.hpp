#pragma once

// The adjusted critical orbit D_1 = a - c, D_n = f^n(0) - a (n >= 2) of a
// family map, its closed-form numerator recursions, and the valuation, sign
// and congruence analyzers built on them.
//
// Notation: a = r/s reduced with s > 0, and f^n(0) - a = r_n / s^(2^n) with
// r_0 = -r. The denominator identity holds for both families.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arborist/dynamics.hpp"
#include "arborist/exactnum.hpp"

namespace arborist {

inline constexpr std::size_t kDefaultDepth = 12;

class AdjustedOrbit {
 public:
  const QuadMap& map() const { return map_; }
  const Rational& a() const { return map_.a(); }
  std::size_t depth() const { return d_.size(); }

  /// D_i, 1 <= i <= depth.
  const Rational& d(std::size_t i) const;
  std::span<const Rational> d_values() const { return d_; }

  /// f^n(0) - a, 1 <= n <= depth. Equal to D_n except at n = 1 where it is -D_1.
  Rational shifted(std::size_t n) const;

  /// Reduced numerator r_n of f^n(0) - a, 0 <= n <= depth.
  const Integer& r(std::size_t n) const;
  /// Denominator of the base point.
  const Integer& s() const { return s_; }

  /// The same orbit computed to a new depth.
  AdjustedOrbit extended(std::size_t depth) const;

 private:
  AdjustedOrbit(QuadMap map, std::vector<Rational> d, std::vector<Integer> r, Integer s)
      : map_(std::move(map)), d_(std::move(d)), r_(std::move(r)), s_(std::move(s)) {}

  friend AdjustedOrbit d_sequence(const QuadMap& map, std::size_t depth);

  QuadMap map_;
  std::vector<Rational> d_;
  std::vector<Integer> r_;  // r_0 .. r_depth
  Integer s_;
};

/// D_1..D_depth by exact iteration. For the two families the numerators are
/// also produced by numerator_recursion and both routes must agree, with
/// denominators s^(2^n); a mismatch throws InvariantViolation.
AdjustedOrbit d_sequence(const QuadMap& map, std::size_t depth = kDefaultDepth);

/// r_1..r_depth from the closed-form recursion
///   Family1: r_{n+1} = r_n^2 + 2 r_n r s^(2^n - 1) - 2 r s^(2^(n+1) - 1)
///   Family2: r_{n+1} = r_n^2 + 2 r_n r s^(2^n - 1) - s^(2^(n+1))
/// starting from r_0 = -r. Requires gcd(r, s) = 1 and s >= 1.
std::vector<Integer> numerator_recursion(Family family, const Integer& r, const Integer& s,
                                         std::size_t depth);

/// Family1, n >= 2: r_n = delta_sign * 2^e * |r| * t with t odd and
/// gcd(t, r) = 1, where e = 1 iff v_2(a) > 0.
struct Decomposition1 {
  std::size_t n = 0;
  int delta_sign = 1;
  int e = 0;
  Integer t;
};

Decomposition1 decompose1(const AdjustedOrbit& orbit, std::size_t n);

/// Family2 with r = 1 and s even, or r = 2 (so 0 < a < 1):
/// r_n = -2^two_part * t with t odd; two_part is 0 for r = 1, and for r = 2
/// it is 0 at odd n and 2 at even n.
struct Decomposition2 {
  std::size_t n = 0;
  Integer t;
  unsigned two_part = 0;
};

/// Throws InvalidInput outside the hypotheses above and InvariantViolation
/// if the orbit contradicts them.
Decomposition2 decompose2(const AdjustedOrbit& orbit, std::size_t n);

/// One statement about p-adic valuations of f^n(0) - a.
struct ValuationItem {
  int item = 0;
  std::string name;
  bool applicable = false;
  bool holds = true;
  std::vector<std::size_t> checked;     // indices n at which it was evaluated
  std::vector<std::size_t> violations;  // subset of checked where it failed
};

struct ValuationReport {
  Integer p;
  std::vector<ValuationItem> items;

  bool all_hold() const;
  const ValuationItem& item(int index) const;
};

/// Evaluates the family's five valuation statements at prime p over the
/// computed depth. Statements whose hypothesis fails are marked inapplicable.
ValuationReport check_valuations(const AdjustedOrbit& orbit, const Integer& p);

/// Claim about the signs of f^n(0) - a for the whole infinite orbit.
struct SignClass {
  enum class Kind { AllPositiveFrom, AllNegativeFrom, Mixed, Boundary };
  Kind kind = Kind::Mixed;
  std::size_t from = 0;  // first n covered, for the All* kinds

  std::string to_string() const;
  friend bool operator==(const SignClass&, const SignClass&) = default;
};

/// Interval classification of the base point decided by exact polynomial
/// signs, never by approximating the irrational endpoints.
SignClass sign_predict(const QuadMap& map);

struct CongruenceReport {
  unsigned modulus = 0;
  bool applicable = false;
  bool holds = false;
  std::optional<std::size_t> first_failure;
  std::string reason;  // set when inapplicable
};

/// Family1: r_n = 1 mod 3 for n >= 2 when 3 does not divide r, and
/// r_n = 1 mod 4 for n >= 2 when r is odd.
CongruenceReport congruence_check(const AdjustedOrbit& orbit, unsigned modulus);

}  // namespace arborist
