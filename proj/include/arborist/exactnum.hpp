#pragma once

// Exact integer and rational arithmetic plus the number-theoretic predicates
// used throughout: valuations, square tests, Jacobi symbols, primality below a
// deterministic bound, perfect powers and gcd-based factor refinement.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arborist {

using Integer = mpz_class;

/// Reduced fraction num/den with den >= 1 and gcd(|num|, den) = 1.
/// Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num) : num_(num), den_(1) {}  // NOLINT
  Rational(Integer num, Integer den);

  /// Parses "r", "-r", "+r" or "r/s" with decimal digits. Throws InvalidInput.
  static Rational parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  int sign() const { return sgn(num_); }
  bool is_zero() const { return sgn(num_) == 0; }
  bool is_integer() const { return den_ == 1; }
  Rational abs() const;

  /// "r/s", with "/s" omitted when s = 1.
  std::string to_string() const;
  double to_double() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  void normalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

Rational pow(const Rational& x, unsigned long k);

/// p-adic valuation; `infinite` is set exactly for the valuation of zero.
struct Valuation {
  bool infinite = false;
  long value = 0;

  static Valuation infinity() { return {true, 0}; }
  bool positive() const { return infinite || value > 0; }
  bool negative() const { return !infinite && value < 0; }
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// Above this bound primality can only be asserted by the caller.
/// Below it Miller-Rabin with the first 13 prime bases is exact.
extern const Integer kDeterministicPrimeBound;

enum class Primality { Prime, Composite, Unknown };

/// Exact below kDeterministicPrimeBound; above it returns Composite when a
/// witness is found and Unknown otherwise.
Primality primality(const Integer& n);

/// v_p(x) = v_p(num) - v_p(den). Rejects p that is provably not prime.
Valuation valuation(const Rational& x, const Integer& p);
/// v_p(n) for n != 0; p >= 2 is not checked for primality here.
long valuation(const Integer& n, const Integer& p);

/// floor(sqrt(n)) for n >= 0 by Newton iteration from 2^ceil(bits/2).
Integer isqrt(const Integer& n);
/// floor(n^(1/k)) for n >= 0, k >= 1.
Integer iroot(const Integer& n, unsigned long k);

bool is_perfect_square(const Integer& n);
bool rational_is_square(const Rational& x);

/// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(const Integer& a, const Integer& n);

struct PerfectPower {
  Integer base;
  unsigned long exponent = 1;
};

/// n = base^exponent with exponent maximal, for n >= 2.
PerfectPower perfect_power_decompose(const Integer& n);

struct FactorRefinement {
  std::vector<Integer> basis;  // pairwise coprime, ascending, each >= 2
  std::vector<std::vector<unsigned long>> exponents;  // one row per input
};

/// Coprime base for `inputs` (each >= 2) by gcd splitting to a fixpoint.
/// inputs[i] = prod_k basis[k]^exponents[i][k].
FactorRefinement factor_refine(std::span<const Integer> inputs);

/// Non-negative residue of n modulo m > 0.
unsigned long mod_u(const Integer& n, unsigned long m);

}  // namespace arborist
