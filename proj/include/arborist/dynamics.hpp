#pragma once

// Quadratic maps f(x) = x^2 + c over Q, forward orbits, and the two families
// of maps with a strictly preperiodic base point of tail length 1.

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "arborist/exactnum.hpp"

namespace arborist {

/// Family1: a -> -a, fixed (c = -a - a^2).
/// Family2: a -> a-1 <-> -a (c = -1 + a - a^2).
enum class Family { Family1, Family2, Custom };

std::string_view family_name(Family family);
/// 1 or 2 for the two families, 0 for Custom.
int family_number(Family family);
/// Inverse of family_number for 1 and 2. Throws InvalidInput otherwise.
Family family_from_number(int number);

class QuadMap {
 public:
  /// Arbitrary c; supported by iterate/detect_orbit but not by the analyzers.
  static QuadMap custom(Rational c, std::optional<Rational> base_point = std::nullopt);

  const Rational& c() const { return c_; }
  Family family() const { return family_; }
  const std::optional<Rational>& base_point() const { return base_point_; }
  /// The base point; throws InvalidInput for a map without one.
  const Rational& a() const;

  Rational operator()(const Rational& x) const { return x * x + c_; }

 private:
  QuadMap(Rational c, Family family, std::optional<Rational> base_point)
      : c_(std::move(c)), family_(family), base_point_(std::move(base_point)) {}

  friend QuadMap family1(const Rational& a);
  friend QuadMap family2(const Rational& a);

  Rational c_;
  Family family_;
  std::optional<Rational> base_point_;
};

/// c = -a - a^2. Rejects a in {0, -1} (a = -1 gives f = x^2).
QuadMap family1(const Rational& a);
/// c = -1 + a - a^2. Rejects a in {0, 1/2}.
QuadMap family2(const Rational& a);

/// f^n(x); iterate(f, x, 0) = x.
Rational iterate(const QuadMap& f, Rational x, std::size_t n);

struct OrbitInfo {
  std::size_t tail_length = 0;
  std::size_t cycle_length = 0;
  /// x, f(x), ... up to (excluding) the first repeated value.
  std::vector<Rational> points;
};

inline constexpr std::size_t kDefaultOrbitSteps = 64;

/// Tail and cycle of the orbit of x, or nullopt when no value repeats
/// within max_steps applications of f.
std::optional<OrbitInfo> detect_orbit(const QuadMap& f, const Rational& x,
                                      std::size_t max_steps = kDefaultOrbitSteps);

/// A map from one of the rational parametrizations together with its base
/// point and the second base point producing the same c.
struct ParametrizedPair {
  Rational a;
  Rational c;
  Rational partner;
};

/// Maps with a rational fixed point: a = -(1/2 + rho), c = 1/4 - rho^2,
/// partner -1 - a.
ParametrizedPair poonen_fixed(const Rational& rho);
/// Maps with a rational 2-cycle: a = 1/2 - sigma, c = -3/4 - sigma^2,
/// partner 1 - a.
ParametrizedPair poonen_period2(const Rational& sigma);

}  // namespace arborist
