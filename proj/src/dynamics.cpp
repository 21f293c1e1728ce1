#include "arborist/dynamics.hpp"

#include <algorithm>
#include <string>

#include "arborist/errors.hpp"

namespace arborist {

namespace {

const Rational kHalf(1, 2);

void require_postcondition(bool ok, const char* what, const Rational& a) {
  if (!ok) throw InvariantViolation(std::string(what) + " failed for a = " + a.to_string());
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Family1: return "family1";
    case Family::Family2: return "family2";
    case Family::Custom: return "custom";
  }
  return "custom";
}

int family_number(Family family) {
  switch (family) {
    case Family::Family1: return 1;
    case Family::Family2: return 2;
    case Family::Custom: return 0;
  }
  return 0;
}

Family family_from_number(int number) {
  if (number == 1) return Family::Family1;
  if (number == 2) return Family::Family2;
  throw InvalidInput("family must be 1 or 2, got " + std::to_string(number));
}

QuadMap QuadMap::custom(Rational c, std::optional<Rational> base_point) {
  return QuadMap(std::move(c), Family::Custom, std::move(base_point));
}

const Rational& QuadMap::a() const {
  if (!base_point_) throw InvalidInput("quadratic map has no base point");
  return *base_point_;
}

QuadMap family1(const Rational& a) {
  if (a.is_zero() || a == Rational(-1)) {
    throw DegenerateBasePoint("family1 base point must not be 0 or -1, got " + a.to_string());
  }
  QuadMap f(-a - a * a, Family::Family1, a);
  const Rational fa = f(a);
  require_postcondition(fa == -a && f(fa) == -a, "family1 orbit a -> -a -> -a", a);
  return f;
}

QuadMap family2(const Rational& a) {
  if (a.is_zero() || a == kHalf) {
    throw DegenerateBasePoint("family2 base point must not be 0 or 1/2, got " + a.to_string());
  }
  QuadMap f(Rational(-1) + a - a * a, Family::Family2, a);
  const Rational f1 = f(a);
  const Rational f2 = f(f1);
  require_postcondition(f1 == a - Rational(1) && f2 == -a && f(f2) == f1,
                        "family2 orbit a -> a-1 -> -a -> a-1", a);
  return f;
}

Rational iterate(const QuadMap& f, Rational x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x = f(x);
  return x;
}

std::optional<OrbitInfo> detect_orbit(const QuadMap& f, const Rational& x, std::size_t max_steps) {
  if (max_steps == 0) throw InvalidInput("detect_orbit requires max_steps >= 1");
  OrbitInfo info;
  info.points.push_back(x);
  Rational current = x;
  for (std::size_t step = 0; step < max_steps; ++step) {
    current = f(current);
    auto hit = std::find(info.points.begin(), info.points.end(), current);
    if (hit != info.points.end()) {
      info.tail_length = static_cast<std::size_t>(hit - info.points.begin());
      info.cycle_length = info.points.size() - info.tail_length;
      return info;
    }
    info.points.push_back(current);
  }
  return std::nullopt;
}

ParametrizedPair poonen_fixed(const Rational& rho) {
  const Rational a = -(kHalf + rho);
  if (a.is_zero() || a == Rational(-1)) {
    throw DegenerateBasePoint("rho = " + rho.to_string() + " gives degenerate base point " +
                              a.to_string());
  }
  ParametrizedPair out{a, Rational(1, 4) - rho * rho, Rational(-1) - a};
  require_postcondition(out.c == -a - a * a, "fixed-point parametrization c = -a - a^2", a);
  return out;
}

ParametrizedPair poonen_period2(const Rational& sigma) {
  if (sigma.is_zero()) throw DegenerateBasePoint("sigma must be nonzero");
  const Rational a = kHalf - sigma;
  if (a.is_zero() || a == kHalf) {
    throw DegenerateBasePoint("sigma = " + sigma.to_string() + " gives degenerate base point " +
                              a.to_string());
  }
  ParametrizedPair out{a, Rational(-3, 4) - sigma * sigma, Rational(1) - a};
  require_postcondition(out.c == Rational(-1) + a - a * a,
                        "period-2 parametrization c = -1 + a - a^2", a);
  return out;
}

}  // namespace arborist
