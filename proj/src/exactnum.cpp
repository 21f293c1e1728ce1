#include "arborist/exactnum.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <ostream>
#include <utility>

#include "arborist/errors.hpp"

namespace arborist {

namespace {

std::size_t bit_length(const Integer& n) {
  return sgn(n) == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

Integer ipow(const Integer& base, unsigned long k) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), k);
  return out;
}

std::vector<unsigned long> primes_up_to(unsigned long limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<unsigned long> out;
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

// One Miller-Rabin round; n odd, n > base, n - 1 = d * 2^r.
bool strong_probable_prime(const Integer& n, const Integer& d, unsigned long r,
                           unsigned long base) {
  Integer x;
  const Integer b(base);
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Rational::normalize() {
  if (sgn(den_) == 0) throw InvalidInput("rational with zero denominator");
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw InvalidInput("malformed rational: '" + std::string(text) + "'");
  }
  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (sgn(den) == 0) throw InvalidInput("malformed rational (zero denominator): '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

Rational Rational::abs() const {
  Rational out = *this;
  out.num_ = ::abs(out.num_);
  return out;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

double Rational::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw InvalidInput("division by zero rational");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const int c = cmp(lhs.num_ * rhs.den_, rhs.num_ * lhs.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Rational pow(const Rational& x, unsigned long k) {
  return Rational(ipow(x.num(), k), ipow(x.den(), k));
}

// ---------------------------------------------------------------- primality

const Integer kDeterministicPrimeBound("3317044064679887385961981", 10);

Primality primality(const Integer& n) {
  static constexpr std::array<unsigned long, 13> kBases = {2,  3,  5,  7,  11, 13, 17,
                                                           19, 23, 29, 31, 37, 41};
  if (n < 2) return Primality::Composite;
  for (unsigned long p : kBases) {
    if (n == p) return Primality::Prime;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return Primality::Composite;
  }
  Integer d = n - 1;
  const unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  for (unsigned long base : kBases) {
    if (!strong_probable_prime(n, d, r, base)) return Primality::Composite;
  }
  return n < kDeterministicPrimeBound ? Primality::Prime : Primality::Unknown;
}

// ---------------------------------------------------------------- valuations

long valuation(const Integer& n, const Integer& p) {
  if (sgn(n) == 0) throw InvalidInput("integer valuation of zero");
  if (p < 2) throw InvalidInput("valuation base must be >= 2");
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Valuation valuation(const Rational& x, const Integer& p) {
  if (primality(p) == Primality::Composite) {
    throw InvalidInput("valuation at non-prime " + p.get_str());
  }
  if (x.is_zero()) return Valuation::infinity();
  return {false, valuation(x.num(), p) - valuation(x.den(), p)};
}

// ---------------------------------------------------------------- roots and squares

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw InvalidInput("isqrt of negative integer");
  if (n < 2) return n;
  // 2^ceil(bits/2) >= sqrt(n); Newton decreases monotonically from above.
  Integer x = Integer(1) << static_cast<mp_bitcnt_t>((bit_length(n) + 1) / 2);
  for (;;) {
    Integer y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

Integer iroot(const Integer& n, unsigned long k) {
  if (k == 0) throw InvalidInput("iroot with k = 0");
  if (sgn(n) < 0) throw InvalidInput("iroot of negative integer");
  if (k == 1 || n < 2) return n;
  const std::size_t bits = bit_length(n);
  if (bits <= k) return 1;  // 2^bits > n, so root < 2
  Integer x = Integer(1) << static_cast<mp_bitcnt_t>((bits + k - 1) / k);
  const Integer km1(k - 1);
  for (;;) {
    Integer y = (km1 * x + n / ipow(x, k - 1)) / k;
    if (y >= x) return x;
    x = std::move(y);
  }
}

bool is_perfect_square(const Integer& n) {
  if (sgn(n) < 0) return false;
  // Squares are 0, 1, 4 or 9 mod 16.
  const unsigned long low = mod_u(n, 16);
  if (low != 0 && low != 1 && low != 4 && low != 9) return false;
  const Integer r = isqrt(n);
  return r * r == n;
}

bool rational_is_square(const Rational& x) {
  return x.sign() >= 0 && is_perfect_square(x.num()) && is_perfect_square(x.den());
}

// ---------------------------------------------------------------- Jacobi

int jacobi(const Integer& a_in, const Integer& n_in) {
  if (sgn(n_in) <= 0 || mpz_even_p(n_in.get_mpz_t()) != 0) {
    throw InvalidInput("jacobi modulus must be odd and positive, got " + n_in.get_str());
  }
  Integer n = n_in;
  Integer a;
  mpz_fdiv_r(a.get_mpz_t(), a_in.get_mpz_t(), n.get_mpz_t());
  int result = 1;
  while (sgn(a) != 0) {
    const unsigned long twos = mpz_scan1(a.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), twos);
    const unsigned long n8 = mod_u(n, 8);
    if ((twos & 1U) != 0 && (n8 == 3 || n8 == 5)) result = -result;
    std::swap(a, n);
    if (mod_u(a, 4) == 3 && mod_u(n, 4) == 3) result = -result;
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  }
  return n == 1 ? result : 0;
}

// ---------------------------------------------------------------- perfect powers

PerfectPower perfect_power_decompose(const Integer& n) {
  if (n < 2) throw InvalidInput("perfect_power_decompose requires n >= 2");
  PerfectPower out{n, 1};
  if (mpz_perfect_power_p(n.get_mpz_t()) == 0) return out;
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (unsigned long p : primes_up_to(static_cast<unsigned long>(bit_length(out.base)))) {
      Integer root = iroot(out.base, p);
      if (root >= 2 && ipow(root, p) == out.base) {
        out.base = std::move(root);
        out.exponent *= p;
        reduced = true;
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- factor refinement

FactorRefinement factor_refine(std::span<const Integer> inputs) {
  std::vector<Integer> work;
  work.reserve(inputs.size());
  for (const Integer& n : inputs) {
    if (n < 2) throw InvalidInput("factor_refine inputs must be >= 2, got " + n.get_str());
    work.push_back(n);
  }
  auto canonical = [&work] {
    std::sort(work.begin(), work.end());
    work.erase(std::unique(work.begin(), work.end()), work.end());
  };
  canonical();

  // Replacing a pair x, y sharing g > 1 by x/g, g, y/g strictly lowers the
  // product of the working set, so the loop terminates.
  bool split = true;
  while (split) {
    split = false;
    for (std::size_t i = 0; i < work.size() && !split; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !split; ++j) {
        Integer g = gcd(work[i], work[j]);
        if (g == 1) continue;
        Integer x = work[i] / g;
        Integer y = work[j] / g;
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        for (Integer* part : {&x, &g, &y}) {
          if (*part > 1) work.push_back(std::move(*part));
        }
        canonical();
        split = true;
      }
    }
  }

  FactorRefinement out;
  out.basis = std::move(work);
  out.exponents.reserve(inputs.size());
  for (const Integer& n : inputs) {
    Integer rest = n;
    std::vector<unsigned long> row(out.basis.size(), 0);
    for (std::size_t k = 0; k < out.basis.size(); ++k) {
      row[k] = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), out.basis[k].get_mpz_t());
    }
    if (rest != 1) {
      throw InvariantViolation("factor_refine: " + n.get_str() + " not reconstructed by basis");
    }
    out.exponents.push_back(std::move(row));
  }
  return out;
}

unsigned long mod_u(const Integer& n, unsigned long m) {
  return mpz_fdiv_ui(n.get_mpz_t(), m);
}

}  // namespace arborist
