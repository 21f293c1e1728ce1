#include "arborist/independence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "arborist/errors.hpp"

namespace arborist {

namespace {

void require_nonzero(std::span<const Rational> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero()) {
      throw InvalidInput("square classes undefined for zero value at index " + std::to_string(i));
    }
  }
}

// Dense F_2 row.
class BitRow {
 public:
  explicit BitRow(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void operator^=(const BitRow& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  }
  /// Index of the lowest set bit, or npos when zero.
  std::size_t lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return npos;
  }
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
    return out;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> words_;
};

Rational product_of(std::span<const Rational> values, const std::vector<std::size_t>& subset) {
  Rational product(1);
  for (std::size_t i : subset) product *= values[i];
  return product;
}

}  // namespace

SquareClasses square_classes(std::span<const Rational> values) {
  require_nonzero(values);

  // Perfect-square parts contribute only even exponents and are skipped.
  std::vector<Integer> parts;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (const Integer& part : {Integer(abs(values[i].num())), values[i].den()}) {
      if (part >= 2 && !is_perfect_square(part)) {
        parts.push_back(part);
        owner.push_back(i);
      }
    }
  }
  const FactorRefinement refined = factor_refine(parts);

  // An element m^k with k even is a square and never affects squareness;
  // odd-k perfect powers stay as they are.
  std::vector<std::size_t> kept;
  SquareClasses out;
  for (std::size_t k = 0; k < refined.basis.size(); ++k) {
    if (perfect_power_decompose(refined.basis[k]).exponent % 2 == 1) {
      kept.push_back(k);
      out.basis.elements.push_back(refined.basis[k]);
    }
  }

  out.vectors.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.vectors[i].sign_bit = values[i].sign() < 0;
    out.vectors[i].parities.assign(kept.size(), 0);
  }
  for (std::size_t row = 0; row < parts.size(); ++row) {
    auto& parities = out.vectors[owner[row]].parities;
    for (std::size_t col = 0; col < kept.size(); ++col) {
      parities[col] ^= static_cast<std::uint8_t>(refined.exponents[row][kept[col]] & 1U);
    }
  }
  return out;
}

IndependenceResult two_independent(std::span<const Rational> values) {
  const SquareClasses classes = square_classes(values);
  const std::size_t columns = classes.basis.elements.size() + 1;  // column 0 is the sign

  // pivots[col] holds a reduced row whose lowest set column is col, together
  // with the set of inputs that combine to it.
  std::map<std::size_t, std::pair<BitRow, BitRow>> pivots;
  for (std::size_t i = 0; i < values.size(); ++i) {
    BitRow row(columns);
    BitRow combo(values.size());
    combo.set(i);
    const SquareClassVector& v = classes.vectors[i];
    if (v.sign_bit) row.set(0);
    for (std::size_t k = 0; k < v.parities.size(); ++k) {
      if (v.parities[k] != 0) row.set(k + 1);
    }
    for (;;) {
      const std::size_t col = row.lowest();
      if (col == BitRow::npos) {
        std::vector<std::size_t> witness = combo.members();
        if (!rational_is_square(product_of(values, witness))) {
          throw InvariantViolation("F2 elimination produced a witness whose product is not a square");
        }
        return IndependenceResult::Dependent(std::move(witness));
      }
      auto pivot = pivots.find(col);
      if (pivot == pivots.end()) {
        pivots.emplace(col, std::make_pair(std::move(row), std::move(combo)));
        break;
      }
      row ^= pivot->second.first;
      combo ^= pivot->second.second;
    }
  }
  return IndependenceResult::Independent();
}

IndependenceResult brute_force_independent(std::span<const Rational> values) {
  if (values.size() > kBruteForceLimit) {
    throw InvalidInput("brute_force_independent accepts at most " +
                       std::to_string(kBruteForceLimit) + " values");
  }
  require_nonzero(values);
  const std::uint64_t subsets = std::uint64_t{1} << values.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    Rational product(1);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if ((mask >> i) & 1U) product *= values[i];
    }
    if (rational_is_square(product)) {
      std::vector<std::size_t> witness;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if ((mask >> i) & 1U) witness.push_back(i);
      }
      return IndependenceResult::Dependent(std::move(witness));
    }
  }
  return IndependenceResult::Independent();
}

FastPathResult structured_independent_family1(const AdjustedOrbit& orbit) {
  if (orbit.map().family() != Family::Family1) {
    throw InvalidInput("structured_independent_family1 requires a family1 orbit");
  }
  if (rational_is_square(orbit.d(1))) return {false, "D_1 is a square"};

  const Integer two_r = 2 * orbit.a().num();
  const Integer d1_num = abs(orbit.d(1).num());
  std::vector<Integer> cofactors;
  for (std::size_t i = 2; i <= orbit.depth(); ++i) {
    Integer t = decompose1(orbit, i).t;
    const std::string at = "t_" + std::to_string(i);
    if (is_perfect_square(t)) return {false, at + " is a square"};
    if (gcd(t, two_r) != 1) return {false, at + " shares a factor with 2r"};
    if (gcd(t, d1_num) != 1) return {false, at + " shares a factor with D_1"};
    for (std::size_t j = 0; j < cofactors.size(); ++j) {
      if (gcd(t, cofactors[j]) != 1) {
        return {false, at + " shares a factor with t_" + std::to_string(j + 2)};
      }
    }
    cofactors.push_back(std::move(t));
  }
  return {true, {}};
}

}  // namespace arborist
