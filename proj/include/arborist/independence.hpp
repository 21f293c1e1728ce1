#pragma once

// 2-independence of a list of nonzero rationals in Q*/(Q*)^2.
//
// A value is a square in Q(sqrt(D_1), ..., sqrt(D_{i-1})) iff its product with
// some subset of the D_j is a rational square, so independence of the whole
// list is linear independence of square-class vectors over F_2. The vectors
// live on a pairwise-coprime basis from factor refinement, which avoids any
// integer factorization.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "arborist/critorbit.hpp"
#include "arborist/exactnum.hpp"

namespace arborist {

/// Pairwise-coprime integers >= 2, none a perfect square.
struct CoprimeBasis {
  std::vector<Integer> elements;
};

/// x = (-1)^sign_bit * prod_k basis[k]^(e_k) * (square), parities[k] = e_k mod 2.
struct SquareClassVector {
  bool sign_bit = false;
  std::vector<std::uint8_t> parities;  // one entry per basis element
};

struct SquareClasses {
  CoprimeBasis basis;
  std::vector<SquareClassVector> vectors;
};

/// Square classes of nonzero values over a shared coprime basis.
SquareClasses square_classes(std::span<const Rational> values);

struct IndependenceResult {
  bool independent = true;
  /// Sorted indices into the input whose product is a rational square.
  std::vector<std::size_t> witness;

  static IndependenceResult Independent() { return {true, {}}; }
  static IndependenceResult Dependent(std::vector<std::size_t> witness) {
    return {false, std::move(witness)};
  }
};

/// Gaussian elimination over F_2 in input order. A Dependent witness always
/// contains the first index whose prefix is dependent as its largest element,
/// and its product is re-verified to be a square before returning.
IndependenceResult two_independent(std::span<const Rational> values);

inline constexpr std::size_t kBruteForceLimit = 20;

/// Ground truth by enumerating all nonempty subsets in ascending bitmask
/// order (bit i selects values[i]); the first square product is the witness.
/// Rejects more than kBruteForceLimit values.
IndependenceResult brute_force_independent(std::span<const Rational> values);

struct FastPathResult {
  bool independent = false;
  std::string reason;  // why it could not decide
};

/// Family1 shortcut: D_1..D_N are independent when D_1 is a nonsquare and
/// every cofactor t_i (i >= 2) is a nonsquare coprime to 2r, to the numerator
/// of D_1 and to every other t_j. Never concludes dependence.
FastPathResult structured_independent_family1(const AdjustedOrbit& orbit);

}  // namespace arborist
