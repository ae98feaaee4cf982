#pragma once

// Delta sets of symmetric three-generated semigroups through Euclid's set,
// plus the constructive side: normalization of kernel vectors, intermediate
// factorizations for gaps outside Euclid's set, and witnesses for the gaps
// inside it.

#include <array>
#include <cstdint>
#include <optional>

#include "deltasg/betti.hpp"
#include "deltasg/euclid.hpp"
#include "deltasg/semigroup.hpp"

namespace deltasg {

// Kernel basis {v1, v2} with delta1 = l(v1), delta2 = |l(v2)|, sigma the sign
// of l(v2) (+1 when it is zero). Vectors are stored in sorted-generator
// coordinates; the sign conventions (v1 = (+,-,0), v2 = (+,+,-)) hold in the
// structural coordinates given by perm.
struct BasisPair {
  KernelVector v1;
  KernelVector v2;
  Int delta1;
  Int delta2;
  int sigma = 1;
  Int g;
  std::array<int, 3> perm{0, 1, 2};
  std::array<Int, 3> atoms{};

  KernelVector to_structural(const KernelVector& v) const;
  KernelVector from_structural(const KernelVector& v) const;
  // a1*v1 + sigma*a2*v2, whose length is a1*delta1 + a2*delta2.
  KernelVector combine(Int a1, Int a2) const;
  // (delta2/g)*v1 - sigma*(delta1/g)*v2, the generator of length-zero vectors.
  KernelVector zero_length_vector() const;
  Int max_delta() const { return std::max(delta1, delta2); }
};

BasisPair basis_and_deltas(const Generators& S, const StructuralForm& form);

struct SymmetricData {
  BettiData betti;
  StructuralForm form;
  BasisPair basis;
  EuclidSet euclid;
};

// Throws NonSymmetric for three Betti elements.
SymmetricData analyze_symmetric(const Generators& S);

DeltaSet delta_set_fast(const Generators& S);

// Experimental: seeds Euclid's set with the distinct distances realized at
// the Betti elements of a non-symmetric semigroup.
DeltaSet delta_set_nonsymmetric(const Generators& S);

struct Normalized {
  Int a1;
  Int a2;
  Int alpha;
};

// v = a1*v1 + sigma*a2*v2 + alpha*zero_length_vector() with a1*a2 <= 0,
// -delta2/g < a1 <= delta2/g, -delta1/g < a2 <= delta1/g and the third
// structural coordinate of a1*v1 + sigma*a2*v2 not of opposite sign to v's.
Normalized normalize_kernel_vector(const KernelVector& v, const BasisPair& basis);

struct WeightedVector {
  KernelVector coords;
  Int a1;
  Int a2;
};

WeightedVector weighted_vector(const BasisPair& basis, const std::array<Int, 2>& coefficients);
// Sign table for w_x (pos) and w'_x (neg), in structural coordinates.
bool weighted_signs_hold(const WeightedVector& w, const BasisPair& basis, BasementVariant variant);

// A factorization of the same element with length strictly between l(zp)
// and l(z), for l(z) - l(zp) in (0, max delta] outside Euclid's set.
Factorization intermediate_factorization(const SymmetricData& data, const Factorization& z,
                                         const Factorization& zp);
Factorization intermediate_factorization(const Generators& S, const Factorization& z, const Factorization& zp);

struct Witness {
  Int distance;
  Int element;
  Factorization longer;   // z
  Factorization shorter;  // z'
  KernelVector vector;    // z - z'
  bool betti_fallback = false;
};

Witness witness(const SymmetricData& data, Int d);
Witness witness(const Generators& S, Int d);

inline constexpr std::int64_t kWitnessEnumerationBudget = 10'000'000;

// Adjacency of the witness lengths in L(s) by full enumeration of Z(s);
// nullopt when the enumeration would exceed the budget.
std::optional<bool> check_witness(const Generators& S, const Witness& w,
                                  std::int64_t budget = kWitnessEnumerationBudget);

}  // namespace deltasg
