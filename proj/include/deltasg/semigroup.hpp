#pragma once

// Three-generated numerical semigroups: membership, Frobenius number,
// symmetry, and per-element factorization data Z(s), L(s), Delta(s).

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deltasg/int.hpp"

namespace deltasg {

namespace detail {
struct MembershipTable;
}

// Coordinates over the three atoms. Tag keeps factorizations (naturals bound
// to one element) apart from kernel-lattice vectors (signed, length-only).
template <class Tag>
struct Coords {
  std::array<Int, 3> c{};

  constexpr Coords() = default;
  constexpr Coords(Int a, Int b, Int d) : c{a, b, d} {}

  Int& operator[](std::size_t i) { return c[i]; }
  const Int& operator[](std::size_t i) const { return c[i]; }

  Int length() const { return c[0] + c[1] + c[2]; }
  Int dot(const std::array<Int, 3>& n) const { return c[0] * n[0] + c[1] * n[1] + c[2] * n[2]; }

  friend bool operator==(const Coords&, const Coords&) = default;
  std::string to_string() const {
    return "(" + c[0].to_string() + "," + c[1].to_string() + "," + c[2].to_string() + ")";
  }
};

struct FactorizationTag {};
struct KernelTag {};

// Nonnegative atom multiplicities (z1, z2, z3).
using Factorization = Coords<FactorizationTag>;

// Element of M_S = { v in Z^3 : v . n = 0 }.
struct KernelVector : Coords<KernelTag> {
  using Coords<KernelTag>::Coords;
  KernelVector() = default;
  KernelVector(const Coords<KernelTag>& c) : Coords<KernelTag>(c) {}  // NOLINT

  friend KernelVector operator+(const KernelVector& a, const KernelVector& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  }
  friend KernelVector operator-(const KernelVector& a, const KernelVector& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  }
  friend KernelVector operator*(Int k, const KernelVector& a) { return {k * a[0], k * a[1], k * a[2]}; }
  KernelVector operator-() const { return {-c[0], -c[1], -c[2]}; }

  Factorization positive_part() const;
  Factorization negative_part() const;
};

KernelVector difference(const Factorization& z, const Factorization& zp);
// z + v when every coordinate stays nonnegative.
std::optional<Factorization> shifted(const Factorization& z, const KernelVector& v);

// Sorted set of positive distances.
class DeltaSet {
 public:
  DeltaSet() = default;
  DeltaSet(std::initializer_list<Int> values);
  explicit DeltaSet(std::vector<Int> values);

  const std::vector<Int>& values() const& { return values_; }
  std::vector<Int> values() && { return std::move(values_); }
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  bool contains(Int d) const;
  Int min() const;
  Int max() const;
  // Every member is a multiple of the minimum.
  bool multiples_of_min() const;
  bool is_subset_of(const DeltaSet& other) const;
  DeltaSet minus(const DeltaSet& other) const;

  friend bool operator==(const DeltaSet&, const DeltaSet&) = default;
  std::string to_string() const;

 private:
  std::vector<Int> values_;
};

// Minimal generating triple, sorted ascending. Copies share one lazily built
// membership table; it is computed at most once (std::call_once).
class Generators {
 public:
  // Validates gcd = 1, three distinct atoms and minimality.
  static Generators validate(Int a, Int b, Int c);

  const std::array<Int, 3>& atoms() const { return sorted_; }
  const std::array<Int, 3>& input_order() const { return input_; }
  Int operator[](std::size_t i) const { return sorted_[i]; }

  const detail::MembershipTable& membership() const;

 private:
  Generators(std::array<Int, 3> input, std::array<Int, 3> sorted);

  std::array<Int, 3> input_;
  std::array<Int, 3> sorted_;
  std::shared_ptr<detail::MembershipTable> table_;
};

// s in <n_a, n_b> by a loop over the multiplicity of the larger atom.
bool in_two_generated(Int s, Int na, Int nb);

bool contains(const Generators& S, Int s);
Int frobenius_number(const Generators& S);
Int gap_count(const Generators& S);
// x notin S implies F(S) - x in S, checked over every gap.
bool is_symmetric(const Generators& S);

// Work needed to enumerate Z(s) (outer-loop candidates).
Int enumeration_cost(const Generators& S, Int s);

// Complete Z(s), ascending in (z3, z2). Empty iff s is a gap.
std::vector<Factorization> factorizations(const Generators& S, Int s);

// Sorted, deduplicated L(s). Throws ElementNotInSemigroup for gaps.
std::vector<Int> length_set(const Generators& S, Int s);
DeltaSet delta_of_element(const Generators& S, Int s);
DeltaSet consecutive_differences(std::span<const Int> sorted_lengths);

}  // namespace deltasg
