#pragma once

// Euclid's set of a pair of distances: every value met by the subtractive
// gcd algorithm, grouped by the levels of the division-based one.
//
//   eta_1 = max(d1, d2), eta_2 = min(d1, d2), eta_{j+2} = eta_j mod eta_{j+1}
//   D(eta_1, eta_2) = { eta_1 - k eta_2 : k = 0 .. floor(eta_1 / eta_2) }
//   D(eta_2, eta_3) = { eta_2 - k eta_3 : k = 0 .. floor(eta_2 / eta_3) }
//   D(eta_j, eta_{j+1}) = { eta_j - k eta_{j+1} : k = 1 .. floor(eta_j / eta_{j+1}) },  j >= 3
//
// Decompositions write a multiple x of g = gcd(d1, d2) as x1*d1 + x2*d2 in one
// of two canonical boxes; basements are Euclid-set values below x whose
// coordinates are dominated by those of x.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "deltasg/int.hpp"

namespace deltasg {

struct EuclidLevel {
  Int upper;                // eta_j
  Int lower;                // eta_{j+1}
  std::vector<Int> values;  // descending, ends at eta_j mod eta_{j+1}
};

struct EuclidSet {
  Int delta1;
  Int delta2;
  Int g;
  std::vector<Int> eta;  // eta_1 > eta_2 > ... > 0
  std::vector<EuclidLevel> levels;
  std::vector<Int> values;  // union, ascending, includes 0

  bool contains(Int x) const;
  // Index (0-based) of the first level holding x.
  std::optional<std::size_t> level_of(Int x) const;
  Int max() const { return eta.front(); }
};

EuclidSet euclid_set(Int delta1, Int delta2);

// x = pos[0]*d1 + pos[1]*d2 with 0 < pos[0] <= d2/g, -d1/g < pos[1] <= 0,
// x = neg[0]*d1 + neg[1]*d2 with -d2/g < neg[0] <= 0, 0 < neg[1] <= d1/g.
struct Decomposition {
  Int x;
  std::array<Int, 2> pos;
  std::array<Int, 2> neg;
};

Decomposition decompose(Int x, Int delta1, Int delta2);

enum class BasementVariant { Pos, Neg };

// The constructive choice: x lies strictly between eta_{j+1} and eta_j; at
// level (eta_j, eta_{j+1}) the positive-side basement is the largest value of
// D(eta_j, eta_{j+1}) below x and the negative-side one is eta_{j+1}. Each
// descent by one level swaps the two roles, as does d1 < d2.
struct BasementChoice {
  std::size_t level;  // j, 0-based index into EuclidSet::levels
  Int level_pos;      // d at level j
  Int level_neg;      // d' at level j
  Int pos;            // basement for the decomposition at (d1, d2)
  Int neg;            // basement for the primed decomposition at (d1, d2)
};

BasementChoice basement_choice(Int x, const EuclidSet& euclid);
Int basement(Int x, const EuclidSet& euclid, BasementVariant variant);

// Coordinatewise dominance used by the basement postcondition: same signs
// (zero allowed), |d_k| <= |x_k|, strict on the second coordinate unless it is
// zero for both, and d != x.
bool dominated(const std::array<Int, 2>& d, const std::array<Int, 2>& x);

}  // namespace deltasg
