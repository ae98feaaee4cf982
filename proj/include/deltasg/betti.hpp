#pragma once

// Betti elements, the factorization graph and the symmetric structure forms.

#include <array>
#include <variant>
#include <vector>

#include "deltasg/semigroup.hpp"

namespace deltasg {

struct BettiData {
  // c[i] is the least positive integer with c[i]*n_i in <n_j, n_k>.
  std::array<Int, 3> c{};
  // Distinct values of c[i]*n_i, ascending.
  std::vector<Int> elements;
};

// (n1, n2, n3) = (s2*s3, s1*s3, s1*s2), s1 > s2 > s3 pairwise coprime.
struct OneBetti {
  Int s1, s2, s3;
};

// Structural triple (a*m1, a*m2, b*m1 + c*m2). perm[t] is the index, in the
// sorted generator triple, of structural coordinate t.
struct TwoBetti {
  Int a, m1, m2, b, c;
  std::array<int, 3> perm{0, 1, 2};
};

struct ThreeBetti {};

using StructuralForm = std::variant<OneBetti, TwoBetti, ThreeBetti>;

// Connectivity of the graph on Z(s) whose edges join factorizations sharing
// a nonzero coordinate.
bool nabla_graph_connected(const Generators& S, Int s);

BettiData betti_elements(const Generators& S);

StructuralForm classify(const Generators& S, const BettiData& betti);

bool is_symmetric_form(const StructuralForm& form);
std::array<int, 3> structural_permutation(const StructuralForm& form);

}  // namespace deltasg
