#include "deltasg/betti.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

namespace deltasg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Betti set induced by the two-Betti parameters.
std::vector<Int> two_betti_elements(const TwoBetti& t) {
  std::vector<Int> v{t.a * (t.b * t.m1 + t.c * t.m2), t.a * t.m1 * t.m2};
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::optional<TwoBetti> two_betti_for_pair(const std::array<Int, 3>& n, int i, int j, const BettiData& betti) {
  const int k = 3 - i - j;
  const Int a = gcd(n[i], n[j]);
  if (a < 2) return std::nullopt;
  const int lo = n[i] < n[j] ? i : j;
  const int hi = lo == i ? j : i;
  const Int m1 = n[lo] / a;
  const Int m2 = n[hi] / a;
  if (gcd(m1, m2) != 1) return std::nullopt;
  // b*m1 = n_k (mod m2) with 0 <= b < m2 gives the largest c.
  const Int b = floor_mod(n[k] % m2 * mod_inverse(m1, m2), m2);
  const Int rest = n[k] - b * m1;
  if (rest.sign() < 0) return std::nullopt;
  const Int c = rest / m2;
  if (b + c < 2) return std::nullopt;
  // n_lo and n_hi share the Betti element a*m1*m2; n_k reaches a*n_k alone.
  if (betti.c[lo] != m2 || betti.c[hi] != m1 || betti.c[k] != a) return std::nullopt;
  TwoBetti t{a, m1, m2, b, c, {lo, hi, k}};
  if (two_betti_elements(t) != betti.elements) return std::nullopt;
  return t;
}

}  // namespace

bool nabla_graph_connected(const Generators& S, Int s) {
  auto zs = factorizations(S, s);
  if (zs.empty()) throw Error(Errc::ElementNotInSemigroup, s.to_string() + " is not in the semigroup");
  DisjointSets sets(zs.size());
  for (std::size_t coord = 0; coord < 3; ++coord) {
    std::optional<std::size_t> first;
    for (std::size_t v = 0; v < zs.size(); ++v) {
      if (zs[v][coord].sign() == 0) continue;
      if (first) {
        sets.unite(*first, v);
      } else {
        first = v;
      }
    }
  }
  const std::size_t root = sets.find(0);
  for (std::size_t v = 1; v < zs.size(); ++v) {
    if (sets.find(v) != root) return false;
  }
  return true;
}

BettiData betti_elements(const Generators& S) {
  const auto& n = S.atoms();
  BettiData data;
  for (std::size_t i = 0; i < 3; ++i) {
    const Int nj = n[(i + 1) % 3];
    const Int nk = n[(i + 2) % 3];
    Int c = 1;
    while (!in_two_generated(c * n[i], nj, nk)) ++c;
    data.c[i] = c;
    data.elements.push_back(c * n[i]);
  }
  std::sort(data.elements.begin(), data.elements.end());
  data.elements.erase(std::unique(data.elements.begin(), data.elements.end()), data.elements.end());
  for (Int b : data.elements) {
    if (nabla_graph_connected(S, b)) {
      throw Error(Errc::InternalInvariant, "claimed Betti element " + b.to_string() + " has a connected graph");
    }
  }
  return data;
}

StructuralForm classify(const Generators& S, const BettiData& betti) {
  const auto& n = S.atoms();
  switch (betti.elements.size()) {
    case 1: {
      OneBetti f{gcd(n[1], n[2]), gcd(n[0], n[2]), gcd(n[0], n[1])};
      const bool ok = f.s1 > f.s2 && f.s2 > f.s3 && n[0] == f.s2 * f.s3 && n[1] == f.s1 * f.s3 &&
                      n[2] == f.s1 * f.s2 && betti.elements.front() == f.s1 * f.s2 * f.s3;
      if (!ok) throw Error(Errc::StructureMismatch, "single Betti element but no (s2s3, s1s3, s1s2) form");
      return f;
    }
    case 2: {
      std::optional<TwoBetti> best;
      for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        auto t = two_betti_for_pair(n, i, j, betti);
        if (t && (!best || std::tie(t->a, t->m1) < std::tie(best->a, best->m1))) best = t;
      }
      if (!best) throw Error(Errc::StructureMismatch, "two Betti elements but no (am1, am2, bm1+cm2) form");
      return *best;
    }
    case 3:
      return ThreeBetti{};
    default:
      throw Error(Errc::StructureMismatch, "unexpected number of Betti elements");
  }
}

bool is_symmetric_form(const StructuralForm& form) { return !std::holds_alternative<ThreeBetti>(form); }

std::array<int, 3> structural_permutation(const StructuralForm& form) {
  if (const auto* t = std::get_if<TwoBetti>(&form)) return t->perm;
  return {0, 1, 2};
}

}  // namespace deltasg
