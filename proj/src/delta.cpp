#include "deltasg/delta.hpp"

#include <algorithm>
#include <set>

namespace deltasg {

namespace {

KernelVector cross(const KernelVector& a, const KernelVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InternalInvariant, what);
}

}  // namespace

KernelVector BasisPair::to_structural(const KernelVector& v) const {
  return {v[static_cast<std::size_t>(perm[0])], v[static_cast<std::size_t>(perm[1])],
          v[static_cast<std::size_t>(perm[2])]};
}

KernelVector BasisPair::from_structural(const KernelVector& v) const {
  KernelVector out;
  for (std::size_t t = 0; t < 3; ++t) out[static_cast<std::size_t>(perm[t])] = v[t];
  return out;
}

KernelVector BasisPair::combine(Int a1, Int a2) const { return a1 * v1 + (Int{sigma} * a2) * v2; }

KernelVector BasisPair::zero_length_vector() const { return combine(delta2 / g, -(delta1 / g)); }

BasisPair basis_and_deltas(const Generators& S, const StructuralForm& form) {
  BasisPair B;
  B.perm = structural_permutation(form);
  B.atoms = S.atoms();
  KernelVector v1, v2;  // structural coordinates
  if (const auto* one = std::get_if<OneBetti>(&form)) {
    v1 = {one->s1, -one->s2, Int{0}};
    v2 = {Int{0}, one->s2, -one->s3};
  } else if (const auto* two = std::get_if<TwoBetti>(&form)) {
    const auto& [a, m1, m2, b, c, perm] = *two;
    (void)perm;
    v1 = {m2, -m1, Int{0}};
    std::optional<Int> best;
    Int best_len;
    for (Int lambda = -(b / m2); lambda <= c / m1; ++lambda) {
      const Int len = b + c + lambda * (m2 - m1) - a;
      // Ties on |l(v2)| go to the positive length.
      if (!best || abs(len) < abs(best_len) || (abs(len) == abs(best_len) && len.sign() > 0)) {
        best = lambda;
        best_len = len;
      }
    }
    v2 = {b + *best * m2, c - *best * m1, -a};
  } else {
    throw Error(Errc::NonSymmetric, "the semigroup has three Betti elements");
  }
  const Int len2 = v2.length();
  B.delta1 = v1.length();
  B.delta2 = abs(len2);
  B.sigma = len2.sign() < 0 ? -1 : 1;
  B.g = gcd(B.delta1, B.delta2);

  std::array<Int, 3> ns{B.atoms[static_cast<std::size_t>(B.perm[0])], B.atoms[static_cast<std::size_t>(B.perm[1])],
                        B.atoms[static_cast<std::size_t>(B.perm[2])]};
  require(v1.dot(ns).is_zero() && v2.dot(ns).is_zero(), "basis vectors leave the kernel");
  // {v1, v2} is a lattice basis of M_S iff v1 x v2 = +-n.
  const KernelVector n{ns[0], ns[1], ns[2]};
  const KernelVector x = cross(v1, v2);
  require(x == n || x == -n, "basis vectors do not span the kernel lattice");
  require(v1[0].sign() > 0 && v1[1].sign() < 0 && v1[2].is_zero(), "v1 is not (+,-,0)");
  require(v2[0].sign() >= 0 && v2[1].sign() >= 0 && v2[2].sign() < 0, "v2 is not (+,+,-)");

  B.v1 = B.from_structural(v1);
  B.v2 = B.from_structural(v2);

  const KernelVector t = B.to_structural(B.combine(B.delta2, -B.delta1));
  if (!B.delta2.is_zero()) {
    if (B.sigma > 0) {
      require(t[1].sign() < 0 && t[2].sign() > 0, "delta2*v1 - delta1*v2 is not (?,-,+)");
    } else {
      require(t[0].sign() > 0 && t[2].sign() < 0, "delta2*v1 + delta1*v2 is not (+,?,-)");
    }
  }
  return B;
}

SymmetricData analyze_symmetric(const Generators& S) {
  auto betti = betti_elements(S);
  auto form = classify(S, betti);
  if (!is_symmetric_form(form)) throw Error(Errc::NonSymmetric, "the semigroup has three Betti elements");
  auto basis = basis_and_deltas(S, form);
  auto euclid = euclid_set(basis.delta1, basis.delta2);
  return {std::move(betti), form, basis, std::move(euclid)};
}

DeltaSet delta_set_fast(const Generators& S) {
  const auto data = analyze_symmetric(S);
  std::vector<Int> values(data.euclid.values.begin() + 1, data.euclid.values.end());
  return DeltaSet(std::move(values));
}

DeltaSet delta_set_nonsymmetric(const Generators& S) {
  const auto betti = betti_elements(S);
  const auto form = classify(S, betti);
  if (is_symmetric_form(form)) throw Error(Errc::NotNonSymmetric, "the semigroup is symmetric");
  std::set<Int> seeds;
  for (Int b : betti.elements) {
    const auto deltas = delta_of_element(S, b);
    seeds.insert(deltas.values().begin(), deltas.values().end());
  }
  if (seeds.size() > 2) {
    throw Error(Errc::MoreThanTwoDistinctValues, "Betti elements realize more than two distinct distances");
  }
  if (seeds.empty()) throw Error(Errc::InternalInvariant, "no Betti element has two distinct lengths");
  const Int d1 = *seeds.rbegin();
  const Int d2 = *seeds.begin();
  const auto e = euclid_set(d1, d2);
  return DeltaSet(std::vector<Int>(e.values.begin() + 1, e.values.end()));
}

Normalized normalize_kernel_vector(const KernelVector& v, const BasisPair& B) {
  if (!v.dot(B.atoms).is_zero()) throw Error(Errc::NotInLattice, v.to_string() + " is not in the kernel");
  const Int len = v.length();
  if (len.is_zero()) {
    throw Error(Errc::ZeroLength, v.to_string() + " has length 0 and is a multiple of " +
                                      B.zero_length_vector().to_string());
  }
  if (len.sign() < 0 || len > B.max_delta()) {
    throw Error(Errc::OutOfRange, "length " + len.to_string() + " is outside (0, max delta]");
  }
  // v = l1*v1 + l2*(sigma*v2), solved in structural coordinates where
  // v1 = (p, -q, 0) and sigma*v2 has a nonzero third coordinate.
  const KernelVector vs = B.to_structural(v);
  const KernelVector s1 = B.to_structural(B.v1);
  const KernelVector s2 = B.to_structural(Int{B.sigma} * B.v2);
  if (!(vs[2] % s2[2]).is_zero()) throw Error(Errc::NotInLattice, v.to_string() + " is not spanned by v1, v2");
  const Int l2 = vs[2] / s2[2];
  const Int r = vs[0] - l2 * s2[0];
  if (!(r % s1[0]).is_zero()) throw Error(Errc::NotInLattice, v.to_string() + " is not spanned by v1, v2");
  const Int l1 = r / s1[0];
  if (vs[1] != l1 * s1[1] + l2 * s2[1]) {
    throw Error(Errc::NotInLattice, v.to_string() + " is not spanned by v1, v2");
  }

  const Int q = B.delta2 / B.g;
  const Int p = B.delta1 / B.g;
  if (q.is_zero()) {
    // delta2 = 0: a single box, a1 in (-0, 0] forces the v2 direction only.
    throw Error(Errc::OutOfRange, "normalization needs delta2 > 0");
  }
  std::optional<Normalized> exact, neutral;
  const Int alpha0 = floor_div(l1 - 1, q);
  for (Int alpha : {alpha0, alpha0 + 1}) {
    const Int a1 = l1 - alpha * q;
    const Int a2 = l2 + alpha * p;
    const bool boxed = (a1 * a2).sign() <= 0 && a1 > -q && a1 <= q && a2 > -p && a2 <= p &&
                       !(a1.is_zero() && a2.is_zero());
    if (!boxed) continue;
    const int u3 = B.to_structural(B.combine(a1, a2))[2].sign();
    if (u3 == vs[2].sign()) {
      exact = Normalized{a1, a2, alpha};
    } else if (u3 == 0) {
      neutral = Normalized{a1, a2, alpha};
    }
  }
  if (exact) return *exact;
  if (neutral) return *neutral;
  throw Error(Errc::InternalInvariant, "no normalization of " + v.to_string());
}

WeightedVector weighted_vector(const BasisPair& B, const std::array<Int, 2>& a) {
  return {B.combine(a[0], a[1]), a[0], a[1]};
}

bool weighted_signs_hold(const WeightedVector& w, const BasisPair& B, BasementVariant variant) {
  // Expected signs; 0 marks an undetermined coordinate.
  std::array<int, 3> expected = B.sigma > 0 ? std::array<int, 3>{0, -1, 1} : std::array<int, 3>{1, 0, -1};
  if (variant == BasementVariant::Neg) {
    for (int& e : expected) e = -e;
  }
  const KernelVector s = B.to_structural(w.coords);
  for (std::size_t k = 0; k < 3; ++k) {
    if (expected[k] != 0 && s[k].sign() == -expected[k]) return false;
  }
  return w.a2.is_zero() || !s[2].is_zero();
}

Factorization intermediate_factorization(const SymmetricData& data, const Factorization& z,
                                         const Factorization& zp) {
  const auto& B = data.basis;
  const auto& E = data.euclid;
  for (std::size_t i = 0; i < 3; ++i) {
    if (z[i].sign() < 0 || zp[i].sign() < 0) {
      throw Error(Errc::PreconditionViolated, "factorizations must be nonnegative");
    }
  }
  const Int s = z.dot(B.atoms);
  if (zp.dot(B.atoms) != s) throw Error(Errc::PreconditionViolated, "z and z' factor different elements");
  const Int x = z.length() - zp.length();
  if (x.sign() <= 0 || x > B.max_delta()) {
    throw Error(Errc::PreconditionViolated, "length gap " + x.to_string() + " is outside (0, max delta]");
  }
  if (E.contains(x)) throw Error(Errc::GapInEuclid, "length gap " + x.to_string() + " lies in Euclid's set");

  // Strip the common support; it is added back at the end.
  Factorization common, zs, zps;
  for (std::size_t i = 0; i < 3; ++i) {
    common[i] = std::min(z[i], zp[i]);
    zs[i] = z[i] - common[i];
    zps[i] = zp[i] - common[i];
  }
  const auto norm = normalize_kernel_vector(difference(zs, zps), B);
  const auto variant = norm.a1.sign() > 0 ? BasementVariant::Pos : BasementVariant::Neg;
  const Int d = basement(x, E, variant);
  const auto dec = decompose(d, B.delta1, B.delta2);
  const auto w = weighted_vector(B, variant == BasementVariant::Pos ? dec.pos : dec.neg);
  require(weighted_signs_hold(w, B, variant), "weighted vector breaks the sign table");

  // The coordinate the sign table leaves open decides which side to move.
  const int open = B.perm[B.sigma > 0 ? 0 : 1];
  auto from_longer = shifted(zs, -w.coords);
  auto from_shorter = shifted(zps, w.coords);
  auto pick = w.coords[static_cast<std::size_t>(open)].sign() < 0 ? from_longer : from_shorter;
  if (!pick) pick = from_longer ? from_longer : from_shorter;
  require(pick.has_value(), "no nonnegative intermediate factorization for gap " + x.to_string());

  Factorization out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = (*pick)[i] + common[i];
  require(out.dot(B.atoms) == s && zp.length() < out.length() && out.length() < z.length(),
          "intermediate factorization is not strictly between");
  return out;
}

Factorization intermediate_factorization(const Generators& S, const Factorization& z, const Factorization& zp) {
  return intermediate_factorization(analyze_symmetric(S), z, zp);
}

Witness witness(const SymmetricData& data, Int d) {
  const auto& B = data.basis;
  const auto& E = data.euclid;
  if (d.sign() <= 0 || !E.contains(d)) {
    throw Error(Errc::PreconditionViolated, d.to_string() + " is not a nonzero member of Euclid's set");
  }
  std::optional<KernelVector> v;
  if (!B.delta2.is_zero()) {
    // The decomposition native to d's Euclid level: primed on even levels,
    // read in (eta_1, eta_2) order and transposed when delta1 < delta2.
    const std::size_t level = *E.level_of(d);
    const auto dec = decompose(d, E.eta[0], E.eta[1]);
    auto x = level % 2 == 0 ? dec.pos : dec.neg;
    if (B.delta1 < B.delta2) std::swap(x[0], x[1]);
    if ((x[0] * x[1]).sign() < 0) v = B.combine(x[0], x[1]);
  }
  bool fallback = false;
  if (!v) {
    // Only eta_1 and eta_2 land here; both are realized at a Betti element.
    fallback = true;
    if (d == B.delta1) {
      v = B.v1;
    } else if (d == B.delta2) {
      v = Int{B.sigma} * B.v2;
    } else {
      throw Error(Errc::NoMixedSignDecomposition, "no witness construction for " + d.to_string());
    }
  }
  Witness w;
  w.distance = d;
  w.vector = *v;
  w.longer = v->positive_part();
  w.shorter = v->negative_part();
  w.element = w.longer.dot(B.atoms);
  w.betti_fallback = fallback;
  require(w.shorter.dot(B.atoms) == w.element && w.longer.length() - w.shorter.length() == d,
          "witness factorizations disagree");
  return w;
}

Witness witness(const Generators& S, Int d) { return witness(analyze_symmetric(S), d); }

std::optional<bool> check_witness(const Generators& S, const Witness& w, std::int64_t budget) {
  if (enumeration_cost(S, w.element) > budget) return std::nullopt;
  const auto zs = factorizations(S, w.element);
  const Int lo = w.shorter.length();
  const Int hi = w.longer.length();
  bool has_lo = false, has_hi = false;
  for (const auto& z : zs) {
    const Int l = z.length();
    if (lo < l && l < hi) return false;
    has_lo = has_lo || z == w.shorter;
    has_hi = has_hi || z == w.longer;
  }
  return has_lo && has_hi;
}

}  // namespace deltasg
