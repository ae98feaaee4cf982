#include "deltasg/euclid.hpp"

#include <algorithm>

namespace deltasg {

bool EuclidSet::contains(Int x) const { return std::binary_search(values.begin(), values.end(), x); }

std::optional<std::size_t> EuclidSet::level_of(Int x) const {
  for (std::size_t j = 0; j < levels.size(); ++j) {
    const auto& v = levels[j].values;
    if (std::find(v.begin(), v.end(), x) != v.end()) return j;
  }
  return std::nullopt;
}

EuclidSet euclid_set(Int delta1, Int delta2) {
  if (delta1.sign() <= 0 || delta2.sign() < 0) {
    throw Error(Errc::InvalidArgument, "euclid_set needs delta1 > 0 and delta2 >= 0");
  }
  EuclidSet e;
  e.delta1 = delta1;
  e.delta2 = delta2;
  e.g = gcd(delta1, delta2);
  if (delta2.is_zero()) {
    e.eta = {delta1, Int{0}};
    e.levels.push_back({delta1, Int{0}, {delta1, Int{0}}});
    e.values = {Int{0}, delta1};
    return e;
  }
  e.eta = {std::max(delta1, delta2), std::min(delta1, delta2)};
  while (!e.eta.back().is_zero()) {
    const std::size_t n = e.eta.size();
    e.eta.push_back(e.eta[n - 2] % e.eta[n - 1]);
  }
  for (std::size_t j = 0; j + 1 < e.eta.size() && e.eta[j + 1].sign() > 0; ++j) {
    EuclidLevel level{e.eta[j], e.eta[j + 1], {}};
    const Int q = e.eta[j] / e.eta[j + 1];
    for (Int k = j < 2 ? 0 : 1; k <= q; ++k) level.values.push_back(e.eta[j] - k * e.eta[j + 1]);
    e.values.insert(e.values.end(), level.values.begin(), level.values.end());
    e.levels.push_back(std::move(level));
  }
  std::sort(e.values.begin(), e.values.end());
  e.values.erase(std::unique(e.values.begin(), e.values.end()), e.values.end());
  return e;
}

Decomposition decompose(Int x, Int delta1, Int delta2) {
  if (delta1.sign() <= 0 || delta2.sign() <= 0) {
    throw Error(Errc::OutOfRange, "decompose needs positive delta1 and delta2");
  }
  const Int g = gcd(delta1, delta2);
  if (!(x % g).is_zero()) {
    throw Error(Errc::NotMultipleOfGcd, x.to_string() + " is not a multiple of " + g.to_string());
  }
  if (x.sign() <= 0 || x > std::max(delta1, delta2)) {
    throw Error(Errc::OutOfRange, x.to_string() + " is outside (0, max(delta1, delta2)]");
  }
  const Int p = delta1 / g;  // box height for the second coordinate
  const Int q = delta2 / g;  // box width for the first coordinate
  Int x1 = floor_mod(x / g % q * mod_inverse(p, q), q);
  if (x1.is_zero()) x1 = q;
  const Int x2 = (x - x1 * delta1) / delta2;
  if (!(x2 > -p && x2.sign() <= 0) || x1 * delta1 + x2 * delta2 != x) {
    throw Error(Errc::InternalInvariant, "decomposition of " + x.to_string() + " left its box");
  }
  return {x, {x1, x2}, {x1 - q, x2 + p}};
}

bool dominated(const std::array<Int, 2>& d, const std::array<Int, 2>& x) {
  for (std::size_t k = 0; k < 2; ++k) {
    if (d[k].sign() * x[k].sign() < 0 || abs(d[k]) > abs(x[k])) return false;
  }
  if (!x[1].is_zero() && abs(d[1]) == abs(x[1])) return false;
  return d != x;
}

BasementChoice basement_choice(Int x, const EuclidSet& e) {
  if (e.delta2.is_zero()) throw Error(Errc::OutOfRange, "no basements when delta2 = 0");
  if (!(x % e.g).is_zero()) {
    throw Error(Errc::NotMultipleOfGcd, x.to_string() + " is not a multiple of " + e.g.to_string());
  }
  if (x.sign() <= 0 || x >= e.max()) {
    throw Error(Errc::OutOfRange, x.to_string() + " is outside (0, " + e.max().to_string() + ")");
  }
  if (e.contains(x)) throw Error(Errc::InEuclidSet, x.to_string() + " already lies in Euclid's set");

  std::size_t j = 0;
  while (!(e.eta[j + 1] < x && x < e.eta[j])) ++j;
  const auto& level = e.levels.at(j);

  BasementChoice b{};
  b.level = j;
  b.level_neg = level.lower;
  for (Int v : level.values) {
    if (v < x) {
      b.level_pos = v;
      break;
    }
  }
  // Levels alternate orientation; d1 < d2 flips it once more.
  bool swap = j % 2 == 1;
  if (e.delta1 < e.delta2) swap = !swap;
  b.pos = swap ? b.level_neg : b.level_pos;
  b.neg = swap ? b.level_pos : b.level_neg;

  const auto dx = decompose(x, e.delta1, e.delta2);
  const auto dp = decompose(b.pos, e.delta1, e.delta2);
  const auto dn = decompose(b.neg, e.delta1, e.delta2);
  if (!(b.pos < x && b.neg < x && dominated(dp.pos, dx.pos) && dominated(dn.neg, dx.neg))) {
    throw Error(Errc::InternalInvariant, "basement of " + x.to_string() + " is not dominated");
  }
  return b;
}

Int basement(Int x, const EuclidSet& euclid, BasementVariant variant) {
  const auto b = basement_choice(x, euclid);
  return variant == BasementVariant::Pos ? b.pos : b.neg;
}

}  // namespace deltasg
