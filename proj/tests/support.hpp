#pragma once

// Independent brute-force helpers for the test suites.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "deltasg/error.hpp"
#include "deltasg/semigroup.hpp"

namespace support {

template <class F>
deltasg::Errc code_of(F&& f) {
  try {
    f();
  } catch (const deltasg::Error& e) {
    return e.code();
  }
  return deltasg::Errc::InternalInvariant;
}

inline std::array<std::int64_t, 3> atoms64(const deltasg::Generators& S) {
  return {S[0].to_int64(), S[1].to_int64(), S[2].to_int64()};
}

// Every (z1, z2, z3) with z . n = s, by a plain triple loop.
inline std::vector<std::array<std::int64_t, 3>> naive_factorizations(const std::array<std::int64_t, 3>& n,
                                                                     std::int64_t s) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t z3 = 0; z3 * n[2] <= s; ++z3) {
    for (std::int64_t z2 = 0; z3 * n[2] + z2 * n[1] <= s; ++z2) {
      const std::int64_t rest = s - z3 * n[2] - z2 * n[1];
      if (rest % n[0] == 0) out.push_back({rest / n[0], z2, z3});
    }
  }
  return out;
}

inline std::set<std::int64_t> naive_lengths(const std::array<std::int64_t, 3>& n, std::int64_t s) {
  std::set<std::int64_t> l;
  for (const auto& z : naive_factorizations(n, s)) l.insert(z[0] + z[1] + z[2]);
  return l;
}

inline std::set<std::int64_t> naive_delta(const std::array<std::int64_t, 3>& n, std::int64_t s) {
  const auto l = naive_lengths(n, s);
  std::set<std::int64_t> d;
  for (auto it = l.begin(); it != l.end() && std::next(it) != l.end(); ++it) d.insert(*std::next(it) - *it);
  return d;
}

// Union of naive_delta over s <= bound.
inline std::set<std::int64_t> naive_delta_set(const std::array<std::int64_t, 3>& n, std::int64_t bound) {
  std::set<std::int64_t> d;
  for (std::int64_t s = 0; s <= bound; ++s) {
    const auto ds = naive_delta(n, s);
    d.insert(ds.begin(), ds.end());
  }
  return d;
}

inline std::set<std::int64_t> to_set(const deltasg::DeltaSet& d) {
  std::set<std::int64_t> out;
  for (const auto& v : d.values()) out.insert(v.to_int64());
  return out;
}

}  // namespace support
