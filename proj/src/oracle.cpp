#include "deltasg/oracle.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <iterator>

#include "deltasg/betti.hpp"
#include "deltasg/delta.hpp"

namespace deltasg {

std::int64_t tuple_budget() {
  const char* env = std::getenv(kTupleBudgetEnv);
  if (env == nullptr || *env == '\0') return kDefaultTupleBudget;
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (errno != 0 || *end != '\0' || v <= 0) {
    throw Error(Errc::InvalidArgument, std::string(kTupleBudgetEnv) + " must be a positive integer");
  }
  return v;
}

Int heuristic_bound(const Generators& S) { return 4 * betti_elements(S).elements.back() + S[2]; }

Int default_bound(const Generators& S) {
  const Int heuristic = heuristic_bound(S);
  if (!is_symmetric_form(classify(S, betti_elements(S)))) return heuristic;
  const auto data = analyze_symmetric(S);
  Int reach = heuristic;
  for (std::size_t k = 1; k < data.euclid.values.size(); ++k) {
    reach = std::max(reach, witness(data, data.euclid.values[k]).element);
  }
  return reach <= kWitnessBoundCap ? reach : heuristic;
}

DeltaSet delta_set_bruteforce(const Generators& S, Int bound, std::optional<std::int64_t> budget) {
  if (bound.sign() < 0) throw Error(Errc::InvalidArgument, "bound must be nonnegative");
  const std::int64_t limit = budget ? *budget : tuple_budget();
  if (!bound.fits_int64() || bound.to_int64() >= limit) {
    throw Error(Errc::BudgetExceeded, "bound " + bound.to_string() + " exceeds the tuple budget");
  }
  const std::int64_t top = bound.to_int64();
  std::array<std::int64_t, 3> n{};
  for (std::size_t i = 0; i < 3; ++i) n[i] = S[i].to_int64();

  // L(s) for s in (top - n3, top], indexed by s mod (n3 + 1).
  const auto window = static_cast<std::size_t>(n[2] + 1);
  std::vector<std::vector<std::int64_t>> ring(std::min<std::size_t>(window, static_cast<std::size_t>(top) + 1));
  const std::size_t width = ring.size();
  std::vector<char> seen;
  std::vector<std::int64_t> merged;
  std::int64_t work = 0;

  for (std::int64_t s = 0; s <= top; ++s) {
    merged.clear();
    if (s == 0) {
      merged.push_back(0);
    } else {
      for (std::size_t i = 0; i < 3; ++i) {
        if (s < n[i]) break;
        const auto& prev = ring[static_cast<std::size_t>(s - n[i]) % width];
        const std::size_t mid = merged.size();
        for (std::int64_t l : prev) merged.push_back(l + 1);
        std::inplace_merge(merged.begin(), merged.begin() + static_cast<std::ptrdiff_t>(mid), merged.end());
      }
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    }
    work += 1 + static_cast<std::int64_t>(merged.size());
    if (work > limit) {
      throw Error(Errc::BudgetExceeded, "enumeration up to " + bound.to_string() + " exceeds the budget of " +
                                            std::to_string(limit));
    }
    for (std::size_t k = 1; k < merged.size(); ++k) {
      const auto d = static_cast<std::size_t>(merged[k] - merged[k - 1]);
      if (d >= seen.size()) seen.resize(d + 1, 0);
      seen[d] = 1;
    }
    auto& slot = ring[static_cast<std::size_t>(s) % width];
    slot.assign(merged.begin(), merged.end());
  }

  std::vector<Int> values;
  for (std::size_t d = 1; d < seen.size(); ++d) {
    if (seen[d]) values.emplace_back(d);
  }
  return DeltaSet(std::move(values));
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ExactMatch:
      return "ExactMatch";
    case Verdict::FastContainsObserved:
      return "FastContainsObserved";
    case Verdict::Mismatch:
      return "Mismatch";
  }
  return "?";
}

Verdict compare(const DeltaSet& observed, const DeltaSet& fast) {
  if (!observed.is_subset_of(fast)) return Verdict::Mismatch;
  return observed == fast ? Verdict::ExactMatch : Verdict::FastContainsObserved;
}

OracleReport verify(const Generators& S, std::optional<Int> bound, std::optional<std::int64_t> budget) {
  OracleReport r;
  r.bound = bound ? *bound : default_bound(S);
  const auto form = classify(S, betti_elements(S));
  r.experimental = !is_symmetric_form(form);
  r.fast_delta = r.experimental ? delta_set_nonsymmetric(S) : delta_set_fast(S);
  r.observed_delta = delta_set_bruteforce(S, r.bound, budget);
  r.missing = r.fast_delta.minus(r.observed_delta);
  r.extra = r.observed_delta.minus(r.fast_delta);
  r.verdict = compare(r.observed_delta, r.fast_delta);
  return r;
}

}  // namespace deltasg
