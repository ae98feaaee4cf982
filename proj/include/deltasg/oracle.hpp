#pragma once

// Brute-force Delta(S) truncated at a bound, and the comparison against the
// fast path.

#include <cstdint>
#include <optional>

#include "deltasg/semigroup.hpp"

namespace deltasg {

inline constexpr std::int64_t kDefaultTupleBudget = 100'000'000;
inline constexpr const char* kTupleBudgetEnv = "DELTA_SG_TUPLE_BUDGET";

// kDefaultTupleBudget unless DELTA_SG_TUPLE_BUDGET holds a positive integer.
std::int64_t tuple_budget();

inline constexpr std::int64_t kWitnessBoundCap = 1'000'000;

// 4 * max(Betti(S)) + n3.
Int heuristic_bound(const Generators& S);

// The heuristic bound, raised to the largest witness element of Delta(S)
// for symmetric S when that stays within kWitnessBoundCap.
Int default_bound(const Generators& S);

// Union of Delta(s) over s in S, s <= bound. Length sets are built by
// L(s) = U_i (L(s - n_i) + 1); the work (length entries produced) is charged
// against the budget and BudgetExceeded is thrown before any partial answer.
DeltaSet delta_set_bruteforce(const Generators& S, Int bound, std::optional<std::int64_t> budget = std::nullopt);

enum class Verdict { ExactMatch, FastContainsObserved, Mismatch };
const char* verdict_name(Verdict v);

struct OracleReport {
  Int bound;
  DeltaSet observed_delta;
  DeltaSet fast_delta;
  DeltaSet missing;  // fast \ observed
  DeltaSet extra;    // observed \ fast
  Verdict verdict = Verdict::Mismatch;
  bool experimental = false;  // fast side came from the non-symmetric seeding
};

Verdict compare(const DeltaSet& observed, const DeltaSet& fast);

OracleReport verify(const Generators& S, std::optional<Int> bound = std::nullopt,
                    std::optional<std::int64_t> budget = std::nullopt);

}  // namespace deltasg
