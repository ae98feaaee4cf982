#include "deltasg/semigroup.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace deltasg {

namespace detail {

// Membership bitmap over [0, F(S) + n1], built by the sieve
// member(s) = OR_i member(s - n_i), scanning upward until n1 consecutive
// members appear.
struct MembershipTable {
  std::once_flag once;
  std::vector<bool> member;
  Int frobenius{-1};
  Int gaps{0};
};

namespace {

constexpr std::int64_t kMaxTableBits = std::int64_t{1} << 30;

void build(MembershipTable& t, const std::array<Int, 3>& n) {
  const std::int64_t n1 = n[0].to_int64();
  const std::int64_t n2 = n[1].to_int64();
  const std::int64_t n3 = n[2].to_int64();
  std::vector<bool> member;
  member.reserve(static_cast<std::size_t>(std::min<std::int64_t>(kMaxTableBits, 1 << 20)));
  std::int64_t run = 0;
  std::int64_t last_gap = -1;
  std::int64_t gaps = 0;
  for (std::int64_t s = 0;; ++s) {
    if (s >= kMaxTableBits) {
      throw Error(Errc::BudgetExceeded, "membership table would exceed 2^30 entries");
    }
    bool m = s == 0 || (s >= n1 && member[static_cast<std::size_t>(s - n1)]) ||
             (s >= n2 && member[static_cast<std::size_t>(s - n2)]) ||
             (s >= n3 && member[static_cast<std::size_t>(s - n3)]);
    member.push_back(m);
    if (m) {
      if (++run == n1) break;
    } else {
      run = 0;
      last_gap = s;
      ++gaps;
    }
  }
  t.member = std::move(member);
  t.frobenius = last_gap;
  t.gaps = gaps;
}

}  // namespace
}  // namespace detail

Factorization KernelVector::positive_part() const {
  Factorization z;
  for (std::size_t i = 0; i < 3; ++i) z[i] = c[i].sign() > 0 ? c[i] : Int{0};
  return z;
}

Factorization KernelVector::negative_part() const {
  Factorization z;
  for (std::size_t i = 0; i < 3; ++i) z[i] = c[i].sign() < 0 ? -c[i] : Int{0};
  return z;
}

KernelVector difference(const Factorization& z, const Factorization& zp) {
  return {z[0] - zp[0], z[1] - zp[1], z[2] - zp[2]};
}

std::optional<Factorization> shifted(const Factorization& z, const KernelVector& v) {
  Factorization r;
  for (std::size_t i = 0; i < 3; ++i) {
    r[i] = z[i] + v[i];
    if (r[i].sign() < 0) return std::nullopt;
  }
  return r;
}

// ---------------------------------------------------------------------------

DeltaSet::DeltaSet(std::initializer_list<Int> values) : DeltaSet(std::vector<Int>(values)) {}

DeltaSet::DeltaSet(std::vector<Int> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (!values_.empty() && values_.front().sign() <= 0) {
    throw Error(Errc::InvalidArgument, "distances must be positive");
  }
}

bool DeltaSet::contains(Int d) const { return std::binary_search(values_.begin(), values_.end(), d); }

Int DeltaSet::min() const {
  if (values_.empty()) throw Error(Errc::InvalidArgument, "min of empty Delta set");
  return values_.front();
}

Int DeltaSet::max() const {
  if (values_.empty()) throw Error(Errc::InvalidArgument, "max of empty Delta set");
  return values_.back();
}

bool DeltaSet::multiples_of_min() const {
  if (values_.empty()) return true;
  return std::all_of(values_.begin(), values_.end(), [m = values_.front()](Int v) { return (v % m).is_zero(); });
}

bool DeltaSet::is_subset_of(const DeltaSet& other) const {
  return std::includes(other.values_.begin(), other.values_.end(), values_.begin(), values_.end());
}

DeltaSet DeltaSet::minus(const DeltaSet& other) const {
  std::vector<Int> out;
  std::set_difference(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                      std::back_inserter(out));
  return DeltaSet(std::move(out));
}

std::string DeltaSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------

bool in_two_generated(Int s, Int na, Int nb) {
  if (s.sign() < 0) return false;
  if (na < nb) std::swap(na, nb);
  for (Int k = 0; k * na <= s; ++k) {
    if (((s - k * na) % nb).is_zero()) return true;
  }
  return false;
}

Generators::Generators(std::array<Int, 3> input, std::array<Int, 3> sorted)
    : input_(input), sorted_(sorted), table_(std::make_shared<detail::MembershipTable>()) {}

Generators Generators::validate(Int a, Int b, Int c) {
  std::array<Int, 3> input{a, b, c};
  for (Int v : input) {
    if (v.sign() <= 0) throw Error(Errc::InvalidArgument, "generators must be positive integers");
  }
  std::array<Int, 3> n = input;
  std::sort(n.begin(), n.end());
  if (n[0] == n[1] || n[1] == n[2]) {
    throw Error(Errc::NotThreeAtoms, "generators must be three distinct integers");
  }
  if (gcd(gcd(n[0], n[1]), n[2]) != 1) {
    throw Error(Errc::GcdNotOne, "gcd(" + n[0].to_string() + "," + n[1].to_string() + "," +
                                     n[2].to_string() + ") != 1");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    Int nj = n[(i + 1) % 3];
    Int nk = n[(i + 2) % 3];
    if (in_two_generated(n[i], nj, nk)) {
      throw Error(Errc::NotMinimal, n[i].to_string() + " lies in <" + std::min(nj, nk).to_string() + "," +
                                        std::max(nj, nk).to_string() + ">");
    }
  }
  return Generators(input, n);
}

const detail::MembershipTable& Generators::membership() const {
  std::call_once(table_->once, [this] { detail::build(*table_, sorted_); });
  return *table_;
}

bool contains(const Generators& S, Int s) {
  if (s.sign() < 0) return false;
  const auto& t = S.membership();
  if (s > t.frobenius) return true;
  return t.member[static_cast<std::size_t>(s.to_int64())];
}

Int frobenius_number(const Generators& S) { return S.membership().frobenius; }

Int gap_count(const Generators& S) { return S.membership().gaps; }

bool is_symmetric(const Generators& S) {
  const Int f = frobenius_number(S);
  for (Int x = 1; x <= f; ++x) {
    if (!contains(S, x) && !contains(S, f - x)) return false;
  }
  return true;
}

Int enumeration_cost(const Generators& S, Int s) {
  if (s.sign() < 0) return Int{0};
  return s / S[2] + 1;
}

std::vector<Factorization> factorizations(const Generators& S, Int s) {
  std::vector<Factorization> out;
  if (s.sign() < 0) return out;
  const Int n1 = S[0], n2 = S[1], n3 = S[2];
  const Int g12 = gcd(n1, n2);
  const Int a = n1 / g12;
  const Int b = n2 / g12;
  const Int b_inv = mod_inverse(b, a);
  for (Int z3 = 0; z3 * n3 <= s; ++z3) {
    const Int r = s - z3 * n3;
    if (!(r % g12).is_zero()) continue;
    // z1*a + z2*b = r/g12 forces z2 = (r/g12) * b^{-1} (mod a).
    for (Int z2 = floor_mod((r / g12) % a * b_inv, a); z2 * n2 <= r; z2 += a) {
      out.push_back({(r - z2 * n2) / n1, z2, z3});
    }
  }
  return out;
}

std::vector<Int> length_set(const Generators& S, Int s) {
  auto zs = factorizations(S, s);
  if (zs.empty()) throw Error(Errc::ElementNotInSemigroup, s.to_string() + " is not in the semigroup");
  std::vector<Int> lengths;
  lengths.reserve(zs.size());
  for (const auto& z : zs) lengths.push_back(z.length());
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  return lengths;
}

DeltaSet consecutive_differences(std::span<const Int> sorted_lengths) {
  std::vector<Int> d;
  for (std::size_t i = 1; i < sorted_lengths.size(); ++i) d.push_back(sorted_lengths[i] - sorted_lengths[i - 1]);
  return DeltaSet(std::move(d));
}

DeltaSet delta_of_element(const Generators& S, Int s) {
  auto lengths = length_set(S, s);
  return consecutive_differences(lengths);
}

}  // namespace deltasg
