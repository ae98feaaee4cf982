#include "deltasg/int.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace deltasg {

namespace {
constexpr Int::rep kMax = static_cast<Int::rep>(~static_cast<unsigned __int128>(0) >> 1);
constexpr Int::rep kMin = -kMax - 1;
}  // namespace

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::NotThreeAtoms: return "NotThreeAtoms";
    case Errc::ElementNotInSemigroup: return "ElementNotInSemigroup";
    case Errc::Overflow: return "Overflow";
    case Errc::StructureMismatch: return "StructureMismatch";
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::NotNonSymmetric: return "NotNonSymmetric";
    case Errc::MoreThanTwoDistinctValues: return "MoreThanTwoDistinctValues";
    case Errc::NotMultipleOfGcd: return "NotMultipleOfGcd";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InEuclidSet: return "InEuclidSet";
    case Errc::ZeroLength: return "ZeroLength";
    case Errc::NotInLattice: return "NotInLattice";
    case Errc::GapInEuclid: return "GapInEuclid";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NoMixedSignDecomposition: return "NoMixedSignDecomposition";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Int Int::max() { return from_rep(kMax); }
Int Int::min() { return from_rep(kMin); }

void Int::overflow(const char* op) {
  throw Error(Errc::Overflow, std::string("128-bit ") + op + " overflow");
}

Int operator/(Int a, Int b) {
  if (b.v_ == 0) throw Error(Errc::InvalidArgument, "division by zero");
  if (a.v_ == kMin && b.v_ == -1) Int::overflow("division");
  return Int::from_rep(a.v_ / b.v_);
}

Int operator%(Int a, Int b) {
  if (b.v_ == 0) throw Error(Errc::InvalidArgument, "division by zero");
  if (b.v_ == -1) return Int{0};
  return Int::from_rep(a.v_ % b.v_);
}

bool Int::fits_int64() const {
  return v_ >= std::numeric_limits<std::int64_t>::min() &&
         v_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t Int::to_int64() const {
  if (!fits_int64()) overflow("narrowing to int64");
  return static_cast<std::int64_t>(v_);
}

std::string Int::to_string() const {
  if (v_ == 0) return "0";
  unsigned __int128 u = v_ < 0 ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
  std::string out;
  while (u > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (v_ < 0) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Int Int::parse(std::string_view text) {
  if (text.empty()) throw Error(Errc::InvalidArgument, "empty integer");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw Error(Errc::InvalidArgument, "malformed integer '" + std::string(text) + "'");
  Int value{0};
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') {
      throw Error(Errc::InvalidArgument, "malformed integer '" + std::string(text) + "'");
    }
    value = value * 10 + (negative ? -(c - '0') : (c - '0'));
  }
  return value;
}

Int abs(Int a) { return a.sign() < 0 ? -a : a; }

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b).sign() != 0 && ((a.sign() < 0) != (b.sign() < 0))) q -= 1;
  return q;
}

Int floor_mod(Int a, Int b) {
  Int r = a % b;
  if (r.sign() < 0) r += abs(b);
  return r;
}

Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (!b.is_zero()) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a.is_zero() || b.is_zero()) return Int{0};
  return abs(a / gcd(a, b) * b);
}

ExtendedGcd extended_gcd(Int a, Int b) {
  if (a.sign() < 0 || b.sign() < 0 || (a.is_zero() && b.is_zero())) {
    throw Error(Errc::InvalidArgument, "extended_gcd needs nonnegative arguments, not both zero");
  }
  Int r0 = a, r1 = b;
  Int x0 = 1, x1 = 0;
  Int y0 = 0, y1 = 1;
  while (!r1.is_zero()) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int x2 = x0 - q * x1;
    Int y2 = y0 - q * y1;
    r0 = r1;
    r1 = r2;
    x0 = x1;
    x1 = x2;
    y0 = y1;
    y1 = y2;
  }
  return {r0, x0, y0};
}

Int mod_inverse(Int a, Int m) {
  if (m.sign() <= 0) throw Error(Errc::InvalidArgument, "modulus must be positive");
  if (m == 1) return Int{0};
  auto [g, x, y] = extended_gcd(floor_mod(a, m), m);
  (void)y;
  if (g != 1) throw Error(Errc::InvalidArgument, "not invertible modulo " + m.to_string());
  return floor_mod(x, m);
}

std::ostream& operator<<(std::ostream& os, Int v) { return os << v.to_string(); }

}  // namespace deltasg
