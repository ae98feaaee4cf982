#pragma once

// Checked 128-bit signed integer. Every arithmetic operation that would wrap
// throws Error(Errc::Overflow) instead.

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "deltasg/error.hpp"

namespace deltasg {

class Int {
 public:
  using rep = __int128;

  constexpr Int() = default;

  template <std::integral T>
  constexpr Int(T v) : v_(static_cast<rep>(v)) {}  // NOLINT(google-explicit-constructor)

  static constexpr Int from_rep(rep v) {
    Int r;
    r.v_ = v;
    return r;
  }
  constexpr rep raw() const { return v_; }

  static Int max();
  static Int min();

  friend Int operator+(Int a, Int b) {
    rep r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow("addition");
    return from_rep(r);
  }
  friend Int operator-(Int a, Int b) {
    rep r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow("subtraction");
    return from_rep(r);
  }
  friend Int operator*(Int a, Int b) {
    rep r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow("multiplication");
    return from_rep(r);
  }
  // Truncating division and remainder, as for builtin integers.
  friend Int operator/(Int a, Int b);
  friend Int operator%(Int a, Int b);
  Int operator-() const { return Int{0} - *this; }

  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }
  Int& operator++() { return *this += 1; }
  Int& operator--() { return *this -= 1; }

  friend constexpr bool operator==(Int a, Int b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(Int a, Int b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  constexpr int sign() const { return v_ > 0 ? 1 : (v_ < 0 ? -1 : 0); }
  constexpr bool is_zero() const { return v_ == 0; }

  bool fits_int64() const;
  std::int64_t to_int64() const;  // throws Overflow when out of range
  std::string to_string() const;
  static Int parse(std::string_view text);  // throws InvalidArgument / Overflow

 private:
  [[noreturn]] static void overflow(const char* op);
  rep v_ = 0;
};

Int abs(Int a);
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);  // result in [0, |b|)
Int gcd(Int a, Int b);        // nonnegative; gcd(a, 0) = |a|
Int lcm(Int a, Int b);

struct ExtendedGcd {
  Int g;
  Int x;
  Int y;
};
// a*x + b*y = g = gcd(a, b), for a, b >= 0 not both zero.
ExtendedGcd extended_gcd(Int a, Int b);

// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), in [0, m).
Int mod_inverse(Int a, Int m);

std::ostream& operator<<(std::ostream& os, Int v);

}  // namespace deltasg

template <>
struct std::hash<deltasg::Int> {
  std::size_t operator()(deltasg::Int v) const noexcept {
    auto u = static_cast<unsigned __int128>(v.raw());
    return std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(u) ^
                                      static_cast<std::uint64_t>(u >> 64) * 0x9e3779b97f4a7c15ULL);
  }
};
