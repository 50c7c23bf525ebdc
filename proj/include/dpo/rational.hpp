#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "dpo/error.hpp"

namespace dpo {

/// Exact rational number in canonical reduced form: den > 0 and
/// gcd(|num|, den) = 1. Comparison is by cross multiplication in 128-bit
/// intermediates, so it is exact for every representable value.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long value) : num_(value) {}  // integers are rationals with den 1
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  /// Text form: "p/q" or bare integer "p", optionally signed. Rejects q = 0.
  static Rational parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const auto lhs = static_cast<__int128>(a.num_) * b.den_;
    const auto rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace dpo
