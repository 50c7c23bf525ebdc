#include "dpo/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace dpo {

namespace {

long long parse_int(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long long magnitude = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, magnitude);
  if (ec != std::errc() || ptr != end || text.empty()) {
    fail(ErrorKind::InvalidInput, "not a rational: \"" + std::string(whole) + "\"");
  }
  return negative ? -magnitude : magnitude;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) fail(ErrorKind::BadParameter, "rational with zero denominator");
  if (num == std::numeric_limits<long long>::min() || den == std::numeric_limits<long long>::min()) {
    fail(ErrorKind::BadParameter, "rational component out of range");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const long long num = parse_int(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-')) {
    fail(ErrorKind::InvalidInput, "sign belongs on the numerator: \"" + std::string(text) + "\"");
  }
  const long long den = parse_int(den_text, text);
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator: \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace dpo
