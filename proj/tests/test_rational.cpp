#include <doctest.h>

#include "dpo/rational.hpp"
#include "dpo/rng.hpp"

using dpo::Error;
using dpo::ErrorKind;
using dpo::Rational;

namespace {

// Independent comparison oracle: continued-fraction descent using only
// 64-bit division, no cross multiplication anywhere.
int euclid_compare(long long a, long long b, long long c, long long d) {
  const auto floor_div = [](long long num, long long den) {
    long long q = num / den;
    if (num % den != 0 && (num < 0) != (den < 0)) --q;
    return q;
  };
  const long long qa = floor_div(a, b);
  const long long qc = floor_div(c, d);
  if (qa != qc) return qa < qc ? -1 : 1;
  const long long ra = a - qa * b;
  const long long rc = c - qc * d;
  if (ra == 0 && rc == 0) return 0;
  if (ra == 0) return -1;
  if (rc == 0) return 1;
  return -euclid_compare(b, ra, d, rc);
}

int sign_of(std::strong_ordering o) { return o < 0 ? -1 : o > 0 ? 1 : 0; }

}  // namespace

TEST_CASE("rationals normalize to reduced form with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -6) == Rational(1, 3));
  CHECK(Rational(3, -9) == Rational(-1, 3));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(5) == Rational(5, 1));
  CHECK(Rational(-2, 6).num() == -1);
  CHECK(Rational(-2, 6).den() == 3);
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  try {
    Rational::parse("1/0");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("parsing accepts the p/q and bare-integer forms") {
  CHECK(Rational::parse("-1/3") == Rational(-1, 3));
  CHECK(Rational::parse("+2/3") == Rational(2, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-0") == Rational(0));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
}

TEST_CASE("parsing rejects malformed text") {
  for (const auto* bad : {"", "a", "1.5", "2/", "/3", "1/-3", "1 / 3", "2//3"}) {
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
}

TEST_CASE("text round trip") {
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational::parse(Rational(22, -6).str()) == Rational(-11, 3));
}

TEST_CASE("exact comparisons") {
  CHECK(Rational(2, 3) < Rational(1));
  CHECK(Rational(1, 3) < Rational(2, 5));
  CHECK(Rational(-1, 3) < Rational(0));
  CHECK(Rational(2, 3) <= Rational(2, 3));
  CHECK_FALSE(Rational(2, 3) < Rational(2, 3));
}

TEST_CASE("comparison agrees with the continued-fraction oracle") {
  dpo::Rng rng(20240817);
  for (int i = 0; i < 20000; ++i) {
    const long long a = static_cast<long long>(rng.below(2'000'000'000'000ull)) - 1'000'000'000'000ll;
    const long long b = 1 + static_cast<long long>(rng.below(1'000'000'000ull));
    const long long c = static_cast<long long>(rng.below(2'000'000'000'000ull)) - 1'000'000'000'000ll;
    const long long d = 1 + static_cast<long long>(rng.below(1'000'000'000ull));
    const Rational x(a, b), y(c, d);
    CHECK(sign_of(x <=> y) == euclid_compare(a, b, c, d));
    CHECK((x == y) == (euclid_compare(a, b, c, d) == 0));
  }
}
