#include <doctest.h>

#include <random>
#include <set>

#include "isc/arith.hpp"

using namespace isc;

namespace {

std::vector<std::uint64_t> trial_division_primes(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= bound; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("legendre_symbol examples") {
  CHECK(legendre_symbol(FpElem::make(0, 5)) == 0);
  CHECK(legendre_symbol(FpElem::make(4, 5)) == 1);
  CHECK(legendre_symbol(FpElem::make(5, 41)) == 1);
  CHECK_THROWS_WITH(legendre_symbol(FpElem::make(1, 2)), "even modulus");
}

TEST_CASE("legendre_symbol matches an exhaustive square table for odd primes <= 100") {
  for (std::uint64_t p : trial_division_primes(100)) {
    if (p == 2) continue;
    std::set<std::uint64_t> squares;
    for (std::uint64_t b = 1; b < p; ++b) squares.insert(b * b % p);
    for (std::uint64_t a = 0; a < p; ++a) {
      const int expected = a == 0 ? 0 : (squares.count(a) ? 1 : -1);
      CHECK(legendre_symbol(FpElem::make(static_cast<std::int64_t>(a), p)) == expected);
    }
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(FpElem::make(1, 7)).value() == 1);
  CHECK(mod_inverse(FpElem::make(3, 7)).value() == 5);
  CHECK(mod_inverse(FpElem::make(10, 13)).value() == 4);
  CHECK_THROWS_WITH(mod_inverse(FpElem::make(0, 7)), "not invertible");

  for (std::uint64_t p : trial_division_primes(100))
    for (std::uint64_t a = 1; a < p; ++a) {
      const auto x = FpElem::make(static_cast<std::int64_t>(a), p);
      CHECK((x * mod_inverse(x)).value() == 1);
      CHECK(mod_inverse(mod_inverse(x)) == x);
    }
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(-5).empty());
  const auto hundred = primes_up_to(100);
  CHECK(hundred.size() == 25);
  CHECK(hundred.back() == 97);

  const auto reference = trial_division_primes(10'000);
  for (std::int64_t bound = 2; bound <= 10'000; ++bound) {
    const auto got = primes_up_to(bound);
    const auto end = std::upper_bound(reference.begin(), reference.end(), static_cast<std::uint64_t>(bound));
    REQUIRE(std::equal(got.begin(), got.end(), reference.begin(), end));
  }
}

TEST_CASE("reduce_rational_mod") {
  CHECK(reduce_rational_mod(BigRational(1, 2), 5).value() == 3);
  CHECK(reduce_rational_mod(BigRational(7), 7).value() == 0);
  const BigRational s17(BigInt(-17 * BigInt(373) * 373 * 373), BigInt(1) << 17);
  CHECK_THROWS_WITH(reduce_rational_mod(s17, 2), "bad reduction prime");
  CHECK(reduce_rational_mod(BigRational(-1, 3), 7).value() == 2);  // 3 * 2 = 6 = -1
}

TEST_CASE("BigRational canonical form") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-100000, 100000);
  for (int i = 0; i < 500; ++i) {
    const long n = dist(rng), k = dist(rng);
    long d = dist(rng);
    if (d == 0 || k == 0) continue;
    const BigRational x{BigInt(n), BigInt(d)};
    const BigRational y{BigInt(k) * n, BigInt(k) * d};
    CHECK(x == y);
    CHECK(x.denominator() > 0);
    CHECK(gcd(x.numerator(), x.denominator()) == 1);
    CHECK(x.id() == y.id());
  }
  CHECK(BigRational(6, -4).id() == "-3/2");
  CHECK(BigRational(4913).id() == "4913/1");
  CHECK(BigRational(4913).to_string() == "4913");
  CHECK_THROWS(BigRational(BigInt(1), BigInt(0)));
}

TEST_CASE("BigRational parses and prints large values exactly") {
  const BigInt s37 = -7 * BigInt(137) * 137 * 137 * 2083 * 2083 * 2083;
  CHECK(s37.get_str() == "-162677523113838677");
  const auto j = BigRational::parse(s37.get_str());
  CHECK(j.numerator() == s37);
  CHECK(BigRational::parse(j.id()) == j);
  CHECK(BigRational::parse("-882216989/131072").denominator() == 131072);
  CHECK(BigRational::parse("10/4") == BigRational(5, 2));
  CHECK_THROWS(BigRational::parse("12x"));
  CHECK_THROWS(BigRational::parse("1/0"));
  CHECK_THROWS(BigRational::parse(""));
}

TEST_CASE("sqrt_mod inverts squaring") {
  for (std::uint64_t p : {3ULL, 5ULL, 13ULL, 17ULL, 41ULL, 97ULL, 257ULL, 7681ULL}) {
    for (std::uint64_t b = 0; b < std::min<std::uint64_t>(p, 300); ++b) {
      const auto sq = FpElem::make(static_cast<std::int64_t>(b * b % p), p);
      const auto r = sqrt_mod(sq);
      CHECK((r * r) == sq);
    }
  }
  CHECK_THROWS(sqrt_mod(FpElem::make(2, 5)));
}

TEST_CASE("FpElem requires a prime modulus") {
  CHECK_THROWS(FpElem::make(1, 9));
  CHECK_THROWS(FpElem::make(1, 1));
  CHECK(FpElem::make(-1, 7).value() == 6);
}

TEST_CASE("trial_factor") {
  auto f = trial_factor(BigInt(6 * 4913 * 3185));
  CHECK(f.primes == std::vector<std::uint64_t>{2, 3, 5, 7, 13, 17});
  CHECK(f.cofactor == 1);
  f = trial_factor(BigInt(1727));
  CHECK(f.primes == std::vector<std::uint64_t>{11, 157});
  const BigInt big = BigInt(1000003) * 1000033;
  f = trial_factor(big * 4);
  CHECK(f.primes == std::vector<std::uint64_t>{2});
  CHECK(f.cofactor == big);
  f = trial_factor(BigInt(999983) * 2);  // prime cofactor under bound^2
  CHECK(f.primes == std::vector<std::uint64_t>{2, 999983});
}
