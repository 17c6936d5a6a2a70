#include <doctest.h>

#include <algorithm>

#include "isc/modcurve.hpp"
#include "isc/reduction.hpp"

using namespace isc;

TEST_CASE("mazur_isogeny_degrees") {
  const auto degrees = mazur_isogeny_degrees();
  CHECK(degrees.size() == 8);
  CHECK(std::find(degrees.begin(), degrees.end(), 37) != degrees.end());
  CHECK(std::find(degrees.begin(), degrees.end(), 19) == degrees.end());
  std::vector<int> parts(std::begin(kGenusZeroDegrees), std::end(kGenusZeroDegrees));
  parts.insert(parts.end(), std::begin(kPositiveGenusDegrees), std::end(kPositiveGenusDegrees));
  std::sort(parts.begin(), parts.end());
  CHECK(parts == degrees);
}

TEST_CASE("denominator_primes") {
  CHECK(denominator_primes(BigRational(4913)).empty());
  CHECK(denominator_primes(BigRational(-12288000)).empty());
  const BigRational s17(BigInt(-17 * BigInt(373) * 373 * 373), BigInt(1) << 17);
  CHECK(denominator_primes(s17) == std::vector<std::uint64_t>{2});
  CHECK(denominator_primes(BigRational(1, 15)) == std::vector<std::uint64_t>{3, 5});
  CHECK_THROWS_WITH(denominator_primes(BigRational(BigInt(1), BigInt(1000003) * 1000033)), "denominator not smooth");
  CHECK(denominator_primes(BigRational(BigInt(1), BigInt(999983))) == std::vector<std::uint64_t>{999983});
}

TEST_CASE("reduction_profile") {
  const auto integral = reduction_profile(BigRational(4913));
  CHECK(integral.is_integral);
  CHECK_FALSE(integral.integral_away_from.has_value());
  const auto s17 = reduction_profile(BigRational(BigInt(-17 * 17 * 1030301), BigInt(2)));
  CHECK_FALSE(s17.is_integral);
  CHECK(s17.integral_away_from == 2u);
  CHECK_FALSE(reduction_profile(BigRational(1, 15)).integral_away_from.has_value());
}

TEST_CASE("ns_compatible") {
  CHECK_FALSE(ns_compatible(2, 41));
  CHECK(ns_compatible(13, 7));
  CHECK_FALSE(ns_compatible(41, 41));
  CHECK(ns_compatible(83, 41));
  CHECK_THROWS_WITH(ns_compatible(2, 3), "criterion requires p >= 5");

  for (auto p : primes_up_to(100)) {
    if (p < 5) continue;
    for (auto ell : primes_up_to(100)) {
      if (ell == p) continue;
      CHECK(ns_compatible(ell, p) == (ell * ell % p == 1));
    }
  }
}

TEST_CASE("integrality_upgrade") {
  const BigRational s17a(BigInt(-17 * 17 * 1030301), BigInt(2));
  const BigRational s17b(BigInt(-17 * BigInt(373) * 373 * 373), BigInt(1) << 17);
  CHECK(integrality_upgrade(BigRational(4913), 41) == IntegralityVerdict::IntegralAlready);
  CHECK(integrality_upgrade(s17b, 41) == IntegralityVerdict::IncompatibleWithNns);
  CHECK(integrality_upgrade(BigRational(1, 3), 41) == IntegralityVerdict::IncompatibleWithNns);
  CHECK(integrality_upgrade(BigRational(1, 41), 41) == IntegralityVerdict::IncompatibleWithNns);
  CHECK(integrality_upgrade(BigRational(1, 83), 41) == IntegralityVerdict::NotInZ1OverP);
  CHECK(integrality_upgrade(BigRational(1, 83 * 41), 41) == IntegralityVerdict::IncompatibleWithNns);
  CHECK_THROWS(integrality_upgrade(BigRational(1), 13));
  CHECK_THROWS(integrality_upgrade(BigRational(1), 3));
  CHECK_THROWS(integrality_upgrade(BigRational(1), 49));

  for (auto p : primes_up_to(1000)) {
    if (p <= 37) continue;
    CHECK(integrality_upgrade(s17a, p) == IntegralityVerdict::IncompatibleWithNns);
    CHECK(integrality_upgrade(s17b, p) == IntegralityVerdict::IncompatibleWithNns);
  }
}

TEST_CASE("enumerated integral sets are IntegralAlready for every admissible p") {
  for (int r : kGenusZeroDegrees)
    for (const auto& v : enumerate_integral_j(r).values)
      for (auto p : primes_up_to(200)) {
        if (p < 5 || p == 5 || p == 7 || p == 13) continue;
        CHECK(integrality_upgrade(BigRational(v), p) == IntegralityVerdict::IntegralAlready);
      }
}

TEST_CASE("verdict names") {
  CHECK(to_string(IntegralityVerdict::NotInZ1OverP) == "NotInZ1OverP");
  CHECK(to_string(IntegralityVerdict::IncompatibleWithNns) == "IncompatibleWithNns");
}
