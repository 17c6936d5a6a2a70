#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "isc/arith.hpp"

namespace isc {

/// Prime degrees of rational isogenies of non-CM elliptic curves over Q.
std::vector<int> mazur_isogeny_degrees();

/// Prime divisors of den(j), i.e. the primes of potentially multiplicative
/// reduction. Throws "denominator not smooth" if trial division to 10^6
/// leaves a cofactor above 10^12.
std::vector<std::uint64_t> denominator_primes(const BigRational& j);

struct ReductionProfile {
  BigRational j;
  std::vector<std::uint64_t> denominator_primes;
  bool is_integral = false;
  std::optional<std::uint64_t> integral_away_from;  // den(j) is a power of this prime
};

ReductionProfile reduction_profile(const BigRational& j);

/// Whether potentially multiplicative reduction at `ell` is compatible with a
/// mod-p image inside the normaliser of a non-split Cartan subgroup: for
/// ell != p this is ell = +-1 (mod p); for ell = p it never is (p >= 5).
bool ns_compatible(std::uint64_t ell, std::uint64_t p);

enum class IntegralityVerdict { IntegralAlready, UpgradedToIntegral, NotInZ1OverP, IncompatibleWithNns };

std::string_view to_string(IntegralityVerdict verdict);

/// Decision procedure for "N_ns image mod p forces j integral", for a prime
/// p >= 5 outside {2, 3, 5, 7, 13}:
///   - den(j) = 1                                  -> IntegralAlready
///   - some prime ell | den(j) has !ns_compatible  -> IncompatibleWithNns
///     (this includes ell = p)
///   - otherwise                                   -> NotInZ1OverP
/// UpgradedToIntegral is never produced: a nontrivial denominator is never
/// upgraded, it is either ruled out or left outside the integral case.
IntegralityVerdict integrality_upgrade(const BigRational& j, std::uint64_t p);

}  // namespace isc
