#include "isc/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace isc {

std::vector<int> mazur_isogeny_degrees() { return {2, 3, 5, 7, 11, 13, 17, 37}; }

std::vector<std::uint64_t> denominator_primes(const BigRational& j) {
  if (j.is_integer()) return {};
  constexpr std::uint64_t kTrialBound = 1'000'000;
  auto factors = trial_factor(j.denominator(), kTrialBound);
  if (factors.cofactor != 1) throw std::domain_error("denominator not smooth");
  return factors.primes;
}

ReductionProfile reduction_profile(const BigRational& j) {
  ReductionProfile profile{j, denominator_primes(j), false, std::nullopt};
  profile.is_integral = profile.denominator_primes.empty();
  if (profile.denominator_primes.size() == 1) profile.integral_away_from = profile.denominator_primes.front();
  return profile;
}

bool ns_compatible(std::uint64_t ell, std::uint64_t p) {
  if (p < 5) throw std::domain_error("criterion requires p >= 5");
  if (ell == p) return false;
  const std::uint64_t r = ell % p;
  return r == 1 || r == p - 1;
}

std::string_view to_string(IntegralityVerdict verdict) {
  switch (verdict) {
    case IntegralityVerdict::IntegralAlready: return "IntegralAlready";
    case IntegralityVerdict::UpgradedToIntegral: return "UpgradedToIntegral";
    case IntegralityVerdict::NotInZ1OverP: return "NotInZ1OverP";
    case IntegralityVerdict::IncompatibleWithNns: return "IncompatibleWithNns";
  }
  return "unknown";
}

IntegralityVerdict integrality_upgrade(const BigRational& j, std::uint64_t p) {
  constexpr std::uint64_t kGenusZero[] = {2, 3, 5, 7, 13};
  if (p < 5 || !is_prime(p) || std::find(std::begin(kGenusZero), std::end(kGenusZero), p) != std::end(kGenusZero))
    throw std::domain_error("integrality upgrade requires a prime p >= 5 outside {2,3,5,7,13}");
  const auto primes = denominator_primes(j);
  if (primes.empty()) return IntegralityVerdict::IntegralAlready;
  for (std::uint64_t ell : primes)
    if (!ns_compatible(ell, p)) return IntegralityVerdict::IncompatibleWithNns;
  return IntegralityVerdict::NotInZ1OverP;
}

}  // namespace isc
