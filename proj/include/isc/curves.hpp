#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isc/arith.hpp"

namespace isc {

/// Short Weierstrass model y^2 = x^3 + a x + b over Q carrying its j-invariant.
struct CurveModel {
  BigRational j;
  BigRational a;
  BigRational b;
};

/// j-invariant of y^2 = x^3 + a x + b, i.e. 1728 * 4a^3 / (4a^3 + 27b^2).
BigRational j_invariant_of(const BigRational& a, const BigRational& b);

/// A model with the given j-invariant: (0, 1) for j = 0, (1, 0) for j = 1728,
/// otherwise a = -3j(j - 1728), b = -2j(j - 1728)^2.
CurveModel curve_from_j(const BigRational& j);

/// Primes at which the generic model is not trusted: divisors of
/// 6 * den(j) * num(j) * num(j - 1728), zero factors omitted. Membership is
/// exact for every prime; `primes()` lists the divisors found by trial division.
class SkipSet {
 public:
  explicit SkipSet(const CurveModel& model);
  bool contains(std::uint64_t prime) const;
  const std::vector<std::uint64_t>& primes() const { return factors_.primes; }
  /// Product of any prime divisors beyond the trial bound (1 if none).
  const BigInt& unfactored() const { return factors_.cofactor; }

 private:
  BigInt product_;
  TrialFactorization factors_;
};

std::vector<std::uint64_t> skip_primes(const CurveModel& model);

struct ReducedCurve {
  std::uint64_t prime;
  std::uint64_t a;
  std::uint64_t b;

  /// Checks 4a^3 + 27b^2 != 0 in F_prime.
  static ReducedCurve make(std::uint64_t prime, std::int64_t a, std::int64_t b);
};

ReducedCurve reduce_curve(const CurveModel& model, std::uint64_t prime);
ReducedCurve reduce_curve(const CurveModel& model, const SkipSet& skip, std::uint64_t prime);

inline constexpr std::uint64_t kNaiveCountBound = 10'000;

/// #E(F_l) including infinity by testing every pair (x, y). Test oracle only.
std::uint64_t count_points_naive(const ReducedCurve& c);
/// #E(F_l) = l + 1 + sum_x legendre(x^3 + a x + b); odd l only.
std::uint64_t count_points_legendre(const ReducedCurve& c);

struct BsgsOptions {
  int max_points = 12;     // points drawn on E and on its quadratic twist
  std::uint64_t seed = 0;  // mixed with (l, a, b) so results are reproducible
};

/// #E(F_l) by baby-step giant-step over the Hasse interval. Candidate orders
/// are intersected across random points of E and of its non-trivial quadratic
/// twist (whose order is 2l + 2 - #E). Returns nullopt when more than one
/// candidate survives the point budget.
std::optional<std::uint64_t> count_points_bsgs(const ReducedCurve& c, const BsgsOptions& opts = {});

/// |a| <= 2 sqrt(l), evaluated exactly as a^2 <= 4l.
inline bool within_hasse_bound(std::int64_t trace, std::uint64_t prime) {
  return static_cast<std::uint64_t>(trace * trace) <= 4 * prime;
}

}  // namespace isc
