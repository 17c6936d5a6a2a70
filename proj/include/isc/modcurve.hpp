#pragma once

#include <map>
#include <vector>

#include "isc/arith.hpp"

namespace isc {

/// The genus-zero isogeny degrees, i.e. the r for which X_0(r) has a
/// Hauptmodul t with j = f(t)/t.
inline constexpr int kGenusZeroDegrees[] = {2, 3, 5, 7, 13};
/// Prime degrees with finitely many non-cuspidal rational points on X_0(r).
inline constexpr int kPositiveGenusDegrees[] = {11, 17, 37};

/// Monic f(t) of degree r + 1 with nonzero constant term; coefficients[k] is
/// the coefficient of t^k.
struct JMapPoly {
  int r = 0;
  std::vector<BigInt> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  const BigInt& constant_term() const { return coefficients.front(); }
  BigRational evaluate(const BigRational& t) const;
  BigInt evaluate(const BigInt& t) const;
};

struct IntegralJSet {
  int r = 0;
  std::vector<BigInt> values;  // ascending, distinct
};

/// Distinct t-values mapping to the same j.
struct JCollision {
  BigInt j;
  std::vector<BigInt> ts;
};

JMapPoly f_poly(int r);
/// j = f(t)/t; t = 0 is a cusp.
BigRational j_map(int r, const BigRational& t);
/// All positive and negative divisors of f(0), ascending.
std::vector<BigInt> integral_t_candidates(int r);
IntegralJSet enumerate_integral_j(int r);
std::vector<JCollision> integral_j_collisions(int r);

/// Non-cuspidal rational j-invariants on X_0(r) for r in {11, 17, 37}.
std::map<int, std::vector<BigRational>> known_sets();

/// The thirteen j-invariants over Q with complex multiplication.
const std::vector<BigRational>& cm_j_invariants();
bool is_cm(const BigRational& j);

}  // namespace isc
