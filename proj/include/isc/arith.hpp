#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace isc {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Equality is equality of the canonical form.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInt& value) : value_(value) {}
  BigRational(const BigInt& num, const BigInt& den);

  /// Parses "n" or "n/d" (decimal, optional leading '-').
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }

  /// Canonical "numerator/denominator", e.g. "4913/1", "-17/2".
  std::string id() const;
  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  friend BigRational operator+(const BigRational& x, const BigRational& y);
  friend BigRational operator-(const BigRational& x, const BigRational& y);
  friend BigRational operator*(const BigRational& x, const BigRational& y);
  friend BigRational operator/(const BigRational& x, const BigRational& y);
  BigRational operator-() const;

  friend bool operator==(const BigRational& x, const BigRational& y) { return x.value_ == y.value_; }
  friend bool operator<(const BigRational& x, const BigRational& y) { return x.value_ < y.value_; }
  friend bool operator>(const BigRational& x, const BigRational& y) { return y < x; }
  friend bool operator<=(const BigRational& x, const BigRational& y) { return !(y < x); }
  friend bool operator>=(const BigRational& x, const BigRational& y) { return !(x < y); }

 private:
  explicit BigRational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

/// An element of the prime field F_l. Construction through `make` checks that
/// the modulus is prime; moduli are bounded below 2^31 so products of two
/// residues fit in 64 bits.
class FpElem {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

  static FpElem make(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FpElem operator+(const FpElem& o) const;
  FpElem operator-(const FpElem& o) const;
  FpElem operator*(const FpElem& o) const;
  FpElem operator-() const;
  FpElem pow(std::uint64_t e) const;

  friend bool operator==(const FpElem&, const FpElem&) = default;

 private:
  FpElem(std::uint64_t value, std::uint64_t modulus) : value_(value), modulus_(modulus) {}
  void check_same_field(const FpElem& o) const;
  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 2;
};

// Raw modular helpers for inner loops; the caller guarantees m <= FpElem::kMaxModulus.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a * b % m; }
inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}
inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return a >= b ? a - b : a + m - b; }
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo m by the extended Euclidean algorithm; a must be a unit.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Legendre symbol of a modulo its (odd prime) modulus, via Euler's criterion.
int legendre_symbol(const FpElem& a);
FpElem mod_inverse(const FpElem& a);
/// A square root of a square `a`, by Tonelli-Shanks.
FpElem sqrt_mod(const FpElem& a);

/// Primes <= bound in increasing order (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::int64_t bound);
/// Trial-division primality; intended for moduli below 2^31.
bool is_prime(std::uint64_t n);

FpElem reduce_rational_mod(const BigRational& x, std::uint64_t prime);
std::uint64_t mod_small(const BigInt& x, std::uint64_t m);

/// Result of trial division: the prime divisors up to the trial bound and the
/// unfactored remainder (1 when fully factored).
struct TrialFactorization {
  std::vector<std::uint64_t> primes;
  BigInt cofactor = 1;
};

/// Distinct prime divisors of |n| found by trial division up to `bound`. A
/// remaining cofactor below bound^2 is prime and is moved into `primes`.
TrialFactorization trial_factor(const BigInt& n, std::uint64_t bound = 1'000'000);

}  // namespace isc
