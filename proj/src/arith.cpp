#include "isc/arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace isc {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || !std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("malformed rational: zero denominator");
  return BigRational(parse_int(text.substr(0, slash)), den);
}

std::string BigRational::id() const { return value_.get_num().get_str() + "/" + value_.get_den().get_str(); }

std::string BigRational::to_string() const {
  return is_integer() ? value_.get_num().get_str() : id();
}

BigRational operator+(const BigRational& x, const BigRational& y) { return BigRational(mpq_class(x.value_ + y.value_)); }
BigRational operator-(const BigRational& x, const BigRational& y) { return BigRational(mpq_class(x.value_ - y.value_)); }
BigRational operator*(const BigRational& x, const BigRational& y) { return BigRational(mpq_class(x.value_ * y.value_)); }
BigRational operator/(const BigRational& x, const BigRational& y) {
  if (y.is_zero()) throw std::domain_error("division by zero");
  return BigRational(mpq_class(x.value_ / y.value_));
}
BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FpElem FpElem::make(std::int64_t value, std::uint64_t modulus) {
  if (modulus > kMaxModulus) throw std::domain_error("modulus too large");
  if (!is_prime(modulus)) throw std::domain_error("modulus not prime: " + std::to_string(modulus));
  auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return FpElem(static_cast<std::uint64_t>(r), modulus);
}

void FpElem::check_same_field(const FpElem& o) const {
  if (modulus_ != o.modulus_) throw std::domain_error("mixed moduli");
}

FpElem FpElem::operator+(const FpElem& o) const {
  check_same_field(o);
  return {addmod(value_, o.value_, modulus_), modulus_};
}
FpElem FpElem::operator-(const FpElem& o) const {
  check_same_field(o);
  return {submod(value_, o.value_, modulus_), modulus_};
}
FpElem FpElem::operator*(const FpElem& o) const {
  check_same_field(o);
  return {mulmod(value_, o.value_, modulus_), modulus_};
}
FpElem FpElem::operator-() const { return {submod(0, value_, modulus_), modulus_}; }
FpElem FpElem::pow(std::uint64_t e) const { return {powmod(value_, e, modulus_), modulus_}; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a % m);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  if (r0 != 1) throw std::domain_error("not invertible");
  if (s0 < 0) s0 += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(s0);
}

int legendre_symbol(const FpElem& a) {
  if (a.modulus() == 2) throw std::domain_error("even modulus");
  if (a.is_zero()) return 0;
  return a.pow((a.modulus() - 1) / 2).value() == 1 ? 1 : -1;
}

FpElem mod_inverse(const FpElem& a) {
  if (a.is_zero()) throw std::domain_error("not invertible");
  return FpElem::make(static_cast<std::int64_t>(invmod(a.value(), a.modulus())), a.modulus());
}

FpElem sqrt_mod(const FpElem& a) {
  const std::uint64_t p = a.modulus();
  if (a.is_zero() || p == 2) return a;
  if (legendre_symbol(a) != 1) throw std::domain_error("not a square");
  if (p % 4 == 3) return a.pow((p + 1) / 4);
  // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) q /= 2, ++s;
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t c = powmod(z, q, p), t = powmod(a.value(), q, p), r = powmod(a.value(), (q + 1) / 2, p);
  std::uint64_t m = s;
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) t2 = mulmod(t2, t2, p), ++i;
    std::uint64_t b = c;
    for (std::uint64_t k = 0; k + 1 < m - i; ++k) b = mulmod(b, b, p);
    r = mulmod(r, b, p);
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    m = i;
  }
  return FpElem::make(static_cast<std::int64_t>(r), p);
}

std::vector<std::uint64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint64_t>(i));
    for (std::int64_t k = i * i; k <= bound; k += i) composite[k] = true;
  }
  return primes;
}

std::uint64_t mod_small(const BigInt& x, std::uint64_t m) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), m);
  return r.get_ui();
}

FpElem reduce_rational_mod(const BigRational& x, std::uint64_t prime) {
  std::uint64_t den = mod_small(x.denominator(), prime);
  if (den == 0) throw std::domain_error("bad reduction prime");
  std::uint64_t num = mod_small(x.numerator(), prime);
  auto value = mulmod(num, invmod(den, prime), prime);
  return FpElem::make(static_cast<std::int64_t>(value), prime);
}

TrialFactorization trial_factor(const BigInt& n, std::uint64_t bound) {
  TrialFactorization out;
  BigInt rest = abs(n);
  if (rest == 0) throw std::domain_error("cannot factor zero");
  for (std::uint64_t d = 2; d <= bound && rest > 1; d += (d == 2 ? 1 : 2)) {
    if (BigInt(d) * d > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      out.primes.push_back(d);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
    }
  }
  // Anything left with no divisor up to min(bound, sqrt(rest)) is prime when below bound^2.
  if (rest > 1 && rest < BigInt(bound) * bound && rest.fits_ulong_p()) {
    out.primes.push_back(rest.get_ui());
    rest = 1;
  }
  std::sort(out.primes.begin(), out.primes.end());
  out.cofactor = rest;
  return out;
}

}  // namespace isc
