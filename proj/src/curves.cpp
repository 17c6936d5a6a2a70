#include "isc/curves.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace isc {

BigRational j_invariant_of(const BigRational& a, const BigRational& b) {
  const BigRational four_a3 = BigRational(4) * a * a * a;
  const BigRational disc = four_a3 + BigRational(27) * b * b;
  if (disc.is_zero()) throw std::domain_error("singular model");
  return BigRational(1728) * four_a3 / disc;
}

CurveModel curve_from_j(const BigRational& j) {
  if (j.is_zero()) return {j, BigRational(0), BigRational(1)};
  const BigRational shifted = j - BigRational(1728);
  if (shifted.is_zero()) return {j, BigRational(1), BigRational(0)};
  return {j, BigRational(-3) * j * shifted, BigRational(-2) * j * shifted * shifted};
}

SkipSet::SkipSet(const CurveModel& model) {
  const BigRational shifted = model.j - BigRational(1728);
  product_ = BigInt(6) * model.j.denominator();
  if (!model.j.is_zero()) product_ *= model.j.numerator();
  if (!shifted.is_zero()) product_ *= shifted.numerator();
  factors_ = trial_factor(product_);
}

bool SkipSet::contains(std::uint64_t prime) const {
  return mpz_divisible_ui_p(product_.get_mpz_t(), prime) != 0;
}

std::vector<std::uint64_t> skip_primes(const CurveModel& model) { return SkipSet(model).primes(); }

ReducedCurve ReducedCurve::make(std::uint64_t prime, std::int64_t a, std::int64_t b) {
  const auto fa = FpElem::make(a, prime);
  const auto fb = FpElem::make(b, prime);
  const auto disc = FpElem::make(4, prime) * fa * fa * fa + FpElem::make(27, prime) * fb * fb;
  if (disc.is_zero()) throw std::domain_error("singular reduction");
  return {prime, fa.value(), fb.value()};
}

ReducedCurve reduce_curve(const CurveModel& model, std::uint64_t prime) {
  return reduce_curve(model, SkipSet(model), prime);
}

ReducedCurve reduce_curve(const CurveModel& model, const SkipSet& skip, std::uint64_t prime) {
  if (skip.contains(prime)) throw std::domain_error("skipped prime");
  const auto a = reduce_rational_mod(model.a, prime);
  const auto b = reduce_rational_mod(model.b, prime);
  return ReducedCurve::make(prime, static_cast<std::int64_t>(a.value()), static_cast<std::int64_t>(b.value()));
}

namespace {

std::uint64_t cubic_rhs(const ReducedCurve& c, std::uint64_t x) {
  const std::uint64_t p = c.prime;
  return addmod(addmod(mulmod(mulmod(x, x, p), x, p), mulmod(c.a, x, p), p), c.b, p);
}

}  // namespace

std::uint64_t count_points_naive(const ReducedCurve& c) {
  if (c.prime > kNaiveCountBound) throw std::domain_error("oracle bound exceeded");
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < c.prime; ++x) {
    const std::uint64_t rhs = cubic_rhs(c, x);
    for (std::uint64_t y = 0; y < c.prime; ++y)
      if (mulmod(y, y, c.prime) == rhs) ++count;
  }
  return count;
}

std::uint64_t count_points_legendre(const ReducedCurve& c) {
  const std::uint64_t p = c.prime;
  if (p == 2) throw std::domain_error("use naive count");
  std::vector<std::int8_t> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t y = 1; y <= (p - 1) / 2; ++y) chi[mulmod(y, y, p)] = 1;
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) sum += chi[cubic_rhs(c, x)];
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(p) + 1 + sum);
}

// ---------------------------------------------------------------------------
// Baby-step giant-step.

namespace {

struct Point {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  bool infinity = true;
  friend bool operator==(const Point&, const Point&) = default;
};

class AffineGroup {
 public:
  AffineGroup(std::uint64_t p, std::uint64_t a) : p_(p), a_(a) {}

  Point neg(const Point& P) const { return P.infinity ? P : Point{P.x, submod(0, P.y, p_), false}; }

  Point add(const Point& P, const Point& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    std::uint64_t lambda;
    if (P.x == Q.x) {
      if (addmod(P.y, Q.y, p_) == 0) return {};
      const std::uint64_t num = addmod(mulmod(3, mulmod(P.x, P.x, p_), p_), a_, p_);
      lambda = mulmod(num, invmod(mulmod(2, P.y, p_), p_), p_);
    } else {
      lambda = mulmod(submod(Q.y, P.y, p_), invmod(submod(Q.x, P.x, p_), p_), p_);
    }
    const std::uint64_t x3 = submod(submod(mulmod(lambda, lambda, p_), P.x, p_), Q.x, p_);
    const std::uint64_t y3 = submod(mulmod(lambda, submod(P.x, x3, p_), p_), P.y, p_);
    return {x3, y3, false};
  }

  Point mul(std::uint64_t k, Point P) const {
    Point acc;
    while (k > 0) {
      if (k & 1) acc = add(acc, P);
      P = add(P, P);
      k >>= 1;
    }
    return acc;
  }

  std::uint64_t key(const Point& P) const { return P.infinity ? ~std::uint64_t{0} : P.x * p_ + P.y; }

 private:
  std::uint64_t p_;
  std::uint64_t a_;
};

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Order of P, given that some N in [lo, hi] kills it. Returns 0 if the
/// baby-step giant-step search finds no such N.
std::uint64_t point_order(const AffineGroup& G, const Point& P, std::uint64_t lo, std::uint64_t hi) {
  if (P.infinity) return 1;
  const std::uint64_t width = hi - lo + 1;
  std::uint64_t m = isqrt(width);
  if (m * m < width) ++m;

  std::unordered_map<std::uint64_t, std::uint64_t> baby;
  baby.reserve(2 * m);
  Point step;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(G.key(step), j);
    step = G.add(step, P);
  }
  // step == mP now; walk G_i = (lo + i m) P and look for G_i = -jP.
  Point giant = G.mul(lo, P);
  std::uint64_t found = 0;
  for (std::uint64_t i = 0; i * m < width; ++i) {
    auto it = baby.find(G.key(G.neg(giant)));
    if (it != baby.end()) {
      found = lo + i * m + it->second;
      break;
    }
    giant = G.add(giant, step);
  }
  if (found == 0) return 0;
  std::uint64_t order = found;
  for (std::uint64_t q : prime_divisors(found))
    while (order % q == 0 && G.mul(order / q, P).infinity) order /= q;
  return order;
}

}  // namespace

std::optional<std::uint64_t> count_points_bsgs(const ReducedCurve& c, const BsgsOptions& opts) {
  const std::uint64_t p = c.prime;
  if (p < 5) throw std::domain_error("baby-step giant-step needs l >= 5");
  const std::uint64_t radius = isqrt(4 * p);
  const std::uint64_t lo = p + 1 - radius, hi = p + 1 + radius;

  // Twist y^2 = x^3 + a d^2 x + b d^3 by the least non-residue d.
  std::uint64_t d = 2;
  while (powmod(d, (p - 1) / 2, p) != p - 1) ++d;
  const ReducedCurve twist{p, mulmod(c.a, mulmod(d, d, p), p), mulmod(c.b, powmod(d, 3, p), p)};

  std::vector<std::uint64_t> candidates;
  for (std::uint64_t n = lo; n <= hi; ++n) candidates.push_back(n);

  std::mt19937_64 rng(opts.seed ^ (p * 0x9E3779B97F4A7C15ULL) ^ (c.a << 21) ^ (c.b << 42));
  std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);

  auto random_point = [&](const ReducedCurve& curve) {
    for (;;) {
      const std::uint64_t x = pick(rng);
      const std::uint64_t rhs = cubic_rhs(curve, x);
      if (rhs == 0) return Point{x, 0, false};
      if (powmod(rhs, (p - 1) / 2, p) != 1) continue;
      return Point{x, sqrt_mod(FpElem::make(static_cast<std::int64_t>(rhs), p)).value(), false};
    }
  };

  for (int k = 0; k < opts.max_points && candidates.size() > 1; ++k) {
    for (bool on_twist : {false, true}) {
      const ReducedCurve& curve = on_twist ? twist : c;
      const AffineGroup group(p, curve.a);
      const std::uint64_t order = point_order(group, random_point(curve), lo, hi);
      if (order == 0) throw std::logic_error("point order outside Hasse interval");
      std::erase_if(candidates, [&](std::uint64_t n) { return (on_twist ? 2 * p + 2 - n : n) % order != 0; });
    }
  }
  if (candidates.empty()) throw std::logic_error("no group order consistent with sampled points");
  if (candidates.size() != 1) return std::nullopt;
  return candidates.front();
}

}  // namespace isc
