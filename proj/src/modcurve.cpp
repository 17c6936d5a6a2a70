#include "isc/modcurve.hpp"

#include <algorithm>
#include <stdexcept>

namespace isc {
namespace {

// Expansions of (t+16)^3, (t+27)(t+3)^3, (t^2+10t+5)^3,
// (t^2+5t+1)^3 (t^2+13t+49) and (t^4+7t^3+20t^2+19t+1)^3 (t^2+5t+13),
// constant term first.
const std::map<int, std::vector<long>> kExpandedJMaps = {
    {2, {4096, 768, 48, 1}},
    {3, {729, 756, 270, 36, 1}},
    {5, {125, 750, 1575, 1300, 315, 30, 1}},
    {7, {49, 748, 4018, 8624, 5915, 1904, 322, 28, 1}},
    {13, {13, 746, 15145, 124852, 354536, 534820, 509366, 333580, 157118, 54340, 13832, 2548, 325, 26, 1}},
};

BigInt pow_int(long base, unsigned exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), exp);
  return (base < 0 && exp % 2 == 1) ? BigInt(-out) : out;
}

}  // namespace

BigRational JMapPoly::evaluate(const BigRational& t) const {
  BigRational acc(0);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + BigRational(*it);
  return acc;
}

BigInt JMapPoly::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
  return acc;
}

JMapPoly f_poly(int r) {
  auto it = kExpandedJMaps.find(r);
  if (it == kExpandedJMaps.end()) throw std::invalid_argument("no genus-zero j-map for r=" + std::to_string(r));
  JMapPoly poly{r, {}};
  for (long c : it->second) poly.coefficients.emplace_back(c);
  return poly;
}

BigRational j_map(int r, const BigRational& t) {
  if (t.is_zero()) throw std::domain_error("cusp");
  return f_poly(r).evaluate(t) / t;
}

std::vector<BigInt> integral_t_candidates(int r) {
  const BigInt c = abs(f_poly(r).constant_term());
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= c; ++d) {
    if (c % d != 0) continue;
    for (const BigInt& e : {d, BigInt(c / d)}) {
      out.push_back(e);
      out.push_back(-e);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IntegralJSet enumerate_integral_j(int r) {
  const JMapPoly f = f_poly(r);
  IntegralJSet set{r, {}};
  for (const BigInt& t : integral_t_candidates(r)) {
    const BigInt value = f.evaluate(t);
    if (value % t != 0) throw std::logic_error("non-integral j from divisor of f(0)");
    set.values.push_back(value / t);
  }
  std::sort(set.values.begin(), set.values.end());
  set.values.erase(std::unique(set.values.begin(), set.values.end()), set.values.end());
  return set;
}

std::vector<JCollision> integral_j_collisions(int r) {
  const JMapPoly f = f_poly(r);
  std::map<BigInt, std::vector<BigInt>> preimages;
  for (const BigInt& t : integral_t_candidates(r)) preimages[BigInt(f.evaluate(t) / t)].push_back(t);
  std::vector<JCollision> out;
  for (auto& [j, ts] : preimages)
    if (ts.size() > 1) out.push_back({j, ts});
  return out;
}

std::map<int, std::vector<BigRational>> known_sets() {
  const BigInt two = 2;
  return {
      {11,
       {BigRational(BigInt(-11 * pow_int(131, 3))), BigRational(BigInt(-pow_int(2, 15))),
        BigRational(BigInt(-pow_int(11, 2)))}},
      {17,
       {BigRational(BigInt(-pow_int(17, 2) * pow_int(101, 3)), two),
        BigRational(BigInt(-17 * pow_int(373, 3)), pow_int(2, 17))}},
      {37,
       {BigRational(BigInt(-7 * pow_int(137, 3) * pow_int(2083, 3))), BigRational(BigInt(-7 * pow_int(11, 3)))}},
  };
}

const std::vector<BigRational>& cm_j_invariants() {
  static const std::vector<BigRational> table = [] {
    std::vector<BigRational> out;
    for (const char* j : {"0", "1728", "-3375", "8000", "54000", "287496", "-32768", "16581375", "-884736",
                          "-12288000", "-884736000", "-147197952000", "-262537412640768000"})
      out.push_back(BigRational::parse(j));
    return out;
  }();
  return table;
}

bool is_cm(const BigRational& j) {
  const auto& table = cm_j_invariants();
  return std::find(table.begin(), table.end(), j) != table.end();
}

}  // namespace isc
