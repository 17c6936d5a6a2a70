#include "isc/gl2_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace isc {
namespace {

void check_oracle_prime(std::uint32_t p) {
  if (p != 5 && p != 7) throw std::domain_error("p outside oracle range: " + std::to_string(p));
}

std::uint32_t pack(const GroupElem22& g, std::uint32_t p) { return ((g.a * p + g.b) * p + g.c) * p + g.d; }

GroupElem22 multiply(const GroupElem22& x, const GroupElem22& y, std::uint32_t p) {
  return {(x.a * y.a + x.b * y.c) % p, (x.a * y.b + x.b * y.d) % p, (x.c * y.a + x.d * y.c) % p,
          (x.c * y.b + x.d * y.d) % p};
}

std::uint32_t determinant(const GroupElem22& g, std::uint32_t p) { return (g.a * g.d + p * p - (g.b * g.c) % p) % p; }

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& bits) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : bits) h = (h ^ w) * 0x100000001b3ULL;
    return h;
  }
};

Bits to_bits(const std::vector<std::uint32_t>& members, std::size_t n) {
  Bits bits((n + 63) / 64, 0);
  for (std::uint32_t x : members) bits[x / 64] |= std::uint64_t{1} << (x % 64);
  return bits;
}

bool has_bit(const Bits& bits, std::uint32_t x) { return (bits[x / 64] >> (x % 64)) & 1; }

}  // namespace

SmallGL2::SmallGL2(std::uint32_t p) : p_(p) {
  check_oracle_prime(p);
  slot_.assign(p * p * p * p, UINT32_MAX);
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d) {
          GroupElem22 g{a, b, c, d};
          if (determinant(g, p) == 0) continue;
          slot_[pack(g, p)] = static_cast<std::uint32_t>(elements_.size());
          elements_.push_back(g);
        }
  const std::size_t n = elements_.size();
  identity_ = index_of(GroupElem22{});
  table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table_[x * n + y] = static_cast<std::uint16_t>(slot_[pack(multiply(elements_[x], elements_[y], p), p)]);
  for (const auto& g : elements_) {
    dets_.push_back(determinant(g, p));
    witnesses_.push_back(classify_witness_raw((g.a + g.d) % p, dets_.back(), p));
  }
}

std::uint32_t SmallGL2::index_of(const GroupElem22& g) const {
  if (g.a >= p_ || g.b >= p_ || g.c >= p_ || g.d >= p_) throw std::domain_error("matrix entry out of range");
  const std::uint32_t idx = slot_[pack(g, p_)];
  if (idx == UINT32_MAX) throw std::domain_error("singular matrix");
  return idx;
}

std::vector<std::uint32_t> SmallGL2::closure(const std::vector<std::uint32_t>& gens) const {
  Bits seen((order() + 63) / 64, 0);
  std::vector<std::uint32_t> members{identity_};
  seen[identity_ / 64] |= std::uint64_t{1} << (identity_ % 64);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::uint32_t g : gens) {
      const std::uint32_t y = mul(members[i], g);
      if (has_bit(seen, y)) continue;
      seen[y / 64] |= std::uint64_t{1} << (y % 64);
      members.push_back(y);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<GroupElem22> subgroup_closure(const std::vector<GroupElem22>& gens, std::uint32_t p) {
  const SmallGL2 group(p);
  std::vector<std::uint32_t> idx;
  for (const auto& g : gens) idx.push_back(group.index_of(g));
  std::vector<GroupElem22> out;
  for (std::uint32_t x : group.closure(idx)) out.push_back(group.elements()[x]);
  std::sort(out.begin(), out.end());
  return out;
}

WitnessSet witness_types_of(const GroupElem22& g, std::uint32_t p) {
  const std::uint32_t d = determinant(g, p);
  if (d == 0) throw std::domain_error("singular matrix");
  return classify_witness_raw((g.a + g.d) % p, d, p);
}

std::vector<GroupElem22> borel_subgroup(std::uint32_t p) {
  check_oracle_prime(p);
  std::vector<GroupElem22> out;
  for (std::uint32_t a = 1; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t d = 1; d < p; ++d) out.push_back({a, b, 0, d});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElem22> split_cartan_normalizer(std::uint32_t p) {
  check_oracle_prime(p);
  std::vector<GroupElem22> out;
  for (std::uint32_t a = 1; a < p; ++a)
    for (std::uint32_t d = 1; d < p; ++d) {
      out.push_back({a, 0, 0, d});
      out.push_back({0, a, d, 0});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElem22> nonsplit_cartan_normalizer(std::uint32_t p) {
  check_oracle_prime(p);
  std::uint32_t eps = 2;
  while (powmod(eps, (p - 1) / 2, p) == 1) ++eps;
  // C_ns = { x + y sqrt(eps) } acting on the basis (1, sqrt(eps)); the outer
  // coset is C_ns composed with conjugation diag(1, -1).
  std::vector<GroupElem22> out;
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      const GroupElem22 c{x, (eps * y) % p, y, x};
      out.push_back(c);
      out.push_back(multiply(c, GroupElem22{1, 0, 0, p - 1}, p));
    }
  std::sort(out.begin(), out.end());
  return out;
}

SubgroupOracleResult verify_witness_lemma(std::uint32_t p) {
  const SmallGL2 group(p);
  const std::size_t n = group.order();
  SubgroupOracleResult result;
  result.p = p;

  // Distinct cyclic subgroups, one generator each. <g, h> only depends on
  // <g> and <h>, so pairs of cyclic subgroups cover all 2-generator closures.
  std::vector<std::uint32_t> cyclic_gens;
  std::vector<Bits> cyclic_bits;
  std::unordered_set<Bits, BitsHash> seen_cyclic;
  for (std::uint32_t g = 0; g < n; ++g) {
    Bits bits = to_bits(group.closure({g}), n);
    if (seen_cyclic.insert(bits).second) {
      cyclic_gens.push_back(g);
      cyclic_bits.push_back(std::move(bits));
    }
  }

  std::unordered_set<Bits, BitsHash> seen;
  auto examine = [&](const std::vector<std::uint32_t>& gens) {
    const auto members = group.closure(gens);
    if (!seen.insert(to_bits(members, n)).second) return;
    ++result.subgroups_tested;
    std::vector<bool> dets(p, false);
    WitnessSet found;
    for (std::uint32_t x : members) {
      dets[group.det(x)] = true;
      found = found | group.witnesses(x);
    }
    if (std::count(dets.begin() + 1, dets.end(), true) != static_cast<std::ptrdiff_t>(p - 1)) return;
    ++result.full_determinant;
    if (!found.complete()) return;
    ++result.all_witnesses;
    if (members.size() != n) {
      SubgroupCounterexample ce{{}, members.size()};
      for (std::uint32_t g : gens) ce.generators.push_back(group.elements()[g]);
      result.counterexamples.push_back(std::move(ce));
    }
  };

  for (std::uint32_t g : cyclic_gens) examine({g});
  for (std::size_t i = 0; i < cyclic_gens.size(); ++i)
    for (std::size_t k = i + 1; k < cyclic_gens.size(); ++k) {
      if (has_bit(cyclic_bits[i], cyclic_gens[k]) || has_bit(cyclic_bits[k], cyclic_gens[i])) continue;
      examine({cyclic_gens[i], cyclic_gens[k]});
    }
  return result;
}

}  // namespace isc
