#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <set>

#include "isc/gl2_oracle.hpp"

using namespace isc;

namespace {

GroupElem22 mul(const GroupElem22& x, const GroupElem22& y, std::uint32_t p) {
  return {(x.a * y.a + x.b * y.c) % p, (x.a * y.b + x.b * y.d) % p, (x.c * y.a + x.d * y.c) % p,
          (x.c * y.b + x.d * y.d) % p};
}

GroupElem22 inverse(const GroupElem22& g, std::uint32_t p) {
  const std::uint32_t det = (g.a * g.d + p * p - g.b * g.c % p) % p;
  const auto inv = static_cast<std::uint32_t>(invmod(det, p));
  return {g.d * inv % p, (p - g.b) * inv % p, (p - g.c) * inv % p, g.a * inv % p};
}

bool is_scalar(const GroupElem22& g) { return g.b == 0 && g.c == 0 && g.a == g.d; }

int projective_order(GroupElem22 g, std::uint32_t p) {
  GroupElem22 x = g;
  for (int k = 1; k < 1000; ++k) {
    if (is_scalar(x)) return k;
    x = mul(x, g, p);
  }
  return -1;
}

std::set<GroupElem22> union_of_conjugates(const std::vector<GroupElem22>& h, std::uint32_t p) {
  std::set<GroupElem22> out;
  const SmallGL2 group(p);
  for (const auto& g : group.elements())
    for (const auto& x : h) out.insert(mul(mul(g, x, p), inverse(g, p), p));
  return out;
}

}  // namespace

TEST_CASE("subgroup_closure") {
  CHECK(subgroup_closure({GroupElem22{}}, 5) == std::vector<GroupElem22>{GroupElem22{}});
  CHECK(subgroup_closure({{2, 0, 0, 1}, {1, 1, 0, 1}, {0, 4, 1, 0}}, 5).size() == 480);
  CHECK(subgroup_closure({{2, 0, 0, 3}}, 5).size() == 4);
  CHECK(SmallGL2(7).order() == 2016);
  CHECK_THROWS(subgroup_closure({GroupElem22{}}, 11));
  CHECK_THROWS(subgroup_closure({{1, 1, 1, 1}}, 5));
}

TEST_CASE("standard subgroups are closed and have the expected orders") {
  for (std::uint32_t p : {5u, 7u}) {
    const auto borel = borel_subgroup(p);
    const auto nsp = split_cartan_normalizer(p);
    const auto nns = nonsplit_cartan_normalizer(p);
    CHECK(borel.size() == p * (p - 1) * (p - 1));
    CHECK(nsp.size() == 2 * (p - 1) * (p - 1));
    CHECK(nns.size() == 2 * (p * p - 1));
    CHECK(subgroup_closure(borel, p) == borel);
    CHECK(subgroup_closure(nsp, p) == nsp);
    CHECK(subgroup_closure(nns, p) == nns);
  }
}

TEST_CASE("each witness type avoids the subgroup class it rules out") {
  for (std::uint32_t p : {5u, 7u}) {
    for (const auto& g : union_of_conjugates(nonsplit_cartan_normalizer(p), p))
      CHECK_FALSE(witness_types_of(g, p).contains(WitnessType::SplitEv));
    for (const auto& g : union_of_conjugates(borel_subgroup(p), p))
      CHECK_FALSE(witness_types_of(g, p).contains(WitnessType::NonsplitEv));
    for (const auto& g : union_of_conjugates(split_cartan_normalizer(p), p))
      CHECK_FALSE(witness_types_of(g, p).contains(WitnessType::NonsplitEv));
    const SmallGL2 group(p);
    for (const auto& g : group.elements())
      if (witness_types_of(g, p).contains(WitnessType::ExceptionalEv)) CHECK(projective_order(g, p) > 5);
  }
}

TEST_CASE("verify_witness_lemma finds no counterexamples at p = 5 and 7") {
  for (std::uint32_t p : {5u, 7u}) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = verify_witness_lemma(p);
    const auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    MESSAGE("p=" << p << " subgroups=" << result.subgroups_tested << " full det=" << result.full_determinant
                 << " all witnesses=" << result.all_witnesses << " in " << seconds << "s");
    CHECK(result.verified());
    CHECK(result.subgroups_tested > 10);
    CHECK(result.all_witnesses >= 1);  // GL_2 itself
    CHECK(seconds < 60);
  }
  CHECK_THROWS(verify_witness_lemma(11));
}
