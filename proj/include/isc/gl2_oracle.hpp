#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "isc/galois.hpp"

namespace isc {

/// A matrix [[a, b], [c, d]] over F_p with nonzero determinant.
struct GroupElem22 {
  std::uint32_t a = 1, b = 0, c = 0, d = 1;
  friend auto operator<=>(const GroupElem22&, const GroupElem22&) = default;
};

/// GL_2(F_p) for the exhaustible primes p in {5, 7}, with a dense element
/// numbering and a precomputed multiplication table.
class SmallGL2 {
 public:
  explicit SmallGL2(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElem22>& elements() const { return elements_; }

  std::uint32_t index_of(const GroupElem22& g) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return table_[x * elements_.size() + y]; }
  std::uint32_t det(std::uint32_t x) const { return dets_[x]; }
  WitnessSet witnesses(std::uint32_t x) const { return witnesses_[x]; }
  std::uint32_t identity() const { return identity_; }

  /// Breadth-first closure of the generators under multiplication; sorted indices.
  std::vector<std::uint32_t> closure(const std::vector<std::uint32_t>& gens) const;

 private:
  std::uint32_t p_;
  std::uint32_t identity_ = 0;
  std::vector<GroupElem22> elements_;
  std::vector<std::uint32_t> slot_;  // packed entries -> dense index
  std::vector<std::uint16_t> table_;
  std::vector<std::uint32_t> dets_;
  std::vector<WitnessSet> witnesses_;
};

/// Subgroup generated by `gens` inside GL_2(F_p), p in {5, 7}; sorted.
std::vector<GroupElem22> subgroup_closure(const std::vector<GroupElem22>& gens, std::uint32_t p);

WitnessSet witness_types_of(const GroupElem22& g, std::uint32_t p);

std::vector<GroupElem22> borel_subgroup(std::uint32_t p);
std::vector<GroupElem22> split_cartan_normalizer(std::uint32_t p);
std::vector<GroupElem22> nonsplit_cartan_normalizer(std::uint32_t p);

struct SubgroupCounterexample {
  std::vector<GroupElem22> generators;
  std::size_t order = 0;
};

struct SubgroupOracleResult {
  std::uint32_t p = 0;
  std::size_t subgroups_tested = 0;        // distinct closures enumerated
  std::size_t full_determinant = 0;        // of which det(G) = F_p^*
  std::size_t all_witnesses = 0;           // of which realise all three witness types
  std::vector<SubgroupCounterexample> counterexamples;
  bool verified() const { return counterexamples.empty(); }
};

/// Enumerates the subgroups generated by one or two elements of GL_2(F_p)
/// and checks that every one with full determinant and all three witness
/// types is the whole group.
SubgroupOracleResult verify_witness_lemma(std::uint32_t p);

}  // namespace isc
