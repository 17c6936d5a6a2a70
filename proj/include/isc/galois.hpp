#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "isc/arith.hpp"
#include "isc/trace_cache.hpp"

namespace isc {

/// Frobenius data that rules out one class of maximal subgroups of GL_2(F_p).
enum class WitnessType : std::uint8_t {
  SplitEv = 1,        // t != 0, t^2 - 4d a nonzero square: outside every N_ns
  NonsplitEv = 2,     // t != 0, t^2 - 4d a non-square: outside every Borel and N_sp
  ExceptionalEv = 4,  // projective order > 5: outside the A4/S4/A5 groups
};

inline constexpr WitnessType kAllWitnessTypes[] = {WitnessType::SplitEv, WitnessType::NonsplitEv,
                                                    WitnessType::ExceptionalEv};

std::string_view to_string(WitnessType type);

class WitnessSet {
 public:
  constexpr WitnessSet() = default;
  constexpr bool contains(WitnessType t) const { return bits_ & static_cast<std::uint8_t>(t); }
  constexpr void insert(WitnessType t) { bits_ |= static_cast<std::uint8_t>(t); }
  constexpr bool complete() const { return bits_ == 7; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr WitnessSet operator|(WitnessSet o) const { return WitnessSet(bits_ | o.bits_); }
  friend constexpr bool operator==(WitnessSet, WitnessSet) = default;

 private:
  constexpr explicit WitnessSet(int bits) : bits_(static_cast<std::uint8_t>(bits)) {}
  std::uint8_t bits_ = 0;
};

/// Witness types realised by an element of GL_2(F_p) with trace t and
/// determinant d. With u = t^2/d, ExceptionalEv needs u outside {0, 1, 2, 4}
/// and u^2 - 3u + 1 != 0 (projective orders 2, 3, 4, 1 and 5 respectively).
WitnessSet classify_witness(const FpElem& trace, const FpElem& det);
/// Same predicates on raw residues; p >= 5 and d != 0 mod p assumed.
WitnessSet classify_witness_raw(std::uint64_t t, std::uint64_t d, std::uint64_t p);

struct WitnessState {
  std::uint64_t p = 0;
  std::optional<std::uint64_t> split_ev;
  std::optional<std::uint64_t> nonsplit_ev;
  std::optional<std::uint64_t> exceptional_ev;
  std::uint64_t scanned_bound = 0;

  bool complete() const { return split_ev && nonsplit_ev && exceptional_ev; }
  std::optional<std::uint64_t> witness(WitnessType type) const;
  std::vector<WitnessType> missing() const;
  friend bool operator==(const WitnessState&, const WitnessState&) = default;
};

struct Certification {
  bool certified = false;  // false means inconclusive, never "not surjective"
  WitnessState state;
};

/// Scans primes l <= l_bound in ascending order, skipping the model's skip set
/// and p itself, and records the first l realising each witness type from
/// t = a_l mod p and d = l mod p. A complete state certifies that the mod-p
/// image is GL_2(F_p): the determinant is surjective, and each maximal proper
/// subgroup with surjective determinant misses one witness type.
Certification certify_surjective(FrobeniusTracer& tracer, std::uint64_t p, std::uint64_t l_bound);
Certification certify_surjective(const BigRational& j, std::uint64_t p, std::uint64_t l_bound, TraceCache& cache,
                                 const TraceOptions& opts = {});

/// Same scan, returning the partial state regardless of completeness.
WitnessState evidence_profile(FrobeniusTracer& tracer, std::uint64_t p, std::uint64_t l_bound);
WitnessState evidence_profile(const BigRational& j, std::uint64_t p, std::uint64_t l_bound, TraceCache& cache,
                              const TraceOptions& opts = {});

/// First l <= l_bound (ascending, skip set and p excluded) whose Frobenius
/// characteristic polynomial x^2 - a_l x + l is irreducible mod p. Defined
/// for every prime p, including 2 and 3; a rational p-isogeny means there is
/// none. For p >= 5 every NonsplitEv witness is such an l.
std::optional<std::uint64_t> first_irreducible_frobenius(FrobeniusTracer& tracer, std::uint64_t p,
                                                         std::uint64_t l_bound);

}  // namespace isc
