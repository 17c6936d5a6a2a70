#include "isc/galois.hpp"

#include <stdexcept>

#include "isc/curves.hpp"

namespace isc {

std::string_view to_string(WitnessType type) {
  switch (type) {
    case WitnessType::SplitEv: return "SplitEv";
    case WitnessType::NonsplitEv: return "NonsplitEv";
    case WitnessType::ExceptionalEv: return "ExceptionalEv";
  }
  return "unknown";
}

WitnessSet classify_witness_raw(std::uint64_t t, std::uint64_t d, std::uint64_t p) {
  WitnessSet out;
  if (t != 0) {
    const std::uint64_t disc = submod(mulmod(t, t, p), mulmod(4, d, p), p);
    if (disc != 0) out.insert(powmod(disc, (p - 1) / 2, p) == 1 ? WitnessType::SplitEv : WitnessType::NonsplitEv);
  }
  const std::uint64_t u = mulmod(mulmod(t, t, p), invmod(d, p), p);
  const bool small_order = u == 0 || u == 1 || u == 2 || u == 4 ||
                           addmod(submod(mulmod(u, u, p), mulmod(3, u, p), p), 1, p) == 0;
  if (!small_order) out.insert(WitnessType::ExceptionalEv);
  return out;
}

WitnessSet classify_witness(const FpElem& trace, const FpElem& det) {
  if (trace.modulus() != det.modulus()) throw std::domain_error("mixed moduli");
  if (trace.modulus() < 5) throw std::domain_error("p too small for witness criteria");
  if (det.is_zero()) throw std::domain_error("degenerate determinant");
  return classify_witness_raw(trace.value(), det.value(), trace.modulus());
}

std::optional<std::uint64_t> WitnessState::witness(WitnessType type) const {
  switch (type) {
    case WitnessType::SplitEv: return split_ev;
    case WitnessType::NonsplitEv: return nonsplit_ev;
    case WitnessType::ExceptionalEv: return exceptional_ev;
  }
  return std::nullopt;
}

std::vector<WitnessType> WitnessState::missing() const {
  std::vector<WitnessType> out;
  for (WitnessType type : kAllWitnessTypes)
    if (!witness(type)) out.push_back(type);
  return out;
}

namespace {

WitnessState scan(FrobeniusTracer& tracer, std::uint64_t p, std::uint64_t l_bound) {
  if (p < 5) throw std::domain_error("p too small for witness criteria");
  if (!is_prime(p)) throw std::domain_error("p is not prime");
  WitnessState state{p, {}, {}, {}, l_bound};
  const auto sp = static_cast<std::int64_t>(p);
  for (std::uint64_t ell : primes_up_to(static_cast<std::int64_t>(l_bound))) {
    if (ell == p || !tracer.usable(ell)) continue;
    const std::int64_t a = tracer.trace(ell);
    const auto t = static_cast<std::uint64_t>(((a % sp) + sp) % sp);
    const WitnessSet found = classify_witness_raw(t, ell % p, p);
    if (found.contains(WitnessType::SplitEv) && !state.split_ev) state.split_ev = ell;
    if (found.contains(WitnessType::NonsplitEv) && !state.nonsplit_ev) state.nonsplit_ev = ell;
    if (found.contains(WitnessType::ExceptionalEv) && !state.exceptional_ev) state.exceptional_ev = ell;
    if (state.complete()) {
      state.scanned_bound = ell;
      break;
    }
  }
  return state;
}

}  // namespace

Certification certify_surjective(FrobeniusTracer& tracer, std::uint64_t p, std::uint64_t l_bound) {
  WitnessState state = scan(tracer, p, l_bound);
  return {state.complete(), state};
}

Certification certify_surjective(const BigRational& j, std::uint64_t p, std::uint64_t l_bound, TraceCache& cache,
                                 const TraceOptions& opts) {
  FrobeniusTracer tracer(curve_from_j(j), cache, opts);
  return certify_surjective(tracer, p, l_bound);
}

WitnessState evidence_profile(FrobeniusTracer& tracer, std::uint64_t p, std::uint64_t l_bound) {
  return scan(tracer, p, l_bound);
}

WitnessState evidence_profile(const BigRational& j, std::uint64_t p, std::uint64_t l_bound, TraceCache& cache,
                              const TraceOptions& opts) {
  FrobeniusTracer tracer(curve_from_j(j), cache, opts);
  return evidence_profile(tracer, p, l_bound);
}

std::optional<std::uint64_t> first_irreducible_frobenius(FrobeniusTracer& tracer, std::uint64_t p,
                                                         std::uint64_t l_bound) {
  if (!is_prime(p)) throw std::domain_error("p is not prime");
  const auto sp = static_cast<std::int64_t>(p);
  for (std::uint64_t ell : primes_up_to(static_cast<std::int64_t>(l_bound))) {
    if (ell == p || !tracer.usable(ell)) continue;
    const auto t = static_cast<std::uint64_t>(((tracer.trace(ell) % sp) + sp) % sp);
    const std::uint64_t d = ell % p;
    bool irreducible;
    if (p == 2) {
      irreducible = t == 1 && d == 1;  // x^2 + x + 1
    } else {
      const std::uint64_t disc = submod(mulmod(t, t, p), mulmod(4 % p, d, p), p);
      irreducible = disc != 0 && powmod(disc, (p - 1) / 2, p) == p - 1;
    }
    if (irreducible) return ell;
  }
  return std::nullopt;
}

}  // namespace isc
