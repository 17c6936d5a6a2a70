#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "isc/arith.hpp"
#include "isc/galois.hpp"
#include "isc/trace_cache.hpp"

namespace isc {

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::uint64_t p_min = 38;
  std::uint64_t p_max = 500;
  std::uint64_t l_bound = 10'000;
  std::filesystem::path trace_cache_path = "traces.txt";
  std::filesystem::path output_path = "report.json";
  OutputFormat output_format = OutputFormat::Json;
  std::uint64_t bsgs_threshold = 4096;
  unsigned jobs = 1;

  /// Requires 37 < p_min <= p_max and l_bound >= 100.
  void validate() const;
};

/// A candidate j-invariant with every isogeny degree r whose S_r contains it.
struct Candidate {
  BigRational j;
  std::vector<int> sources;
};

struct CandidateReport {
  BigRational j;
  std::vector<int> source_r;
  bool cm = false;
  std::vector<std::uint64_t> certified_primes;
  std::vector<std::uint64_t> inconclusive_primes;
  /// One-sided evidence at the isogeny degrees 5 <= r <= 37 (missing
  /// witnesses are not a proof of non-surjectivity).
  std::map<std::uint64_t, WitnessState> small_p_evidence;
  /// Witness scan for every p in range, certified or not.
  std::map<std::uint64_t, WitnessState> witnesses;

  friend bool operator==(const CandidateReport&, const CandidateReport&) = default;
};

struct CertReport {
  std::uint64_t p_min = 0;
  std::uint64_t p_max = 0;
  std::uint64_t l_bound = 0;
  std::uint64_t bsgs_threshold = 0;
  std::vector<CandidateReport> candidates;

  /// Every non-CM candidate certified at every p in range.
  bool theorem_verified() const;
  friend bool operator==(const CertReport&, const CertReport&) = default;
};

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitOperationalError = 1;
inline constexpr int kExitInconclusive = 2;

/// Union of S_r ∩ Z for the genus-zero r and the known S_11, S_17, S_37,
/// ascending by j, each tagged with all of its sources.
std::vector<Candidate> collect_candidate_j();

/// Certifies every non-CM candidate for each prime in [p_min, p_max] and
/// gathers small-p evidence. CM candidates are never scanned. Traces are
/// read from and written to `cache`, which is flushed before returning.
CertReport verify_theorem(const RunConfig& cfg, TraceCache& cache);

int exit_status(const CertReport& report);

nlohmann::ordered_json report_to_json(const CertReport& report);
CertReport report_from_json(const nlohmann::json& doc);
/// One row per (non-CM j, p): j,p,status,l_split,l_nonsplit,l_exceptional.
std::string report_to_csv(const CertReport& report);

/// Serialises in cfg.output_format and atomically replaces cfg.output_path.
void write_report(const CertReport& report, const RunConfig& cfg);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace isc
