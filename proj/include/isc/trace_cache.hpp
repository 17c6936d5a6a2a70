#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "isc/curves.hpp"

namespace isc {

struct TraceRecord {
  std::string j_id;
  std::uint64_t prime = 0;
  std::int64_t trace = 0;
  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

/// Persistent store of Frobenius traces keyed by (j_id, l).
///
/// The backing file is append-only text, one `<j_id> <l> <a_l>` record per
/// line. New records are buffered and appended by `flush()` sorted by
/// (j_id, l), so the file contents do not depend on the order in which
/// concurrent workers produced them. Lookups take a shared lock; inserts and
/// flushes take the exclusive lock.
class TraceCache {
 public:
  /// In-memory cache with no backing file.
  TraceCache() = default;
  /// Loads `path` if it exists; a missing file is an empty cache.
  explicit TraceCache(std::filesystem::path path);
  ~TraceCache() = default;

  TraceCache(const TraceCache&) = delete;
  TraceCache& operator=(const TraceCache&) = delete;

  std::optional<std::int64_t> lookup(const std::string& j_id, std::uint64_t prime) const;
  /// Rejects records violating the Hasse bound, and records that contradict
  /// an existing value for the same key.
  void insert(const TraceRecord& record);
  /// Appends buffered records to the backing file. No-op without a file.
  void flush();

  std::size_t size() const;
  std::size_t pending() const;
  std::vector<TraceRecord> records() const;
  const std::optional<std::filesystem::path>& path() const { return path_; }

 private:
  std::optional<std::filesystem::path> path_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::map<std::uint64_t, std::int64_t>> table_;
  std::vector<TraceRecord> pending_;
};

struct TraceOptions {
  std::uint64_t bsgs_threshold = 4096;
  BsgsOptions bsgs;
};

/// a_l = l + 1 - #E(F_l) for a reduced curve: Legendre sum below the
/// threshold, baby-step giant-step at or above it (falling back to the
/// Legendre sum when the group order stays ambiguous).
std::int64_t compute_trace(const ReducedCurve& curve, const TraceOptions& opts = {});

/// Frobenius traces of one curve model, read through and written to a cache.
class FrobeniusTracer {
 public:
  FrobeniusTracer(CurveModel model, TraceCache& cache, TraceOptions opts = {});

  /// Throws "skipped prime" for l in the skip set.
  std::int64_t trace(std::uint64_t prime);
  bool usable(std::uint64_t prime) const { return !skip_.contains(prime); }

  const CurveModel& model() const { return model_; }
  const SkipSet& skip() const { return skip_; }
  const std::string& j_id() const { return j_id_; }
  /// Traces computed rather than served from the cache.
  std::size_t computations() const { return computations_; }

 private:
  CurveModel model_;
  SkipSet skip_;
  std::string j_id_;
  TraceCache* cache_;
  TraceOptions opts_;
  std::size_t computations_ = 0;
};

std::int64_t trace_of_frobenius(const CurveModel& model, std::uint64_t prime, TraceCache& cache,
                                const TraceOptions& opts = {});

}  // namespace isc
