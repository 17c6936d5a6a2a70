#include "isc/trace_cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace isc {

TraceCache::TraceCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(*path_);
  if (!in) {
    if (std::filesystem::exists(*path_)) throw std::runtime_error("cannot read trace cache " + path_->string());
    return;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    TraceRecord rec;
    std::string extra;
    if (!(fields >> rec.j_id >> rec.prime >> rec.trace) || (fields >> extra))
      throw std::runtime_error("malformed trace cache line " + std::to_string(line_no) + " in " + path_->string());
    if (!within_hasse_bound(rec.trace, rec.prime))
      throw std::runtime_error("trace cache line " + std::to_string(line_no) + " violates the Hasse bound");
    auto [it, inserted] = table_[rec.j_id].emplace(rec.prime, rec.trace);
    if (!inserted && it->second != rec.trace)
      throw std::runtime_error("conflicting trace cache records for " + rec.j_id + " at l=" + std::to_string(rec.prime));
  }
}

std::optional<std::int64_t> TraceCache::lookup(const std::string& j_id, std::uint64_t prime) const {
  std::shared_lock lock(mutex_);
  auto row = table_.find(j_id);
  if (row == table_.end()) return std::nullopt;
  auto it = row->second.find(prime);
  if (it == row->second.end()) return std::nullopt;
  return it->second;
}

void TraceCache::insert(const TraceRecord& record) {
  if (!within_hasse_bound(record.trace, record.prime))
    throw std::logic_error("trace " + std::to_string(record.trace) + " at l=" + std::to_string(record.prime) +
                           " violates the Hasse bound");
  std::unique_lock lock(mutex_);
  auto [it, inserted] = table_[record.j_id].emplace(record.prime, record.trace);
  if (!inserted) {
    if (it->second != record.trace) throw std::logic_error("conflicting trace for " + record.j_id);
    return;
  }
  pending_.push_back(record);
}

void TraceCache::flush() {
  std::unique_lock lock(mutex_);
  if (!path_ || pending_.empty()) return;
  std::sort(pending_.begin(), pending_.end(), [](const TraceRecord& x, const TraceRecord& y) {
    return std::tie(x.j_id, x.prime) < std::tie(y.j_id, y.prime);
  });
  std::ofstream out(*path_, std::ios::app);
  for (const auto& rec : pending_) out << rec.j_id << ' ' << rec.prime << ' ' << rec.trace << '\n';
  out.flush();
  if (!out) throw std::runtime_error("cannot write trace cache " + path_->string());
  pending_.clear();
}

std::size_t TraceCache::size() const {
  std::shared_lock lock(mutex_);
  std::size_t n = 0;
  for (const auto& [id, row] : table_) n += row.size();
  return n;
}

std::size_t TraceCache::pending() const {
  std::shared_lock lock(mutex_);
  return pending_.size();
}

std::vector<TraceRecord> TraceCache::records() const {
  std::shared_lock lock(mutex_);
  std::vector<TraceRecord> out;
  for (const auto& [id, row] : table_)
    for (const auto& [prime, trace] : row) out.push_back({id, prime, trace});
  std::sort(out.begin(), out.end(),
            [](const TraceRecord& x, const TraceRecord& y) { return std::tie(x.j_id, x.prime) < std::tie(y.j_id, y.prime); });
  return out;
}

std::int64_t compute_trace(const ReducedCurve& curve, const TraceOptions& opts) {
  const auto p = static_cast<std::int64_t>(curve.prime);
  std::uint64_t order;
  if (curve.prime < 5) {
    order = count_points_naive(curve);
  } else if (curve.prime < opts.bsgs_threshold) {
    order = count_points_legendre(curve);
  } else {
    order = count_points_bsgs(curve, opts.bsgs).value_or(0);
    if (order == 0) order = count_points_legendre(curve);
  }
  return p + 1 - static_cast<std::int64_t>(order);
}

FrobeniusTracer::FrobeniusTracer(CurveModel model, TraceCache& cache, TraceOptions opts)
    : model_(std::move(model)), skip_(model_), j_id_(model_.j.id()), cache_(&cache), opts_(opts) {}

std::int64_t FrobeniusTracer::trace(std::uint64_t prime) {
  if (skip_.contains(prime)) throw std::domain_error("skipped prime");
  if (auto hit = cache_->lookup(j_id_, prime)) return *hit;
  const std::int64_t value = compute_trace(reduce_curve(model_, skip_, prime), opts_);
  ++computations_;
  cache_->insert({j_id_, prime, value});
  return value;
}

std::int64_t trace_of_frobenius(const CurveModel& model, std::uint64_t prime, TraceCache& cache,
                                const TraceOptions& opts) {
  return FrobeniusTracer(model, cache, opts).trace(prime);
}

}  // namespace isc
