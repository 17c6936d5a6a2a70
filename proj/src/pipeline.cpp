#include "isc/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "isc/curves.hpp"
#include "isc/modcurve.hpp"

namespace isc {

void RunConfig::validate() const {
  if (p_min <= 37) throw std::invalid_argument("p_min must exceed 37");
  if (p_min > p_max) throw std::invalid_argument("p_min must not exceed p_max");
  if (l_bound < 100) throw std::invalid_argument("l_bound must be at least 100");
  if (l_bound > FpElem::kMaxModulus || p_max > FpElem::kMaxModulus) throw std::invalid_argument("bound too large");
  if (jobs == 0) throw std::invalid_argument("jobs must be positive");
}

bool CertReport::theorem_verified() const {
  return std::all_of(candidates.begin(), candidates.end(),
                     [](const CandidateReport& c) { return c.cm || c.inconclusive_primes.empty(); });
}

int exit_status(const CertReport& report) { return report.theorem_verified() ? kExitSuccess : kExitInconclusive; }

std::vector<Candidate> collect_candidate_j() {
  std::map<BigRational, std::vector<int>> sources;
  for (int r : kGenusZeroDegrees)
    for (const BigInt& v : enumerate_integral_j(r).values) sources[BigRational(v)].push_back(r);
  for (const auto& [r, values] : known_sets())
    for (const BigRational& j : values) sources[j].push_back(r);
  std::vector<Candidate> out;
  for (auto& [j, rs] : sources) {
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    out.push_back({j, rs});
  }
  return out;
}

namespace {

CandidateReport certify_candidate(const Candidate& cand, const RunConfig& cfg, const std::vector<std::uint64_t>& ps,
                                  TraceCache& cache) {
  CandidateReport rep;
  rep.j = cand.j;
  rep.source_r = cand.sources;
  rep.cm = is_cm(cand.j);
  if (rep.cm) return rep;

  TraceOptions opts;
  opts.bsgs_threshold = cfg.bsgs_threshold;
  FrobeniusTracer tracer(curve_from_j(cand.j), cache, opts);
  for (std::uint64_t p : ps) {
    const Certification cert = certify_surjective(tracer, p, cfg.l_bound);
    (cert.certified ? rep.certified_primes : rep.inconclusive_primes).push_back(p);
    rep.witnesses.emplace(p, cert.state);
  }
  for (int r : cand.sources)
    if (r >= 5 && r <= 37) rep.small_p_evidence.emplace(r, evidence_profile(tracer, r, cfg.l_bound));
  return rep;
}

}  // namespace

CertReport verify_theorem(const RunConfig& cfg, TraceCache& cache) {
  cfg.validate();
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p : primes_up_to(static_cast<std::int64_t>(cfg.p_max)))
    if (p >= cfg.p_min) ps.push_back(p);

  const auto candidates = collect_candidate_j();
  CertReport report{cfg.p_min, cfg.p_max, cfg.l_bound, cfg.bsgs_threshold, {}};
  report.candidates.resize(candidates.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++) {
      try {
        report.candidates[i] = certify_candidate(candidates[i], cfg, ps, cache);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = std::min<unsigned>(cfg.jobs, static_cast<unsigned>(candidates.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  cache.flush();
  return report;
}

// ---------------------------------------------------------------------------
// Serialisation. j values are canonical "num/den" strings.

namespace {

using ojson = nlohmann::ordered_json;

ojson optional_prime(const std::optional<std::uint64_t>& ell) { return ell ? ojson(*ell) : ojson(nullptr); }

std::optional<std::uint64_t> read_optional_prime(const nlohmann::json& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<std::uint64_t>();
}

ojson state_to_json(const WitnessState& s) {
  ojson out;
  out["split_ev"] = optional_prime(s.split_ev);
  out["nonsplit_ev"] = optional_prime(s.nonsplit_ev);
  out["exceptional_ev"] = optional_prime(s.exceptional_ev);
  out["scanned_bound"] = s.scanned_bound;
  ojson missing = ojson::array();
  for (WitnessType t : s.missing()) missing.push_back(std::string(to_string(t)));
  out["missing"] = missing;
  return out;
}

WitnessState state_from_json(std::uint64_t p, const nlohmann::json& v) {
  return {p, read_optional_prime(v.at("split_ev")), read_optional_prime(v.at("nonsplit_ev")),
          read_optional_prime(v.at("exceptional_ev")), v.at("scanned_bound").get<std::uint64_t>()};
}

}  // namespace

nlohmann::ordered_json report_to_json(const CertReport& report) {
  ojson doc;
  doc["config"] = {{"p_min", report.p_min},
                   {"p_max", report.p_max},
                   {"l_bound", report.l_bound},
                   {"bsgs_threshold", report.bsgs_threshold}};
  doc["candidate_count"] = report.candidates.size();
  doc["cm_count"] = std::count_if(report.candidates.begin(), report.candidates.end(),
                                  [](const CandidateReport& c) { return c.cm; });
  doc["theorem_verified"] = report.theorem_verified();
  ojson candidates = ojson::array();
  for (const auto& c : report.candidates) {
    ojson entry;
    entry["j"] = c.j.id();
    entry["source_r"] = c.source_r;
    entry["cm"] = c.cm;
    entry["certified_primes"] = c.certified_primes;
    entry["inconclusive_primes"] = c.inconclusive_primes;
    ojson evidence = ojson::object();
    for (const auto& [p, s] : c.small_p_evidence) evidence[std::to_string(p)] = state_to_json(s);
    entry["small_p_evidence"] = evidence;
    ojson witnesses = ojson::object();
    for (const auto& [p, s] : c.witnesses) witnesses[std::to_string(p)] = state_to_json(s);
    entry["witnessing_l"] = witnesses;
    candidates.push_back(entry);
  }
  doc["candidates"] = candidates;
  return doc;
}

CertReport report_from_json(const nlohmann::json& doc) {
  CertReport report;
  const auto& cfg = doc.at("config");
  report.p_min = cfg.at("p_min").get<std::uint64_t>();
  report.p_max = cfg.at("p_max").get<std::uint64_t>();
  report.l_bound = cfg.at("l_bound").get<std::uint64_t>();
  report.bsgs_threshold = cfg.at("bsgs_threshold").get<std::uint64_t>();
  for (const auto& entry : doc.at("candidates")) {
    CandidateReport c;
    c.j = BigRational::parse(entry.at("j").get<std::string>());
    c.source_r = entry.at("source_r").get<std::vector<int>>();
    c.cm = entry.at("cm").get<bool>();
    c.certified_primes = entry.at("certified_primes").get<std::vector<std::uint64_t>>();
    c.inconclusive_primes = entry.at("inconclusive_primes").get<std::vector<std::uint64_t>>();
    for (const auto& [key, v] : entry.at("small_p_evidence").items()) {
      const auto p = std::stoull(key);
      c.small_p_evidence.emplace(p, state_from_json(p, v));
    }
    for (const auto& [key, v] : entry.at("witnessing_l").items()) {
      const auto p = std::stoull(key);
      c.witnesses.emplace(p, state_from_json(p, v));
    }
    report.candidates.push_back(std::move(c));
  }
  return report;
}

std::string report_to_csv(const CertReport& report) {
  auto cell = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  std::ostringstream out;
  out << "j,p,status,l_split,l_nonsplit,l_exceptional\n";
  for (const auto& c : report.candidates) {
    if (c.cm) continue;
    for (const auto& [p, s] : c.witnesses) {
      out << c.j.id() << ',' << p << ',' << (s.complete() ? "certified" : "inconclusive") << ',' << cell(s.split_ev)
          << ',' << cell(s.nonsplit_ev) << ',' << cell(s.exceptional_ev) << '\n';
    }
  }
  return out.str();
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot replace " + path.string() + ": " + ec.message());
  }
}

void write_report(const CertReport& report, const RunConfig& cfg) {
  const std::string body =
      cfg.output_format == OutputFormat::Json ? report_to_json(report).dump(2) + "\n" : report_to_csv(report);
  write_file_atomically(cfg.output_path, body);
}

}  // namespace isc
