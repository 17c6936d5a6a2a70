// Command-line front end: verify-theorem, enumerate, certify, reduction.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "isc/curves.hpp"
#include "isc/galois.hpp"
#include "isc/modcurve.hpp"
#include "isc/pipeline.hpp"
#include "isc/reduction.hpp"

namespace {

using isc::BigRational;
using ojson = nlohmann::ordered_json;

std::string resolve_cache_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("ISC_TRACE_CACHE"); env && *env) return env;
  return "./traces.txt";
}

ojson witness_json(const isc::WitnessState& s) {
  auto opt = [](const std::optional<std::uint64_t>& v) { return v ? ojson(*v) : ojson(nullptr); };
  ojson missing = ojson::array();
  for (auto t : s.missing()) missing.push_back(std::string(isc::to_string(t)));
  return {{"p", s.p},
          {"certified", s.complete()},
          {"split_ev", opt(s.split_ev)},
          {"nonsplit_ev", opt(s.nonsplit_ev)},
          {"exceptional_ev", opt(s.exceptional_ev)},
          {"scanned_bound", s.scanned_bound},
          {"missing", missing}};
}

int run_verify(const isc::RunConfig& cfg) {
  isc::TraceCache cache(cfg.trace_cache_path);
  const isc::CertReport report = isc::verify_theorem(cfg, cache);
  isc::write_report(report, cfg);
  std::size_t cm = 0, certified = 0;
  for (const auto& c : report.candidates) {
    if (c.cm) ++cm;
    else if (c.inconclusive_primes.empty()) ++certified;
  }
  std::cout << "candidates: " << report.candidates.size() << " (CM skipped: " << cm << ", fully certified: " << certified
            << ", with inconclusive primes: " << report.candidates.size() - cm - certified << ")\n"
            << "p range: [" << cfg.p_min << ", " << cfg.p_max << "], l bound: " << cfg.l_bound << '\n'
            << "report: " << cfg.output_path.string() << '\n'
            << (report.theorem_verified() ? "verified" : "inconclusive") << '\n';
  return isc::exit_status(report);
}

int run_enumerate(int r, const std::string& format) {
  const auto set = isc::enumerate_integral_j(r);
  if (format == "json") {
    ojson values = ojson::array();
    for (const auto& v : set.values) values.push_back(v.get_str());
    std::cout << ojson{{"r", r}, {"values", values}}.dump() << '\n';
  } else {
    for (const auto& v : set.values) std::cout << v.get_str() << '\n';
  }
  return isc::kExitSuccess;
}

int run_certify(const std::string& j_text, std::uint64_t pmin, std::uint64_t pmax, std::uint64_t lbound,
                const std::string& cache_path, std::uint64_t threshold) {
  const BigRational j = BigRational::parse(j_text);
  if (isc::is_cm(j)) {
    std::cerr << "error: j = " << j.to_string() << " has complex multiplication; nothing to certify\n";
    return isc::kExitOperationalError;
  }
  if (pmin < 5) throw std::invalid_argument("p too small for witness criteria");
  isc::TraceCache cache(cache_path);
  isc::TraceOptions opts;
  opts.bsgs_threshold = threshold;
  isc::FrobeniusTracer tracer(isc::curve_from_j(j), cache, opts);
  ojson primes = ojson::array();
  bool all = true;
  for (std::uint64_t p : isc::primes_up_to(static_cast<std::int64_t>(pmax))) {
    if (p < pmin) continue;
    const auto cert = isc::certify_surjective(tracer, p, lbound);
    all = all && cert.certified;
    primes.push_back(witness_json(cert.state));
  }
  cache.flush();
  std::cout << ojson{{"j", j.id()}, {"l_bound", lbound}, {"all_certified", all}, {"primes", primes}}.dump(2) << '\n';
  return all ? isc::kExitSuccess : isc::kExitInconclusive;
}

int run_reduction(const std::string& j_text, std::uint64_t p) {
  const BigRational j = BigRational::parse(j_text);
  const auto profile = isc::reduction_profile(j);
  const auto verdict = isc::integrality_upgrade(j, p);
  ojson doc{{"j", j.id()},
            {"p", p},
            {"denominator_primes", profile.denominator_primes},
            {"is_integral", profile.is_integral},
            {"integral_away_from", profile.integral_away_from ? ojson(*profile.integral_away_from) : ojson(nullptr)},
            {"verdict", std::string(isc::to_string(verdict))}};
  std::cout << doc.dump(2) << '\n';
  return isc::kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral j-invariant enumeration and mod-p surjectivity certification"};
  app.require_subcommand(1);

  isc::RunConfig cfg;
  std::string cache_flag, format = "json";
  auto* verify = app.add_subcommand("verify-theorem", "certify every non-CM candidate j for all p in range");
  verify->add_option("--pmin", cfg.p_min, "smallest p (must exceed 37)")->capture_default_str();
  verify->add_option("--pmax", cfg.p_max, "largest p")->capture_default_str();
  verify->add_option("--lbound", cfg.l_bound, "largest Frobenius prime l to scan")->capture_default_str();
  verify->add_option("--out", cfg.output_path, "report path")->capture_default_str();
  verify->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  verify->add_option("--trace-cache", cache_flag, "trace cache file (default $ISC_TRACE_CACHE or ./traces.txt)");
  verify->add_option("--bsgs-threshold", cfg.bsgs_threshold, "use baby-step giant-step for l >= this")
      ->capture_default_str();
  verify->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();

  int r = 0;
  std::string enum_format = "text";
  auto* enumerate = app.add_subcommand("enumerate", "print S_r ∩ Z for a genus-zero r");
  enumerate->add_option("--r", r, "isogeny degree")->required()->check(CLI::IsMember({2, 3, 5, 7, 13}));
  enumerate->add_option("--format", enum_format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string j_text;
  std::uint64_t pmin = 38, pmax = 500, lbound = 10'000, threshold = 4096;
  auto* certify = app.add_subcommand("certify", "certify surjectivity of one j for a range of p");
  certify->add_option("--j", j_text, "j-invariant as num[/den]")->required();
  certify->add_option("--pmin", pmin)->capture_default_str();
  certify->add_option("--pmax", pmax)->capture_default_str();
  certify->add_option("--lbound", lbound)->capture_default_str();
  certify->add_option("--trace-cache", cache_flag, "trace cache file (default $ISC_TRACE_CACHE or ./traces.txt)");
  certify->add_option("--bsgs-threshold", threshold)->capture_default_str();

  std::uint64_t p = 0;
  auto* reduction = app.add_subcommand("reduction", "reduction profile and integrality verdict");
  reduction->add_option("--j", j_text, "j-invariant as num[/den]")->required();
  reduction->add_option("--p", p, "prime p")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : isc::kExitOperationalError;
  }

  try {
    if (*verify) {
      cfg.trace_cache_path = resolve_cache_path(cache_flag);
      cfg.output_format = format == "csv" ? isc::OutputFormat::Csv : isc::OutputFormat::Json;
      return run_verify(cfg);
    }
    if (*enumerate) return run_enumerate(r, enum_format);
    if (*certify) return run_certify(j_text, pmin, pmax, lbound, resolve_cache_path(cache_flag), threshold);
    if (*reduction) return run_reduction(j_text, p);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return isc::kExitOperationalError;
  }
  return isc::kExitOperationalError;
}
