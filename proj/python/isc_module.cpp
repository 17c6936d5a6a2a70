#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "isc/curves.hpp"
#include "isc/galois.hpp"
#include "isc/gl2_oracle.hpp"
#include "isc/modcurve.hpp"
#include "isc/pipeline.hpp"
#include "isc/reduction.hpp"

namespace py = pybind11;

namespace {

// j-invariants cross the boundary as "num[/den]" strings and integers as
// Python ints (via their decimal form) so nothing is truncated.
py::int_ to_py(const isc::BigInt& v) { return py::int_(py::str(v.get_str())); }

std::vector<std::string> witness_names(isc::WitnessSet set) {
  std::vector<std::string> out;
  for (auto t : isc::kAllWitnessTypes)
    if (set.contains(t)) out.emplace_back(isc::to_string(t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_isc, m) {
  m.doc() = "Integral j-invariants on X_0(r) and trace-based mod-p surjectivity certificates";

  py::class_<isc::WitnessState>(m, "WitnessState")
      .def_readonly("p", &isc::WitnessState::p)
      .def_readonly("split_ev", &isc::WitnessState::split_ev)
      .def_readonly("nonsplit_ev", &isc::WitnessState::nonsplit_ev)
      .def_readonly("exceptional_ev", &isc::WitnessState::exceptional_ev)
      .def_readonly("scanned_bound", &isc::WitnessState::scanned_bound)
      .def("complete", &isc::WitnessState::complete)
      .def("missing", [](const isc::WitnessState& s) {
        std::vector<std::string> out;
        for (auto t : s.missing()) out.emplace_back(isc::to_string(t));
        return out;
      });

  py::class_<isc::TraceCache>(m, "TraceCache")
      .def(py::init<>())
      .def(py::init<std::filesystem::path>(), py::arg("path"))
      .def("flush", &isc::TraceCache::flush)
      .def("__len__", &isc::TraceCache::size);

  m.def("enumerate_integral_j", [](int r) {
    std::vector<py::int_> out;
    for (const auto& v : isc::enumerate_integral_j(r).values) out.push_back(to_py(v));
    return out;
  }, py::arg("r"));

  m.def("f_poly", [](int r) {
    std::vector<py::int_> out;
    for (const auto& c : isc::f_poly(r).coefficients) out.push_back(to_py(c));
    return out;
  }, py::arg("r"), "Coefficients of f(t), constant term first.");

  m.def("j_map", [](int r, const std::string& t) { return isc::j_map(r, isc::BigRational::parse(t)).to_string(); },
        py::arg("r"), py::arg("t"));

  m.def("known_sets", [] {
    std::map<int, std::vector<std::string>> out;
    for (const auto& [r, js] : isc::known_sets())
      for (const auto& j : js) out[r].push_back(j.to_string());
    return out;
  });

  m.def("is_cm", [](const std::string& j) { return isc::is_cm(isc::BigRational::parse(j)); }, py::arg("j"));

  m.def("trace_of_frobenius",
        [](const std::string& j, std::uint64_t ell, isc::TraceCache& cache) {
          return isc::trace_of_frobenius(isc::curve_from_j(isc::BigRational::parse(j)), ell, cache);
        },
        py::arg("j"), py::arg("ell"), py::arg("cache"));

  m.def("classify_witness",
        [](std::int64_t t, std::int64_t d, std::uint64_t p) {
          return witness_names(isc::classify_witness(isc::FpElem::make(t, p), isc::FpElem::make(d, p)));
        },
        py::arg("t"), py::arg("d"), py::arg("p"));

  m.def("certify_surjective",
        [](const std::string& j, std::uint64_t p, std::uint64_t l_bound, isc::TraceCache& cache) {
          auto cert = isc::certify_surjective(isc::BigRational::parse(j), p, l_bound, cache);
          return py::make_tuple(cert.certified, cert.state);
        },
        py::arg("j"), py::arg("p"), py::arg("l_bound"), py::arg("cache"));

  m.def("evidence_profile",
        [](const std::string& j, std::uint64_t p, std::uint64_t l_bound, isc::TraceCache& cache) {
          return isc::evidence_profile(isc::BigRational::parse(j), p, l_bound, cache);
        },
        py::arg("j"), py::arg("p"), py::arg("l_bound"), py::arg("cache"));

  m.def("ns_compatible", &isc::ns_compatible, py::arg("ell"), py::arg("p"));

  m.def("integrality_upgrade",
        [](const std::string& j, std::uint64_t p) {
          return std::string(isc::to_string(isc::integrality_upgrade(isc::BigRational::parse(j), p)));
        },
        py::arg("j"), py::arg("p"));

  m.def("mazur_isogeny_degrees", &isc::mazur_isogeny_degrees);

  m.def("verify_witness_lemma", [](std::uint32_t p) {
    const auto res = isc::verify_witness_lemma(p);
    py::dict out;
    out["p"] = res.p;
    out["subgroups_tested"] = res.subgroups_tested;
    out["counterexamples"] = res.counterexamples.size();
    return out;
  }, py::arg("p"));

  m.def("collect_candidate_j", [] {
    std::vector<std::pair<std::string, std::vector<int>>> out;
    for (const auto& c : isc::collect_candidate_j()) out.emplace_back(c.j.to_string(), c.sources);
    return out;
  });

  m.def("verify_theorem",
        [](isc::TraceCache& cache, std::uint64_t p_min, std::uint64_t p_max, std::uint64_t l_bound) {
          isc::RunConfig cfg;
          cfg.p_min = p_min;
          cfg.p_max = p_max;
          cfg.l_bound = l_bound;
          py::gil_scoped_release release;
          const auto report = isc::verify_theorem(cfg, cache);
          return isc::report_to_json(report).dump();
        },
        py::arg("cache"), py::arg("p_min") = 38, py::arg("p_max") = 500, py::arg("l_bound") = 10'000,
        "Runs the full certification and returns the JSON report text.");
}
