#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "migs/acceptance.hpp"
#include "migs/bounds.hpp"
#include "migs/certificate.hpp"
#include "migs/constructions.hpp"
#include "migs/family_search.hpp"
#include "migs/group_oracle.hpp"

namespace py = pybind11;
using namespace migs;

namespace {

py::object to_python(const nlohmann::json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

std::vector<Partition> parse_all(int n, const std::vector<std::string>& texts) {
  std::vector<Partition> out;
  for (const auto& t : texts) out.push_back(Partition::parse(t, n));
  return out;
}

std::vector<std::string> texts(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_migs, m) {
  m.doc() = "Minimal invariable generating sets of symmetric groups";

  m.def(
      "partial_sums",
      [](const std::string& text) {
        const Partition p = Partition::parse(text);
        return partial_sums(p).present(0, p.degree());
      },
      py::arg("partition"), "Sorted partial sums, 0 and n included.");
  m.def(
      "parity", [](const std::string& p) { return to_string(parity(Partition::parse(p))); }, py::arg("partition"));

  m.def(
      "lemma_partition",
      [](int i, int n) {
        const LemmaPartition lp = lemma_partition(i, n);
        return to_python(lemma_certificate_json(lp, verify_lemma(lp)));
      },
      py::arg("i"), py::arg("n"));

  m.def(
      "build_x_family",
      [](int n) {
        const XFamily xf = build_x_family(n);
        return to_python(family_certificate_json(xf, verify_family(xf)));
      },
      py::arg("n"), "Certificate document for the family X of S_n.");

  m.def(
      "verify_family",
      [](int n, const std::vector<std::string>& members) {
        XFamily xf;
        xf.n = n;
        xf.members = parse_all(n, members);
        xf.witnesses = least_witnesses(xf.members, n);
        return to_python(family_certificate_json(xf, verify_family(xf)));
      },
      py::arg("n"), py::arg("members"));

  m.def(
      "max_family",
      [](int n, int threads, bool use_incumbent) {
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = max_family(n, {kDefaultEnumerationCap, threads, use_incumbent});
        }
        return to_python(search_result_json(r));
      },
      py::arg("n"), py::arg("threads") = 1, py::arg("use_incumbent") = true);

  m.def(
      "is_mig_set",
      [](int n, const std::vector<std::string>& classes) {
        const MigCertificate c = is_mig_set(n, parse_all(n, classes));
        py::dict d;
        d["is_mig"] = c.is_mig;
        d["invariably_generates"] = c.generates;
        d["overgroup"] = c.overgroup ? py::object(py::str(c.overgroup->label)) : py::object(py::none());
        py::list subs;
        for (const auto& s : c.subgroups) subs.append(s ? py::object(py::str(s->label)) : py::object(py::none()));
        d["minimality"] = subs;
        return d;
      },
      py::arg("n"), py::arg("classes"), "Classes are cycle types, padded with fixed points.");

  m.def(
      "cycle_types_meeting_at_least",
      [](int n, int threshold, bool count_alternating) {
        return texts(cycle_types_meeting_at_least(n, threshold, count_alternating));
      },
      py::arg("n"), py::arg("threshold"), py::arg("count_alternating") = true);

  m.def(
      "find_mig_set_of_size",
      [](int n, int size) {
        const MigScan s = find_mig_set_of_size(n, size);
        py::dict d;
        d["found"] = s.found;
        d["example"] = texts(s.example);
        d["sets_checked"] = s.sets_checked;
        return d;
      },
      py::arg("n"), py::arg("size"));

  m.def("upper_bound", &upper_bound, py::arg("n"), py::arg("include_k1") = false);
  m.def(
      "bound_report",
      [](u64 n, bool include_k1) {
        const BoundReport r = bound_report(n, include_k1);
        py::dict d;
        d["n"] = r.n;
        d["delta"] = r.delta;
        d["a"] = r.a;
        d["b"] = include_k1 ? r.b_with_k1 : r.b;
        d["c"] = r.c;
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        py::list hits;
        for (const auto& h : r.table1_hits) hits.append(py::make_tuple(h.group, h.class_count));
        d["table1"] = hits;
        return d;
      },
      py::arg("n"), py::arg("include_k1") = false);
  m.def(
      "corollary_inequality",
      [](u64 n) {
        const CorollaryReport r = corollary_inequality(n);
        py::dict d;
        d["direct_sum"] = r.direct_sum;
        d["weak_chain"] = r.weak_chain;
        d["final_inequality"] = r.final_inequality;
        d["lhs"] = static_cast<double>(r.lhs);
        d["rhs"] = static_cast<double>(r.rhs);
        return d;
      },
      py::arg("n"));

  m.def(
      "run_acceptance",
      [](int threads) {
        std::vector<CriterionResult> results;
        {
          py::gil_scoped_release release;
          results = run_acceptance({threads, AcceptanceOptions{}.seed});
        }
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["id"] = r.id;
          d["title"] = r.title;
          d["passed"] = r.passed;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("threads") = 1);
}
