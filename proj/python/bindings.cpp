#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trkr/braid.hpp"
#include "trkr/oracle.hpp"
#include "trkr/report.hpp"
#include "trkr/verify.hpp"

namespace py = pybind11;
using namespace trkr;

namespace {

int pick_kmax(const BraidWord& w, int N, int kmax) {
  return kmax >= 0 ? kmax : default_kmax(w, N);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact transverse link homology of closed braids";

  py::register_exception<Error>(m, "TrkrError");

  m.def(
      "homology_json",
      [](const std::string& braid, int N, int kmax, int threads) {
        BraidWord w = parse_braid(braid);
        return report_json(total_homology(w, N, pick_kmax(w, N, kmax), threads));
      },
      py::arg("braid"), py::arg("N") = 1, py::arg("kmax") = -1, py::arg("threads") = 1,
      "Full homology report (components, sln dims, audits) as a JSON string.");

  m.def(
      "homology_text",
      [](const std::string& braid, int N, int kmax, int threads) {
        BraidWord w = parse_braid(braid);
        return report_text(total_homology(w, N, pick_kmax(w, N, kmax), threads));
      },
      py::arg("braid"), py::arg("N") = 1, py::arg("kmax") = -1, py::arg("threads") = 1);

  m.def(
      "oracle",
      [](const std::string& word, int N, bool with_a, int kmax) {
        ResolvedWord w = parse_resolved(word);
        int km = kmax >= 0 ? kmax : 2 * N + 2 * static_cast<int>(w.letters.size()) + 5;
        auto gens = truncate_series(reduce_series(w, N, with_a), km);
        std::vector<std::tuple<std::string, int, int, int, int>> out;
        for (const auto& [key, mult] : gens)
          out.emplace_back(key[0] ? "torsion" : "free", key[1], key[2], key[3], mult);
        return out;
      },
      py::arg("word"), py::arg("N") = 1, py::arg("with_a") = true, py::arg("kmax") = -1,
      "Generator multiset (part, eps, j, k, mult) of the rewrite-rule series.");

  m.def(
      "compare",
      [](const std::string& a, const std::string& b, int N, int kmax, int threads) {
        BraidWord wa = parse_braid(a), wb = parse_braid(b);
        int km = std::max(pick_kmax(wa, N, kmax), pick_kmax(wb, N, kmax));
        return reports_equal(total_homology(wa, N, km, threads),
                             total_homology(wb, N, km, threads));
      },
      py::arg("braid_a"), py::arg("braid_b"), py::arg("N") = 1, py::arg("kmax") = -1,
      py::arg("threads") = 1, "Equality of the two homology reports inside the shared window.");

  m.def(
      "stab_check",
      [](const std::string& braid, int N, int kmax, int threads) {
        BraidWord w = parse_braid(braid);
        Verdict v = stab_check(w, N, pick_kmax(w, N, kmax), threads);
        return std::make_pair(v.pass, v.failures);
      },
      py::arg("braid"), py::arg("N") = 1, py::arg("kmax") = -1, py::arg("threads") = 1,
      "Short/long stabilization sequence dimension identities for B vs its "
      "negative stabilization.");

  m.def(
      "cone_check",
      [](const std::string& braid, int N, int kmax, int threads) {
        BraidWord w = parse_braid(braid);
        Verdict v = cone_pi0_check(w, N, pick_kmax(w, N, kmax), threads);
        return std::make_pair(v.pass, v.failures);
      },
      py::arg("braid"), py::arg("N") = 1, py::arg("kmax") = -1, py::arg("threads") = 1,
      "Quotient-cone identity for the negative stabilization of B.");

  m.def(
      "apply_move",
      [](const std::string& braid, const std::string& kind, int arg) {
        static const std::map<std::string, MoveKind> kinds{
            {"cancel", MoveKind::Cancel},          {"commute", MoveKind::Commute},
            {"yang-baxter", MoveKind::YangBaxter}, {"conjugate", MoveKind::Conjugate},
            {"stab-pos", MoveKind::StabPos},       {"stab-neg", MoveKind::StabNeg},
            {"destab-pos", MoveKind::DestabPos},   {"destab-neg", MoveKind::DestabNeg}};
        auto it = kinds.find(kind);
        if (it == kinds.end()) throw Error("unknown move kind: " + kind);
        return to_string(apply_move(parse_braid(braid), Move{it->second, arg}));
      },
      py::arg("braid"), py::arg("kind"), py::arg("arg") = 0);

  m.def(
      "self_linking",
      [](const std::string& braid) { return parse_braid(braid).self_linking(); },
      py::arg("braid"));
}
