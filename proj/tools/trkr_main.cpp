#include "trkr/oracle.hpp"
#include "trkr/report.hpp"
#include "trkr/verify.hpp"

#include <climits>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

using namespace trkr;

namespace {

int g_threads() { return env_threads(); }

bool audits_pass(const HomologyReport& r) {
  for (const auto& [name, ok] : r.audits)
    if (!ok) return false;
  return true;
}

nlohmann::ordered_json verdict_json(const std::string& what, const Verdict& v) {
  nlohmann::ordered_json j;
  j["check"] = what;
  j["pass"] = v.pass;
  j["failures"] = v.failures;
  return j;
}

struct CommonOpts {
  std::string braid;
  int N = 1;
  int kmax = INT_MIN;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_braid = true) {
  if (with_braid)
    cmd->add_option("--braid", o.braid, "braid word, e.g. \"b=2; 1 -1\"")->required();
  cmd->add_option("-N,--level", o.N, "potential level N >= 1")->check(CLI::PositiveNumber);
  cmd->add_option("--kmax", o.kmax, "x-grading window upper bound");
  cmd->add_option("--format", o.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
}

int kmax_of(const CommonOpts& o, const BraidWord& w) {
  return o.kmax == INT_MIN ? default_kmax(w, o.N) : o.kmax;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact transverse link homology of closed braids"};
  app.require_subcommand(1);

  CommonOpts hom, sln, orc, cmp, unk, stb, cone, mov;

  auto* c_hom = app.add_subcommand("homology", "bigraded Q[a]-module homology of a closed braid");
  add_common(c_hom, hom);

  auto* c_sln = app.add_subcommand("sln", "a = 1 specialization dims of a closed braid");
  add_common(c_sln, sln);

  auto* c_orc = app.add_subcommand("oracle", "inner-homology series of a closed resolved word");
  std::string orc_word;
  bool orc_sln = false, orc_trace = false;
  c_orc->add_option("--word", orc_word, "resolved word, e.g. \"b=3; t1 t2\"")->required();
  c_orc->add_flag("--sln", orc_sln, "a = 1 variant");
  c_orc->add_flag("--trace", orc_trace, "print the rewrite trace");
  add_common(c_orc, orc, false);

  auto* c_cmp = app.add_subcommand("compare", "compare the homology of two braids");
  std::string braid_a, braid_b;
  c_cmp->add_option("--braid-a", braid_a)->required();
  c_cmp->add_option("--braid-b", braid_b)->required();
  add_common(c_cmp, cmp, false);

  auto* c_unk = app.add_subcommand("unknot-check", "verify the closed forms for U_m");
  int unk_m = 0;
  c_unk->add_option("-m,--stabilizations", unk_m)->check(CLI::NonNegativeNumber);
  add_common(c_unk, unk, false);

  auto* c_stb = app.add_subcommand("stab-check", "verify the stabilization sequences for B");
  add_common(c_stb, stb);

  auto* c_cone = app.add_subcommand("cone-check", "verify the quotient-cone identity for B");
  add_common(c_cone, cone);

  auto* c_mov = app.add_subcommand("moves", "apply a transverse move to a braid word");
  std::string mov_kind;
  int mov_arg = 0;
  c_mov->add_option("--braid", mov.braid)->required();
  c_mov->add_option("--kind", mov_kind,
                    "cancel|commute|yang-baxter|conjugate|stab-pos|stab-neg|destab-pos|destab-neg")
      ->required();
  c_mov->add_option("--arg", mov_arg, "site index / conjugating letter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints help or the usage error
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*c_hom) {
      BraidWord w = parse_braid(hom.braid);
      HomologyReport r = total_homology(w, hom.N, kmax_of(hom, w), g_threads());
      std::cout << (hom.format == "json" ? report_json(r) + "\n" : report_text(r));
      return audits_pass(r) ? 0 : 2;
    }
    if (*c_sln) {
      BraidWord w = parse_braid(sln.braid);
      HomologyReport r = total_homology(w, sln.N, kmax_of(sln, w), g_threads());
      if (sln.format == "json") {
        nlohmann::ordered_json j;
        j["braid"] = to_string(w);
        j["N"] = sln.N;
        j["sln"] = nlohmann::ordered_json::array();
        for (const auto& [eik, d] : r.sln)
          if (d > 0)
            j["sln"].push_back({{"eps", eik[0]}, {"i", eik[1]}, {"k", eik[2]}, {"dim", d}});
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& [eik, d] : r.sln)
          if (d > 0)
            std::cout << "eps=" << eik[0] << " i=" << eik[1] << " k=" << eik[2]
                      << " dim=" << d << "\n";
      }
      return 0;
    }
    if (*c_orc) {
      ResolvedWord w = parse_resolved(orc_word);
      RewriteTrace tr;
      ModuleSeries s = reduce_series(w, orc.N, !orc_sln, &tr);
      int kmax = orc.kmax == INT_MIN
                     ? 2 * orc.N + 2 * static_cast<int>(w.letters.size()) + 5
                     : orc.kmax;
      auto dims = truncate_series(s, kmax);
      if (orc.format == "json") {
        nlohmann::ordered_json j;
        j["word"] = to_string(w);
        j["N"] = orc.N;
        j["kmax"] = kmax;
        j["generators"] = nlohmann::ordered_json::array();
        for (const auto& [key, m] : dims)
          j["generators"].push_back({{"part", key[0] ? "torsion" : "free"},
                                     {"eps", key[1]},
                                     {"j", key[2]},
                                     {"k", key[3]},
                                     {"mult", m}});
        if (orc_trace) j["trace"] = tr.steps;
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& [key, m] : dims)
          std::cout << (key[0] ? "torsion" : "free") << " eps=" << key[1]
                    << " j=" << key[2] << " k=" << key[3] << " mult=" << m << "\n";
        if (orc_trace)
          for (const auto& st : tr.steps) std::cout << "trace " << st << "\n";
      }
      return 0;
    }
    if (*c_cmp) {
      BraidWord wa = parse_braid(braid_a), wb = parse_braid(braid_b);
      int ka = kmax_of(cmp, wa), kb = kmax_of(cmp, wb);
      int k = std::max(ka, kb);
      HomologyReport ra = total_homology(wa, cmp.N, k, g_threads());
      HomologyReport rb = total_homology(wb, cmp.N, k, g_threads());
      bool eq = reports_equal(ra, rb);
      if (cmp.format == "json") {
        nlohmann::ordered_json j;
        j["braid_a"] = to_string(wa);
        j["braid_b"] = to_string(wb);
        j["N"] = cmp.N;
        j["equal"] = eq;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (eq ? "EQUAL" : "DIFFERENT") << "\n";
      }
      return (audits_pass(ra) && audits_pass(rb)) ? 0 : 2;
    }
    if (*c_unk) {
      BraidWord w = unknot_word(unk_m);
      int kmax = unk.kmax == INT_MIN ? 2 * unk.N + 2 * unk_m + 5 : unk.kmax;
      HomologyReport r = total_homology(w, unk.N, kmax, g_threads());
      bool ok = r.components == unknot_expected(unk.N, unk_m, r.window.kmax) && audits_pass(r);
      if (unk.format == "json") {
        nlohmann::ordered_json j;
        j["m"] = unk_m;
        j["N"] = unk.N;
        j["pass"] = ok;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "unknot-check m=" << unk_m << " N=" << unk.N << ": "
                  << (ok ? "pass" : "FAIL") << "\n";
      }
      return ok ? 0 : 2;
    }
    if (*c_stb) {
      BraidWord w = parse_braid(stb.braid);
      Verdict v = stab_check(w, stb.N, kmax_of(stb, w), g_threads());
      std::cout << verdict_json("stabilization-sequences", v).dump(2) << "\n";
      return v.pass ? 0 : 2;
    }
    if (*c_cone) {
      BraidWord w = parse_braid(cone.braid);
      Verdict v = cone_pi0_check(w, cone.N, kmax_of(cone, w), g_threads());
      std::cout << verdict_json("quotient-cone", v).dump(2) << "\n";
      return v.pass ? 0 : 2;
    }
    if (*c_mov) {
      BraidWord w = parse_braid(mov.braid);
      static const std::map<std::string, MoveKind> kinds{
          {"cancel", MoveKind::Cancel},         {"commute", MoveKind::Commute},
          {"yang-baxter", MoveKind::YangBaxter}, {"conjugate", MoveKind::Conjugate},
          {"stab-pos", MoveKind::StabPos},       {"stab-neg", MoveKind::StabNeg},
          {"destab-pos", MoveKind::DestabPos},   {"destab-neg", MoveKind::DestabNeg}};
      auto it = kinds.find(mov_kind);
      if (it == kinds.end()) {
        std::cerr << "unknown move kind: " << mov_kind << "\n";
        return 1;
      }
      BraidWord out = apply_move(w, Move{it->second, mov_arg});
      std::cout << to_string(out) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
