// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "trkr/chi.hpp"
#include "trkr/complex.hpp"
#include "trkr/oracle.hpp"
#include "trkr/report.hpp"
#include "trkr/verify.hpp"

using namespace trkr;

namespace {

int g_threads = env_threads();

// Criterion 6 watches every report computed anywhere in this run.
bool g_all_audits = true;
int g_reports_seen = 0;
std::string g_audit_failures;

HomologyReport audited(const BraidWord& w, int N, int kmax) {
  HomologyReport r = total_homology(w, N, kmax, g_threads);
  ++g_reports_seen;
  for (const auto& [name, ok] : r.audits)
    if (!ok) {
      g_all_audits = false;
      g_audit_failures += " " + to_string(w) + "/N=" + std::to_string(N) + ":" + name;
    }
  return r;
}

using Dims = std::map<std::array<int, 4>, int>;

Dims direct_a_dims(const ResolvedWord& w, int N, int kmax, int jmax) {
  HomologyResult hr = resolved_homology(w, N, kmax, g_threads, /*with_a=*/true,
                                        /*exclude=*/true, /*module_structure=*/false);
  Dims out;
  for (const auto& [key, d] : hr.dims)
    if (d > 0 && key[2] <= jmax && key[3] <= kmax) out[{0, key[0], key[2], key[3]}] += d;
  return out;
}

Dims oracle_a_dims(const ModuleSeries& s, int kmax, int jmax) {
  Dims gen = truncate_series(s, kmax), out;
  for (const auto& [key, m] : gen) {
    auto [part, eps, j, k] = key;
    if (part == 0)
      for (int jj = j; jj <= jmax; jj += 2) out[{0, eps, jj, k}] += m;
    else
      out[{0, eps, j, k}] += m;
  }
  return out;
}

Dims direct_sln_dims(const ResolvedWord& w, int N, int kmax) {
  HomologyResult hr = resolved_homology(w, N, kmax, g_threads, /*with_a=*/false,
                                        /*exclude=*/true);
  Dims out;
  for (const auto& [key, d] : hr.dims)
    if (d > 0 && key[3] <= kmax) out[{0, key[0], 0, key[3]}] += d;
  return out;
}

Dims oracle_sln_dims(const ModuleSeries& s, int kmax) {
  Dims gen = truncate_series(s, kmax), out;
  for (const auto& [key, m] : gen) out[{0, key[1], 0, key[3]}] += m;
  return out;
}

// Direct generator multiset keyed like truncate_series (criterion 2).
Dims direct_module_dims(const ResolvedWord& w, int N, int kmax) {
  HomologyResult hr = resolved_homology(w, N, kmax, g_threads, /*with_a=*/true,
                                        /*exclude=*/true);
  Dims out;
  for (const auto& [ei, comp] : hr.module) {
    for (const auto& [jk, m] : comp.free_mult) out[{0, ei.first, jk.first, jk.second}] += m;
    for (const auto& [ljk, m] : comp.torsion_mult) {
      if (std::get<0>(ljk) != 1) out[{-1, 0, 0, 0}] += m;  // force a mismatch
      out[{1, ei.first, std::get<1>(ljk), std::get<2>(ljk)}] += m;
    }
  }
  return out;
}

// ---- criteria ---------------------------------------------------------------

bool crit1_unknot_golden(std::string& detail) {
  bool ok = true;
  for (int N = 1; N <= 2; ++N)
    for (int m = 0; m <= (N == 1 ? 3 : 2); ++m) {
      int kmax = 2 * N + 2 * m + 5;
      HomologyReport r = audited(unknot_word(m), N, kmax);
      bool match = r.components == unknot_expected(N, m, r.window.kmax);
      if (!match) {
        ok = false;
        detail += " U_" + std::to_string(m) + "/N=" + std::to_string(N);
      }
    }
  return ok;
}

bool crit2_circles(std::string& detail) {
  bool ok = true;
  for (int N = 1; N <= 2; ++N)
    for (int b = 0; b <= 3; ++b) {
      ResolvedWord w;
      w.b = b;
      int kmax = 2 * N + 5;
      bool match =
          truncate_series(empty_braid_series(b, N, true), kmax) ==
              direct_module_dims(w, N, kmax) &&
          oracle_sln_dims(empty_braid_series(b, N, false), kmax) == direct_sln_dims(w, N, kmax);
      if (!match) {
        ok = false;
        detail += " b=" + std::to_string(b) + "/N=" + std::to_string(N);
      }
    }
  return ok;
}

bool crit3_oracle_sweep(std::string& detail) {
  // every closed resolved word of weight <= 6 on <= 4 strands, up to the
  // rotation of the closure
  std::vector<ResolvedWord> words;
  std::set<std::string> seen;
  for (int b = 1; b <= 4; ++b) {
    std::vector<std::vector<int>> stack{{}};
    while (!stack.empty()) {
      std::vector<int> cur = stack.back();
      stack.pop_back();
      int wt = 0;
      for (int l : cur) wt += l;
      ResolvedWord w;
      w.b = b;
      w.letters = cur;
      if (seen.insert(std::to_string(b) + "#" + to_string(cyclic_normal_form(w))).second)
        words.push_back(w);
      for (int l = 1; l < b; ++l)
        if (wt + l <= 6) {
          cur.push_back(l);
          stack.push_back(cur);
          cur.pop_back();
        }
    }
  }
  bool ok = true;
  int checked = 0;
  for (const ResolvedWord& w : words)
    for (int N = 1; N <= 2; ++N) {
      int m = static_cast<int>(w.letters.size());
      int kmax = 2 * N + 1 + 2 * std::max(0, 3 - m);
      bool ok_a = oracle_a_dims(reduce_series(w, N, true), kmax, 3) ==
                  direct_a_dims(w, N, kmax, 3);
      bool ok_s = oracle_sln_dims(reduce_series(w, N, false), kmax) ==
                  direct_sln_dims(w, N, kmax);
      if (!(ok_a && ok_s)) {
        ok = false;
        detail += " " + to_string(w) + "/N=" + std::to_string(N) + (ok_a ? "" : " a") +
                  (ok_s ? "" : " sln");
      }
      ++checked;
    }
  detail += " (" + std::to_string(checked) + " word/N cases)";
  return ok;
}

bool crit4_invariance(std::string& detail) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"b=1;", "b=2; 1"},            // positive stabilization
      {"b=2; 1", "b=3; 1 2"},        // positive stabilization again
      {"b=2; 1 -1", "b=2;"},         // cancellation
      {"b=3; 1 2", "b=3; 2 1"},      // conjugation
      {"b=3; 1 2 1", "b=3; 2 1 2"},  // braid relation
      {"b=3; -1 2", "b=3; 2 -1"},    // conjugation with a negative letter
  };
  bool ok = true;
  for (size_t i = 0; i < pairs.size(); ++i) {
    BraidWord wa = parse_braid(pairs[i].first), wb = parse_braid(pairs[i].second);
    for (int N = 1; N <= (i < 3 ? 2 : 1); ++N) {
      int kmax = std::max(default_kmax(wa, N), default_kmax(wb, N));
      if (!reports_equal(audited(wa, N, kmax), audited(wb, N, kmax))) {
        ok = false;
        detail += " (" + pairs[i].first + " ~ " + pairs[i].second + ")/N=" + std::to_string(N);
      }
    }
  }
  return ok;
}

bool crit5_non_invariance(std::string& detail) {
  bool ok = true;
  for (int N = 1; N <= 2; ++N) {
    int kmax = 2 * N + 7;
    if (reports_equal(audited(unknot_word(0), N, kmax), audited(unknot_word(1), N, kmax))) {
      ok = false;
      detail += " N=" + std::to_string(N);
    }
  }
  return ok;
}

bool crit6_structure_audits(std::string& detail) {
  detail += " (" + std::to_string(g_reports_seen) + " reports)";
  detail += g_audit_failures;
  return g_all_audits && g_reports_seen > 0;
}

bool crit7_stabilization(std::string& detail) {
  const std::vector<std::string> braids = {"b=1;", "b=2; -1", "b=2; 1"};
  bool ok = true;
  for (const std::string& s : braids)
    for (int N = 1; N <= 2; ++N) {
      BraidWord w = parse_braid(s);
      Verdict v = stab_check(w, N, default_kmax(w, N), g_threads);
      if (!v.pass) {
        ok = false;
        detail += " (" + s + ")/N=" + std::to_string(N) + ": " +
                  (v.failures.empty() ? "?" : v.failures.front());
      }
    }
  return ok;
}

bool crit8_cone(std::string& detail) {
  const std::vector<std::pair<std::string, int>> cases = {
      {"b=1;", 1}, {"b=2; 1", 1}, {"b=1;", 2}};
  bool ok = true;
  for (const auto& [s, N] : cases) {
    BraidWord w = parse_braid(s);
    Verdict v = cone_pi0_check(w, N, default_kmax(w, N), g_threads);
    if (!v.pass) {
      ok = false;
      detail += " (" + s + ")/N=" + std::to_string(N) + ": " +
                (v.failures.empty() ? "?" : v.failures.front());
    }
  }
  return ok;
}

bool crit9_chi_contract(std::string& detail) {
  bool ok = true;
  for (int N = 1; N <= 3; ++N) {
    try {
      ChiPair cp = chi_pair(N);  // throws unless both hom spaces are 1-dim
      audit_mf(cp.G0);
      audit_mf(cp.G1);
      BiGradedPoly scal = BiGradedPoly::var_x(cp.ring, cp.ring->var_index("x2")) -
                          BiGradedPoly::var_x(cp.ring, cp.ring->var_index("x1"));
      auto check_composite = [&](const MatrixFactorization& M, const PolyMatrix& comp) {
        PolyMatrix id_s(M.rank());
        for (size_t i = 0; i < M.rank(); ++i)
          id_s[i].push_back({static_cast<int>(i), scal});
        MFMorphism diff{0, 0, -2, pm_add(comp, pm_scale(id_s, Rational(-1)), M.rank())};
        MFMorphism h;
        if (!null_homotopic(M, M, diff, &h)) return false;
        // the found homotopy really satisfies d h + h d = composite - scal*id
        PolyMatrix dh = morphism_differential(M, M, h);
        return pm_is_zero(pm_add(dh, pm_scale(diff.f, Rational(-1)), M.rank()));
      };
      if (!check_composite(cp.G0, pm_compose(cp.chi1.f, cp.chi0.f))) {
        ok = false;
        detail += " chi1chi0/N=" + std::to_string(N);
      }
      if (!check_composite(cp.G1, pm_compose(cp.chi0.f, cp.chi1.f))) {
        ok = false;
        detail += " chi0chi1/N=" + std::to_string(N);
      }
    } catch (const Error& e) {
      ok = false;
      detail += std::string(" N=") + std::to_string(N) + ": " + e.what();
    }
  }
  return ok;
}

bool crit10_algebraic_suite(std::string& detail) {
  bool ok = true;
  // deterministic randomized braids, <= 3 crossings on <= 3 strands
  std::mt19937 rng(20260826);
  std::vector<BraidWord> braids;
  for (int t = 0; t < 10; ++t) {
    BraidWord w;
    w.b = 2 + static_cast<int>(rng() % 2);
    int n = static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
      int g = 1 + static_cast<int>(rng() % (w.b - 1));
      w.letters.push_back(rng() % 2 ? g : -g);
    }
    braids.push_back(w);
  }
  for (const BraidWord& w : braids) {
    try {
      for (int N = 1; N <= 2; ++N) {
        CubeComplex cube = braid_complex(w, N);
        for (const CubeVertex& v : cube.vertices) audit_mf(v.mf);  // d^2 = w id etc.
        MFComplex c = flatten(cube);
        audit_complex(c);  // dchi^2 = 0, square-face signs, homogeneity
      }
      // parity vanishing and the rest of the structure audit on a full run;
      // a small window already exercises every audited property
      HomologyReport r = audited(w, 1, std::min(default_kmax(w, 1), 7));
      (void)r;
    } catch (const Error& e) {
      ok = false;
      detail += " " + to_string(w) + ": " + e.what();
    }
  }
  return ok;
}

}  // namespace

int main() {
  struct Crit {
    int n;
    const char* desc;
    bool (*run)(std::string&);
  };
  const std::vector<Crit> crits = {
      {1, "unknot golden data (closed forms for U_m)", crit1_unknot_golden},
      {2, "multi-circle homology vs symbolic series", crit2_circles},
      {3, "oracle = direct dims, weight <= 6 on <= 4 strands", crit3_oracle_sweep},
      {4, "invariance under transverse Markov moves", crit4_invariance},
      {5, "non-invariance under negative stabilization", crit5_non_invariance},
      {6, "structure-theorem audit on every report", crit6_structure_audits},
      {7, "stabilization exact sequences", crit7_stabilization},
      {8, "quotient-cone identity", crit8_cone},
      {9, "chi composition contract", crit9_chi_contract},
      {10, "algebraic invariant suite on randomized braids", crit10_algebraic_suite},
  };
  bool all = true;
  for (const Crit& c : crits) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const Error& e) {
      detail += std::string(" exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    all = all && ok;
    std::printf("CRITERION %d: %s — %s%s [%.1fs]\n", c.n, ok ? "pass" : "fail", c.desc,
                detail.c_str(), std::chrono::duration<double>(t1 - t0).count());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
