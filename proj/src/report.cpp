#include "trkr/report.hpp"

#include "trkr/moy.hpp"
#include "trkr/verify.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace trkr {

int default_kmax(const BraidWord& w, int N) { return 2 * N + 2 * w.crossings() + 5; }

Window default_window(const BraidWord& w, int N, int kmax) {
  Window win;
  win.jmax = w.positive() - w.negative() + 3;
  win.kmax = kmax;
  (void)N;
  return win;
}

HomologyReport total_homology(const BraidWord& w, int N, int kmax, int threads,
                              bool with_sln) {
  HomologyReport rep;
  rep.braid = w;
  rep.N = N;
  rep.sl = w.self_linking();

  CubeComplex cube = braid_complex(w, N);
  MFComplex c = flatten(cube);
  audit_complex(c);
  rep.audits["chain_audit"] = true;

  Window win = default_window(w, N, kmax);
  PipelineOptions opt;
  opt.threads = threads;
  opt.module_structure = true;
  HomologyResult hr = compute_homology(c, win, opt);
  rep.window = hr.window;
  rep.dims = hr.dims;
  for (auto& [ei, comp] : hr.module)
    if (!comp.empty()) rep.components[ei] = comp;
  rep.warnings = hr.warnings;

  if (with_sln) {
    MFComplex s = specialize_a1(c);
    rep.sln = compute_sln(s, win.kmax, opt);
    for (auto& [key, val] : verify_structure_theorem(rep)) rep.audits[key] = val;
  }
  return rep;
}

HomologyResult resolved_homology(const ResolvedWord& w, int N, int kmax, int threads,
                                 bool with_a, bool exclude, bool module_structure) {
  MatrixFactorization mf = moy_mf(moy_from_resolved(w), N, exclude);
  MFComplex c;
  c.ring = mf.ring;
  c.N = N;
  c.with_a = true;
  c.deg_lo = c.deg_hi = 0;
  c.gens.resize(1);
  for (const MFGen& g : mf.gens) c.gens[0].push_back({g.z2, g.j, g.k, false});
  c.dmf = {mf.d};
  c.dchi.resize(1);
  c.dchi[0].assign(mf.gens.size(), {});
  audit_complex(c);
  if (!with_a) c = specialize_a1(c);

  Window win;
  win.jmax = 3;  // torsion shifts of resolved closures lie in [-b, -1]
  win.kmax = kmax;
  PipelineOptions opt;
  opt.threads = threads;
  opt.module_structure = with_a && module_structure;
  return compute_homology(c, win, opt);
}

BraidWord unknot_word(int m) {
  BraidWord w;
  w.b = m + 1;
  for (int i = 1; i <= m; ++i) w.letters.push_back(-i);
  return w;
}

std::map<std::pair<int, int>, QaComponent> unknot_expected(int N, int m, int kmax) {
  std::map<std::pair<int, int>, QaComponent> exp;
  auto mod2 = [](int x) { return ((x % 2) + 2) % 2; };
  // the free tower F, the torsion tail T, and F/aF, each placed with a
  // z2 shift <eps>, homological degree i, and bidegree shift {dj, dk}
  auto addF = [&](int eps, int i, int dj, int dk) {
    for (int l = 0; l < N; ++l)
      ++exp[{mod2(1 + eps), i}].free_mult[{-1 + dj, -N + 1 + 2 * l + dk}];
  };
  auto addT = [&](int eps, int i, int dj, int dk) {
    for (int l = 0; N + 1 + 2 * l + dk <= kmax; ++l)
      ++exp[{mod2(1 + eps), i}].torsion_mult[{1, -1 + dj, N + 1 + 2 * l + dk}];
  };
  auto addFa = [&](int eps, int i, int dj, int dk) {
    for (int l = 0; l < N; ++l)
      ++exp[{mod2(1 + eps), i}].torsion_mult[{1, -1 + dj, -N + 1 + 2 * l + dk}];
  };
  if (m == 0) {
    addF(0, 0, 0, 0);
    addT(0, 0, 0, 0);
  } else if (m == 1) {
    addF(0, 0, 0, 0);
    addT(1, 1, -1, -N - 1);
  } else {
    addF(0, 0, -2 * (m - 1), 0);
    addT(m, m, -m, -m * (N + 1));
    for (int l = 1; l <= m - 1; ++l) addFa(l, l + 1, -2 * m + l, -l * (N + 1));
  }
  return exp;
}

bool reports_equal(const HomologyReport& a, const HomologyReport& b) {
  int jmax = std::min(a.window.jmax, b.window.jmax);
  int kmax = std::min(a.window.kmax, b.window.kmax);
  auto clip = [&](const HomologyReport& r) {
    std::map<std::pair<int, int>, QaComponent> out;
    for (const auto& [ei, comp] : r.components) {
      QaComponent c;
      for (const auto& [jk, m] : comp.free_mult)
        if (jk.first <= jmax && jk.second <= kmax) c.free_mult[jk] = m;
      for (const auto& [ljk, m] : comp.torsion_mult)
        if (std::get<1>(ljk) <= jmax && std::get<2>(ljk) <= kmax) c.torsion_mult[ljk] = m;
      if (!c.empty()) out[ei] = c;
    }
    return out;
  };
  if (clip(a) != clip(b)) return false;
  auto clip_sln = [&](const HomologyReport& r) {
    std::map<std::array<int, 3>, int> out;
    for (const auto& [eik, d] : r.sln)
      if (eik[2] <= kmax && d > 0) out[eik] = d;
    return out;
  };
  return clip_sln(a) == clip_sln(b);
}

std::string report_json(const HomologyReport& r) {
  nlohmann::ordered_json j;
  j["braid"] = to_string(r.braid);
  j["N"] = r.N;
  j["sl"] = r.sl;
  j["window"] = {{"jmin", r.window.jmin},
                 {"jmax", r.window.jmax},
                 {"kmin", r.window.kmin},
                 {"kmax", r.window.kmax}};
  j["components"] = nlohmann::ordered_json::array();
  for (const auto& [ei, comp] : r.components) {
    nlohmann::ordered_json cj;
    cj["eps"] = ei.first;
    cj["i"] = ei.second;
    cj["free"] = nlohmann::ordered_json::array();
    for (const auto& [jk, m] : comp.free_mult)
      for (int t = 0; t < m; ++t)
        cj["free"].push_back({{"j", jk.first}, {"k", jk.second}});
    cj["torsion"] = nlohmann::ordered_json::array();
    for (const auto& [ljk, m] : comp.torsion_mult)
      for (int t = 0; t < m; ++t)
        cj["torsion"].push_back(
            {{"l", std::get<0>(ljk)}, {"j", std::get<1>(ljk)}, {"k", std::get<2>(ljk)}});
    j["components"].push_back(std::move(cj));
  }
  j["sln"] = nlohmann::ordered_json::array();
  for (const auto& [eik, d] : r.sln)
    if (d > 0)
      j["sln"].push_back({{"eps", eik[0]}, {"i", eik[1]}, {"k", eik[2]}, {"dim", d}});
  j["audits"] = nlohmann::ordered_json::object();
  for (const auto& [name, ok] : r.audits) j["audits"][name] = ok;
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j.dump(2);
}

namespace {

std::string term(int j, int k, int mult, bool with_tau) {
  std::ostringstream os;
  if (mult != 1) os << mult << "*";
  if (with_tau) os << "t^" << j << " ";
  os << "q^" << k;
  return os.str();
}

}  // namespace

std::string report_text(const HomologyReport& r) {
  std::ostringstream os;
  os << "braid " << to_string(r.braid) << "  N=" << r.N << "  sl=" << r.sl << "\n";
  os << "window j in [" << r.window.jmin << "," << r.window.jmax << "], k in ["
     << r.window.kmin << "," << r.window.kmax << "]\n";
  for (const auto& [ei, comp] : r.components) {
    os << "eps=" << ei.first << " i=" << ei.second << "  free:";
    bool any = false;
    for (const auto& [jk, m] : comp.free_mult) {
      os << (any ? " + " : " ") << term(jk.first, jk.second, m, true);
      any = true;
    }
    if (!any) os << " 0";
    os << "; torsion:";
    any = false;
    for (const auto& [ljk, m] : comp.torsion_mult) {
      os << (any ? " + " : " ") << term(std::get<1>(ljk), std::get<2>(ljk), m, true);
      if (std::get<0>(ljk) != 1) os << "[l=" << std::get<0>(ljk) << "]";
      any = true;
    }
    if (!any) os << " 0";
    os << "\n";
  }
  if (!r.sln.empty()) {
    os << "sl(" << r.N << ") dims:";
    for (const auto& [eik, d] : r.sln)
      if (d > 0)
        os << " (eps=" << eik[0] << ",i=" << eik[1] << ",k=" << eik[2] << "):" << d;
    os << "\n";
  }
  for (const auto& [name, ok] : r.audits)
    os << "audit " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
  for (const auto& wmsg : r.warnings) os << "warning: " << wmsg << "\n";
  return os.str();
}

}  // namespace trkr
