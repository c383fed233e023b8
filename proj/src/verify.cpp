#include "trkr/verify.hpp"

#include <algorithm>
#include <sstream>

namespace trkr {

namespace {

int mod2(int x) { return ((x % 2) + 2) % 2; }

int get_dim(const std::map<std::array<int, 4>, int>& dims, int eps, int i, int j, int k) {
  auto it = dims.find({mod2(eps), i, j, k});
  return it == dims.end() ? 0 : it->second;
}

int get_sln(const std::map<std::array<int, 3>, int>& sln, int eps, int i, int k) {
  auto it = sln.find({mod2(eps), i, k});
  return it == sln.end() ? 0 : it->second;
}

std::string cell(int eps, int i, int j, int k) {
  std::ostringstream os;
  os << "(eps=" << eps << ",i=" << i << ",j=" << j << ",k=" << k << ")";
  return os.str();
}

}  // namespace

std::map<std::string, bool> verify_structure_theorem(const HomologyReport& r) {
  const int sl = r.sl;
  const int cp = r.braid.positive(), cm = r.braid.negative();
  std::map<std::string, bool> out{{"free_shifts", true},
                                  {"free_rank_equals_sln", true},
                                  {"torsion_length_one", true},
                                  {"torsion_shift_bounds", true},
                                  {"parity_vanishing", true}};

  std::map<std::array<int, 3>, int> free_rank;  // (eps, i, k) -> rank
  for (const auto& [ei, comp] : r.components) {
    for (const auto& [jk, m] : comp.free_mult) {
      if (jk.first != sl && jk.first != sl + 2) out["free_shifts"] = false;
      free_rank[{ei.first, ei.second, jk.second}] += m;
      if (ei.first == mod2(sl - 1)) out["parity_vanishing"] = false;
    }
    for (const auto& [ljk, m] : comp.torsion_mult) {
      (void)m;
      auto [l, s, k] = ljk;
      if (l != 1) out["torsion_length_one"] = false;
      if (s < sl || s > cp - cm - 1) out["torsion_shift_bounds"] = false;
      if ((r.N - 1) * s > k - 2 * r.N + 2 * cm) out["torsion_shift_bounds"] = false;
    }
  }
  for (const auto& [eik, d] : r.sln) {
    if (d > 0 && eik[0] == mod2(sl - 1)) out["parity_vanishing"] = false;
    auto it = free_rank.find(eik);
    if ((it == free_rank.end() ? 0 : it->second) != d) out["free_rank_equals_sln"] = false;
  }
  for (const auto& [eik, rk] : free_rank)
    if (rk != get_sln(r.sln, eik[0], eik[1], eik[2])) out["free_rank_equals_sln"] = false;

  bool all = true;
  for (const auto& [name, ok] : out) all = all && ok;
  out["structure_theorem"] = all;
  return out;
}

Verdict stab_check(const BraidWord& w, int N, int kmax, int threads) {
  Verdict v;
  const int s = w.self_linking();
  BraidWord wm = stab_neg(w);

  HomologyReport rm = total_homology(wm, N, kmax, threads, false);
  HomologyReport rb = total_homology(w, N, kmax + N + 1, threads, true);

  // degree ranges to scan
  int imin = 0, imax = 0, kmin = rm.window.kmin;
  for (const auto& [key, d] : rm.dims) {
    (void)d;
    imin = std::min(imin, key[1]);
    imax = std::max(imax, key[1]);
  }
  for (const auto& [key, d] : rb.dims) {
    (void)d;
    imin = std::min(imin, key[1] + 1);
    imax = std::max(imax, key[1] + 1);
  }
  int jlo = std::min(rm.window.jmin, s - 2);

  // short exact sequence at a-parity eps(s):
  // dim H^{s,i,j,k}(B_-) = [j >= s, j = s mod 2] dim H_N^{s,i,k}(B)
  //                        + dim H^{s-1,i-1,j+1,k+N+1}(B)
  for (int i = imin; i <= imax; ++i)
    for (int j = jlo; j <= rm.window.jmax; ++j)
      for (int k = kmin; k <= rm.window.kmax; ++k) {
        int lhs = get_dim(rm.dims, s, i, j, k);
        int rhs = get_dim(rb.dims, s - 1, i - 1, j + 1, k + N + 1);
        if (j >= s && mod2(j - s) == 0) rhs += get_sln(rb.sln, s, i, k);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "short sequence mismatch at " << cell(mod2(s), i, j, k) << ": lhs=" << lhs
             << " rhs=" << rhs;
          v.fail(os.str());
        }
      }

  // long exact sequence at a-parity eps(s-1): alternating sum over i of
  // dim H^{s-1,i,j,k}(B_-) - dim H^{s,i-1,j+1,k+N+1}(B)
  //   + [j >= s-1, j = s-1 mod 2] dim H_N^{s,i-1,k+N+1}(B)  vanishes.
  for (int j = jlo; j <= rm.window.jmax; ++j)
    for (int k = kmin; k <= rm.window.kmax; ++k) {
      long alt = 0;
      for (int i = imin; i <= imax; ++i) {
        long a = get_dim(rm.dims, s - 1, i, j, k);
        long b = get_dim(rb.dims, s, i - 1, j + 1, k + N + 1);
        long c = 0;
        if (j >= s - 1 && mod2(j - (s - 1)) == 0) c = get_sln(rb.sln, s, i - 1, k + N + 1);
        alt += (i % 2 == 0 ? 1 : -1) * (a - b + c);
      }
      if (alt != 0) {
        std::ostringstream os;
        os << "long sequence alternating sum nonzero at (j=" << j << ",k=" << k
           << "): " << alt;
        v.fail(os.str());
      }
    }
  return v;
}

Verdict cone_pi0_check(const BraidWord& w, int N, int kmax, int threads) {
  Verdict v;
  MFComplex c = flatten(braid_complex(w, N));
  MFComplex cone = cone_quotient(c);
  audit_complex(cone);

  BraidWord wm = stab_neg(w);
  Window win = default_window(wm, N, kmax);
  PipelineOptions opt;
  opt.threads = threads;
  opt.module_structure = false;
  HomologyResult hc = compute_homology(cone, win, opt);
  HomologyReport rm = total_homology(wm, N, kmax, threads, false);

  auto clip = [&](const std::map<std::array<int, 4>, int>& dims) {
    std::map<std::array<int, 4>, int> out;
    for (const auto& [key, d] : dims)
      if (key[2] <= win.jmax && key[3] <= win.kmax && d > 0) out[key] = d;
    return out;
  };
  auto a = clip(hc.dims), b = clip(rm.dims);
  if (a != b) {
    for (const auto& [key, d] : a)
      if (!b.count(key) || b.at(key) != d) {
        std::ostringstream os;
        os << "cone dim " << d << " at " << cell(key[0], key[1], key[2], key[3])
           << " vs " << (b.count(key) ? b.at(key) : 0);
        v.fail(os.str());
      }
    for (const auto& [key, d] : b)
      if (!a.count(key)) {
        std::ostringstream os;
        os << "missing cone dim at " << cell(key[0], key[1], key[2], key[3])
           << " expected " << d;
        v.fail(os.str());
      }
  }
  return v;
}

}  // namespace trkr
