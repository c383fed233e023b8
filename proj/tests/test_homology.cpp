#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trkr/report.hpp"
#include "trkr/verify.hpp"

#include <map>

using namespace trkr;

namespace {

constexpr int kThreads = 4;

using Comp = std::map<std::pair<int, int>, QaComponent>;

void add_free(Comp& c, int eps, int i, int j, int k) { ++c[{eps, i}].free_mult[{j, k}]; }
void add_tor(Comp& c, int eps, int i, int j, int k) {
  ++c[{eps, i}].torsion_mult[{1, j, k}];
}

int mod2(int x) { return ((x % 2) + 2) % 2; }

// The closed forms for the transverse unknots U_m:
//   F = (+)_{l<N}    Q[a]<1>{-1, -N+1+2l}
//   T = (+)_{l>=0} Q[a]/(a)<1>{-1, N+1+2l}
//   H(U_0) = F (+) T
//   H(U_1) = F (+) T<1>{-1,-N-1}||1||
//   H(U_m) = F{-2(m-1),0} (+) T<m>{-m,-m(N+1)}||m||
//            (+) (+)_{l=1}^{m-1} (F/aF)<l>{-2m+l, -l(N+1)}||l+1||   (m >= 2)
Comp expected_unknot(int N, int m, int kmax) {
  Comp c;
  auto F = [&](int eps, int i, int dj, int dk) {
    for (int l = 0; l < N; ++l) add_free(c, mod2(1 + eps), i, -1 + dj, -N + 1 + 2 * l + dk);
  };
  auto T = [&](int eps, int i, int dj, int dk) {
    for (int l = 0;; ++l) {
      int k = N + 1 + 2 * l + dk;
      if (k > kmax) break;
      add_tor(c, mod2(1 + eps), i, -1 + dj, k);
    }
  };
  auto FmodA = [&](int eps, int i, int dj, int dk) {
    for (int l = 0; l < N; ++l) add_tor(c, mod2(1 + eps), i, -1 + dj, -N + 1 + 2 * l + dk);
  };
  if (m == 0) {
    F(0, 0, 0, 0);
    T(0, 0, 0, 0);
  } else if (m == 1) {
    F(0, 0, 0, 0);
    T(1, 1, -1, -N - 1);
  } else {
    F(0, 0, -2 * (m - 1), 0);
    T(m, m, -m, -m * (N + 1));
    for (int l = 1; l <= m - 1; ++l) FmodA(l, l + 1, -2 * m + l, -l * (N + 1));
  }
  return c;
}

// Symbolic expansion of the closed form for b concentric circles:
//   M0 = Q[a,x]<1>{-1,1-N} (+) Q[a,x]   (each factor keeps its strand variable)
//   M1 = (+)_{l<N}    Q[a]<1>{-1,1-N+2l}
//   Minf = (+)_{l>=N} Q[a]/(a)<1>{-1,1-N+2l}
//   H((0)_b) = M1^b (+) ((+)_{j<b} M0^j M1^{b-1-j}) Minf
struct GM {  // multiset of generators of a graded Q[a]-module, torsion length 1
  std::map<std::array<int, 3>, int> free;  // (eps, j, k) -> mult
  std::map<std::array<int, 3>, int> tor;
};

GM gm_tensor(const GM& a, const GM& b) {
  GM r;
  for (const auto& [ga, ma] : a.free)
    for (const auto& [gb, mb] : b.free)
      r.free[{mod2(ga[0] + gb[0]), ga[1] + gb[1], ga[2] + gb[2]}] += ma * mb;
  auto mixed = [&](const auto& fr, const auto& to) {
    for (const auto& [ga, ma] : fr)
      for (const auto& [gb, mb] : to)
        r.tor[{mod2(ga[0] + gb[0]), ga[1] + gb[1], ga[2] + gb[2]}] += ma * mb;
  };
  mixed(a.free, b.tor);
  mixed(b.free, a.tor);
  return r;
}

void gm_add(GM& a, const GM& b) {
  for (const auto& [g, m] : b.free) a.free[g] += m;
  for (const auto& [g, m] : b.tor) a.tor[g] += m;
}

GM circles_expected(int b, int N, int kmax) {
  GM m0, m1, minf, unit;
  int pad = kmax + 4 * b * N;  // towers clipped only after all shifts combine
  unit.free[{0, 0, 0}] = 1;
  for (int t = 0; 2 * t <= pad; ++t) {
    m0.free[{1, -1, 1 - N + 2 * t}] += 1;
    m0.free[{0, 0, 2 * t}] += 1;
  }
  for (int l = 0; l < N; ++l) m1.free[{1, -1, 1 - N + 2 * l}] = 1;
  for (int l = N; 1 - N + 2 * l <= pad; ++l) minf.tor[{1, -1, 1 - N + 2 * l}] = 1;

  auto pw = [&](const GM& g, int e) {
    GM r = unit;
    for (int t = 0; t < e; ++t) r = gm_tensor(r, g);
    return r;
  };
  GM total = pw(m1, b);
  for (int j = 0; j < b; ++j) gm_add(total, gm_tensor(gm_tensor(pw(m0, j), pw(m1, b - 1 - j)), minf));
  // clip to window
  GM clipped;
  for (const auto& [g, m] : total.free)
    if (g[2] <= kmax) clipped.free[g] = m;
  for (const auto& [g, m] : total.tor)
    if (g[2] <= kmax) clipped.tor[g] = m;
  return clipped;
}

GM gm_of_report(const HomologyReport& r) {
  GM g;
  for (const auto& [ei, comp] : r.components) {
    REQUIRE(ei.second == 0);  // no crossings: single homological degree
    for (const auto& [jk, m] : comp.free_mult) g.free[{ei.first, jk.first, jk.second}] += m;
    for (const auto& [ljk, m] : comp.torsion_mult) {
      CHECK(std::get<0>(ljk) == 1);
      g.tor[{ei.first, std::get<1>(ljk), std::get<2>(ljk)}] += m;
    }
  }
  return g;
}

void check_unknot(int N, int m) {
  int kmax = 2 * N + 2 * m + 5;
  HomologyReport rep = total_homology(unknot_word(m), N, kmax, kThreads);
  CAPTURE(N);
  CAPTURE(m);
  CHECK(rep.components == expected_unknot(N, m, rep.window.kmax));
  for (const auto& [name, ok] : rep.audits) {
    CAPTURE(name);
    CHECK(ok);
  }
  // sl(N) homology of the unknot: dim N at eps = 1, i = 0, k in {1-N, .., N-1}
  std::map<std::array<int, 3>, int> sln_exp;
  for (int l = 0; l < N; ++l) sln_exp[{1, 0, 1 - N + 2 * l}] = 1;
  std::map<std::array<int, 3>, int> sln_got;
  for (const auto& [eik, d] : rep.sln)
    if (d > 0) sln_got[eik] = d;
  CHECK(sln_got == sln_exp);
}

}  // namespace

TEST_CASE("concentric circles match the closed form, b <= 3, N <= 2") {
  for (int N = 1; N <= 2; ++N)
    for (int b = 1; b <= 3; ++b) {
      BraidWord w;
      w.b = b;
      HomologyReport rep = total_homology(w, N, 2 * N + 7, kThreads, /*with_sln=*/false);
      CAPTURE(N);
      CAPTURE(b);
      GM got = gm_of_report(rep);
      GM exp = circles_expected(b, N, rep.window.kmax);
      CHECK(got.free == exp.free);
      CHECK(got.tor == exp.tor);
    }
}

TEST_CASE("transverse unknot U_0") {
  check_unknot(1, 0);
  check_unknot(2, 0);
}

TEST_CASE("transverse unknot U_1") {
  check_unknot(1, 1);
  check_unknot(2, 1);
}

TEST_CASE("transverse unknot U_2, N = 1") { check_unknot(1, 2); }

TEST_CASE("negative stabilization changes the invariant") {
  for (int N = 1; N <= 2; ++N) {
    HomologyReport u0 = total_homology(unknot_word(0), N, 2 * N + 5, kThreads);
    HomologyReport u1 = total_homology(unknot_word(1), N, 2 * N + 5, kThreads);
    CHECK(!reports_equal(u0, u1));
  }
}

TEST_CASE("positive stabilization preserves the invariant, N = 1") {
  BraidWord u0 = unknot_word(0);
  BraidWord up = parse_braid("b=2; 1");
  HomologyReport a = total_homology(u0, 1, 9, kThreads);
  HomologyReport b = total_homology(up, 1, 9, kThreads);
  CHECK(reports_equal(a, b));
}
