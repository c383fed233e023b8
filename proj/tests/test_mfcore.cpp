#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trkr/chi.hpp"
#include "trkr/mf.hpp"
#include "trkr/moy.hpp"

using namespace trkr;

TEST_CASE("koszul rows, tensor and audit") {
  int N = 2;
  auto R = make_ring({"x", "y"});
  auto a = BiGradedPoly::var_a(R);
  auto x = BiGradedPoly::var_x(R, 0);
  auto y = BiGradedPoly::var_x(R, 1);

  // Arc x <- y: (a (x^3 - y^3)/(x - y), x - y), potential a(x^3 - y^3).
  KoszulRow arc{a * quotient_pi(R, 0, 1, N), x - y};
  auto M = koszul_mf(R, N, {arc});
  CHECK(M.rank() == 2);
  CHECK(M.gens[0].z2 == 0);
  CHECK(M.gens[1].z2 == 1);
  CHECK(M.gens[1].j == -1);
  CHECK(M.gens[1].k == 1 - N);
  CHECK_NOTHROW(audit_mf(M));
  auto xp = [&](BiGradedPoly v, int e) {
    BiGradedPoly r(R, 1);
    for (int t = 0; t < e; ++t) r = r * v;
    return r;
  };
  CHECK(M.potential == a * (xp(x, 3) - xp(y, 3)));

  // Marked circle: (a(N+1)x^N, 0), potential 0.
  KoszulRow circ{a * quotient_pi(R, 0, 0, N), BiGradedPoly(R)};
  auto C = koszul_mf(R, N, {circ});
  CHECK(C.potential.is_zero());
  CHECK_NOTHROW(audit_mf(C));

  auto T = tensor_mf(M, C);
  CHECK(T.rank() == 4);
  CHECK(T.potential == M.potential);
  CHECK_NOTHROW(audit_mf(T));

  auto S = shift_mf(T, 1, -1, 3);
  CHECK(S.gens[0].z2 == 1);
  CHECK(S.gens[0].j == -1);
  CHECK(S.gens[0].k == 3);
  CHECK_NOTHROW(audit_mf(S));
}

TEST_CASE("audit catches corruption") {
  int N = 1;
  auto R = make_ring({"x", "y"});
  auto a = BiGradedPoly::var_a(R);
  auto x = BiGradedPoly::var_x(R, 0);
  auto y = BiGradedPoly::var_x(R, 1);
  auto M = koszul_mf(R, N, {{a * quotient_pi(R, 0, 1, N), x - y}});

  auto bad = M;
  bad.d[1][0].p = x + y;  // wrong d1: d^2 is no longer the potential
  CHECK_THROWS_AS(audit_mf(bad), Error);

  auto bad2 = M;
  bad2.gens[1].k += 2;  // homogeneity violated
  CHECK_THROWS_AS(audit_mf(bad2), Error);
}

TEST_CASE("moy graph of resolved closures") {
  // One letter t1 on two strands: one wide edge, no circles, two arcs
  // (top pair and bottom pair identified through the closure).
  auto g = moy_from_resolved(parse_resolved("b=2; t1"));
  CHECK(g.wides.size() == 1);
  CHECK(g.arcs.empty());
  CHECK(g.vars.size() == 2);

  // Untouched strand becomes a marked circle.
  auto g2 = moy_from_resolved(parse_resolved("b=3; t1"));
  CHECK(g2.wides.size() == 1);
  CHECK(g2.arcs.size() == 1);
  CHECK(g2.arcs[0].head == g2.arcs[0].tail);

  // Empty word on b strands: b circles.
  auto g3 = moy_from_resolved(parse_resolved("b=3;"));
  CHECK(g3.wides.empty());
  CHECK(g3.arcs.size() == 3);
}

TEST_CASE("moy_mf potentials vanish on closures and audit passes") {
  for (const char* txt : {"b=2; t1", "b=3; t1 t2", "b=2; t1 t1", "b=3; t2 t1 t2", "b=4; t1 t3"}) {
    auto w = parse_resolved(txt);
    for (int N : {1, 2}) {
      auto M = moy_mf(moy_from_resolved(w), N);
      CAPTURE(txt);
      CAPTURE(N);
      CHECK(M.potential.is_zero());
      CHECK_NOTHROW(audit_mf(M));
    }
  }
}

TEST_CASE("wide edge factorization matches its defining equation") {
  int N = 2;
  MOYGraph g;
  g.vars = {"xi", "xj", "xk", "xl"};
  g.wides.push_back({"xi", "xj", "xk", "xl"});
  auto M = moy_mf(g, N);
  CHECK(M.rank() == 4);
  CHECK_NOTHROW(audit_mf(M));
  // Potential of the open wide edge: a(xk^{N+1} + xl^{N+1} - xi^{N+1} - xj^{N+1}).
  auto R = M.ring;
  auto a = BiGradedPoly::var_a(R);
  auto pw = [&](const char* n) {
    auto v = BiGradedPoly::var_x(R, R->var_index(n));
    BiGradedPoly r(R, 1);
    for (int t = 0; t < N + 1; ++t) r = r * v;
    return r;
  };
  CHECK(M.potential == a * (pw("xk") + pw("xl") - pw("xi") - pw("xj")));
  // Overall shift {0,-1}: the subset-empty generator carries it.
  CHECK(M.gens[0].k == -1);
}

TEST_CASE("variable exclusion preserves graded homotopy type data") {
  // On the row level: closed single-letter word; exclusion should shrink
  // the presentation while keeping the potential zero and the audit green.
  for (const char* txt : {"b=2; t1", "b=2; t1 t1", "b=3; t1 t2", "b=3; t2 t1 t2"}) {
    auto w = parse_resolved(txt);
    for (int N : {1, 2}) {
      auto big = moy_mf(moy_from_resolved(w), N, false);
      auto small = moy_mf(moy_from_resolved(w), N, true);
      CAPTURE(txt);
      CAPTURE(N);
      CHECK(small.rank() <= big.rank());
      CHECK(small.potential.is_zero());
      CHECK_NOTHROW(audit_mf(small));
    }
  }
}

TEST_CASE("chi pair: existence, uniqueness, composite") {
  for (int N : {1, 2, 3}) {
    CAPTURE(N);
    auto cp = chi_pair(N);
    CHECK_NOTHROW(audit_mf(cp.G0));
    CHECK_NOTHROW(audit_mf(cp.G1));

    // chain map conditions hold on the nose
    CHECK(pm_is_zero(morphism_differential(cp.G0, cp.G1, cp.chi0)));
    CHECK(pm_is_zero(morphism_differential(cp.G1, cp.G0, cp.chi1)));

    // uniqueness up to homotopy and scale
    auto h0 = hom_space(cp.G0, cp.G1, 0, 0, -1);
    auto h1 = hom_space(cp.G1, cp.G0, 0, 0, -1);
    CHECK(h0.up_to_homotopy.size() == 1);
    CHECK(h1.up_to_homotopy.size() == 1);

    // chi1 chi0 - (x2 - x1) id is null-homotopic, with an explicit homotopy.
    auto R = cp.ring;
    auto scal = BiGradedPoly::var_x(R, R->var_index("x2")) -
                BiGradedPoly::var_x(R, R->var_index("x1"));
    PolyMatrix want(cp.G0.rank());
    for (size_t i = 0; i < cp.G0.rank(); ++i) want[i].push_back({static_cast<int>(i), scal});
    MFMorphism diff{0, 0, -2, pm_add(pm_compose(cp.chi1.f, cp.chi0.f), pm_scale(want, -1),
                                     cp.G0.rank())};
    MFMorphism h;
    CHECK(null_homotopic(cp.G0, cp.G0, diff, &h));
    // verify the returned homotopy exactly
    auto dh = morphism_differential(cp.G0, cp.G0, h);
    CHECK(pm_is_zero(pm_add(dh, pm_scale(diff.f, -1), cp.G0.rank())));

    // neither chi is itself null-homotopic
    CHECK(!null_homotopic(cp.G0, cp.G1, cp.chi0));
    CHECK(!null_homotopic(cp.G1, cp.G0, cp.chi1));
  }
}
