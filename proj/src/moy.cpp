#include "trkr/moy.hpp"

#include <algorithm>

namespace trkr {

MOYGraph moy_from_resolved(const ResolvedWord& w) {
  MOYGraph g;
  // Arcs of the closed diagram via union-find: scanning the word top to
  // bottom, each wide edge terminates the current arcs on its two strands
  // and starts two new ones; closure glues the final arcs to the initial.
  int narcs = w.b + 2 * static_cast<int>(w.letters.size());
  std::vector<int> parent(narcs);
  for (int i = 0; i < narcs; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<int> cur(w.b);
  for (int s = 0; s < w.b; ++s) cur[s] = s;
  int next = w.b;
  struct WideIdx {
    int in1, in2, out1, out2;
  };
  std::vector<WideIdx> wides;
  for (int l : w.letters) {
    int s = l - 1;  // strands (s, s+1)
    WideIdx wi{cur[s], cur[s + 1], next, next + 1};
    cur[s] = next;
    cur[s + 1] = next + 1;
    next += 2;
    wides.push_back(wi);
  }
  for (int s = 0; s < w.b; ++s) parent[find(cur[s])] = find(s);

  // Name one variable per arc class.
  std::vector<int> var_of(narcs, -1);
  auto var_name = [&](int arc) {
    int r = find(arc);
    if (var_of[r] < 0) {
      var_of[r] = static_cast<int>(g.vars.size());
      g.vars.push_back("x" + std::to_string(g.vars.size() + 1));
    }
    return g.vars[var_of[r]];
  };
  for (const auto& wi : wides)
    g.wides.push_back({var_name(wi.in1), var_name(wi.in2), var_name(wi.out1), var_name(wi.out2)});
  // Strands not touched by any wide edge close up into marked circles.
  std::vector<bool> touched(narcs, false);
  for (const auto& wi : wides)
    touched[find(wi.in1)] = touched[find(wi.in2)] = touched[find(wi.out1)] =
        touched[find(wi.out2)] = true;
  for (int s = 0; s < w.b; ++s)
    if (!touched[find(s)]) {
      touched[find(s)] = true;
      auto v = var_name(s);
      g.arcs.push_back({v, v});
    }
  return g;
}

MoyRows moy_rows(const MOYGraph& g, int N) {
  MoyRows out;
  out.ring = make_ring(g.vars);
  const auto& R = out.ring;
  auto a = BiGradedPoly::var_a(R);

  for (const auto& arc : g.arcs) {
    int h = R->var_index(arc.head), t = R->var_index(arc.tail);
    KoszulRow row;
    row.a0 = a * quotient_pi(R, h, t, N);
    row.a1 = (h == t) ? BiGradedPoly(R) : BiGradedPoly::var_x(R, h) - BiGradedPoly::var_x(R, t);
    out.rows.push_back(std::move(row));
  }
  // Row labels of a wide edge are computed over four distinct formal
  // variables and only then substituted; a closure may identify incident
  // arcs, which can kill the linear label but not the quotient label.
  auto F = make_ring({"u1", "u2", "u3", "u4"});
  auto fa = BiGradedPoly::var_a(F);
  auto xi = BiGradedPoly::var_x(F, 0);
  auto xj = BiGradedPoly::var_x(F, 1);
  auto xk = BiGradedPoly::var_x(F, 2);
  auto xl = BiGradedPoly::var_x(F, 3);
  // g(e1, e2) with g(x+y, xy) = x^{N+1} + y^{N+1}, evaluated along a two
  // step path (xk+xl, xk*xl) -> (xi+xj, xk*xl) -> (xi+xj, xi*xj).
  auto E = make_ring({"e1", "e2"});
  auto gp = newton_g(N, E);
  auto eval = [&](const BiGradedPoly& e1v, const BiGradedPoly& e2v) {
    BiGradedPoly r(F);
    for (const auto& [m, c] : gp.terms()) {
      BiGradedPoly term(F, c);
      for (int t2 = 0; t2 < m.x[0]; ++t2) term = term * e1v;
      for (int t2 = 0; t2 < m.x[1]; ++t2) term = term * e2v;
      r = r + term;
    }
    return r;
  };
  auto g_out = eval(xk + xl, xk * xl);
  auto g_mid = eval(xi + xj, xk * xl);
  auto g_in = eval(xi + xj, xi * xj);
  KoszulRow f1, f2;
  f1.a1 = xk + xl - xi - xj;
  f1.a0 = fa * divide_exact(g_out - g_mid, f1.a1);
  f2.a1 = xk * xl - xi * xj;
  f2.a0 = fa * divide_exact(g_mid - g_in, f2.a1);

  for (const auto& wd : g.wides) {
    std::vector<int> xmap = {R->var_index(wd.in1), R->var_index(wd.in2),
                             R->var_index(wd.out1), R->var_index(wd.out2)};
    KoszulRow r1{f1.a0.remap(R, xmap), f1.a1.remap(R, xmap)};
    KoszulRow r2{f2.a0.remap(R, xmap), f2.a1.remap(R, xmap)};
    out.rows.push_back(std::move(r1));
    out.rows.push_back(std::move(r2));
    out.kshift -= 1;
  }
  return out;
}

void exclude_variables(MoyRows& mr, const std::set<std::string>& keep) {
  const auto& R = mr.ring;
  std::vector<bool> gone(R->nx(), false);

  for (;;) {
    // Find a row whose a1 is linear in some eliminable variable x with a
    // constant coefficient: a1 = c*x + rest, rest free of x.
    int row = -1, var = -1;
    Rational coeff;
    for (size_t r = 0; r < mr.rows.size() && row < 0; ++r) {
      const auto& a1 = mr.rows[r].a1;
      for (const auto& [m, c] : a1.terms()) {
        if (m.a_exp != 0 || m.total() != 1) continue;
        int x = -1;
        for (size_t i = 0; i < m.x.size(); ++i)
          if (m.x[i] == 1) x = static_cast<int>(i);
        if (gone[x] || keep.count(R->xvars[x])) continue;
        // rest must not involve x
        bool clean = true;
        for (const auto& [m2, c2] : a1.terms())
          if (!(m2 == m) && m2.x[x] != 0) clean = false;
        if (!clean) continue;
        row = static_cast<int>(r);
        var = x;
        coeff = c;
        break;
      }
    }
    if (row < 0) break;

    BiGradedPoly rest = mr.rows[row].a1 -
        BiGradedPoly::var_x(R, var) * BiGradedPoly(R, coeff);
    BiGradedPoly image = rest * BiGradedPoly(R, -1 / coeff);
    mr.rows.erase(mr.rows.begin() + row);
    gone[var] = true;
    std::map<int, BiGradedPoly> sub = {{var, image}};
    for (auto& r : mr.rows) {
      r.a0 = r.a0.substitute_x(sub);
      r.a1 = r.a1.substitute_x(sub);
    }
  }

  // Compact the ring to the surviving variables.
  std::vector<std::string> vars2;
  std::vector<int> xmap(R->nx(), -1);
  for (size_t i = 0; i < R->nx(); ++i)
    if (!gone[i]) {
      xmap[i] = static_cast<int>(vars2.size());
      vars2.push_back(R->xvars[i]);
    }
  auto R2 = make_ring(vars2);
  for (auto& r : mr.rows) {
    r.a0 = r.a0.remap(R2, xmap);
    r.a1 = r.a1.remap(R2, xmap);
  }
  mr.ring = R2;
}

MatrixFactorization moy_mf(const MOYGraph& g, int N, bool exclude) {
  MoyRows mr = moy_rows(g, N);
  if (exclude) exclude_variables(mr);
  auto M = koszul_mf(mr.ring, N, mr.rows);
  return shift_mf(M, 0, 0, mr.kshift);
}

}  // namespace trkr
