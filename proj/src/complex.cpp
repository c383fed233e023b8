#include "trkr/complex.hpp"

#include "trkr/moy.hpp"

#include <map>
#include <sstream>

namespace trkr {

namespace {

// Arc classes of the closed braid diagram. Scanning the word left to right
// (top to bottom), each crossing ends the current arcs on its two strands
// and starts two new ones; the closure glues final arcs back to initial.
struct ArcData {
  RingPtr ring;
  // per crossing: variable indices (top_left, top_right, bot_left, bot_right)
  struct Site {
    int tl, tr, bl, br;
  };
  std::vector<Site> sites;
  std::vector<int> circle_vars;  // arcs of strands untouched by any crossing
};

ArcData braid_arcs(const BraidWord& w) {
  int narcs = w.b + 2 * w.crossings();
  std::vector<int> parent(narcs);
  for (int i = 0; i < narcs; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> cur(w.b);
  for (int s = 0; s < w.b; ++s) cur[s] = s;
  struct RawSite {
    int tl, tr, bl, br;
  };
  std::vector<RawSite> raw;
  int next = w.b;
  std::vector<bool> touched(narcs, false);
  for (int l : w.letters) {
    int s = std::abs(l) - 1;
    raw.push_back({cur[s], cur[s + 1], next, next + 1});
    cur[s] = next;
    cur[s + 1] = next + 1;
    next += 2;
  }
  for (int s = 0; s < w.b; ++s) parent[find(cur[s])] = find(s);
  for (const auto& r : raw)
    touched[find(r.tl)] = touched[find(r.tr)] = touched[find(r.bl)] = touched[find(r.br)] = true;

  ArcData out;
  std::vector<int> var_of(narcs, -1);
  std::vector<std::string> names;
  auto var = [&](int arc) {
    int r = find(arc);
    if (var_of[r] < 0) {
      var_of[r] = static_cast<int>(names.size());
      names.push_back("x" + std::to_string(names.size() + 1));
    }
    return var_of[r];
  };
  for (const auto& r : raw) out.sites.push_back({var(r.tl), var(r.tr), var(r.bl), var(r.br)});
  for (int s = 0; s < w.b; ++s)
    if (!touched[find(s)]) {
      touched[find(s)] = true;
      out.circle_vars.push_back(var(s));
    }
  out.ring = make_ring(names);
  return out;
}

MatrixFactorization remap_mf(const MatrixFactorization& M, const RingPtr& R,
                             const std::vector<int>& xmap) {
  MatrixFactorization out;
  out.ring = R;
  out.N = M.N;
  out.potential = M.potential.remap(R, xmap);
  out.gens = M.gens;
  out.d.assign(M.d.size(), {});
  for (size_t s = 0; s < M.d.size(); ++s)
    for (const auto& [t, p] : M.d[s]) {
      auto q = p.remap(R, xmap);
      if (!q.is_zero()) out.d[s].push_back({t, std::move(q)});
    }
  return out;
}

PolyMatrix remap_pm(const PolyMatrix& f, const RingPtr& R, const std::vector<int>& xmap) {
  PolyMatrix out(f.size());
  for (size_t s = 0; s < f.size(); ++s)
    for (const auto& [t, p] : f[s]) {
      auto q = p.remap(R, xmap);
      if (!q.is_zero()) out[s].push_back({t, std::move(q)});
    }
  return out;
}

}  // namespace

CubeComplex braid_complex(const BraidWord& w, int N) {
  CubeComplex cube;
  cube.N = N;
  cube.braid = w;
  ArcData arcs = braid_arcs(w);
  cube.ring = arcs.ring;
  const auto& R = cube.ring;
  int c = w.crossings();

  ChiPair chi = chi_pair(N);
  // chi ring order is (x1, y1, y2, x2) = (bot_l, bot_r, top_l, top_r).
  auto site_map = [&](const ArcData::Site& s) {
    return std::vector<int>{s.bl, s.br, s.tl, s.tr};
  };

  // Per crossing and per resolution: the shifted local factorization, its
  // homological degree, and the connecting map with its direction.
  struct Local {
    MatrixFactorization piece[2];
    int hdeg[2];
    int from_r;  // resolution at the source of the connecting map
    PolyMatrix map;
  };
  std::vector<Local> locals;
  for (int i = 0; i < c; ++i) {
    const auto& xmap = site_map(arcs.sites[i]);
    MatrixFactorization G0 = remap_mf(chi.G0, R, xmap);
    MatrixFactorization G1 = remap_mf(chi.G1, R, xmap);
    Local L;
    if (w.letters[i] > 0) {
      // positive crossing:  G1<1>{1,N} (degree -1)  --chi1-->  G0<1>{1,N-1} (degree 0)
      L.piece[0] = shift_mf(G0, 1, 1, N - 1);
      L.piece[1] = shift_mf(G1, 1, 1, N);
      L.hdeg[0] = 0;
      L.hdeg[1] = -1;
      L.from_r = 1;
      L.map = remap_pm(chi.chi1.f, R, xmap);
    } else {
      // negative crossing:  G0<1>{-1,-N+1} (degree 0)  --chi0-->  G1<1>{-1,-N} (degree 1)
      L.piece[0] = shift_mf(G0, 1, -1, -N + 1);
      L.piece[1] = shift_mf(G1, 1, -1, -N);
      L.hdeg[0] = 0;
      L.hdeg[1] = 1;
      L.from_r = 0;
      L.map = remap_pm(chi.chi0.f, R, xmap);
    }
    locals.push_back(std::move(L));
  }

  // Circle factor for each untouched strand.
  std::vector<MatrixFactorization> circles;
  auto a = BiGradedPoly::var_a(R);
  for (int v : arcs.circle_vars)
    circles.push_back(koszul_mf(R, N, {{a * quotient_pi(R, v, v, N), BiGradedPoly(R)}}));

  // Vertices: all resolution vectors.
  int nv = 1 << c;
  cube.vertices.resize(nv);
  for (int v = 0; v < nv; ++v) {
    CubeVertex& vx = cube.vertices[v];
    vx.r.resize(c);
    MatrixFactorization M;
    M.ring = R;
    M.N = N;
    M.potential = BiGradedPoly(R);
    M.gens = {MFGen{0, 0, 0}};
    M.d = PolyMatrix(1);
    for (int i = 0; i < c; ++i) {
      vx.r[i] = (v >> i) & 1;
      vx.hdeg += locals[i].hdeg[vx.r[i]];
      M = tensor_mf(M, locals[i].piece[vx.r[i]]);
      vx.factor_rank.push_back(static_cast<int>(locals[i].piece[vx.r[i]].rank()));
    }
    for (const auto& circ : circles) {
      M = tensor_mf(M, circ);
      vx.factor_rank.push_back(static_cast<int>(circ.rank()));
    }
    vx.mf = std::move(M);
  }

  // Edges: flip one crossing from its source resolution, with the Koszul
  // sign given by the homological degrees of the preceding factors.
  for (int v = 0; v < nv; ++v) {
    const CubeVertex& src = cube.vertices[v];
    for (int i = 0; i < c; ++i) {
      if (src.r[i] != locals[i].from_r) continue;
      int u = v ^ (1 << i);
      const CubeVertex& dst = cube.vertices[u];

      int presign = 0;
      for (int p = 0; p < i; ++p) presign += locals[p].hdeg[src.r[p]];
      Rational sign = (presign % 2 != 0) ? -1 : 1;

      // Tensor id (x) ... (x) local map (x) ... (x) id via stride arithmetic.
      size_t total = src.mf.rank();
      std::vector<int> stride(src.factor_rank.size(), 1);
      for (int t = static_cast<int>(src.factor_rank.size()) - 2; t >= 0; --t)
        stride[t] = stride[t + 1] * src.factor_rank[t + 1];
      const PolyMatrix& local = locals[i].map;

      MFMorphism f;
      f.z2 = 0;
      f.j = 0;
      f.k = 0;
      f.f.assign(total, {});
      for (size_t s = 0; s < total; ++s) {
        int li = static_cast<int>(s / stride[i]) % src.factor_rank[i];
        size_t base = s - static_cast<size_t>(li) * stride[i];
        for (const auto& [lt, p] : local[li]) {
          size_t tgt = base + static_cast<size_t>(lt) * stride[i];
          f.f[s].push_back({static_cast<int>(tgt), p * sign});
        }
      }
      if (dst.hdeg != src.hdeg + 1) throw Error("braid_complex: edge degree mismatch");
      cube.edges.push_back({v, u, i, std::move(f)});
    }
  }
  return cube;
}

MFComplex flatten(const CubeComplex& cube) {
  MFComplex out;
  out.ring = cube.ring;
  out.N = cube.N;
  out.with_a = true;
  if (cube.vertices.empty()) throw Error("flatten: empty cube");

  out.deg_lo = out.deg_hi = cube.vertices[0].hdeg;
  for (const auto& v : cube.vertices) {
    out.deg_lo = std::min(out.deg_lo, v.hdeg);
    out.deg_hi = std::max(out.deg_hi, v.hdeg);
  }
  int nd = out.degrees();
  out.gens.resize(nd);
  out.dmf.resize(nd);
  out.dchi.resize(nd);

  // Vertex offsets inside each degree, in vertex index order.
  std::vector<size_t> offset(cube.vertices.size());
  for (size_t v = 0; v < cube.vertices.size(); ++v) {
    int d = cube.vertices[v].hdeg - out.deg_lo;
    offset[v] = out.gens[d].size();
    for (const auto& g : cube.vertices[v].mf.gens) out.gens[d].push_back({g.z2, g.j, g.k, false});
  }
  for (int d = 0; d < nd; ++d) {
    out.dmf[d].assign(out.gens[d].size(), {});
    out.dchi[d].assign(out.gens[d].size(), {});
  }
  for (size_t v = 0; v < cube.vertices.size(); ++v) {
    int d = cube.vertices[v].hdeg - out.deg_lo;
    const auto& mf = cube.vertices[v].mf;
    for (size_t s = 0; s < mf.rank(); ++s)
      for (const auto& [t, p] : mf.d[s])
        out.dmf[d][offset[v] + s].push_back({static_cast<int>(offset[v] + t), p});
  }
  for (const auto& e : cube.edges) {
    int d = cube.vertices[e.from].hdeg - out.deg_lo;
    if (cube.vertices[e.to].hdeg != cube.vertices[e.from].hdeg + 1)
      throw Error("flatten: edge does not raise the homological degree");
    for (size_t s = 0; s < e.map.f.size(); ++s)
      for (const auto& [t, p] : e.map.f[s])
        out.dchi[d][offset[e.from] + s].push_back(
            {static_cast<int>(offset[e.to] + t), p});
  }
  return out;
}

MFComplex specialize_a1(const MFComplex& c) {
  MFComplex out = c;
  out.with_a = false;
  auto spec = [](PolyMatrix& pm) {
    for (auto& col : pm) {
      std::vector<PolyEntry> kept;
      for (auto& e : col) {
        auto q = e.p.substitute_a(1);
        if (!q.is_zero()) kept.push_back({e.row, std::move(q)});
      }
      col = std::move(kept);
    }
  };
  for (auto& pm : out.dmf) spec(pm);
  for (auto& pm : out.dchi) spec(pm);
  return out;
}

MFComplex cone_quotient(const MFComplex& c) {
  MFComplex out;
  out.ring = c.ring;
  out.N = c.N;
  out.with_a = true;
  out.deg_lo = c.deg_lo;
  out.deg_hi = c.deg_hi + 1;
  int nd = out.degrees();
  out.gens.resize(nd);
  out.dmf.resize(nd);
  out.dchi.resize(nd);

  // Degree d holds C^d followed by (C/aC)^{d-1}; everything carries {-2,0}.
  auto cdim = [&](int d) {
    return (d >= 0 && d < c.degrees()) ? c.gens[d].size() : size_t(0);
  };
  for (int d = 0; d < nd; ++d) {
    if (cdim(d))
      for (const auto& g : c.gens[d]) out.gens[d].push_back({g.z2, g.j - 2, g.k, g.mod_a});
    if (cdim(d - 1))
      for (const auto& g : c.gens[d - 1]) out.gens[d].push_back({g.z2, g.j - 2, g.k, true});
    out.dmf[d].assign(out.gens[d].size(), {});
    out.dchi[d].assign(out.gens[d].size(), {});
  }
  auto mod_a_pm = [](const PolyMatrix& pm) {
    PolyMatrix out2(pm.size());
    for (size_t s = 0; s < pm.size(); ++s)
      for (const auto& [t, p] : pm[s]) {
        auto q = p.truncate_mod_a();
        if (!q.is_zero()) out2[s].push_back({t, std::move(q)});
      }
    return out2;
  };
  for (int d = 0; d < nd; ++d) {
    size_t nc = cdim(d), nq = cdim(d - 1);
    // dmf: block diagonal.
    if (nc)
      for (size_t s = 0; s < nc; ++s)
        for (const auto& [t, p] : c.dmf[d][s]) out.dmf[d][s].push_back({t, p});
    if (nq) {
      auto q = mod_a_pm(c.dmf[d - 1]);
      for (size_t s = 0; s < nq; ++s)
        for (const auto& [t, p] : q[s])
          out.dmf[d][nc + s].push_back({static_cast<int>(nc + t), p});
    }
    // dchi on the cone: (x, y) -> (dchi x, pi(x) - dchi y).
    size_t nc1 = cdim(d + 1);
    if (nc && d + 1 <= c.degrees() - 1 && d < c.degrees())
      for (size_t s = 0; s < nc; ++s)
        for (const auto& [t, p] : c.dchi[d][s]) out.dchi[d][s].push_back({t, p});
    if (nc)
      for (size_t s = 0; s < nc; ++s)
        out.dchi[d][s].push_back({static_cast<int>(nc1 + s), BiGradedPoly(c.ring, 1)});
    if (nq && d <= c.degrees() - 1) {
      auto q = mod_a_pm(c.dchi[d - 1]);
      for (size_t s = 0; s < nq; ++s)
        for (const auto& [t, p] : q[s])
          out.dchi[d][nc + s].push_back({static_cast<int>(nc1 + t), -p});
    }
  }
  return out;
}

void audit_complex(const MFComplex& c) {
  int nd = c.degrees();
  auto check_entries = [&](const PolyMatrix& pm, const std::vector<GenInfo>& src,
                           const std::vector<GenInfo>& tgt, bool is_dmf, int d) {
    if (pm.size() != src.size()) throw Error("audit_complex: matrix shape mismatch");
    for (size_t s = 0; s < pm.size(); ++s)
      for (const auto& [t, p] : pm[s]) {
        if (t < 0 || static_cast<size_t>(t) >= tgt.size())
          throw Error("audit_complex: entry out of range");
        if (p.is_zero()) continue;
        int want_z2 = is_dmf ? ((src[s].z2 + 1) & 1) : src[s].z2;
        if (tgt[t].z2 != want_z2) throw Error("audit_complex: z2 degree violated");
        Bidegree want = is_dmf
                            ? Bidegree{1 + src[s].j - tgt[t].j, c.N + 1 + src[s].k - tgt[t].k}
                            : Bidegree{src[s].j - tgt[t].j, src[s].k - tgt[t].k};
        if (!p.is_homogeneous() || !(p.bidegree() == want)) {
          std::ostringstream os;
          os << "audit_complex: inhomogeneous entry in degree " << d + c.deg_lo;
          throw Error(os.str());
        }
      }
  };
  // Entries into a mod-a generator are representatives: reduce mod a before
  // testing for zero (the quotient differential only commutes mod a).
  auto reduce_targets = [](PolyMatrix pm, const std::vector<GenInfo>& tgt) {
    for (auto& col : pm)
      for (auto& e : col)
        if (tgt[e.row].mod_a) e.p = e.p.truncate_mod_a();
    return pm;
  };
  for (int d = 0; d < nd; ++d) {
    check_entries(c.dmf[d], c.gens[d], c.gens[d], true, d);
    if (d + 1 < nd) check_entries(c.dchi[d], c.gens[d], c.gens[d + 1], false, d);

    if (!pm_is_zero(reduce_targets(pm_compose(c.dmf[d], c.dmf[d]), c.gens[d])))
      throw Error("audit_complex: dmf^2 != 0");
    if (d + 2 < nd &&
        !pm_is_zero(reduce_targets(pm_compose(c.dchi[d + 1], c.dchi[d]), c.gens[d + 2])))
      throw Error("audit_complex: dchi^2 != 0");
    if (d + 1 < nd) {
      auto ab = pm_compose(c.dmf[d + 1], c.dchi[d]);
      auto ba = pm_compose(c.dchi[d], c.dmf[d]);
      if (!pm_is_zero(
              reduce_targets(pm_add(ab, pm_scale(ba, -1), c.gens[d].size()), c.gens[d + 1])))
        throw Error("audit_complex: dmf and dchi do not commute");
    }
  }
}

}  // namespace trkr
