#include "trkr/pipeline.hpp"

#include "trkr/qmatrix.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <thread>
#include <unordered_map>

namespace trkr {

int env_threads() {
  const char* e = std::getenv("TRKR_THREADS");
  if (!e) return 1;
  int n = std::atoi(e);
  return n > 0 ? n : 1;
}

namespace {

struct MonoHash {
  size_t operator()(const Monomial& m) const {
    size_t h = 1469598103934665603ull ^ m.a_exp;
    for (auto e : m.x) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

// All monomials of the ring per total degree, with rank lookup.
struct MonoTable {
  RingPtr ring;
  std::vector<std::vector<Monomial>> by_deg;
  std::unordered_map<Monomial, int, MonoHash> rank_;

  void grow(int maxdeg) {
    int from = static_cast<int>(by_deg.size());
    for (int d = from; d <= maxdeg; ++d) {
      std::vector<Monomial> list;
      Monomial m;
      m.x.assign(ring->nx(), 0);
      if (ring->nx() == 0) {
        if (d == 0) list.push_back(m);
      } else {
        // lexicographic enumeration of compositions of d
        std::vector<int> e(ring->nx(), 0);
        e[0] = d;
        for (;;) {
          for (size_t i = 0; i < e.size(); ++i) m.x[i] = static_cast<std::uint16_t>(e[i]);
          list.push_back(m);
          // next composition
          int i = static_cast<int>(e.size()) - 2;
          while (i >= 0 && e[i] == 0) --i;
          if (i < 0) break;
          int tail = e.back();
          e.back() = 0;
          --e[i];
          e[i + 1] = tail + 1;
        }
      }
      for (size_t r = 0; r < list.size(); ++r) rank_.emplace(list[r], static_cast<int>(r));
      by_deg.push_back(std::move(list));
    }
  }
  int rank(const Monomial& m) const {
    auto it = rank_.find(m);
    return it == rank_.end() ? -1 : it->second;
  }
};

struct CellKey {
  int d;    // homological degree index (0-based from deg_lo)
  int eps;  // z2 sector
  int j;    // a-grading (ignored when !with_a)
  int k;    // x-grading
  auto operator<=>(const CellKey&) const = default;
};

// Basis of one cell: per contributing generator a block of monomials of the
// forced degree; elements (g, p, alpha) with p the a-exponent.
struct CellBasis {
  int dim = 0;
  std::vector<int> block_of_gen;  // gens[d] index -> block offset, or -1
  std::vector<int> gen_of_block;  // block -> gen
  std::vector<int> offset;        // block -> first index
  std::vector<int> mdeg;          // block -> monomial degree
};

struct PipelineCtx {
  const MFComplex* C;
  const MonoTable* monos;
  bool with_a;
  int N;

  CellBasis basis(const CellKey& key) const {
    CellBasis b;
    const auto& gens = C->gens[key.d];
    b.block_of_gen.assign(gens.size(), -1);
    for (size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].z2 != key.eps) continue;
      if (with_a) {
        int pj = key.j - gens[g].j;
        if (pj < 0 || (pj & 1)) continue;
        if (gens[g].mod_a && pj != 0) continue;
      }
      int pk = key.k - gens[g].k;
      if (pk < 0 || (pk & 1)) continue;
      int m = pk / 2;
      int cnt = static_cast<int>(monos->by_deg[m].size());
      if (cnt == 0) continue;
      b.block_of_gen[g] = static_cast<int>(b.gen_of_block.size());
      b.gen_of_block.push_back(static_cast<int>(g));
      b.offset.push_back(b.dim);
      b.mdeg.push_back(m);
      b.dim += cnt;
    }
    return b;
  }

  // Columns of the map induced by a PolyMatrix between two cells (the target
  // cell determines the forced a-exponent of each entry automatically).
  SparseMatrix build_map(const CellBasis& X, int dX, const CellBasis& Y, int dY,
                         const PolyMatrix& D, const CellKey& xkey, const CellKey& ykey) const {
    (void)dX;
    const auto& tgens = C->gens[dY];
    SparseMatrix M = SparseMatrix::zero(Y.dim, X.dim);
    for (size_t bx = 0; bx < X.gen_of_block.size(); ++bx) {
      int g = X.gen_of_block[bx];
      int m = X.mdeg[bx];
      int p = with_a ? (xkey.j - C->gens[xkey.d][g].j) / 2 : 0;
      const auto& mlist = monos->by_deg[m];
      for (const auto& [t, poly] : D[g]) {
        int bt = Y.block_of_gen[t];
        if (bt < 0) continue;
        for (const auto& [em, c] : poly.terms()) {
          if (with_a) {
            int p2 = p + static_cast<int>(em.a_exp);
            int want = (ykey.j - tgens[t].j) / 2;
            if (p2 != want) continue;  // cannot happen for homogeneous entries
            if (tgens[t].mod_a && p2 != 0) continue;
          } else {
            // after a -> 1 the a-exponent is free; only x-degrees must match
          }
          for (size_t r = 0; r < mlist.size(); ++r) {
            Monomial prod = mlist[r] * em;
            prod.a_exp = 0;
            int rr = monos->rank(prod);
            if (rr < 0) throw Error("pipeline: monomial outside table");
            M.set(Y.offset[bt] + rr, X.offset[bx] + static_cast<int>(r), c);
          }
        }
      }
    }
    M.normalize();
    return M;
  }
};

// Stage-1 data of one cell. A vector in ker(dmf_out) is determined by its
// values on the free (non-pivot) columns of the outgoing map, so the quotient
// by the incoming image is taken entirely in those "kernel coordinates": the
// image becomes a reduced row basis there, and the representatives are the
// kernel vectors of the leftover coordinates.
struct CellH {
  int dim = 0;
  int h = 0;
  int rank_out = 0;            // rank of the outgoing dmf map
  std::vector<SparseVec> reps;  // h kernel vectors, in cell coordinates
  std::vector<int> free_idx;    // cell coordinate -> kernel coordinate, or -1
  RowBasis zimage;              // incoming image in kernel coordinates
  std::vector<Rational> zpcoef;  // pivot coefficient per zimage row
  std::vector<int> slot;         // kernel coordinate -> representative slot, or -1

  // Coefficients of [w] on the representatives; w must lie in ker(dmf_out).
  std::vector<Rational> project(const SparseVec& w) const {
    std::vector<Rational> out(h, Rational(0));
    if (h == 0) return out;
    std::unordered_map<int, Rational> z;
    for (const auto& [r, c] : w) {
      int f = free_idx[r];
      if (f >= 0) z.emplace(f, c);
    }
    // forward pass in retirement order: a row may introduce later pivots,
    // which the later rows then clear
    for (size_t t = 0; t < zimage.rows.size(); ++t) {
      auto it = z.find(zimage.pivot[t]);
      if (it == z.end() || it->second == 0) continue;
      Rational fac = it->second / zpcoef[t];
      for (const auto& [cc, vv] : zimage.rows[t]) {
        auto jt = z.find(cc);
        if (jt == z.end())
          z.emplace(cc, -fac * vv);
        else
          jt->second -= fac * vv;
      }
    }
    for (const auto& [zi, c] : z) {
      if (c == 0) continue;
      int s = slot[zi];
      if (s < 0) throw Error("pipeline: projection remainder outside image+reps");
      out[s] = c;
    }
    return out;
  }
};

using Dense = std::vector<std::vector<Rational>>;  // [row][col]

int dense_rank(Dense m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

Dense dense_mul(const Dense& A, const Dense& B) {
  int n = static_cast<int>(A.size());
  int m = B.empty() ? 0 : static_cast<int>(B[0].size());
  int k = static_cast<int>(B.size());
  Dense out(n, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (A[i][t] == 0) continue;
      for (int j = 0; j < m; ++j)
        if (B[t][j] != 0) out[i][j] += A[i][t] * B[t][j];
    }
  return out;
}

}  // namespace

HomologyResult compute_homology(const MFComplex& c, const Window& w, const PipelineOptions& opt) {
  HomologyResult res;
  res.window = w;
  res.with_a = c.with_a;

  // Internal degree bounds from the generators.
  int jmin_int = 0, kmin_int = 0;
  bool first = true;
  for (const auto& degs : c.gens)
    for (const auto& g : degs) {
      if (first) {
        jmin_int = g.j;
        kmin_int = g.k;
        first = false;
      } else {
        jmin_int = std::min(jmin_int, g.j);
        kmin_int = std::min(kmin_int, g.k);
      }
    }
  if (first) return res;
  res.window.jmin = jmin_int;
  res.window.kmin = kmin_int;

  MonoTable monos;
  monos.ring = c.ring;
  monos.grow(std::max(0, (w.kmax + c.N + 1 - kmin_int) / 2 + 1));

  PipelineCtx ctx{&c, &monos, c.with_a, c.N};
  int nd = c.degrees();

  const bool profile = std::getenv("TRKR_PROFILE") != nullptr;
  std::atomic<long> t_build{0}, t_rank{0}, t_reps{0}, t_dchi{0}, t_amat{0}, t_s2{0};
  auto tick = [] { return std::chrono::steady_clock::now(); };
  auto add = [](std::atomic<long>& acc, std::chrono::steady_clock::time_point t0) {
    acc += std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - t0)
               .count();
  };

  // Module-structure bookkeeping: per (eps, i, k), dims and a-maps over j.
  struct JData {
    std::map<int, int> dim;     // j -> dim H2
    std::map<int, Dense> amat;  // j -> matrix H2_j -> H2_{j+2}
  };
  std::map<std::array<int, 3>, JData> jdata;  // (eps, i, k)

  // Ranks of outgoing dmf maps from earlier k-slices, reused as the incoming
  // rank of the cell N+1 steps up (it is the same matrix, and the incoming
  // image lies in the outgoing kernel because dmf squares to zero).
  std::map<CellKey, int> rank_out_all;

  for (int k = kmin_int; k <= w.kmax; ++k) {
    // ---- stage 1 on the k-slice -------------------------------------------
    std::vector<CellKey> keys;
    std::vector<int> jvals;
    if (c.with_a)
      for (int j = jmin_int; j <= w.jmax; ++j) jvals.push_back(j);
    else
      jvals.push_back(0);
    for (int d = 0; d < nd; ++d)
      for (int eps = 0; eps < 2; ++eps)
        for (int j : jvals) keys.push_back({d, eps, j, k});

    std::map<CellKey, CellH> slice;
    for (const auto& key : keys) slice.emplace(key, CellH{});

    std::atomic<size_t> next(0);
    auto worker = [&]() {
      for (;;) {
        size_t idx = next.fetch_add(1);
        if (idx >= keys.size()) return;
        const CellKey& key = keys[idx];
        CellH& out = slice.at(key);

        auto tb = tick();
        CellBasis X = ctx.basis(key);
        out.dim = X.dim;
        if (X.dim == 0) continue;

        // outgoing dmf
        CellKey ykey{key.d, 1 - key.eps, key.j + 1, key.k + c.N + 1};
        CellBasis Y = ctx.basis(ykey);
        SparseMatrix B = ctx.build_map(X, key.d, Y, key.d, c.dmf[key.d], key, ykey);
        add(t_build, tb);
        auto tr = tick();

        // Cheap ranks decide h first; the expensive echelons (kernel
        // back-substitution, image projection) are only built for the cells
        // that actually carry homology. The incoming rank of this cell is the
        // outgoing rank of the cell N+1 steps down, read from earlier slices
        // (the cache is only written after each slice joins, so concurrent
        // reads here are safe).
        int rB = rank_elim(B);
        add(t_rank, tr);
        out.rank_out = rB;
        CellKey skey{key.d, 1 - key.eps, c.with_a ? key.j - 1 : 0, key.k - c.N - 1};
        auto sit = rank_out_all.find(skey);
        int rA = sit == rank_out_all.end() ? 0 : sit->second;
        int h_target = X.dim - rB - rA;
        if (h_target < 0) throw Error("pipeline: negative homology dimension");
        out.h = h_target;
        // Representatives feed the induced d_chi (needed whenever the complex
        // has more than one homological degree) and the a-action.
        bool need_reps = h_target > 0 && (nd > 1 || opt.module_structure);
        if (!need_reps) continue;

        auto tp = tick();
        // kernel coordinates: the free (non-pivot) columns of B
        RowBasis kb = row_basis_of_rows(B);
        if (kb.rank != rB) throw Error("pipeline: kernel rank mismatch");
        std::vector<Rational> kpcoef(kb.rows.size());
        for (size_t t = 0; t < kb.rows.size(); ++t)
          for (const auto& [cc, vv] : kb.rows[t])
            if (cc == kb.pivot[t]) {
              kpcoef[t] = vv;
              break;
            }
        out.free_idx.assign(X.dim, -1);
        std::vector<int> zcol;  // kernel coordinate -> cell coordinate
        {
          std::vector<bool> piv(X.dim, false);
          for (int p : kb.pivot) piv[p] = true;
          for (int f = 0; f < X.dim; ++f)
            if (!piv[f]) {
              out.free_idx[f] = static_cast<int>(zcol.size());
              zcol.push_back(f);
            }
        }
        const int nk = static_cast<int>(zcol.size());

        // incoming image, restricted to kernel coordinates (the restriction
        // is injective on ker(B), which contains the image since dmf^2 = 0)
        CellBasis S = ctx.basis(skey);
        SparseMatrix Z = SparseMatrix::zero(nk, S.dim);
        if (S.dim > 0) {
          SparseMatrix A = ctx.build_map(S, skey.d, X, key.d, c.dmf[skey.d], skey, key);
          for (int col = 0; col < A.cols; ++col)
            for (const auto& [r, v] : A.col[col]) {
              int f = out.free_idx[r];
              if (f >= 0) Z.set(f, col, v);
            }
          Z.normalize();
        } else if (rA != 0) {
          throw Error("pipeline: incoming rank on an empty cell");
        }
        out.zimage = row_basis_of_cols(Z);
        if (out.zimage.rank != rA) throw Error("pipeline: image rank mismatch");
        out.zpcoef.assign(out.zimage.rows.size(), Rational(0));
        for (size_t t = 0; t < out.zimage.rows.size(); ++t)
          for (const auto& [cc, vv] : out.zimage.rows[t])
            if (cc == out.zimage.pivot[t]) {
              out.zpcoef[t] = vv;
              break;
            }

        // representatives: one kernel vector per leftover kernel coordinate,
        // built by back-substitution through kb in reverse retirement order
        out.slot.assign(nk, -1);
        {
          std::vector<bool> zpiv(nk, false);
          for (int p : out.zimage.pivot) zpiv[p] = true;
          for (int zi = 0; zi < nk; ++zi) {
            if (zpiv[zi]) continue;
            out.slot[zi] = static_cast<int>(out.reps.size());
            std::unordered_map<int, Rational> x;
            x.emplace(zcol[zi], Rational(1));
            for (int t = static_cast<int>(kb.rows.size()) - 1; t >= 0; --t) {
              Rational s = 0;
              for (const auto& [cc, vv] : kb.rows[t]) {
                if (cc == kb.pivot[t]) continue;
                auto it = x.find(cc);
                if (it != x.end()) s += vv * it->second;
              }
              if (s != 0) x.emplace(kb.pivot[t], -s / kpcoef[t]);
            }
            SparseVec rep(x.begin(), x.end());
            sv_normalize(rep);
            out.reps.push_back(std::move(rep));
          }
        }
        if (static_cast<int>(out.reps.size()) != h_target)
          throw Error("pipeline: kernel scan missed representatives");
        if (profile) {
          long us = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - tp)
                        .count();
          if (us > 1000000)
            std::fprintf(stderr,
                         "  cell d=%d eps=%d j=%d k=%d dim=%d rB=%d rA=%d h=%d reps=%.1fs\n",
                         key.d, key.eps, key.j, key.k, X.dim, rB, rA, h_target, us / 1e6);
        }
        add(t_reps, tp);
      }
    };
    {
      int nt = std::max(1, opt.threads);
      std::vector<std::thread> pool;
      for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
      worker();
      for (auto& th : pool) th.join();
    }

    for (const auto& key : keys)
      if (slice.at(key).dim > 0) rank_out_all.emplace(key, slice.at(key).rank_out);

    // ---- induced outer differential and a-action on stage-1 homology ------
    std::map<CellKey, Dense> dchi1;  // key -> matrix H1(key) -> H1(key at d+1)
    std::map<CellKey, Dense> amat1;  // key -> matrix H1(key) -> H1(key at j+2)
    for (const auto& key : keys) {
      const CellH& X = slice.at(key);
      if (X.h == 0) continue;
      if (key.d + 1 < nd) {
        auto td = tick();
        CellKey yk{key.d + 1, key.eps, key.j, key.k};
        const CellH& Y = slice.at(yk);
        Dense m(Y.h, std::vector<Rational>(X.h, Rational(0)));
        if (Y.h > 0) {
          CellBasis XB = ctx.basis(key);
          CellBasis YB = ctx.basis(yk);
          SparseMatrix D = ctx.build_map(XB, key.d, YB, yk.d, c.dchi[key.d], key, yk);
          for (int t = 0; t < X.h; ++t) {
            auto col = Y.project(mat_apply(D, X.reps[t]));
            for (int r = 0; r < Y.h; ++r) m[r][t] = col[r];
          }
        }
        dchi1[key] = std::move(m);
        add(t_dchi, td);
      }
      if (c.with_a && opt.module_structure && key.j + 2 <= w.jmax) {
        auto ta = tick();
        CellKey yk{key.d, key.eps, key.j + 2, key.k};
        const CellH& Y = slice.at(yk);
        Dense m(Y.h, std::vector<Rational>(X.h, Rational(0)));
        if (Y.h > 0) {
          CellBasis XB = ctx.basis(key);
          CellBasis YB = ctx.basis(yk);
          // a-multiplication: (g, p, alpha) -> (g, p+1, alpha)
          for (int t = 0; t < X.h; ++t) {
            SparseVec img;
            for (const auto& [idx, v] : X.reps[t]) {
              // locate block of idx in XB
              int bx = static_cast<int>(std::upper_bound(XB.offset.begin(), XB.offset.end(), idx) -
                                        XB.offset.begin()) - 1;
              int g = XB.gen_of_block[bx];
              if (c.gens[key.d][g].mod_a) continue;  // a acts by 0
              int bt = YB.block_of_gen[g];
              if (bt < 0) continue;
              img.emplace_back(YB.offset[bt] + (idx - XB.offset[bx]), v);
            }
            sv_normalize(img);
            auto col = Y.project(img);
            for (int r = 0; r < Y.h; ++r) m[r][t] = col[r];
          }
        }
        amat1[key] = std::move(m);
        add(t_amat, ta);
      }
    }

    // ---- stage 2: homology of (H1, dchi) per (eps, j) ----------------------
    struct Stage2 {
      int h2 = 0;
      Dense reps2;                    // columns: H2 reps in H1 coordinates
      std::unique_ptr<Echelon> proj;  // [image2 | reps2] with tags
      int h1 = 0;
      std::vector<Rational> project(const std::vector<Rational>& w) const {
        std::vector<Rational> out(h2, Rational(0));
        if (h2 == 0) return out;
        SparseVec v;
        for (int r = 0; r < h1; ++r)
          if (w[r] != 0) v.emplace_back(r, w[r]);
        proj->reduce(v);
        for (const auto& [r, cc] : v) {
          if (r < h1) throw Error("pipeline: stage-2 projection remainder");
          out[r - h1] = -cc;
        }
        return out;
      }
    };
    std::map<CellKey, Stage2> s2;
    auto ts2 = tick();
    for (int eps = 0; eps < 2; ++eps)
      for (int j : jvals)
        for (int d = 0; d < nd; ++d) {
          CellKey key{d, eps, j, k};
          const CellH& X = slice.at(key);
          Stage2 st;
          st.h1 = X.h;
          if (X.h > 0) {
            // outgoing dchi as sparse matrix for kernel
            SparseMatrix D = SparseMatrix::zero(0, X.h);
            int hY = 0;
            if (d + 1 < nd) {
              const Dense& m = dchi1.at(key);
              hY = static_cast<int>(m.size());
              D = SparseMatrix::zero(hY, X.h);
              for (int r = 0; r < hY; ++r)
                for (int t = 0; t < X.h; ++t) D.set(r, t, m[r][t]);
              D.normalize();
            }
            auto rki = rank_kernel_image(D);
            int rB2 = rki.rank;
            // incoming image
            st.proj = std::make_unique<Echelon>(X.h + X.h, X.h);
            int rA2 = 0;
            if (d > 0) {
              CellKey pk{d - 1, eps, j, k};
              auto it = dchi1.find(pk);
              if (it != dchi1.end() && !it->second.empty()) {
                const Dense& m = it->second;
                int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
                for (int t = 0; t < cols; ++t) {
                  SparseVec v;
                  for (int r = 0; r < X.h; ++r)
                    if (m[r][t] != 0) v.emplace_back(r, m[r][t]);
                  if (st.proj->insert(std::move(v))) ++rA2;
                }
              }
            }
            int h2 = X.h - rB2 - rA2;
            if (h2 < 0) throw Error("pipeline: negative stage-2 dimension");
            st.h2 = 0;
            for (const auto& kv : rki.kernel) {
              if (st.h2 == h2) break;
              SparseVec cand = kv;
              cand.emplace_back(X.h + st.h2, Rational(1));
              SparseVec rem;
              if (st.proj->insert(std::move(cand), rem)) {
                std::vector<Rational> rep(X.h, Rational(0));
                for (const auto& [r, v] : rem)
                  if (r < X.h) rep[r] = v;
                st.reps2.push_back(std::move(rep));
                ++st.h2;
              }
            }
            if (st.h2 != h2) throw Error("pipeline: stage-2 kernel scan missed representatives");
          }
          int i = d + c.deg_lo;
          if (st.h2 > 0) res.dims[{eps, i, j, k}] = st.h2;
          if (c.with_a && opt.module_structure && st.h2 > 0)
            jdata[{eps, i, k}].dim[j] = st.h2;
          s2.emplace(key, std::move(st));
        }
    add(t_s2, ts2);
    if (profile)
      std::fprintf(stderr,
                   "k=%d build=%.1fs rank=%.1fs reps=%.1fs dchi=%.1fs amat=%.1fs s2=%.1fs\n", k,
                   t_build / 1e6, t_rank / 1e6, t_reps / 1e6, t_dchi / 1e6, t_amat / 1e6,
                   t_s2 / 1e6);

    // ---- a-action on stage 2 ----------------------------------------------
    if (c.with_a && opt.module_structure) {
      for (const auto& key : keys) {
        const Stage2& X2 = s2.at(key);
        if (X2.h2 == 0 || key.j + 2 > w.jmax) continue;
        CellKey yk{key.d, key.eps, key.j + 2, key.k};
        const Stage2& Y2 = s2.at(yk);
        Dense m(Y2.h2, std::vector<Rational>(X2.h2, Rational(0)));
        if (Y2.h2 > 0) {
          const Dense& a1 = amat1.at(key);
          for (int t = 0; t < X2.h2; ++t) {
            // lift rep2 to H1 coords (reps2 rows are H1 vectors)
            std::vector<Rational> w1(static_cast<size_t>(slice.at(yk).h), Rational(0));
            for (size_t r = 0; r < a1.size(); ++r) {
              Rational s = 0;
              for (int q = 0; q < X2.h1; ++q)
                if (X2.reps2[t][q] != 0 && a1[r][q] != 0) s += a1[r][q] * X2.reps2[t][q];
              w1[r] = s;
            }
            auto col = Y2.project(w1);
            for (int r = 0; r < Y2.h2; ++r) m[r][t] = col[r];
          }
        }
        int i = key.d + c.deg_lo;
        jdata[{key.eps, i, key.k}].amat[key.j] = std::move(m);
      }
    }
  }

  // ---- interval decomposition of the a-action -----------------------------
  if (c.with_a && opt.module_structure) {
    for (auto& [eik, jd] : jdata) {
      auto [eps, i, k] = std::array<int, 3>{eik[0], eik[1], eik[2]};
      QaComponent& comp = res.module[{eps, i}];
      // composite ranks r(s, t), computed per parity class
      auto dim_at = [&](int j) {
        auto it = jd.dim.find(j);
        return it == jd.dim.end() ? 0 : it->second;
      };
      auto mat_at = [&](int j) -> Dense {
        auto it = jd.amat.find(j);
        if (it != jd.amat.end()) return it->second;
        return Dense(dim_at(j + 2), std::vector<Rational>(dim_at(j), Rational(0)));
      };
      std::map<std::pair<int, int>, int> r;  // (s, t) -> rank of a^{(t-s)/2}
      std::vector<int> js;
      for (const auto& [j, d2] : jd.dim) js.push_back(j);
      for (int s : js) {
        r[{s, s}] = dim_at(s);
        Dense m;
        bool started = false;
        for (int t = s + 2; t <= w.jmax; t += 2) {
          Dense step = mat_at(t - 2);
          m = started ? dense_mul(step, m) : step;
          started = true;
          r[{s, t}] = dense_rank(m);
        }
      }
      auto R = [&](int s, int t) {
        if (t < s) return 0;
        if (dim_at(s) == 0) return 0;
        auto it = r.find({s, t});
        return it == r.end() ? 0 : it->second;
      };
      for (int j : js) {
        int J = w.jmax - ((w.jmax - j) % 2 + 2) % 2;  // top of the window, same parity
        int f = R(j, J) - R(j - 2, J);
        if (f < 0) throw Error("pipeline: negative free multiplicity");
        if (f > 0) comp.free_mult[{j, k}] += f;
        for (int l = 1; j + 2 * l <= J; ++l) {
          int t = R(j, j + 2 * (l - 1)) - R(j, j + 2 * l) - R(j - 2, j + 2 * (l - 1)) +
                  R(j - 2, j + 2 * l);
          if (t < 0) throw Error("pipeline: negative torsion multiplicity");
          if (t > 0) comp.torsion_mult[{l, j, k}] += t;
        }
      }
    }
    // prune empty components
    for (auto it = res.module.begin(); it != res.module.end();)
      it = it->second.empty() ? res.module.erase(it) : std::next(it);
  }
  return res;
}

std::map<std::array<int, 3>, int> compute_sln(const MFComplex& c_a1, int kmax,
                                              const PipelineOptions& opt) {
  if (c_a1.with_a) throw Error("compute_sln: expected a specialized complex");
  Window w;
  w.kmax = kmax;
  PipelineOptions o2 = opt;
  HomologyResult r = compute_homology(c_a1, w, o2);
  std::map<std::array<int, 3>, int> out;
  for (const auto& [key, d] : r.dims) out[{key[0], key[1], key[3]}] += d;
  return out;
}

}  // namespace trkr
