#include "trkr/chi.hpp"

#include "trkr/moy.hpp"
#include "trkr/qmatrix.hpp"

#include <functional>
#include <map>

namespace trkr {

namespace {

// Enumerate all monomials of the ring with a-degree pa and total x-degree dx.
void enum_monomials(const RingPtr& ring, int pa, int dx,
                    const std::function<void(const Monomial&)>& fn) {
  Monomial m;
  m.a_exp = static_cast<std::uint32_t>(pa);
  m.x.assign(ring->nx(), 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i + 1 == ring->nx() || ring->nx() == 0) {
      if (ring->nx() > 0) m.x[i] = static_cast<std::uint16_t>(left);
      if (ring->nx() > 0 || left == 0) fn(m);
      if (ring->nx() > 0) m.x[i] = 0;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.x[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e);
      m.x[i] = 0;
    }
  };
  if (ring->nx() == 0) {
    if (dx == 0) fn(m);
  } else {
    rec(0, dx);
  }
}

// Coordinates for morphisms of a fixed (z2, j, k): one slot per admissible
// (src, tgt, monomial) triple.
struct Slots {
  struct Slot {
    int src, tgt;
    Monomial m;
  };
  std::vector<Slot> slots;

  static Slots build(const MatrixFactorization& M, const MatrixFactorization& Mp, int z2, int j,
                     int k) {
    Slots out;
    for (size_t s = 0; s < M.rank(); ++s)
      for (size_t t = 0; t < Mp.rank(); ++t) {
        if (Mp.gens[t].z2 != ((M.gens[s].z2 + z2) & 1)) continue;
        Bidegree b = forced_entry_bidegree(M.gens[s], Mp.gens[t], j, k);
        if (b.a < 0 || b.x < 0 || (b.a & 1) || (b.x & 1)) continue;
        enum_monomials(M.ring, b.a / 2, b.x / 2, [&](const Monomial& m) {
          out.slots.push_back({static_cast<int>(s), static_cast<int>(t), m});
        });
      }
    return out;
  }

  MFMorphism to_morphism(const MatrixFactorization& M, const SparseVec& v, int z2, int j,
                         int k) const {
    MFMorphism f;
    f.z2 = z2;
    f.j = j;
    f.k = k;
    f.f.assign(M.rank(), {});
    std::map<std::pair<int, int>, BiGradedPoly> acc;
    for (const auto& [idx, c] : v) {
      const Slot& sl = slots[idx];
      auto key = std::make_pair(sl.src, sl.tgt);
      auto it = acc.find(key);
      if (it == acc.end()) it = acc.emplace(key, BiGradedPoly(M.ring)).first;
      it->second.add_term(sl.m, c);
    }
    for (auto& [key, p] : acc)
      if (!p.is_zero()) f.f[key.first].push_back({key.second, std::move(p)});
    return f;
  }
};

// Flatten a PolyMatrix into a shared coordinate space keyed by
// (src, tgt, monomial). Row indices are assigned on demand.
struct FlatSpace {
  struct Cmp {
    bool operator()(const std::tuple<int, int, Monomial>& a,
                    const std::tuple<int, int, Monomial>& b) const {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
      return MonomialOrder{}(std::get<2>(a), std::get<2>(b));
    }
  };
  std::map<std::tuple<int, int, Monomial>, int, Cmp> idx;

  int row(int src, int tgt, const Monomial& m) {
    auto key = std::make_tuple(src, tgt, m);
    auto it = idx.find(key);
    if (it == idx.end()) it = idx.emplace(key, static_cast<int>(idx.size())).first;
    return it->second;
  }

  SparseVec flatten(const PolyMatrix& pm) {
    SparseVec v;
    for (size_t s = 0; s < pm.size(); ++s)
      for (const auto& [t, p] : pm[s])
        for (const auto& [m, c] : p.terms()) v.emplace_back(row(static_cast<int>(s), t, m), c);
    sv_normalize(v);
    return v;
  }
};

}  // namespace

HomBasis hom_space(const MatrixFactorization& M, const MatrixFactorization& Mp, int z2, int j,
                   int k) {
  Slots fs = Slots::build(M, Mp, z2, j, k);
  Slots hs = Slots::build(M, Mp, (z2 + 1) & 1, j + 1, k + M.N + 1);

  FlatSpace space;
  // Columns of the chain-map condition D(f) = d f - (-1)^{z2} f d over the
  // f-slots.
  std::vector<SparseVec> dcols;
  for (const auto& sl : fs.slots) {
    SparseVec unit = {{static_cast<int>(&sl - fs.slots.data()), Rational(1)}};
    MFMorphism f = fs.to_morphism(M, unit, z2, j, k);
    dcols.push_back(space.flatten(morphism_differential(M, Mp, f)));
  }
  // The flat space may still grow while flattening homotopy differentials;
  // flatten those first so the row space is stable, then assemble.
  std::vector<SparseVec> hcols;
  for (const auto& sl : hs.slots) {
    SparseVec unit = {{static_cast<int>(&sl - hs.slots.data()), Rational(1)}};
    MFMorphism h = hs.to_morphism(M, unit, (z2 + 1) & 1, j + 1, k + M.N + 1);
    hcols.push_back(space.flatten(morphism_differential(M, Mp, h)));
  }

  int rows = static_cast<int>(space.idx.size());
  SparseMatrix D = SparseMatrix::zero(rows, static_cast<int>(dcols.size()));
  D.col = dcols;
  auto rki = rank_kernel_image(D);

  HomBasis out;
  // Homotopy image expressed in f-slot coordinates: the h-columns land in
  // the same flat space, but we need them as f-slot vectors. A homotopy
  // differential is itself a morphism of degree (z2, j, k), so re-read the
  // flat vector through the f-slot dictionary.
  std::map<std::tuple<int, int, Monomial>, int, FlatSpace::Cmp> fslot_of;
  for (size_t i = 0; i < fs.slots.size(); ++i)
    fslot_of.emplace(std::make_tuple(fs.slots[i].src, fs.slots[i].tgt, fs.slots[i].m),
                     static_cast<int>(i));
  std::vector<int> flat_to_fslot(rows, -1);
  for (const auto& [key, r] : space.idx) {
    auto it = fslot_of.find(key);
    if (it != fslot_of.end()) flat_to_fslot[r] = it->second;
  }
  auto to_fslots = [&](const SparseVec& flat) {
    SparseVec v;
    for (const auto& [r, c] : flat) {
      if (flat_to_fslot[r] < 0) throw Error("hom_space: homotopy image outside slot space");
      v.emplace_back(flat_to_fslot[r], c);
    }
    sv_normalize(v);
    return v;
  };

  Echelon quot(static_cast<int>(fs.slots.size()));
  for (const auto& hc : hcols) quot.insert(to_fslots(hc));

  for (const auto& kv : rki.kernel) {
    out.cycles.push_back(fs.to_morphism(M, kv, z2, j, k));
    SparseVec rem;
    if (quot.insert(kv, rem)) out.up_to_homotopy.push_back(fs.to_morphism(M, kv, z2, j, k));
  }
  return out;
}

bool null_homotopic(const MatrixFactorization& M, const MatrixFactorization& Mp,
                    const MFMorphism& f, MFMorphism* h_out) {
  Slots hs = Slots::build(M, Mp, (f.z2 + 1) & 1, f.j + 1, f.k + M.N + 1);
  FlatSpace space;
  SparseVec fvec = space.flatten(f.f);
  std::vector<SparseVec> hcols;
  for (size_t i = 0; i < hs.slots.size(); ++i) {
    SparseVec unit = {{static_cast<int>(i), Rational(1)}};
    MFMorphism h = hs.to_morphism(M, unit, (f.z2 + 1) & 1, f.j + 1, f.k + M.N + 1);
    hcols.push_back(space.flatten(morphism_differential(M, Mp, h)));
  }
  int rows = static_cast<int>(space.idx.size());
  // Embedded identity block: when the reduction of [f; 0] has zero top part,
  // the bottom part is minus the homotopy coefficients.
  Echelon ech(rows + static_cast<int>(hs.slots.size()), rows);
  for (size_t i = 0; i < hcols.size(); ++i) {
    SparseVec v = hcols[i];
    v.emplace_back(rows + static_cast<int>(i), Rational(1));
    ech.insert(std::move(v));
  }
  SparseVec rem = fvec;
  ech.reduce(rem);
  for (const auto& [r, c] : rem)
    if (r < rows) return false;
  if (h_out) {
    SparseVec hv;
    for (const auto& [r, c] : rem) hv.emplace_back(r - rows, -c);
    *h_out = hs.to_morphism(M, hv, (f.z2 + 1) & 1, f.j + 1, f.k + M.N + 1);
  }
  return true;
}

ChiPair chi_pair(int N) {
  ChiPair out;
  out.ring = make_ring({"x1", "y1", "y2", "x2"});
  const auto& R = out.ring;
  auto a = BiGradedPoly::var_a(R);
  auto X = [&](const char* n) { return BiGradedPoly::var_x(R, R->var_index(n)); };

  // G0: oriented resolution, arcs y2 -> x1 and x2 -> y1.
  std::vector<KoszulRow> rows0 = {
      {a * quotient_pi(R, R->var_index("x1"), R->var_index("y2"), N), X("x1") - X("y2")},
      {a * quotient_pi(R, R->var_index("y1"), R->var_index("x2"), N), X("y1") - X("x2")},
  };
  out.G0 = koszul_mf(R, N, rows0);

  // G1: wide edge with in (y2, x2), out (x1, y1), carrying its {0,-1}.
  MOYGraph g1;
  g1.vars = {"x1", "y1", "y2", "x2"};
  g1.wides.push_back({"y2", "x2", "x1", "y1"});
  MoyRows mr = moy_rows(g1, N);
  out.G1 = shift_mf(koszul_mf(mr.ring, N, mr.rows), 0, 0, mr.kshift);
  // Align G1's ring object with R (same variable names).
  out.G1.ring = R;
  out.G1.potential = out.G1.potential.into_ring(R);
  for (auto& col : out.G1.d)
    for (auto& e : col) e.p = e.p.into_ring(R);

  auto h0 = hom_space(out.G0, out.G1, 0, 0, -1);
  auto h1 = hom_space(out.G1, out.G0, 0, 0, -1);
  if (h0.up_to_homotopy.size() != 1 || h1.up_to_homotopy.size() != 1)
    throw Error("chi_pair: connecting map space is not one dimensional up to homotopy");
  out.chi0 = h0.up_to_homotopy[0];
  out.chi1 = h1.up_to_homotopy[0];

  // Normalize: chi1 chi0 = lambda (x2 - x1) id up to homotopy, lambda != 0.
  PolyMatrix comp = pm_compose(out.chi1.f, out.chi0.f);
  MFMorphism cf{0, 0, -2, comp};
  BiGradedPoly scal = X("x2") - X("x1");
  PolyMatrix id_s(out.G0.rank());
  for (size_t i = 0; i < out.G0.rank(); ++i) id_s[i].push_back({static_cast<int>(i), scal});

  // Solve comp - lambda*(x2-x1)id = d h + h d for (h, lambda).
  Slots hs = Slots::build(out.G0, out.G0, 1, 1, -2 + N + 1);
  FlatSpace space;
  SparseVec cvec = space.flatten(comp);
  SparseVec ivec = space.flatten(id_s);
  std::vector<SparseVec> cols;
  for (size_t i = 0; i < hs.slots.size(); ++i) {
    SparseVec unit = {{static_cast<int>(i), Rational(1)}};
    MFMorphism h = hs.to_morphism(out.G0, unit, 1, 1, N - 1);
    cols.push_back(space.flatten(morphism_differential(out.G0, out.G0, h)));
  }
  int rows = static_cast<int>(space.idx.size());
  int nh = static_cast<int>(cols.size());
  Echelon ech(rows + nh + 1, rows);
  for (int i = 0; i < nh; ++i) {
    SparseVec v = cols[i];
    v.emplace_back(rows + i, Rational(1));
    ech.insert(std::move(v));
  }
  {
    SparseVec v = ivec;
    v.emplace_back(rows + nh, Rational(1));
    ech.insert(std::move(v));
  }
  SparseVec rem = cvec;
  ech.reduce(rem);
  // The reduced remainder is [cvec - sum mu_i col_i; -sum mu_i e_i]; a zero
  // top part means cvec = D(h) + mu_id * (x2-x1)id with mu_id = -(bottom).
  Rational lambda = 0;
  for (const auto& [r, c] : rem) {
    if (r < rows) throw Error("chi_pair: chi1 chi0 is not a multiple of (x2-x1) id up to homotopy");
    if (r == rows + nh) lambda = -c;
  }
  if (lambda == 0) throw Error("chi_pair: chi1 chi0 is null-homotopic; wrong normalization");
  out.chi1.f = pm_scale(out.chi1.f, 1 / lambda);
  return out;
}

}  // namespace trkr
