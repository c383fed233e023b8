#include "trkr/mf.hpp"

#include <sstream>

namespace trkr {

PolyMatrix pm_compose(const PolyMatrix& g, const PolyMatrix& f) {
  PolyMatrix out(f.size());
  for (size_t s = 0; s < f.size(); ++s) {
    std::map<int, BiGradedPoly> acc;
    for (const auto& [mid, p] : f[s]) {
      for (const auto& [tgt, q] : g[mid]) {
        auto it = acc.find(tgt);
        if (it == acc.end())
          acc.emplace(tgt, q * p);
        else
          it->second = it->second + q * p;
      }
    }
    for (auto& [tgt, p] : acc)
      if (!p.is_zero()) out[s].push_back({tgt, std::move(p)});
  }
  return out;
}

PolyMatrix pm_add(const PolyMatrix& f, const PolyMatrix& g, size_t cols) {
  PolyMatrix out(cols);
  for (size_t s = 0; s < cols; ++s) {
    std::map<int, BiGradedPoly> acc;
    auto take = [&](const PolyMatrix& m, const Rational& c) {
      if (s >= m.size()) return;
      for (const auto& [tgt, p] : m[s]) {
        auto it = acc.find(tgt);
        if (it == acc.end())
          acc.emplace(tgt, p * c);
        else
          it->second = it->second + p * c;
      }
    };
    take(f, 1);
    take(g, 1);
    for (auto& [tgt, p] : acc)
      if (!p.is_zero()) out[s].push_back({tgt, std::move(p)});
  }
  return out;
}

PolyMatrix pm_scale(const PolyMatrix& f, const Rational& c) {
  PolyMatrix out(f.size());
  if (c == 0) return out;
  for (size_t s = 0; s < f.size(); ++s)
    for (const auto& [tgt, p] : f[s]) out[s].push_back({tgt, p * c});
  return out;
}

bool pm_is_zero(const PolyMatrix& f) {
  for (const auto& col : f)
    for (const auto& e : col)
      if (!e.p.is_zero()) return false;
  return true;
}

Bidegree forced_entry_bidegree(const MFGen& s, const MFGen& t, int j, int k) {
  return {s.j - t.j - j, s.k - t.k - k};
}

MatrixFactorization koszul_mf(const RingPtr& ring, int N, const std::vector<KoszulRow>& rows) {
  // Start with the rank-one trivial factorization of 0.
  MatrixFactorization M;
  M.ring = ring;
  M.N = N;
  M.potential = BiGradedPoly(ring);
  M.gens = {MFGen{0, 0, 0}};
  M.d = PolyMatrix(1);

  for (const auto& row : rows) {
    MatrixFactorization E;
    E.ring = ring;
    E.N = N;
    E.potential = row.a0 * row.a1;
    // Generator shifts follow from forcing d to have bidegree (1, N+1).
    int j1, k1;
    if (!row.a0.is_zero()) {
      auto d0 = row.a0.bidegree();
      j1 = 1 - d0.a;
      k1 = N + 1 - d0.x;
    } else {
      auto d1 = row.a1.bidegree();
      j1 = d1.a - 1;
      k1 = d1.x - (N + 1);
    }
    E.gens = {MFGen{0, 0, 0}, MFGen{1, j1, k1}};
    E.d = PolyMatrix(2);
    if (!row.a0.is_zero()) E.d[0].push_back({1, row.a0});
    if (!row.a1.is_zero()) E.d[1].push_back({0, row.a1});
    M = tensor_mf(M, E);
  }
  return M;
}

MatrixFactorization tensor_mf(const MatrixFactorization& A, const MatrixFactorization& B) {
  if (!(*A.ring == *B.ring)) throw Error("tensor_mf: ring mismatch");
  MatrixFactorization M;
  M.ring = A.ring;
  M.N = A.N;
  M.potential = A.potential + B.potential;
  size_t nA = A.rank(), nB = B.rank();
  M.gens.resize(nA * nB);
  M.d.assign(nA * nB, {});
  for (size_t iA = 0; iA < nA; ++iA)
    for (size_t iB = 0; iB < nB; ++iB) {
      size_t s = iA * nB + iB;
      M.gens[s] = MFGen{(A.gens[iA].z2 + B.gens[iB].z2) & 1, A.gens[iA].j + B.gens[iB].j,
                        A.gens[iA].k + B.gens[iB].k};
      // d(gA (x) gB) = d(gA) (x) gB + (-1)^{|gA|} gA (x) d(gB)
      for (const auto& [tA, p] : A.d[iA]) M.d[s].push_back({static_cast<int>(tA * nB + iB), p});
      Rational sign = (A.gens[iA].z2 & 1) ? -1 : 1;
      for (const auto& [tB, p] : B.d[iB])
        M.d[s].push_back({static_cast<int>(iA * nB + tB), p * sign});
    }
  return M;
}

MatrixFactorization shift_mf(const MatrixFactorization& M, int z2_flip, int j, int k) {
  MatrixFactorization out = M;
  for (auto& g : out.gens) {
    g.z2 = (g.z2 + z2_flip) & 1;
    g.j += j;
    g.k += k;
  }
  return out;
}

void audit_mf(const MatrixFactorization& M) {
  size_t n = M.rank();
  if (M.d.size() != n) throw Error("audit_mf: differential shape mismatch");
  for (size_t s = 0; s < n; ++s) {
    for (const auto& [t, p] : M.d[s]) {
      if (t < 0 || static_cast<size_t>(t) >= n) throw Error("audit_mf: entry out of range");
      if (((M.gens[s].z2 + 1) & 1) != M.gens[t].z2) throw Error("audit_mf: d is not z2-odd");
      if (p.is_zero()) continue;
      Bidegree want = forced_entry_bidegree(M.gens[s], M.gens[t], -1, -(M.N + 1));
      if (!p.is_homogeneous() || !(p.bidegree() == want)) {
        std::ostringstream os;
        os << "audit_mf: entry " << s << "->" << t << " = " << p.str()
           << " is not homogeneous of bidegree (" << want.a << "," << want.x << ")";
        throw Error(os.str());
      }
    }
  }
  PolyMatrix dd = pm_compose(M.d, M.d);
  for (size_t s = 0; s < n; ++s) {
    std::map<int, BiGradedPoly> got;
    for (const auto& [t, p] : dd[s]) got.emplace(t, p);
    for (size_t t = 0; t < n; ++t) {
      BiGradedPoly want = (t == s) ? M.potential : BiGradedPoly(M.ring);
      auto it = got.find(static_cast<int>(t));
      BiGradedPoly have = (it == got.end()) ? BiGradedPoly(M.ring) : it->second;
      if (!(have == want)) {
        std::ostringstream os;
        os << "audit_mf: d^2 entry " << s << "->" << t << " = " << have.str()
           << ", expected " << want.str();
        throw Error(os.str());
      }
    }
  }
}

PolyMatrix morphism_differential(const MatrixFactorization& M, const MatrixFactorization& Mp,
                                 const MFMorphism& f) {
  PolyMatrix df = pm_compose(Mp.d, f.f);
  Rational sign = (f.z2 & 1) ? 1 : -1;
  PolyMatrix fd = pm_scale(pm_compose(f.f, M.d), sign);
  return pm_add(df, fd, M.rank());
}

}  // namespace trkr
