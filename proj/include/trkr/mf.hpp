#pragma once

#include "trkr/poly.hpp"
#include "trkr/qmatrix.hpp"

#include <vector>

namespace trkr {

/// Free generator of a Z2 + Z^2 graded module: z2 sector and (a, x) shifts.
/// An element g{j,k} has its monomial degrees offset by (j, k).
struct MFGen {
  int z2 = 0;
  int j = 0;  // a-grading shift
  int k = 0;  // x-grading shift
};

struct PolyEntry {
  int row;  // target generator
  BiGradedPoly p;
};

/// Column-major polynomial matrix: entries[src] lists (target, coefficient).
using PolyMatrix = std::vector<std::vector<PolyEntry>>;

PolyMatrix pm_compose(const PolyMatrix& g, const PolyMatrix& f);  // g after f
PolyMatrix pm_add(const PolyMatrix& f, const PolyMatrix& g, size_t cols);
PolyMatrix pm_scale(const PolyMatrix& f, const Rational& c);
bool pm_is_zero(const PolyMatrix& f);

/// A Z2 + Z^2 graded matrix factorization of its potential: the differential
/// d has z2-degree 1 and bidegree (1, N+1), and d^2 = potential * id.
struct MatrixFactorization {
  RingPtr ring;
  int N = 1;
  BiGradedPoly potential;
  std::vector<MFGen> gens;
  PolyMatrix d;

  size_t rank() const { return gens.size(); }
};

/// One Koszul row (a0, a1): R -> R{1 - deg_a(a0)/2 ... } -> R, i.e. the rank
/// (1,1) factorization with d0 = a0, d1 = a1 and potential a0*a1.
struct KoszulRow {
  BiGradedPoly a0, a1;
};

/// Tensor product (over the ring) of the elementary factorizations of the
/// given rows, in order.
MatrixFactorization koszul_mf(const RingPtr& ring, int N, const std::vector<KoszulRow>& rows);

MatrixFactorization tensor_mf(const MatrixFactorization& A, const MatrixFactorization& B);

/// <z2_flip> {j, k} shift.
MatrixFactorization shift_mf(const MatrixFactorization& M, int z2_flip, int j, int k);

/// Check d^2 = potential*id, z2 structure and entry homogeneity with the
/// forced bidegrees; throws Error with a description on failure.
void audit_mf(const MatrixFactorization& M);

/// A module morphism M -> M' of z2-degree `z2` whose entries are forced to
/// the homogeneous bidegree making it grading preserving after an overall
/// {j, k} shift of the target.
struct MFMorphism {
  int z2 = 0;
  int j = 0, k = 0;  // target shift against which entries are homogeneous
  PolyMatrix f;
};

/// Entry (s -> t) bidegree forced by gradings: for a map M -> M'{j,k} of
/// z2-degree z2, entry from gen s of M to gen t of M' has bidegree
/// (j_s - j_t - j, k_s - k_t - k).
Bidegree forced_entry_bidegree(const MFGen& s, const MFGen& t, int j, int k);

/// d_{M'} f - (-1)^{z2(f)} f d_M, the differential of the morphism complex.
PolyMatrix morphism_differential(const MatrixFactorization& M, const MatrixFactorization& Mp,
                                 const MFMorphism& f);

}  // namespace trkr
