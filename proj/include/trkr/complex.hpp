#pragma once

#include "trkr/braid.hpp"
#include "trkr/chi.hpp"
#include "trkr/mf.hpp"

namespace trkr {

/// Vertex of the crossing cube: one resolution of every crossing
/// (r[c] = 0 oriented, r[c] = 1 wide), with the matrix factorization of the
/// resolved diagram including all vertex shifts.
struct CubeVertex {
  std::vector<int> r;
  int hdeg = 0;  // homological degree
  MatrixFactorization mf;
  std::vector<int> factor_rank;  // generator count per tensor factor
};

/// Cube edge: flip crossing `c` along its connecting map, with the Koszul
/// sign of the cube already multiplied in.
struct CubeEdge {
  int from = 0, to = 0;
  int crossing = 0;
  MFMorphism map;
};

struct CubeComplex {
  RingPtr ring;
  int N = 1;
  BraidWord braid;
  std::vector<CubeVertex> vertices;
  std::vector<CubeEdge> edges;
};

CubeComplex braid_complex(const BraidWord& w, int N);

/// Flattened total complex: a chain complex of graded free modules with the
/// inner differential dmf (z2-odd, bidegree (1, N+1)) and the outer
/// differential dchi (z2-even, degree +1, bidegree (0, 0)).
struct GenInfo {
  int z2 = 0;
  int j = 0;
  int k = 0;
  bool mod_a = false;  // generator of a C/aC summand: basis restricted to a^0
};

struct MFComplex {
  RingPtr ring;
  int N = 1;
  bool with_a = true;
  int deg_lo = 0, deg_hi = 0;  // homological degree range (inclusive)

  std::vector<std::vector<GenInfo>> gens;  // index: degree - deg_lo
  std::vector<PolyMatrix> dmf;             // gens[d] -> gens[d]
  std::vector<PolyMatrix> dchi;            // gens[d] -> gens[d+1]

  int degrees() const { return deg_hi - deg_lo + 1; }
};

MFComplex flatten(const CubeComplex& cube);

/// a -> 1 specialization (entries substituted, a-grading dropped).
MFComplex specialize_a1(const MFComplex& c);

/// Mapping cone of the quotient map C -> C/aC, shifted by {-2, 0}. The
/// quotient copy sits one homological degree higher with mod_a generators.
MFComplex cone_quotient(const MFComplex& c);

/// Structural checks on a flattened complex: dmf^2 = 0 (closed diagrams),
/// dchi^2 = 0, dmf dchi = dchi dmf, homogeneity of all entries.
void audit_complex(const MFComplex& c);

}  // namespace trkr
