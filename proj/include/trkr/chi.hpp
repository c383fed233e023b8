#pragma once

#include "trkr/mf.hpp"

#include <optional>

namespace trkr {

/// Basis of the space of grading-preserving chain maps M -> M'{j,k} of the
/// given z2-degree, together with a basis of its quotient by null-homotopic
/// maps.
struct HomBasis {
  std::vector<MFMorphism> cycles;
  std::vector<MFMorphism> up_to_homotopy;
};

HomBasis hom_space(const MatrixFactorization& M, const MatrixFactorization& Mp, int z2, int j,
                   int k);

/// Decide whether f: M -> M'{f.j, f.k} is null-homotopic; when it is and
/// h_out is non-null, a homotopy with d h + h d = f is returned.
bool null_homotopic(const MatrixFactorization& M, const MatrixFactorization& Mp,
                    const MFMorphism& f, MFMorphism* h_out = nullptr);

/// The local square of a crossing over the ring (x1, y1, y2, x2): the
/// oriented resolution G0 (arcs y2 -> x1 and x2 -> y1) and the wide-edge
/// resolution G1 (in (y2, x2), out (x1, y1)), with the connecting maps
///   chi0: G0 -> G1{0,-1},   chi1: G1 -> G0{0,-1},
/// normalized so that chi1 chi0 is homotopic to (x2 - x1) id.
struct ChiPair {
  RingPtr ring;
  MatrixFactorization G0, G1;
  MFMorphism chi0, chi1;
};

ChiPair chi_pair(int N);

}  // namespace trkr
