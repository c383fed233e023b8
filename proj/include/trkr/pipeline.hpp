#pragma once

#include "trkr/complex.hpp"

#include <array>
#include <map>
#include <string>

namespace trkr {

struct Window {
  int jmin = 0, jmax = 0;
  int kmin = 0, kmax = 0;
};

/// Graded module over Q[a] at a fixed (z2, i): free summands Q[a]{j,k} and
/// torsion summands Q[a]/(a^l){j,k}, with multiplicities.
struct QaComponent {
  std::map<std::pair<int, int>, int> free_mult;              // (j, k) -> mult
  std::map<std::tuple<int, int, int>, int> torsion_mult;     // (l, j, k) -> mult

  bool empty() const { return free_mult.empty() && torsion_mult.empty(); }
  bool operator==(const QaComponent&) const = default;
};

struct HomologyResult {
  Window window;
  bool with_a = true;
  /// Graded dimensions over Q: (z2, i, j, k) -> dim. Either grading of the
  /// module structure below expands to these dimensions.
  std::map<std::array<int, 4>, int> dims;
  /// Module structure per (z2, i); only meaningful when with_a.
  std::map<std::pair<int, int>, QaComponent> module;
  std::vector<std::string> warnings;
};

struct PipelineOptions {
  int threads = 1;
  bool module_structure = true;  // compute representatives and the a-action
};

/// Two stage homology of a flattened complex: first the matrix-factorization
/// differential degreewise, then the induced outer differential, then the
/// a-action on the result. j runs over [internal minimum, window.jmax],
/// k over [internal minimum, window.kmax].
HomologyResult compute_homology(const MFComplex& c, const Window& w, const PipelineOptions& opt);

/// Dimensions of the a = 1 specialization per (z2, i, k), k <= kmax.
std::map<std::array<int, 3>, int> compute_sln(const MFComplex& c_a1, int kmax,
                                              const PipelineOptions& opt);

int env_threads();

}  // namespace trkr
