#pragma once

#include "trkr/pipeline.hpp"

#include <string>

namespace trkr {

struct HomologyReport {
  BraidWord braid;
  int N = 1;
  int sl = 0;
  Window window;
  /// Module structure per (eps, i); eps is the Z2 grading of the class.
  std::map<std::pair<int, int>, QaComponent> components;
  /// Graded dimensions over Q, (eps, i, j, k) -> dim.
  std::map<std::array<int, 4>, int> dims;
  /// a = 1 specialization dims, (eps, i, k) -> dim.
  std::map<std::array<int, 3>, int> sln;
  std::map<std::string, bool> audits;
  std::vector<std::string> warnings;
};

/// Default window for a braid word: jmax = writhe difference + 3 (the a-rank
/// profile is stable beyond the structure-theorem bound), kmax as given
/// (default 2N + 2 crossings + 5 when kmax < INT_MIN sentinel not used by
/// callers; pass kmax <= INT_MIN/2 for the default).
Window default_window(const BraidWord& w, int N, int kmax);
int default_kmax(const BraidWord& w, int N);

/// Full pipeline: cube -> flatten -> audit -> bigraded homology + module
/// structure, plus the a = 1 specialization.
HomologyReport total_homology(const BraidWord& w, int N, int kmax, int threads,
                              bool with_sln = true);

/// Inner homology of the matrix factorization of a closed resolved braid as
/// a graded Q[a]-module (with_a) or as graded dims at a = 1 (!with_a, dims
/// keyed with i = j = 0). Single homological degree; window jmax is taken
/// from the strand count (all torsion shifts lie in [-b, -1]).
HomologyResult resolved_homology(const ResolvedWord& w, int N, int kmax, int threads,
                                 bool with_a, bool exclude = false,
                                 bool module_structure = true);

/// Standard presentation of the m-times negatively stabilized unknot:
/// b = m+1 strands, letters sigma_1^{-1} ... sigma_m^{-1}.
BraidWord unknot_word(int m);

/// Closed-form expected components of the homology of unknot_word(m) within
/// the window k <= kmax (free tower, torsion tail, and for m >= 2 the
/// length-one torsion from the killed free summands).
std::map<std::pair<int, int>, QaComponent> unknot_expected(int N, int m, int kmax);

/// Report equality inside the intersection of the two windows: module data
/// compared as multisets of generators, sln dims compared per degree.
bool reports_equal(const HomologyReport& a, const HomologyReport& b);

std::string report_json(const HomologyReport& r);
std::string report_text(const HomologyReport& r);

}  // namespace trkr
