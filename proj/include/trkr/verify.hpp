#pragma once

#include "trkr/report.hpp"

namespace trkr {

struct Verdict {
  bool pass = true;
  std::vector<std::string> failures;
  void fail(std::string msg) {
    pass = false;
    failures.push_back(std::move(msg));
  }
};

/// Structure-theorem audit of a finished report: free a-shifts lie in
/// {sl, sl+2}; free rank per (eps, i, k) equals the a = 1 dimension; all
/// torsion is Q[a]/(a); torsion shifts s satisfy sl <= s <= c+ - c- - 1 and
/// (N-1)s <= k - 2N + 2c-; the eps = sl - 1 parity component is pure torsion.
/// Returns named check results plus the conjunction "structure_theorem".
std::map<std::string, bool> verify_structure_theorem(const HomologyReport& r);

/// Stabilization sequences: compare the homology of B_- (B with one negative
/// stabilization) against the homology of B via the short exact sequence at
/// a-parity sl(B) and the long exact sequence at parity sl(B) - 1.
Verdict stab_check(const BraidWord& w, int N, int kmax, int threads);

/// Cone identity: graded dims of the two-stage homology of
/// cone(C -> C/aC){-2, 0} equal the dims of the homology of B_-.
Verdict cone_pi0_check(const BraidWord& w, int N, int kmax, int threads);

}  // namespace trkr
