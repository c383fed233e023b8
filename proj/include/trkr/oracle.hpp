#pragma once

#include "trkr/braid.hpp"
#include "trkr/series.hpp"

#include <string>
#include <vector>

namespace trkr {

/// Log of one weight-reduction step: which closed-form rule fired and on
/// which rewritten word.
struct RewriteTrace {
  std::vector<std::string> steps;
};

/// Graded-dimension engine for the inner homology H(., d_mf) of a closed
/// resolved braid, independent of the matrix side: recursive weight
/// reduction through the three decomposition rules down to concentric
/// circles. Subtractions with negative multiplicities throw (they would
/// refute the rule reading). `choice` seeds the selection among valid
/// reduction sites.
ModuleSeries reduce_series(const ResolvedWord& w, int N, bool with_a,
                           RewriteTrace* trace = nullptr, unsigned choice = 0);

}  // namespace trkr
