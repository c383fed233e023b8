#pragma once

#include "trkr/braid.hpp"
#include "trkr/mf.hpp"

#include <set>
#include <string>
#include <vector>

namespace trkr {

/// A MOY graph cut at its marked points into elementary pieces. Every marked
/// point carries one variable; pieces refer to variables by name.
struct MOYGraph {
  std::vector<std::string> vars;

  /// 1-colored arc from the mark `tail` to the mark `head`; head == tail is
  /// a circle with a single mark.
  struct Arc {
    std::string head, tail;
  };
  /// 2-colored (wide) edge with incoming marks (in1, in2) and outgoing marks
  /// (out1, out2).
  struct Wide {
    std::string in1, in2, out1, out2;
  };

  std::vector<Arc> arcs;
  std::vector<Wide> wides;
};

/// The closure of a resolved word as a MOY graph: each letter t_i becomes a
/// wide edge, each crossing-free strand a marked circle. With one mark per
/// arc of the diagram the pieces are exactly the wide edges and the circles.
MOYGraph moy_from_resolved(const ResolvedWord& w);

struct MoyRows {
  RingPtr ring;
  std::vector<KoszulRow> rows;
  int kshift = 0;  // accumulated overall x-shift (one {0,-1} per wide edge)
};

/// The Koszul rows of the factorization assigned to the graph.
MoyRows moy_rows(const MOYGraph& g, int N);

/// Eliminate internal variables x occurring linearly in some row label
/// (a1 = c*x + rest): the row is dropped and x := -rest/c is substituted in
/// the remaining rows. Produces a homotopy equivalent, much smaller
/// factorization over the shrunken ring. Variables listed in `keep` are
/// never eliminated.
void exclude_variables(MoyRows& rows, const std::set<std::string>& keep = {});

/// The matrix factorization of the graph; with exclude = true internal
/// variables are eliminated first.
MatrixFactorization moy_mf(const MOYGraph& g, int N, bool exclude = false);

}  // namespace trkr
