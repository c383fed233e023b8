#pragma once

#include "trkr/poly.hpp"

#include <string>
#include <vector>

namespace trkr {

/// A braid word on b strands; letters are nonzero integers, +i for the
/// positive generator on strands (i, i+1), -i for its inverse, 1 <= i <= b-1.
struct BraidWord {
  int b = 1;
  std::vector<int> letters;

  int crossings() const { return static_cast<int>(letters.size()); }
  int positive() const;
  int negative() const;
  int writhe() const { return positive() - negative(); }
  /// Self-linking number of the transverse link represented by the closure.
  int self_linking() const { return writhe() - b; }

  bool operator==(const BraidWord&) const = default;
};

/// Text form "b=<int>; <signed ints>", e.g. "b=3; 1 -2 1".
BraidWord parse_braid(const std::string& text);
std::string to_string(const BraidWord& w);

/// A word in the wide-edge symbols t_i (all-1-resolution side); letters are
/// 1 <= i <= b-1, written "b=<int>; t<i> t<j> ...".
struct ResolvedWord {
  int b = 1;
  std::vector<int> letters;

  int weight() const;  // sum of the letters
  bool operator==(const ResolvedWord&) const = default;
};

ResolvedWord parse_resolved(const std::string& text);
std::string to_string(const ResolvedWord& w);

/// Replace every crossing by its wide-edge resolution.
ResolvedWord resolve(const BraidWord& w);

/// Lexicographically least rotation; canonical form for closures.
ResolvedWord cyclic_normal_form(const ResolvedWord& w);

// ---- braid/transverse moves ----------------------------------------------

enum class MoveKind {
  Cancel,      // delete sigma sigma^{-1} at a site
  Commute,     // swap distant letters at a site
  YangBaxter,  // braid relation at a site (three letters)
  Conjugate,   // w -> g^{-1} w g for a single letter g
  StabPos,     // add a strand and append sigma_b
  StabNeg,     // add a strand and append sigma_b^{-1}
  DestabPos,   // inverse of StabPos
  DestabNeg,   // inverse of StabNeg
};

struct Move {
  MoveKind kind;
  int arg = 0;  // site index for local moves; letter for Conjugate
};

/// Apply a move; throws Error when the move does not apply at the site.
BraidWord apply_move(const BraidWord& w, const Move& m);

BraidWord stab_pos(const BraidWord& w);
BraidWord stab_neg(const BraidWord& w);

// ---- rewrite-step classification for closed resolved words ----------------

enum class ReduceCase {
  Empty,          // no letters
  CircleRemoval,  // unique highest letter: ends ... t_i
  DoubleEdge,     // ends ... t_f t_f
  Slide,          // ends ... t_f t_{f-1} t_f
};

struct MoveStep {
  enum Kind { Rotate, Swap } kind;
  int arg;  // Rotate: left-rotation amount; Swap: position p (letters p, p+1)
};

struct InductionResult {
  ReduceCase kind = ReduceCase::Empty;
  ResolvedWord normalized;  // rewritten word with the pattern at the end
  int letter = 0;           // the t-index of the pattern
  std::vector<MoveStep> trace;
};

/// Classify a closed resolved word: rewrite it by rotations (valid for
/// closures) and distant commutations so that it ends in one of the three
/// reducible patterns. `choice` seeds the selection among equally valid
/// sites, used to exercise path independence.
InductionResult induction_case(const ResolvedWord& w, unsigned choice = 0);

/// Re-apply a recorded trace, validating every step; returns the final word.
ResolvedWord replay(const ResolvedWord& w, const std::vector<MoveStep>& trace);

}  // namespace trkr
