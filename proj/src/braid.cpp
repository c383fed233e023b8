#include "trkr/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace trkr {

int BraidWord::positive() const {
  int n = 0;
  for (int l : letters) n += l > 0;
  return n;
}

int BraidWord::negative() const {
  int n = 0;
  for (int l : letters) n += l < 0;
  return n;
}

namespace {

int parse_strands(std::istringstream& in, const std::string& text) {
  std::string head;
  in >> head;
  if (head.rfind("b=", 0) != 0) throw Error("expected 'b=<int>;' in: " + text);
  bool semi = !head.empty() && head.back() == ';';
  if (semi) head.pop_back();
  int b = 0;
  try {
    b = std::stoi(head.substr(2));
  } catch (...) {
    throw Error("bad strand count in: " + text);
  }
  if (!semi) {
    std::string sep;
    in >> sep;
    if (sep != ";") throw Error("expected ';' after strand count in: " + text);
  }
  if (b < 1) throw Error("strand count must be >= 1");
  return b;
}

}  // namespace

BraidWord parse_braid(const std::string& text) {
  std::istringstream in(text);
  BraidWord w;
  w.b = parse_strands(in, text);
  std::string tok;
  while (in >> tok) {
    int l = 0;
    try {
      l = std::stoi(tok);
    } catch (...) {
      throw Error("bad braid letter '" + tok + "'");
    }
    if (l == 0 || std::abs(l) > w.b - 1)
      throw Error("braid letter " + tok + " out of range for b=" + std::to_string(w.b));
    w.letters.push_back(l);
  }
  return w;
}

std::string to_string(const BraidWord& w) {
  std::ostringstream os;
  os << "b=" << w.b << ";";
  for (int l : w.letters) os << " " << l;
  return os.str();
}

int ResolvedWord::weight() const {
  int s = 0;
  for (int l : letters) s += l;
  return s;
}

ResolvedWord parse_resolved(const std::string& text) {
  std::istringstream in(text);
  ResolvedWord w;
  w.b = parse_strands(in, text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 't') throw Error("bad resolved letter '" + tok + "'");
    int l = 0;
    try {
      l = std::stoi(tok.substr(1));
    } catch (...) {
      throw Error("bad resolved letter '" + tok + "'");
    }
    if (l < 1 || l > w.b - 1)
      throw Error("resolved letter " + tok + " out of range for b=" + std::to_string(w.b));
    w.letters.push_back(l);
  }
  return w;
}

std::string to_string(const ResolvedWord& w) {
  std::ostringstream os;
  os << "b=" << w.b << ";";
  for (int l : w.letters) os << " t" << l;
  return os.str();
}

ResolvedWord resolve(const BraidWord& w) {
  ResolvedWord r;
  r.b = w.b;
  for (int l : w.letters) r.letters.push_back(std::abs(l));
  return r;
}

ResolvedWord cyclic_normal_form(const ResolvedWord& w) {
  ResolvedWord best = w;
  size_t n = w.letters.size();
  std::vector<int> cur = w.letters;
  for (size_t r = 1; r < n; ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best.letters) best.letters = cur;
  }
  return best;
}

BraidWord apply_move(const BraidWord& w, const Move& m) {
  BraidWord out = w;
  auto& v = out.letters;
  int n = static_cast<int>(v.size());
  auto need_site = [&](int p, int width) {
    if (p < 0 || p + width > n) throw Error("move site out of range");
  };
  switch (m.kind) {
    case MoveKind::Cancel: {
      need_site(m.arg, 2);
      if (v[m.arg] != -v[m.arg + 1]) throw Error("letters at site do not cancel");
      v.erase(v.begin() + m.arg, v.begin() + m.arg + 2);
      return out;
    }
    case MoveKind::Commute: {
      need_site(m.arg, 2);
      if (std::abs(std::abs(v[m.arg]) - std::abs(v[m.arg + 1])) < 2)
        throw Error("letters at site do not commute");
      std::swap(v[m.arg], v[m.arg + 1]);
      return out;
    }
    case MoveKind::YangBaxter: {
      need_site(m.arg, 3);
      int p = m.arg;
      int s = v[p] > 0 ? 1 : -1;
      if ((v[p + 1] > 0 ? 1 : -1) != s || (v[p + 2] > 0 ? 1 : -1) != s)
        throw Error("braid relation needs equal signs at site");
      int i = std::abs(v[p]), j = std::abs(v[p + 1]), k = std::abs(v[p + 2]);
      if (i == k && std::abs(i - j) == 1) {
        v[p] = s * j;
        v[p + 1] = s * i;
        v[p + 2] = s * j;
        return out;
      }
      throw Error("braid relation does not apply at site");
    }
    case MoveKind::Conjugate: {
      int g = m.arg;
      if (g == 0 || std::abs(g) > w.b - 1) throw Error("conjugating letter out of range");
      v.insert(v.begin(), -g);
      v.push_back(g);
      return out;
    }
    case MoveKind::StabPos:
      return stab_pos(w);
    case MoveKind::StabNeg:
      return stab_neg(w);
    case MoveKind::DestabPos:
    case MoveKind::DestabNeg: {
      int want = (m.kind == MoveKind::DestabPos ? 1 : -1) * (w.b - 1);
      if (n == 0 || v.back() != want) throw Error("word does not end with the stabilizing letter");
      for (int t = 0; t + 1 < n; ++t)
        if (std::abs(v[t]) == w.b - 1) throw Error("stabilizing letter occurs elsewhere");
      v.pop_back();
      out.b = w.b - 1;
      return out;
    }
  }
  throw Error("unknown move");
}

BraidWord stab_pos(const BraidWord& w) {
  BraidWord out = w;
  out.b = w.b + 1;
  out.letters.push_back(w.b);
  return out;
}

BraidWord stab_neg(const BraidWord& w) {
  BraidWord out = w;
  out.b = w.b + 1;
  out.letters.push_back(-w.b);
  return out;
}

// ---- rewrite-step classification -------------------------------------------

namespace {

struct Rewriter {
  std::vector<int> v;
  std::vector<MoveStep> trace;

  void rotate(int r) {
    int n = static_cast<int>(v.size());
    r = ((r % n) + n) % n;
    if (r == 0) return;
    std::rotate(v.begin(), v.begin() + r, v.end());
    trace.push_back({MoveStep::Rotate, r});
  }
  void swap_at(int p) {
    if (std::abs(v[p] - v[p + 1]) < 2) throw Error("internal: invalid commutation");
    std::swap(v[p], v[p + 1]);
    trace.push_back({MoveStep::Swap, p});
  }
};

}  // namespace

InductionResult induction_case(const ResolvedWord& w, unsigned choice) {
  InductionResult res;
  res.normalized = w;
  if (w.letters.empty()) {
    res.kind = ReduceCase::Empty;
    return res;
  }
  Rewriter rw{w.letters, {}};
  int n = static_cast<int>(rw.v.size());
  int imax = *std::max_element(rw.v.begin(), rw.v.end());
  std::vector<int> pos;
  for (int p = 0; p < n; ++p)
    if (rw.v[p] == imax) pos.push_back(p);

  if (pos.size() == 1) {
    rw.rotate(pos[0] + 1);  // the unique t_imax becomes the last letter
    res.kind = ReduceCase::CircleRemoval;
    res.letter = imax;
    res.normalized.letters = rw.v;
    res.trace = rw.trace;
    return res;
  }

  // Choose a cyclically consecutive pair of t_imax occurrences and rotate the
  // opening occurrence to the front; the gap between the pair then sits at
  // positions (0, hi) and contains only letters < imax.
  int t = static_cast<int>(choice % pos.size());
  int open = pos[t];
  int close = pos[(t + 1) % pos.size()];
  rw.rotate(open);
  int lo = 0;
  int hi = ((close - open) % n + n) % n;

  int f = imax;
  for (;;) {
    // Occurrences of t_{f-1} strictly inside (lo, hi).
    std::vector<int> mid;
    for (int p = lo + 1; p < hi; ++p)
      if (rw.v[p] == f - 1) mid.push_back(p);

    if (mid.empty()) {
      // Every gap letter is <= f-2 and commutes with t_f: pop them out to
      // the left, one at a time, until the two t_f letters are adjacent.
      while (hi - lo > 1) {
        rw.swap_at(lo);
        ++lo;
      }
      rw.rotate(hi + 1);
      res.kind = ReduceCase::DoubleEdge;
      res.letter = f;
      break;
    }
    if (mid.size() == 1) {
      int m = mid[0];
      while (m - lo > 1) {
        rw.swap_at(lo);
        ++lo;
      }
      while (hi - m > 1) {
        rw.swap_at(hi - 1);
        --hi;
      }
      rw.rotate(hi + 1);
      res.kind = ReduceCase::Slide;
      res.letter = f;
      break;
    }
    // Recurse on a consecutive pair of t_{f-1} occurrences inside the gap;
    // the letters between them are <= f-2, so the invariant is preserved.
    int u = static_cast<int>(choice % (mid.size() - 1));
    lo = mid[u];
    hi = mid[u + 1];
    f = f - 1;
  }
  res.normalized.letters = rw.v;
  res.trace = rw.trace;
  return res;
}

ResolvedWord replay(const ResolvedWord& w, const std::vector<MoveStep>& trace) {
  ResolvedWord out = w;
  auto& v = out.letters;
  int n = static_cast<int>(v.size());
  for (const auto& step : trace) {
    if (step.kind == MoveStep::Rotate) {
      if (step.arg < 0 || step.arg >= std::max(n, 1)) throw Error("replay: bad rotation");
      std::rotate(v.begin(), v.begin() + step.arg, v.end());
    } else {
      if (step.arg < 0 || step.arg + 1 >= n) throw Error("replay: swap out of range");
      if (std::abs(v[step.arg] - v[step.arg + 1]) < 2)
        throw Error("replay: letters do not commute");
      std::swap(v[step.arg], v[step.arg + 1]);
    }
  }
  return out;
}

}  // namespace trkr
