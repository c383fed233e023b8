#include "trkr/oracle.hpp"

#include <mutex>
#include <sstream>

namespace trkr {

namespace {

std::string memo_key(const ResolvedWord& w, int N, bool with_a) {
  std::ostringstream os;
  os << N << "|" << with_a << "|" << to_string(cyclic_normal_form(w));
  return os.str();
}

std::map<std::string, ModuleSeries> g_memo;
std::mutex g_memo_mu;

bool memo_get(const std::string& key, ModuleSeries& out) {
  std::lock_guard<std::mutex> lk(g_memo_mu);
  auto it = g_memo.find(key);
  if (it == g_memo.end()) return false;
  out = it->second;
  return true;
}

void memo_put(const std::string& key, const ModuleSeries& s) {
  std::lock_guard<std::mutex> lk(g_memo_mu);
  g_memo.emplace(key, s);
}

void log_step(RewriteTrace* trace, char tag, const ResolvedWord& w) {
  if (!trace) return;
  std::ostringstream os;
  os << tag << ": " << to_string(w);
  trace->steps.push_back(os.str());
}

ResolvedWord drop_last(const ResolvedWord& w, int n) {
  ResolvedWord r = w;
  r.letters.resize(r.letters.size() - n);
  return r;
}

}  // namespace

ModuleSeries reduce_series(const ResolvedWord& w, int N, bool with_a,
                           RewriteTrace* trace, unsigned choice) {
  std::string key = memo_key(w, N, with_a);
  ModuleSeries memo;
  if (memo_get(key, memo)) return memo;

  InductionResult ir = induction_case(w, choice);
  if (!ir.trace.empty() && replay(w, ir.trace) != ir.normalized)
    throw Error("reduce_series: trace replay mismatch");
  const ResolvedWord& v = ir.normalized;
  ModuleSeries out;

  switch (ir.kind) {
    case ReduceCase::Empty:
      out = empty_braid_series(w.b, N, with_a);
      log_step(trace, 'E', v);
      break;
    case ReduceCase::CircleRemoval: {
      // S((W t_i)_b) = [S(W_b) - S(W_{b-1})<1>{-1,1-N}] {0,-1}
      log_step(trace, 'A', v);
      ResolvedWord wb = drop_last(v, 1);
      ResolvedWord wb1 = wb;
      wb1.b -= 1;
      ModuleSeries sb = reduce_series(wb, N, with_a, trace, choice);
      ModuleSeries sb1 = reduce_series(wb1, N, with_a, trace, choice);
      out = series_shift(series_sub(sb, series_shift(sb1, 1, -1, 1 - N)), 0, 0, -1);
      break;
    }
    case ReduceCase::DoubleEdge: {
      // S(W t_j t_j) = S(W t_j){0,1} (+) S(W t_j){0,-1}
      log_step(trace, 'B', v);
      ModuleSeries s = reduce_series(drop_last(v, 1), N, with_a, trace, choice);
      out = series_add(series_shift(s, 0, 0, 1), series_shift(s, 0, 0, -1));
      break;
    }
    case ReduceCase::Slide: {
      // S(W t_j t_{j-1} t_j) = S(W t_{j-1} t_j t_{j-1}) + S(W t_j) - S(W t_{j-1})
      log_step(trace, 'C', v);
      int n = static_cast<int>(v.letters.size());
      int tj = v.letters[n - 1];
      ResolvedWord swapped = v;
      swapped.letters[n - 3] = tj - 1;
      swapped.letters[n - 2] = tj;
      swapped.letters[n - 1] = tj - 1;
      ResolvedWord wj = drop_last(v, 2);  // ends ... t_j
      ResolvedWord wj1 = wj;
      wj1.letters[n - 3] = tj - 1;  // ends ... t_{j-1}
      ModuleSeries a = reduce_series(swapped, N, with_a, trace, choice);
      ModuleSeries b = reduce_series(wj, N, with_a, trace, choice);
      ModuleSeries c = reduce_series(wj1, N, with_a, trace, choice);
      out = series_sub(series_add(a, b), c);
      break;
    }
  }
  memo_put(key, out);
  return out;
}

}  // namespace trkr
