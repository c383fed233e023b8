#include "trkr/qmatrix.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_map>

namespace trkr {

void sv_normalize(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.emplace_back(i, c);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const auto& p) { return p.second == 0; }),
            out.end());
  v = std::move(out);
}

SparseMatrix SparseMatrix::zero(int rows, int cols) {
  SparseMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.col.resize(cols);
  return m;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
  if (v == 0) return;
  col[c].emplace_back(r, v);
}

void SparseMatrix::normalize() {
  for (auto& c : col) sv_normalize(c);
}

Echelon::Echelon(int n, int lead_limit)
    : n_(n), lead_limit_(lead_limit < 0 ? n : lead_limit) {
  ws_.resize(n_);
  ws_used_.assign(n_, false);
}

namespace {

// Scatter/gather reduction working set shared by reduce paths.
struct Scatter {
  std::vector<Rational>& ws;
  std::vector<bool>& used;
  std::vector<int> touched;

  void load(const SparseVec& v) {
    for (const auto& [i, c] : v) {
      ws[i] = c;
      used[i] = true;
      touched.push_back(i);
    }
  }
  void axpy(const Rational& k, const SparseVec& x) {
    for (const auto& [i, c] : x) {
      if (!used[i]) {
        used[i] = true;
        ws[i] = k * c;
        touched.push_back(i);
      } else {
        ws[i] += k * c;
      }
    }
  }
  SparseVec gather() {
    SparseVec out;
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int i : touched)
      if (ws[i] != 0) out.emplace_back(i, ws[i]);
    clear();
    return out;
  }
  void clear() {
    for (int i : touched) {
      ws[i] = 0;
      used[i] = false;
    }
    touched.clear();
  }
};

}  // namespace

void Echelon::reduce(SparseVec& v) const {
  std::vector<Rational> coeffs;
  reduce_tracked(v, coeffs);
}

void Echelon::reduce_tracked(SparseVec& v, std::vector<Rational>& coeffs) const {
  coeffs.assign(cols_.size(), Rational(0));
  Scatter sc{ws_, ws_used_, {}};
  sc.load(v);
  // Process candidate leading rows in ascending order; a heap tolerates
  // duplicates and entries that have since become zero.
  std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
  for (const auto& [i, c] : v)
    if (i < lead_limit_) heap.push(i);
  int last = -1;
  while (!heap.empty()) {
    int i = heap.top();
    heap.pop();
    if (i == last) continue;
    last = i;
    if (!sc.used[i] || sc.ws[i] == 0) continue;
    auto it = pivot_of_row_.find(i);
    if (it == pivot_of_row_.end()) continue;  // stays as leading entry of remainder
    int t = it->second;
    Rational k = -sc.ws[i];
    coeffs[t] += -k;  // pivot columns have leading coeff 1
    size_t before = sc.touched.size();
    sc.axpy(k, cols_[t]);
    for (size_t s = before; s < sc.touched.size(); ++s)
      if (sc.touched[s] < lead_limit_ && sc.touched[s] > i) heap.push(sc.touched[s]);
  }
  v = sc.gather();
}

bool Echelon::insert(SparseVec v) {
  SparseVec rem;
  return insert(std::move(v), rem);
}

bool Echelon::insert(SparseVec v, SparseVec& remainder) {
  reduce(v);
  remainder = v;
  // Leading entry within the pivot range.
  int lead = -1;
  for (const auto& [i, c] : v)
    if (i < lead_limit_) {
      lead = i;
      break;
    }
  if (lead < 0) return false;
  // Scale so the leading coefficient is 1.
  Rational inv;
  for (const auto& [i, c] : v)
    if (i == lead) {
      inv = 1 / c;
      break;
    }
  for (auto& [i, c] : v) c *= inv;
  pivot_of_row_[lead] = static_cast<int>(cols_.size());
  cols_.push_back(std::move(v));
  return true;
}

RankKernelImage rank_kernel_image(const SparseMatrix& M) {
  RankKernelImage out;
  // Work in the extended space rows + cols with an appended identity block;
  // when a column reduces to zero in the top block, the bottom block holds a
  // kernel vector.
  Echelon ech(M.rows + M.cols, M.rows);
  for (int j = 0; j < M.cols; ++j) {
    SparseVec v = M.col[j];
    v.emplace_back(M.rows + j, Rational(1));
    SparseVec rem;
    if (ech.insert(std::move(v), rem)) {
      ++out.rank;
    } else {
      SparseVec k;
      for (const auto& [i, c] : rem)
        if (i >= M.rows) k.emplace_back(i - M.rows, c);
      out.kernel.push_back(std::move(k));
    }
  }
  for (int t = 0; t < ech.rank(); ++t) {
    SparseVec img;
    for (const auto& [i, c] : ech.column(t))
      if (i < M.rows) img.emplace_back(i, c);
    out.image.push_back(std::move(img));
  }
  return out;
}

int rank_of(const SparseMatrix& M) {
  Echelon ech(M.rows);
  int r = 0;
  for (const auto& c : M.col)
    if (ech.insert(c)) ++r;
  return r;
}

namespace {

RowBasis elim_core(std::vector<std::unordered_map<int, Rational>> row, int nc, bool keep) {
  RowBasis out;
  const int nr = static_cast<int>(row.size());
  std::vector<std::unordered_map<int, char>> colrows(nc);  // col -> rows with nonzero
  for (int r = 0; r < nr; ++r)
    for (const auto& [c, v] : row[r]) colrows[c].emplace(r, 1);
  // Lazy min-heap over column fill; stale entries are skipped on pop. A
  // second lazy queue prefers singleton rows, whose elimination never fills.
  using HE = std::pair<size_t, int>;  // (nnz, col)
  std::priority_queue<HE, std::vector<HE>, std::greater<HE>> heap;
  std::vector<int> single_rows;
  for (int c = 0; c < nc; ++c)
    if (!colrows[c].empty()) heap.emplace(colrows[c].size(), c);
  for (int r = 0; r < nr; ++r)
    if (row[r].size() == 1) single_rows.push_back(r);
  std::vector<bool> col_done(nc, false);
  int rank = 0;
  while (!heap.empty() || !single_rows.empty()) {
    int c, pr;
    if (!single_rows.empty()) {
      pr = single_rows.back();
      single_rows.pop_back();
      if (row[pr].size() != 1) continue;  // stale
      c = row[pr].begin()->first;
    } else {
      auto [sz, cc] = heap.top();
      heap.pop();
      c = cc;
      if (col_done[c] || colrows[c].empty()) continue;
      if (sz != colrows[c].size()) {
        heap.emplace(colrows[c].size(), c);
        continue;
      }
      // pivot row: fewest nonzeros in this column
      pr = -1;
      size_t best = SIZE_MAX;
      for (const auto& [r, _] : colrows[c])
        if (row[r].size() < best) {
          best = row[r].size();
          pr = r;
        }
    }
    const Rational pv = row[pr].at(c);
    // eliminate column c from all other rows touching it
    std::vector<int> victims;
    victims.reserve(colrows[c].size());
    for (const auto& [r, _] : colrows[c])
      if (r != pr) victims.push_back(r);
    std::vector<int> dirty;
    for (int r : victims) {
      const Rational f = row[r].at(c) / pv;
      for (const auto& [cc, vv] : row[pr]) {
        if (cc == c) continue;
        auto it = row[r].find(cc);
        if (it == row[r].end()) {
          row[r].emplace(cc, -f * vv);
          colrows[cc].emplace(r, 1);
          dirty.push_back(cc);
        } else {
          it->second -= f * vv;
          if (it->second == 0) {
            row[r].erase(it);
            colrows[cc].erase(r);
            dirty.push_back(cc);
          }
        }
      }
      row[r].erase(c);
      colrows[c].erase(r);
      if (row[r].size() == 1) single_rows.push_back(r);
    }
    // retire the pivot row and column
    for (const auto& [cc, vv] : row[pr])
      if (cc != c) {
        colrows[cc].erase(pr);
        dirty.push_back(cc);
      }
    if (keep) {
      // pivot columns of earlier steps were eliminated from this row before
      // its retirement; pivots chosen later may still appear, so consumers
      // must reduce in retirement order (see RowBasis)
      SparseVec sv(row[pr].begin(), row[pr].end());
      std::sort(sv.begin(), sv.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out.rows.push_back(std::move(sv));
      out.pivot.push_back(c);
    }
    row[pr].clear();
    colrows[c].clear();
    col_done[c] = true;
    ++rank;
    std::sort(dirty.begin(), dirty.end());
    dirty.erase(std::unique(dirty.begin(), dirty.end()), dirty.end());
    for (int cc : dirty)
      if (!col_done[cc] && !colrows[cc].empty()) heap.emplace(colrows[cc].size(), cc);
  }
  out.rank = rank;
  return out;
}

std::vector<std::unordered_map<int, Rational>> rows_of(const SparseMatrix& M) {
  std::vector<std::unordered_map<int, Rational>> rows(M.rows);
  for (int c = 0; c < M.cols; ++c)
    for (const auto& [r, v] : M.col[c]) rows[r].emplace(c, v);
  return rows;
}

}  // namespace

int rank_elim(const SparseMatrix& M) { return elim_core(rows_of(M), M.cols, false).rank; }

RowBasis row_basis_of_rows(const SparseMatrix& M) { return elim_core(rows_of(M), M.cols, true); }

RowBasis row_basis_of_cols(const SparseMatrix& M) {
  std::vector<std::unordered_map<int, Rational>> rows(M.cols);
  for (int c = 0; c < M.cols; ++c) rows[c] = {M.col[c].begin(), M.col[c].end()};
  return elim_core(std::move(rows), M.rows, true);
}

SparseVec sv_axpy(const SparseVec& y, const Rational& c, const SparseVec& x) {
  SparseVec out;
  out.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j >= x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i >= y.size() || x[j].first < y[i].first) {
      Rational v = c * x[j].second;
      if (v != 0) out.emplace_back(x[j].first, std::move(v));
      ++j;
    } else {
      Rational v = y[i].second + c * x[j].second;
      if (v != 0) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec mat_apply(const SparseMatrix& M, const SparseVec& v) {
  SparseVec out;
  for (const auto& [j, c] : v)
    for (const auto& [i, m] : M.col[j]) out.emplace_back(i, c * m);
  sv_normalize(out);
  return out;
}

}  // namespace trkr
