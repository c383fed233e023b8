#pragma once

#include "trkr/poly.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace trkr {

/// Sparse vector over Q: (index, coeff) pairs sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

void sv_normalize(SparseVec& v);  // sort, merge, drop zeros

/// Column-major sparse matrix over Q.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec> col;

  static SparseMatrix zero(int rows, int cols);
  void set(int r, int c, const Rational& v);  // append (cols must be normalized after)
  void normalize();
};

/// Incremental exact column echelon form. Columns are reduced against the
/// pivots already present; pivots are chosen as the smallest nonzero row
/// index, restricted to rows < lead_limit. Indices >= lead_limit are carried
/// along but never used as pivots, which lets callers append bookkeeping
/// coordinates (e.g. an identity block for kernel extraction).
class Echelon {
 public:
  Echelon(int n, int lead_limit = -1);

  int rank() const { return static_cast<int>(cols_.size()); }

  /// Reduce v in place against the current pivot columns.
  void reduce(SparseVec& v) const;

  /// Reduce v and, if the part below lead_limit is nonzero, add the
  /// remainder as a new pivot column. Returns true if a column was added.
  bool insert(SparseVec v);

  /// Like insert, but also reports the reduced remainder.
  bool insert(SparseVec v, SparseVec& remainder);

  /// Reduce v while recording the coefficient used against each pivot
  /// column: coeffs[t] receives the multiple of pivot column t subtracted.
  void reduce_tracked(SparseVec& v, std::vector<Rational>& coeffs) const;

  const SparseVec& column(int t) const { return cols_[t]; }

 private:
  int n_;
  int lead_limit_;
  std::vector<SparseVec> cols_;               // pivot columns, leading coeff 1
  std::unordered_map<int, int> pivot_of_row_;  // leading row -> column index

  mutable std::vector<Rational> ws_;
  mutable std::vector<bool> ws_used_;
};

struct RankKernelImage {
  int rank = 0;
  std::vector<SparseVec> kernel;  // basis of ker(M), vectors in column space
  std::vector<SparseVec> image;   // echelon basis of im(M), vectors in row space
};

/// Exact rank, kernel basis and image basis of M over Q.
RankKernelImage rank_kernel_image(const SparseMatrix& M);

int rank_of(const SparseMatrix& M);

/// Rank by sparse Gaussian elimination with minimal-fill pivot selection
/// (prefer pivots in the sparsest columns, then the sparsest row within).
/// Much faster than the incremental echelon on incidence-like matrices;
/// use when only the rank is needed.
int rank_elim(const SparseMatrix& M);

/// Basis of a row space from the same minimal-fill elimination as rank_elim.
/// Rows are stored in retirement order: row t contains its pivot plus
/// coordinates that had not yet been chosen as pivots when it retired, so it
/// may contain pivots of *later* rows but never of earlier ones. Reducing a
/// vector against the basis is a single forward pass in retirement order;
/// solving for a preimage is a reverse-order back-substitution.
struct RowBasis {
  int rank = 0;
  std::vector<SparseVec> rows;  // basis rows, sorted by coordinate
  std::vector<int> pivot;      // pivot coordinate of each row
};
RowBasis row_basis_of_rows(const SparseMatrix& M);  // row space of M
RowBasis row_basis_of_cols(const SparseMatrix& M);  // column space of M

/// y += c * x (sparse axpy producing a normalized result).
SparseVec sv_axpy(const SparseVec& y, const Rational& c, const SparseVec& x);

/// M * v with v given in column coordinates.
SparseVec mat_apply(const SparseMatrix& M, const SparseVec& v);

}  // namespace trkr
