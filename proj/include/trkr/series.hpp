#pragma once

#include "trkr/poly.hpp"

#include <array>
#include <map>

namespace trkr {

/// Laurent polynomial in t (a-shift) and q (x-shift) with integer
/// coefficients; exponents keyed (t_exp, q_exp).
struct QTPoly {
  std::map<std::pair<int, int>, long long> c;

  bool zero() const { return c.empty(); }
  void add(int j, int k, long long v);
};

QTPoly qt_add(const QTPoly& a, const QTPoly& b);
QTPoly qt_sub(const QTPoly& a, const QTPoly& b);
QTPoly qt_mul(const QTPoly& a, const QTPoly& b);
QTPoly qt_shift(const QTPoly& a, int j, int k);

/// num / (1 - q^2)^dpow
struct SeriesPart {
  QTPoly num;
  int dpow = 0;
};

/// Generating function of the generator multiset of a graded Q[a]-module
/// whose torsion is all Q[a]/(a): four components indexed by
/// (part: 0 free / 1 torsion, eps in Z2). The a = 1 variant (with_a = false)
/// uses t-exponent 0 throughout and counts Q-dimensions.
struct ModuleSeries {
  bool with_a = true;
  SeriesPart part[2][2];
};

ModuleSeries series_zero(bool with_a);
ModuleSeries series_unit(bool with_a);  // ground ring, one free generator
ModuleSeries series_add(const ModuleSeries& a, const ModuleSeries& b);
ModuleSeries series_sub(const ModuleSeries& a, const ModuleSeries& b);
/// <eps> swaps the Z2 rows; {j,k} shifts all exponents (j ignored if !with_a).
ModuleSeries series_shift(const ModuleSeries& s, int eps, int j, int k);
/// Graded tensor product over Q[a]; torsion x torsion is treated as torsion
/// (valid only when at most one factor has torsion, as in the closed forms).
ModuleSeries series_mul(const ModuleSeries& a, const ModuleSeries& b);

ModuleSeries circle_series(int N, bool with_a);
ModuleSeries empty_braid_series(int b, int N, bool with_a);

/// Exact expansion: generator multiplicities per (part, eps, j, k) with
/// k <= kmax (j is 0 when !with_a). Throws Error on any negative coefficient.
std::map<std::array<int, 4>, int> truncate_series(const ModuleSeries& s, int kmax);

}  // namespace trkr
