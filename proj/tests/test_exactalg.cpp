#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trkr/poly.hpp"
#include "trkr/qmatrix.hpp"

#include <algorithm>
#include <random>

using namespace trkr;

TEST_CASE("polynomial arithmetic and bigrading") {
  auto R = make_ring({"x1", "x2"});
  auto a = BiGradedPoly::var_a(R);
  auto x1 = BiGradedPoly::var_x(R, 0);
  auto x2 = BiGradedPoly::var_x(R, 1);

  auto p = a * x1;
  CHECK(p.is_homogeneous());
  CHECK(p.bidegree() == Bidegree{2, 2});

  auto q = a * x1 + x2 * x2 * BiGradedPoly(R, Rational(3));
  CHECK(!(q - q).size());
  CHECK((q - a * x1) == x2 * x2 * BiGradedPoly(R, Rational(3)));
  CHECK(!q.is_homogeneous());
  CHECK_THROWS_AS(q.bidegree(), Error);

  // x-homogeneous but a-inhomogeneous must not count as homogeneous.
  auto r = a * x1 + x1;
  CHECK(!r.is_homogeneous());

  CHECK((x1 * x2) == (x2 * x1));
  CHECK(((x1 + x2) * (x1 - x2)) == (x1 * x1 - x2 * x2));
}

TEST_CASE("substitution and ring maps") {
  auto R = make_ring({"x1", "x2"});
  auto a = BiGradedPoly::var_a(R);
  auto x1 = BiGradedPoly::var_x(R, 0);
  auto x2 = BiGradedPoly::var_x(R, 1);

  auto p = a * x1 * x1 + x2;
  auto s = p.substitute_x({{0, x2}});
  CHECK(s == (a * x2 * x2 + x2));

  CHECK(p.substitute_a(1) == (x1 * x1 + x2));
  CHECK(p.substitute_a(0) == x2);
  CHECK(p.truncate_mod_a() == x2);

  auto S = make_ring({"y", "x2", "x1"});
  auto q = p.into_ring(S);
  auto xx1 = BiGradedPoly::var_x(S, 2);
  auto xx2 = BiGradedPoly::var_x(S, 1);
  CHECK(q == (BiGradedPoly::var_a(S) * xx1 * xx1 + xx2));
}

TEST_CASE("divide_exact") {
  auto R = make_ring({"x1", "x2"});
  auto x1 = BiGradedPoly::var_x(R, 0);
  auto x2 = BiGradedPoly::var_x(R, 1);

  // (x1^3 - x2^3) / (x1 - x2) = x1^2 + x1 x2 + x2^2
  auto num = x1 * x1 * x1 - x2 * x2 * x2;
  auto den = x1 - x2;
  auto quo = divide_exact(num, den);
  CHECK(quo == (x1 * x1 + x1 * x2 + x2 * x2));
  CHECK(quo * den == num);

  CHECK_THROWS_AS(divide_exact(x1 * x1 + x2, x1 - x2), Error);
  CHECK(divide_exact(BiGradedPoly(R), den).is_zero());
}

TEST_CASE("newton_g") {
  auto E = make_ring({"e1", "e2"});
  auto e1 = BiGradedPoly::var_x(E, 0);
  auto e2 = BiGradedPoly::var_x(E, 1);

  CHECK(newton_g(1, E) == (e1 * e1 - e2 * BiGradedPoly(E, 2)));
  CHECK(newton_g(2, E) == (e1 * e1 * e1 - e1 * e2 * BiGradedPoly(E, 3)));
  CHECK(newton_g(3, E) ==
        (e1 * e1 * e1 * e1 - e1 * e1 * e2 * BiGradedPoly(E, 4) + e2 * e2 * BiGradedPoly(E, 2)));

  // Defining property g(x+y, xy) = x^{N+1} + y^{N+1}, checked symbolically.
  auto R = make_ring({"x", "y", "e1", "e2"});
  auto x = BiGradedPoly::var_x(R, 0);
  auto y = BiGradedPoly::var_x(R, 1);
  for (int N = 1; N <= 10; ++N) {
    auto g = newton_g(N, R, 2, 3);
    auto expanded = g.substitute_x({{2, x + y}, {3, x * y}});
    BiGradedPoly want(R, 1), xp(R, 1), yp(R, 1);
    for (int t = 0; t < N + 1; ++t) {
      xp = xp * x;
      yp = yp * y;
    }
    CHECK(expanded == xp + yp);
  }
}

TEST_CASE("quotient_pi") {
  auto R = make_ring({"u", "v"});
  auto u = BiGradedPoly::var_x(R, 0);
  auto v = BiGradedPoly::var_x(R, 1);

  for (int N = 1; N <= 6; ++N) {
    auto pi = quotient_pi(R, 0, 1, N);
    BiGradedPoly up(R, 1), vp(R, 1);
    for (int t = 0; t < N + 1; ++t) {
      up = up * u;
      vp = vp * v;
    }
    CHECK(pi * (u - v) == up - vp);
    CHECK(pi.is_homogeneous());
    CHECK(pi.bidegree() == Bidegree{0, 2 * N});
  }

  // Diagonal case: (N+1) u^N.
  auto d2 = quotient_pi(R, 0, 0, 2);
  CHECK(d2 == (u * u * BiGradedPoly(R, 3)));
}

namespace {

SparseMatrix from_dense(const std::vector<std::vector<int>>& d) {
  SparseMatrix m = SparseMatrix::zero(static_cast<int>(d.size()),
                                      d.empty() ? 0 : static_cast<int>(d[0].size()));
  for (size_t r = 0; r < d.size(); ++r)
    for (size_t c = 0; c < d[r].size(); ++c) m.set(static_cast<int>(r), static_cast<int>(c), d[r][c]);
  m.normalize();
  return m;
}

}  // namespace

TEST_CASE("rank_kernel_image basics") {
  // rank 2 with a 1-dimensional kernel
  auto M = from_dense({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  auto rki = rank_kernel_image(M);
  CHECK(rki.rank == 2);
  CHECK(rki.kernel.size() == 1);
  CHECK(rki.image.size() == 2);
  // Kernel vectors actually map to zero.
  for (const auto& k : rki.kernel) CHECK(mat_apply(M, k).empty());

  auto Z = from_dense({{0, 0}, {0, 0}});
  auto rz = rank_kernel_image(Z);
  CHECK(rz.rank == 0);
  CHECK(rz.kernel.size() == 2);

  auto I = from_dense({{1, 0}, {0, 1}});
  auto ri = rank_kernel_image(I);
  CHECK(ri.rank == 2);
  CHECK(ri.kernel.empty());
}

TEST_CASE("rank_kernel_image randomized properties") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 12), val(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<int>> d(rows, std::vector<int>(cols));
    for (auto& row : d)
      for (auto& v : row)
        if (val(rng) > 0) v = val(rng);
    auto M = from_dense(d);
    auto rki = rank_kernel_image(M);
    CHECK(rki.rank + static_cast<int>(rki.kernel.size()) == cols);
    CHECK(static_cast<int>(rki.image.size()) == rki.rank);
    for (const auto& k : rki.kernel) CHECK(mat_apply(M, k).empty());

    // Rank is invariant under row permutation.
    std::vector<int> perm(rows);
    for (int i = 0; i < rows; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> dp(rows);
    for (int i = 0; i < rows; ++i) dp[i] = d[perm[i]];
    CHECK(rank_of(from_dense(dp)) == rki.rank);
  }
}

TEST_CASE("echelon tracked reduction") {
  Echelon ech(4);
  ech.insert({{0, Rational(2)}, {1, Rational(4)}});
  ech.insert({{1, Rational(1)}, {3, Rational(5)}});
  SparseVec v = {{0, Rational(2)}, {1, Rational(5)}, {3, Rational(5)}};
  std::vector<Rational> coeffs;
  ech.reduce_tracked(v, coeffs);
  CHECK(v.empty());
  // v = 2*(col0) + 1*(col1) in the normalized (leading coeff 1) basis.
  CHECK(coeffs.size() == 2);
  CHECK(coeffs[0] == Rational(2));
  CHECK(coeffs[1] == Rational(1));
}
