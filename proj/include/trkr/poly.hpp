#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace trkr {

using Rational = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bidegree (a-degree, x-degree) with deg a = (2,0), deg x_i = (0,2).
struct Bidegree {
  int a = 0;
  int x = 0;

  Bidegree operator+(Bidegree o) const { return {a + o.a, x + o.x}; }
  Bidegree operator-(Bidegree o) const { return {a - o.a, x - o.x}; }
  bool operator==(const Bidegree&) const = default;
};

/// The polynomial ring Q[a, x_1..x_m]. The variable `a` is implicit;
/// xvars holds the names of the x-variables.
struct Ring {
  std::vector<std::string> xvars;

  int var_index(const std::string& name) const;
  size_t nx() const { return xvars.size(); }
  bool operator==(const Ring& o) const { return xvars == o.xvars; }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> xvars);

/// a^a_exp * prod x_i^{x[i]}.
struct Monomial {
  std::uint32_t a_exp = 0;
  std::vector<std::uint16_t> x;

  int total() const;
  Bidegree bidegree() const;
  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order with a < x_1 < ... < x_m.
struct MonomialOrder {
  bool operator()(const Monomial& p, const Monomial& q) const;
};

/// Element of Q[a, x_1..x_m] with exact rational coefficients.
/// No zero coefficients are stored; term order is canonical.
class BiGradedPoly {
 public:
  BiGradedPoly() = default;
  explicit BiGradedPoly(RingPtr ring) : ring_(std::move(ring)) {}
  BiGradedPoly(RingPtr ring, const Rational& c);

  static BiGradedPoly var_a(const RingPtr& ring);
  static BiGradedPoly var_x(const RingPtr& ring, int i);
  static BiGradedPoly monomial(const RingPtr& ring, Monomial m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, Rational, MonomialOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);

  BiGradedPoly operator+(const BiGradedPoly& o) const;
  BiGradedPoly operator-(const BiGradedPoly& o) const;
  BiGradedPoly operator-() const;
  BiGradedPoly operator*(const BiGradedPoly& o) const;
  BiGradedPoly operator*(const Rational& c) const;
  bool operator==(const BiGradedPoly& o) const;

  /// Homogeneity with respect to the (a, x)-bigrading.
  bool is_homogeneous() const;
  /// Bidegree of a homogeneous polynomial; throws on inhomogeneous input.
  Bidegree bidegree() const;

  /// Substitute x_i -> image for each (i, image) pair; a is untouched.
  BiGradedPoly substitute_x(const std::map<int, BiGradedPoly>& images) const;
  /// Substitute a -> value (0 or 1 are the cases used by specializations).
  BiGradedPoly substitute_a(const Rational& value) const;
  /// Drop every term with a-exponent > 0.
  BiGradedPoly truncate_mod_a() const;

  /// Move this polynomial into `target` using xvar name matching.
  BiGradedPoly into_ring(const RingPtr& target) const;
  /// Move into `target` with an explicit index map old index -> new index.
  BiGradedPoly remap(const RingPtr& target, const std::vector<int>& xmap) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::map<Monomial, Rational, MonomialOrder> terms_;

  void check_ring(const BiGradedPoly& o) const;
};

/// Exact division: returns r with r*q == p; throws Error if q does not
/// divide p exactly.
BiGradedPoly divide_exact(const BiGradedPoly& p, const BiGradedPoly& q);

/// The unique g with g(x+y, xy) = x^{N+1} + y^{N+1}, over the ring (e1, e2).
BiGradedPoly newton_g(int N, const RingPtr& ring_e1_e2, int e1_index = 0, int e2_index = 1);

/// (u^{N+1} - v^{N+1}) / (u - v) = sum_t u^t v^{N-t}; for u == v this is (N+1)u^N.
BiGradedPoly quotient_pi(const RingPtr& ring, int u_index, int v_index, int N);

}  // namespace trkr
