#include "trkr/poly.hpp"

#include <algorithm>
#include <sstream>

namespace trkr {

int Ring::var_index(const std::string& name) const {
  for (size_t i = 0; i < xvars.size(); ++i)
    if (xvars[i] == name) return static_cast<int>(i);
  throw Error("unknown variable: " + name);
}

RingPtr make_ring(std::vector<std::string> xvars) {
  for (size_t i = 0; i < xvars.size(); ++i)
    for (size_t j = i + 1; j < xvars.size(); ++j)
      if (xvars[i] == xvars[j]) throw Error("duplicate variable name: " + xvars[i]);
  auto r = std::make_shared<Ring>();
  r->xvars = std::move(xvars);
  return r;
}

int Monomial::total() const {
  int t = static_cast<int>(a_exp);
  for (auto e : x) t += e;
  return t;
}

Bidegree Monomial::bidegree() const {
  int xd = 0;
  for (auto e : x) xd += e;
  return {2 * static_cast<int>(a_exp), 2 * xd};
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (x.size() != o.x.size()) throw Error("monomial size mismatch");
  Monomial r;
  r.a_exp = a_exp + o.a_exp;
  r.x.resize(x.size());
  for (size_t i = 0; i < x.size(); ++i) r.x[i] = static_cast<std::uint16_t>(x[i] + o.x[i]);
  return r;
}

bool MonomialOrder::operator()(const Monomial& p, const Monomial& q) const {
  int tp = p.total(), tq = q.total();
  if (tp != tq) return tp < tq;
  if (p.a_exp != q.a_exp) return p.a_exp < q.a_exp;
  return p.x < q.x;
}

BiGradedPoly::BiGradedPoly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
  if (c != 0) {
    Monomial one;
    one.x.assign(ring_->nx(), 0);
    terms_.emplace(std::move(one), c);
  }
}

BiGradedPoly BiGradedPoly::var_a(const RingPtr& ring) {
  Monomial m;
  m.a_exp = 1;
  m.x.assign(ring->nx(), 0);
  return monomial(ring, std::move(m), 1);
}

BiGradedPoly BiGradedPoly::var_x(const RingPtr& ring, int i) {
  if (i < 0 || i >= static_cast<int>(ring->nx())) throw Error("variable index out of range");
  Monomial m;
  m.x.assign(ring->nx(), 0);
  m.x[i] = 1;
  return monomial(ring, std::move(m), 1);
}

BiGradedPoly BiGradedPoly::monomial(const RingPtr& ring, Monomial m, const Rational& c) {
  if (m.x.size() != ring->nx()) throw Error("monomial does not fit ring");
  BiGradedPoly p(ring);
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

void BiGradedPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void BiGradedPoly::check_ring(const BiGradedPoly& o) const {
  if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_)) throw Error("ring mismatch");
}

BiGradedPoly BiGradedPoly::operator+(const BiGradedPoly& o) const {
  check_ring(o);
  BiGradedPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

BiGradedPoly BiGradedPoly::operator-(const BiGradedPoly& o) const {
  check_ring(o);
  BiGradedPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

BiGradedPoly BiGradedPoly::operator-() const {
  BiGradedPoly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

BiGradedPoly BiGradedPoly::operator*(const BiGradedPoly& o) const {
  check_ring(o);
  BiGradedPoly r(ring_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

BiGradedPoly BiGradedPoly::operator*(const Rational& c) const {
  BiGradedPoly r(ring_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

bool BiGradedPoly::operator==(const BiGradedPoly& o) const {
  return terms_ == o.terms_;
}

bool BiGradedPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  Bidegree d = terms_.begin()->first.bidegree();
  for (const auto& [m, c] : terms_)
    if (!(m.bidegree() == d)) return false;
  return true;
}

Bidegree BiGradedPoly::bidegree() const {
  if (terms_.empty()) throw Error("bidegree of zero polynomial");
  if (!is_homogeneous()) throw Error("bidegree of inhomogeneous polynomial");
  return terms_.begin()->first.bidegree();
}

BiGradedPoly BiGradedPoly::substitute_x(const std::map<int, BiGradedPoly>& images) const {
  BiGradedPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    BiGradedPoly term(ring_, c);
    for (const auto& [i, img] : images) {
      for (int e = 0; e < rest.x[i]; ++e) term = term * img;
      rest.x[i] = 0;
    }
    r = r + term * monomial(ring_, rest, 1);
  }
  return r;
}

BiGradedPoly BiGradedPoly::substitute_a(const Rational& value) const {
  BiGradedPoly r(ring_);
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    for (std::uint32_t e = 0; e < m.a_exp; ++e) coeff *= value;
    Monomial m2 = m;
    m2.a_exp = 0;
    r.add_term(m2, coeff);
  }
  return r;
}

BiGradedPoly BiGradedPoly::truncate_mod_a() const {
  BiGradedPoly r(ring_);
  for (const auto& [m, c] : terms_)
    if (m.a_exp == 0) r.terms_.emplace(m, c);
  return r;
}

BiGradedPoly BiGradedPoly::into_ring(const RingPtr& target) const {
  std::vector<int> xmap(ring_->nx());
  for (size_t i = 0; i < ring_->nx(); ++i) xmap[i] = target->var_index(ring_->xvars[i]);
  return remap(target, xmap);
}

BiGradedPoly BiGradedPoly::remap(const RingPtr& target, const std::vector<int>& xmap) const {
  if (xmap.size() != ring_->nx()) throw Error("remap table size mismatch");
  BiGradedPoly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial m2;
    m2.a_exp = m.a_exp;
    m2.x.assign(target->nx(), 0);
    for (size_t i = 0; i < m.x.size(); ++i) {
      if (m.x[i] == 0) continue;
      int j = xmap[i];
      if (j < 0 || j >= static_cast<int>(target->nx())) throw Error("remap index out of range");
      m2.x[j] = static_cast<std::uint16_t>(m2.x[j] + m.x[i]);
    }
    r.add_term(m2, c);
  }
  return r;
}

std::string BiGradedPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest-order terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational cc = c;
    if (first) {
      if (cc < 0) {
        os << "-";
        cc = -cc;
      }
    } else {
      os << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    first = false;
    bool any_var = m.a_exp > 0 || std::any_of(m.x.begin(), m.x.end(), [](auto e) { return e > 0; });
    if (cc != 1 || !any_var) os << cc.get_str();
    bool star = cc != 1 || !any_var;
    auto piece = [&](const std::string& name, int e) {
      if (e == 0) return;
      if (star) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      star = true;
    };
    piece("a", static_cast<int>(m.a_exp));
    for (size_t i = 0; i < m.x.size(); ++i) piece(ring_->xvars[i], m.x[i]);
  }
  return os.str();
}

BiGradedPoly divide_exact(const BiGradedPoly& p, const BiGradedPoly& q) {
  if (q.is_zero()) throw Error("divide_exact: division by zero");
  BiGradedPoly rem = p;
  BiGradedPoly quot(p.ring());
  // Leading term of q under the monomial order (largest term).
  const auto& qlead = *q.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    // Divisibility of the leading monomials.
    const Monomial& rm = rlead.first;
    const Monomial& qm = qlead.first;
    if (rm.a_exp < qm.a_exp) throw Error("divide_exact: not divisible");
    Monomial f;
    f.a_exp = rm.a_exp - qm.a_exp;
    f.x.resize(rm.x.size());
    for (size_t i = 0; i < rm.x.size(); ++i) {
      if (rm.x[i] < qm.x[i]) throw Error("divide_exact: not divisible");
      f.x[i] = static_cast<std::uint16_t>(rm.x[i] - qm.x[i]);
    }
    Rational c = rlead.second / qlead.second;
    BiGradedPoly t = BiGradedPoly::monomial(p.ring(), std::move(f), c);
    quot = quot + t;
    rem = rem - t * q;
  }
  return quot;
}

BiGradedPoly newton_g(int N, const RingPtr& ring, int e1_index, int e2_index) {
  if (N < 1) throw Error("newton_g: N must be >= 1");
  BiGradedPoly e1 = BiGradedPoly::var_x(ring, e1_index);
  BiGradedPoly e2 = BiGradedPoly::var_x(ring, e2_index);
  // Power sums p_k(x, y) written in e1 = x + y, e2 = xy:
  // p_0 = 2, p_1 = e1, p_k = e1 p_{k-1} - e2 p_{k-2}.
  BiGradedPoly pk_2(ring, 2);
  BiGradedPoly pk_1 = e1;
  if (N + 1 == 0) return pk_2;
  for (int k = 2; k <= N + 1; ++k) {
    BiGradedPoly pk = e1 * pk_1 - e2 * pk_2;
    pk_2 = std::move(pk_1);
    pk_1 = std::move(pk);
  }
  return pk_1;
}

BiGradedPoly quotient_pi(const RingPtr& ring, int u_index, int v_index, int N) {
  BiGradedPoly u = BiGradedPoly::var_x(ring, u_index);
  BiGradedPoly v = BiGradedPoly::var_x(ring, v_index);
  if (u_index == v_index) {
    // (u^{N+1} - v^{N+1})/(u - v) at v = u is the derivative value (N+1)u^N.
    BiGradedPoly r(ring, N + 1);
    for (int t = 0; t < N; ++t) r = r * u;
    return r;
  }
  BiGradedPoly r(ring);
  for (int t = 0; t <= N; ++t) {
    BiGradedPoly term(ring, 1);
    for (int s = 0; s < t; ++s) term = term * u;
    for (int s = t; s < N; ++s) term = term * v;
    r = r + term;
  }
  return r;
}

}  // namespace trkr
