#include "trkr/series.hpp"

#include <sstream>

namespace trkr {

void QTPoly::add(int j, int k, long long v) {
  if (v == 0) return;
  auto it = c.find({j, k});
  if (it == c.end()) {
    c.emplace(std::make_pair(j, k), v);
  } else {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
}

QTPoly qt_add(const QTPoly& a, const QTPoly& b) {
  QTPoly r = a;
  for (const auto& [e, v] : b.c) r.add(e.first, e.second, v);
  return r;
}

QTPoly qt_sub(const QTPoly& a, const QTPoly& b) {
  QTPoly r = a;
  for (const auto& [e, v] : b.c) r.add(e.first, e.second, -v);
  return r;
}

QTPoly qt_mul(const QTPoly& a, const QTPoly& b) {
  QTPoly r;
  for (const auto& [ea, va] : a.c)
    for (const auto& [eb, vb] : b.c) r.add(ea.first + eb.first, ea.second + eb.second, va * vb);
  return r;
}

QTPoly qt_shift(const QTPoly& a, int j, int k) {
  QTPoly r;
  for (const auto& [e, v] : a.c) r.add(e.first + j, e.second + k, v);
  return r;
}

namespace {

// multiply by (1 - q^2)^e
QTPoly qt_scale_denom(const QTPoly& a, int e) {
  QTPoly r = a;
  QTPoly f;
  f.add(0, 0, 1);
  f.add(0, 2, -1);
  for (int t = 0; t < e; ++t) r = qt_mul(r, f);
  return r;
}

SeriesPart part_add(const SeriesPart& a, const SeriesPart& b, int sign) {
  SeriesPart r;
  r.dpow = std::max(a.dpow, b.dpow);
  QTPoly an = qt_scale_denom(a.num, r.dpow - a.dpow);
  QTPoly bn = qt_scale_denom(b.num, r.dpow - b.dpow);
  r.num = sign > 0 ? qt_add(an, bn) : qt_sub(an, bn);
  if (r.num.zero()) r.dpow = 0;
  return r;
}

SeriesPart part_mul(const SeriesPart& a, const SeriesPart& b) {
  SeriesPart r;
  r.num = qt_mul(a.num, b.num);
  r.dpow = r.num.zero() ? 0 : a.dpow + b.dpow;
  return r;
}

}  // namespace

ModuleSeries series_zero(bool with_a) {
  ModuleSeries s;
  s.with_a = with_a;
  return s;
}

ModuleSeries series_unit(bool with_a) {
  ModuleSeries s = series_zero(with_a);
  s.part[0][0].num.add(0, 0, 1);
  return s;
}

ModuleSeries series_add(const ModuleSeries& a, const ModuleSeries& b) {
  if (a.with_a != b.with_a) throw Error("series_add: variant mismatch");
  ModuleSeries r = series_zero(a.with_a);
  for (int p = 0; p < 2; ++p)
    for (int e = 0; e < 2; ++e) r.part[p][e] = part_add(a.part[p][e], b.part[p][e], +1);
  return r;
}

ModuleSeries series_sub(const ModuleSeries& a, const ModuleSeries& b) {
  if (a.with_a != b.with_a) throw Error("series_sub: variant mismatch");
  ModuleSeries r = series_zero(a.with_a);
  for (int p = 0; p < 2; ++p)
    for (int e = 0; e < 2; ++e) r.part[p][e] = part_add(a.part[p][e], b.part[p][e], -1);
  return r;
}

ModuleSeries series_shift(const ModuleSeries& s, int eps, int j, int k) {
  ModuleSeries r = series_zero(s.with_a);
  if (!s.with_a) j = 0;
  for (int p = 0; p < 2; ++p)
    for (int e = 0; e < 2; ++e) {
      SeriesPart& dst = r.part[p][(e + eps) % 2];
      dst.num = qt_shift(s.part[p][e].num, j, k);
      dst.dpow = s.part[p][e].dpow;
    }
  return r;
}

ModuleSeries series_mul(const ModuleSeries& a, const ModuleSeries& b) {
  if (a.with_a != b.with_a) throw Error("series_mul: variant mismatch");
  ModuleSeries r = series_zero(a.with_a);
  for (int pa = 0; pa < 2; ++pa)
    for (int pb = 0; pb < 2; ++pb)
      for (int ea = 0; ea < 2; ++ea)
        for (int eb = 0; eb < 2; ++eb) {
          int p = (pa || pb) ? 1 : 0;  // free x free is free, anything else torsion
          int e = (ea + eb) % 2;
          r.part[p][e] = part_add(r.part[p][e], part_mul(a.part[pa][ea], b.part[pb][eb]), +1);
        }
  return r;
}

ModuleSeries circle_series(int N, bool with_a) {
  ModuleSeries s = series_zero(with_a);
  if (with_a) {
    for (int l = 0; l < N; ++l) s.part[0][1].num.add(-1, 1 - N + 2 * l, 1);
    s.part[1][1].num.add(-1, N + 1, 1);
    s.part[1][1].dpow = 1;
  } else {
    for (int l = 0; l < N; ++l) s.part[0][1].num.add(0, 1 - N + 2 * l, 1);
  }
  return s;
}

ModuleSeries empty_braid_series(int b, int N, bool with_a) {
  if (!with_a) {
    // a = 1: each circle contributes Q[x]/(x^N)<1>{1-N}
    ModuleSeries r = series_unit(false);
    ModuleSeries c = circle_series(N, false);
    for (int t = 0; t < b; ++t) r = series_mul(r, c);
    return r;
  }
  // M1 = (+)_{l<N} Q[a]<1>{-1,1-N+2l}
  ModuleSeries m1 = series_zero(true);
  for (int l = 0; l < N; ++l) m1.part[0][1].num.add(-1, 1 - N + 2 * l, 1);
  // M0 = Q[a,x]<1>{-1,1-N} (+) Q[a,x]: free with a polynomial tail per strand
  ModuleSeries m0 = series_zero(true);
  m0.part[0][1].num.add(-1, 1 - N, 1);
  m0.part[0][0].num.add(0, 0, 1);
  m0.part[0][1].dpow = 1;
  m0.part[0][0].dpow = 1;
  // Minf = (+)_{l>=N} Q[a]/(a)<1>{-1,1-N+2l}
  ModuleSeries minf = series_zero(true);
  minf.part[1][1].num.add(-1, N + 1, 1);
  minf.part[1][1].dpow = 1;

  std::vector<ModuleSeries> m0pow{series_unit(true)}, m1pow{series_unit(true)};
  for (int t = 1; t <= b; ++t) {
    m0pow.push_back(series_mul(m0pow.back(), m0));
    m1pow.push_back(series_mul(m1pow.back(), m1));
  }
  ModuleSeries r = m1pow[b];
  for (int j = 0; j < b; ++j)
    r = series_add(r, series_mul(series_mul(m0pow[j], m1pow[b - 1 - j]), minf));
  return r;
}

std::map<std::array<int, 4>, int> truncate_series(const ModuleSeries& s, int kmax) {
  std::map<std::array<int, 4>, int> out;
  for (int p = 0; p < 2; ++p)
    for (int e = 0; e < 2; ++e) {
      const SeriesPart& sp = s.part[p][e];
      std::map<std::pair<int, int>, long long> acc;
      for (const auto& [ex, v] : sp.num.c) {
        if (sp.dpow == 0) {
          acc[{ex.first, ex.second}] += v;
          continue;
        }
        // v * q^k / (1-q^2)^d = v * sum_t C(t+d-1, d-1) q^{k+2t}
        long long binom = 1;
        for (int t = 0; ex.second + 2 * t <= kmax; ++t) {
          if (t > 0) binom = binom * (t + sp.dpow - 1) / t;
          acc[{ex.first, ex.second + 2 * t}] += v * binom;
        }
      }
      for (const auto& [ex, v] : acc) {
        if (v < 0) {
          std::ostringstream os;
          os << "truncate_series: negative multiplicity " << v << " at part=" << p
             << " eps=" << e << " j=" << ex.first << " k=" << ex.second;
          throw Error(os.str());
        }
        if (v != 0 && ex.second <= kmax)
          out[{p, e, ex.first, ex.second}] = static_cast<int>(v);
      }
    }
  return out;
}

}  // namespace trkr
