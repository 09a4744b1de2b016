#pragma once
// Reference computations that share no code with the library's SNF or search
// paths: dense linear algebra over GF(p), a numeric Gauss linking integral and
// subset enumeration for minimization.

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cechspan/complex.hpp"
#include "cechspan/linking.hpp"
#include "cechspan/measure.hpp"
#include "cechspan/plateau.hpp"
#include "cechspan/spanning.hpp"

namespace oracle {

using cechspan::Simplex;
using cechspan::SimplicialComplex;
using Row = std::vector<long long>;
using Mat = std::vector<Row>;

inline long long mod(long long x, long long p) { return ((x % p) + p) % p; }

inline long long inverse(long long a, long long p) {
  long long r = 1, e = p - 2;
  a = mod(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Row echelon form in place; returns the rank.
inline std::size_t echelon(Mat& m, long long p, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t r = rank;
    while (r < m.size() && mod(m[r][c], p) == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[rank]);
    const long long inv = inverse(m[rank][c], p);
    for (auto& x : m[rank]) x = mod(x * inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || mod(m[i][c], p) == 0) continue;
      const long long f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[rank][j], p);
    }
    if (pivots) pivots->push_back(c);
    ++rank;
  }
  return rank;
}

inline std::size_t rank_mod(Mat m, long long p) { return echelon(m, p); }

/// Basis of { x : m x = 0 } over GF(p) for an r x n matrix.
inline Mat kernel(Mat m, std::size_t n, long long p) {
  std::vector<std::size_t> piv;
  echelon(m, p, &piv);
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  Mat basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Row v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = mod(-m[i][f], p);
    basis.push_back(v);
  }
  return basis;
}

/// Simplices of degree k, with one empty simplex in degree -1 when reduced.
inline std::vector<Simplex> cells(const SimplicialComplex& k, int degree, bool reduced) {
  if (degree == -1) return reduced && !k.empty() ? std::vector<Simplex>{Simplex{}} : std::vector<Simplex>{};
  if (degree < -1 || degree > k.dimension()) return {};
  return k.simplices(degree);
}

/// Matrix of δ: C^degree -> C^{degree+1}, rows indexed by (degree+1)-simplices.
inline Mat coboundary(const SimplicialComplex& k, int degree, bool reduced) {
  const auto lo = cells(k, degree, reduced), hi = cells(k, degree + 1, reduced);
  Mat m(hi.size(), Row(lo.size(), 0));
  if (lo.empty()) return m;
  std::map<Simplex, std::size_t> index;
  for (std::size_t i = 0; i < lo.size(); ++i) index[lo[i]] = i;
  for (std::size_t r = 0; r < hi.size(); ++r)
    for (std::size_t i = 0; i < hi[r].size(); ++i) {
      Simplex face = hi[r];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      m[r][index.at(face)] += (i % 2 == 0) ? 1 : -1;
    }
  return m;
}

/// dim H^degree(k; GF(p)).
inline std::size_t betti(const SimplicialComplex& k, int degree, long long p, bool reduced) {
  const std::size_t n = cells(k, degree, reduced).size();
  const std::size_t z = n - rank_mod(coboundary(k, degree, reduced), p);
  const std::size_t b = rank_mod(coboundary(k, degree - 1, reduced), p);
  return z - b;
}

/// dim of the image of H^degree(X) -> H^degree(A) over GF(p), A ⊂ X.
inline std::size_t restriction_rank(const SimplicialComplex& x, const SimplicialComplex& a, int degree, long long p) {
  const auto cx = cells(x, degree, true), ca = cells(a, degree, true);
  const auto zx = kernel(coboundary(x, degree, true), cx.size(), p);
  std::map<Simplex, std::size_t> ix;
  for (std::size_t i = 0; i < cx.size(); ++i) ix[cx[i]] = i;
  // Coboundaries in A: transpose of δ^{degree-1} gives them as rows.
  const auto d = coboundary(a, degree - 1, true);
  Mat bounds;
  for (std::size_t c = 0; c < (d.empty() ? 0 : d[0].size()); ++c) {
    Row v(ca.size(), 0);
    for (std::size_t r = 0; r < d.size(); ++r) v[r] = d[r][c];
    bounds.push_back(v);
  }
  Mat with_image = bounds;
  for (const auto& z : zx) {
    Row v(ca.size(), 0);
    for (std::size_t j = 0; j < ca.size(); ++j) v[j] = z[ix.at(ca[j])];
    with_image.push_back(v);
  }
  return rank_mod(with_image, p) - rank_mod(bounds, p);
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// |K*(X, A)| over GF(p) in degree m-1.
inline std::uint64_t coboundary_size(const SimplicialComplex& x, const SimplicialComplex& a, int m, long long p) {
  const auto up = static_cast<std::uint64_t>(p);
  return ipow(up, betti(a, m - 1, p, true)) - ipow(up, restriction_rank(x, a, m - 1, p));
}

/// Gauss linking integral by the midpoint rule; adequate for well-separated loops.
inline double gauss_linking(const cechspan::PolyLoop& a, const cechspan::PolyLoop& b, int steps = 200) {
  auto pt = [](const cechspan::Point& p) {
    return std::array<double, 3>{p[0].convert_to<double>(), p[1].convert_to<double>(), p[2].convert_to<double>()};
  };
  double total = 0;
  const auto& pa = a.points();
  const auto& pb = b.points();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const auto a0 = pt(pa[i]), a1 = pt(pa[(i + 1) % pa.size()]);
    for (std::size_t j = 0; j < pb.size(); ++j) {
      const auto b0 = pt(pb[j]), b1 = pt(pb[(j + 1) % pb.size()]);
      std::array<double, 3> da, db;
      for (int c = 0; c < 3; ++c) {
        da[c] = (a1[c] - a0[c]) / steps;
        db[c] = (b1[c] - b0[c]) / steps;
      }
      const double cx = da[1] * db[2] - da[2] * db[1], cy = da[2] * db[0] - da[0] * db[2],
                   cz = da[0] * db[1] - da[1] * db[0];
      for (int s = 0; s < steps; ++s)
        for (int t = 0; t < steps; ++t) {
          double r[3];
          for (int c = 0; c < 3; ++c)
            r[c] = (a0[c] + (s + 0.5) * da[c]) - (b0[c] + (t + 0.5) * db[c]);
          const double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
          total += (r[0] * cx + r[1] * cy + r[2] * cz) / (n * n * n);
        }
    }
  }
  return total / (4 * M_PI);
}

/// Lightest spanning candidate subset by plain enumeration with the direct spans test.
inline std::optional<cechspan::RootSum> brute_minimum(const cechspan::SpanningInstance& inst) {
  const auto cand = inst.candidates();
  std::optional<cechspan::RootSum> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cand.size()); ++mask) {
    std::vector<Simplex> gens = inst.boundary.facets();
    cechspan::RootSum w;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (mask >> i & 1) {
        gens.push_back(inst.ambient.simplices(inst.m)[cand[i]]);
        w += inst.weights[cand[i]];
      }
    if (best && !(w < *best)) continue;
    const auto x = gens.empty() ? SimplicialComplex() : cechspan::subcomplex(inst.ambient, gens);
    if (cechspan::spans(x, inst.boundary, inst.m, inst.ring, inst.L)) best = w;
  }
  return best;
}

}  // namespace oracle
