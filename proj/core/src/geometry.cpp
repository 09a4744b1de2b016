#include "cechspan/geometry.hpp"

#include <optional>

namespace cechspan {

std::optional<std::vector<Rational>> lp_feasible(const std::vector<std::vector<Rational>>& a,
                                                 const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw PreconditionError("LP shape mismatch");
  const std::size_t n = rows ? a[0].size() : 0;
  for (const auto& r : a)
    if (r.size() != n) throw PreconditionError("ragged LP matrix");

  // Tableau columns: n structural, rows artificial, then the right-hand side.
  const std::size_t width = n + rows + 1;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = flip ? -b[i] : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(width);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == width - 1) cost[j] -= t[i][j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width - 1; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction cannot occur in phase one
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[width - 1] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
  return x;
}

namespace {

bool boxes_overlap(const std::vector<Point>& p, const std::vector<Point>& q) {
  const std::size_t d = p[0].size();
  for (std::size_t k = 0; k < d; ++k) {
    Rational plo = p[0][k], phi = p[0][k], qlo = q[0][k], qhi = q[0][k];
    for (const auto& x : p) plo = std::min(plo, x[k]), phi = std::max(phi, x[k]);
    for (const auto& x : q) qlo = std::min(qlo, x[k]), qhi = std::max(qhi, x[k]);
    if (phi < qlo || qhi < plo) return false;
  }
  return true;
}

void check_dims(const std::vector<Point>& pts, std::size_t d) {
  for (const auto& p : pts)
    if (p.size() != d) throw PreconditionError("points of differing dimension");
}

}  // namespace

bool in_convex_hull(const Point& x, const std::vector<Point>& points) {
  if (points.empty()) return false;
  const std::size_t d = x.size();
  check_dims(points, d);
  if (!boxes_overlap({x}, points)) return false;
  std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(points.size()));
  std::vector<Rational> b(d + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t k = 0; k < d; ++k) a[k][j] = points[j][k];
    a[d][j] = 1;
  }
  for (std::size_t k = 0; k < d; ++k) b[k] = x[k];
  b[d] = 1;
  return lp_feasible(a, b).has_value();
}

bool hulls_intersect(const std::vector<Point>& p, const std::vector<Point>& q) {
  if (p.empty() || q.empty()) return false;
  const std::size_t d = p[0].size();
  check_dims(p, d);
  check_dims(q, d);
  if (!boxes_overlap(p, q)) return false;
  // Σλ p_i - Σμ q_j = 0, Σλ = 1, Σμ = 1.
  const std::size_t n = p.size() + q.size();
  std::vector<std::vector<Rational>> a(d + 2, std::vector<Rational>(n));
  std::vector<Rational> b(d + 2);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t k = 0; k < d; ++k) a[k][i] = p[i][k];
    a[d][i] = 1;
  }
  for (std::size_t j = 0; j < q.size(); ++j) {
    for (std::size_t k = 0; k < d; ++k) a[k][p.size() + j] = -q[j][k];
    a[d + 1][p.size() + j] = 1;
  }
  b[d] = b[d + 1] = 1;
  return lp_feasible(a, b).has_value();
}

namespace {
int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
}  // namespace

int orient2d(const Point& a, const Point& b, const Point& c) {
  return sign_of((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}

int orient3d(const Point& a, const Point& b, const Point& c, const Point& d) {
  return sign_of(dot(cross(sub(b, a), sub(c, a)), sub(d, a)));
}

Rational dot(const Point& a, const Point& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Point sub(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace cechspan
