#pragma once

#include <optional>
#include <vector>

#include "cechspan/types.hpp"

namespace cechspan {

/// Exact feasibility of { x >= 0 : A x = b } by phase-one simplex with Bland's rule.
/// Returns a feasible point when one exists.
std::optional<std::vector<Rational>> lp_feasible(const std::vector<std::vector<Rational>>& a,
                                                 const std::vector<Rational>& b);

/// x in conv(points).
bool in_convex_hull(const Point& x, const std::vector<Point>& points);

/// conv(p) ∩ conv(q) ≠ ∅ for small point sets (segments, triangles, ...).
bool hulls_intersect(const std::vector<Point>& p, const std::vector<Point>& q);

/// Sign of det[b-a, c-a] in the plane.
int orient2d(const Point& a, const Point& b, const Point& c);
/// Sign of det[b-a, c-a, d-a].
int orient3d(const Point& a, const Point& b, const Point& c, const Point& d);

Rational dot(const Point& a, const Point& b);
Point cross(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);

}  // namespace cechspan
