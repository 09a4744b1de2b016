#pragma once

#include <string>
#include <vector>

#include "cechspan/linking.hpp"
#include "cechspan/plateau.hpp"
#include "cechspan/spanning.hpp"

namespace cechspan::fixtures {

/// Regular polygon with n = 4 or 8 vertices on the circle of the given radius
/// at height z (exact rational points), ids first_id .. first_id + n - 1.
SimplicialComplex circle(VertexId first_id, int n, const Rational& radius, const Rational& z);
/// Cone over circle(first_id, n, radius, z) with the given apex at its center.
SimplicialComplex disk(VertexId first_id, int n, const Rational& radius, const Rational& z, VertexId apex);
/// Band between circle(a_id, n, ...) and circle(b_id, n, ...).
SimplicialComplex band(VertexId a_id, VertexId b_id, int n, const Rational& radius, const Rational& za,
                       const Rational& zb);

/// Three stacked unit circles at z = -1, 0, 1 and the three spanning sets:
/// X1 = band(-1, 0) ∪ disk(1), X2 = band(0, 1) ∪ disk(-1), X3 = band(-1, 1).
struct ThreeRings {
  SimplicialComplex a;
  std::vector<SimplicialComplex> circles;  // bottom to top
  SimplicialComplex x1, x2, x3;
  SimplicialComplex disk_bottom, disk_middle, disk_top, band_low, band_high;
  /// Small loops around each circle's wire plus loops with a zero profile.
  std::vector<PolyLoop> probe_loops;
};
ThreeRings three_rings();

/// Polyhedral torus with square cross-sections at four stations, minor radii
/// 1, 3/4, 1/2, 3/4 around a major radius 2, plus a two-triangle disk in
/// each station and a two-triangle fin that spans nothing.
struct PinchedTorus {
  SimplicialComplex torus;
  SimplicialComplex ambient;
  /// Class evaluating to 1 on each cross-section circle and 0 on the outer longitude.
  ClassSet L;
  std::vector<std::vector<Simplex>> station_disks;
  std::size_t narrowest_station = 2;
  SpanningInstance instance;
};
PinchedTorus pinched_torus();

/// Five-triangle Möbius band with boundary circle 0-2-4-1-3-0.
struct Moebius {
  SimplicialComplex band;
  SimplicialComplex boundary;
};
Moebius moebius();

/// Triangulated n-ball (n = 2 or 3) as a collar over its boundary sphere plus a
/// cone; `shell` is the collar alone (the ball with an open cell removed).
struct Ball {
  int n = 2;
  SimplicialComplex sphere;
  SimplicialComplex ball;
  SimplicialComplex shell;
};
Ball ball(int n);

/// Hopf link, two stacked circles, and the doubled Hopf component.
struct LoopPair {
  std::string name;
  PolyLoop a, b;
  long expected_abs;
};
std::vector<LoopPair> reference_loop_pairs();

/// Named minimization instances; `in_hull` marks those whose ambient admits a
/// spanning set inside the convex hull of the boundary.
struct NamedInstance {
  std::string name;
  SpanningInstance instance;
  bool in_hull = true;
};
std::vector<NamedInstance> plateau_instances();

/// A closed surface-with-boundary catalog: disk, annulus, Möbius band, torus with two holes.
struct ManifoldCase {
  std::string name;
  SimplicialComplex x;
  SimplicialComplex boundary;
  bool orientable = true;
};
std::vector<ManifoldCase> manifolds_with_boundary();

/// Named complexes used for engine property checks.
std::vector<std::pair<std::string, SimplicialComplex>> corpus();

/// Grid torus with `rows` x `cols` vertices (both >= 3).
SimplicialComplex grid_torus(int rows, int cols, VertexId first_id = 0);

}  // namespace cechspan::fixtures
