#include "cechspan/fixtures.hpp"

namespace cechspan::fixtures {

namespace {

std::vector<std::pair<Rational, Rational>> unit_points(int n) {
  using R = Rational;
  if (n == 4) return {{R(1), R(0)}, {R(0), R(1)}, {R(-1), R(0)}, {R(0), R(-1)}};
  if (n == 8)
    return {{R(1), R(0)},         {R(3, 5), R(4, 5)}, {R(0), R(1)},  {R(-3, 5), R(4, 5)},
            {R(-1), R(0)},        {R(-3, 5), R(-4, 5)}, {R(0), R(-1)}, {R(3, 5), R(-4, 5)}};
  throw PreconditionError("circle fixtures support 4 or 8 vertices");
}

std::map<VertexId, Point> circle_coords(VertexId first_id, int n, const Rational& r, const Rational& z) {
  std::map<VertexId, Point> c;
  auto pts = unit_points(n);
  for (int i = 0; i < n; ++i) c[first_id + i] = {r * pts[i].first, r * pts[i].second, z};
  return c;
}

Point pt(const Rational& x, const Rational& y, const Rational& z) { return {x, y, z}; }

PolyLoop diamond(const Point& c, const Point& u, const Point& v) {
  auto add = [](const Point& a, const Point& b, int s) {
    return Point{a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]};
  };
  return PolyLoop::make({add(c, u, 1), add(c, v, 1), add(c, u, -1), add(c, v, -1)});
}

}  // namespace

SimplicialComplex circle(VertexId first_id, int n, const Rational& radius, const Rational& z) {
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_simplex({first_id + i, first_id + (i + 1) % n}));
  return SimplicialComplex::from_simplices(edges, 3, circle_coords(first_id, n, radius, z));
}

SimplicialComplex disk(VertexId first_id, int n, const Rational& radius, const Rational& z, VertexId apex) {
  return cone(circle(first_id, n, radius, z), apex, pt(0, 0, z));
}

SimplicialComplex band(VertexId a_id, VertexId b_id, int n, const Rational& radius, const Rational& za,
                       const Rational& zb) {
  std::vector<Simplex> tris;
  for (int k = 0; k < n; ++k) {
    const VertexId a0 = a_id + k, a1 = a_id + (k + 1) % n, b0 = b_id + k, b1 = b_id + (k + 1) % n;
    tris.push_back(make_simplex({a0, a1, b1}));
    tris.push_back(make_simplex({a0, b0, b1}));
  }
  auto coords = circle_coords(a_id, n, radius, za);
  coords.merge(circle_coords(b_id, n, radius, zb));
  return SimplicialComplex::from_simplices(tris, 3, coords);
}

ThreeRings three_rings() {
  ThreeRings r;
  const Rational one(1);
  for (int level = 0; level < 3; ++level) r.circles.push_back(circle(4 * level, 4, one, Rational(level - 1)));
  r.a = unite(r.circles);
  r.disk_bottom = disk(0, 4, one, Rational(-1), 12);
  r.disk_middle = disk(4, 4, one, Rational(0), 13);
  r.disk_top = disk(8, 4, one, Rational(1), 14);
  r.band_low = band(0, 4, 4, one, Rational(-1), Rational(0));
  r.band_high = band(4, 8, 4, one, Rational(0), Rational(1));
  r.x1 = unite(unite(r.band_low, r.disk_top), r.a);
  r.x2 = unite(unite(r.band_high, r.disk_bottom), r.a);
  r.x3 = unite(unite(r.band_low, r.band_high), r.a);

  const Rational q(1, 4);
  for (int level = 0; level < 3; ++level) {
    const Rational z(level - 1);
    r.probe_loops.push_back(diamond(pt(Rational(1, 2), Rational(1, 2), z), pt(q, q, 0), pt(0, 0, q)));
    r.probe_loops.push_back(diamond(pt(Rational(-1, 2), Rational(-1, 2), z), pt(q, q, 0), pt(0, 0, q)));
  }
  // Far away: zero profile.
  r.probe_loops.push_back(diamond(pt(5, 5, 0), pt(q, q, 0), pt(0, 0, q)));
  // Threads the two lower wires: profile (±1, ±1, 0).
  r.probe_loops.push_back(PolyLoop::make({pt(q, q, Rational(-3, 2)), pt(1, 1, Rational(-3, 2)), pt(1, 1, Rational(1, 2)),
                                          pt(q, q, Rational(1, 2))}));
  return r;
}

SimplicialComplex grid_torus(int rows, int cols, VertexId first_id) {
  if (rows < 3 || cols < 3) throw PreconditionError("grid torus needs at least 3 x 3 vertices");
  auto id = [&](int i, int j) { return first_id + ((i + rows) % rows) * cols + (j + cols) % cols; };
  std::vector<Simplex> tris;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      tris.push_back(make_simplex({id(i, j), id(i, j + 1), id(i + 1, j + 1)}));
      tris.push_back(make_simplex({id(i, j), id(i + 1, j), id(i + 1, j + 1)}));
    }
  return SimplicialComplex::from_simplices(tris);
}

PinchedTorus pinched_torus() {
  PinchedTorus t;
  const Rational R(2);
  const std::vector<Rational> minor{Rational(1), Rational(3, 4), Rational(1, 2), Rational(3, 4)};
  const int dirs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::map<VertexId, Point> coords;
  for (int j = 0; j < 4; ++j) {
    const Rational ex(dirs[j][0]), ey(dirs[j][1]);
    const Rational& r = minor[j];
    coords[4 * j + 0] = pt((R + r) * ex, (R + r) * ey, 0);
    coords[4 * j + 1] = pt(R * ex, R * ey, r);
    coords[4 * j + 2] = pt((R - r) * ex, (R - r) * ey, 0);
    coords[4 * j + 3] = pt(R * ex, R * ey, -r);
  }
  coords[16] = pt(Rational(7, 2), Rational(1, 2), 0);
  coords[17] = pt(Rational(7, 2), Rational(3, 2), 0);

  auto grid = grid_torus(4, 4);
  t.torus = SimplicialComplex::from_simplices(grid.facets(), 3, coords);
  std::vector<Simplex> gens = grid.facets();
  for (int j = 0; j < 4; ++j) {
    const VertexId b = 4 * j;
    t.station_disks.push_back({make_simplex({b, b + 1, b + 2}), make_simplex({b, b + 2, b + 3})});
    gens.insert(gens.end(), t.station_disks.back().begin(), t.station_disks.back().end());
  }
  gens.push_back(make_simplex({0, 4, 16}));
  gens.push_back(make_simplex({4, 16, 17}));
  t.ambient = SimplicialComplex::from_simplices(gens, 3, coords);
  // Keep the boundary's coordinates consistent with the ambient.
  t.torus = subcomplex(t.ambient, grid.facets());

  // Pull back the generator of the 4-cycle under the cross-section angle map.
  auto c4 = SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::map<VertexId, VertexId> angle;
  for (VertexId v = 0; v < 16; ++v) angle[v] = v % 4;
  auto f = SimplicialMap::make(t.torus, c4, angle);
  Cochain on_c4(c4.count(1), 0);
  on_c4[*c4.index_of({0, 3})] = -1;  // the step 3 -> 0 counts +1
  const auto h1 = cohomology(t.torus, 1, CoefficientSpec::integers(), true);
  t.L = ClassSet::make(h1, {class_of(h1, pullback(f, 1, on_c4))});
  t.narrowest_station = 2;
  t.instance = SpanningInstance::make(t.ambient, t.torus, 2, CoefficientSpec::integers(), t.L);
  return t;
}

Moebius moebius() {
  Moebius m;
  m.band = SimplicialComplex::from_simplices({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}});
  m.boundary = SimplicialComplex::from_simplices({{0, 2}, {2, 4}, {1, 4}, {1, 3}, {0, 3}});
  return m;
}

Ball ball(int n) {
  Ball b;
  b.n = n;
  if (n == 2) b.sphere = SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  else if (n == 3) b.sphere = SimplicialComplex::from_simplices({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  else throw PreconditionError("ball fixtures exist for n = 2 and 3");
  auto cyl = cylinder(b.sphere, 0);
  b.shell = cyl.complex;
  b.ball = unite(b.shell, cone(cyl.top_copy, 8));
  return b;
}

std::vector<LoopPair> reference_loop_pairs() {
  auto square = PolyLoop::make({pt(1, 0, 0), pt(0, 1, 0), pt(-1, 0, 0), pt(0, -1, 0)});
  auto partner = PolyLoop::make({pt(2, 0, 0), pt(1, 0, 1), pt(0, 0, 0), pt(1, 0, -1)});
  return {{"hopf", square, partner, 1},
          {"stacked", square, square.translated(pt(0, 0, 1)), 0},
          {"doubled-hopf", square.repeated(2), partner, 2}};
}

std::vector<NamedInstance> plateau_instances() {
  const auto Z = CoefficientSpec::integers();
  const Rational one(1), zero(0);
  std::vector<NamedInstance> out;
  {
    auto t = pinched_torus();
    out.push_back({"pinched-torus", t.instance, true});
  }
  const auto sq = circle(0, 4, one, zero);
  const auto L = canonical_L(sq, 2, Z);
  auto flat = cone(sq, 4, pt(0, 0, 0));
  auto shifted = cone(sq, 5, pt(Rational(1, 4), Rational(1, 4), 0));
  auto tent = cone(sq, 5, pt(0, 0, 1));
  out.push_back({"square-two-cones", SpanningInstance::make(unite(flat, shifted), sq, 2, Z, L), true});
  out.push_back({"square-cone-and-tent", SpanningInstance::make(unite(flat, tent), sq, 2, Z, L), true});
  out.push_back({"square-empty-L", SpanningInstance::make(flat, sq, 2, Z, ClassSet{L.fingerprint, {}}), true});
  out.push_back({"tent-only", SpanningInstance::make(unite(sq, tent), sq, 2, Z, L), false});
  {
    auto annulus = band(0, 4, 4, one, zero, one);
    out.push_back({"annulus-infeasible", SpanningInstance::make(annulus, sq, 2, Z, L), false});
  }
  {
    auto ring = three_rings();
    auto pair = unite(ring.circles[0], ring.circles[1]);
    auto u = unite(unite(ring.band_low, ring.disk_bottom), ring.disk_middle);
    out.push_back({"two-rings", SpanningInstance::make(u, pair, 2, Z, canonical_L(pair, 2, Z)), true});
  }
  return out;
}

std::vector<ManifoldCase> manifolds_with_boundary() {
  std::vector<ManifoldCase> out;
  auto c4 = SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  out.push_back({"disk", cone(c4, 4), c4, true});
  auto cyl = cylinder(c4, 0);
  out.push_back({"annulus", cyl.complex, unite(cyl.bottom_copy, cyl.top_copy), true});
  auto mb = moebius();
  out.push_back({"moebius", mb.band, mb.boundary, false});
  auto torus = grid_torus(4, 4);
  std::vector<Simplex> holes{{0, 1, 5}, {10, 11, 15}};
  auto punctured = remove_open(torus, holes);
  auto boundary = SimplicialComplex::from_simplices({{0, 1}, {1, 5}, {0, 5}, {10, 11}, {11, 15}, {10, 15}});
  out.push_back({"torus-two-holes", punctured, boundary, true});
  auto b3 = ball(3);
  out.push_back({"ball3", b3.ball, b3.sphere, true});
  return out;
}

std::vector<std::pair<std::string, SimplicialComplex>> corpus() {
  std::vector<std::pair<std::string, SimplicialComplex>> out;
  out.emplace_back("empty", SimplicialComplex());
  out.emplace_back("point", SimplicialComplex::from_simplices({{0}}));
  out.emplace_back("two-points", SimplicialComplex::from_simplices({{0}, {1}}));
  out.emplace_back("hollow-triangle", SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {0, 2}}));
  out.emplace_back("filled-triangle", SimplicialComplex::from_simplices({{0, 1, 2}}));
  out.emplace_back("figure-eight", SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}));
  out.emplace_back("tetrahedron-boundary", ball(3).sphere);
  out.emplace_back("octahedron-boundary",
                   SimplicialComplex::from_simplices({{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5},
                                                      {1, 3, 4}, {1, 3, 5}}));
  out.emplace_back("solid-tetrahedron", SimplicialComplex::from_simplices({{0, 1, 2, 3}}));
  out.emplace_back("torus-3x3", grid_torus(3, 3));
  out.emplace_back("torus-4x4", grid_torus(4, 4));
  out.emplace_back("projective-plane",
                   SimplicialComplex::from_simplices({{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {2, 3, 4},
                                                      {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}}));
  out.emplace_back("moebius", moebius().band);
  out.emplace_back("ball2", ball(2).ball);
  out.emplace_back("shell2", ball(2).shell);
  out.emplace_back("ball3", ball(3).ball);
  out.emplace_back("shell3", ball(3).shell);
  auto rings = three_rings();
  out.emplace_back("three-rings", rings.a);
  out.emplace_back("three-rings-x1", rings.x1);
  out.emplace_back("three-rings-x3", rings.x3);
  out.emplace_back("pinched-torus-ambient", pinched_torus().ambient);
  return out;
}

}  // namespace cechspan::fixtures
