#include <catch2/catch_amalgamated.hpp>

#include "cechspan/fixtures.hpp"
#include "cechspan/scx.hpp"
#include "cechspan/verify.hpp"

using namespace cechspan;
namespace fx = cechspan::fixtures;

TEST_CASE("closure adds every face") {
  auto k = SimplicialComplex::from_simplices({{0, 1, 2}});
  CHECK(k.count(0) == 3);
  CHECK(k.count(1) == 3);
  CHECK(k.count(2) == 1);
  CHECK(k.contains({0, 2}));
  CHECK(k.dimension() == 2);
  CHECK(SimplicialComplex().empty());
  CHECK(SimplicialComplex().dimension() == -1);
}

TEST_CASE("simplices are sorted and deduplicated") {
  CHECK(make_simplex({3, 1, 3, 2}) == Simplex{1, 2, 3});
  CHECK_THROWS_AS(make_simplex({}), PreconditionError);
}

TEST_CASE("set operations") {
  auto a = SimplicialComplex::from_simplices({{0, 1, 2}});
  auto b = SimplicialComplex::from_simplices({{1, 2, 3}});
  CHECK(intersect(a, b) == SimplicialComplex::from_simplices({{1, 2}}));
  CHECK(unite(a, b).count(2) == 2);
  CHECK(remove_open(a, {{0, 1, 2}}).count(2) == 0);
  CHECK(remove_open(a, {{0}, {0, 1}, {0, 2}, {0, 1, 2}}) == SimplicialComplex::from_simplices({{1, 2}}));
  CHECK_THROWS_AS(remove_open(a, {{0}}), PreconditionError);
  CHECK(a.is_subcomplex_of(unite(a, b)));
  CHECK_FALSE(unite(a, b).is_subcomplex_of(a));
  CHECK(connected_components(unite(a, shift_ids(a, 10))).size() == 2);
}

TEST_CASE("fingerprint ignores construction order") {
  auto a = SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {0, 2}});
  auto b = SimplicialComplex::from_simplices({{1, 2}, {0, 2}, {0, 1}});
  CHECK(a == b);
  CHECK(a.fingerprint() == b.fingerprint());
}

TEST_CASE("closed manifold recognition") {
  const auto corpus = fx::corpus();
  auto get = [&](const std::string& name) {
    for (const auto& [n, k] : corpus)
      if (n == name) return k;
    FAIL("missing corpus entry " << name);
    return SimplicialComplex();
  };
  CHECK(is_closed_orientable_manifold(get("hollow-triangle"), 1).yes);
  CHECK(is_closed_orientable_manifold(get("tetrahedron-boundary"), 2).yes);
  CHECK(is_closed_orientable_manifold(get("torus-3x3"), 2).yes);
  CHECK_FALSE(is_closed_orientable_manifold(get("figure-eight"), 1).yes);
  const auto rp2 = is_closed_orientable_manifold(get("projective-plane"), 2);
  CHECK_FALSE(rp2.yes);
  CHECK(rp2.reason == ManifoldFailure::NonOrientable);
  CHECK(is_closed_orientable_manifold(get("projective-plane"), 2, CoefficientSpec::integers_mod(2)).yes);
}

TEST_CASE("manifolds with boundary") {
  for (const auto& c : fx::manifolds_with_boundary()) {
    INFO(c.name);
    const int d = c.x.dimension();
    const auto v = is_manifold_with_boundary(c.x, d, CoefficientSpec::integers());
    CHECK(v.yes);
    CHECK(v.orientable == c.orientable);
    CHECK(v.boundary == c.boundary);
  }
}

TEST_CASE("cylinder ends and cone") {
  const auto y = SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {0, 2}});
  const auto cyl = cylinder(y, 0);
  CHECK(cyl.bottom_copy == y);
  CHECK(cyl.top_copy == shift_ids(y, 3));
  CHECK(cyl.complex.count(2) == 6);
  const auto c = cone(y, 9);
  CHECK(c.count(2) == 3);
  CHECK(cone(SimplicialComplex(), 4) == SimplicialComplex::from_simplices({{4}}));
}

TEST_CASE("barycentric subdivision") {
  const auto tri = SimplicialComplex::from_simplices({{0, 1, 2}});
  const auto sd = barycentric_subdivision(tri, 10);
  CHECK(sd.complex.count(2) == 6);
  CHECK(sd.complex.count(0) == 7);
  CHECK(sd.barycenter.size() == 7);
  const auto edge = subdivide_subcomplex(sd, SimplicialComplex::from_simplices({{0, 1}}));
  CHECK(edge.count(1) == 2);
}

TEST_CASE("simplicial core drops low-dimensional debris") {
  const auto tri = SimplicialComplex::from_simplices({{0, 1, 2}, {2, 3}, {4}});
  const auto a = SimplicialComplex::from_simplices({{0}});
  const auto core = simplicial_core(InclusionPair::make(tri, a), 2);
  CHECK(core == SimplicialComplex::from_simplices({{0, 1, 2}}));
}

TEST_CASE("simplicial maps validate simplices") {
  const auto edge = SimplicialComplex::from_simplices({{0, 1}});
  const auto pt = SimplicialComplex::from_simplices({{5}});
  const auto f = SimplicialMap::make(edge, pt, {{0, 5}, {1, 5}});
  CHECK(f.image(edge) == pt);
  const auto two = SimplicialComplex::from_simplices({{5}, {6}});
  CHECK_THROWS(SimplicialMap::make(edge, two, {{0, 5}, {1, 6}}));
}

TEST_CASE("scx round trip keeps coordinates and loops") {
  const auto r = fx::three_rings();
  const auto text = write_scx(r.x1);
  const auto back = parse_complex(text);
  CHECK(back == r.x1);
  CHECK(back.coordinate_map() == r.x1.coordinate_map());
  CHECK(write_scx(back) == text);
  const auto part = parse_subcomplex(write_subcomplex(r.a), r.x1);
  CHECK(part == r.a);

  const auto doc = parse_scx("dim 3\nloop 0 0 0 1 0 0 0 1 0\n");
  REQUIRE(doc.loops.size() == 1);
  CHECK(doc.loops[0].size() == 3);
}

TEST_CASE("scx parse errors carry line numbers") {
  try {
    parse_complex("dim 2\nvertex 0 0 0\nsimplex 0 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_complex("bogus 1\n"), ParseError);
  const auto tri = SimplicialComplex::from_simplices({{0, 1, 2}});
  CHECK_THROWS_AS(parse_subcomplex("simplex 0 7\n", tri), ParseError);
}

TEST_CASE("random complexes") {
  auto full = random_complex(0, 4, 2, 1.0);
  CHECK(full == SimplicialComplex::from_simplices({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  auto bare = random_complex(3, 5, 3, 0.0);
  CHECK(bare.dimension() == 0);
  CHECK(random_complex(11, 7, 3, 0.5) == random_complex(11, 7, 3, 0.5));
  CHECK_THROWS_AS(random_complex(0, 9, 2, 0.5), PreconditionError);
  CHECK_THROWS_AS(random_complex(0, 4, 2, 1.5), PreconditionError);
}
