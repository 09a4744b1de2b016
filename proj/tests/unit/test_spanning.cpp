#include <catch2/catch_amalgamated.hpp>

#include "cechspan/fixtures.hpp"
#include "cechspan/verify.hpp"
#include "oracles.hpp"

using namespace cechspan;
namespace fx = cechspan::fixtures;

namespace {
const auto Z = CoefficientSpec::integers();
const auto Z2 = CoefficientSpec::integers_mod(2);
const auto Z3 = CoefficientSpec::integers_mod(3);
}  // namespace

TEST_CASE("three rings: every listed set spans the canonical integral class set") {
  const auto r = fx::three_rings();
  const auto L = canonical_L(r.a, 2, Z);
  CHECK(L.size() == 6);
  for (const auto* x : {&r.x1, &r.x2, &r.x3}) CHECK(spans(*x, r.a, 2, Z, L));
  CHECK_FALSE(spans(r.a, r.a, 2, Z, L));
  CHECK_FALSE(spans(unite(r.a, r.band_low), r.a, 2, Z, L));
}

TEST_CASE("a pair with nothing added spans no class") {
  const auto c = SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {0, 2}});
  const auto rep = algebraic_coboundary(InclusionPair::make(c, c), 2, Z3);
  REQUIRE(rep.coboundary);
  CHECK(rep.coboundary->empty());
  CHECK_FALSE(spans(c, c, 2, Z, canonical_L(c, 2, Z)));
}

TEST_CASE("contractible sets span every class") {
  const auto c = SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {0, 2}});
  const auto disk = cone(c, 3);
  const auto h = cohomology(c, 1, Z3, true);
  CHECK(spans(disk, c, 2, Z3, ClassSet::all_nonzero(h)));
  const auto rep = algebraic_coboundary(InclusionPair::make(disk, c), 2, Z3);
  CHECK(rep.coboundary->size() == 2);
}

TEST_CASE("coboundary size agrees with the GF(p) oracle") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Rng rng(seed);
    const auto x = random_complex_exact(rng, 4 + static_cast<int>(rng.below(4)), 2, 0.5);
    std::vector<Simplex> gens;
    for (const auto& s : x.all_simplices())
      if (rng.chance(0.3)) gens.push_back(s);
    if (gens.empty()) continue;
    const auto a = subcomplex(x, gens);
    for (long long p : {2, 3})
      for (int m = 1; m <= 2; ++m) {
        const auto rep = algebraic_coboundary(InclusionPair::make(x, a), m, CoefficientSpec::integers_mod(p));
        REQUIRE(rep.coboundary);
        INFO("seed " << seed << " p=" << p << " m=" << m);
        CHECK(rep.coboundary->size() == oracle::coboundary_size(x, a, m, p));
        ++checked;
      }
  }
  CHECK(checked > 200);
}

TEST_CASE("balls: full ball spans everything, a punctured ball nothing") {
  for (int n : {2, 3}) {
    const auto b = fx::ball(n);
    for (const auto& ring : {Z2, Z3}) {
      const auto full = algebraic_coboundary(InclusionPair::make(b.ball, b.sphere), n, ring);
      CHECK(full.coboundary->size() + 1 == *full.part_cohomology().order());
      const auto shell = algebraic_coboundary(InclusionPair::make(b.shell, b.sphere), n, ring);
      CHECK(shell.coboundary->empty());
    }
  }
}

TEST_CASE("the Möbius band spans its rim through an index-two restriction") {
  const auto m = fx::moebius();
  CHECK(spans(m.band, m.boundary, 2, Z, canonical_L(m.boundary, 2, Z)));
  const auto map = induced_map(InclusionPair::make(m.band, m.boundary), 1, Z, true);
  REQUIRE(map.matrix.rows() == 1);
  REQUIRE(map.matrix.cols() == 1);
  CHECK(abs(map.matrix(0, 0)) == 2);
  // Multiplication by two is zero over Z/2 and invertible over Z/3.
  CHECK(spans(m.band, m.boundary, 2, Z2, canonical_L(m.boundary, 2, Z2)));
  CHECK_FALSE(spans(m.band, m.boundary, 2, Z3, canonical_L(m.boundary, 2, Z3)));
}

TEST_CASE("canonical class sets") {
  const auto r = fx::three_rings();
  CHECK(canonical_L(r.a, 2, Z2).size() == 3);
  CHECK(canonical_L(r.a, 2, Z3).size() == 6);
  const auto eight = SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  CHECK_THROWS_AS(canonical_L(eight, 2, Z), ManifoldPreconditionError);
  const auto pts = SimplicialComplex::from_simplices({{0}, {1}});
  CHECK(canonical_L(pts, 1, Z).size() == 2);
}

TEST_CASE("class sets reject the zero class and foreign presentations") {
  const auto c = SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {0, 2}});
  const auto h = cohomology(c, 1, Z, true);
  CHECK_THROWS_AS(ClassSet::make(h, {zero_class(h)}), PreconditionError);
  const auto other = cohomology(shift_ids(c, 5), 1, Z, true);
  CHECK_THROWS_AS(ClassSet::make(h, {make_class(other, {1})}), PreconditionError);
}

TEST_CASE("competitors keep spanning") {
  const auto a = SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const auto u = unite(cone(a, 4), SimplicialComplex::from_simplices({{0, 1, 5}}));
  auto f = std::map<VertexId, VertexId>{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 4}};
  const auto g = SimplicialMap::make(u, u, f);
  const auto res = competitor(g, u, a, 2, Z, canonical_L(a, 2, Z));
  CHECK(res.spans_before);
  CHECK(res.spans_after);
  CHECK(res.image == cone(a, 4));
  f[0] = 4;
  CHECK_THROWS(competitor(SimplicialMap::make(u, u, f), u, a, 2, Z, canonical_L(a, 2, Z)));
}

TEST_CASE("gluing and decomposition on the three rings") {
  const auto r = fx::three_rings();
  const auto& c = r.circles;
  std::vector<GluePiece> pieces{
      {r.band_low, unite(c[0], c[1]), canonical_L(unite(c[0], c[1]), 2, Z2)},
      {r.disk_top, c[2], canonical_L(c[2], 2, Z2)}};
  const auto v = glue_spans(pieces, r.a, canonical_L(r.a, 2, Z2), 2, Z2);
  CHECK(v.hypothesis_met);
  CHECK(v.spans);

  const auto rhs = coboundary_decomposition({{r.band_low, unite(c[0], c[1])}, {r.disk_top, c[2]}}, r.a, 2, Z2);
  const auto lhs = algebraic_coboundary(InclusionPair::make(r.x1, r.a), 2, Z2);
  CHECK(std::set<CohomologyClass>(rhs.begin(), rhs.end()) ==
        std::set<CohomologyClass>(lhs.coboundary->begin(), lhs.coboundary->end()));
}

TEST_CASE("surgery replaces a band by two disks") {
  const auto r = fx::three_rings();
  const auto u = unite(std::vector<SimplicialComplex>{r.band_low, r.band_high, r.disk_bottom, r.disk_middle, r.disk_top});
  const auto res = surgery(u, r.x3, r.a, canonical_L(r.a, 2, Z2), r.band_high, unite(r.disk_middle, r.disk_top), 2, Z2);
  CHECK(res.spans);
  CHECK(res.complex.is_subcomplex_of(u));
}

TEST_CASE("pushforward refuses infinite preimages") {
  const auto c = SimplicialComplex::from_simplices({{0, 1}, {1, 2}, {0, 2}});
  const auto eight = unite(c, SimplicialComplex::from_simplices({{0, 3}, {3, 4}, {0, 4}}));
  const auto g = SimplicialMap::make(c, eight, {{0, 0}, {1, 1}, {2, 2}});
  for (const auto& ring : {Z, CoefficientSpec::rationals()}) {
    const auto h = cohomology(c, 1, ring, true);
    const auto L = ClassSet::make(h, {make_class(h, {1})});
    CHECK_THROWS_AS(pushforward_L(g, L, 2, ring), PreconditionError);
  }
  const auto h2 = cohomology(c, 1, Z2, true);
  CHECK(pushforward_L(g, ClassSet::make(h2, {make_class(h2, {1})}), 2, Z2).size() == 2);
}

TEST_CASE("span oracle agrees with direct spans") {
  const auto t = fx::pinched_torus();
  SpanOracle oracle(t.ambient, t.torus, 2, Z, t.L);
  const auto& tops = t.ambient.simplices(2);
  std::vector<Simplex> extra;
  for (const auto& s : tops)
    if (!t.torus.contains(s)) extra.push_back(s);
  for (std::size_t mask = 0; mask < 64; ++mask) {
    std::vector<Simplex> gens = t.torus.facets();
    for (std::size_t i = 0; i < extra.size() && i < 6; ++i)
      if (mask >> i & 1) gens.push_back(extra[i]);
    const auto x = subcomplex(t.ambient, gens);
    CHECK(oracle.spans(x) == spans(x, t.torus, 2, Z, t.L));
  }
}
