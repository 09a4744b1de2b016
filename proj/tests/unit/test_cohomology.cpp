#include <catch2/catch_amalgamated.hpp>

#include "cechspan/fixtures.hpp"
#include "cechspan/verify.hpp"
#include "oracles.hpp"

using namespace cechspan;
namespace fx = cechspan::fixtures;

namespace {

const auto Z = CoefficientSpec::integers();
const auto Q = CoefficientSpec::rationals();

SimplicialComplex named(const std::string& name) {
  for (const auto& [n, k] : fx::corpus())
    if (n == name) return k;
  throw std::runtime_error("no corpus entry " + name);
}

std::string group(const std::string& name, int degree, const CoefficientSpec& ring, bool reduced = false) {
  return cohomology(named(name), degree, ring, reduced).describe();
}

std::vector<SimplicialComplex> random_batch(std::uint64_t first, int count) {
  std::vector<SimplicialComplex> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(first + static_cast<std::uint64_t>(i));
    out.push_back(random_complex_exact(rng, 3 + static_cast<int>(rng.below(5)), 1 + static_cast<int>(rng.below(3)),
                                       0.3 + 0.1 * static_cast<double>(rng.below(6))));
  }
  return out;
}

}  // namespace

TEST_CASE("known integral cohomology") {
  CHECK(group("point", 0, Z) == "Z");
  CHECK(group("point", 0, Z, true) == "0");
  CHECK(group("two-points", 0, Z, true) == "Z");
  CHECK(group("hollow-triangle", 1, Z) == "Z");
  CHECK(group("figure-eight", 1, Z) == "Z^2");
  CHECK(group("tetrahedron-boundary", 2, Z) == "Z");
  CHECK(group("torus-3x3", 1, Z) == "Z^2");
  CHECK(group("torus-3x3", 2, Z) == "Z");
  CHECK(group("projective-plane", 1, Z) == "0");
  CHECK(group("projective-plane", 2, Z) == "Z/2");
  CHECK(group("projective-plane", 1, CoefficientSpec::integers_mod(2)) == "Z/2");
  CHECK(group("projective-plane", 2, Q) == "0");
  CHECK(group("moebius", 1, Z) == "Z");
  CHECK(group("solid-tetrahedron", 2, Z) == "0");
  CHECK(group("empty", 0, Z) == "0");
}

TEST_CASE("ranks agree with the GF(p) oracle on the corpus and random complexes") {
  auto complexes = random_batch(100, 40);
  for (const auto& [n, k] : fx::corpus()) complexes.push_back(k);
  for (long long p : {2, 3, 5}) {
    const auto ring = CoefficientSpec::integers_mod(p);
    for (const auto& k : complexes)
      for (int d = 0; d <= std::max(0, k.dimension()); ++d)
        for (bool reduced : {false, true}) {
          INFO("p=" << p << " degree " << d << " reduced " << reduced << "\n" << k.fingerprint());
          CHECK(cohomology(k, d, ring, reduced).rank() == oracle::betti(k, d, p, reduced));
        }
  }
}

TEST_CASE("integral torsion matches the universal coefficient count") {
  // dim H^d(K; Z/p) = free_d + #(p | torsion_d) + #(p | torsion_{d+1}).
  for (const auto& [name, k] : fx::corpus()) {
    for (int d = 0; d <= std::max(0, k.dimension()); ++d) {
      const auto h = cohomology(k, d, Z, false);
      const auto next = cohomology(k, d + 1, Z, false);
      for (long long p : {2, 3}) {
        std::size_t expect = h.free_rank;
        for (const auto& t : h.torsion) expect += (t % p == 0);
        for (const auto& t : next.torsion) expect += (t % p == 0);
        INFO(name << " degree " << d << " p=" << p);
        CHECK(oracle::betti(k, d, p, false) == expect);
      }
    }
  }
}

TEST_CASE("coboundary squares to zero") {
  for (const auto& [name, k] : fx::corpus())
    for (bool reduced : {false, true})
      for (int d = reduced ? -1 : 0; d + 1 <= k.dimension(); ++d) {
        INFO(name << " degree " << d);
        const auto a = coboundary_matrix(k, d, Z, reduced);
        const auto b = coboundary_matrix(k, d + 1, Z, reduced);
        if (a.rows() == 0 || b.rows() == 0) continue;
        CHECK((b * a).is_zero());
      }
}

TEST_CASE("induced maps are functorial along inclusion chains") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 50; ++seed) {
    Rng rng(seed);
    const auto x = random_complex_exact(rng, 4 + static_cast<int>(rng.below(3)), 2, 0.6);
    auto pick = [&](const SimplicialComplex& k) {
      std::vector<Simplex> gens;
      for (const auto& f : k.facets())
        if (rng.chance(0.6)) gens.push_back(f);
      return gens.empty() ? SimplicialComplex() : subcomplex(k, gens);
    };
    const auto y = pick(x);
    const auto w = pick(y);
    if (w.empty()) continue;
    ++checked;
    for (const auto& ring : {Z, CoefficientSpec::integers_mod(3)})
      for (int d = 0; d <= 1; ++d) {
        const auto xy = induced_map(InclusionPair::make(x, y), d, ring, true);
        const auto yw = induced_map(InclusionPair::make(y, w), d, ring, true);
        const auto xw = induced_map(InclusionPair::make(x, w), d, ring, true);
        for (std::size_t i = 0; i < xy.domain.rank(); ++i) {
          std::vector<Integer> e(xy.domain.rank(), 0);
          e[i] = 1;
          const auto c = make_class(xy.domain, e);
          CHECK(yw.apply(xy.apply(c)) == xw.apply(c));
        }
      }
  }
}

TEST_CASE("cylinder ends induce equal maps") {
  for (const auto& [name, y] : fx::corpus()) {
    if (y.empty() || y.size() > 60) continue;
    const auto cyl = cylinder(y, 0);
    for (int d = 0; d <= y.dimension(); ++d) {
      INFO(name << " degree " << d);
      const auto bottom = induced_map(cyl.bottom, d, Z, false);
      const auto top = induced_map(cyl.top, d, Z, false);
      CHECK(bottom.matrix == top.matrix);
      CHECK(cohomology(cyl.complex, d, Z, false).describe() == cohomology(y, d, Z, false).describe());
    }
  }
}

TEST_CASE("classes round trip through representatives") {
  const auto torus = named("torus-3x3");
  const auto h = cohomology(torus, 1, Z, false);
  REQUIRE(h.rank() == 2);
  const auto c = make_class(h, {3, -2});
  CHECK(class_of(h, representative(h, c)) == c);
  const auto z3 = cohomology(torus, 1, CoefficientSpec::integers_mod(3), false);
  CHECK(enumerate_classes(z3).size() == 9);
  CHECK(make_class(z3, {4, -1}) == make_class(z3, {1, 2}));
}

TEST_CASE("rational coefficients ignore torsion") {
  const auto rp2 = named("projective-plane");
  for (int d = 0; d <= 2; ++d) CHECK(cohomology(rp2, d, Q, false).rank() == (d == 0 ? 1u : 0u));
}
