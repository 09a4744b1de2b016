#pragma once

#include <optional>

#include "cechspan/plateau.hpp"
#include "cechspan/verify.hpp"

namespace testing_support {

/// Square boundary 0-1-2-3 at z = 0 plus 1..3 random interior-ish points; the
/// ambient holds a random selection of triangles (at most `max_cells` outside
/// the boundary). Returns nullopt for degenerate draws.
inline std::optional<cechspan::SpanningInstance> random_instance(std::uint64_t seed, std::size_t max_cells = 12,
                                                                 const cechspan::CoefficientSpec& ring =
                                                                     cechspan::CoefficientSpec::integers()) {
  using namespace cechspan;
  Rng rng(seed);
  std::map<VertexId, Point> coords{{0, {Rational(0), Rational(0), Rational(0)}},
                                   {1, {Rational(4), Rational(0), Rational(0)}},
                                   {2, {Rational(4), Rational(4), Rational(0)}},
                                   {3, {Rational(0), Rational(4), Rational(0)}}};
  const int extra = 1 + static_cast<int>(rng.below(3));
  for (int i = 0; i < extra; ++i)
    coords[4 + i] = {Rational(static_cast<long>(rng.below(9)) - 2), Rational(static_cast<long>(rng.below(9)) - 2),
                     Rational(static_cast<long>(rng.below(5)) - 2, 2)};
  const auto n = static_cast<VertexId>(coords.size());
  std::vector<Simplex> tris;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      for (VertexId c = b + 1; c < n; ++c)
        if (rng.chance(0.55)) tris.push_back({a, b, c});
  while (tris.size() > max_cells) tris.erase(tris.begin() + static_cast<std::ptrdiff_t>(rng.below(tris.size())));
  std::vector<Simplex> gens{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  gens.insert(gens.end(), tris.begin(), tris.end());
  std::map<VertexId, Point> used;
  const auto shape = SimplicialComplex::from_simplices(gens);
  for (VertexId v : shape.vertices()) used[v] = coords[v];
  const auto ambient = SimplicialComplex::from_simplices(gens, 3, used);
  const auto a = subcomplex(ambient, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  try {
    return SpanningInstance::make(ambient, a, 2, ring, canonical_L(a, 2, ring));
  } catch (const PreconditionError&) {
    return std::nullopt;  // a flat triangle has no positive weight
  }
}

}  // namespace testing_support
