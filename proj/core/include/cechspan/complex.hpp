#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cechspan/coefficients.hpp"
#include "cechspan/types.hpp"

namespace cechspan {

/// Finite abstract simplicial complex, optionally embedded in R^n with exact
/// rational vertex coordinates. Immutable; copies share storage.
class SimplicialComplex {
 public:
  /// The empty complex.
  SimplicialComplex();

  /// Closure of `generators` (every face of every generator is added).
  /// When `coordinates` is non-empty it must cover every vertex with tuples of
  /// length `ambient_dimension`.
  static SimplicialComplex from_simplices(const std::vector<Simplex>& generators,
                                          std::size_t ambient_dimension = 0,
                                          std::map<VertexId, Point> coordinates = {});

  bool empty() const noexcept;
  /// -1 for the empty complex.
  int dimension() const noexcept;
  std::size_t ambient_dimension() const noexcept;

  const std::vector<VertexId>& vertices() const noexcept;
  /// k-simplices in canonical (lexicographic) order; empty for k outside [0, dim].
  const std::vector<Simplex>& simplices(int k) const;
  std::size_t count(int k) const { return simplices(k).size(); }
  std::size_t size() const noexcept;
  /// Every simplex, ordered by dimension then lexicographically.
  std::vector<Simplex> all_simplices() const;
  /// Maximal simplices in canonical order.
  const std::vector<Simplex>& facets() const noexcept;

  bool contains(const Simplex& s) const;
  bool contains_vertex(VertexId v) const;
  /// Position of `s` among the simplices of its dimension.
  std::optional<std::size_t> index_of(const Simplex& s) const;

  bool has_coordinates() const noexcept;
  const Point& coordinates(VertexId v) const;
  const std::map<VertexId, Point>& coordinate_map() const noexcept;

  bool is_subcomplex_of(const SimplicialComplex& other) const;
  /// Hash of the simplex set (coordinates excluded).
  std::uint64_t fingerprint() const noexcept;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

  struct Data;

 private:
  explicit SimplicialComplex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// A ⊂ X with the containment validated at construction.
struct InclusionPair {
  SimplicialComplex total;
  SimplicialComplex part;

  static InclusionPair make(SimplicialComplex total, SimplicialComplex part);
};

/// Vertex map that sends every source simplex onto a simplex of the target.
class SimplicialMap {
 public:
  static SimplicialMap make(SimplicialComplex source, SimplicialComplex target,
                            std::map<VertexId, VertexId> assignment);
  static SimplicialMap inclusion(const InclusionPair& pair);
  static SimplicialMap identity(const SimplicialComplex& k);

  const SimplicialComplex& source() const noexcept { return source_; }
  const SimplicialComplex& target() const noexcept { return target_; }
  const std::map<VertexId, VertexId>& assignment() const noexcept { return assignment_; }

  VertexId operator()(VertexId v) const;
  /// Image vertex set of a source simplex (sorted, duplicates collapsed).
  Simplex apply(const Simplex& s) const;
  /// Subcomplex of the target spanned by the images of `sub`'s simplices.
  SimplicialComplex image(const SimplicialComplex& sub) const;
  /// Composition: `second` after `first`.
  static SimplicialMap compose(const SimplicialMap& second, const SimplicialMap& first);

 private:
  SimplicialMap(SimplicialComplex s, SimplicialComplex t, std::map<VertexId, VertexId> a)
      : source_(std::move(s)), target_(std::move(t)), assignment_(std::move(a)) {}
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::map<VertexId, VertexId> assignment_;
};

// Set operations. Coordinates survive only when every vertex of the result has
// them; conflicting coordinates for a shared vertex are an error.
SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex unite(std::span<const SimplicialComplex> parts);
SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);
/// Subcomplex of `parent` generated by `generators` (which must lie in parent).
SimplicialComplex subcomplex(const SimplicialComplex& parent, const std::vector<Simplex>& generators);
/// Simplices of `k` that avoid the given open set, which must be upward closed in `k`.
SimplicialComplex remove_open(const SimplicialComplex& k, const std::vector<Simplex>& open_simplices);
/// Renames vertices; coordinates follow their vertex.
SimplicialComplex relabel(const SimplicialComplex& k, const std::map<VertexId, VertexId>& rename);
SimplicialComplex shift_ids(const SimplicialComplex& k, VertexId offset);
/// Largest vertex id plus one (0 for the empty complex).
VertexId next_free_id(const SimplicialComplex& k);
/// Link of a vertex.
SimplicialComplex link(const SimplicialComplex& k, VertexId v);
/// Simplices of dimension <= d.
SimplicialComplex skeleton(const SimplicialComplex& k, int d);

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& k);

enum class ManifoldFailure { NotPure, NonPseudomanifold, BadLink, NonOrientable };
std::string to_string(ManifoldFailure reason);

struct ManifoldVerdict {
  bool yes = false;
  std::optional<ManifoldFailure> reason;
  std::string detail;
  /// ±1 per d-simplex in canonical order (all +1 when the ring ignores orientation).
  std::vector<int> orientation;
};

/// Pure of dimension d, every (d-1)-face in exactly two d-simplices, vertex
/// links with the reduced cohomology of S^{d-1}, and globally orientable.
ManifoldVerdict is_closed_orientable_manifold(const SimplicialComplex& k, int d);
/// Same check with orientability and link cohomology taken over `ring`
/// (over Z/2 a closed pseudomanifold with sphere-like links suffices).
ManifoldVerdict is_closed_orientable_manifold(const SimplicialComplex& k, int d,
                                              const CoefficientSpec& ring);

struct BoundaryManifoldVerdict {
  bool yes = false;
  std::optional<ManifoldFailure> reason;
  std::string detail;
  bool orientable = false;
  SimplicialComplex boundary;
};

/// Compact d-manifold-with-boundary proxy: pure, each (d-1)-face in one or two
/// d-simplices, and the boundary (faces in exactly one) a closed (d-1)-manifold.
/// `orientable` reports orientability over `ring`.
BoundaryManifoldVerdict is_manifold_with_boundary(const SimplicialComplex& k, int d,
                                                  const CoefficientSpec& ring);

/// Cone with a fresh apex; the cone over the empty complex is the apex alone.
SimplicialComplex cone(const SimplicialComplex& k, VertexId apex,
                       std::optional<Point> apex_coordinates = std::nullopt);

struct Cylinder {
  SimplicialComplex complex;
  SimplicialMap bottom;  // Y -> {0} x Y
  SimplicialMap top;     // Y -> {1} x Y
  SimplicialComplex bottom_copy;
  SimplicialComplex top_copy;
};

/// Prism triangulation of I x Y. The vertex of rank i in Y becomes
/// `first_id + i` on the bottom and `first_id + |V| + i` on the top.
Cylinder cylinder(const SimplicialComplex& y, VertexId first_id = 0);

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

struct Subdivision {
  SimplicialComplex complex;
  /// Vertex of the subdivision assigned to each simplex of the original.
  std::map<Simplex, VertexId> barycenter;
  /// Simplicial approximation of the identity: barycenter of σ -> largest vertex of σ.
  SimplicialMap last_vertex;
};

Subdivision barycentric_subdivision(const SimplicialComplex& k, VertexId first_id = 0);
/// Image of a subcomplex of the original inside a subdivision.
SimplicialComplex subdivide_subcomplex(const Subdivision& sd, const SimplicialComplex& sub);

/// Union of every closed simplex of dimension >= m together with the part.
SimplicialComplex simplicial_core(const InclusionPair& pair, int m);

}  // namespace cechspan
