#include "cechspan/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

#include "cechspan/cohomology.hpp"

namespace cechspan {

namespace {

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (VertexId v : s) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

struct SimplicialComplex::Data {
  std::size_t ambient = 0;
  std::vector<VertexId> vertices;
  std::vector<std::vector<Simplex>> by_dim;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index;
  std::vector<Simplex> facets;
  std::map<VertexId, Point> coords;
  std::uint64_t fingerprint = 0;
  std::size_t total = 0;
};

namespace {

const std::vector<Simplex>& empty_simplex_list() {
  static const std::vector<Simplex> none;
  return none;
}

void add_faces(const Simplex& s, std::vector<std::set<Simplex>>& levels) {
  const std::size_t n = s.size();
  if (levels.size() < n) levels.resize(n);
  if (!levels[n - 1].insert(s).second) return;
  if (n == 1) return;
  for (std::size_t drop = 0; drop < n; ++drop) {
    Simplex face;
    face.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i)
      if (i != drop) face.push_back(s[i]);
    add_faces(face, levels);
  }
}

bool is_face(const Simplex& small, const Simplex& big) {
  return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

SimplicialComplex::SimplicialComplex() : data_(std::make_shared<Data>()) {}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& generators,
                                                    std::size_t ambient_dimension,
                                                    std::map<VertexId, Point> coordinates) {
  std::vector<std::set<Simplex>> levels;
  for (const auto& g : generators) add_faces(make_simplex(g), levels);

  auto data = std::make_shared<Data>();
  data->ambient = ambient_dimension;
  data->by_dim.resize(levels.size());
  data->index.resize(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    data->by_dim[k].assign(levels[k].begin(), levels[k].end());
    data->index[k].reserve(data->by_dim[k].size());
    for (std::size_t i = 0; i < data->by_dim[k].size(); ++i) data->index[k].emplace(data->by_dim[k][i], i);
    data->total += data->by_dim[k].size();
  }
  if (!data->by_dim.empty())
    for (const auto& v : data->by_dim[0]) data->vertices.push_back(v[0]);
  for (VertexId v : data->vertices)
    if (v < 0) throw PreconditionError("vertex ids must be non-negative");

  // A simplex is maximal when no simplex one dimension up contains it.
  for (std::size_t k = 0; k < data->by_dim.size(); ++k) {
    std::set<Simplex> covered;
    if (k + 1 < data->by_dim.size()) {
      for (const auto& up : data->by_dim[k + 1])
        for (std::size_t drop = 0; drop < up.size(); ++drop) {
          Simplex face;
          for (std::size_t i = 0; i < up.size(); ++i)
            if (i != drop) face.push_back(up[i]);
          covered.insert(std::move(face));
        }
    }
    for (const auto& s : data->by_dim[k])
      if (!covered.count(s)) data->facets.push_back(s);
  }
  std::sort(data->facets.begin(), data->facets.end());

  if (!coordinates.empty()) {
    for (VertexId v : data->vertices) {
      auto it = coordinates.find(v);
      if (it == coordinates.end())
        throw PreconditionError("vertex " + std::to_string(v) + " lacks coordinates");
      if (it->second.size() != ambient_dimension)
        throw PreconditionError("vertex " + std::to_string(v) + " has coordinate arity " +
                                std::to_string(it->second.size()) + ", expected " +
                                std::to_string(ambient_dimension));
      data->coords.emplace(v, it->second);
    }
  }

  std::uint64_t h = fnv1a("scx");
  for (const auto& level : data->by_dim)
    for (const auto& s : level) {
      for (VertexId v : s) h = fnv1a(std::string_view(reinterpret_cast<const char*>(&v), sizeof v), h);
      h = fnv1a("|", h);
    }
  data->fingerprint = h;
  return SimplicialComplex(std::move(data));
}

bool SimplicialComplex::empty() const noexcept { return data_->total == 0; }
int SimplicialComplex::dimension() const noexcept { return static_cast<int>(data_->by_dim.size()) - 1; }
std::size_t SimplicialComplex::ambient_dimension() const noexcept { return data_->ambient; }
const std::vector<VertexId>& SimplicialComplex::vertices() const noexcept { return data_->vertices; }

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  if (k < 0 || k > dimension()) return empty_simplex_list();
  return data_->by_dim[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::size() const noexcept { return data_->total; }

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  out.reserve(size());
  for (const auto& level : data_->by_dim) out.insert(out.end(), level.begin(), level.end());
  return out;
}

const std::vector<Simplex>& SimplicialComplex::facets() const noexcept { return data_->facets; }

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > data_->by_dim.size()) return std::nullopt;
  const auto& idx = data_->index[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_of(s).has_value(); }

bool SimplicialComplex::contains_vertex(VertexId v) const { return contains(Simplex{v}); }

bool SimplicialComplex::has_coordinates() const noexcept { return !data_->coords.empty(); }

const Point& SimplicialComplex::coordinates(VertexId v) const {
  auto it = data_->coords.find(v);
  if (it == data_->coords.end()) throw PreconditionError("no coordinates for vertex " + std::to_string(v));
  return it->second;
}

const std::map<VertexId, Point>& SimplicialComplex::coordinate_map() const noexcept { return data_->coords; }

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& f : facets())
    if (!other.contains(f)) return false;
  return true;
}

std::uint64_t SimplicialComplex::fingerprint() const noexcept { return data_->fingerprint; }

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.data_->by_dim == b.data_->by_dim;
}

InclusionPair InclusionPair::make(SimplicialComplex total, SimplicialComplex part) {
  for (const auto& f : part.facets())
    if (!total.contains(f)) throw PreconditionError("part simplex " + to_string(f) + " is not in the total complex");
  return InclusionPair{std::move(total), std::move(part)};
}

SimplicialMap SimplicialMap::make(SimplicialComplex source, SimplicialComplex target,
                                  std::map<VertexId, VertexId> assignment) {
  for (VertexId v : source.vertices()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw PreconditionError("vertex " + std::to_string(v) + " has no image");
    if (!target.contains_vertex(it->second))
      throw PreconditionError("image of vertex " + std::to_string(v) + " is not a target vertex");
  }
  for (auto it = assignment.begin(); it != assignment.end();) {
    if (!source.contains_vertex(it->first)) it = assignment.erase(it);
    else ++it;
  }
  SimplicialMap map(std::move(source), std::move(target), std::move(assignment));
  for (const auto& f : map.source_.facets()) {
    Simplex img = map.apply(f);
    if (!map.target_.contains(img))
      throw PreconditionError("non-simplicial vertex assignment: " + to_string(f) + " -> " + to_string(img));
  }
  return map;
}

SimplicialMap SimplicialMap::inclusion(const InclusionPair& pair) {
  std::map<VertexId, VertexId> a;
  for (VertexId v : pair.part.vertices()) a.emplace(v, v);
  return SimplicialMap(pair.part, pair.total, std::move(a));
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& k) {
  return inclusion(InclusionPair{k, k});
}

VertexId SimplicialMap::operator()(VertexId v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) throw PreconditionError("vertex " + std::to_string(v) + " outside map source");
  return it->second;
}

Simplex SimplicialMap::apply(const Simplex& s) const {
  std::vector<VertexId> img;
  img.reserve(s.size());
  for (VertexId v : s) img.push_back((*this)(v));
  return make_simplex(std::move(img));
}

SimplicialComplex SimplicialMap::image(const SimplicialComplex& sub) const {
  std::vector<Simplex> gens;
  for (const auto& f : sub.facets()) gens.push_back(apply(f));
  return subcomplex(target_, gens);
}

SimplicialMap SimplicialMap::compose(const SimplicialMap& second, const SimplicialMap& first) {
  std::map<VertexId, VertexId> a;
  for (const auto& [v, w] : first.assignment()) a.emplace(v, second(w));
  return make(first.source(), second.target(), std::move(a));
}

namespace {

std::map<VertexId, Point> merged_coordinates(std::span<const SimplicialComplex> parts, std::size_t& ambient) {
  std::map<VertexId, Point> coords;
  bool all = true;
  ambient = 0;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!p.has_coordinates()) {
      all = false;
      continue;
    }
    ambient = p.ambient_dimension();
    for (const auto& [v, pt] : p.coordinate_map()) {
      auto [it, inserted] = coords.emplace(v, pt);
      if (!inserted && it->second != pt)
        throw PreconditionError("conflicting coordinates for vertex " + std::to_string(v));
    }
  }
  if (!all) coords.clear();
  if (coords.empty()) {
    ambient = 0;
    for (const auto& p : parts) ambient = std::max(ambient, p.ambient_dimension());
  }
  return coords;
}

SimplicialComplex rebuild(std::vector<Simplex> gens, const SimplicialComplex& coordinate_source) {
  std::map<VertexId, Point> coords;
  if (coordinate_source.has_coordinates()) {
    for (const auto& g : gens)
      for (VertexId v : g) coords.emplace(v, coordinate_source.coordinates(v));
  }
  return SimplicialComplex::from_simplices(gens, coordinate_source.ambient_dimension(), std::move(coords));
}

}  // namespace

SimplicialComplex unite(std::span<const SimplicialComplex> parts) {
  std::size_t ambient = 0;
  auto coords = merged_coordinates(parts, ambient);
  std::vector<Simplex> gens;
  for (const auto& p : parts) gens.insert(gens.end(), p.facets().begin(), p.facets().end());
  return SimplicialComplex::from_simplices(gens, ambient, std::move(coords));
}

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
  const SimplicialComplex parts[] = {a, b};
  return unite(std::span<const SimplicialComplex>(parts));
}

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Simplex> gens;
  for (const auto& s : a.all_simplices())
    if (b.contains(s)) gens.push_back(s);
  return rebuild(std::move(gens), a);
}

SimplicialComplex subcomplex(const SimplicialComplex& parent, const std::vector<Simplex>& generators) {
  for (const auto& g : generators)
    if (!parent.contains(g)) throw PreconditionError("simplex " + to_string(g) + " is not in the parent complex");
  return rebuild(generators, parent);
}

SimplicialComplex remove_open(const SimplicialComplex& k, const std::vector<Simplex>& open_simplices) {
  std::set<Simplex> removed(open_simplices.begin(), open_simplices.end());
  std::vector<Simplex> kept;
  for (const auto& s : k.all_simplices())
    if (!removed.count(s)) kept.push_back(s);
  for (const auto& s : kept)
    for (const auto& r : removed)
      if (is_face(r, s)) throw PreconditionError("removed set is not open: " + to_string(s) + " survives above " + to_string(r));
  return rebuild(std::move(kept), k);
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::map<VertexId, VertexId>& rename) {
  auto img = [&](VertexId v) {
    auto it = rename.find(v);
    if (it == rename.end()) throw PreconditionError("relabel: vertex " + std::to_string(v) + " unmapped");
    return it->second;
  };
  std::set<VertexId> targets;
  for (VertexId v : k.vertices())
    if (!targets.insert(img(v)).second) throw PreconditionError("relabel must be injective");
  std::vector<Simplex> gens;
  for (const auto& f : k.facets()) {
    Simplex s;
    for (VertexId v : f) s.push_back(img(v));
    gens.push_back(make_simplex(std::move(s)));
  }
  std::map<VertexId, Point> coords;
  for (const auto& [v, p] : k.coordinate_map()) coords.emplace(img(v), p);
  return SimplicialComplex::from_simplices(gens, k.ambient_dimension(), std::move(coords));
}

SimplicialComplex shift_ids(const SimplicialComplex& k, VertexId offset) {
  std::map<VertexId, VertexId> rename;
  for (VertexId v : k.vertices()) rename.emplace(v, v + offset);
  return relabel(k, rename);
}

VertexId next_free_id(const SimplicialComplex& k) { return k.vertices().empty() ? 0 : k.vertices().back() + 1; }

SimplicialComplex link(const SimplicialComplex& k, VertexId v) {
  std::vector<Simplex> gens;
  for (int d = 1; d <= k.dimension(); ++d)
    for (const auto& s : k.simplices(d)) {
      if (!std::binary_search(s.begin(), s.end(), v)) continue;
      Simplex rest;
      for (VertexId w : s)
        if (w != v) rest.push_back(w);
      gens.push_back(std::move(rest));
    }
  return rebuild(std::move(gens), k);
}

SimplicialComplex skeleton(const SimplicialComplex& k, int d) {
  std::vector<Simplex> gens;
  for (int j = 0; j <= std::min(d, k.dimension()); ++j)
    gens.insert(gens.end(), k.simplices(j).begin(), k.simplices(j).end());
  return rebuild(std::move(gens), k);
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& k) {
  const auto& verts = k.vertices();
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto pos = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (const auto& e : k.simplices(1)) {
    auto a = find(pos(e[0])), b = find(pos(e[1]));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  // Roots are the least vertex of each class, so ordering by root is by least vertex id.
  std::map<std::size_t, std::vector<Simplex>> groups;
  for (const auto& f : k.facets()) groups[find(pos(f[0]))].push_back(f);
  std::vector<SimplicialComplex> out;
  for (auto& [root, gens] : groups) out.push_back(rebuild(std::move(gens), k));
  return out;
}

std::string to_string(ManifoldFailure reason) {
  switch (reason) {
    case ManifoldFailure::NotPure: return "not-pure";
    case ManifoldFailure::NonPseudomanifold: return "non-pseudomanifold";
    case ManifoldFailure::BadLink: return "bad-link";
    case ManifoldFailure::NonOrientable: return "non-orientable";
  }
  return "unknown";
}

namespace {

// Incidence sign of the face obtained by deleting position `drop`.
int face_sign(std::size_t drop) { return (drop % 2 == 0) ? 1 : -1; }

bool pure_of_dimension(const SimplicialComplex& k, int d) {
  for (const auto& f : k.facets())
    if (static_cast<int>(f.size()) - 1 != d) return false;
  return true;
}

bool link_is_sphere(const SimplicialComplex& lk, int sphere_dim, const CoefficientSpec& ring) {
  for (int j = 0; j <= std::max(sphere_dim, lk.dimension()); ++j) {
    auto h = cohomology(lk, j, ring, true);
    std::size_t expected = (j == sphere_dim) ? 1 : 0;
    if (h.free_rank != expected || !h.torsion.empty()) return false;
  }
  return true;
}

struct Cofaces {
  // For each (d-1)-face: list of (d-simplex index, incidence sign).
  std::vector<std::vector<std::pair<std::size_t, int>>> of_face;
};

Cofaces top_cofaces(const SimplicialComplex& k, int d) {
  Cofaces c;
  c.of_face.resize(k.count(d - 1));
  const auto& tops = k.simplices(d);
  for (std::size_t i = 0; i < tops.size(); ++i) {
    const auto& s = tops[i];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != drop) face.push_back(s[j]);
      c.of_face[*k.index_of(face)].emplace_back(i, face_sign(drop));
    }
  }
  return c;
}

// Propagates orientations across faces with two cofaces; seeds each dual
// component at its least simplex. Returns false on inconsistency.
bool propagate_orientation(const SimplicialComplex& k, int d, const Cofaces& cof, std::vector<int>& orientation) {
  const auto& tops = k.simplices(d);
  std::vector<std::vector<std::size_t>> faces_of(tops.size());
  for (std::size_t f = 0; f < cof.of_face.size(); ++f)
    for (const auto& [t, sign] : cof.of_face[f]) faces_of[t].push_back(f);
  orientation.assign(tops.size(), 0);
  for (std::size_t seed = 0; seed < tops.size(); ++seed) {
    if (orientation[seed] != 0) continue;
    orientation[seed] = 1;
    std::deque<std::size_t> queue{seed};
    while (!queue.empty()) {
      auto t = queue.front();
      queue.pop_front();
      for (auto f : faces_of[t]) {
        const auto& pair = cof.of_face[f];
        if (pair.size() != 2) continue;
        auto [a, sa] = pair[0];
        auto [b, sb] = pair[1];
        auto other = (a == t) ? b : a;
        int s_this = (a == t) ? sa : sb;
        int s_other = (a == t) ? sb : sa;
        // Induced boundary orientations must cancel on a shared face.
        int want = -orientation[t] * s_this * s_other;
        if (orientation[other] == 0) {
          orientation[other] = want;
          queue.push_back(other);
        } else if (orientation[other] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

ManifoldVerdict is_closed_orientable_manifold(const SimplicialComplex& k, int d) {
  return is_closed_orientable_manifold(k, d, CoefficientSpec::integers());
}

ManifoldVerdict is_closed_orientable_manifold(const SimplicialComplex& k, int d, const CoefficientSpec& ring) {
  ManifoldVerdict v;
  if (d < 0) throw PreconditionError("manifold dimension must be non-negative");
  if (k.empty()) {
    v.yes = true;
    return v;
  }
  if (k.dimension() != d || !pure_of_dimension(k, d)) {
    v.reason = ManifoldFailure::NotPure;
    v.detail = "facets are not all of dimension " + std::to_string(d);
    return v;
  }
  if (d == 0) {
    v.yes = true;
    v.orientation.assign(k.count(0), 1);
    return v;
  }
  auto cof = top_cofaces(k, d);
  for (std::size_t f = 0; f < cof.of_face.size(); ++f)
    if (cof.of_face[f].size() != 2) {
      v.reason = ManifoldFailure::NonPseudomanifold;
      v.detail = "face " + to_string(k.simplices(d - 1)[f]) + " lies in " + std::to_string(cof.of_face[f].size()) +
                 " top simplices";
      return v;
    }
  for (VertexId x : k.vertices())
    if (!link_is_sphere(link(k, x), d - 1, ring)) {
      v.reason = ManifoldFailure::BadLink;
      v.detail = "link of vertex " + std::to_string(x) + " is not a cohomology sphere";
      return v;
    }
  std::vector<int> orientation;
  if (!propagate_orientation(k, d, cof, orientation)) {
    if (!ring.orientation_free()) {
      v.reason = ManifoldFailure::NonOrientable;
      v.detail = "no consistent orientation of the " + std::to_string(d) + "-simplices";
      return v;
    }
    orientation.assign(k.count(d), 1);
  }
  v.yes = true;
  v.orientation = std::move(orientation);
  return v;
}

BoundaryManifoldVerdict is_manifold_with_boundary(const SimplicialComplex& k, int d, const CoefficientSpec& ring) {
  BoundaryManifoldVerdict v;
  if (d < 1) throw PreconditionError("manifold-with-boundary dimension must be positive");
  if (k.empty() || k.dimension() != d || !pure_of_dimension(k, d)) {
    v.reason = ManifoldFailure::NotPure;
    v.detail = "facets are not all of dimension " + std::to_string(d);
    return v;
  }
  auto cof = top_cofaces(k, d);
  std::vector<Simplex> boundary_faces;
  for (std::size_t f = 0; f < cof.of_face.size(); ++f) {
    auto n = cof.of_face[f].size();
    if (n == 1) boundary_faces.push_back(k.simplices(d - 1)[f]);
    else if (n != 2) {
      v.reason = ManifoldFailure::NonPseudomanifold;
      v.detail = "face " + to_string(k.simplices(d - 1)[f]) + " lies in " + std::to_string(n) + " top simplices";
      return v;
    }
  }
  v.boundary = subcomplex(k, boundary_faces);
  if (!v.boundary.empty()) {
    auto closed = is_closed_orientable_manifold(v.boundary, d - 1, CoefficientSpec::integers_mod(2));
    if (!closed.yes) {
      v.reason = ManifoldFailure::BadLink;
      v.detail = "boundary is not a closed manifold: " + closed.detail;
      return v;
    }
  }
  std::vector<int> orientation;
  v.orientable = ring.orientation_free() || propagate_orientation(k, d, cof, orientation);
  v.yes = true;
  return v;
}

SimplicialComplex cone(const SimplicialComplex& k, VertexId apex, std::optional<Point> apex_coordinates) {
  if (k.contains_vertex(apex)) throw PreconditionError("cone apex " + std::to_string(apex) + " collides with a vertex");
  std::vector<Simplex> gens;
  for (const auto& f : k.facets()) {
    Simplex s = f;
    s.push_back(apex);
    gens.push_back(make_simplex(std::move(s)));
  }
  if (gens.empty()) gens.push_back({apex});
  std::map<VertexId, Point> coords;
  std::size_t ambient = k.ambient_dimension();
  if (apex_coordinates && (k.has_coordinates() || k.empty())) {
    coords = k.coordinate_map();
    ambient = apex_coordinates->size();
    coords.emplace(apex, *apex_coordinates);
  }
  return SimplicialComplex::from_simplices(gens, ambient, std::move(coords));
}

Cylinder cylinder(const SimplicialComplex& y, VertexId first_id) {
  if (y.empty()) throw PreconditionError("cylinder over the empty complex");
  const auto& verts = y.vertices();
  const VertexId n = static_cast<VertexId>(verts.size());
  std::map<VertexId, VertexId> bottom_id, top_id;
  for (VertexId i = 0; i < n; ++i) {
    bottom_id[verts[i]] = first_id + i;
    top_id[verts[i]] = first_id + n + i;
  }
  std::vector<Simplex> gens;
  for (const auto& f : y.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      Simplex s;
      for (std::size_t j = 0; j <= i; ++j) s.push_back(bottom_id[f[j]]);
      for (std::size_t j = i; j < f.size(); ++j) s.push_back(top_id[f[j]]);
      gens.push_back(make_simplex(std::move(s)));
    }
  }
  std::map<VertexId, Point> coords;
  std::size_t ambient = 0;
  if (y.has_coordinates()) {
    ambient = y.ambient_dimension() + 1;
    for (VertexId v : verts) {
      Point p = y.coordinates(v);
      p.push_back(Rational(0));
      coords.emplace(bottom_id[v], p);
      p.back() = Rational(1);
      coords.emplace(top_id[v], p);
    }
  }
  auto complex = SimplicialComplex::from_simplices(gens, ambient, coords);
  auto bottom_copy = relabel(y, bottom_id);
  auto top_copy = relabel(y, top_id);
  bottom_copy = subcomplex(complex, bottom_copy.facets());
  top_copy = subcomplex(complex, top_copy.facets());
  return Cylinder{complex, SimplicialMap::make(y, complex, bottom_id), SimplicialMap::make(y, complex, top_id),
                  bottom_copy, top_copy};
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (VertexId v : b.vertices())
    if (a.contains_vertex(v)) throw PreconditionError("disjoint_union: shared vertex " + std::to_string(v));
  return unite(a, b);
}

Subdivision barycentric_subdivision(const SimplicialComplex& k, VertexId first_id) {
  std::map<Simplex, VertexId> barycenter;
  auto all = k.all_simplices();
  VertexId next = first_id;
  for (const auto& s : all) barycenter.emplace(s, next++);
  // Maximal chains of faces of each facet give the top simplices.
  std::vector<Simplex> gens;
  for (const auto& f : k.facets()) {
    std::vector<VertexId> order(f.begin(), f.end());
    do {
      Simplex chain;
      Simplex prefix;
      for (VertexId v : order) {
        prefix.push_back(v);
        Simplex sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        chain.push_back(barycenter.at(sorted));
      }
      gens.push_back(make_simplex(std::move(chain)));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::map<VertexId, Point> coords;
  if (k.has_coordinates()) {
    for (const auto& s : all) {
      Point c(k.ambient_dimension(), Rational(0));
      for (VertexId v : s) {
        const auto& p = k.coordinates(v);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
      }
      for (auto& x : c) x /= static_cast<long>(s.size());
      coords.emplace(barycenter.at(s), std::move(c));
    }
  }
  auto complex = SimplicialComplex::from_simplices(gens, k.ambient_dimension(), std::move(coords));
  std::map<VertexId, VertexId> last;
  for (const auto& [s, id] : barycenter) last.emplace(id, s.back());
  auto last_vertex = SimplicialMap::make(complex, k, std::move(last));
  return Subdivision{complex, std::move(barycenter), std::move(last_vertex)};
}

SimplicialComplex subdivide_subcomplex(const Subdivision& sd, const SimplicialComplex& sub) {
  std::set<VertexId> inside;
  for (const auto& s : sub.all_simplices()) {
    auto it = sd.barycenter.find(s);
    if (it == sd.barycenter.end()) throw PreconditionError("subcomplex is not part of the subdivided complex");
    inside.insert(it->second);
  }
  std::vector<Simplex> gens;
  for (const auto& s : sd.complex.all_simplices())
    if (std::all_of(s.begin(), s.end(), [&](VertexId v) { return inside.count(v) > 0; })) gens.push_back(s);
  return subcomplex(sd.complex, gens);
}

SimplicialComplex simplicial_core(const InclusionPair& pair, int m) {
  std::vector<Simplex> gens(pair.part.facets().begin(), pair.part.facets().end());
  for (const auto& f : pair.total.facets())
    if (static_cast<int>(f.size()) - 1 >= m) gens.push_back(f);
  return subcomplex(pair.total, gens);
}

}  // namespace cechspan
