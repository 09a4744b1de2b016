#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cechspan/fixtures.hpp"
#include "cechspan/linking.hpp"
#include "cechspan/plateau.hpp"
#include "cechspan/spanning.hpp"
#include "verify_internal.hpp"

namespace cechspan::detail {

namespace {

namespace fx = cechspan::fixtures;
using Classes = std::vector<CohomologyClass>;

constexpr std::size_t kEnumLimit = 1u << 12;

CheckResult pass(std::string instance, std::string detail = {}) {
  return {Verdict::Pass, std::move(instance), std::move(detail)};
}
CheckResult not_met(std::string instance, std::string detail) {
  return {Verdict::HypothesisNotMet, std::move(instance), std::move(detail)};
}
CheckResult fail(std::string instance, std::string detail) {
  return {Verdict::Fail, std::move(instance), std::move(detail)};
}

bool constructed(const LemmaCase& c) { return c.seed % 2 == 0; }
std::size_t pick(const LemmaCase& c, std::size_t n) { return static_cast<std::size_t>((c.seed / 2) % n); }
int uniform(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))); }

CohomologyPresentation reduced(const SimplicialComplex& k, int degree, const CoefficientSpec& ring) {
  return cohomology(k, degree, ring, true);
}

bool small_finite(const CohomologyPresentation& p) {
  auto order = p.order();
  return order && *order <= kEnumLimit;
}

// Every nonzero class of a small finite group; otherwise ±generators and their sum.
Classes nonzero_sample(const CohomologyPresentation& p) {
  Classes out;
  if (small_finite(p)) {
    for (auto& c : enumerate_classes(p, kEnumLimit))
      if (!c.is_zero()) out.push_back(std::move(c));
    return out;
  }
  const auto moduli = p.moduli();
  std::set<CohomologyClass> seen;
  std::vector<Integer> all(p.rank(), 0);
  for (std::size_t i = 0; i < p.rank(); ++i) {
    std::vector<Integer> e(p.rank(), 0);
    e[i] = 1;
    seen.insert(make_class(p, e));
    e[i] = -1;
    seen.insert(make_class(p, e));
    all[i] = 1;
  }
  if (p.rank() > 1) seen.insert(make_class(p, all));
  for (const auto& c : seen)
    if (!c.is_zero()) out.push_back(c);
  return out;
}

Classes coboundary_set(const SimplicialComplex& x, const SimplicialComplex& a, int m, const CoefficientSpec& ring) {
  auto rep = algebraic_coboundary(InclusionPair::make(x, a), m, ring, kEnumLimit);
  if (rep.coboundary) return *rep.coboundary;
  Classes out;
  for (auto& c : nonzero_sample(rep.part_cohomology()))
    if (rep.in_coboundary(c)) out.push_back(std::move(c));
  return out;
}

ClassSet class_set(const SimplicialComplex& a, int m, const CoefficientSpec& ring, Classes elements) {
  return ClassSet::make(reduced(a, m - 1, ring), std::move(elements));
}

bool restriction_zero(const SimplicialComplex& x, const SimplicialComplex& a, int m, const CoefficientSpec& ring) {
  return induced_map(InclusionPair::make(x, a), m - 1, ring, true).is_zero();
}

bool restriction_onto(const SimplicialComplex& x, const SimplicialComplex& a, int m, const CoefficientSpec& ring) {
  auto map = induced_map(InclusionPair::make(x, a), m - 1, ring, true);
  const auto& p = map.codomain;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    std::vector<Integer> e(p.rank(), 0);
    e[i] = 1;
    if (!member_of_image(make_class(p, e), map)) return false;
  }
  return true;
}

SimplicialComplex random_small(Rng& rng, int min_vertices, int max_vertices, int max_dim) {
  const int n = uniform(rng, min_vertices, max_vertices);
  const int d = uniform(rng, 1, max_dim);
  const double density = 0.35 + 0.1 * static_cast<double>(rng.below(5));
  return random_complex_exact(rng, n, d, density);
}

// Random complex on the given vertex ids.
SimplicialComplex random_on(Rng& rng, const std::vector<VertexId>& ids, int max_dim, double density) {
  auto k = random_complex_exact(rng, static_cast<int>(ids.size()), max_dim, density);
  std::map<VertexId, VertexId> rename;
  for (std::size_t i = 0; i < ids.size(); ++i) rename[static_cast<VertexId>(i)] = ids[i];
  return relabel(k, rename);
}

SimplicialComplex random_subcomplex(Rng& rng, const SimplicialComplex& k, double p) {
  std::vector<Simplex> gens;
  for (const auto& s : k.all_simplices())
    if (rng.chance(p)) gens.push_back(s);
  if (gens.empty()) return SimplicialComplex();
  return subcomplex(k, gens);
}

// Facets of k dealt into `groups` random piles; empty piles are dropped.
std::vector<SimplicialComplex> random_split(Rng& rng, const SimplicialComplex& k, int groups) {
  std::vector<std::vector<Simplex>> piles(static_cast<std::size_t>(groups));
  for (const auto& f : k.facets()) piles[rng.below(static_cast<std::uint64_t>(groups))].push_back(f);
  std::vector<SimplicialComplex> out;
  for (const auto& p : piles)
    if (!p.empty()) out.push_back(subcomplex(k, p));
  return out;
}

SimplicialComplex image_of(const SimplicialComplex& k, const std::map<VertexId, VertexId>& f) {
  std::vector<Simplex> gens;
  for (const auto& s : k.facets()) {
    std::vector<VertexId> img;
    for (VertexId v : s) img.push_back(f.at(v));
    gens.push_back(make_simplex(img));
  }
  if (gens.empty()) return SimplicialComplex();
  return SimplicialComplex::from_simplices(gens);
}

std::map<VertexId, VertexId> identity_on(const SimplicialComplex& k) {
  std::map<VertexId, VertexId> f;
  for (VertexId v : k.vertices()) f[v] = v;
  return f;
}

std::map<VertexId, VertexId> restrict_map(const std::map<VertexId, VertexId>& f, const SimplicialComplex& k) {
  std::map<VertexId, VertexId> out;
  for (VertexId v : k.vertices()) out[v] = f.at(v);
  return out;
}

SimplicialComplex cycle(const std::vector<VertexId>& ids) {
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i < ids.size(); ++i) edges.push_back(make_simplex({ids[i], ids[(i + 1) % ids.size()]}));
  return SimplicialComplex::from_simplices(edges);
}

SimplicialComplex path(const std::vector<VertexId>& ids) {
  std::vector<Simplex> edges;
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) edges.push_back(make_simplex({ids[i], ids[i + 1]}));
  return SimplicialComplex::from_simplices(edges);
}

// Annulus between two cycles of equal length listed in matching order.
SimplicialComplex band_between(const std::vector<VertexId>& u, const std::vector<VertexId>& w) {
  std::vector<Simplex> tris;
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    tris.push_back(make_simplex({u[i], u[j], w[j]}));
    tris.push_back(make_simplex({u[i], w[i], w[j]}));
  }
  return SimplicialComplex::from_simplices(tris);
}

std::vector<VertexId> fresh(VertexId& next, int count) {
  std::vector<VertexId> out;
  for (int i = 0; i < count; ++i) out.push_back(next++);
  return out;
}

// Replaces the open star of a top simplex by a cone over its boundary.
SimplicialComplex stellar(const SimplicialComplex& k, const Simplex& s, VertexId v) {
  std::vector<Simplex> faces;
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    Simplex f = s;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
    faces.push_back(f);
  }
  return unite(remove_open(k, {s}), cone(SimplicialComplex::from_simplices(faces), v));
}

SimplicialComplex random_stellar(Rng& rng, SimplicialComplex k, int times) {
  for (int t = 0; t < times; ++t) {
    const auto& tops = k.simplices(k.dimension());
    const Simplex s = tops[rng.below(tops.size())];
    k = stellar(k, s, next_free_id(k));
  }
  return k;
}

// Adds, with probability 0.6, a hollow triangle on fresh vertices to both X and A,
// sometimes tied to X by an edge. Its class lies in K*(X, A) for m = 2.
void plant_cycle(Rng& rng, SimplicialComplex& x, SimplicialComplex& a) {
  if (!rng.chance(0.6)) return;
  VertexId next = next_free_id(x);
  const auto ids = fresh(next, 3);
  const auto loop = cycle(ids);
  x = unite(x, loop);
  a = unite(a, loop);
  if (rng.chance(0.5)) {
    const auto& vs = x.vertices();
    x = unite(x, SimplicialComplex::from_simplices({make_simplex({vs[rng.below(vs.size() - 3)], ids[0]})}));
  }
}

bool disjoint(const SimplicialComplex& a, const SimplicialComplex& b) { return intersect(a, b).empty(); }

// For every sampled h in H̃^{m-1}(total) with nonzero restriction to `part`,
// some target restricts h to a nonzero class. Returns the offending class.
std::optional<std::string> cover_failure(const SimplicialComplex& total, const SimplicialComplex& part,
                                         const std::vector<SimplicialComplex>& targets, int m,
                                         const CoefficientSpec& ring) {
  const auto h = reduced(total, m - 1, ring);
  auto to_part = induced_map(InclusionPair::make(total, part), m - 1, ring, true);
  std::vector<InducedMap> to_targets;
  for (const auto& t : targets) to_targets.push_back(induced_map(InclusionPair::make(total, t), m - 1, ring, true));
  for (const auto& c : nonzero_sample(h)) {
    if (to_part.apply(c).is_zero()) continue;
    bool hit = false;
    for (const auto& t : to_targets) hit = hit || !t.apply(c).is_zero();
    if (!hit) return to_string(c);
  }
  return std::nullopt;
}

const std::vector<std::pair<std::string, SimplicialComplex>>& corpus() {
  static const auto c = fx::corpus();
  return c;
}

const fx::ThreeRings& rings() {
  static const auto r = fx::three_rings();
  return r;
}

std::string m_note(int m) { return "m=" + std::to_string(m); }

// ---------------------------------------------------------------------------

CheckResult check_L1A(const LemmaCase& c, Rng& rng) {
  SimplicialComplex a;
  std::string name = "random";
  if (constructed(c)) {
    const auto& e = corpus()[pick(c, corpus().size())];
    a = e.second;
    name = e.first;
  } else {
    a = random_small(rng, 1, 7, 3);
  }
  const int m = uniform(rng, 1, 3);
  auto rep = algebraic_coboundary(InclusionPair::make(a, a), m, c.ring, kEnumLimit);
  const auto& p = rep.part_cohomology();
  for (std::size_t i = 0; i < p.rank(); ++i) {
    std::vector<Integer> e(p.rank(), 0);
    e[i] = 1;
    if (!rep.in_image(make_class(p, e))) return fail(name, "generator " + std::to_string(i) + " is not in the image");
  }
  if (rep.coboundary && !rep.coboundary->empty()) return fail(name, "K*(A, A) is not empty");
  return pass(name, m_note(m) + " H=" + p.describe());
}

CheckResult check_L2A(const LemmaCase& c, Rng& rng) {
  SimplicialComplex base;
  std::string name = "random";
  if (constructed(c)) {
    const auto& e = corpus()[pick(c, corpus().size())];
    base = e.second;
    name = "cone(" + e.first + ")";
  } else {
    base = random_small(rng, 1, 6, 3);
  }
  const auto x = cone(base, next_free_id(base));
  const auto a = constructed(c) ? base : random_subcomplex(rng, x, 0.5);
  const int m = uniform(rng, 1, 3);
  for (int d = 0; d <= x.dimension(); ++d)
    if (!reduced(x, d, c.ring).is_zero_group()) return fail(name, "cone is not acyclic in degree " + std::to_string(d));
  if (!restriction_zero(x, a, m, c.ring)) return fail(name, "restriction from a contractible X is nonzero");
  return pass(name, m_note(m));
}

CheckResult check_L3A(const LemmaCase& c, Rng& rng) {
  const bool built = constructed(c);
  const int pieces = built ? 2 : uniform(rng, 1, 3);
  const int m = built ? 2 + static_cast<int>(pick(c, 2)) : uniform(rng, 1, 3);
  VertexId next = 0;
  std::vector<SimplicialComplex> xs, bases;
  std::string name = built ? "cones" : "random";
  for (int r = 0; r < pieces; ++r) {
    SimplicialComplex base;
    if (built) {
      const auto& e = corpus()[(pick(c, corpus().size()) + 7 * static_cast<std::size_t>(r)) % corpus().size()];
      base = e.second;
      name += ":" + e.first;
    } else {
      base = random_small(rng, 1, 5, 2);
    }
    base = shift_ids(base, next);
    next = std::max(next, next_free_id(base));
    const VertexId apex = next++;
    xs.push_back(cone(base, apex));
    bases.push_back(base);
  }
  for (std::size_t r = 0; r < xs.size(); ++r)
    for (std::size_t s = r + 1; s < xs.size(); ++s)
      if (!disjoint(xs[r], xs[s])) return not_met(name, "pieces are not disjoint");
  if (m <= 1) return not_met(name, "m = 1");
  const auto x = unite(xs);
  const auto a = built ? unite(bases) : random_subcomplex(rng, x, 0.5);
  if (!restriction_zero(x, a, m, c.ring)) return fail(name, "restriction from a union of cones is nonzero");
  return pass(name, m_note(m));
}

// Merges u into w that keep every simplex of U inside U.
std::vector<std::pair<VertexId, VertexId>> self_merges(const SimplicialComplex& u, const SimplicialComplex& a) {
  std::vector<std::pair<VertexId, VertexId>> out;
  const auto all = u.all_simplices();
  for (VertexId from : u.vertices()) {
    if (a.contains_vertex(from)) continue;
    for (VertexId to : u.vertices()) {
      if (to == from) continue;
      bool ok = true;
      for (const auto& s : all) {
        if (!std::binary_search(s.begin(), s.end(), from)) continue;
        std::vector<VertexId> img;
        for (VertexId v : s) img.push_back(v == from ? to : v);
        if (!u.contains(make_simplex(img))) {
          ok = false;
          break;
        }
      }
      if (ok) out.emplace_back(from, to);
    }
  }
  return out;
}

CheckResult check_L6A(const LemmaCase& c, Rng& rng) {
  if (constructed(c)) {
    SimplicialComplex u, a;
    int m = 2;
    std::string name;
    switch (pick(c, 5)) {
      case 0: {
        a = cycle({0, 1, 2, 3});
        u = unite(cone(a, 4), SimplicialComplex::from_simplices({{0, 1, 5}}));
        name = "disk-with-flap";
        break;
      }
      case 1: {
        a = rings().a;
        u = unite(rings().x1, SimplicialComplex::from_simplices({{0, 1, 20}}));
        name = "rings-x1-with-flap";
        break;
      }
      case 2: {
        auto t = fx::pinched_torus();
        u = t.ambient;
        a = t.torus;
        name = "pinched-torus";
        break;
      }
      case 3: {
        auto b = fx::ball(2);
        u = b.ball;
        a = b.sphere;
        name = "ball2";
        break;
      }
      default: {
        auto b = fx::ball(3);
        u = b.ball;
        a = b.sphere;
        m = 3;
        name = "ball3";
        break;
      }
    }
    if (name.rfind("ball", 0) == 0) {
      const auto& top = a.facets().front();
      u = unite(u, cone(SimplicialComplex::from_simplices({top}), next_free_id(u)));
      name += "-with-flap";
    }
    auto merges = self_merges(u, a);
    if (merges.empty()) return not_met(name, "no vertex merge maps U into itself");
    const auto [from, to] = merges[rng.below(merges.size())];
    auto f = identity_on(u);
    f[from] = to;
    auto L = coboundary_set(u, a, m, c.ring);
    if (L.empty()) return not_met(name, "K*(U, A) is empty");
    auto g = SimplicialMap::make(u, u, f);
    auto res = competitor(g, u, a, m, c.ring, class_set(a, m, c.ring, L));
    if (!res.spans_before || !res.spans_after) return fail(name, "competitor lost spanning");
    return pass(name, "merge " + std::to_string(from) + "->" + std::to_string(to));
  }
  auto x = random_small(rng, 4, 6, 2);
  auto a = random_subcomplex(rng, x, 0.4);
  plant_cycle(rng, x, a);
  const int m = uniform(rng, 1, 2);
  auto L_A = coboundary_set(x, a, m, c.ring);
  if (L_A.empty()) return not_met("random", "K*(X, A) is empty");
  auto f = identity_on(x);
  const int merges = uniform(rng, 1, 2);
  for (int i = 0; i < merges; ++i) {
    const auto& vs = x.vertices();
    const VertexId u = vs[rng.below(vs.size())], w = vs[rng.below(vs.size())];
    const VertexId target = f[w], source = f[u];
    for (auto& [v, img] : f)
      if (img == source) img = target;
  }
  const auto y = image_of(x, f);
  const auto b = image_of(a, f);
  SimplicialMap::make(x, y, f);
  auto g_part = SimplicialMap::make(a, b, restrict_map(f, a));
  ClassSet L_B;
  try {
    L_B = pushforward_L(g_part, class_set(a, m, c.ring, L_A), m, c.ring);
  } catch (const PreconditionError& e) {
    return not_met("random", e.what());
  }
  if (!spans(y, b, m, c.ring, L_B)) return fail("random", "g(X) does not span the pushed-forward class set");
  return pass("random", m_note(m) + " |L_B|=" + std::to_string(L_B.size()));
}

CheckResult check_L7A(const LemmaCase& c, Rng& rng) {
  if (constructed(c)) {
    const auto& r = rings();
    const std::vector<std::tuple<std::string, SimplicialComplex, SimplicialComplex>> growth{
        {"x1+disk-middle", r.x1, r.disk_middle}, {"x1+band-high", r.x1, r.band_high},
        {"x2+disk-middle", r.x2, r.disk_middle}, {"x2+band-low", r.x2, r.band_low},
        {"x3+disk-middle", r.x3, r.disk_middle}, {"x3+disk-top", r.x3, r.disk_top}};
    const auto& [name, x, extra] = growth[pick(c, growth.size())];
    auto L = canonical_L(r.a, 2, c.ring);
    if (!spans(x, r.a, 2, c.ring, L)) return not_met(name, "X does not span L");
    if (!spans(unite(x, extra), r.a, 2, c.ring, L)) return fail(name, "enlarged set lost spanning");
    return pass(name);
  }
  auto x = random_small(rng, 4, 6, 2);
  auto a = random_subcomplex(rng, x, 0.4);
  plant_cycle(rng, x, a);
  const int m = uniform(rng, 1, 2);
  auto elems = coboundary_set(x, a, m, c.ring);
  if (elems.empty()) return not_met("random", "K*(X, A) is empty");
  const auto L = class_set(a, m, c.ring, elems);
  const auto& vs = x.vertices();
  const int extra = uniform(rng, 1, 2);
  auto grown = random_complex_exact(rng, static_cast<int>(vs.size()) + extra, 2, 0.4);
  std::map<VertexId, VertexId> rename;
  VertexId next = next_free_id(x);
  for (VertexId i = 0; i < static_cast<VertexId>(vs.size()) + extra; ++i)
    rename[i] = i < static_cast<VertexId>(vs.size()) ? vs[static_cast<std::size_t>(i)] : next++;
  const auto y = unite(x, relabel(grown, rename));
  if (!spans(x, a, m, c.ring, L)) return fail("random", "X does not span its own coboundary");
  if (!spans(y, a, m, c.ring, L)) return fail("random", "superset lost spanning");
  return pass("random", m_note(m) + " |L|=" + std::to_string(L.size()));
}

struct BallModel {
  SimplicialComplex sphere, ball;
};

BallModel ball_model(int n) {
  if (n >= 2) {
    auto b = fx::ball(n);
    return {b.sphere, b.ball};
  }
  auto sphere = SimplicialComplex::from_simplices({{0}, {1}});
  auto cyl = cylinder(sphere, 0);
  return {sphere, unite(cyl.complex, cone(cyl.top_copy, 4))};
}

CheckResult check_L8A(const LemmaCase& c, Rng& rng) {
  int n;
  std::vector<bool> keep;
  std::string name;
  BallModel model;
  if (constructed(c)) {
    const auto p = pick(c, 6);
    n = 1 + static_cast<int>(p / 2);
    model = ball_model(n);
    keep.assign(model.ball.count(n), true);
    if (p % 2 == 1) keep[(c.seed / 12) % keep.size()] = false;
    name = "ball" + std::to_string(n) + (p % 2 ? "-punctured" : "-full");
  } else {
    n = uniform(rng, 1, 3);
    model = ball_model(n);
    const bool all = rng.chance(0.25);
    for (std::size_t i = 0; i < model.ball.count(n); ++i) keep.push_back(all || rng.chance(0.5));
    name = "random-ball" + std::to_string(n);
  }
  std::vector<Simplex> gens = model.sphere.facets();
  bool full = true;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i]) gens.push_back(model.ball.simplices(n)[i]);
    full = full && keep[i];
  }
  const auto x = subcomplex(model.ball, gens);
  if (full) {
    if (!restriction_zero(x, model.sphere, n, c.ring)) return fail(name, "full ball: K* is not every nonzero class");
  } else if (!restriction_onto(x, model.sphere, n, c.ring)) {
    return fail(name, "ball with a missing cell: K* is not empty");
  }
  return pass(name, full ? "contains the ball" : "misses a cell");
}

CheckResult check_L10A(const LemmaCase& c, Rng& rng) {
  SimplicialComplex y;
  std::string name = "random";
  bool collapse = false;
  int m;
  const bool built = constructed(c);
  if (built) {
    const auto p = pick(c, 3);
    if (p == 2) {
      y = SimplicialComplex::from_simplices({{0}, {1}});
      m = 1;
      name = "two-points";
    } else {
      y = cycle({0, 1, 2, 3});
      collapse = p == 1;
      m = 2;
      name = collapse ? "square-collapsed-top" : "square-annulus";
    }
  } else {
    y = random_small(rng, 2, 5, 2);
    m = uniform(rng, 1, 2);
  }
  const auto cyl = cylinder(y, 0);
  const auto nv = static_cast<VertexId>(y.vertices().size());
  auto f = identity_on(cyl.complex);
  if (collapse) {
    for (VertexId i = 0; i < nv; ++i) f[nv + i] = nv;
  } else if (!built) {
    const int merges = static_cast<int>(rng.below(3));
    for (int i = 0; i < merges; ++i) {
      const VertexId s = f[nv + static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(nv)))];
      const VertexId t = f[nv + static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(nv)))];
      for (auto& [v, img] : f)
        if (img == s) img = t;
    }
  }
  const auto x0 = image_of(cyl.complex, f);
  auto x = x0;
  if (!built && rng.chance(0.5)) x = unite(x0, cone(random_subcomplex(rng, x0, 0.3), next_free_id(x0)));
  const auto a0 = image_of(cyl.bottom_copy, f);
  const auto a1 = image_of(cyl.top_copy, f);
  const auto a = unite(a0, a1);
  if (!(a0 == cyl.bottom_copy)) return not_met(name, "f restricted to the bottom is not a homeomorphism");

  std::map<VertexId, VertexId> h;
  for (VertexId b = 0; b < nv; ++b) h[b] = f.at(nv + b);
  const auto h_map = SimplicialMap::make(a0, a1, h);

  const auto h0 = reduced(a0, m - 1, c.ring);
  Classes l0;
  if (small_finite(h0)) {
    for (auto& cls : enumerate_classes(h0, kEnumLimit))
      if (!cls.is_zero() && rng.chance(0.5)) l0.push_back(cls);
    if (l0.empty() && h0.rank() > 0) l0.push_back(nonzero_sample(h0).front());
  } else {
    l0 = nonzero_sample(h0);
  }
  if (l0.empty()) return not_met(name, "H(A_0) vanishes, so L_0 is empty");
  const auto L0 = ClassSet::make(h0, l0);
  ClassSet L1;
  try {
    L1 = pushforward_L(h_map, L0, m, c.ring);
  } catch (const PreconditionError& e) {
    return not_met(name, e.what());
  }
  if (spans(x, a0, m, c.ring, L0) && !spans(x, a1, m, c.ring, L1))
    return fail(name, "X spans L_0 over A_0 but not L_1 over A_1");

  const auto ha = reduced(a, m - 1, c.ring);
  if (!small_finite(ha)) return pass(name, m_note(m) + " implication only (H(A) not enumerable)");
  auto rep = algebraic_coboundary(InclusionPair::make(x, a), m, c.ring, kEnumLimit);
  auto to0 = induced_map(InclusionPair::make(a, a0), m - 1, c.ring, true);
  auto to1 = induced_map(InclusionPair::make(a, a1), m - 1, c.ring, true);
  for (const auto& cls : enumerate_classes(ha, kEnumLimit)) {
    const bool k = rep.in_coboundary(cls);
    const bool lhs = k || L0.contains(to0.apply(cls));
    const bool rhs = k || L1.contains(to1.apply(cls));
    if (lhs != rhs) return fail(name, "set equality fails at " + to_string(cls));
  }
  return pass(name, m_note(m) + " |L_1|=" + std::to_string(L1.size()));
}

struct Pieces {
  std::string name;
  std::vector<DecompositionPiece> pieces;
  SimplicialComplex a;
  int m = 2;
};

Pieces ring_pieces(std::size_t which) {
  const auto& r = rings();
  const auto& c = r.circles;
  Pieces p;
  p.a = r.a;
  switch (which % 4) {
    case 0:
      p.name = "rings:band-low+disk-top";
      p.pieces = {{r.band_low, unite(c[0], c[1])}, {r.disk_top, c[2]}};
      break;
    case 1:
      p.name = "rings:disk-bottom+band-high";
      p.pieces = {{r.disk_bottom, c[0]}, {r.band_high, unite(c[1], c[2])}};
      break;
    case 2:
      p.name = "rings:band-low+band-high";
      p.pieces = {{r.band_low, unite(c[0], c[1])}, {r.band_high, unite(c[1], c[2])}};
      break;
    default:
      p.name = "rings:three-disks";
      p.pieces = {{r.disk_bottom, c[0]}, {r.disk_middle, c[1]}, {r.disk_top, c[2]}};
      break;
  }
  return p;
}

CheckResult check_L11A(const LemmaCase& c, Rng& rng) {
  Pieces p;
  if (constructed(c)) {
    p = ring_pieces(pick(c, 4));
  } else {
    p.name = "random";
    const auto x = random_small(rng, 4, 6, 2);
    for (const auto& xr : random_split(rng, x, 2)) p.pieces.push_back({xr, random_subcomplex(rng, xr, 0.4)});
    p.a = random_subcomplex(rng, x, 0.4);
    p.m = uniform(rng, 1, 2);
  }
  const int m = p.m;
  std::vector<SimplicialComplex> bs{p.a};
  std::vector<GluePiece> glue;
  for (const auto& piece : p.pieces) {
    bs.push_back(piece.a);
    glue.push_back({piece.x, piece.a, class_set(piece.a, m, c.ring, coboundary_set(piece.x, piece.a, m, c.ring))});
  }
  const auto b = unite(bs);
  const auto hb = reduced(b, m - 1, c.ring);
  const auto ha = reduced(p.a, m - 1, c.ring);
  if (!small_finite(hb) || !small_finite(ha)) return not_met(p.name, "H(B) is not enumerable");
  auto to_a = induced_map(InclusionPair::make(b, p.a), m - 1, c.ring, true);
  std::vector<InducedMap> to_r;
  for (const auto& piece : p.pieces) to_r.push_back(induced_map(InclusionPair::make(b, piece.a), m - 1, c.ring, true));
  std::set<CohomologyClass> bad;
  for (const auto& h : enumerate_classes(hb, kEnumLimit)) {
    bool covered = false;
    for (std::size_t r = 0; r < glue.size() && !covered; ++r) covered = glue[r].L.contains(to_r[r].apply(h));
    if (!covered) bad.insert(to_a.apply(h));
  }
  Classes largest;
  for (auto& x : enumerate_classes(ha, kEnumLimit))
    if (!x.is_zero() && !bad.count(x)) largest.push_back(std::move(x));
  if (largest.empty()) return not_met(p.name, "no nonzero class satisfies the preimage condition");
  const auto L = ClassSet::make(ha, largest);
  auto v = glue_spans(glue, p.a, L, m, c.ring);
  if (!v.hypothesis_met) return fail(p.name, "gluing rejected the largest admissible set: " + v.detail);
  if (!v.spans) return fail(p.name, "union does not span L");
  return pass(p.name, m_note(m) + " |L|=" + std::to_string(L.size()));
}

CheckResult check_L12A(const LemmaCase& c, Rng& rng) {
  Pieces p;
  if (constructed(c)) {
    p = ring_pieces(pick(c, 4));
  } else {
    p.name = "random";
    const auto x = random_small(rng, 4, 6, 2);
    const auto xs = random_split(rng, x, uniform(rng, 2, 3));
    p.a = random_subcomplex(rng, x, 0.3);
    p.m = uniform(rng, 1, 2);
    for (std::size_t r = 0; r < xs.size(); ++r) {
      std::vector<SimplicialComplex> others;
      for (std::size_t s = 0; s < xs.size(); ++s)
        if (s != r) others.push_back(xs[s]);
      auto ar = unite(intersect(xs[r], p.a), random_subcomplex(rng, xs[r], 0.2));
      if (!others.empty()) ar = unite(ar, intersect(xs[r], unite(others)));
      p.pieces.push_back({xs[r], ar});
    }
  }
  const int m = p.m;
  std::vector<SimplicialComplex> bs{p.a};
  for (const auto& piece : p.pieces) bs.push_back(piece.a);
  if (!small_finite(reduced(unite(bs), m - 1, c.ring)) || !small_finite(reduced(p.a, m - 1, c.ring)))
    return not_met(p.name, "H(B) is not enumerable");
  auto rhs = coboundary_decomposition(p.pieces, p.a, m, c.ring);
  std::vector<SimplicialComplex> xs;
  for (const auto& piece : p.pieces) xs.push_back(piece.x);
  auto rep = algebraic_coboundary(InclusionPair::make(unite(xs), p.a), m, c.ring, kEnumLimit);
  if (!rep.coboundary) return not_met(p.name, "K*(X, A) is not enumerable");
  auto lhs = *rep.coboundary;
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  if (lhs != rhs)
    return fail(p.name, "K*(X, A) has " + std::to_string(lhs.size()) + " classes, the decomposition gives " +
                            std::to_string(rhs.size()));
  return pass(p.name, m_note(m) + " |K*|=" + std::to_string(lhs.size()));
}

CheckResult check_L13(const LemmaCase& c, Rng& rng) {
  SimplicialComplex u, x, a, region_c, y;
  std::string name = "random";
  int m = 2;
  if (constructed(c)) {
    const auto& r = rings();
    u = unite(std::vector<SimplicialComplex>{r.band_low, r.band_high, r.disk_bottom, r.disk_middle, r.disk_top});
    a = r.a;
    switch (pick(c, 3)) {
      case 0:
        name = "rings:replace-band-high";
        x = r.x3;
        region_c = r.band_high;
        y = unite(r.disk_middle, r.disk_top);
        break;
      case 1:
        name = "rings:disjoint-region";
        x = r.x1;
        region_c = r.disk_middle;
        y = r.disk_middle;
        break;
      default:
        name = "rings:replace-band-low";
        x = r.x1;
        region_c = r.band_low;
        y = unite(r.disk_bottom, r.disk_middle);
        break;
    }
  } else {
    x = random_small(rng, 4, 6, 2);
    a = random_subcomplex(rng, x, 0.3);
    plant_cycle(rng, x, a);
    m = uniform(rng, 1, 2);
    u = x;
    std::vector<Simplex> gens;
    for (const auto& f : x.facets())
      if (rng.chance(0.4)) gens.push_back(f);
    if (gens.empty()) gens.push_back(x.facets()[rng.below(x.facets().size())]);
    region_c = subcomplex(x, gens);
    const auto frontier = intersect(x, region(u, region_c).frontier);
    y = cone(frontier, next_free_id(x));
  }
  auto elems = coboundary_set(x, a, m, c.ring);
  if (elems.empty()) return not_met(name, "K*(X, A) is empty");
  auto res = surgery(u, x, a, class_set(a, m, c.ring, elems), region_c, y, m, c.ring);
  if (!res.spans) return fail(name, "surgered set does not span L");
  return pass(name, m_note(m));
}

CheckResult check_L13A(const LemmaCase& c, Rng& rng) {
  SimplicialComplex a1, a2, b;
  std::string name = "random";
  int m;
  if (constructed(c)) {
    switch (pick(c, 3)) {
      case 0:
        name = "two-arcs";
        a1 = path({0, 1, 2});
        a2 = path({0, 3, 2});
        b = path({0, 4, 2});
        m = 2;
        break;
      case 1:
        name = "circles-at-a-point";
        a1 = cycle({0, 1, 2});
        a2 = cycle({0, 3, 4});
        b = SimplicialComplex::from_simplices({{0}});
        m = 2;
        break;
      default:
        name = "sphere-halves";
        a1 = cone(cycle({0, 1, 2, 3}), 4);
        a2 = cone(cycle({0, 1, 2, 3}), 5);
        b = cone(cycle({0, 1, 2, 3}), 6);
        m = 3;
        break;
    }
  } else {
    m = uniform(rng, 2, 3);
    const auto a = random_small(rng, 4, 6, m);
    auto parts = random_split(rng, a, 2);
    if (parts.size() < 2) parts.push_back(SimplicialComplex());
    a1 = parts[0];
    a2 = parts[1];
    const auto d = intersect(a1, a2);
    VertexId next = next_free_id(a);
    if (rng.chance(0.5)) {
      b = cone(d, next);
    } else {
      auto ids = d.vertices();
      for (VertexId v : fresh(next, uniform(rng, 1, 2))) ids.push_back(v);
      b = unite(d, random_on(rng, ids, 2, 0.5));
    }
  }
  const auto d = intersect(a1, a2);
  if (!d.is_subcomplex_of(b)) return not_met(name, "B does not contain D");
  if (!induced_map(InclusionPair::make(b, d), m - 2, c.ring, true).is_zero())
    return not_met(name, "restriction H(B) -> H(D) is nonzero");
  const auto a = unite(a1, a2);
  if (auto bad = cover_failure(unite(a, b), a, {unite(a1, b), unite(a2, b)}, m, c.ring))
    return fail(name, "class " + *bad + " restricts nontrivially to A but trivially to both A_i ∪ B");
  return pass(name, m_note(m));
}

CheckResult check_L15A(const LemmaCase& c, Rng& rng) {
  SimplicialComplex a0;
  std::vector<SimplicialComplex> as, bs;
  std::string name = "random";
  int m = 2;
  if (constructed(c)) {
    a0 = cycle({0, 1, 2, 3, 4, 5});
    as = {path({0, 6, 2}), path({3, 7, 5})};
    bs = {path({0, 8, 2}), path({3, 9, 5})};
    name = "hexagon-two-arcs";
    if (pick(c, 2) == 1) {
      as.pop_back();
      bs.pop_back();
      name = "hexagon-one-arc";
    }
  } else {
    m = uniform(rng, 2, 3);
    a0 = random_small(rng, 4, 6, m);
    VertexId next = next_free_id(a0);
    std::vector<VertexId> pool = a0.vertices();
    const int n = uniform(rng, 1, 2);
    for (int r = 0; r < n && !pool.empty(); ++r) {
      std::vector<VertexId> ids;
      const int shared = std::min<int>(uniform(rng, 1, 2), static_cast<int>(pool.size()));
      for (int i = 0; i < shared; ++i) {
        const auto at = rng.below(pool.size());
        ids.push_back(pool[at]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
      }
      for (VertexId v : fresh(next, uniform(rng, 1, 3))) ids.push_back(v);
      const auto ar = random_on(rng, ids, std::min(m, 3), 0.5);
      const auto dr = intersect(a0, ar);
      SimplicialComplex br;
      if (rng.chance(0.5)) {
        br = cone(dr, next++);
      } else {
        auto bids = dr.vertices();
        for (VertexId v : fresh(next, uniform(rng, 1, 2))) bids.push_back(v);
        br = unite(dr, random_on(rng, bids, 2, 0.5));
      }
      as.push_back(ar);
      bs.push_back(br);
    }
  }
  const std::size_t n = as.size();
  for (std::size_t r = 0; r < n; ++r) {
    const auto dr = intersect(a0, as[r]);
    if (!dr.is_subcomplex_of(bs[r])) return not_met(name, "B_r does not contain D_r");
    if (!induced_map(InclusionPair::make(bs[r], dr), m - 2, c.ring, true).is_zero())
      return not_met(name, "restriction H(B_r) -> H(D_r) is nonzero");
    for (std::size_t s = r + 1; s < n; ++s) {
      if (!disjoint(as[r], as[s])) return not_met(name, "A_r and A_s meet");
      if (!disjoint(as[r], bs[s])) return not_met(name, "A_r meets B_s");
    }
  }
  std::vector<SimplicialComplex> a_parts{a0};
  a_parts.insert(a_parts.end(), as.begin(), as.end());
  const auto a = unite(a_parts);
  const auto b_all = unite(bs);
  std::vector<SimplicialComplex> targets{unite(a0, b_all)};
  for (std::size_t r = 0; r < n; ++r) targets.push_back(unite(as[r], bs[r]));
  if (auto bad = cover_failure(unite(a, b_all), a, targets, m, c.ring))
    return fail(name, "class " + *bad + " is missed by every C_r");
  return pass(name, m_note(m) + " N=" + std::to_string(n));
}

CheckResult check_L16A(const LemmaCase& c, Rng& rng) {
  std::vector<SimplicialComplex> as, bs;  // bs[r-1] is B_r
  std::string name = "random";
  int m = 3;
  if (constructed(c)) {
    const auto d1 = cycle({0, 1, 2, 3});
    if (pick(c, 2) == 0) {
      name = "two-spheres";
      as = {unite(cone(d1, 4), cone(d1, 5)), unite(cone(d1, 6), cone(d1, 7))};
      bs = {cone(d1, 8)};
    } else {
      name = "sphere-annulus-sphere";
      const auto cyl = cylinder(d1, 0);
      const auto d2 = cyl.top_copy;
      as = {unite(cone(d1, 20), cone(d1, 21)), cyl.complex, unite(cone(d2, 22), cone(d2, 23))};
      bs = {cone(d1, 24), cone(d2, 25)};
    }
  } else {
    m = rng.chance(0.85) ? 3 : 2;
    VertexId next = 0;
    const int n = uniform(rng, 1, 2);
    std::vector<VertexId> own = fresh(next, uniform(rng, 4, 5));
    as.push_back(random_on(rng, own, 3, 0.6));
    for (int r = 1; r <= n; ++r) {
      std::vector<VertexId> ids;
      const int shared = std::min<int>(uniform(rng, 1, 3), static_cast<int>(own.size()));
      for (int i = 0; i < shared; ++i) {
        const auto at = rng.below(own.size());
        ids.push_back(own[at]);
        own.erase(own.begin() + static_cast<std::ptrdiff_t>(at));
      }
      own = fresh(next, uniform(rng, 2, 4));
      ids.insert(ids.end(), own.begin(), own.end());
      as.push_back(random_on(rng, ids, 3, 0.6));
      const auto d = intersect(as[as.size() - 2], as.back());
      if (rng.chance(0.6)) {
        bs.push_back(cone(d, next++));
      } else {
        auto bids = d.vertices();
        for (VertexId v : fresh(next, uniform(rng, 1, 2))) bids.push_back(v);
        bs.push_back(unite(d, random_on(rng, bids, 2, 0.5)));
      }
    }
  }
  const std::size_t n = bs.size();
  if (m <= 2) return not_met(name, "m must exceed 2");
  for (std::size_t r = 0; r < as.size(); ++r)
    for (std::size_t s = r + 2; s < as.size(); ++s)
      if (!disjoint(as[r], as[s])) return not_met(name, "non-adjacent A_r and A_s meet");
  for (std::size_t r = 1; r <= n; ++r) {
    const auto d = intersect(as[r - 1], as[r]);
    const auto& b = bs[r - 1];
    if (!d.is_subcomplex_of(b)) return not_met(name, "B_r does not contain D_r");
    if (!(intersect(b, as[r - 1]) == d)) return not_met(name, "B_r meets A_{r-1} outside D_r");
    for (std::size_t s = 0; s + 1 < r; ++s)
      if (!disjoint(b, as[s])) return not_met(name, "B_r meets A_s with s < r-1");
    if (!induced_map(InclusionPair::make(b, d), m - 2, c.ring, false).is_zero())
      return not_met(name, "restriction H(B_r) -> H(D_r) is nonzero");
  }
  const auto a = unite(as);
  const auto b_all = n ? unite(bs) : SimplicialComplex();
  const auto total = unite(a, b_all);
  std::vector<SimplicialComplex> targets;
  for (std::size_t r = 0; r < as.size(); ++r) {
    auto cr = as[r];
    if (r >= 1) cr = unite(cr, bs[r - 1]);
    if (r < n) cr = unite(cr, bs[r]);
    targets.push_back(cr);
  }
  auto with_b = targets;
  with_b.push_back(b_all);
  if (auto bad = cover_failure(total, a, with_b, m, c.ring))
    return fail(name, "first inclusion fails at class " + *bad);
  bool b_disjoint = true;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = r + 1; s < n; ++s) b_disjoint = b_disjoint && disjoint(bs[r], bs[s]);
  if (b_disjoint) {
    if (auto bad = cover_failure(total, a, targets, m, c.ring))
      return fail(name, "second inclusion fails at class " + *bad);
  }
  return pass(name, m_note(m) + " N=" + std::to_string(n) + (b_disjoint ? " both inclusions" : " first inclusion"));
}

CheckResult dimension_lemma(const LemmaCase& c, Rng& rng, bool by_measure) {
  SimplicialComplex a;
  std::string name = "random";
  int m;
  if (constructed(c)) {
    const auto& e = corpus()[pick(c, corpus().size())];
    a = e.second;
    name = e.first;
    m = std::max(1, a.dimension() + 2);
  } else {
    a = random_small(rng, 1, 7, 3);
    m = rng.chance(0.5) ? a.dimension() + 2 + static_cast<int>(rng.below(2)) : uniform(rng, 1, 4);
  }
  if (by_measure) {
    if (a.count(m - 1) != 0) return not_met(name, "A has (m-1)-simplices");
  } else if (a.dimension() > m - 2) {
    return not_met(name, "dim A exceeds m - 2");
  }
  if (!cohomology(a, m - 1, c.ring, false).is_zero_group()) return fail(name, "H^{m-1}(A) is nonzero");
  return pass(name, m_note(m));
}

CheckResult check_L17Apre(const LemmaCase& c, Rng& rng) { return dimension_lemma(c, rng, false); }
CheckResult check_L17A(const LemmaCase& c, Rng& rng) { return dimension_lemma(c, rng, true); }

CheckResult check_L21B(const LemmaCase& c, Rng& rng) {
  std::vector<SimplicialComplex> chain;
  SimplicialComplex a;
  std::string name = "random";
  int m = 2;
  if (constructed(c)) {
    const auto& r = rings();
    a = r.a;
    if (pick(c, 2) == 0) {
      name = "rings:x3-with-disks";
      chain = {unite(unite(r.x3, r.disk_middle), r.disk_top), unite(r.x3, r.disk_middle), r.x3};
    } else {
      name = "rings:x1-with-band";
      chain = {unite(unite(r.x1, r.band_high), r.disk_middle), unite(r.x1, r.band_high), r.x1};
    }
  } else {
    auto x = random_small(rng, 4, 6, 2);
    a = random_subcomplex(rng, x, 0.3);
    plant_cycle(rng, x, a);
    m = uniform(rng, 1, 2);
    chain.push_back(x);
    for (int i = 0; i < 2; ++i) {
      std::vector<Simplex> drop;
      for (const auto& f : x.facets())
        if (!a.contains(f) && rng.chance(0.3)) drop.push_back(f);
      x = remove_open(x, drop);
      chain.push_back(x);
    }
  }
  std::set<CohomologyClass> common;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    auto k = coboundary_set(chain[i], a, m, c.ring);
    std::set<CohomologyClass> ks(k.begin(), k.end());
    if (i == 0) {
      common = ks;
    } else {
      std::set<CohomologyClass> keep;
      for (const auto& cls : common)
        if (ks.count(cls)) keep.insert(cls);
      common = std::move(keep);
    }
  }
  if (common.empty()) return not_met(name, "no nonzero class is spanned by every member");
  const auto L = class_set(a, m, c.ring, Classes(common.begin(), common.end()));
  const auto& limit = chain.back();
  if (small_finite(reduced(a, m - 1, c.ring))) {
    std::set<CohomologyClass> joined;
    for (const auto& xi : chain) {
      auto rep = algebraic_coboundary(InclusionPair::make(xi, a), m, c.ring, kEnumLimit);
      joined.insert(rep.image->begin(), rep.image->end());
    }
    auto last = algebraic_coboundary(InclusionPair::make(limit, a), m, c.ring, kEnumLimit);
    if (joined != std::set<CohomologyClass>(last.image->begin(), last.image->end()))
      return fail(name, "union of the images differs from the image of the limit");
  }
  if (!spans(limit, a, m, c.ring, L)) return fail(name, "limit does not span L");
  return pass(name, m_note(m) + " |L|=" + std::to_string(L.size()));
}

CheckResult check_L21C(const LemmaCase& c, Rng& rng) {
  SimplicialComplex x, a, e1, e2;
  std::string name = "random";
  int m = 2;
  if (constructed(c)) {
    const auto& r = rings();
    name = "rings:x1";
    x = r.x1;
    a = r.a;
    e1 = unite(r.disk_middle, r.band_high);
    e2 = r.disk_middle;
  } else {
    x = random_small(rng, 3, 5, 2);
    a = random_subcomplex(rng, x, 0.4);
    plant_cycle(rng, x, a);
    m = uniform(rng, 1, 2);
    e1 = cone(random_subcomplex(rng, x, 0.5), next_free_id(x));
    e2 = random_subcomplex(rng, e1, 0.5);
  }
  auto elems = coboundary_set(x, a, m, c.ring);
  if (elems.empty()) return not_met(name, "K*(X, A) is empty");
  const auto L = class_set(a, m, c.ring, elems);
  const std::vector<SimplicialComplex> sequence{unite(x, e1), unite(x, e2), x, x};
  for (const auto& xi : sequence)
    if (!spans(xi, a, m, c.ring, L)) return not_met(name, "a member of the sequence does not span L");
  if (!spans(sequence.back(), a, m, c.ring, L)) return fail(name, "limit does not span L");

  const auto sd = barycentric_subdivision(x, next_free_id(x));
  const auto a_sd = subdivide_subcomplex(sd, a);
  auto back = SimplicialMap::make(a_sd, a, restrict_map(sd.last_vertex.assignment(), a_sd));
  auto transport = induced_map(back, m - 1, c.ring, true);
  Classes moved;
  for (const auto& cls : L.elements) moved.push_back(transport.apply(cls));
  const auto L_sd = ClassSet::make(transport.codomain, moved);
  if (!spans(sd.complex, a_sd, m, c.ring, L_sd)) return fail(name, "subdivision does not span the transported L");
  auto k0 = algebraic_coboundary(InclusionPair::make(x, a), m, c.ring, kEnumLimit);
  auto k1 = algebraic_coboundary(InclusionPair::make(sd.complex, a_sd), m, c.ring, kEnumLimit);
  if (k0.coboundary && k1.coboundary && k0.coboundary->size() != k1.coboundary->size())
    return fail(name, "subdivision changed |K*|");
  return pass(name, m_note(m) + " |L|=" + std::to_string(L.size()));
}

CheckResult check_Lcore(const LemmaCase& c, Rng& rng) {
  SimplicialComplex x, a;
  ClassSet L;
  std::string name = "random";
  int m = 2;
  if (constructed(c)) {
    const auto& r = rings();
    a = r.a;
    if (pick(c, 2) == 0) {
      name = "rings:x1-with-hairs";
      x = unite(r.x1, SimplicialComplex::from_simplices({{0, 30}, {30, 31}, {5, 31}, {40}}));
    } else {
      name = "rings:x3-with-fin";
      x = unite(r.x3, SimplicialComplex::from_simplices({{4, 32}, {32, 33}, {33, 34}, {34, 9}, {35}}));
    }
    L = canonical_L(a, m, c.ring);
  } else {
    x = random_small(rng, 4, 6, 2);
    VertexId next = next_free_id(x);
    std::vector<Simplex> hairs;
    const auto& vs = x.vertices();
    for (int i = uniform(rng, 1, 3); i > 0; --i) {
      const VertexId v = vs[rng.below(vs.size())];
      hairs.push_back(make_simplex({v, rng.chance(0.5) ? next++ : vs[rng.below(vs.size())]}));
    }
    x = unite(x, SimplicialComplex::from_simplices(hairs));
    a = random_subcomplex(rng, x, 0.3);
    plant_cycle(rng, x, a);
    m = uniform(rng, 1, 2);
    auto elems = coboundary_set(x, a, m, c.ring);
    if (elems.empty()) return not_met(name, "K*(X, A) is empty");
    L = class_set(a, m, c.ring, elems);
  }
  if (!spans(x, a, m, c.ring, L)) return not_met(name, "X does not span L");
  const auto core = simplicial_core(InclusionPair::make(x, a), m);
  if (!spans(core, a, m, c.ring, L)) return fail(name, "core ∪ A does not span L");
  return pass(name, m_note(m) + " removed " + std::to_string(x.size() - core.size()) + " simplices");
}

struct ManifoldInstance {
  std::string name;
  SimplicialComplex x;
};

ManifoldInstance manifold_instance(const LemmaCase& c, Rng& rng) {
  static const auto catalog = fx::manifolds_with_boundary();
  if (constructed(c)) {
    const auto& e = catalog[pick(c, catalog.size())];
    return {e.name, e.x};
  }
  const auto& e = catalog[rng.below(catalog.size())];
  return {e.name + "+stellar", random_stellar(rng, e.x, uniform(rng, 1, 3))};
}

CheckResult check_ThmManifold(const LemmaCase& c, Rng& rng) {
  const auto inst = manifold_instance(c, rng);
  const int m = inst.x.dimension();
  const auto v = is_manifold_with_boundary(inst.x, m, c.ring);
  if (!v.yes) return not_met(inst.name, "not a manifold with boundary: " + v.detail);
  if (!v.orientable) return not_met(inst.name, "not orientable over " + c.ring.name());
  if (!is_closed_orientable_manifold(v.boundary, m - 1, c.ring).yes)
    return not_met(inst.name, "boundary is not a closed orientable manifold");
  const auto L = canonical_L(v.boundary, m, c.ring);
  if (!spans(inst.x, v.boundary, m, c.ring, L)) return fail(inst.name, "manifold does not span L of its boundary");
  return pass(inst.name, m_note(m) + " |L|=" + std::to_string(L.size()));
}

CheckResult check_CorNonorientable(const LemmaCase& c, Rng& rng) {
  const auto Z = CoefficientSpec::integers();
  const auto inst = manifold_instance(c, rng);
  const int m = inst.x.dimension();
  const auto v = is_manifold_with_boundary(inst.x, m, CoefficientSpec::integers_mod(2));
  if (!v.yes) return not_met(inst.name, "not a manifold with boundary: " + v.detail);
  if (!is_closed_orientable_manifold(v.boundary, m - 1, Z).yes)
    return not_met(inst.name, "boundary is not orientable over Z");
  const auto L = canonical_L(v.boundary, m, Z);
  if (!spans(inst.x, v.boundary, m, Z, L)) return fail(inst.name, "manifold does not span L^Z of its boundary");
  return pass(inst.name, m_note(m) + (is_manifold_with_boundary(inst.x, m, Z).orientable ? " orientable" : " nonorientable"));
}

struct Cap {
  std::string name;
  SimplicialComplex x;
  std::vector<VertexId> rim;
};

Cap make_cap(std::size_t which) {
  switch (which % 3) {
    case 0: return {"disk", cone(cycle({0, 1, 2, 3, 4}), 5), {0, 1, 2, 3, 4}};
    case 1: return {"moebius", fx::moebius().band, {0, 2, 4, 1, 3}};
    default: return {"punctured-torus", remove_open(fx::grid_torus(4, 4), {{0, 1, 5}}), {0, 1, 5}};
  }
}

CheckResult check_ThmFlat(const LemmaCase& c, Rng& rng) {
  const auto Z = CoefficientSpec::integers();
  const auto Z2 = CoefficientSpec::integers_mod(2);
  Cap cap;
  int k;
  if (constructed(c)) {
    const auto p = pick(c, 6);
    cap = make_cap(p % 3);
    k = 1 + static_cast<int>(p / 3);
  } else {
    cap = make_cap(rng.below(3));
    cap.x = random_stellar(rng, cap.x, uniform(rng, 0, 2));
    k = uniform(rng, 1, 3);
  }
  const std::string name = cap.name + "-rings" + std::to_string(k);
  VertexId next = next_free_id(cap.x);
  std::vector<std::vector<VertexId>> circles(static_cast<std::size_t>(k) + 1);
  circles[static_cast<std::size_t>(k)] = cap.rim;
  for (int j = k - 1; j >= 0; --j) circles[static_cast<std::size_t>(j)] = fresh(next, static_cast<int>(cap.rim.size()));
  std::vector<SimplicialComplex> bands;  // bands[j] joins circle j+1 to circle j
  for (int j = 0; j < k; ++j)
    bands.push_back(band_between(circles[static_cast<std::size_t>(j) + 1], circles[static_cast<std::size_t>(j)]));
  const auto a = cycle(circles[0]);
  if (!is_closed_orientable_manifold(a, 1, Z).yes) return not_met(name, "A is not a closed orientable manifold");

  std::vector<SimplicialComplex> xs;
  for (int i = 0; i <= k; ++i) {
    SimplicialComplex xi = cap.x;
    for (int j = k - 1; j >= k - i; --j) xi = unite(xi, bands[static_cast<std::size_t>(j)]);
    xs.push_back(xi);
  }
  const auto L = canonical_L(a, 2, Z);
  for (int i = 0; i <= k; ++i) {
    const auto& xi = xs[static_cast<std::size_t>(i)];
    const auto v = is_manifold_with_boundary(xi, 2, Z2);
    if (!v.yes || !(v.boundary == cycle(circles[static_cast<std::size_t>(k - i)])))
      return not_met(name, "X_" + std::to_string(i) + " is not a manifold bounded by its rim");
    if (i > 0 && !xs[static_cast<std::size_t>(i) - 1].is_subcomplex_of(xi)) return not_met(name, "X_i is not increasing");
    if (i == k) break;
    SimplicialComplex bi = bands[0];
    for (int j = 1; j < k - i; ++j) bi = unite(bi, bands[static_cast<std::size_t>(j)]);
    const auto vb = is_manifold_with_boundary(bi, 2, Z2);
    if (!vb.yes || !(vb.boundary == unite(cycle(circles[static_cast<std::size_t>(k - i)]), a)))
      return not_met(name, "B_" + std::to_string(i) + " does not have boundary ∂X_i ∪ A");
    if (!spans(unite(xi, bi), a, 2, Z, L)) return fail(name, "X_" + std::to_string(i) + " ∪ B_i does not span L^Z");
  }
  if (!spans(unite(a, xs.back()), a, 2, Z, L)) return fail(name, "the union does not span L^Z");
  return pass(name);
}

CheckResult check_PropUnion(const LemmaCase& c, Rng& rng) {
  std::vector<std::pair<SimplicialComplex, SimplicialComplex>> parts;  // (X_i, A_i)
  std::string name = "random";
  const int m = 2;
  if (constructed(c)) {
    auto p = ring_pieces(pick(c, 4));
    name = p.name;
    for (const auto& piece : p.pieces) parts.emplace_back(piece.x, piece.a);
  } else {
    VertexId next = 0;
    std::vector<std::vector<VertexId>> loops;
    for (int i = uniform(rng, 2, 3); i > 0; --i) loops.push_back(fresh(next, uniform(rng, 3, 4)));
    const int groups = uniform(rng, 1, 3);
    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(groups));
    for (std::size_t i = 0; i < loops.size(); ++i) {
      const auto g = rng.below(static_cast<std::uint64_t>(groups));
      members[g].push_back(i);
      if (rng.chance(0.3)) {
        const auto h = rng.below(static_cast<std::uint64_t>(groups));
        if (h != g) members[h].push_back(i);
      }
    }
    for (const auto& group : members) {
      if (group.empty()) continue;
      std::vector<SimplicialComplex> ai, xi;
      for (auto i : group) ai.push_back(cycle(loops[i]));
      std::size_t start = 0;
      if (group.size() >= 2 && loops[group[0]].size() == loops[group[1]].size() && rng.chance(0.5)) {
        xi.push_back(band_between(loops[group[0]], loops[group[1]]));
        start = 2;
      }
      for (std::size_t t = start; t < group.size(); ++t)
        if (rng.chance(0.85)) xi.push_back(cone(cycle(loops[group[t]]), next++));
      const auto a_i = unite(ai);
      xi.push_back(a_i);
      parts.emplace_back(unite(xi), a_i);
    }
  }
  std::vector<SimplicialComplex> as, xs;
  for (const auto& [x, a_i] : parts) {
    if (!is_closed_orientable_manifold(a_i, m - 1, c.ring).yes)
      return not_met(name, "A_i is not a closed orientable manifold");
    if (!spans(x, a_i, m, c.ring, canonical_L(a_i, m, c.ring))) return not_met(name, "X_i does not span L(A_i)");
    as.push_back(a_i);
    xs.push_back(x);
  }
  const auto a = unite(as);
  for (const auto& comp : connected_components(a)) {
    bool inside = false;
    for (const auto& a_i : as) inside = inside || comp.is_subcomplex_of(a_i);
    if (!inside) return not_met(name, "a component of A lies in no A_i");
  }
  const auto x = unite(xs);
  if (!spans(x, a, m, c.ring, canonical_L(a, m, c.ring))) return fail(name, "union does not span L(A)");
  return pass(name, std::to_string(parts.size()) + " pieces");
}

CheckResult check_Thm1Discrete(const LemmaCase& c, Rng& rng) {
  SpanningInstance inst;
  std::string name = "random-planar";
  if (constructed(c)) {
    static const auto named = fx::plateau_instances();
    const auto& e = named[pick(c, named.size())];
    name = e.name;
    if (!e.in_hull) return not_met(name, "no spanning set inside the convex hull of A");
    inst = e.instance;
  } else {
    using R = Rational;
    std::map<VertexId, Point> coords{{0, {R(0), R(0), R(0)}}, {1, {R(2), R(0), R(0)}}, {2, {R(2), R(2), R(0)}},
                                     {3, {R(0), R(2), R(0)}}};
    coords[4] = {R(2 + static_cast<int>(rng.below(5)), 4), R(2 + static_cast<int>(rng.below(5)), 4), R(0)};
    coords[5] = {R(2) + R(1 + static_cast<int>(rng.below(3)), 2), R(1 + static_cast<int>(rng.below(3)), 2), R(0)};
    const std::vector<std::vector<Simplex>> groups{{{0, 1, 2}, {0, 2, 3}},
                                                   {{0, 1, 3}, {1, 2, 3}},
                                                   {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}},
                                                   {{1, 2, 5}, {0, 1, 5}}};
    std::vector<Simplex> gens{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    bool any_inside = false;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (!rng.chance(0.7)) continue;
      gens.insert(gens.end(), groups[g].begin(), groups[g].end());
      any_inside = any_inside || g < 3;
    }
    if (!any_inside) gens.insert(gens.end(), groups[2].begin(), groups[2].end());
    std::map<VertexId, Point> used;
    auto ambient0 = SimplicialComplex::from_simplices(gens);
    for (VertexId v : ambient0.vertices()) used[v] = coords[v];
    auto ambient = SimplicialComplex::from_simplices(gens, 3, used);
    auto a = subcomplex(ambient, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    inst = SpanningInstance::make(ambient, a, 2, c.ring, canonical_L(a, 2, c.ring));
    std::vector<Simplex> inside{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    for (const auto& s : ambient.simplices(2))
      if (!std::binary_search(s.begin(), s.end(), VertexId{5})) inside.push_back(s);
    if (!spans(subcomplex(ambient, inside), a, 2, c.ring, inst.L))
      return not_met(name, "no spanning set inside the convex hull of A");
  }
  const auto ex = minimize(inst, Method::Exhaustive, 1);
  if (!ex.feasible) return fail(name, "exhaustive search found no minimizer");
  if (!ex.span_minimal) return fail(name, "minimizer has a removable cell");
  if (!ex.convex_hull || !*ex.convex_hull) return fail(name, "minimizer leaves the convex hull of A");
  const auto bb = minimize(inst, Method::BranchAndBound, 1);
  if (!bb.feasible || !(bb.weight == ex.weight)) return fail(name, "branch and bound disagrees with exhaustive search");
  return pass(name, "weight " + ex.weight.str());
}

CheckResult check_DualityNecessity(const LemmaCase& c, Rng& rng) {
  const auto& r = rings();
  struct Variant {
    std::string name;
    SimplicialComplex x, a;
  };
  const std::vector<Variant> variants{{"x1", r.x1, r.a},
                                      {"x2", r.x2, r.a},
                                      {"x3", r.x3, r.a},
                                      {"x1+disk-middle", unite(r.x1, r.disk_middle), r.a},
                                      {"disk-middle", r.disk_middle, r.circles[1]}};
  const auto& v = constructed(c) ? variants[pick(c, variants.size())] : variants[rng.below(variants.size())];
  std::vector<PolyLoop> loops = r.probe_loops;
  if (!constructed(c)) {
    using R = Rational;
    const std::vector<std::pair<R, R>> corners{{R(1), R(0)}, {R(0), R(1)}, {R(-1), R(0)}, {R(0), R(-1)}};
    for (int level = 0; level < 3; ++level)
      for (std::size_t e = 0; e < 4; ++e) {
        if (!rng.chance(0.3)) continue;
        const auto& p = corners[e];
        const auto& q = corners[(e + 1) % 4];
        const R eps = rng.chance(0.5) ? R(1, 4) : R(1, 8);
        const Point w{(p.first + q.first) / 2, (p.second + q.second) / 2, R(level - 1)};
        const Point u{eps * (p.first + q.first), eps * (p.second + q.second), R(0)};
        const Point up{R(0), R(0), eps};
        loops.push_back(PolyLoop::make({{w[0] + u[0], w[1] + u[1], w[2]},
                                        {w[0], w[1], w[2] + up[2]},
                                        {w[0] - u[0], w[1] - u[1], w[2]},
                                        {w[0], w[1], w[2] - up[2]}}));
      }
  }
  const auto outcomes = duality_necessity_check(v.x, v.a, loops);
  std::size_t meets = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].status == DualityOutcome::Status::Misses)
      return fail(v.name, "loop " + std::to_string(i) + " links A once but misses X");
    if (outcomes[i].status == DualityOutcome::Status::Meets) ++meets;
  }
  if (meets == 0) return not_met(v.name, "no loop links a single component of A once");
  return pass(v.name, std::to_string(meets) + " profiled loops met");
}

}  // namespace

const std::vector<std::pair<std::string, Checker>>& checkers() {
  static const std::vector<std::pair<std::string, Checker>> table{
      {"L1A", check_L1A},
      {"L2A", check_L2A},
      {"L3A", check_L3A},
      {"L6A", check_L6A},
      {"L7A", check_L7A},
      {"L8A", check_L8A},
      {"L10A", check_L10A},
      {"L11A", check_L11A},
      {"L12A", check_L12A},
      {"L13", check_L13},
      {"L13A", check_L13A},
      {"L15A", check_L15A},
      {"L16A", check_L16A},
      {"L17Apre", check_L17Apre},
      {"L17A", check_L17A},
      {"L21B", check_L21B},
      {"L21C", check_L21C},
      {"Lcore", check_Lcore},
      {"ThmManifold", check_ThmManifold},
      {"CorNonorientable", check_CorNonorientable},
      {"ThmFlat", check_ThmFlat},
      {"PropUnion", check_PropUnion},
      {"Thm1Discrete", check_Thm1Discrete},
      {"DualityNecessity", check_DualityNecessity},
  };
  return table;
}

}  // namespace cechspan::detail
