#include "cechspan/spanning.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cechspan {

namespace {

Integer ring_modulus(const CoefficientSpec& ring) {
  return ring.is_finite() ? Integer(ring.modulus()) : Integer(0);
}

std::string piece_name(std::size_t r) { return "piece " + std::to_string(r + 1); }

bool contains_all(const SimplicialComplex& big, const SimplicialComplex& small) { return small.is_subcomplex_of(big); }

// Closure of a finite subgroup generated by `gens`.
std::vector<CohomologyClass> subgroup_closure(const CohomologyPresentation& p, const std::vector<CohomologyClass>& gens,
                                              std::size_t limit) {
  std::set<CohomologyClass> seen{zero_class(p)};
  std::vector<CohomologyClass> frontier{zero_class(p)};
  while (!frontier.empty()) {
    std::vector<CohomologyClass> next;
    for (const auto& c : frontier)
      for (const auto& g : gens) {
        std::vector<Integer> sum(c.coordinates.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = c.coordinates[i] + g.coordinates[i];
        auto s = make_class(p, std::move(sum));
        if (seen.insert(s).second) {
          if (seen.size() > limit) throw PreconditionError("subgroup exceeds the enumeration limit");
          next.push_back(std::move(s));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

// Row reduction over Z/p of [M | B]; returns solvability per column of B.
std::vector<bool> solvable_mod_prime(const IntMatrix& m, const std::vector<std::vector<Integer>>& rhs, std::int64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols(), k = rhs.size();
  auto norm = [p](const Integer& x) { return static_cast<std::int64_t>(reduce_mod(x, Integer(p))); };
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols + k));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = norm(m(i, j));
    for (std::size_t j = 0; j < k; ++j) a[i][cols + j] = norm(rhs[j][i]);
  }
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    __extension__ typedef __int128 i128;
    for (; e; e >>= 1, x = static_cast<std::int64_t>(static_cast<i128>(x) * x % p))
      if (e & 1) r = static_cast<std::int64_t>(static_cast<i128>(r) * x % p);
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    const std::int64_t iv = inv(a[r][c]);
    for (auto& x : a[r]) x = x * iv % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::int64_t f = a[i][c];
      for (std::size_t j = c; j < cols + k; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  std::vector<bool> out(k, true);
  for (std::size_t i = r; i < rows; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (a[i][cols + j] != 0) out[j] = false;
  return out;
}

}  // namespace

std::vector<bool> solvable(const IntMatrix& m, const std::vector<std::vector<Integer>>& rhs, const CoefficientSpec& ring) {
  for (const auto& b : rhs)
    if (b.size() != m.rows()) throw PreconditionError("right-hand side has the wrong length");
  if (ring.is_prime_field() && ring.modulus() < (std::int64_t(1) << 31)) return solvable_mod_prime(m, rhs, ring.modulus());
  SmithOptions opts;
  opts.track_v = false;
  opts.track_inverses = false;
  SmithForm f = smith_normal_form(m, opts);
  const Integer q = ring_modulus(ring);
  const bool rational = ring.kind() == CoefficientSpec::Kind::Rationals;
  std::vector<bool> out;
  for (const auto& b : rhs) {
    auto y = multiply(f.u, b);
    bool ok = true;
    for (std::size_t i = 0; i < y.size() && ok; ++i) {
      Integer yi = reduce_mod(y[i], q);
      if (i >= f.rank) ok = yi == 0;
      else if (rational) ok = true;
      else if (q != 0) ok = yi % gcd(Integer(f.d(i, i)), q) == 0;
      else ok = yi % f.d(i, i) == 0;
    }
    out.push_back(ok);
  }
  return out;
}

ClassSet ClassSet::make(const CohomologyPresentation& p, std::vector<CohomologyClass> elements) {
  ClassSet out;
  out.fingerprint = p.fingerprint;
  for (auto& e : elements) {
    if (e.fingerprint != p.fingerprint) throw PreconditionError("class set element from a different presentation");
    auto c = make_class(p, e.coordinates);
    if (c.is_zero()) throw PreconditionError("class sets may not contain the zero class");
    out.elements.push_back(std::move(c));
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  return out;
}

ClassSet ClassSet::all_nonzero(const CohomologyPresentation& p, std::size_t limit) {
  auto all = enumerate_classes(p, limit);
  std::erase_if(all, [](const CohomologyClass& c) { return c.is_zero(); });
  return make(p, std::move(all));
}

bool ClassSet::contains(const CohomologyClass& c) const {
  return std::binary_search(elements.begin(), elements.end(), c);
}

bool CoboundaryReport::in_image(const CohomologyClass& c) const {
  if (image) return std::binary_search(image->begin(), image->end(), c);
  return member_of_image(c, restriction).has_value();
}

CoboundaryReport algebraic_coboundary(const InclusionPair& pair, int m, const CoefficientSpec& ring,
                                      std::size_t enumeration_limit) {
  if (m < 1) throw PreconditionError("m must be at least 1");
  CoboundaryReport out;
  out.m = m;
  out.pair_fingerprint = fnv1a(hex64(pair.total.fingerprint()) + hex64(pair.part.fingerprint()));
  out.restriction = induced_map(pair, m - 1, ring, true);
  const auto& part = out.restriction.codomain;
  for (std::size_t j = 0; j < out.restriction.domain.rank(); ++j) {
    std::vector<Integer> col(part.rank());
    for (std::size_t i = 0; i < col.size(); ++i) col[i] = out.restriction.matrix(i, j);
    out.image_generators.push_back(make_class(part, std::move(col)));
  }
  auto order = part.order();
  if (order && *order <= enumeration_limit) {
    out.image = subgroup_closure(part, out.image_generators, enumeration_limit);
    std::vector<CohomologyClass> k;
    for (auto& c : enumerate_classes(part, enumeration_limit))
      if (!std::binary_search(out.image->begin(), out.image->end(), c)) k.push_back(std::move(c));
    out.coboundary = std::move(k);
  }
  return out;
}

SpanVerdict spans(const SpanQuery& q) {
  SpanVerdict v;
  if (q.L.empty()) return v;
  auto restriction = induced_map(q.pair, q.m - 1, q.ring, true);
  if (q.L.fingerprint != restriction.codomain.fingerprint)
    throw PreconditionError("class set does not belong to the reduced cohomology of the boundary");
  for (const auto& l : q.L.elements) {
    auto w = member_of_image(l, restriction);
    if (w) v.spans = false;
    v.certificates.push_back({l, std::move(w)});
  }
  return v;
}

bool spans(const SimplicialComplex& x, const SimplicialComplex& a, int m, const CoefficientSpec& ring, const ClassSet& L) {
  return spans(SpanQuery{InclusionPair::make(x, a), m, ring, L}).spans;
}

ClassSet canonical_L(const SimplicialComplex& a, int m, const CoefficientSpec& ring) {
  if (m < 1) throw PreconditionError("m must be at least 1");
  auto verdict = is_closed_orientable_manifold(a, m - 1, ring);
  if (!verdict.yes)
    throw ManifoldPreconditionError("boundary is not a closed " + ring.name() + "-orientable " + std::to_string(m - 1) +
                                    "-manifold (" + to_string(*verdict.reason) + "): " + verdict.detail);
  const auto reduced = cohomology(a, m - 1, ring, true);

  std::vector<Integer> units;
  switch (ring.kind()) {
    case CoefficientSpec::Kind::Integers: units = {1, -1}; break;
    case CoefficientSpec::Kind::Rationals: units = {1}; break;
    case CoefficientSpec::Kind::IntegersMod:
      for (std::int64_t u = 1; u < ring.modulus(); ++u)
        if (std::gcd(u, ring.modulus()) == 1) units.push_back(u);
      break;
  }

  std::vector<CohomologyClass> elems;
  const auto& faces = a.simplices(m - 1);
  for (const auto& comp : connected_components(a)) {
    Cochain local;
    if (m == 1) {
      local.assign(comp.count(0), 1);
    } else {
      auto h = cohomology(comp, m - 1, ring, false);
      if (h.free_rank != 1 || !h.torsion.empty())
        throw ManifoldPreconditionError("component cohomology is " + h.describe() + ", expected a rank-one free module");
      local = h.generators[0];
    }
    Cochain global(faces.size(), 0);
    const auto& local_faces = comp.simplices(m - 1);
    for (std::size_t i = 0; i < local_faces.size(); ++i) global[*a.index_of(local_faces[i])] = local[i];
    for (const auto& u : units) {
      Cochain scaled = global;
      for (auto& x : scaled) x *= u;
      auto c = class_of(reduced, scaled);
      if (!c.is_zero()) elems.push_back(std::move(c));
    }
  }
  return ClassSet::make(reduced, std::move(elems));
}

ClassSet pushforward_L(const SimplicialMap& g_on_part, const ClassSet& L_A, int m, const CoefficientSpec& ring) {
  auto map = induced_map(g_on_part, m - 1, ring, true);
  const auto& domain = map.domain;
  if (L_A.empty()) return ClassSet{domain.fingerprint, {}};
  if (L_A.fingerprint != map.codomain.fingerprint)
    throw PreconditionError("class set does not belong to the cohomology of the map's source");
  if (ring.kind() == CoefficientSpec::Kind::Rationals)
    throw PreconditionError("non-enumerable preimage: rational coefficients");

  std::vector<CohomologyClass> out;
  if (domain.is_finite()) {
    for (auto& c : enumerate_classes(domain))
      if (!c.is_zero() && L_A.contains(map.apply(c))) out.push_back(std::move(c));
    return ClassSet::make(domain, std::move(out));
  }

  // Over Z the preimage is finite iff the free part injects rationally.
  const std::size_t fr = domain.free_rank, cr = map.codomain.free_rank;
  IntMatrix free_block(cr, fr);
  for (std::size_t i = 0; i < cr; ++i)
    for (std::size_t j = 0; j < fr; ++j) free_block(i, j) = map.matrix(i, j);
  SmithOptions opts;
  opts.track_u = opts.track_v = opts.track_inverses = false;
  if (smith_normal_form(free_block, opts).rank != fr)
    throw PreconditionError("non-enumerable preimage: the induced map has an infinite kernel");

  std::vector<Integer> tors_mod(domain.torsion.begin(), domain.torsion.end());
  std::vector<CohomologyClass> kernel;
  {
    std::vector<Integer> digits(tors_mod.size(), 0);
    for (;;) {
      std::vector<Integer> coords(fr, 0);
      coords.insert(coords.end(), digits.begin(), digits.end());
      auto t = make_class(domain, coords);
      if (map.apply(t).is_zero()) kernel.push_back(t);
      std::size_t i = digits.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++digits[i] < tors_mod[i]) {
          done = false;
          break;
        }
        digits[i] = 0;
      }
      if (done) break;
    }
  }
  for (const auto& l : L_A.elements) {
    auto w = member_of_image(l, map);
    if (!w) continue;
    for (const auto& k : kernel) {
      std::vector<Integer> sum(w->coordinates.size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = w->coordinates[i] + k.coordinates[i];
      auto c = make_class(domain, std::move(sum));
      if (!c.is_zero()) out.push_back(std::move(c));
    }
  }
  return ClassSet::make(domain, std::move(out));
}

CompetitorResult competitor(const SimplicialMap& g, const SimplicialComplex& x, const SimplicialComplex& a, int m,
                            const CoefficientSpec& ring, const ClassSet& L) {
  if (!(g.source() == g.target())) throw PreconditionError("competitor map must send the ambient complex to itself");
  if (!contains_all(g.source(), x)) throw PreconditionError("X is not contained in the ambient complex");
  for (VertexId v : a.vertices())
    if (g(v) != v) throw PreconditionError("competitor map moves boundary vertex " + std::to_string(v));
  CompetitorResult out;
  out.image = g.image(x);
  out.spans_before = spans(x, a, m, ring, L);
  out.spans_after = spans(out.image, a, m, ring, L);
  if (out.spans_before && !out.spans_after) throw std::logic_error("competitor lost the spanning property");
  return out;
}

GlueVerdict glue_spans(const std::vector<GluePiece>& pieces, const SimplicialComplex& a, const ClassSet& L, int m,
                       const CoefficientSpec& ring) {
  GlueVerdict v;
  if (pieces.empty()) throw PreconditionError("gluing needs at least one piece");
  std::vector<SimplicialComplex> xs, bs{a};
  for (const auto& p : pieces) {
    xs.push_back(p.x);
    bs.push_back(p.a);
  }
  const auto x = unite(xs);
  const auto b = unite(bs);
  if (!contains_all(x, a)) throw PreconditionError("A is not contained in the union of the pieces");
  for (std::size_t r = 0; r < pieces.size(); ++r) {
    if (!contains_all(pieces[r].x, pieces[r].a))
      throw PreconditionError(piece_name(r) + ": A_r is not contained in X_r");
    if (!spans(pieces[r].x, pieces[r].a, m, ring, pieces[r].L)) {
      v.detail = piece_name(r) + " does not span its class set";
      return v;
    }
  }
  const auto hb = cohomology(b, m - 1, ring, true);
  if (!hb.is_finite()) throw PreconditionError("infinite enumeration requested: H^" + std::to_string(m - 1) + "(B) is " + hb.describe());
  auto to_a = induced_map(InclusionPair::make(b, a), m - 1, ring, true);
  if (!L.empty() && L.fingerprint != to_a.codomain.fingerprint)
    throw PreconditionError("class set does not belong to the reduced cohomology of A");
  std::vector<InducedMap> to_pieces;
  for (std::size_t r = 0; r < pieces.size(); ++r) {
    to_pieces.push_back(induced_map(InclusionPair::make(b, pieces[r].a), m - 1, ring, true));
    if (!pieces[r].L.empty() && pieces[r].L.fingerprint != to_pieces.back().codomain.fingerprint)
      throw PreconditionError(piece_name(r) + ": class set does not belong to H(A_r)");
  }
  for (const auto& h : enumerate_classes(hb)) {
    if (!L.contains(to_a.apply(h))) continue;
    bool covered = false;
    for (std::size_t r = 0; r < pieces.size() && !covered; ++r) covered = pieces[r].L.contains(to_pieces[r].apply(h));
    if (!covered) {
      v.detail = "preimage condition fails at class " + to_string(h) + " of H(B)";
      return v;
    }
  }
  v.hypothesis_met = true;
  v.spans = spans(x, a, m, ring, L);
  return v;
}

std::vector<CohomologyClass> coboundary_decomposition(const std::vector<DecompositionPiece>& pieces,
                                                      const SimplicialComplex& a, int m, const CoefficientSpec& ring) {
  if (pieces.empty()) throw HypothesisError("decomposition needs at least one piece");
  std::vector<SimplicialComplex> xs, bs{a};
  for (const auto& p : pieces) {
    xs.push_back(p.x);
    bs.push_back(p.a);
  }
  const auto x = unite(xs);
  const auto b = unite(bs);
  if (!contains_all(x, a)) throw HypothesisError("A is not contained in the union of the pieces");
  for (std::size_t r = 0; r < pieces.size(); ++r) {
    if (!contains_all(pieces[r].x, pieces[r].a)) throw HypothesisError(piece_name(r) + ": A_r is not contained in X_r");
    if (!contains_all(pieces[r].a, intersect(a, pieces[r].x)))
      throw HypothesisError(piece_name(r) + ": A meets X_r outside A_r");
  }
  for (std::size_t r = 0; r < pieces.size(); ++r)
    for (std::size_t s = r + 1; s < pieces.size(); ++s)
      if (!(intersect(pieces[r].x, pieces[s].x) == intersect(pieces[r].a, pieces[s].a)))
        throw HypothesisError("pieces (" + std::to_string(r + 1) + ", " + std::to_string(s + 1) +
                              "): X_r and X_s meet outside A_r and A_s");

  const auto hb = cohomology(b, m - 1, ring, true);
  const auto ha = cohomology(a, m - 1, ring, true);
  if (!hb.is_finite() || !ha.is_finite()) throw PreconditionError("infinite enumeration requested");
  auto to_a = induced_map(InclusionPair::make(b, a), m - 1, ring, true);
  std::vector<InducedMap> to_pieces;
  std::vector<CoboundaryReport> reports;
  for (const auto& p : pieces) {
    to_pieces.push_back(induced_map(InclusionPair::make(b, p.a), m - 1, ring, true));
    reports.push_back(algebraic_coboundary(InclusionPair::make(p.x, p.a), m, ring));
  }
  std::set<CohomologyClass> excluded;
  for (const auto& h : enumerate_classes(hb)) {
    bool good = false;
    for (std::size_t r = 0; r < pieces.size() && !good; ++r) good = reports[r].in_coboundary(to_pieces[r].apply(h));
    if (!good) excluded.insert(to_a.apply(h));
  }
  std::vector<CohomologyClass> out;
  for (auto& c : enumerate_classes(ha))
    if (!excluded.count(c)) out.push_back(std::move(c));
  return out;
}

Region region(const SimplicialComplex& ambient, const SimplicialComplex& c) {
  if (!contains_all(ambient, c)) throw PreconditionError("region is not contained in the ambient complex");
  std::set<Simplex> touched;
  for (const auto& tau : ambient.all_simplices()) {
    if (c.contains(tau)) continue;
    const std::size_t n = tau.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) face.push_back(tau[i]);
      if (c.contains(face)) touched.insert(face);
    }
  }
  Region out;
  std::vector<Simplex> frontier;
  for (const auto& s : c.all_simplices()) {
    if (touched.count(s)) frontier.push_back(s);
    else out.interior.push_back(s);
  }
  out.frontier = subcomplex(ambient, frontier);
  return out;
}

SurgeryResult surgery(const SimplicialComplex& ambient, const SimplicialComplex& x, const SimplicialComplex& a,
                      const ClassSet& L, const SimplicialComplex& c, const SimplicialComplex& y, int m,
                      const CoefficientSpec& ring) {
  if (!contains_all(ambient, x)) throw HypothesisError("X is not contained in the ambient complex");
  if (!contains_all(x, a)) throw HypothesisError("A is not contained in X");
  if (!spans(x, a, m, ring, L)) throw HypothesisError("X does not span L");
  auto reg = region(ambient, c);
  for (const auto& s : reg.interior)
    if (a.contains(s)) throw HypothesisError("interior of C meets A at " + to_string(s));
  SurgeryResult out;
  out.inner = intersect(x, c);
  out.inner_frontier = intersect(x, reg.frontier);
  if (!contains_all(y, out.inner_frontier)) throw HypothesisError("Y does not contain X ∩ fr C");
  auto k1 = algebraic_coboundary(InclusionPair::make(out.inner, out.inner_frontier), m, ring);
  if (!k1.coboundary) throw HypothesisError("surgery needs an enumerable coboundary (finite coefficients)");
  ClassSet l1 = ClassSet::make(k1.part_cohomology(), *k1.coboundary);
  if (!spans(y, out.inner_frontier, m, ring, l1))
    throw HypothesisError("Y does not span K*(X ∩ C, X ∩ fr C)");
  std::vector<Simplex> open;
  for (const auto& s : reg.interior)
    if (x.contains(s)) open.push_back(s);
  out.complex = unite(remove_open(x, open), y);
  out.spans = spans(out.complex, a, m, ring, L);
  return out;
}

// ---------------------------------------------------------------- SpanOracle

SpanOracle::SpanOracle(SimplicialComplex ambient, SimplicialComplex part, int m, CoefficientSpec ring, const ClassSet& L)
    : ambient_(std::move(ambient)), part_(std::move(part)), m_(m), ring_(ring) {
  if (m < 1) throw PreconditionError("m must be at least 1");
  if (!contains_all(ambient_, part_)) throw PreconditionError("boundary is not contained in the ambient complex");
  const auto ha = cohomology(part_, m - 1, ring, true);
  if (!L.empty() && L.fingerprint != ha.fingerprint)
    throw PreconditionError("class set does not belong to the reduced cohomology of the boundary");
  const auto& faces = ambient_.simplices(m - 1);
  face_in_part_.resize(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) face_in_part_[i] = part_.contains(faces[i]);
  const auto& part_faces = part_.simplices(m - 1);
  for (const auto& l : L.elements) {
    Cochain local = representative(ha, l);
    Cochain global(faces.size(), 0);
    for (std::size_t i = 0; i < part_faces.size(); ++i) global[*ambient_.index_of(part_faces[i])] = local[i];
    reps_.push_back(std::move(global));
  }
  const auto& tops = ambient_.simplices(m);
  boundary_.resize(tops.size());
  for (std::size_t t = 0; t < tops.size(); ++t)
    for (std::size_t drop = 0; drop < tops[t].size(); ++drop) {
      Simplex f;
      for (std::size_t j = 0; j < tops[t].size(); ++j)
        if (j != drop) f.push_back(tops[t][j]);
      boundary_[t].emplace_back(*ambient_.index_of(f), drop % 2 == 0 ? 1 : -1);
    }
}

std::optional<std::size_t> SpanOracle::first_extending_faces(const std::vector<std::size_t>& top_cells) const {
  if (reps_.empty()) return std::nullopt;
  std::map<std::size_t, std::size_t> column;
  for (auto t : top_cells)
    for (auto [f, sign] : boundary_[t])
      if (!face_in_part_[f]) column.emplace(f, 0);
  std::size_t next = 0;
  for (auto& [f, c] : column) c = next++;
  const bool shift = m_ == 1;  // reduced degree 0: classes are cochains modulo constants
  IntMatrix mat(top_cells.size(), column.size() + (shift ? 1 : 0));
  std::vector<std::vector<Integer>> rhs(reps_.size(), std::vector<Integer>(top_cells.size(), 0));
  for (std::size_t row = 0; row < top_cells.size(); ++row)
    for (auto [f, sign] : boundary_[top_cells[row]]) {
      if (!face_in_part_[f]) {
        mat(row, column[f]) += sign;
        continue;
      }
      if (shift) mat(row, column.size()) += sign;
      for (std::size_t l = 0; l < reps_.size(); ++l) rhs[l][row] -= sign * reps_[l][f];
    }
  auto ok = solvable(mat, rhs, ring_);
  for (std::size_t l = 0; l < ok.size(); ++l)
    if (ok[l]) return l;
  return std::nullopt;
}

std::optional<std::size_t> SpanOracle::first_extending(const SimplicialComplex& x) const {
  if (!contains_all(ambient_, x) || !contains_all(x, part_))
    throw PreconditionError("X must lie between the boundary and the ambient complex");
  std::vector<std::size_t> cells;
  for (const auto& s : x.simplices(m_))
    if (!part_.contains(s)) cells.push_back(*ambient_.index_of(s));
  return first_extending_faces(cells);
}

bool SpanOracle::spans(const SimplicialComplex& x) const { return !first_extending(x).has_value(); }

bool SpanOracle::spans_cells(const std::vector<std::size_t>& cells) const {
  std::vector<std::size_t> tops;
  const auto& all = ambient_.simplices(m_);
  for (auto c : cells) {
    if (c >= all.size()) throw PreconditionError("cell index out of range");
    if (!part_.contains(all[c])) tops.push_back(c);
  }
  std::sort(tops.begin(), tops.end());
  tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
  return !first_extending_faces(tops).has_value();
}

}  // namespace cechspan
