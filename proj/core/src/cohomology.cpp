#include "cechspan/cohomology.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace cechspan {

Integer reduce_mod(const Integer& x, const Integer& m) {
  if (m == 0) return x;
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

bool CohomologyPresentation::is_finite() const noexcept {
  return ring.is_finite() || free_rank == 0;
}

std::vector<Integer> CohomologyPresentation::moduli() const {
  std::vector<Integer> out;
  out.reserve(rank());
  const Integer free_modulus = ring.is_finite() ? Integer(ring.modulus()) : Integer(0);
  for (std::size_t i = 0; i < free_rank; ++i) out.push_back(free_modulus);
  out.insert(out.end(), torsion.begin(), torsion.end());
  return out;
}

std::optional<Integer> CohomologyPresentation::order() const {
  if (!is_finite()) return std::nullopt;
  Integer n = 1;
  for (const auto& m : moduli()) n *= m;
  return n;
}

std::string CohomologyPresentation::describe() const {
  if (is_zero_group()) return "0";
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " + ";
    first = false;
  };
  if (free_rank > 0) {
    sep();
    switch (ring.kind()) {
      case CoefficientSpec::Kind::Integers: out << "Z"; break;
      case CoefficientSpec::Kind::Rationals: out << "Q"; break;
      case CoefficientSpec::Kind::IntegersMod:
        out << (free_rank > 1 ? "(Z/" : "Z/") << ring.modulus() << (free_rank > 1 ? ")" : "");
        break;
    }
    if (free_rank > 1) out << "^" << free_rank;
  }
  for (const auto& d : torsion) {
    sep();
    out << "Z/" << d;
  }
  return out.str();
}

bool CohomologyClass::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(), [](const Integer& c) { return c == 0; });
}

std::strong_ordering operator<=>(const CohomologyClass& a, const CohomologyClass& b) {
  if (a.fingerprint != b.fingerprint) return a.fingerprint <=> b.fingerprint;
  const std::size_t n = std::min(a.coordinates.size(), b.coordinates.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coordinates[i] < b.coordinates[i]) return std::strong_ordering::less;
    if (b.coordinates[i] < a.coordinates[i]) return std::strong_ordering::greater;
  }
  return a.coordinates.size() <=> b.coordinates.size();
}

std::string to_string(const CohomologyClass& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.coordinates.size(); ++i) {
    if (i) out += ", ";
    out += c.coordinates[i].str();
  }
  return out + ")";
}

namespace {

std::size_t cochain_dimension(const SimplicialComplex& k, int degree, bool reduced) {
  if (degree >= 0) return k.count(degree);
  return (degree == -1 && reduced && !k.empty()) ? 1 : 0;
}

std::uint64_t presentation_fingerprint(const SimplicialComplex& k, int degree, const CoefficientSpec& ring,
                                       bool reduced) {
  return fnv1a(hex64(k.fingerprint()) + "|" + std::to_string(degree) + "|" + ring.name() + (reduced ? "|r" : "|u"));
}

// ---------------------------------------------------------------- prime field

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 to_field(const Integer& x, u64 p) { return static_cast<u64>(reduce_mod(x, Integer(p))); }

using SparseRows = std::vector<std::vector<std::pair<std::size_t, int>>>;

SparseRows sparse_rows(const IntMatrix& m) {
  SparseRows rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) rows[i].emplace_back(j, static_cast<int>(m(i, j)));
  return rows;
}

bool is_cocycle(const SparseRows& rows, const Cochain& x, const Integer& q) {
  for (const auto& row : rows) {
    Integer s = 0;
    for (auto [j, v] : row) s += v * x[j];
    if (reduce_mod(s, q) != 0) return false;
  }
  return true;
}

class FieldCoordinatizer : public detail::Coordinatizer {
 public:
  struct Entry {
    std::vector<u64> vec;  // normalized so vec[pivot] == 1
    std::size_t pivot;
    long generator;        // -1 for coboundary directions
  };

  FieldCoordinatizer(u64 p, SparseRows rows, std::size_t n) : p_(p), rows_(std::move(rows)), n_(n) {}

  // Reduces v in place against the stored echelon basis; returns the coefficients used.
  void reduce(std::vector<u64>& v, std::vector<u64>* coords) const {
    for (const auto& e : basis_) {
      u64 c = v[e.pivot];
      if (!c) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (e.vec[j]) v[j] = (v[j] + p_ - mulmod(c, e.vec[j], p_)) % p_;
      if (coords && e.generator >= 0) (*coords)[e.generator] = ((*coords)[e.generator] + c) % p_;
    }
  }

  // Inserts a vector already reduced against the basis; false if it is zero.
  bool insert(std::vector<u64> v, long generator) {
    std::size_t piv = 0;
    while (piv < n_ && v[piv] == 0) ++piv;
    if (piv == n_) return false;
    u64 inv = invmod(v[piv], p_);
    for (auto& x : v) x = mulmod(x, inv, p_);
    basis_.push_back({std::move(v), piv, generator});
    return true;
  }

  std::vector<Integer> coordinates(const Cochain& cocycle) const override {
    if (cocycle.size() != n_) throw PreconditionError("cochain has the wrong length");
    if (!is_cocycle(rows_, cocycle, Integer(p_))) throw PreconditionError("cochain is not a cocycle");
    std::vector<u64> v(n_);
    for (std::size_t j = 0; j < n_; ++j) v[j] = to_field(cocycle[j], p_);
    std::vector<u64> coords(generators_, 0);
    reduce(v, &coords);
    if (std::any_of(v.begin(), v.end(), [](u64 x) { return x != 0; }))
      throw std::logic_error("cocycle outside the computed kernel");
    return {coords.begin(), coords.end()};
  }

  std::size_t generators_ = 0;

 private:
  u64 p_;
  SparseRows rows_;
  std::size_t n_;
  std::vector<Entry> basis_;
};

std::vector<std::vector<u64>> kernel_mod_p(const IntMatrix& m, u64 p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<u64>> a(rows, std::vector<u64>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = to_field(m(i, j), p);
  std::vector<long> pivot_row_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    u64 inv = invmod(a[r][c], p);
    for (auto& x : a[r]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j]) a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
    }
    pivot_row_of_col[c] = static_cast<long>(r);
    ++r;
  }
  std::vector<std::vector<u64>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_row_of_col[f] >= 0) continue;
    std::vector<u64> v(cols, 0);
    v[f] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_row_of_col[c] >= 0) v[c] = (p - a[pivot_row_of_col[c]][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

void field_presentation(CohomologyPresentation& out, const IntMatrix& dk, const IntMatrix& dprev) {
  const u64 p = static_cast<u64>(out.ring.modulus());
  const std::size_t n = dk.cols();
  auto coord = std::make_shared<FieldCoordinatizer>(p, sparse_rows(dk), n);
  for (std::size_t j = 0; j < dprev.cols(); ++j) {
    std::vector<u64> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = to_field(dprev(i, j), p);
    coord->reduce(v, nullptr);
    coord->insert(std::move(v), -1);
  }
  for (auto& z : kernel_mod_p(dk, p)) {
    coord->reduce(z, nullptr);
    auto piv = std::find_if(z.begin(), z.end(), [](u64 x) { return x != 0; });
    if (piv == z.end()) continue;
    const u64 inv = invmod(*piv, p);
    for (auto& x : z) x = mulmod(x, inv, p);
    out.generators.emplace_back(z.begin(), z.end());
    coord->insert(std::move(z), static_cast<long>(out.generators.size() - 1));
  }
  coord->generators_ = out.generators.size();
  out.free_rank = out.generators.size();
  out.coordinatizer = coord;
}

// ---------------------------------------------------------------- lattice (Z, Z/q, Q)

class LatticeCoordinatizer : public detail::Coordinatizer {
 public:
  SparseRows dk;
  Integer q;              // 0 over Z and Q
  IntMatrix vinv_rows;    // rows of V^{-1} indexed by the kernel coordinates J
  std::vector<Integer> s; // scaling of each kernel coordinate
  IntMatrix p_rows;       // rows of P kept as generator coordinates, in output order
  std::size_t n = 0;

  std::vector<Integer> coordinates(const Cochain& cocycle) const override {
    if (cocycle.size() != n) throw PreconditionError("cochain has the wrong length");
    if (!is_cocycle(dk, cocycle, q)) throw PreconditionError("cochain is not a cocycle");
    std::vector<Integer> z = multiply(vinv_rows, cocycle);
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (s[i] == 1) continue;
      z[i] = reduce_mod(z[i], q);
      if (z[i] % s[i] != 0) throw std::logic_error("cocycle outside the computed kernel lattice");
      z[i] /= s[i];
    }
    return multiply(p_rows, z);
  }
};

void lattice_presentation(CohomologyPresentation& out, const IntMatrix& dk, const IntMatrix& dprev) {
  const bool rational = out.ring.kind() == CoefficientSpec::Kind::Rationals;
  const Integer q = out.ring.is_finite() ? Integer(out.ring.modulus()) : Integer(0);
  const std::size_t n = dk.cols();

  SmithOptions kernel_opts;
  kernel_opts.track_u = false;
  SmithForm ker = smith_normal_form(dk, kernel_opts);
  const std::size_t r = ker.rank;

  std::vector<std::size_t> J;
  std::vector<Integer> s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= r) {
      J.push_back(i);
      s.push_back(1);
    } else if (q != 0) {
      J.push_back(i);
      s.push_back(q / gcd(ker.d(i, i), q));
    }
  }
  const std::size_t t = J.size();

  IntMatrix vinv_rows(t, n);
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t j = 0; j < n; ++j) vinv_rows(a, j) = ker.v_inv(J[a], j);

  const std::size_t extra = q != 0 ? t : 0;
  IntMatrix rel(t, dprev.cols() + extra);
  for (std::size_t c = 0; c < dprev.cols(); ++c) {
    for (std::size_t a = 0; a < t; ++a) {
      Integer y = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (dprev(j, c) != 0) y += vinv_rows(a, j) * dprev(j, c);
      if (y % s[a] != 0) throw std::logic_error("coboundary outside the kernel lattice");
      rel(a, c) = y / s[a];
    }
  }
  for (std::size_t a = 0; a < extra; ++a) rel(a, dprev.cols() + a) = q / s[a];

  SmithOptions rel_opts;
  rel_opts.track_v = false;
  SmithForm quo = smith_normal_form(rel, rel_opts);

  std::vector<std::size_t> free_idx, torsion_idx;
  for (std::size_t i = 0; i < t; ++i) {
    Integer e = i < quo.rank ? Integer(quo.d(i, i)) : Integer(0);
    if (q != 0) {
      if (e == q) free_idx.push_back(i);
      else if (e != 1) torsion_idx.push_back(i);
    } else if (e == 0) {
      free_idx.push_back(i);
    } else if (e != 1 && !rational) {
      torsion_idx.push_back(i);
    }
  }

  std::vector<std::size_t> order = free_idx;
  order.insert(order.end(), torsion_idx.begin(), torsion_idx.end());
  out.free_rank = free_idx.size();
  for (std::size_t i : torsion_idx) out.torsion.push_back(quo.d(i, i));

  auto coord = std::make_shared<LatticeCoordinatizer>();
  coord->dk = sparse_rows(dk);
  coord->q = q;
  coord->vinv_rows = std::move(vinv_rows);
  coord->s = s;
  coord->n = n;
  coord->p_rows = IntMatrix(order.size(), t);
  for (std::size_t o = 0; o < order.size(); ++o)
    for (std::size_t a = 0; a < t; ++a) coord->p_rows(o, a) = quo.u(order[o], a);

  for (std::size_t i : order) {
    Cochain g(n, 0);
    for (std::size_t a = 0; a < t; ++a) {
      Integer y = quo.u_inv(a, i) * s[a];
      if (y == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (ker.v(j, J[a]) != 0) g[j] += ker.v(j, J[a]) * y;
    }
    for (auto& x : g) x = reduce_mod(x, q);
    out.generators.push_back(std::move(g));
  }
  out.coordinatizer = coord;
}

struct CacheKey {
  std::uint64_t fingerprint;
  std::size_t size;
  int degree;
  int ring_kind;
  std::int64_t modulus;
  bool reduced;
  bool operator==(const CacheKey&) const = default;
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const noexcept {
    return static_cast<std::size_t>(k.fingerprint ^ (k.size * 0x9e3779b97f4a7c15ULL) ^
                                    (static_cast<std::uint64_t>(k.degree + 7) << 40) ^
                                    (static_cast<std::uint64_t>(k.modulus) << 8) ^
                                    (static_cast<std::uint64_t>(k.ring_kind) << 4) ^ (k.reduced ? 1u : 0u));
  }
};

struct CacheEntry {
  SimplicialComplex complex;
  CohomologyPresentation presentation;
};

// Pure memo: entries are immutable values keyed by the full complex, not just its hash.
class PresentationCache {
 public:
  std::optional<CohomologyPresentation> find(const CacheKey& key, const SimplicialComplex& k) {
    std::lock_guard lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end() || !(it->second.complex == k)) return std::nullopt;
    return it->second.presentation;
  }
  void store(const CacheKey& key, const SimplicialComplex& k, const CohomologyPresentation& p) {
    std::lock_guard lock(mutex_);
    if (map_.size() >= 4096) map_.clear();
    map_.insert_or_assign(key, CacheEntry{k, p});
  }

 private:
  std::mutex mutex_;
  std::unordered_map<CacheKey, CacheEntry, CacheKeyHash> map_;
};

PresentationCache& cache() {
  static PresentationCache c;
  return c;
}

}  // namespace

IntMatrix coboundary_matrix(const SimplicialComplex& k, int degree, const CoefficientSpec&, bool reduced) {
  const std::size_t cols = cochain_dimension(k, degree, reduced);
  const std::size_t rows = cochain_dimension(k, degree + 1, reduced);
  IntMatrix m(rows, cols);
  if (rows == 0 || cols == 0) return m;
  if (degree < 0) {
    for (std::size_t i = 0; i < rows; ++i) m(i, 0) = 1;
    return m;
  }
  const auto& cofaces = k.simplices(degree + 1);
  for (std::size_t i = 0; i < cofaces.size(); ++i) {
    const Simplex& tau = cofaces[i];
    for (std::size_t drop = 0; drop < tau.size(); ++drop) {
      Simplex face;
      face.reserve(tau.size() - 1);
      for (std::size_t v = 0; v < tau.size(); ++v)
        if (v != drop) face.push_back(tau[v]);
      m(i, *k.index_of(face)) = (drop % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

CohomologyPresentation cohomology(const SimplicialComplex& k, int degree, const CoefficientSpec& ring, bool reduced) {
  const CacheKey key{k.fingerprint(), k.size(), degree, static_cast<int>(ring.kind()), ring.modulus(), reduced};
  if (auto hit = cache().find(key, k)) return *hit;

  CohomologyPresentation out;
  out.degree = degree;
  out.reduced = reduced;
  out.ring = ring;
  out.complex_fingerprint = k.fingerprint();
  out.fingerprint = presentation_fingerprint(k, degree, ring, reduced);

  const IntMatrix dk = coboundary_matrix(k, degree, ring, reduced);
  const IntMatrix dprev = coboundary_matrix(k, degree - 1, ring, reduced);
  if (degree < 0 || (reduced && k.empty()) || dk.cols() == 0) {
    // Zero group; the coordinatizer still validates lengths.
    auto coord = std::make_shared<LatticeCoordinatizer>();
    coord->n = dk.cols();
    coord->dk = sparse_rows(dk);
    coord->q = ring.is_finite() ? Integer(ring.modulus()) : Integer(0);
    coord->vinv_rows = IntMatrix(0, dk.cols());
    coord->p_rows = IntMatrix(0, 0);
    out.coordinatizer = coord;
  } else if (ring.is_prime_field() && ring.modulus() < (std::int64_t(1) << 31)) {
    field_presentation(out, dk, dprev);
  } else {
    lattice_presentation(out, dk, dprev);
  }
  cache().store(key, k, out);
  return out;
}

CohomologyClass make_class(const CohomologyPresentation& p, std::vector<Integer> coordinates) {
  if (coordinates.size() != p.rank()) throw PreconditionError("class has the wrong number of coordinates");
  const auto mods = p.moduli();
  for (std::size_t i = 0; i < coordinates.size(); ++i) coordinates[i] = reduce_mod(coordinates[i], mods[i]);
  return CohomologyClass{p.fingerprint, std::move(coordinates)};
}

CohomologyClass zero_class(const CohomologyPresentation& p) {
  return CohomologyClass{p.fingerprint, std::vector<Integer>(p.rank(), 0)};
}

CohomologyClass class_of(const CohomologyPresentation& p, const Cochain& cocycle) {
  return make_class(p, p.coordinatizer->coordinates(cocycle));
}

Cochain representative(const CohomologyPresentation& p, const CohomologyClass& c) {
  if (c.fingerprint != p.fingerprint) throw PreconditionError("class belongs to a different presentation");
  Cochain out;
  if (!p.generators.empty()) out.assign(p.generators[0].size(), 0);
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (c.coordinates[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c.coordinates[i] * p.generators[i][j];
  }
  const Integer q = p.ring.is_finite() ? Integer(p.ring.modulus()) : Integer(0);
  for (auto& x : out) x = reduce_mod(x, q);
  return out;
}

std::vector<CohomologyClass> enumerate_classes(const CohomologyPresentation& p, std::size_t limit) {
  auto order = p.order();
  if (!order) throw PreconditionError("cannot enumerate an infinite group " + p.describe());
  if (*order > limit) throw PreconditionError("group of order " + order->str() + " exceeds the enumeration limit");
  const auto mods = p.moduli();
  std::vector<CohomologyClass> out;
  out.reserve(static_cast<std::size_t>(*order));
  std::vector<Integer> digits(mods.size(), 0);
  for (;;) {
    out.push_back(CohomologyClass{p.fingerprint, digits});
    std::size_t i = digits.size();
    while (i > 0) {
      --i;
      if (++digits[i] < mods[i]) break;
      digits[i] = 0;
      if (i == 0) return out;
    }
    if (digits.empty()) return out;
  }
}

CohomologyClass InducedMap::apply(const CohomologyClass& c) const {
  if (c.fingerprint != domain.fingerprint) throw PreconditionError("class does not belong to the map's domain");
  return make_class(codomain, multiply(matrix, c.coordinates));
}

bool InducedMap::is_zero() const { return matrix.is_zero(); }

Cochain pullback(const SimplicialMap& f, int degree, const Cochain& c) {
  if (degree < 0) return c;
  const auto& target = f.target();
  if (c.size() != target.count(degree)) throw PreconditionError("cochain length does not match the target");
  const auto& simplices = f.source().simplices(degree);
  Cochain out(simplices.size(), 0);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    std::vector<VertexId> image;
    image.reserve(simplices[i].size());
    for (VertexId v : simplices[i]) image.push_back(f(v));
    // sign of the sorting permutation via inversion count; repeated vertices collapse the simplex
    int sign = 1;
    bool degenerate = false;
    for (std::size_t a = 0; a < image.size() && !degenerate; ++a)
      for (std::size_t b = a + 1; b < image.size(); ++b) {
        if (image[a] == image[b]) {
          degenerate = true;
          break;
        }
        if (image[a] > image[b]) sign = -sign;
      }
    if (degenerate) continue;
    std::sort(image.begin(), image.end());
    const Integer& value = c[*target.index_of(image)];
    out[i] = sign > 0 ? value : Integer(-value);
  }
  return out;
}

InducedMap induced_map(const SimplicialMap& f, const CohomologyPresentation& target_cohomology,
                       const CohomologyPresentation& source_cohomology) {
  if (target_cohomology.complex_fingerprint != f.target().fingerprint() ||
      source_cohomology.complex_fingerprint != f.source().fingerprint())
    throw PreconditionError("presentations do not match the map's complexes");
  if (target_cohomology.degree != source_cohomology.degree || !(target_cohomology.ring == source_cohomology.ring) ||
      target_cohomology.reduced != source_cohomology.reduced)
    throw PreconditionError("presentations differ in degree, ring or reduction");
  InducedMap out{target_cohomology, source_cohomology, IntMatrix(source_cohomology.rank(), target_cohomology.rank())};
  const auto mods = source_cohomology.moduli();
  for (std::size_t j = 0; j < target_cohomology.rank(); ++j) {
    Cochain pulled = pullback(f, target_cohomology.degree, target_cohomology.generators[j]);
    auto coords = source_cohomology.coordinatizer->coordinates(pulled);
    for (std::size_t i = 0; i < coords.size(); ++i) out.matrix(i, j) = reduce_mod(coords[i], mods[i]);
  }
  return out;
}

InducedMap induced_map(const SimplicialMap& f, int degree, const CoefficientSpec& ring, bool reduced) {
  return induced_map(f, cohomology(f.target(), degree, ring, reduced), cohomology(f.source(), degree, ring, reduced));
}

InducedMap induced_map(const InclusionPair& pair, int degree, const CoefficientSpec& ring, bool reduced) {
  return induced_map(SimplicialMap::inclusion(pair), degree, ring, reduced);
}

std::optional<ImageWitness> member_of_image(const CohomologyClass& target, const InducedMap& map) {
  if (target.fingerprint != map.codomain.fingerprint)
    throw PreconditionError("class does not belong to the map's codomain");
  const std::size_t rows = map.codomain.rank(), cols = map.domain.rank();
  const bool rational = map.codomain.ring.kind() == CoefficientSpec::Kind::Rationals;
  const auto mods = map.codomain.moduli();

  std::vector<std::size_t> rel_rows;
  if (!rational)
    for (std::size_t i = 0; i < rows; ++i)
      if (mods[i] != 0) rel_rows.push_back(i);

  IntMatrix a(rows, cols + rel_rows.size());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = map.matrix(i, j);
  for (std::size_t k = 0; k < rel_rows.size(); ++k) a(rel_rows[k], cols + k) = mods[rel_rows[k]];

  SmithOptions opts;
  opts.track_inverses = false;
  SmithForm f = smith_normal_form(a, opts);
  std::vector<Integer> y = multiply(f.u, target.coordinates);
  for (std::size_t i = f.rank; i < rows; ++i)
    if (y[i] != 0) return std::nullopt;

  ImageWitness w;
  std::vector<Integer> z(a.cols(), 0);
  if (rational) {
    Integer den = 1;
    for (std::size_t i = 0; i < f.rank; ++i) den = lcm(den, Integer(f.d(i, i)));
    for (std::size_t i = 0; i < f.rank; ++i) z[i] = y[i] * (den / f.d(i, i));
    w.denominator = den;
  } else {
    for (std::size_t i = 0; i < f.rank; ++i) {
      if (y[i] % f.d(i, i) != 0) return std::nullopt;
      z[i] = y[i] / f.d(i, i);
    }
  }
  std::vector<Integer> sol = multiply(f.v, z);
  sol.resize(cols);
  if (rational) {
    Integer g = w.denominator;
    for (const auto& x : sol) g = gcd(g, x);
    if (g > 1) {
      for (auto& x : sol) x /= g;
      w.denominator /= g;
    }
    w.coordinates = std::move(sol);
  } else {
    w.coordinates = make_class(map.domain, std::move(sol)).coordinates;
  }
  return w;
}

}  // namespace cechspan
