#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cechspan/coefficients.hpp"
#include "cechspan/complex.hpp"
#include "cechspan/snf.hpp"
#include "cechspan/types.hpp"

namespace cechspan {

/// Integer-valued function on the canonical k-simplices of a complex.
using Cochain = std::vector<Integer>;

namespace detail {
class Coordinatizer {
 public:
  virtual ~Coordinatizer() = default;
  /// Generator coordinates of a cocycle's class (unreduced by the moduli).
  virtual std::vector<Integer> coordinates(const Cochain& cocycle) const = 0;
};
}  // namespace detail

/// Finitely generated presentation of H^k or H̃^k: free summands first, then
/// cyclic torsion summands Z/d_1, Z/d_2, ... with d_1 | d_2 | ....
/// Over Z/q the "free" summands are copies of Z/q itself.
struct CohomologyPresentation {
  int degree = 0;
  bool reduced = false;
  CoefficientSpec ring = CoefficientSpec::integers();
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  /// One cocycle per coordinate, free generators first.
  std::vector<Cochain> generators;
  std::uint64_t complex_fingerprint = 0;
  std::uint64_t fingerprint = 0;
  std::shared_ptr<const detail::Coordinatizer> coordinatizer;

  std::size_t rank() const noexcept { return free_rank + torsion.size(); }
  bool is_zero_group() const noexcept { return rank() == 0; }
  bool is_finite() const noexcept;
  /// Order of the cyclic summand behind each coordinate; 0 marks an infinite summand.
  std::vector<Integer> moduli() const;
  /// Group order when finite.
  std::optional<Integer> order() const;
  std::string describe() const;
};

/// Element of a presentation, coordinates canonicalized into [0, modulus).
struct CohomologyClass {
  std::uint64_t fingerprint = 0;
  std::vector<Integer> coordinates;

  bool is_zero() const;
  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) = default;
  friend std::strong_ordering operator<=>(const CohomologyClass& a, const CohomologyClass& b);
};

std::string to_string(const CohomologyClass& c);

/// δ^k : C^k -> C^{k+1} with rows indexed by (k+1)-simplices and columns by
/// k-simplices. With `reduced`, the augmented complex is used: k = -1 yields
/// the augmentation column. The empty complex has no augmentation, so every
/// matrix is 0x0 and every reduced group vanishes.
IntMatrix coboundary_matrix(const SimplicialComplex& k, int degree, const CoefficientSpec& ring, bool reduced);

CohomologyPresentation cohomology(const SimplicialComplex& k, int degree, const CoefficientSpec& ring, bool reduced);

/// Class of a cocycle; throws PreconditionError when `cocycle` is not one.
CohomologyClass class_of(const CohomologyPresentation& p, const Cochain& cocycle);
CohomologyClass make_class(const CohomologyPresentation& p, std::vector<Integer> coordinates);
CohomologyClass zero_class(const CohomologyPresentation& p);
/// Cocycle Σ c_i g_i, reduced into the ring.
Cochain representative(const CohomologyPresentation& p, const CohomologyClass& c);
/// Every element in lexicographic coordinate order; throws for infinite
/// groups or more than `limit` elements.
std::vector<CohomologyClass> enumerate_classes(const CohomologyPresentation& p, std::size_t limit = 1u << 20);

/// Pullback on cohomology. For f: K -> L the map runs H(L) -> H(K):
/// `domain` presents the cohomology of f's target, `codomain` of f's source.
struct InducedMap {
  CohomologyPresentation domain;
  CohomologyPresentation codomain;
  /// codomain.rank() x domain.rank(), rows reduced by the codomain moduli.
  IntMatrix matrix;

  CohomologyClass apply(const CohomologyClass& c) const;
  bool is_zero() const;
};

/// Pulls a cochain on f's target back to f's source.
Cochain pullback(const SimplicialMap& f, int degree, const Cochain& c);

InducedMap induced_map(const SimplicialMap& f, int degree, const CoefficientSpec& ring, bool reduced);
InducedMap induced_map(const InclusionPair& pair, int degree, const CoefficientSpec& ring, bool reduced);
/// Uses precomputed presentations of target (domain) and source (codomain).
InducedMap induced_map(const SimplicialMap& f, const CohomologyPresentation& target_cohomology,
                       const CohomologyPresentation& source_cohomology);

/// Preimage coordinates scaled by `denominator` (1 except over Q).
struct ImageWitness {
  std::vector<Integer> coordinates;
  Integer denominator = 1;
};

/// Solves map.matrix * w = target modulo the codomain relations.
std::optional<ImageWitness> member_of_image(const CohomologyClass& target, const InducedMap& map);

/// Canonical representative of x modulo m (m = 0 leaves x unchanged).
Integer reduce_mod(const Integer& x, const Integer& m);

}  // namespace cechspan
