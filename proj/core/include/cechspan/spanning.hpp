#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cechspan/cohomology.hpp"
#include "cechspan/complex.hpp"

namespace cechspan {

/// Raised by canonical_L when the boundary is not a closed orientable manifold over the ring.
class ManifoldPreconditionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Raised when a lemma-style operation's combinatorial hypothesis fails.
class HypothesisError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Finite set of nonzero classes of one presentation, sorted and duplicate free.
struct ClassSet {
  std::uint64_t fingerprint = 0;
  std::vector<CohomologyClass> elements;

  /// Validates membership in `p`, drops duplicates, rejects the zero class.
  static ClassSet make(const CohomologyPresentation& p, std::vector<CohomologyClass> elements);
  /// Every nonzero class of a finite presentation.
  static ClassSet all_nonzero(const CohomologyPresentation& p, std::size_t limit = 1u << 20);

  bool empty() const noexcept { return elements.empty(); }
  std::size_t size() const noexcept { return elements.size(); }
  bool contains(const CohomologyClass& c) const;
};

/// The restriction ι*: H̃^{m-1}(X) -> H̃^{m-1}(A) together with its image.
/// K*(X, A) is the complement of the image.
struct CoboundaryReport {
  std::uint64_t pair_fingerprint = 0;
  int m = 1;
  InducedMap restriction;
  /// Images of the generators of H̃^{m-1}(X).
  std::vector<CohomologyClass> image_generators;
  /// Full listings, present when H̃^{m-1}(A) is finite and small enough.
  std::optional<std::vector<CohomologyClass>> image;
  std::optional<std::vector<CohomologyClass>> coboundary;

  const CohomologyPresentation& part_cohomology() const noexcept { return restriction.codomain; }
  bool in_image(const CohomologyClass& c) const;
  bool in_coboundary(const CohomologyClass& c) const { return !in_image(c); }
};

CoboundaryReport algebraic_coboundary(const InclusionPair& pair, int m, const CoefficientSpec& ring,
                                      std::size_t enumeration_limit = 1u << 16);

struct SpanQuery {
  InclusionPair pair;
  int m = 1;
  CoefficientSpec ring = CoefficientSpec::integers();
  ClassSet L;
};

struct ElementCertificate {
  CohomologyClass element;
  /// Preimage in H̃^{m-1}(X) when the element is hit (the query then fails).
  std::optional<ImageWitness> preimage;
};

struct SpanVerdict {
  bool spans = true;
  std::vector<ElementCertificate> certificates;
};

SpanVerdict spans(const SpanQuery& q);
bool spans(const SimplicialComplex& x, const SimplicialComplex& a, int m, const CoefficientSpec& ring, const ClassSet& L);

/// Per-component generators of H^{m-1}(A_i) ≅ R times the units of R (one
/// representative over Q); for m = 1 projected to H̃^0(A) with zeros dropped.
ClassSet canonical_L(const SimplicialComplex& a, int m, const CoefficientSpec& ring);

/// Preimage of L_A under (g|_A)*: H̃^{m-1}(B) -> H̃^{m-1}(A), where g_on_part maps A into B.
/// Refuses ("non-enumerable preimage") when the preimage may be infinite.
ClassSet pushforward_L(const SimplicialMap& g_on_part, const ClassSet& L_A, int m, const CoefficientSpec& ring);

struct CompetitorResult {
  SimplicialComplex image;
  bool spans_before = false;
  bool spans_after = false;
};

/// g(X) for a simplicial self-map of U fixing A; throws if g moves a vertex of A
/// and raises a logic_error if spanning is lost.
CompetitorResult competitor(const SimplicialMap& g, const SimplicialComplex& x, const SimplicialComplex& a, int m,
                            const CoefficientSpec& ring, const ClassSet& L);

struct GluePiece {
  SimplicialComplex x;
  SimplicialComplex a;
  ClassSet L;
};

struct GlueVerdict {
  bool hypothesis_met = false;
  std::string detail;
  /// Direct computation of spans(∪ X_r, A, L); only meaningful when the hypothesis holds.
  bool spans = false;
};

/// Checks that every piece spans its L_r and the preimage condition on
/// B = A ∪ ⋃ A_r by enumeration, then decides spans(∪ X_r, A, L) directly.
GlueVerdict glue_spans(const std::vector<GluePiece>& pieces, const SimplicialComplex& a, const ClassSet& L, int m,
                       const CoefficientSpec& ring);

struct DecompositionPiece {
  SimplicialComplex x;
  SimplicialComplex a;
};

/// {x ∈ H̃^{m-1}(A) : every preimage in H̃^{m-1}(B) restricts into some K*(X_r, A_r)}.
/// Throws HypothesisError naming the offending piece(s).
std::vector<CohomologyClass> coboundary_decomposition(const std::vector<DecompositionPiece>& pieces,
                                                      const SimplicialComplex& a, int m, const CoefficientSpec& ring);

struct Region {
  std::vector<Simplex> interior;  // simplices of C all of whose cofaces in the ambient lie in C
  SimplicialComplex frontier;     // C minus the interior
};

/// Combinatorial interior and frontier of C inside `ambient`.
Region region(const SimplicialComplex& ambient, const SimplicialComplex& c);

struct SurgeryResult {
  SimplicialComplex complex;
  SimplicialComplex inner;           // X ∩ C
  SimplicialComplex inner_frontier;  // X ∩ fr C
  bool spans = false;
};

/// (X ∖ C̊) ∪ Y. Preconditions (each reported separately): X spans L over A,
/// C̊ ∩ A = ∅, Y ⊇ X ∩ fr C, and Y spans K*(X ∩ C, X ∩ fr C) (finite rings).
SurgeryResult surgery(const SimplicialComplex& ambient, const SimplicialComplex& x, const SimplicialComplex& a,
                      const ClassSet& L, const SimplicialComplex& c, const SimplicialComplex& y, int m,
                      const CoefficientSpec& ring);

/// Decides spans for many X between A and a fixed ambient U by testing whether
/// a representative cocycle of each L element extends over X. Independent of
/// the induced-map route used by spans().
class SpanOracle {
 public:
  SpanOracle(SimplicialComplex ambient, SimplicialComplex part, int m, CoefficientSpec ring, const ClassSet& L);

  bool spans(const SimplicialComplex& x) const;
  /// X = A ∪ closure of the chosen ambient m-simplices (indices into ambient.simplices(m)).
  bool spans_cells(const std::vector<std::size_t>& cells) const;
  /// Index of the first L element whose representative extends over X.
  std::optional<std::size_t> first_extending(const SimplicialComplex& x) const;

  const SimplicialComplex& ambient() const noexcept { return ambient_; }
  const SimplicialComplex& part() const noexcept { return part_; }

 private:
  std::optional<std::size_t> first_extending_faces(const std::vector<std::size_t>& top_cells) const;

  SimplicialComplex ambient_;
  SimplicialComplex part_;
  int m_;
  CoefficientSpec ring_;
  std::vector<Cochain> reps_;            // on ambient (m-1)-simplices, zero off A
  std::vector<bool> face_in_part_;       // per ambient (m-1)-simplex
  std::vector<std::vector<std::pair<std::size_t, int>>> boundary_;  // per ambient m-simplex
};

/// Solvability of M u = b for several right-hand sides over the ring.
std::vector<bool> solvable(const IntMatrix& m, const std::vector<std::vector<Integer>>& rhs, const CoefficientSpec& ring);

}  // namespace cechspan
