#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cechspan/complex.hpp"
#include "cechspan/types.hpp"

namespace cechspan {

/// Closed polygonal loop in R^3 with exact coordinates.
class PolyLoop {
 public:
  /// At least three points, all in R^3, consecutive points (cyclically) distinct.
  static PolyLoop make(std::vector<Point> points);

  const std::vector<Point>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  PolyLoop reversed() const;
  PolyLoop translated(const Point& offset) const;
  /// The same loop traversed `times` times.
  PolyLoop repeated(int times) const;

 private:
  explicit PolyLoop(std::vector<Point> p) : points_(std::move(p)) {}
  std::vector<Point> points_;
};

/// The fixed list of projection directions tried in order.
const std::vector<Point>& projection_directions();

/// Half the signed crossing count when projecting along `direction`, or
/// nullopt when that projection is not generic for the pair.
std::optional<long> linking_number_along(const PolyLoop& a, const PolyLoop& b, const Point& direction);

/// Throws PreconditionError when the loops meet.
long linking_number(const PolyLoop& a, const PolyLoop& b);

bool loops_intersect(const PolyLoop& a, const PolyLoop& b);

/// One loop per component of a closed 1-manifold with coordinates in R^3,
/// components in the order of connected_components.
std::vector<PolyLoop> loops_of(const SimplicialComplex& a);

struct DualityOutcome {
  enum class Status { Meets, Misses, Skipped };
  Status status = Status::Skipped;
  std::vector<long> profile;  // linking numbers with the components of A
  std::string detail;
};

std::string to_string(DualityOutcome::Status s);

/// For each loop whose linking profile with the components of A is a single ±1,
/// decides exactly whether the loop meets X. Requires X ⊇ A with coordinates in
/// R^3 and spans(X, A, m = 2) over Z with the canonical class set.
std::vector<DualityOutcome> duality_necessity_check(const SimplicialComplex& x, const SimplicialComplex& a,
                                                    const std::vector<PolyLoop>& loops);

}  // namespace cechspan
