#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "cechspan/complex.hpp"
#include "cechspan/types.hpp"

namespace cechspan {

/// Exact real number Σ c_i √n_i with rational c_i and positive integer n_i,
/// no two n_i in the same square class (so the terms are linearly independent
/// over Q and zero has only the empty representation).
class RootSum {
 public:
  RootSum() = default;
  RootSum(const Rational& r);  // NOLINT(google-explicit-constructor)
  static RootSum sqrt_of(const Rational& s);

  RootSum& operator+=(const RootSum& other);
  friend RootSum operator+(RootSum a, const RootSum& b) { return a += b; }
  friend RootSum operator-(RootSum a, const RootSum& b) { return a += b.scaled(-1); }
  RootSum scaled(const Rational& f) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  /// -1, 0 or 1, decided exactly.
  int sign() const;
  double approx() const;
  /// [lo, hi] containing the value, hi - lo <= (number of terms) * |c|max * 2^-bits.
  std::pair<Rational, Rational> enclose(unsigned bits) const;
  /// (coefficient, radicand) pairs ordered by radicand; radicand 1 is the rational part.
  const std::vector<std::pair<Rational, Integer>>& terms() const noexcept { return terms_; }
  std::string str() const;

  friend bool operator==(const RootSum& a, const RootSum& b) { return (a - b).is_zero(); }
  friend std::strong_ordering operator<=>(const RootSum& a, const RootSum& b);

 private:
  void add_term(Rational c, Integer n);
  std::vector<std::pair<Rational, Integer>> terms_;
};

/// Squared m-volume of the simplex spanned by m+1 points (Cayley–Menger determinant).
Rational squared_volume(const std::vector<Point>& points);
RootSum simplex_volume(const SimplicialComplex& k, const Simplex& s);
/// Sum of the volumes of the m-simplices; throws PreconditionError without coordinates.
RootSum total_volume(const SimplicialComplex& k, int m);

}  // namespace cechspan
