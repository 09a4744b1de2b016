#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cechspan/measure.hpp"
#include "cechspan/spanning.hpp"

namespace cechspan {

enum class WeightKind { Volume, Unit };
enum class Method { Exhaustive, BranchAndBound, GreedyPeel };

std::string to_string(Method m);
/// "exhaustive", "bnb" (or "branch_and_bound"), "greedy" (or "greedy_peel").
Method parse_method(const std::string& text);

/// Search for a lightest X = A ∪ closure(S), S a set of ambient m-simplices,
/// with spans(X, A, L).
struct SpanningInstance {
  SimplicialComplex ambient;
  SimplicialComplex boundary;
  int m = 2;
  CoefficientSpec ring = CoefficientSpec::integers();
  ClassSet L;
  /// One positive weight per ambient m-simplex, canonical order.
  std::vector<RootSum> weights;

  static SpanningInstance make(SimplicialComplex ambient, SimplicialComplex boundary, int m, CoefficientSpec ring,
                               ClassSet L, WeightKind kind = WeightKind::Volume);
  static SpanningInstance make(SimplicialComplex ambient, SimplicialComplex boundary, int m, CoefficientSpec ring,
                               ClassSet L, std::vector<RootSum> weights);

  /// Indices (into ambient.simplices(m)) of the m-simplices outside the boundary.
  std::vector<std::size_t> candidates() const;
  SimplicialComplex complex_of(const std::vector<std::size_t>& cells) const;
  RootSum weight_of(const std::vector<std::size_t>& cells) const;
};

struct MinimizerResult {
  Method method = Method::Exhaustive;
  bool feasible = false;
  /// Chosen candidate m-simplices, canonical order.
  std::vector<Simplex> chosen;
  std::vector<std::size_t> chosen_indices;
  SimplicialComplex x;
  RootSum weight;
  /// Direct spans verdict on x (independent of the search oracle).
  SpanVerdict verdict;
  bool span_minimal = false;
  std::optional<bool> convex_hull;  // absent without coordinates
  bool optimal = false;             // set by exhaustive and branch and bound
  /// When infeasible: the L element that already extends over the whole ambient.
  std::optional<CohomologyClass> failing_element;
  std::size_t evaluations = 0;
};

/// Exhaustive and branch and bound require at most `max_exact_candidates` candidates.
inline constexpr std::size_t max_exact_candidates = 24;

MinimizerResult minimize(const SpanningInstance& inst, Method method, std::size_t threads = 0);

/// Deleting any single chosen cell breaks spanning.
bool span_minimality_check(const MinimizerResult& result, const SpanningInstance& inst);
/// Every vertex of the m-core of X outside A lies in the convex hull of A's vertices.
bool convex_hull_check(const MinimizerResult& result, const SpanningInstance& inst);

/// Plain-text report, deterministic.
std::string describe(const MinimizerResult& r, const SpanningInstance& inst);

}  // namespace cechspan
