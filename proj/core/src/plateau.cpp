#include "cechspan/plateau.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "cechspan/geometry.hpp"
#include "cechspan/parallel.hpp"

namespace cechspan {

std::string to_string(Method m) {
  switch (m) {
    case Method::Exhaustive: return "exhaustive";
    case Method::BranchAndBound: return "bnb";
    case Method::GreedyPeel: return "greedy";
  }
  return "?";
}

Method parse_method(const std::string& text) {
  if (text == "exhaustive") return Method::Exhaustive;
  if (text == "bnb" || text == "branch_and_bound") return Method::BranchAndBound;
  if (text == "greedy" || text == "greedy_peel") return Method::GreedyPeel;
  throw ParseError("unknown method '" + text + "'", 0);
}

SpanningInstance SpanningInstance::make(SimplicialComplex ambient, SimplicialComplex boundary, int m,
                                        CoefficientSpec ring, ClassSet L, WeightKind kind) {
  std::vector<RootSum> w;
  for (const auto& s : ambient.simplices(m)) {
    if (kind == WeightKind::Unit) w.emplace_back(Rational(1));
    else w.push_back(simplex_volume(ambient, s));
  }
  return make(std::move(ambient), std::move(boundary), m, ring, std::move(L), std::move(w));
}

SpanningInstance SpanningInstance::make(SimplicialComplex ambient, SimplicialComplex boundary, int m,
                                        CoefficientSpec ring, ClassSet L, std::vector<RootSum> weights) {
  if (m < 1) throw PreconditionError("m must be at least 1");
  if (!boundary.is_subcomplex_of(ambient)) throw PreconditionError("boundary is not contained in the ambient complex");
  if (weights.size() != ambient.count(m)) throw PreconditionError("one weight per ambient m-simplex is required");
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i].sign() <= 0)
      throw PreconditionError("non-positive weight on " + to_string(ambient.simplices(m)[i]));
  if (!L.empty() && L.fingerprint != cohomology(boundary, m - 1, ring, true).fingerprint)
    throw PreconditionError("class set does not belong to the reduced cohomology of the boundary");
  SpanningInstance inst;
  inst.ambient = std::move(ambient);
  inst.boundary = std::move(boundary);
  inst.m = m;
  inst.ring = ring;
  inst.L = std::move(L);
  inst.weights = std::move(weights);
  return inst;
}

std::vector<std::size_t> SpanningInstance::candidates() const {
  std::vector<std::size_t> out;
  const auto& tops = ambient.simplices(m);
  for (std::size_t i = 0; i < tops.size(); ++i)
    if (!boundary.contains(tops[i])) out.push_back(i);
  return out;
}

SimplicialComplex SpanningInstance::complex_of(const std::vector<std::size_t>& cells) const {
  std::vector<Simplex> gens = boundary.facets();
  for (auto c : cells) gens.push_back(ambient.simplices(m).at(c));
  if (gens.empty()) return SimplicialComplex();
  return subcomplex(ambient, gens);
}

RootSum SpanningInstance::weight_of(const std::vector<std::size_t>& cells) const {
  RootSum w;
  for (auto c : cells) w += weights.at(c);
  return w;
}

namespace {

// Candidate weights with a floating-point filter in front of exact comparison.
class WeightTable {
 public:
  explicit WeightTable(const SpanningInstance& inst) : inst_(inst) {
    for (const auto& w : inst.weights) approx_.push_back(w.approx());
  }
  double approx(const std::vector<std::size_t>& cells) const {
    double s = 0;
    for (auto c : cells) s += approx_[c];
    return s;
  }
  /// Sign of weight(a) - weight(b).
  int compare(const std::vector<std::size_t>& a, double wa, const std::vector<std::size_t>& b, double wb) const {
    const double tol = 1e-9 * (1.0 + std::max(std::abs(wa), std::abs(wb)));
    if (wa < wb - tol) return -1;
    if (wa > wb + tol) return 1;
    return (inst_.weight_of(a) - inst_.weight_of(b)).sign();
  }

 private:
  const SpanningInstance& inst_;
  std::vector<double> approx_;
};

struct Best {
  bool found = false;
  std::vector<std::size_t> cells;
  double approx = 0;
};

// (weight, then lexicographic cell list) ordering.
bool better(const WeightTable& w, const std::vector<std::size_t>& cells, double approx, const Best& best) {
  if (!best.found) return true;
  const int c = w.compare(cells, approx, best.cells, best.approx);
  return c < 0 || (c == 0 && cells < best.cells);
}

Best run_exhaustive(const SpanningInstance& inst, const SpanOracle& oracle, const std::vector<std::size_t>& cand,
                    std::size_t threads, std::size_t& evaluations) {
  const WeightTable weights(inst);
  const std::size_t n = cand.size();
  const std::uint64_t total = std::uint64_t(1) << n;
  std::vector<Best> local(std::max<std::size_t>(threads, 1));
  std::vector<std::size_t> evals(local.size(), 0);
  parallel_chunks(static_cast<std::size_t>(total), threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    Best& best = local[w];
    std::vector<std::size_t> cells;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      cells.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) cells.push_back(cand[i]);
      const double a = weights.approx(cells);
      if (!better(weights, cells, a, best)) continue;
      ++evals[w];
      if (oracle.spans_cells(cells)) best = {true, cells, a};
    }
  });
  Best best;
  for (const auto& b : local)
    if (b.found && better(weights, b.cells, b.approx, best)) best = b;
  for (auto e : evals) evaluations += e;
  return best;
}

Best run_branch_and_bound(const SpanningInstance& inst, const SpanOracle& oracle, const std::vector<std::size_t>& cand,
                          std::size_t& evaluations) {
  const WeightTable weights(inst);
  Best best;
  std::vector<std::size_t> included;
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    const double lb = weights.approx(included);
    if (best.found && weights.compare(included, lb, best.cells, best.approx) > 0) return;
    std::vector<std::size_t> upper = included;
    upper.insert(upper.end(), cand.begin() + static_cast<std::ptrdiff_t>(i), cand.end());
    std::sort(upper.begin(), upper.end());
    ++evaluations;
    if (!oracle.spans_cells(upper)) return;  // no subset of an infeasible set is feasible
    ++evaluations;
    if (oracle.spans_cells(included)) {
      if (better(weights, included, lb, best)) best = {true, included, lb};
      return;  // supersets are strictly heavier
    }
    if (i == cand.size()) return;
    visit(i + 1);
    included.push_back(cand[i]);
    visit(i + 1);
    included.pop_back();
  };
  visit(0);
  return best;
}

Best run_greedy_peel(const SpanningInstance& inst, const SpanOracle& oracle, const std::vector<std::size_t>& cand,
                     std::size_t& evaluations) {
  const WeightTable weights(inst);
  std::vector<std::size_t> current = cand;
  ++evaluations;
  if (!oracle.spans_cells(current)) return {};
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> order = current;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return weights.compare({a}, weights.approx({a}), {b}, weights.approx({b})) > 0;
    });
    for (auto c : order) {
      std::vector<std::size_t> rest;
      for (auto x : current)
        if (x != c) rest.push_back(x);
      ++evaluations;
      if (oracle.spans_cells(rest)) {
        current = std::move(rest);
        changed = true;
        break;
      }
    }
  }
  return {true, current, weights.approx(current)};
}

}  // namespace

MinimizerResult minimize(const SpanningInstance& inst, Method method, std::size_t threads) {
  const auto cand = inst.candidates();
  if (method != Method::GreedyPeel && cand.size() > max_exact_candidates)
    throw PreconditionError(std::to_string(cand.size()) + " candidate cells exceed the limit of " +
                            std::to_string(max_exact_candidates) + " for " + to_string(method));
  if (threads == 0) threads = thread_count();
  const SpanOracle oracle(inst.ambient, inst.boundary, inst.m, inst.ring, inst.L);

  MinimizerResult r;
  r.method = method;
  Best best;
  switch (method) {
    case Method::Exhaustive: best = run_exhaustive(inst, oracle, cand, threads, r.evaluations); break;
    case Method::BranchAndBound: best = run_branch_and_bound(inst, oracle, cand, r.evaluations); break;
    case Method::GreedyPeel: best = run_greedy_peel(inst, oracle, cand, r.evaluations); break;
  }
  if (!best.found) {
    auto idx = oracle.first_extending(inst.complex_of(cand));
    if (!idx) throw std::logic_error("search found no feasible set although the ambient spans");
    r.failing_element = inst.L.elements[*idx];
    return r;
  }
  r.feasible = true;
  r.chosen_indices = best.cells;
  for (auto c : best.cells) r.chosen.push_back(inst.ambient.simplices(inst.m)[c]);
  r.x = inst.complex_of(best.cells);
  r.weight = inst.weight_of(best.cells);
  r.verdict = spans(SpanQuery{InclusionPair::make(r.x, inst.boundary), inst.m, inst.ring, inst.L});
  if (!r.verdict.spans) throw std::logic_error("search oracle and direct spans disagree");
  r.span_minimal = span_minimality_check(r, inst);
  if (inst.ambient.has_coordinates()) r.convex_hull = convex_hull_check(r, inst);
  r.optimal = method != Method::GreedyPeel;
  return r;
}

bool span_minimality_check(const MinimizerResult& result, const SpanningInstance& inst) {
  if (!result.feasible) return false;
  for (std::size_t i = 0; i < result.chosen_indices.size(); ++i) {
    std::vector<std::size_t> rest = result.chosen_indices;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (spans(inst.complex_of(rest), inst.boundary, inst.m, inst.ring, inst.L)) return false;
  }
  return true;
}

bool convex_hull_check(const MinimizerResult& result, const SpanningInstance& inst) {
  if (!inst.ambient.has_coordinates()) throw PreconditionError("convex hull check needs coordinates");
  const auto core = simplicial_core(InclusionPair::make(result.x, inst.boundary), inst.m);
  std::vector<Point> hull;
  for (VertexId v : inst.boundary.vertices()) hull.push_back(inst.ambient.coordinates(v));
  for (VertexId v : core.vertices()) {
    if (inst.boundary.contains_vertex(v)) continue;
    if (!in_convex_hull(inst.ambient.coordinates(v), hull)) return false;
  }
  return true;
}

std::string describe(const MinimizerResult& r, const SpanningInstance& inst) {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "method: " << to_string(r.method) << "\n";
  out << "candidates: " << inst.candidates().size() << "\n";
  out << "feasible: " << yn(r.feasible) << "\n";
  if (!r.feasible) {
    if (r.failing_element) out << "failing-element: " << to_string(*r.failing_element) << "\n";
    return out.str();
  }
  out << "weight: " << r.weight.str() << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r.weight.approx());
  out << "weight-approx: " << buf << "\n";
  out << "chosen: " << r.chosen.size() << "\n";
  for (const auto& s : r.chosen) out << "  cell " << to_string(s) << "\n";
  out << "certificate spans: " << yn(r.verdict.spans) << "\n";
  out << "certificate span-minimal: " << yn(r.span_minimal) << "\n";
  out << "certificate convex-hull: " << (r.convex_hull ? yn(*r.convex_hull) : "n/a") << "\n";
  if (r.convex_hull && !*r.convex_hull) out << "note: core leaves the hull of A (discrete-ambient artifact)\n";
  out << "certificate optimal: " << yn(r.optimal) << "\n";
  return out.str();
}

}  // namespace cechspan
