#include <catch2/catch_amalgamated.hpp>

#include "cechspan/fixtures.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace cechspan;
namespace fx = cechspan::fixtures;

TEST_CASE("volumes are exact") {
  const std::vector<Point> tri{{Rational(0), Rational(0), Rational(0)},
                               {Rational(1), Rational(0), Rational(0)},
                               {Rational(0), Rational(1), Rational(0)}};
  CHECK(squared_volume(tri) == Rational(1, 4));
  const std::vector<Point> eq{{Rational(0), Rational(0), Rational(0)},
                              {Rational(2), Rational(0), Rational(0)},
                              {Rational(1), Rational(1), Rational(1)}};
  const auto k = SimplicialComplex::from_simplices({{0, 1, 2}}, 3, {{0, eq[0]}, {1, eq[1]}, {2, eq[2]}});
  CHECK(simplex_volume(k, {0, 1, 2}) == RootSum::sqrt_of(2));
  CHECK((RootSum::sqrt_of(8) - RootSum::sqrt_of(2).scaled(2)).is_zero());
  CHECK(RootSum::sqrt_of(2) < RootSum(Rational(3, 2)));
}

TEST_CASE("narrowest station disk minimizes the pinched torus") {
  const auto t = fx::pinched_torus();
  const auto want = t.station_disks[t.narrowest_station];
  for (auto method : {Method::Exhaustive, Method::BranchAndBound}) {
    const auto r = minimize(t.instance, method, 1);
    REQUIRE(r.feasible);
    CHECK(r.chosen == want);
    CHECK(r.span_minimal);
    CHECK(r.convex_hull == std::optional<bool>(true));
  }
}

TEST_CASE("search methods agree with brute force on random instances") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 25; ++seed) {
    const auto inst = testing_support::random_instance(seed);
    if (!inst) continue;
    ++checked;
    INFO("seed " << seed);
    const auto brute = oracle::brute_minimum(*inst);
    const auto ex = minimize(*inst, Method::Exhaustive, 1);
    const auto bb = minimize(*inst, Method::BranchAndBound, 1);
    const auto gr = minimize(*inst, Method::GreedyPeel, 1);
    REQUIRE(ex.feasible == brute.has_value());
    CHECK(bb.feasible == ex.feasible);
    CHECK(gr.feasible == ex.feasible);
    if (!ex.feasible) continue;
    CHECK(ex.weight == *brute);
    CHECK(bb.weight == ex.weight);
    CHECK(!(gr.weight < ex.weight));
    for (const auto* r : {&ex, &bb, &gr}) CHECK(span_minimality_check(*r, *inst));
  }
}

TEST_CASE("feasibility is monotone in the chosen cells") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto inst = testing_support::random_instance(seed, 8);
    if (!inst) continue;
    const auto cand = inst->candidates();
    SpanOracle o(inst->ambient, inst->boundary, 2, inst->ring, inst->L);
    for (std::uint64_t mask = 0; mask < (1u << cand.size()); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (mask >> i & 1) s.push_back(cand[i]);
      if (!o.spans(inst->complex_of(s))) continue;
      for (std::size_t extra = 0; extra < cand.size(); ++extra) {
        if (mask >> extra & 1) continue;
        auto t = s;
        t.push_back(cand[extra]);
        std::sort(t.begin(), t.end());
        CHECK(o.spans(inst->complex_of(t)));
      }
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  const auto t = fx::pinched_torus();
  const auto one = minimize(t.instance, Method::BranchAndBound, 1);
  const auto many = minimize(t.instance, Method::BranchAndBound, 4);
  CHECK(describe(one, t.instance) == describe(many, t.instance));
}

TEST_CASE("named instances") {
  for (const auto& e : fx::plateau_instances()) {
    INFO(e.name);
    const auto r = minimize(e.instance, Method::Exhaustive, 1);
    if (!e.in_hull) continue;
    REQUIRE(r.feasible);
    CHECK(span_minimality_check(r, e.instance));
    CHECK(convex_hull_check(r, e.instance));
  }
}

TEST_CASE("infeasible instances are a result") {
  const Rational one(1);
  const auto square = fx::circle(0, 4, one, Rational(0));
  const auto far = fx::disk(10, 4, one, Rational(5), 20);
  const auto amb = unite(square, far);
  const auto inst = SpanningInstance::make(amb, square, 2, CoefficientSpec::integers(),
                                           canonical_L(square, 2, CoefficientSpec::integers()));
  const auto r = minimize(inst, Method::BranchAndBound, 1);
  CHECK_FALSE(r.feasible);
  CHECK(r.failing_element.has_value());
}

TEST_CASE("method names") {
  CHECK(parse_method("bnb") == Method::BranchAndBound);
  CHECK(parse_method("greedy_peel") == Method::GreedyPeel);
  CHECK_THROWS_AS(parse_method("annealing"), ParseError);
}
