#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cechspan/fixtures.hpp"
#include "cechspan/verify.hpp"
#include "oracles.hpp"

using namespace cechspan;
namespace fx = cechspan::fixtures;

namespace {

Point P(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

PolyLoop random_loop(Rng& rng, long offset) {
  std::vector<Point> pts;
  const int n = 4 + static_cast<int>(rng.below(3));
  for (int i = 0; i < n; ++i)
    pts.push_back({Rational(static_cast<long>(rng.below(9)) - 4 + offset, 2),
                   Rational(static_cast<long>(rng.below(9)) - 4, 2), Rational(static_cast<long>(rng.below(9)) - 4, 3)});
  return PolyLoop::make(pts);
}

}  // namespace

TEST_CASE("reference loop pairs") {
  for (const auto& p : fx::reference_loop_pairs()) {
    INFO(p.name);
    const long lk = linking_number(p.a, p.b);
    CHECK(std::labs(lk) == p.expected_abs);
    CHECK(std::lround(oracle::gauss_linking(p.a, p.b)) == lk);
  }
}

TEST_CASE("linking is symmetric, reverses with orientation and ignores translation of both") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 20 && seed < 2000; ++seed) {
    Rng rng(seed);
    const auto a = random_loop(rng, 0);
    const auto b = random_loop(rng, static_cast<long>(rng.below(3)));
    if (loops_intersect(a, b)) continue;
    ++checked;
    const long lk = linking_number(a, b);
    CHECK(linking_number(b, a) == lk);
    CHECK(linking_number(a.reversed(), b) == -lk);
    const Point shift{Rational(3, 7), Rational(-2), Rational(5, 3)};
    CHECK(linking_number(a.translated(shift), b.translated(shift)) == lk);
    std::set<long> seen;
    for (const auto& d : projection_directions())
      if (auto v = linking_number_along(a, b, d)) seen.insert(*v);
    CHECK(seen.size() <= 1);
  }
  CHECK(checked == 20);
}

TEST_CASE("intersecting loops are rejected") {
  const auto a = PolyLoop::make({P(0, 0, 0), P(2, 0, 0), P(2, 2, 0)});
  const auto b = PolyLoop::make({P(1, 0, -1), P(1, 0, 1), P(1, -1, 0)});
  CHECK(loops_intersect(a, b));
  CHECK_THROWS_AS(linking_number(a, b), PreconditionError);
}

TEST_CASE("repeated loop doubles the linking number") {
  const auto hopf = fx::reference_loop_pairs().front();
  CHECK(linking_number(hopf.a.repeated(2), hopf.b) == 2 * linking_number(hopf.a, hopf.b));
}

TEST_CASE("profiled probe loops meet every spanning set of the three rings") {
  const auto r = fx::three_rings();
  for (const auto* x : {&r.x1, &r.x2, &r.x3}) {
    const auto outcomes = duality_necessity_check(*x, r.a, r.probe_loops);
    std::size_t meets = 0;
    for (const auto& o : outcomes) {
      CHECK(o.status != DualityOutcome::Status::Misses);
      meets += o.status == DualityOutcome::Status::Meets;
    }
    CHECK(meets == 6);
  }
}

TEST_CASE("loops of a closed curve complex follow its components") {
  const auto r = fx::three_rings();
  const auto loops = loops_of(r.a);
  REQUIRE(loops.size() == 3);
  for (const auto& l : loops) CHECK(l.size() == 4);
}
