#include <catch2/catch_amalgamated.hpp>

#include "cechspan/verify.hpp"

using namespace cechspan;

TEST_CASE("catalog lists every lemma id once") {
  const auto& ids = lemma_ids();
  CHECK(ids.size() == 24);
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(is_lemma_id("L17Apre"));
  CHECK_FALSE(is_lemma_id("L99"));
}

TEST_CASE("replay lines round trip") {
  LemmaCase c{"L13A", 17, CoefficientSpec::integers_mod(3), true};
  const auto back = parse_replay("# comment\n\n" + replay_line(c) + "\n");
  REQUIRE(back.size() == 1);
  CHECK(back[0].id == "L13A");
  CHECK(back[0].seed == 17);
  CHECK(back[0].ring.name() == "Z3");
  CHECK(back[0].inject_fault);
  CHECK_THROWS_AS(parse_replay("case L99 1 Z2\n"), ParseError);
  CHECK_THROWS_AS(parse_replay("case L1A -1 Z2\n"), ParseError);
  CHECK_THROWS_AS(parse_replay("case L1A 1 Z2 extra\n"), ParseError);
}

TEST_CASE("every lemma has a constructed instance with its hypotheses met") {
  for (const auto& id : lemma_ids()) {
    bool met = false;
    for (std::uint64_t seed = 0; seed < 20 && !met; seed += 2) {
      const auto r = verify_lemma({id, seed, CoefficientSpec::integers_mod(2), false});
      INFO(id << " seed " << seed << ": " << r.detail);
      REQUIRE(r.verdict != Verdict::Fail);
      met = r.verdict == Verdict::Pass;
    }
    INFO(id);
    CHECK(met);
  }
}

TEST_CASE("verdicts replay exactly") {
  for (const auto& id : lemma_ids())
    for (std::uint64_t seed : {1u, 6u}) {
      const LemmaCase c{id, seed, CoefficientSpec::integers_mod(3), false};
      const auto a = verify_lemma(c), b = verify_lemma(c);
      CHECK(a.verdict == b.verdict);
      CHECK(a.instance == b.instance);
      CHECK(a.detail == b.detail);
    }
}

TEST_CASE("fault injection reports FAIL with a replay line") {
  const auto s = run_cases({{"L1A", 0, CoefficientSpec::integers_mod(2), true}}, 1);
  CHECK(s.failed == 1);
  CHECK_FALSE(s.ok());
  const auto text = describe(s);
  CHECK(text.find("replay: case L1A 0 Z2 inject-fault") != std::string::npos);
  CHECK(text.find("result: FAIL") != std::string::npos);
}

TEST_CASE("suite output is independent of the thread count") {
  const std::vector<std::string> ids{"L1A", "L8A", "L13A", "ThmFlat"};
  const auto one = run_suite(ids, 0, 9, CoefficientSpec::integers_mod(2), 1);
  const auto three = run_suite(ids, 0, 9, CoefficientSpec::integers_mod(2), 3);
  CHECK(describe(one, true) == describe(three, true));
  CHECK(one.ok());
}

TEST_CASE("empty suite") {
  const auto s = run_suite({}, 0, 49, CoefficientSpec::integers_mod(2));
  CHECK(s.reports.empty());
  CHECK(s.ok());
  CHECK_THROWS_AS(run_suite({"nope"}, 0, 1, CoefficientSpec::integers_mod(2)), PreconditionError);
}

TEST_CASE("rng helpers") {
  Rng a(5), b(5);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
  CHECK_THROWS_AS(r.below(0), PreconditionError);
}
