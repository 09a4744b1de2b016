// One PASS/FAIL line per acceptance criterion, with wall time against its budget.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "cechspan/fixtures.hpp"
#include "cechspan/verify.hpp"
#include "instances.hpp"

using namespace cechspan;
namespace fx = cechspan::fixtures;

namespace {

const auto Z = CoefficientSpec::integers();

struct Failure {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

void paper_examples() {
  const auto r = fx::three_rings();
  const auto L = canonical_L(r.a, 2, Z);
  expect(spans(r.x1, r.a, 2, Z, L), "X1 does not span L^Z");
  expect(spans(r.x2, r.a, 2, Z, L), "X2 does not span L^Z");
  expect(spans(r.x3, r.a, 2, Z, L), "X3 does not span L^Z");

  const auto t = fx::pinched_torus();
  const auto best = minimize(t.instance, Method::Exhaustive, 0);
  expect(best.feasible, "torus instance infeasible");
  expect(best.chosen == t.station_disks[t.narrowest_station], "torus minimizer is not the narrowest station disk");

  for (int n : {2, 3}) {
    const auto b = fx::ball(n);
    for (long long q : {2, 3}) {
      const auto ring = CoefficientSpec::integers_mod(q);
      const auto full = algebraic_coboundary(InclusionPair::make(b.ball, b.sphere), n, ring);
      const auto shell = algebraic_coboundary(InclusionPair::make(b.shell, b.sphere), n, ring);
      expect(full.coboundary && full.coboundary->size() + 1 == *full.part_cohomology().order(),
             "full " + std::to_string(n) + "-ball: K* is not every nonzero class");
      expect(shell.coboundary && shell.coboundary->empty(), "punctured " + std::to_string(n) + "-ball: K* not empty");
    }
  }

  const auto m = fx::moebius();
  expect(spans(m.band, m.boundary, 2, Z, canonical_L(m.boundary, 2, Z)), "Möbius band does not span its rim");
  const auto map = induced_map(InclusionPair::make(m.band, m.boundary), 1, Z, true);
  expect(map.matrix.rows() == 1 && map.matrix.cols() == 1 && abs(map.matrix(0, 0)) == 2,
         "Möbius restriction on H^1 is not ±2");
}

std::pair<int, std::string> run_cli(const std::string& args) {
  FILE* pipe = popen((std::string(CECHSPAN_CLI) + " " + args + " 2>&1").c_str(), "r");
  if (!pipe) throw Failure{"cannot start the CLI"};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void lemma_suite() {
  for (const char* ring : {"Z2", "Z3"}) {
    const auto [code, out] = run_cli(std::string("verify --id all --seeds 0..49 --ring ") + ring);
    expect(code == 0, std::string("verify over ") + ring + " exited " + std::to_string(code));
    expect(out.find(" fail=0\nresult: ok\n") != std::string::npos, std::string("FAIL verdicts over ") + ring);
    const std::regex line("id (\\S+): pass=(\\d+) ");
    std::size_t ids = 0;
    for (std::sregex_iterator it(out.begin(), out.end(), line), end; it != end; ++it) {
      ++ids;
      expect(std::stoul((*it)[2]) > 0, (*it)[1].str() + " never met its hypotheses over " + ring);
    }
    expect(ids == lemma_ids().size(), "report lists " + std::to_string(ids) + " ids");
  }
}

void oracle_equivalence() {
  int done = 0;
  for (std::uint64_t seed = 1000; done < 25; ++seed) {
    const auto inst = testing_support::random_instance(seed, 12);
    if (!inst) continue;
    ++done;
    const auto ex = minimize(*inst, Method::Exhaustive, 0);
    const auto bb = minimize(*inst, Method::BranchAndBound, 0);
    const auto gr = minimize(*inst, Method::GreedyPeel, 0);
    const auto tag = "instance seed " + std::to_string(seed);
    expect(ex.feasible == bb.feasible && ex.feasible == gr.feasible, tag + ": feasibility disagrees");
    if (!ex.feasible) continue;
    expect(bb.weight == ex.weight, tag + ": branch and bound weight differs");
    expect(!(gr.weight < ex.weight), tag + ": greedy beat exhaustive");
    for (const auto* r : {&ex, &bb, &gr}) expect(span_minimality_check(*r, *inst), tag + ": output not span-minimal");
  }
}

void engine_soundness() {
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    std::uniform_int_distribution<int> val(-6, 6);
    IntMatrix m(dim(gen), dim(gen));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = val(gen);
    const auto s = smith_normal_form(m);
    expect(s.u * m * s.v == s.d, "UMV != D");
    const auto d = s.diagonal();
    for (std::size_t k = 0; k + 1 < d.size(); ++k)
      expect(d[k] == 0 ? d[k + 1] == 0 : d[k + 1] % d[k] == 0, "diagonal is not a divisibility chain");
  }

  const auto corpus = fx::corpus();
  for (const auto& [name, k] : corpus)
    for (int deg = -1; deg + 1 <= k.dimension(); ++deg) {
      const auto a = coboundary_matrix(k, deg, Z, true), b = coboundary_matrix(k, deg + 1, Z, true);
      if (a.rows() && b.rows()) expect((b * a).is_zero(), name + ": δ∘δ ≠ 0");
    }

  int chains = 0;
  for (std::uint64_t seed = 0; chains < 50; ++seed) {
    Rng rng(seed);
    const auto x = random_complex_exact(rng, 4 + static_cast<int>(rng.below(3)), 2, 0.6);
    auto sub = [&](const SimplicialComplex& k) {
      std::vector<Simplex> g;
      for (const auto& f : k.facets())
        if (rng.chance(0.6)) g.push_back(f);
      return g.empty() ? SimplicialComplex() : subcomplex(k, g);
    };
    const auto y = sub(x), w = sub(y);
    if (w.empty()) continue;
    ++chains;
    for (int deg = 0; deg <= 1; ++deg) {
      const auto xy = induced_map(InclusionPair::make(x, y), deg, Z, true);
      const auto yw = induced_map(InclusionPair::make(y, w), deg, Z, true);
      const auto xw = induced_map(InclusionPair::make(x, w), deg, Z, true);
      for (std::size_t i = 0; i < xy.domain.rank(); ++i) {
        std::vector<Integer> e(xy.domain.rank(), 0);
        e[i] = 1;
        const auto c = make_class(xy.domain, e);
        expect(yw.apply(xy.apply(c)) == xw.apply(c), "functoriality fails on chain " + std::to_string(seed));
      }
    }
  }

  for (const auto& [name, y] : corpus) {
    if (y.empty()) continue;
    const auto cyl = cylinder(y, 0);
    for (int deg = 0; deg <= y.dimension(); ++deg)
      expect(induced_map(cyl.bottom, deg, Z, false).matrix == induced_map(cyl.top, deg, Z, false).matrix,
             name + ": cylinder ends differ in degree " + std::to_string(deg));
  }
}

void linking() {
  for (const auto& p : fx::reference_loop_pairs())
    expect(std::labs(linking_number(p.a, p.b)) == p.expected_abs, p.name + ": wrong linking number");

  Rng rng(77);
  int pairs = 0;
  while (pairs < 20) {
    auto loop = [&](long dx) {
      std::vector<Point> pts;
      for (int i = 0; i < 5; ++i)
        pts.push_back({Rational(static_cast<long>(rng.below(9)) - 4 + dx, 2), Rational(static_cast<long>(rng.below(9)) - 4, 2),
                       Rational(static_cast<long>(rng.below(9)) - 4, 3)});
      return PolyLoop::make(pts);
    };
    const auto a = loop(0), b = loop(1);
    if (loops_intersect(a, b)) continue;
    ++pairs;
    const long lk = linking_number(a, b);
    expect(linking_number(b, a) == lk, "linking number is not symmetric");
    for (const auto& d : projection_directions())
      if (auto v = linking_number_along(a, b, d)) expect(*v == lk, "projection direction changes the linking number");
  }

  const auto r = fx::three_rings();
  for (const auto& x : {r.x1, r.x2, r.x3, unite(r.x1, r.disk_middle), unite(r.x3, r.disk_top)}) {
    std::size_t meets = 0;
    for (const auto& o : duality_necessity_check(x, r.a, r.probe_loops)) {
      expect(o.status != DualityOutcome::Status::Misses, "a profiled loop misses a spanning set");
      meets += o.status == DualityOutcome::Status::Meets;
    }
    expect(meets > 0, "no profiled loop");
  }
}

void discrete_theorem() {
  std::size_t checked = 0;
  for (const auto& e : fx::plateau_instances()) {
    if (!e.in_hull) continue;
    const auto r = minimize(e.instance, Method::Exhaustive, 0);
    expect(r.feasible, e.name + ": no minimizer");
    expect(span_minimality_check(r, e.instance), e.name + ": minimizer has a proper spanning subset");
    expect(convex_hull_check(r, e.instance), e.name + ": minimizer leaves the convex hull of A");
    ++checked;
  }
  expect(checked > 0, "no in-hull fixture");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double budget;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "example suite", 10, paper_examples},
      {2, "lemma suite over Z2 and Z3", 60, lemma_suite},
      {3, "search oracle equivalence", 120, oracle_equivalence},
      {4, "engine soundness", 30, engine_soundness},
      {5, "linking", 10, linking},
      {6, "discrete minimizer existence, minimality, hull", 30, discrete_theorem},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      c.run();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && dt > c.budget) why = "over the time budget";
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", dt, c.budget);
    std::cout << "criterion " << c.number << " (" << c.name << "): " << (why.empty() ? "PASS" : "FAIL") << " [" << timing
              << "]" << (why.empty() ? "" : " " + why) << "\n";
    failures += !why.empty();
  }
  return failures ? 1 : 0;
}
