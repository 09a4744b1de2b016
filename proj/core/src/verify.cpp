#include "cechspan/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cechspan/parallel.hpp"
#include "cechspan/spanning.hpp"
#include "verify_internal.hpp"

namespace cechspan {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::Fail: return "FAIL";
  }
  return "?";
}

std::string replay_line(const LemmaCase& c) {
  std::string s = "case " + c.id + " " + std::to_string(c.seed) + " " + c.ring.name();
  if (c.inject_fault) s += " inject-fault";
  return s;
}

std::vector<LemmaCase> parse_replay(const std::string& text) {
  std::vector<LemmaCase> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string t; words >> t;) w.push_back(t);
    if (w.empty()) continue;
    if (w[0] != "case" || w.size() < 4 || w.size() > 5) throw ParseError("expected 'case <id> <seed> <ring> [inject-fault]'", number);
    LemmaCase c;
    c.id = w[1];
    if (!is_lemma_id(c.id)) throw ParseError("unknown lemma id '" + c.id + "'", number);
    if (w[2].empty() || !std::all_of(w[2].begin(), w[2].end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw ParseError("seed must be a non-negative integer", number);
    try {
      c.seed = std::stoull(w[2]);
      c.ring = CoefficientSpec::parse(w[3]);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), number);
    }
    if (w.size() == 5) {
      if (w[4] != "inject-fault") throw ParseError("unexpected token '" + w[4] + "'", number);
      c.inject_fault = true;
    }
    out.push_back(c);
  }
  return out;
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, fn] : detail::checkers()) v.push_back(id);
    return v;
  }();
  return ids;
}

bool is_lemma_id(const std::string& id) {
  const auto& ids = lemma_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw PreconditionError("Rng::below needs a positive bound");
  const std::uint64_t limit = -n % n;  // reject the biased low range
  for (;;) {
    const std::uint64_t x = next();
    if (x >= limit) return x % n;
  }
}

bool Rng::chance(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }

namespace {

void for_each_subset(int n, int k, const std::function<void(const Simplex&)>& fn) {
  Simplex s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    fn(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace

SimplicialComplex random_complex_exact(Rng& rng, int vertices, int max_dim, double density) {
  if (vertices < 1) throw PreconditionError("random complexes need at least one vertex");
  std::set<Simplex> present;
  std::vector<Simplex> gens;
  for (VertexId v = 0; v < vertices; ++v) {
    present.insert({v});
    gens.push_back({v});
  }
  for (int k = 2; k <= max_dim + 1 && k <= vertices; ++k) {
    for_each_subset(vertices, k, [&](const Simplex& s) {
      const bool draw = rng.chance(density);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        if (!present.count(face)) return;
      }
      if (draw) {
        present.insert(s);
        gens.push_back(s);
      }
    });
  }
  return SimplicialComplex::from_simplices(gens);
}

SimplicialComplex random_complex(std::uint64_t seed, int max_vertices, int max_dim, double density) {
  if (max_vertices < 1 || max_vertices > 8) throw PreconditionError("max_vertices must lie in [1, 8]");
  if (max_dim < 0 || max_dim > 3) throw PreconditionError("max_dim must lie in [0, 3]");
  if (!(density >= 0.0 && density <= 1.0)) throw PreconditionError("density must lie in [0, 1]");
  Rng rng(seed);
  return random_complex_exact(rng, max_vertices, max_dim, density);
}

VerifyReport verify_lemma(const LemmaCase& c) {
  const auto& table = detail::checkers();
  auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == c.id; });
  if (it == table.end()) throw PreconditionError("unknown lemma id '" + c.id + "'");
  Rng rng(fnv1a(c.id) ^ (c.seed * 0x9e3779b97f4a7c15ULL) ^ (static_cast<std::uint64_t>(c.ring.modulus()) << 56) ^
          (static_cast<std::uint64_t>(c.ring.kind()) << 48));
  VerifyReport r;
  r.lemma_case = c;
  try {
    auto res = it->second(c, rng);
    r.verdict = res.verdict;
    r.instance = std::move(res.instance);
    r.detail = std::move(res.detail);
  } catch (const HypothesisError& e) {
    r.verdict = Verdict::HypothesisNotMet;
    r.detail = e.what();
  } catch (const ManifoldPreconditionError& e) {
    r.verdict = Verdict::HypothesisNotMet;
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.verdict = Verdict::Fail;
    r.detail = std::string("exception: ") + e.what();
  }
  if (c.inject_fault) {
    r.verdict = Verdict::Fail;
    r.detail = "injected fault (computed verdict: " + r.detail + ")";
  }
  return r;
}

SuiteSummary run_cases(const std::vector<LemmaCase>& cases, std::size_t threads) {
  SuiteSummary s;
  s.reports.resize(cases.size());
  if (threads == 0) threads = thread_count();
  parallel_chunks(cases.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) s.reports[i] = verify_lemma(cases[i]);
  });
  for (const auto& r : s.reports) {
    if (r.verdict == Verdict::Pass) ++s.passed;
    else if (r.verdict == Verdict::HypothesisNotMet) ++s.not_met;
    else ++s.failed;
  }
  return s;
}

SuiteSummary run_suite(const std::vector<std::string>& ids, std::uint64_t first_seed, std::uint64_t last_seed,
                       const CoefficientSpec& ring, std::size_t threads) {
  std::vector<LemmaCase> cases;
  for (const auto& id : ids) {
    if (!is_lemma_id(id)) throw PreconditionError("unknown lemma id '" + id + "'");
    if (last_seed < first_seed) continue;
    for (std::uint64_t seed = first_seed;; ++seed) {
      cases.push_back({id, seed, ring, false});
      if (seed == last_seed) break;
    }
  }
  return run_cases(cases, threads);
}

std::string describe(const SuiteSummary& s, bool verbose) {
  std::ostringstream out;
  std::vector<std::string> order;
  std::map<std::string, std::array<std::size_t, 3>> counts;
  for (const auto& r : s.reports) {
    const auto& id = r.lemma_case.id;
    if (!counts.count(id)) order.push_back(id);
    ++counts[id][static_cast<std::size_t>(r.verdict)];
    if (verbose || r.verdict == Verdict::Fail) {
      out << to_string(r.verdict) << " " << id << " seed=" << r.lemma_case.seed << " ring=" << r.lemma_case.ring.name();
      if (!r.instance.empty()) out << " instance=" << r.instance;
      if (!r.detail.empty()) out << ": " << r.detail;
      out << "\n";
      if (r.verdict == Verdict::Fail) out << "  replay: " << replay_line(r.lemma_case) << "\n";
    }
  }
  for (const auto& id : order) {
    const auto& c = counts[id];
    const std::size_t total = c[0] + c[1] + c[2];
    out << "id " << id << ": pass=" << c[0] << " hypothesis-not-met=" << c[1] << " fail=" << c[2]
        << " hypotheses-met=" << (total ? (100 * (c[0] + c[2]) / total) : 0) << "%\n";
  }
  out << "total: cases=" << s.reports.size() << " pass=" << s.passed << " hypothesis-not-met=" << s.not_met
      << " fail=" << s.failed << "\n";
  out << "result: " << (s.ok() ? "ok" : "FAIL") << "\n";
  return out.str();
}

}  // namespace cechspan
