#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cechspan/coefficients.hpp"
#include "cechspan/complex.hpp"

namespace cechspan {

enum class Verdict { Pass, HypothesisNotMet, Fail };
std::string to_string(Verdict v);

/// One lemma check. Even seeds pick constructed instances, odd seeds random ones.
struct LemmaCase {
  std::string id;
  std::uint64_t seed = 0;
  CoefficientSpec ring = CoefficientSpec::integers_mod(2);
  /// Reports FAIL regardless of the computation (exercises the failure path).
  bool inject_fault = false;
};

struct VerifyReport {
  LemmaCase lemma_case;
  Verdict verdict = Verdict::Pass;
  /// Constructed instance name or "random".
  std::string instance;
  std::string detail;
};

/// The replay line `case <id> <seed> <ring>[ inject-fault]`.
std::string replay_line(const LemmaCase& c);
/// Parses replay lines; blank lines and `#` comments are skipped.
std::vector<LemmaCase> parse_replay(const std::string& text);

/// The catalog of lemma ids in report order.
const std::vector<std::string>& lemma_ids();
bool is_lemma_id(const std::string& id);

/// Splitmix64 generator with portable integer and real mapping.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// True with probability p.
  bool chance(double p);

 private:
  std::uint64_t state_;
};

/// Vertices 0 .. n-1 with n drawn from [1, max_vertices]; every k-subset
/// (1 <= k <= max_dim) whose facets are present is added with probability
/// `density`, in increasing size. density 1 gives the full max_dim-skeleton.
SimplicialComplex random_complex(std::uint64_t seed, int max_vertices, int max_dim, double density);
/// Same, with exactly `vertices` vertices.
SimplicialComplex random_complex_exact(Rng& rng, int vertices, int max_dim, double density);

VerifyReport verify_lemma(const LemmaCase& c);

struct SuiteSummary {
  std::vector<VerifyReport> reports;  // ordered by (id, seed)
  std::size_t passed = 0, not_met = 0, failed = 0;
  bool ok() const noexcept { return failed == 0; }
};

SuiteSummary run_suite(const std::vector<std::string>& ids, std::uint64_t first_seed, std::uint64_t last_seed,
                       const CoefficientSpec& ring, std::size_t threads = 0);
SuiteSummary run_cases(const std::vector<LemmaCase>& cases, std::size_t threads = 0);

/// Deterministic text: one line per FAIL with its replay line, per-id counts, totals.
std::string describe(const SuiteSummary& s, bool verbose = false);

}  // namespace cechspan
