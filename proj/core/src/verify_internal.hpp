#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cechspan/verify.hpp"

namespace cechspan::detail {

struct CheckResult {
  Verdict verdict = Verdict::Pass;
  std::string instance;
  std::string detail;
};

using Checker = CheckResult (*)(const LemmaCase&, Rng&);

/// Lemma id to checker, in catalog order.
const std::vector<std::pair<std::string, Checker>>& checkers();

}  // namespace cechspan::detail
