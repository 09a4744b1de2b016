#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cechspan/complex.hpp"

namespace cechspan {

/// Closed polygonal loop in R^3 (implicitly closed, at least three points).
using LoopPoints = std::vector<Point>;

struct ScxDocument {
  SimplicialComplex complex;
  std::vector<LoopPoints> loops;
};

/// Line-oriented complex format:
///   # comment
///   dim <n>
///   vertex <id> [<q1> ... <qn>]
///   simplex <id> <id> ...
///   loop <x1> <y1> <z1> <x2> ...
/// Throws ParseError carrying the offending line number.
ScxDocument parse_scx(std::string_view text);
SimplicialComplex parse_complex(std::string_view text);

/// Subcomplex document: `simplex` (and optionally `vertex <id>`) lines naming
/// simplices of `parent`. Coordinates are taken from the parent.
SimplicialComplex parse_subcomplex(std::string_view text, const SimplicialComplex& parent);

std::string write_scx(const SimplicialComplex& k, const std::vector<LoopPoints>& loops = {});
/// Facets only, suitable for parse_subcomplex.
std::string write_subcomplex(const SimplicialComplex& k);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace cechspan
