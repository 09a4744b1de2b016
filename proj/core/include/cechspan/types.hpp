#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace cechspan {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Vertex identifiers are non-negative integers; canonical simplex orientation
/// is ascending id order.
using VertexId = std::int64_t;

/// A simplex is its vertex set, stored sorted ascending and duplicate free.
using Simplex = std::vector<VertexId>;

/// Point in R^n with exact rational coordinates.
using Point = std::vector<Rational>;

/// Raised for malformed textual input (file formats, rational literals).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Raised when an operation's documented precondition is violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorts and deduplicates vertex ids; throws if the result is empty.
Simplex make_simplex(std::vector<VertexId> vertices);

/// Parses `p`, `-p` or `p/q` into an exact rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);
std::string to_string(const Simplex& simplex);

/// FNV-1a, used for deterministic content fingerprints.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 14695981039346656037ULL);
std::string hex64(std::uint64_t value);

}  // namespace cechspan
