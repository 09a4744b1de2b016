#include "cechspan/coefficients.hpp"

#include <cctype>
#include <charconv>

#include "cechspan/types.hpp"

namespace cechspan {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CoefficientSpec CoefficientSpec::integers_mod(std::int64_t q) {
  if (q < 2) throw PreconditionError("modulus must be at least 2");
  return CoefficientSpec(Kind::IntegersMod, q);
}

CoefficientSpec CoefficientSpec::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text[0] == 'Z') {
    std::string_view digits = text.substr(1);
    if (!digits.empty() && digits[0] == '/') digits.remove_prefix(1);
    std::int64_t q = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (ec == std::errc() && end == digits.data() + digits.size() && q >= 2) return integers_mod(q);
  }
  throw ParseError("unknown coefficient ring '" + std::string(text) + "' (expected Z, Q or Zq)", 0);
}

bool CoefficientSpec::is_field() const noexcept { return kind_ == Kind::Rationals || is_prime_field(); }

bool CoefficientSpec::is_prime_field() const noexcept { return kind_ == Kind::IntegersMod && is_prime(q_); }

std::string CoefficientSpec::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::IntegersMod: return "Z" + std::to_string(q_);
  }
  return "?";
}

}  // namespace cechspan
