#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cechspan {

/// Coefficient ring R; the coefficient module G is always R itself.
class CoefficientSpec {
 public:
  enum class Kind { Integers, IntegersMod, Rationals };

  static CoefficientSpec integers() { return CoefficientSpec(Kind::Integers, 0); }
  static CoefficientSpec rationals() { return CoefficientSpec(Kind::Rationals, 0); }
  /// Z/q, q >= 2.
  static CoefficientSpec integers_mod(std::int64_t q);
  /// Accepts `Z`, `Q`, `Zq` forms such as `Z2`, `Z3`, `Z/4`.
  static CoefficientSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  /// Modulus for Z/q; 0 otherwise.
  std::int64_t modulus() const noexcept { return q_; }
  bool is_finite() const noexcept { return kind_ == Kind::IntegersMod; }
  bool is_field() const noexcept;
  /// True for Z/p with p prime.
  bool is_prime_field() const noexcept;
  /// Characteristic-two rings are the only ones where every closed pseudomanifold is orientable.
  bool orientation_free() const noexcept { return kind_ == Kind::IntegersMod && q_ == 2; }

  std::string name() const;

  friend bool operator==(const CoefficientSpec&, const CoefficientSpec&) = default;

 private:
  CoefficientSpec(Kind kind, std::int64_t q) : kind_(kind), q_(q) {}
  Kind kind_;
  std::int64_t q_;
};

bool is_prime(std::int64_t n);

}  // namespace cechspan
