#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gstrata {

/// Every matrix entry is stored as an exact rational. Over a prime field the
/// stored value is the integer representative in [0, p).
using Scalar = mpq_class;

bool is_prime(std::uint64_t value);

/// The base field: Q, or F_p for a prime 2 <= p < 2^31.
class FieldSpec {
 public:
  enum class Kind { Rational, Prime };

  static FieldSpec rational() { return FieldSpec(Kind::Rational, 0); }
  /// Throws InvalidArgument unless p is prime and below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rational; }
  bool is_prime_field() const noexcept { return kind_ == Kind::Prime; }
  /// 0 for Q.
  std::uint32_t modulus() const noexcept { return p_; }

  /// Maps an arbitrary rational into the field's canonical representative.
  /// Over F_p a denominator divisible by p is rejected.
  Scalar normalize(const Scalar& value) const;
  Scalar from_int(long value) const { return normalize(Scalar(value)); }
  /// Accepts "7", "-3", "3/7".
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& value) const;

  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

namespace modp {

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p);

}  // namespace modp

}  // namespace gstrata
