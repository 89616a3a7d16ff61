#include "gstrata/field.hpp"

#include <string>

#include "gstrata/error.hpp"

namespace gstrata {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2)
    if (value % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorCode::InvalidArgument,
                "field modulus " + std::to_string(p) + " is not a prime below 2^31");
  return FieldSpec(Kind::Prime, static_cast<std::uint32_t>(p));
}

Scalar FieldSpec::normalize(const Scalar& value) const {
  if (is_rational()) {
    Scalar out(value);
    out.canonicalize();
    return out;
  }
  mpz_class modulus(p_);
  mpz_class num = value.get_num() % modulus;
  mpz_class den = value.get_den() % modulus;
  if (num < 0) num += modulus;
  if (den < 0) den += modulus;
  if (den == 0)
    throw Error(ErrorCode::ParseError,
                "denominator vanishes in F_" + std::to_string(p_));
  auto n = static_cast<std::uint32_t>(num.get_ui());
  auto d = static_cast<std::uint32_t>(den.get_ui());
  return Scalar(modp::mul(n, modp::inverse(d, p_), p_));
}

Scalar FieldSpec::parse(std::string_view text) const {
  std::string s(text);
  Scalar value;
  if (s.empty() || value.set_str(s, 10) != 0)
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + s + "'");
  if (value.get_den() == 0)
    throw Error(ErrorCode::ParseError, "zero denominator: '" + s + "'");
  return normalize(value);
}

std::string FieldSpec::format(const Scalar& value) const { return value.get_str(); }

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

namespace modp {

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw Error(ErrorCode::InvalidArgument, "element is not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace modp

}  // namespace gstrata
