#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace smooth {

/// Exact field element. Over QQ a reduced fraction with positive
/// denominator; over F_p an integer in [0, p).
using Scalar = mpq_class;

bool is_prime(std::uint64_t n);

/// Coefficient field: the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  /// Maps an arbitrary rational into the field (num * den^-1 mod p for F_p).
  Scalar from_rational(const mpq_class& v) const;
  Scalar from_integer(const mpz_class& v) const;
  Scalar from_int(long v) const { return from_integer(mpz_class(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_canonical(const Scalar& a) const;

  /// "QQ" or "F<p>", the header tag of the ideal file format.
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

}  // namespace smooth
