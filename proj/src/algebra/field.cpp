#include "smooth/field.hpp"

#include <stdexcept>

namespace smooth {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw std::invalid_argument("field characteristic must be below 2^31");
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

namespace {

std::uint64_t residue(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t as_u64(const Scalar& a) { return mpz_get_ui(a.get_num_mpz_t()); }

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Scalar make(std::uint64_t v) {
  Scalar s;
  mpz_set_ui(s.get_num_mpz_t(), v);
  return s;
}

}  // namespace

Scalar Field::from_integer(const mpz_class& v) const {
  if (p_ == 0) return Scalar(v);
  return make(residue(v, p_));
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (p_ == 0) return v;
  std::uint64_t den = residue(v.get_den(), p_);
  if (den == 0) throw std::domain_error("denominator vanishes modulo the characteristic");
  return make(residue(v.get_num(), p_) * pow_mod(den, p_ - 2, p_) % p_);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  std::uint64_t s = as_u64(a) + as_u64(b);
  return make(s >= p_ ? s - p_ : s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  std::uint64_t x = as_u64(a), y = as_u64(b);
  return make(x >= y ? x - y : x + p_ - y);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  return make(as_u64(a) * as_u64(b) % p_);
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  std::uint64_t x = as_u64(a);
  return make(x == 0 ? 0 : p_ - x);
}

Scalar Field::inv(const Scalar& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero");
  if (p_ == 0) return 1 / a;
  return make(pow_mod(as_u64(a), p_ - 2, p_));
}

bool Field::is_canonical(const Scalar& a) const {
  if (p_ == 0) return a.get_den() > 0 && gcd(a.get_num(), a.get_den()) == 1;
  return a.get_den() == 1 && sgn(a.get_num()) >= 0 && a.get_num() < p_;
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "F" + std::to_string(p_); }

}  // namespace smooth
