#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "smooth/field.hpp"
#include "smooth/ring.hpp"

namespace smooth {

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

/// Sparse multivariate polynomial over a Ring.
///
/// Terms are kept strictly descending in degrevlex with no zero
/// coefficients, so two polynomials are equal iff their term vectors are.
/// Internally each monomial is packed as n+1 exponents with the total degree
/// in front (see src/algebra/monomial_ops.hpp).
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial term(RingPtr ring, const Scalar& c, std::span<const Exponent> exponents);
  /// Arbitrary order, duplicates merged, coefficients mapped into the field.
  static Polynomial from_terms(RingPtr ring, std::vector<std::pair<Monomial, Scalar>> terms);
  /// Trusted constructor from packed data already in normal form.
  static Polynomial from_packed(RingPtr ring, std::vector<Scalar> coefficients,
                                std::vector<Exponent> packed);

  const RingPtr& ring() const { return ring_; }
  std::size_t arity() const { return ring_->arity(); }

  bool is_zero() const { return coefficients_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::size_t size() const { return coefficients_.size(); }

  const Scalar& coefficient(std::size_t i) const { return coefficients_[i]; }
  std::span<const Exponent> exponents(std::size_t i) const;
  Exponent term_degree(std::size_t i) const { return packed_[i * stride()]; }
  const Scalar& leading_coefficient() const { return coefficients_.front(); }
  std::span<const Exponent> leading_exponents() const { return exponents(0); }

  /// -1 for the zero polynomial.
  long total_degree() const;
  bool is_homogeneous() const;
  /// Highest power of variable i occurring.
  Exponent degree_in(std::size_t i) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);
  Polynomial& operator*=(const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Scalar& c) const;
  /// this * c * x^exponents
  Polynomial mul_term(const Scalar& c, std::span<const Exponent> exponents) const;
  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  /// Leading coefficient 1 (zero stays zero).
  Polynomial monic() const;
  /// this / d, throws std::domain_error unless d divides exactly.
  Polynomial divide_exact(const Polynomial& d) const;

  std::string to_string() const;
  std::size_t hash() const;

  bool operator==(const Polynomial& other) const;

  std::size_t stride() const { return ring_->arity() + 1; }
  const std::vector<Scalar>& raw_coefficients() const { return coefficients_; }
  const std::vector<Exponent>& raw_packed() const { return packed_; }

 private:
  RingPtr ring_;
  std::vector<Scalar> coefficients_;
  std::vector<Exponent> packed_;
};

enum class ArithOp { add, sub, mul };

/// Throws std::invalid_argument on ring mismatch.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// Throws std::out_of_range for a bad variable index.
Polynomial partial_derivative(const Polynomial& f, std::size_t i);

using ScalarMatrix = std::vector<std::vector<Scalar>>;

Scalar scalar_determinant(const Field& field, const ScalarMatrix& m);

/// Substitutes x_i -> sum_j T[i][j] x_j. Throws std::invalid_argument if T
/// is singular or of the wrong size.
Polynomial apply_linear_change(const Polynomial& f, const ScalarMatrix& t);

/// Sets x_i = 1 and moves into `target` (the chart ring of variable i).
/// Throws std::invalid_argument if f is not homogeneous.
Polynomial dehomogenize(const Polynomial& f, std::size_t i, const RingPtr& target);
Polynomial dehomogenize(const Polynomial& f, std::size_t i);

/// Reinterprets f in a ring with extra trailing variables (exponent 0).
Polynomial embed(const Polynomial& f, const RingPtr& larger);

}  // namespace smooth
