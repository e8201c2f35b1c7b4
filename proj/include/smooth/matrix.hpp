#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "smooth/polynomial.hpp"

namespace smooth {

/// Dense row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingPtr& ring() const { return ring_; }
  bool is_square() const { return rows_ == cols_; }

  Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  bool operator==(const PolyMatrix& other) const = default;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> entries_;
};

/// Rows are the polynomials, columns the ring variables.
PolyMatrix jacobian(const RingPtr& ring, std::span<const Polynomial> polys);

/// Fraction-free Bareiss elimination; cofactor expansion for size <= 3.
/// Throws std::invalid_argument for a non-square matrix.
Polynomial determinant(const PolyMatrix& m);
Polynomial determinant_bareiss(const PolyMatrix& m);
Polynomial determinant_cofactor(const PolyMatrix& m);

/// A with sum_k A[l,k] * M[m,k] = q * delta(l,m), q = det M. This is the
/// cofactor matrix of M (the transpose of the classical adjugate).
struct Adjugate {
  PolyMatrix a;
  Polynomial q;
};
Adjugate adjugate(const PolyMatrix& m);

using Reducer = std::function<Polynomial(const Polynomial&)>;

struct Minor {
  std::vector<std::size_t> rows, cols;
  Polynomial value;
};

/// All size x size minors, row subsets outer and column subsets inner, both
/// in lexicographic order. Zero minors are dropped. When `reduce` is set it is
/// applied to every intermediate product and sum.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t size, const Reducer& reduce = {});
std::vector<Minor> minors_with_subsets(const PolyMatrix& m, std::size_t size, const Reducer& reduce = {});

/// Calls `visit` for each k-subset of {0..n-1} in lexicographic order; stops
/// early when `visit` returns false.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit);

}  // namespace smooth
