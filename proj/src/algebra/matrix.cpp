#include "smooth/matrix.hpp"

#include <stdexcept>
#include <unordered_map>

#include "smooth/execution.hpp"

namespace smooth {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  PolyMatrix s(ring_, rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) s.at(r, c) = at(rows[r], cols[c]);
  return s;
}

PolyMatrix jacobian(const RingPtr& ring, std::span<const Polynomial> polys) {
  PolyMatrix j(ring, polys.size(), ring->arity());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (std::size_t c = 0; c < ring->arity(); ++c) j.at(r, c) = polys[r].derivative(c);
  return j;
}

namespace {

void require_square(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
}

}  // namespace

Polynomial determinant_cofactor(const PolyMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.ring(), 1);
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  Polynomial det(m.ring());
  std::vector<std::size_t> rows;
  for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
  for (std::size_t c = 0; c < n; ++c) {
    if (m.at(0, c).is_zero()) continue;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) cols.push_back(k);
    Polynomial term = m.at(0, c) * determinant_cofactor(m.submatrix(rows, cols));
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

Polynomial determinant_bareiss(const PolyMatrix& input) {
  require_square(input);
  const std::size_t n = input.rows();
  if (n == 0) return Polynomial::constant(input.ring(), 1);
  PolyMatrix m = input;
  Polynomial prev = Polynomial::constant(m.ring(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m.at(piv, k).is_zero()) ++piv;
      if (piv == n) return Polynomial(m.ring());
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial v = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = v.divide_exact(prev);
      }
      check_interrupt();
    }
    prev = m.at(k, k);
  }
  Polynomial det = m.at(n - 1, n - 1);
  return negate ? -det : det;
}

Polynomial determinant(const PolyMatrix& m) {
  require_square(m);
  return m.rows() <= 3 ? determinant_cofactor(m) : determinant_bareiss(m);
}

Adjugate adjugate(const PolyMatrix& m) {
  require_square(m);
  const std::size_t r = m.rows();
  PolyMatrix a(m.ring(), r, r);
  if (r == 1) {
    a.at(0, 0) = Polynomial::constant(m.ring(), 1);
    return {std::move(a), m.at(0, 0)};
  }
  for (std::size_t l = 0; l < r; ++l) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < r; ++i)
      if (i != l) rows.push_back(i);
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < r; ++j)
        if (j != k) cols.push_back(j);
      Polynomial c = determinant(m.submatrix(rows, cols));
      a.at(l, k) = (l + k) % 2 ? -c : c;
    }
  }
  return {std::move(a), determinant(m)};
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    if (!visit(s)) return;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

std::vector<Minor> minors_with_subsets(const PolyMatrix& m, std::size_t size, const Reducer& reduce) {
  if (size == 0 || size > std::min(m.rows(), m.cols()))
    throw std::out_of_range("minor size out of range");
  if (m.cols() > 63) throw std::out_of_range("too many columns for minor enumeration");
  auto red = [&](Polynomial p) { return reduce ? reduce(p) : p; };
  std::vector<Minor> out;
  for_each_subset(m.rows(), size, [&](const std::vector<std::size_t>& rows) {
    // memo[mask] = determinant of the last popcount(mask) selected rows on columns `mask`,
    // expanded along the first of those rows.
    std::unordered_map<std::uint64_t, Polynomial> memo;
    std::function<Polynomial(std::size_t, std::uint64_t)> det = [&](std::size_t level,
                                                                   std::uint64_t mask) -> Polynomial {
      if (level == size) return Polynomial::constant(m.ring(), 1);
      if (auto it = memo.find(mask); it != memo.end()) return it->second;
      check_interrupt();
      Polynomial acc(m.ring());
      std::size_t pos = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!(mask >> c & 1)) continue;
        const Polynomial& e = m.at(rows[level], c);
        if (!e.is_zero()) {
          Polynomial sub = det(level + 1, mask & ~(std::uint64_t{1} << c));
          if (!sub.is_zero()) {
            Polynomial t = red(e * sub);
            acc = red(pos % 2 ? acc - t : acc + t);
          }
        }
        ++pos;
      }
      memo.emplace(mask, acc);
      return acc;
    };
    for_each_subset(m.cols(), size, [&](const std::vector<std::size_t>& cols) {
      std::uint64_t mask = 0;
      for (auto c : cols) mask |= std::uint64_t{1} << c;
      Polynomial v = det(0, mask);
      if (!v.is_zero()) out.push_back({rows, cols, std::move(v)});
      return true;
    });
    return true;
  });
  return out;
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t size, const Reducer& reduce) {
  std::vector<Polynomial> out;
  for (auto& minor : minors_with_subsets(m, size, reduce)) out.push_back(std::move(minor.value));
  return out;
}

}  // namespace smooth
