#include "smooth/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "algebra/monomial_ops.hpp"

namespace smooth {

using detail::compare_packed;

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("polynomials live in different rings");
}

// Sorts (packed monomial, coefficient) rows descending and merges duplicates.
Polynomial normalize_terms(const RingPtr& ring, std::vector<Scalar> coeffs, std::vector<Exponent> packed) {
  const std::size_t n = ring->arity(), s = n + 1;
  const Field& field = ring->field();
  std::vector<std::size_t> idx(coeffs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return compare_packed(&packed[a * s], &packed[b * s], n) > 0;
  });
  std::vector<Scalar> out_c;
  std::vector<Exponent> out_m;
  out_c.reserve(coeffs.size());
  out_m.reserve(packed.size());
  for (std::size_t k = 0; k < idx.size();) {
    const Exponent* m = &packed[idx[k] * s];
    Scalar c = coeffs[idx[k]];
    std::size_t l = k + 1;
    for (; l < idx.size() && detail::equal_packed(&packed[idx[l] * s], m, n); ++l)
      c = field.add(c, coeffs[idx[l]]);
    if (sgn(c) != 0) {
      out_c.push_back(std::move(c));
      out_m.insert(out_m.end(), m, m + s);
    }
    k = l;
  }
  return Polynomial::from_packed(ring, std::move(out_c), std::move(out_m));
}

Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring();
  const Field& field = ring->field();
  const std::size_t n = ring->arity(), s = n + 1;
  const auto& ac = a.raw_coefficients();
  const auto& bc = b.raw_coefficients();
  const auto& am = a.raw_packed();
  const auto& bm = b.raw_packed();
  std::vector<Scalar> c;
  std::vector<Exponent> m;
  c.reserve(ac.size() + bc.size());
  m.reserve(am.size() + bm.size());
  std::size_t i = 0, j = 0;
  while (i < ac.size() || j < bc.size()) {
    int cmp;
    if (i == ac.size()) cmp = -1;
    else if (j == bc.size()) cmp = 1;
    else cmp = compare_packed(&am[i * s], &bm[j * s], n);
    if (cmp > 0) {
      c.push_back(ac[i]);
      m.insert(m.end(), &am[i * s], &am[i * s] + s);
      ++i;
    } else if (cmp < 0) {
      c.push_back(subtract ? field.neg(bc[j]) : bc[j]);
      m.insert(m.end(), &bm[j * s], &bm[j * s] + s);
      ++j;
    } else {
      Scalar v = subtract ? field.sub(ac[i], bc[j]) : field.add(ac[i], bc[j]);
      if (sgn(v) != 0) {
        c.push_back(std::move(v));
        m.insert(m.end(), &am[i * s], &am[i * s] + s);
      }
      ++i;
      ++j;
    }
  }
  return Polynomial::from_packed(ring, std::move(c), std::move(m));
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(std::move(ring));
  Scalar v = p.ring_->field().from_rational(c);
  if (sgn(v) != 0) {
    p.coefficients_.push_back(std::move(v));
    p.packed_.assign(p.stride(), 0);
  }
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->arity()) throw std::out_of_range("variable index out of range");
  Monomial e(ring->arity(), 0);
  e[i] = 1;
  return term(std::move(ring), Scalar(1), e);
}

Polynomial Polynomial::term(RingPtr ring, const Scalar& c, std::span<const Exponent> exponents) {
  if (exponents.size() != ring->arity()) throw std::invalid_argument("monomial length differs from ring arity");
  Polynomial p(std::move(ring));
  Scalar v = p.ring_->field().from_rational(c);
  if (sgn(v) == 0) return p;
  p.coefficients_.push_back(std::move(v));
  p.packed_.push_back(std::accumulate(exponents.begin(), exponents.end(), Exponent{0}));
  p.packed_.insert(p.packed_.end(), exponents.begin(), exponents.end());
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<std::pair<Monomial, Scalar>> terms) {
  const std::size_t n = ring->arity();
  std::vector<Scalar> c;
  std::vector<Exponent> m;
  for (auto& [mono, coef] : terms) {
    if (mono.size() != n) throw std::invalid_argument("monomial length differs from ring arity");
    c.push_back(ring->field().from_rational(coef));
    m.push_back(std::accumulate(mono.begin(), mono.end(), Exponent{0}));
    m.insert(m.end(), mono.begin(), mono.end());
  }
  return normalize_terms(ring, std::move(c), std::move(m));
}

Polynomial Polynomial::from_packed(RingPtr ring, std::vector<Scalar> coefficients, std::vector<Exponent> packed) {
  Polynomial p(std::move(ring));
  p.coefficients_ = std::move(coefficients);
  p.packed_ = std::move(packed);
  return p;
}

bool Polynomial::is_constant() const { return is_zero() || (size() == 1 && packed_[0] == 0); }

bool Polynomial::is_one() const { return size() == 1 && packed_[0] == 0 && coefficients_[0] == 1; }

std::span<const Exponent> Polynomial::exponents(std::size_t i) const {
  return std::span<const Exponent>(packed_.data() + i * stride() + 1, arity());
}

long Polynomial::total_degree() const {
  long d = -1;
  for (std::size_t i = 0; i < size(); ++i) d = std::max<long>(d, term_degree(i));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (std::size_t i = 1; i < size(); ++i)
    if (term_degree(i) != term_degree(0)) return false;
  return true;
}

Exponent Polynomial::degree_in(std::size_t v) const {
  Exponent d = 0;
  for (std::size_t i = 0; i < size(); ++i) d = std::max(d, packed_[i * stride() + 1 + v]);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.packed_ = packed_;
  r.coefficients_.reserve(size());
  for (const auto& c : coefficients_) r.coefficients_.push_back(ring_->field().neg(c));
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) { return *this = merge(*this, b, false); }
Polynomial& Polynomial::operator-=(const Polynomial& b) { return *this = merge(*this, b, true); }
Polynomial& Polynomial::operator*=(const Polynomial& b) { return *this = *this * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
  if (a.size() == 1) return b.mul_term(a.coefficient(0), a.exponents(0));
  if (b.size() == 1) return a.mul_term(b.coefficient(0), b.exponents(0));
  const std::size_t n = a.arity(), s = n + 1;
  const Field& field = a.ring()->field();
  std::vector<Scalar> c;
  std::vector<Exponent> m(a.size() * b.size() * s);
  c.reserve(a.size() * b.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j, ++k) {
      c.push_back(field.mul(a.coefficient(i), b.coefficient(j)));
      detail::multiply_packed(&a.raw_packed()[i * s], &b.raw_packed()[j * s], &m[k * s], n);
    }
  return normalize_terms(a.ring(), std::move(c), std::move(m));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const Field& field = ring_->field();
  Scalar v = field.from_rational(c);
  if (sgn(v) == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.packed_ = packed_;
  r.coefficients_.reserve(size());
  for (const auto& x : coefficients_) r.coefficients_.push_back(field.mul(x, v));
  return r;
}

Polynomial Polynomial::mul_term(const Scalar& c, std::span<const Exponent> e) const {
  if (e.size() != arity()) throw std::invalid_argument("monomial length differs from ring arity");
  Polynomial r = scaled(c);
  const std::size_t s = stride();
  Exponent d = std::accumulate(e.begin(), e.end(), Exponent{0});
  for (std::size_t i = 0; i < r.size(); ++i) {
    Exponent* m = &r.packed_[i * s];
    m[0] += d;
    for (std::size_t v = 0; v < e.size(); ++v) m[v + 1] += e[v];
  }
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t v) const {
  if (v >= arity()) throw std::out_of_range("variable index out of range");
  const Field& field = ring_->field();
  const std::size_t s = stride();
  Polynomial r(ring_);
  for (std::size_t i = 0; i < size(); ++i) {
    Exponent e = packed_[i * s + 1 + v];
    if (e == 0) continue;
    Scalar c = field.mul(coefficients_[i], field.from_int(static_cast<long>(e)));
    if (sgn(c) == 0) continue;
    r.coefficients_.push_back(std::move(c));
    r.packed_.insert(r.packed_.end(), &packed_[i * s], &packed_[i * s] + s);
    Exponent* m = &r.packed_[r.packed_.size() - s];
    m[0] -= 1;
    m[1 + v] -= 1;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient() == 1) return *this;
  return scaled(ring_->field().inv(leading_coefficient()));
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
  require_same_ring(*this, d);
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Field& field = ring_->field();
  const std::size_t n = arity(), s = stride();
  Scalar lead_inv = field.inv(d.leading_coefficient());
  Polynomial q(ring_), r = *this;
  std::vector<Exponent> quot(s);
  while (!r.is_zero()) {
    if (!detail::divides_packed(d.packed_.data(), r.packed_.data(), n))
      throw std::domain_error("polynomial division is not exact");
    detail::divide_packed(r.packed_.data(), d.packed_.data(), quot.data(), n);
    Scalar c = field.mul(r.leading_coefficient(), lead_inv);
    std::span<const Exponent> e(quot.data() + 1, n);
    q += Polynomial::term(ring_, c, e);
    r -= d.mul_term(c, e);
  }
  return q;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < size(); ++i) {
    Scalar c = coefficients_[i];
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (i == 0) {
      if (negative) os << '-';
    } else {
      os << (negative ? '-' : '+');
    }
    bool unit_monomial = term_degree(i) == 0;
    bool print_coefficient = unit_monomial || c != 1;
    if (print_coefficient) os << c.get_str();
    bool first = !print_coefficient;
    auto e = exponents(i);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!first) os << '*';
      first = false;
      os << ring_->variable(v);
      if (e[v] > 1) os << '^' << e[v];
    }
  }
  return os.str();
}

std::size_t Polynomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ arity();
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  for (std::size_t i = 0; i < size(); ++i) {
    mix(mpz_get_ui(coefficients_[i].get_num_mpz_t()));
    mix(static_cast<std::size_t>(sgn(coefficients_[i])));
    mix(mpz_get_ui(coefficients_[i].get_den_mpz_t()));
  }
  for (Exponent e : packed_) mix(e);
  return h;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_ring(ring_, other.ring_) && packed_ == other.packed_ && coefficients_ == other.coefficients_;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

Polynomial partial_derivative(const Polynomial& f, std::size_t i) { return f.derivative(i); }

Scalar scalar_determinant(const Field& field, const ScalarMatrix& input) {
  const std::size_t n = input.size();
  ScalarMatrix m = input;
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = field.neg(det);
    }
    det = field.mul(det, m[col][col]);
    Scalar inv = field.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Scalar factor = field.mul(m[r][col], inv);
      for (std::size_t c = col; c < n; ++c) m[r][c] = field.sub(m[r][c], field.mul(factor, m[col][c]));
    }
  }
  return det;
}

Polynomial apply_linear_change(const Polynomial& f, const ScalarMatrix& t) {
  const RingPtr& ring = f.ring();
  const std::size_t n = ring->arity();
  if (t.size() != n) throw std::invalid_argument("coordinate change has the wrong size");
  ScalarMatrix tf(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n) throw std::invalid_argument("coordinate change has the wrong size");
    for (const auto& v : t[i]) tf[i].push_back(ring->field().from_rational(v));
  }
  if (sgn(scalar_determinant(ring->field(), tf)) == 0)
    throw std::invalid_argument("coordinate change is singular");

  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial l(ring);
    for (std::size_t j = 0; j < n; ++j) l += Polynomial::variable(ring, j).scaled(tf[i][j]);
    images.push_back(std::move(l));
  }
  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, Exponent k) -> const Polynomial& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(Polynomial::constant(ring, 1));
    while (p.size() <= k) p.push_back(p.back() * images[i]);
    return p[k];
  };
  Polynomial result(ring);
  for (std::size_t k = 0; k < f.size(); ++k) {
    Polynomial term = Polynomial::constant(ring, f.coefficient(k));
    auto e = f.exponents(k);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) term *= power(i, e[i]);
    result += term;
  }
  return result;
}

Polynomial dehomogenize(const Polynomial& f, std::size_t i, const RingPtr& target) {
  if (!f.is_homogeneous()) throw std::invalid_argument("dehomogenize needs a homogeneous polynomial");
  const std::size_t n = f.arity();
  if (i >= n) throw std::out_of_range("chart index out of range");
  if (target->arity() + 1 != n) throw std::invalid_argument("chart ring has the wrong arity");
  std::vector<std::pair<Monomial, Scalar>> terms;
  for (std::size_t k = 0; k < f.size(); ++k) {
    auto e = f.exponents(k);
    Monomial m;
    for (std::size_t v = 0; v < n; ++v)
      if (v != i) m.push_back(e[v]);
    terms.emplace_back(std::move(m), f.coefficient(k));
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& f, std::size_t i) { return dehomogenize(f, i, chart_ring(f.ring(), i)); }

Polynomial embed(const Polynomial& f, const RingPtr& larger) {
  const std::size_t n = f.arity(), m = larger->arity();
  if (m < n || !(larger->field() == f.ring()->field()))
    throw std::invalid_argument("cannot embed into a smaller ring");
  for (std::size_t v = 0; v < n; ++v)
    if (larger->variable(v) != f.ring()->variable(v)) throw std::invalid_argument("ring prefix mismatch");
  std::vector<Exponent> packed;
  packed.reserve(f.size() * (m + 1));
  for (std::size_t k = 0; k < f.size(); ++k) {
    const Exponent* src = &f.raw_packed()[k * (n + 1)];
    packed.insert(packed.end(), src, src + n + 1);
    packed.insert(packed.end(), m - n, 0);
  }
  return Polynomial::from_packed(larger, f.raw_coefficients(), std::move(packed));
}

}  // namespace smooth
