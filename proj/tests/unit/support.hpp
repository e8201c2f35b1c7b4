#pragma once

#include <random>
#include <string>
#include <vector>

#include "smooth/groebner.hpp"
#include "smooth/io.hpp"
#include "smooth/matrix.hpp"

namespace testing_support {

using namespace smooth;

inline RingPtr qq(std::vector<std::string> vars) { return make_ring(Field::rationals(), std::move(vars)); }
inline RingPtr fp(std::uint32_t p, std::vector<std::string> vars) { return make_ring(Field::prime(p), std::move(vars)); }

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

inline Ideal I(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(r, g));
  return Ideal(r, std::move(ps));
}

// Value at a point, term by term.
inline Scalar evaluate(const Polynomial& f, const std::vector<Scalar>& x) {
  const Field& k = f.ring()->field();
  Scalar acc = 0;
  for (std::size_t t = 0; t < f.size(); ++t) {
    Scalar v = f.coefficient(t);
    auto e = f.exponents(t);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (Exponent j = 0; j < e[i]; ++j) v = k.mul(v, x[i]);
    acc = k.add(acc, v);
  }
  return acc;
}

// Textbook multivariate division; independent of the engine.
inline Polynomial naive_remainder(Polynomial p, const std::vector<Polynomial>& divisors) {
  const RingPtr& ring = p.ring();
  const Field& k = ring->field();
  const std::size_t n = ring->arity();
  Polynomial rem(ring);
  while (!p.is_zero()) {
    auto lp = p.leading_exponents();
    bool divided = false;
    for (const auto& d : divisors) {
      auto ld = d.leading_exponents();
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = ld[i] <= lp[i];
      if (!ok) continue;
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = lp[i] - ld[i];
      p -= d.mul_term(k.div(p.leading_coefficient(), d.leading_coefficient()), m);
      divided = true;
      break;
    }
    if (!divided) {
      Polynomial lt = Polynomial::term(ring, p.leading_coefficient(), lp);
      rem += lt;
      p -= lt;
    }
  }
  return rem;
}

inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& r, int max_deg, int terms, int coef = 5) {
  std::uniform_int_distribution<int> c(-coef, coef), d(0, max_deg);
  std::vector<std::pair<Monomial, Scalar>> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m(r->arity(), 0);
    int budget = d(rng);
    for (int b = 0; b < budget; ++b) m[std::uniform_int_distribution<std::size_t>(0, r->arity() - 1)(rng)]++;
    ts.emplace_back(m, Scalar(c(rng)));
  }
  return Polynomial::from_terms(r, std::move(ts));
}

}  // namespace testing_support
