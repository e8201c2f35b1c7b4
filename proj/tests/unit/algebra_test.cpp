#include <gtest/gtest.h>

#include "support.hpp"

using namespace smooth;
using namespace testing_support;

namespace {

std::vector<Scalar> random_point(std::mt19937_64& rng, const RingPtr& r) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Scalar> x;
  for (std::size_t i = 0; i < r->arity(); ++i) x.push_back(r->field().from_int(d(rng)));
  return x;
}

PolyMatrix random_matrix(std::mt19937_64& rng, const RingPtr& r, std::size_t rows, std::size_t cols) {
  PolyMatrix m(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_poly(rng, r, 2, 2, 3);
  return m;
}

ScalarMatrix at_point(const PolyMatrix& m, const std::vector<Scalar>& x) {
  ScalarMatrix s(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s[i][j] = evaluate(m.at(i, j), x);
  return s;
}

}  // namespace

TEST(Field, Basics) {
  EXPECT_THROW(Field::prime(8), std::invalid_argument);
  EXPECT_THROW(Field::prime(2147483659u), std::invalid_argument);
  Field f = Field::prime(13);
  EXPECT_EQ(f.from_int(-1), 12);
  EXPECT_EQ(f.from_rational(Scalar(1, 2)), 7);
  EXPECT_EQ(f.mul(f.inv(5), 5), 1);
  EXPECT_THROW(f.inv(0), std::domain_error);
  EXPECT_EQ(f.name(), "F13");
  EXPECT_EQ(Field::rationals().name(), "QQ");
}

TEST(Ring, Construction) {
  EXPECT_THROW(qq({}), std::invalid_argument);
  EXPECT_THROW(qq({"x", "x"}), std::invalid_argument);
  auto r = qq({"x", "t"});
  auto e = extend_ring(r, "t");
  EXPECT_EQ(e->arity(), 3u);
  EXPECT_FALSE(r->index_of(e->variable(2)).has_value());
  auto c = chart_ring(r, 0);
  EXPECT_EQ(c->variables(), std::vector<std::string>{"t"});
  EXPECT_THROW(chart_ring(c, 0), std::invalid_argument);
}

TEST(Polynomial, ArithmeticMatchesEvaluation) {
  std::mt19937_64 rng(3);
  for (auto r : {qq({"x", "y", "z"}), fp(101, {"x", "y", "z"})}) {
    for (int round = 0; round < 50; ++round) {
      Polynomial a = random_poly(rng, r, 3, 4), b = random_poly(rng, r, 3, 4);
      auto x = random_point(rng, r);
      const Field& k = r->field();
      EXPECT_EQ(evaluate(a + b, x), k.add(evaluate(a, x), evaluate(b, x)));
      EXPECT_EQ(evaluate(a - b, x), k.sub(evaluate(a, x), evaluate(b, x)));
      EXPECT_EQ(evaluate(a * b, x), k.mul(evaluate(a, x), evaluate(b, x)));
      EXPECT_EQ(a.pow(3), a * a * a);
      EXPECT_EQ((a * b).divide_exact(b.is_zero() ? Polynomial::constant(r, 1) : b),
                b.is_zero() ? a * b : a);
      // product rule
      EXPECT_EQ((a * b).derivative(1), a.derivative(1) * b + a * b.derivative(1));
    }
  }
}

TEST(Polynomial, OrderAndPrinting) {
  auto r = qq({"x", "y", "z"});
  // degrevlex: y^2 > x*z since x*z involves the last variable
  Polynomial f = P(r, "y^2 + x*z + x + 1");
  EXPECT_EQ(f.to_string(), "y^2+x*z+x+1");
  EXPECT_EQ(P(r, "x*y*z - x^3").leading_coefficient(), -1);
  EXPECT_EQ(P(r, "x^2*y").total_degree(), 3);
  EXPECT_EQ(Polynomial(r).total_degree(), -1);
  EXPECT_THROW(P(r, "x+1").divide_exact(P(r, "x")), std::domain_error);
  EXPECT_TRUE(P(r, "x^2+y*z").is_homogeneous());
  EXPECT_EQ(P(fp(3, {"x"}), "x^3").derivative(0), Polynomial(fp(3, {"x"})));
}

TEST(Polynomial, CoordinateChangeAndCharts) {
  auto r = qq({"x", "y"});
  ScalarMatrix t = {{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(1)}};
  EXPECT_EQ(apply_linear_change(P(r, "x^2-y"), t), P(r, "x^2+2*x*y+y^2-y"));
  EXPECT_THROW(apply_linear_change(P(r, "x"), {{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(1)}}),
               std::invalid_argument);
  auto c = chart_ring(r, 0);
  EXPECT_EQ(dehomogenize(P(r, "x^2-y^2"), 0, c), P(c, "1-y^2"));
  EXPECT_THROW(dehomogenize(P(r, "x^2-y"), 0, c), std::invalid_argument);
}

TEST(Matrix, DeterminantsAgree) {
  std::mt19937_64 rng(5);
  auto r = qq({"x", "y"});
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int round = 0; round < 4; ++round) {
      PolyMatrix m = random_matrix(rng, r, n, n);
      Polynomial d = determinant_bareiss(m);
      if (n <= 4) EXPECT_EQ(d, determinant_cofactor(m));
      auto x = random_point(rng, r);
      EXPECT_EQ(evaluate(d, x), scalar_determinant(r->field(), at_point(m, x)));
    }
  }
}

TEST(Matrix, AdjugateIdentity) {
  std::mt19937_64 rng(9);
  auto r = qq({"x", "y", "z"});
  for (std::size_t n = 1; n <= 4; ++n) {
    PolyMatrix m = random_matrix(rng, r, n, n);
    auto adj = adjugate(m);
    EXPECT_EQ(adj.q, determinant(m));
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t mm = 0; mm < n; ++mm) {
        Polynomial s(r);
        for (std::size_t k = 0; k < n; ++k) s += adj.a.at(l, k) * m.at(mm, k);
        EXPECT_EQ(s, l == mm ? adj.q : Polynomial(r));
      }
  }
}

TEST(Matrix, MinorsMatchSubmatrixDeterminants) {
  std::mt19937_64 rng(13);
  auto r = qq({"x", "y"});
  PolyMatrix m = random_matrix(rng, r, 3, 5);
  auto ms = minors_with_subsets(m, 2);
  std::size_t seen = 0;
  for_each_subset(3, 2, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(5, 2, [&](const std::vector<std::size_t>& cols) {
      Polynomial d = determinant(m.submatrix(rows, cols));
      if (!d.is_zero()) {
        EXPECT_EQ(ms.at(seen).rows, rows);
        EXPECT_EQ(ms.at(seen).cols, cols);
        EXPECT_EQ(ms.at(seen).value, d);
        ++seen;
      }
      return true;
    });
    return true;
  });
  EXPECT_EQ(seen, ms.size());
  EXPECT_THROW(minors(m, 4), std::out_of_range);
  EXPECT_THROW(minors(m, 0), std::out_of_range);

  // reduction modulo x^2 applied along the way agrees with reducing at the end
  auto gb = buchberger(I(r, {"x^2"}));
  auto red = minors(m, 3, [&](const Polynomial& p) { return gb.normal_form(p); });
  auto full = minors(m, 3);
  std::vector<Polynomial> reduced_full;
  for (auto& p : full)
    if (auto q = gb.normal_form(p); !q.is_zero()) reduced_full.push_back(q);
  EXPECT_EQ(red, reduced_full);
}

TEST(Matrix, Jacobian) {
  auto r = qq({"x", "y"});
  std::vector<Polynomial> fs = {P(r, "x^2*y"), P(r, "y^3-x")};
  PolyMatrix j = jacobian(r, fs);
  EXPECT_EQ(j.at(0, 0), P(r, "2*x*y"));
  EXPECT_EQ(j.at(1, 0), P(r, "-1"));
  EXPECT_EQ(j.at(1, 1), P(r, "3*y^2"));
}
