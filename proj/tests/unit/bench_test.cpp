#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>

#include "smooth/bench.hpp"
#include "support.hpp"

using namespace smooth;
using namespace testing_support;

namespace {

std::int64_t det(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  std::int64_t acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      sub.push_back(row);
    }
    std::int64_t term = m[0][c] * det(sub);
    acc += c % 2 ? -term : term;
  }
  return acc;
}

// facets of conv of the moment curve points t = 1..n, by supporting hyperplanes
std::vector<std::vector<unsigned>> geometric_facets(unsigned d, unsigned n) {
  auto row = [&](unsigned v) {
    std::vector<std::int64_t> r{1};
    for (unsigned k = 1; k <= d; ++k) r.push_back(r.back() * (v + 1));
    return r;
  };
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + d, true);
  do {
    std::vector<unsigned> f;
    for (unsigned i = 0; i < n; ++i)
      if (pick[i]) f.push_back(i);
    int side = 0;
    bool ok = true;
    for (unsigned v = 0; v < n && ok; ++v) {
      if (pick[v]) continue;
      std::vector<std::vector<std::int64_t>> m;
      for (unsigned u : f) m.push_back(row(u));
      m.push_back(row(v));
      std::int64_t s = det(m);
      int sg = s > 0 ? 1 : -1;
      if (side == 0) side = sg;
      ok = s != 0 && sg == side;
    }
    if (ok) out.push_back(f);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Bench, GaleEvennessMatchesGeometry) {
  for (unsigned d = 2; d <= 4; ++d)
    for (unsigned n = d + 2; n <= 8; ++n) EXPECT_EQ(gale_facets(d, n), geometric_facets(d, n)) << d << " " << n;
}

TEST(Bench, RationalNormalCurve) {
  for (unsigned d = 2; d <= 8; ++d) {
    auto inst = rational_normal_curve(d);
    EXPECT_EQ(inst.name, "I1-" + std::to_string(d));
    EXPECT_EQ(inst.ideal.ring()->arity(), d + 1);
    EXPECT_EQ(inst.ideal.generators().size(), d * (d - 1) / 2);
    EXPECT_EQ(krull_dimension(inst.ideal), 2);
    // vanishes on (1, t, ..., t^d)
    std::vector<Scalar> pt{1};
    for (unsigned i = 0; i < d; ++i) pt.push_back(pt.back() * 3);
    for (const auto& g : inst.ideal.generators()) EXPECT_EQ(evaluate(g, pt), 0);
  }
}

TEST(Bench, SmallCyclicIdeals) {
  auto a = cyclic_polytope_sr(2, 4);
  EXPECT_EQ(a.name, "I4-4-2");
  EXPECT_EQ(write_ideal(a.ideal), write_ideal(I(a.ideal.ring(), {"x1*x3", "x2*x4"})));
  auto b = cyclic_polytope_sr(2, 5);
  EXPECT_EQ(b.ideal.generators().size(), 5u);
  EXPECT_THROW(cyclic_polytope_sr(3, 4), std::invalid_argument);
}

TEST(Bench, CoordinateChangeKeepsVerdict) {
  for (auto inst : {rational_normal_curve(3), cyclic_polytope_sr(2, 5), veronese_ci()}) {
    auto changed = random_coordinate_change(inst, 7, 3);
    EXPECT_EQ(krull_dimension(changed.ideal), krull_dimension(inst.ideal));
    Verdict a = projective_smoothness(inst.ideal, Config{});
    Verdict b = projective_smoothness(changed.ideal, Config{});
    EXPECT_EQ(a.outcome, b.outcome) << inst.name;
    ASSERT_TRUE(inst.expected);
    EXPECT_EQ(a.outcome, *inst.expected) << inst.name;
  }
  auto m = random_invertible_matrix(5, 11, 4);
  EXPECT_NE(scalar_determinant(Field::rationals(), m), 0);
}

TEST(Bench, SuitesRoundTripThroughWriter) {
  for (const auto& name : bench_suite_names())
    for (const auto& inst : bench_suite(name)) {
      Ideal back = parse_ideal(write_ideal(inst.ideal));
      ASSERT_EQ(back.generators().size(), inst.ideal.generators().size()) << inst.name;
      for (const auto& g : back.generators()) EXPECT_TRUE(ideal_membership(g, inst.ideal)) << inst.name;
      for (const auto& g : inst.ideal.generators()) EXPECT_TRUE(ideal_membership(g, back)) << inst.name;
    }
  EXPECT_THROW(bench_suite("nope"), std::invalid_argument);
}
