#include <gtest/gtest.h>

#include "smooth/charts.hpp"
#include "support.hpp"

using namespace smooth;
using namespace testing_support;

namespace {

Chart circle_chart(const RingPtr& r, const std::vector<std::string>& variety) {
  return Chart::checked(I(r, {"x^2+y^2-1"}), I(r, variety), P(r, "1"));
}

std::vector<FrameData> all_frames(const Chart& c, const ChartOptions& o = {}) {
  FrameEnumerator e(c, o);
  std::vector<FrameData> out;
  while (auto f = e.next()) {
    out.push_back(*f);
    if (e.check_cover()) break;
  }
  return out;
}

}  // namespace

TEST(Frames, TrivialChart) {
  auto r = qq({"x", "y"});
  auto frames = all_frames(Chart::trivial(I(r, {"x"})));
  ASSERT_EQ(frames.size(), 1u);
  EXPECT_TRUE(frames[0].q.is_one());
  EXPECT_EQ(frames[0].m.rows(), 0u);
}

TEST(Frames, Circle) {
  auto r = qq({"x", "y"});
  Chart c = circle_chart(r, {"x^2+y^2-1"});
  FrameEnumerator e(c);
  auto f1 = e.next();
  ASSERT_TRUE(f1);
  EXPECT_EQ(f1->q, P(r, "2*x"));
  EXPECT_FALSE(e.check_cover());
  auto f2 = e.next();
  ASSERT_TRUE(f2);
  EXPECT_EQ(f2->q, P(r, "2*y"));
  EXPECT_TRUE(e.check_cover());
  EXPECT_FALSE(e.next());
}

TEST(Frames, ConstantMinorCoversAtOnce) {
  auto r = qq({"x", "y"});
  Chart c = Chart::checked(I(r, {"x"}), I(r, {"x", "y"}), P(r, "1"));
  auto frames = all_frames(c);
  ASSERT_EQ(frames.size(), 1u);
  EXPECT_TRUE(frames[0].q.is_one());
}

TEST(Frames, StrictAndLiftCoverAgreeOnCoverage) {
  auto r = qq({"x", "y", "z"});
  Chart c = Chart::checked(I(r, {"x^2+y^2+z^2-1"}), I(r, {"x^2+y^2+z^2-1", "z"}), P(r, "1"));
  for (ChartOptions o : {ChartOptions{}, ChartOptions{.strict_cover = true}, ChartOptions{.lift_cover = true}}) {
    FrameEnumerator e(c, o);
    while (e.next())
      if (e.check_cover()) break;
    EXPECT_EQ(e.cover_complete(), !o.strict_cover);
    EXPECT_TRUE(radical_membership(c.localizer, c.ambient.plus(e.determinants())));
  }
}

TEST(RelativeJacobian, HandValues) {
  auto r = qq({"x", "y"});
  Chart c = circle_chart(r, {"x^2+y^2-1", "y"});
  auto f = make_frame(c, {0});
  ASSERT_TRUE(f);
  PolyMatrix d = relative_jacobian({P(r, "y"), P(r, "x^2+y^2-1")}, c, *f);
  ASSERT_EQ(d.cols(), 1u);
  EXPECT_EQ(d.at(0, 0), P(r, "2*x"));
  EXPECT_TRUE(d.at(1, 0).is_zero());

  Chart t = Chart::trivial(I(r, {"x^2"}));
  auto tf = make_frame(t, {});
  PolyMatrix g = relative_jacobian({P(r, "x^2")}, t, *tf);
  EXPECT_EQ(g.at(0, 0), P(r, "2*x"));
  EXPECT_TRUE(g.at(0, 1).is_zero());
}

TEST(RelativeJacobian, TangencyOnRandomCharts) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 25; ++round) {
    auto r = qq({"a", "b", "c", "d"});
    std::size_t rr = 1 + round % 2;
    std::vector<Polynomial> amb;
    for (std::size_t i = 0; i < rr; ++i) amb.push_back(random_poly(rng, r, 3, 4));
    Chart c{Ideal(r, amb), Ideal(r, amb), P(r, "1"), 0};
    for_each_subset(4, c.codim(), [&](const std::vector<std::size_t>& cols) {
      auto f = make_frame(c, cols);
      if (!f) return true;
      PolyMatrix d = relative_jacobian(c.ambient.generators(), c, *f);
      for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) EXPECT_TRUE(d.at(i, j).is_zero());
      return true;
    });
  }
}

TEST(Delta, Examples) {
  auto r = qq({"x", "y"});
  EXPECT_TRUE(delta_check(Chart::trivial(I(r, {"x^2+y^2-1"}))));
  EXPECT_FALSE(delta_check(Chart::trivial(I(r, {"x^2-y^2"}))));
  Chart c = circle_chart(r, {"x^2+y^2-1", "y"});
  auto f = make_frame(c, {0});
  EXPECT_TRUE(check_delta_frame(c, *f));
  EXPECT_TRUE(delta_check(c));
  // order 2 along the circle
  EXPECT_FALSE(delta_check(circle_chart(r, {"x^2+y^2-1", "y^2"})));
}

TEST(SingularLocus, Examples) {
  auto r = qq({"x", "y"});
  Chart t = Chart::trivial(I(r, {"x*(y+1)"}));
  Ideal sl = singular_locus_ideal(t, P(r, "x*(y+1)"));
  auto gb = buchberger(sl);
  EXPECT_EQ(gb.elements(), buchberger(I(r, {"x", "y+1"})).elements());
  EXPECT_TRUE(is_unit_ideal(singular_locus_ideal(Chart::trivial(I(r, {"x"})), P(r, "x"))));
  Chart c = circle_chart(r, {"x^2+y^2-1", "y"});
  EXPECT_TRUE(is_unit_ideal(singular_locus_ideal(c, P(r, "y"))));
  EXPECT_THROW(singular_locus_ideal(c, P(r, "x^2+y^2-1")), std::invalid_argument);
}

TEST(Descend, GlobalGenerator) {
  auto r = qq({"x", "y", "z"});
  std::mt19937_64 rng(1);
  auto d = descend(Chart::trivial(I(r, {"x", "y"})), rng);
  EXPECT_EQ(d.path, Descent::Path::generator);
  ASSERT_EQ(d.charts.size(), 1u);
  EXPECT_EQ(d.charts[0].ambient, I(r, {"x"}));
  EXPECT_TRUE(d.charts[0].localizer.is_one());
  EXPECT_EQ(d.charts[0].depth, 1u);
}

TEST(Descend, TwoPointsCoverAndCombination) {
  auto r = qq({"x", "y"});
  Ideal x = I(r, {"x*(y+1)", "y*(x+1)"});
  std::mt19937_64 rng(5);
  auto cover = descend(Chart::trivial(x), rng, ChartOptions{.combinations = false});
  EXPECT_EQ(cover.path, Descent::Path::cover);
  ASSERT_EQ(cover.charts.size(), 2u);
  // the localizers cover the variety
  std::vector<Polynomial> locs;
  for (const auto& c : cover.charts) locs.push_back(c.localizer);
  EXPECT_TRUE(radical_membership(P(r, "1"), x.plus(locs)));
  for (const auto& c : cover.charts) EXPECT_TRUE(delta_check(c));

  auto comb = descend(Chart::trivial(x), rng);
  EXPECT_EQ(comb.path, Descent::Path::combination);
  EXPECT_EQ(comb.charts.size(), 1u);
}

TEST(EmbeddedJacobian, Examples) {
  auto r = qq({"x", "y"});
  EXPECT_FALSE(embedded_jacobian(Chart::trivial(I(r, {"y^2-x^3"}))));
  EXPECT_TRUE(embedded_jacobian(Chart::trivial(I(r, {"y-x^2"}))));
  auto r6 = qq({"x1", "x2", "x3", "x4", "y1", "y2"});
  EXPECT_FALSE(embedded_jacobian(Chart::trivial(I(r6, {"x1*x3-y1*y2", "x2*x4-y1*y2"}))));
  Chart c = circle_chart(r, {"x^2+y^2-1", "y"});
  EXPECT_EQ(embedded_codimension(c), 1u);
  EXPECT_TRUE(embedded_jacobian(c));
  // two great circles on the sphere meet at the poles
  auto r3 = qq({"x", "y", "z"});
  Chart s2 = Chart::checked(I(r3, {"x^2+y^2+z^2-1"}), I(r3, {"x^2+y^2+z^2-1", "x*y"}), P(r3, "1"));
  EXPECT_FALSE(embedded_jacobian(s2));
  EXPECT_FALSE(delta_check(s2) && embedded_jacobian(s2));
}

TEST(AffineJacobian, Examples) {
  auto r = qq({"x", "y"});
  EXPECT_FALSE(affine_jacobian_criterion(I(r, {"y^2-x^3"})));
  EXPECT_TRUE(affine_jacobian_criterion(I(r, {"x^2+y^2-1"})));
  EXPECT_TRUE(affine_jacobian_criterion(Ideal(r)));
  EXPECT_TRUE(affine_jacobian_criterion(I(r, {"1"})));
  // characteristic 2: x^2+y^2-1 = (x+y+1)^2 is not reduced, so its radical is used
  EXPECT_TRUE(affine_jacobian_criterion(I(fp(2, {"x", "y"}), {"x+y+1"})));
  // twisted cubic cone is singular at the origin
  auto r4 = qq({"x", "y", "z", "w"});
  EXPECT_FALSE(affine_jacobian_criterion(I(r4, {"x*z-y^2", "y*w-z^2", "x*w-y*z"})));
  EXPECT_TRUE(affine_jacobian_criterion(I(r4, {"1*z-y^2", "y*w-z^2", "w-y*z"})));
}
