#include <gtest/gtest.h>

#include "support.hpp"

using namespace smooth;
using namespace testing_support;

TEST(Parser, Cusp) {
  Ideal id = parse_ideal("ring QQ [x,y]\ny^2-x^3\n");
  EXPECT_EQ(id.ring()->field().name(), "QQ");
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id.generators()[0].to_string(), "-x^3+y^2");
}

TEST(Parser, PrimeFieldReduces) {
  Ideal id = parse_ideal("ring F103 [x,y]\nx+104*y");
  EXPECT_EQ(id.generators()[0], P(id.ring(), "x+y"));
}

TEST(Parser, Grammar) {
  auto r = qq({"x", "y", "z1"});
  EXPECT_EQ(P(r, " - ( x + y ) ^ 2 * 3 "), P(r, "-3*x^2-6*x*y-3*y^2"));
  EXPECT_EQ(P(r, "--x"), P(r, "x"));
  EXPECT_EQ(P(r, "z1^0"), P(r, "1"));
  EXPECT_EQ(P(r, "123456789012345678901234567890*x-123456789012345678901234567890*x"), Polynomial(r));
}

TEST(Parser, NegativeExponentIsPositioned) {
  try {
    parse_ideal("ring QQ [x]\nx^(-1)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::syntax);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_EQ(e.expected(), std::vector<std::string>{"integer"});
  }
}

TEST(Parser, Errors) {
  auto kind = [](const std::string& text) {
    try {
      parse_ideal(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    throw std::logic_error("parsed: " + text);
  };
  EXPECT_EQ(kind("ring QQ [x]\n2x"), ParseError::Kind::syntax);
  EXPECT_EQ(kind("ring QQ [x]\nx y"), ParseError::Kind::syntax);
  EXPECT_EQ(kind("ring QQ [x]\n(x+1"), ParseError::Kind::syntax);
  EXPECT_EQ(kind("ring QQ [x]\ny"), ParseError::Kind::unknown_identifier);
  EXPECT_EQ(kind("ring QQ [x]\nx^99999999999"), ParseError::Kind::exponent_overflow);
  EXPECT_EQ(kind("ring F4 [x]\nx"), ParseError::Kind::header);
  EXPECT_EQ(kind("ring QQ [x,x]\nx"), ParseError::Kind::header);
  EXPECT_EQ(kind("ring QQ [x]\n# nothing\n\n"), ParseError::Kind::syntax);
  EXPECT_EQ(kind("x+1"), ParseError::Kind::header);
}

TEST(Writer, RoundTrip) {
  std::string text = "# comment\nring F32003 [a,b,c]\n\na*b-c^2\n  3*a^5 - 7\n";
  Ideal id = parse_ideal(text);
  EXPECT_EQ(parse_ideal(write_ideal(id)), id);

  auto r = qq({"x", "y"});
  Ideal half(r, {P(r, "x").scaled(Scalar(1, 2)) + P(r, "y").scaled(Scalar(2, 3))});
  EXPECT_EQ(write_ideal(half), "ring QQ [x,y]\n3*x+4*y\n");
  EXPECT_EQ(write_ideal(Ideal(r)), "ring QQ [x,y]\n0\n");
  EXPECT_TRUE(parse_ideal(write_ideal(Ideal(r))).is_zero());
}
