#include <cctype>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "smooth/io.hpp"

namespace smooth {

namespace {

std::string describe(std::string message, const std::vector<std::string>& expected) {
  if (expected.empty()) return message;
  message += " (expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) message += i + 1 == expected.size() ? " or " : ", ";
    message += expected[i];
  }
  return message + ")";
}

constexpr std::uint64_t kMaxDegree = std::numeric_limits<std::int32_t>::max();

class ExprParser {
 public:
  ExprParser(const RingPtr& ring, std::string_view text, std::size_t line, std::size_t offset)
      : ring_(ring), text_(text), line_(line), offset_(offset) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ < text_.size()) fail(follow());
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() const { return offset_ + pos_ + 1; }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string found = pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end of line";
    throw ParseError(ParseError::Kind::syntax, line_, column(), found, std::move(expected));
  }

  std::vector<std::string> follow() const {
    std::vector<std::string> e{"'^'", "'*'", "'+'", "'-'"};
    e.push_back(depth_ ? "')'" : "end of line");
    return e;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek() == '*') {
      ++pos_;
      acc *= unary();
    }
    return acc;
  }

  Polynomial unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail({"integer"});
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    mpz_class e(std::string(text_.substr(start, pos_ - start)));
    std::uint64_t deg = base.is_zero() ? 0 : static_cast<std::uint64_t>(base.total_degree());
    if (!e.fits_ulong_p() || e.get_ui() > kMaxDegree || (deg && deg * e.get_ui() > kMaxDegree))
      throw ParseError(ParseError::Kind::exponent_overflow, line_, offset_ + start + 1,
                       "exponent " + e.get_str() + " is too large");
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ++depth_;
      Polynomial p = expr();
      if (peek() != ')') fail(follow());
      ++pos_;
      --depth_;
      return p;
    }
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class v(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, ring_->field().from_integer(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx)
        throw ParseError(ParseError::Kind::unknown_identifier, line_, offset_ + start + 1,
                         "unknown identifier '" + name + "'");
      return Polynomial::variable(ring_, *idx);
    }
    fail({"integer", "identifier", "'('", "'-'"});
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t line_, offset_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

RingPtr parse_header(std::string_view s, std::size_t line) {
  std::size_t pos = 0;
  auto col = [&] { return pos + 1; };
  auto skip = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
  };
  auto fail = [&](const std::string& msg, std::vector<std::string> expected) {
    throw ParseError(ParseError::Kind::header, line, col(), msg, std::move(expected));
  };
  skip();
  if (s.substr(pos, 4) != "ring") fail("missing ring header", {"'ring'"});
  pos += 4;
  std::size_t before = pos;
  skip();
  if (pos == before) fail("missing whitespace after 'ring'", {"whitespace"});
  Field field = Field::rationals();
  if (s.substr(pos, 2) == "QQ") {
    pos += 2;
  } else if (pos < s.size() && s[pos] == 'F') {
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("missing characteristic", {"integer"});
    mpz_class p(std::string(s.substr(start, pos - start)));
    if (!p.fits_ulong_p() || p.get_ui() >= (1ul << 31) || !is_prime(p.get_ui())) {
      pos = start;
      fail("characteristic " + p.get_str() + " is not a prime below 2^31", {});
    }
    field = Field::prime(static_cast<std::uint32_t>(p.get_ui()));
  } else {
    fail("unknown field", {"'QQ'", "'F<prime>'"});
  }
  before = pos;
  skip();
  if (pos == before) fail("missing whitespace after field", {"whitespace"});
  if (pos >= s.size() || s[pos] != '[') fail("malformed variable list", {"'['"});
  ++pos;
  std::vector<std::string> names;
  for (;;) {
    skip();
    if (pos >= s.size() || !is_ident_start(s[pos])) fail("malformed variable list", {"identifier"});
    std::size_t start = pos;
    while (pos < s.size() && is_ident_char(s[pos])) ++pos;
    std::string name(s.substr(start, pos - start));
    for (const auto& n : names)
      if (n == name) {
        pos = start;
        fail("duplicate variable '" + name + "'", {});
      }
    names.push_back(std::move(name));
    skip();
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < s.size() && s[pos] == ']') {
      ++pos;
      break;
    }
    fail("malformed variable list", {"','", "']'"});
  }
  skip();
  if (pos < s.size()) fail("trailing characters after header", {"end of line"});
  return make_ring(field, std::move(names));
}

bool skippable(std::string_view s) {
  for (char c : s) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, std::string message,
                       std::vector<std::string> expected)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         describe(std::move(message), expected)),
      kind_(kind),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, std::size_t line) {
  return ExprParser(ring, text, line, 0).parse();
}

Ideal parse_ideal(std::string_view text) {
  std::size_t line = 0, pos = 0;
  RingPtr ring;
  std::vector<Polynomial> gens;
  std::size_t count = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view s = text.substr(pos, end - pos);
    ++line;
    pos = end + 1;
    if (skippable(s)) {
      if (end == text.size()) break;
      continue;
    }
    if (!ring) {
      ring = parse_header(s, line);
    } else {
      gens.push_back(ExprParser(ring, s, line, 0).parse());
      ++count;
    }
    if (end == text.size()) break;
  }
  if (!ring) throw ParseError(ParseError::Kind::header, line ? line : 1, 1, "missing ring header", {"'ring'"});
  if (count == 0)
    throw ParseError(ParseError::Kind::syntax, line + 1, 1, "no generators", {"polynomial"});
  return Ideal(ring, std::move(gens));
}

Ideal read_ideal_file(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  return parse_ideal(buf.str());
}

std::string write_ideal(const Ideal& ideal) {
  const Ring& r = *ideal.ring();
  std::string out = "ring " + r.field().name() + " [";
  for (std::size_t i = 0; i < r.arity(); ++i) {
    if (i) out += ',';
    out += r.variable(i);
  }
  out += "]\n";
  if (ideal.is_zero()) return out + "0\n";
  for (const auto& g : ideal.generators()) {
    mpz_class l = 1;
    if (r.field().is_rational())
      for (const auto& c : g.raw_coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    out += (l == 1 ? g : g.scaled(Scalar(l))).to_string();
    out += '\n';
  }
  return out;
}

}  // namespace smooth
