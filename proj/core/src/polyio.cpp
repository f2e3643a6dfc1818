#include "salemforge/polyio.hpp"

#include <cctype>
#include <vector>

#include "salemforge/error.hpp"

namespace salemforge {

namespace {

constexpr long kMaxExponent = 100000;

struct Char {
  char c;
  int line;
  int column;
};

// Folds U+2212 into '-' and records the source position of every character.
std::vector<Char> normalize(std::string_view text) {
  std::vector<Char> out;
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      out.push_back({'-', line, column});
      i += 2;
    } else {
      out.push_back({text[i], line, column});
    }
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Char> chars) : s_(std::move(chars)) {}

  IntPolynomial parse_list() {
    skip_space();
    const bool bracket = peek() == '[';
    if (bracket) advance();
    std::vector<Integer> coeffs;
    while (true) {
      skip_space();
      coeffs.push_back(signed_integer());
      skip_space();
      if (peek() == ',') {
        advance();
        continue;
      }
      break;
    }
    if (bracket) expect(']');
    skip_space();
    if (!at_end()) error("unexpected character in coefficient list");
    return IntPolynomial(std::move(coeffs));
  }

  IntPolynomial parse_expression() {
    IntPolynomial p = expr();
    skip_space();
    if (!at_end()) error("unexpected character");
    return p;
  }

 private:
  std::vector<Char> s_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_].c; }
  void advance() { ++pos_; }

  [[noreturn]] void error(const std::string& msg) const {
    int line = 1;
    int column = 1;
    if (!at_end()) {
      line = s_[pos_].line;
      column = s_[pos_].column;
    } else if (!s_.empty()) {
      line = s_.back().line;
      column = s_.back().column + 1;
    }
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) error(std::string("expected '") + c + "'");
    advance();
  }

  Integer digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected an integer");
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      d += peek();
      advance();
    }
    return Integer(d, 10);
  }

  Integer signed_integer() {
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      advance();
      skip_space();
    }
    Integer v = digits();
    return negative ? Integer(-v) : v;
  }

  bool starts_factor() {
    skip_space();
    const char c = peek();
    return c == 'z' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  IntPolynomial expr() {
    skip_space();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      advance();
    }
    IntPolynomial acc = term();
    if (negative) acc = -acc;
    while (true) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      advance();
      IntPolynomial t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  IntPolynomial term() {
    IntPolynomial acc = factor();
    while (true) {
      skip_space();
      if (peek() == '*') {
        advance();
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  IntPolynomial factor() {
    IntPolynomial base = primary();
    skip_space();
    if (peek() != '^') return base;
    advance();
    skip_space();
    const Integer e = digits();
    if (e > kMaxExponent) error("exponent too large");
    IntPolynomial out{1};
    for (long i = 0; i < e.get_si(); ++i) out *= base;
    return out;
  }

  IntPolynomial primary() {
    skip_space();
    const char c = peek();
    if (c == 'z') {
      advance();
      return IntPolynomial{0, 1};
    }
    if (c == '(') {
      advance();
      IntPolynomial inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return IntPolynomial::constant(digits());
    if (at_end()) error("unexpected end of input");
    error(std::string("unexpected character '") + c + "'");
  }
};

bool looks_like_expression(const std::vector<Char>& chars) {
  for (const auto& ch : chars) {
    if (ch.c == 'z' || ch.c == '^' || ch.c == '(' || ch.c == '*') return true;
  }
  return false;
}

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
  std::vector<Char> chars = normalize(text);
  bool blank = true;
  for (const auto& ch : chars) blank = blank && std::isspace(static_cast<unsigned char>(ch.c));
  if (blank) fail(ErrorCode::ParseError, "line 1, column 1: empty polynomial");
  const bool expression = looks_like_expression(chars);
  Parser parser(std::move(chars));
  return expression ? parser.parse_expression() : parser.parse_list();
}

std::string to_ascending(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i > 0) out += ',';
    out += p.coefficients()[i].get_str();
  }
  return out;
}

std::string to_expression(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "z";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace salemforge
