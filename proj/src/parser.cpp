#include "qcg/parser.hpp"

#include <cctype>

namespace qcg {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int nvars;

  char peek() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos < s.size() ? s[pos] : '\0';
  }
  void advance() { ++pos; }

  [[noreturn]] void fail(const std::string& what) {
    throw UsageError("polynomial parse error at position " + std::to_string(pos) + ": " + what);
  }

  Integer integer() {
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    if (digits.empty()) fail("expected a number");
    return Integer(digits);
  }

  WPolynomial base() {
    char c = peek();
    if (c == '(') {
      advance();
      WPolynomial e = expr();
      if (peek() != ')') fail("expected ')'");
      advance();
      return e;
    }
    if (c == '-') {
      advance();
      return -base();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      if (peek() == '/') {
        advance();
        Integer den = integer();
        if (den == 0) fail("zero denominator");
        return WPolynomial::constant(nvars, Rational(num, den));
      }
      return WPolynomial::constant(nvars, Rational(num));
    }
    if (c == 'q' || c == 'Q') {
      advance();
      return WPolynomial::q_power(nvars, 1);
    }
    if (c == 'x' || c == 'X') {
      advance();
      if (peek() == '_') advance();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index");
      Integer idx = integer();
      if (idx < 1 || idx > nvars)
        fail("variable index out of range 1.." + std::to_string(nvars));
      return WPolynomial::variable(nvars, int(idx) - 1);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  WPolynomial power() {
    WPolynomial b = base();
    if (peek() == '^') {
      advance();
      bool neg = false;
      if (peek() == '-') neg = true, advance();
      Integer e = integer();
      if (neg) fail("negative exponents are not polynomial");
      if (e > 512) fail("exponent too large");
      return b.pow(int(e));
    }
    return b;
  }

  WPolynomial term() {
    WPolynomial t = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        advance();
        t *= power();
      } else if (c == '(' || c == 'x' || c == 'X' || c == 'q' || c == 'Q') {
        t *= power(); // juxtaposition, e.g. "2X1" or "q(1 - X1)"
      } else {
        return t;
      }
    }
  }

  WPolynomial expr() {
    WPolynomial e(nvars);
    char c = peek();
    bool neg = c == '-';
    if (c == '+' || c == '-') advance();
    e = term();
    if (neg) e = -e;
    while (true) {
      c = peek();
      if (c == '+') {
        advance();
        e += term();
      } else if (c == '-') {
        advance();
        e -= term();
      } else {
        return e;
      }
    }
  }
};

} // namespace

WPolynomial parse_polynomial(const std::string& text, int nvars) {
  Parser p{text, 0, nvars};
  WPolynomial e = p.expr();
  if (p.peek() != '\0') p.fail("trailing input");
  return e;
}

} // namespace qcg
