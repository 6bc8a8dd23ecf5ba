// Polynomial text grammar:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*
//   factor  := '-' factor | primary ['^' integer]
//   primary := number ['/' number] | variable | '(' expr ')'

#include <cctype>

#include "splines/algebra.hpp"

namespace splines {

namespace {

int variable_index(char c) {
  switch (c) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return 2;
    case 'w': return 3;
    default: return -1;
  }
}

class Parser {
 public:
  Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionError("polynomial parse error at offset " + std::to_string(pos_) + " in \"" +
                            std::string(text_) + "\": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || variable_index(c) >= 0 || c == '(';
  }

  Poly expr() {
    Poly acc(nvars_);
    char c = peek();
    bool negate = false;
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Poly t = term();
    acc = negate ? -t : t;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly next = term();
      if (c == '+')
        acc += next;
      else
        acc -= next;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 3) fail("exponent too large");
      const int e = std::stoi(digits);
      if (e > 255) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(nvars_, number());
    const int v = variable_index(c);
    if (v >= 0) {
      if (v >= nvars_) fail(std::string("variable '") + c + "' is outside the ring");
      ++pos_;
      return Poly::variable(nvars_, v);
    }
    fail("expected a number, variable or '('");
  }

  Rational number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Integer num(std::string(text_.substr(start, pos_ - start)));
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected a denominator");
      Integer den(std::string(text_.substr(dstart, pos_ - dstart)));
      if (den == 0) fail("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  std::string_view text_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, int nvars) { return Parser(text, nvars).parse(); }

int variables_used(std::string_view text) {
  int highest = 0;
  for (char c : text) {
    const int v = variable_index(c);
    if (v >= 0) highest = std::max(highest, v + 1);
  }
  return highest;
}

Rational parse_rational(std::string_view text) {
  Poly p = parse_poly(text, 1);
  if (!p.is_constant()) throw PreconditionError("expected a rational number, got \"" + std::string(text) + "\"");
  return p.is_zero() ? Rational(0) : p.leading_coefficient();
}

}  // namespace splines
