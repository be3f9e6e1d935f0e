#ifndef MOSVA_GEOMETRY_PARSER_HPP
#define MOSVA_GEOMETRY_PARSER_HPP

#include <cctype>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "mosva/geometry/expr.hpp"

namespace mosva {

/// Parse failure; position() is the zero-based offset in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Recursive-descent parser for the function expression language:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?
///   primary := number | name | func '(' expr ')' | '(' expr ')'
///
/// Names are the chart coordinates and the constant `pi`; func is one of sin, cos, exp, log.
class ExpressionParser {
 public:
  ExpressionParser(std::string text, std::vector<std::string> coordinates)
      : text_(std::move(text)), coordinates_(std::move(coordinates)) {}

  Expr parse() {
    pos_ = 0;
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Expr expr() {
    Expr left = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Expr right = term();
      left = c == '+' ? left + right : left - right;
    }
    return left;
  }

  Expr term() {
    Expr left = unary();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      ++pos_;
      Expr right = unary();
      left = c == '*' ? left * right : left / right;
    }
    return left;
  }

  Expr unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power_expr();
  }

  Expr power_expr() {
    Expr base = primary();
    if (peek() == '^') {
      ++pos_;
      return power(base, unary());
    }
    return base;
  }

  Expr primary() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    const std::string literal = text_.substr(start, pos_ - start);
    char* end = nullptr;
    const double v = std::strtod(literal.c_str(), &end);
    if (end != literal.c_str() + literal.size()) {
      pos_ = start;
      fail("malformed number '" + literal + "'");
    }
    return Expr(v);
  }

  Expr name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string id = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < coordinates_.size(); ++i)
      if (coordinates_[i] == id) return Expr::variable(static_cast<int>(i), id);
    if (id == "pi") return Expr(std::numbers::pi);
    if (id == "sin" || id == "cos" || id == "exp" || id == "log") {
      expect('(');
      Expr arg = expr();
      expect(')');
      if (id == "sin") return sin(arg);
      if (id == "cos") return cos(arg);
      if (id == "exp") return exp(arg);
      return log(arg);
    }
    pos_ = start;
    fail("unknown identifier '" + id + "'");
  }

  std::string text_;
  std::vector<std::string> coordinates_;
  std::size_t pos_ = 0;
};

inline Expr parse_expression(const std::string& text, const std::vector<std::string>& coordinates) {
  return ExpressionParser(text, coordinates).parse();
}

}  // namespace mosva

#endif  // MOSVA_GEOMETRY_PARSER_HPP
