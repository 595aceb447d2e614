#include "twodir/const_expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "twodir/errors.hpp"

namespace twodir {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  double run() {
    const double value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ExprError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  double expr() {
    double value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  double term() {
    double value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const double divisor = unary();
        if (divisor == 0.0) throw ExprError("division by zero", at);
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  double primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      const double value = expr();
      expect(')');
      return value;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      const std::size_t at = pos_;
      pos_ += 4;
      expect('(');
      const double arg = expr();
      expect(')');
      if (arg < 0.0) throw ExprError("sqrt of negative", at);
      return std::sqrt(arg);
    }
    return number();
  }

  double number() {
    const char c = text_[pos_];
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.') {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    double value = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value, std::chars_format::general);
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }
};

}  // namespace

double parse_const_expr(std::string_view text) { return Parser(text).run(); }

}  // namespace twodir
