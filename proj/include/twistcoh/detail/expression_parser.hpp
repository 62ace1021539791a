#pragma once

// Recursive-descent parser for `2*x*y - 1/3*z + (a + b)^2`-style sums,
// shared by the algebra and polynomial front ends.  `Ops` supplies
//   T scalar(const Scalar &), T multiply(const T &, const T &),
//   T add(const T &, const T &), T power(const T &, int), T atom(name).

#include "twistcoh/exactlin.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace twistcoh::detail {

template <class T, class Ops, class Error> class ExpressionParser {
public:
  ExpressionParser(const Ops &ops, std::string_view text)
      : ops_(ops), text_(text) {}

  T parse() {
    T result = parse_sum();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, peek()) + "'");
    }
    return result;
  }

private:
  char peek() const { return text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string &message) const {
    throw Error(message + " at column " + std::to_string(pos_ + 1) + " in '" +
                std::string(text_) + "'");
  }

  T parse_sum() {
    skip_space();
    if (at_end() || peek() == ')') {
      fail("empty expression");
    }
    T result = ops_.scalar(linalg::Scalar(0));
    bool first = true;
    while (true) {
      skip_space();
      if (at_end() || peek() == ')') {
        break;
      }
      linalg::Scalar sign(1);
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') {
          sign = -1;
        }
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result = ops_.add(result, ops_.multiply(ops_.scalar(sign), parse_term()));
    }
    return result;
  }

  T parse_term() {
    T term = parse_factor();
    while (true) {
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        term = ops_.multiply(term, parse_factor());
        continue;
      }
      break;
    }
    return term;
  }

  T parse_factor() {
    if (at_end()) {
      fail("expected a factor");
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                           peek() == '/')) {
        ++pos_;
      }
      linalg::Scalar c;
      try {
        c = linalg::parse_scalar(std::string(text_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument &) {
        fail("bad rational");
      }
      return apply_power(ops_.scalar(c));
    }
    if (peek() == '(') {
      ++pos_;
      T inner = parse_sum();
      skip_space();
      if (at_end() || peek() != ')') {
        fail("unbalanced parenthesis");
      }
      ++pos_;
      return apply_power(inner);
    }
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_' || peek() == '\'')) {
      ++pos_;
    }
    if (start == pos_) {
      fail("unexpected character '" + std::string(1, peek()) + "'");
    }
    return apply_power(ops_.atom(text_.substr(start, pos_ - start)));
  }

  T apply_power(const T &base) {
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        ++pos_;
      }
      if (start == pos_ || pos_ - start > 6) {
        fail("expected a small exponent");
      }
      return ops_.power(base,
                        std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  const Ops &ops_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace twistcoh::detail
