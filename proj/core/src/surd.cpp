// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// SurdValue text rendering, cross-field comparison, and the little
// expression parser used by the command line and the region DSL.

#include "socf/surd.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace socf {

std::string SurdValue::to_string() const {
  if (is_rational()) {
    if (c_ == 1) return a_.get_str();
    return a_.get_str() + "/" + c_.get_str();
  }
  std::string root = "sqrt(" + d_.get_str() + ")";
  std::string num;
  if (a_ != 0) num = a_.get_str();
  if (b_ == 1) {
    num += num.empty() ? root : "+" + root;
  } else if (b_ == -1) {
    num += "-" + root;
  } else {
    std::string bs = b_.get_str();
    if (!num.empty() && b_ > 0) num += "+";
    num += bs + "*" + root;
  }
  if (c_ == 1) return num;
  if (a_ != 0) return "(" + num + ")/" + c_.get_str();
  return num + "/" + c_.get_str();
}

int compare_any(const SurdValue& u, const SurdValue& v) {
  if (compatible(u, v)) return surd_compare(u, v);
  // Two irrationals from different quadratic fields are never equal, so
  // shrinking strict enclosures must eventually separate them.
  for (unsigned long k = 32; k <= 1u << 14; k *= 2) {
    RatInterval eu = u.enclosure(k);
    RatInterval ev = v.enclosure(k);
    if (eu.hi() <= ev.lo()) return -1;
    if (ev.hi() <= eu.lo()) return 1;
  }
  throw Error("cross-field comparison did not separate");  // unreachable
}

namespace {

/// Recursive-descent parser over a flat character view.
class SurdParser {
 public:
  explicit SurdParser(std::string_view text) : text_(text) {}

  SurdValue run() {
    SurdValue v = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("trailing characters in expression: '" +
                       std::string(text_.substr(pos_)) + "'");
    return v;
  }

 private:
  SurdValue expr() {
    SurdValue v = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  SurdValue term() {
    SurdValue v = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        SurdValue w = factor();
        if (w.is_zero()) throw ParseError("division by zero in expression");
        v /= w;
      } else {
        return v;
      }
    }
  }

  SurdValue factor() {
    skip_ws();
    if (accept('-')) return -factor();
    return primary();
  }

  SurdValue primary() {
    skip_ws();
    if (accept('(')) {
      SurdValue v = expr();
      expect(')');
      return v;
    }
    if (accept_word("sqrt")) {
      skip_ws();
      expect('(');
      SurdValue arg = expr();
      expect(')');
      if (!arg.is_rational())
        throw ParseError("nested radicals are not supported");
      BigFraction r = arg.to_fraction();
      if (r.sign() < 0) throw ParseError("square root of negative value");
      // sqrt(p/q) == sqrt(p*q) / q keeps everything in one radical.
      return SurdValue(Int(0), Int(1), r.den(), r.num() * r.den());
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return SurdValue(parse_int(text_.substr(start, pos_ - start)));
    }
    throw ParseError("expected a number, sqrt(...), or '(' at position " +
                     std::to_string(pos_) + " of '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "' in '" +
                       std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SurdValue parse_surd(std::string_view text) { return SurdParser(text).run(); }

}  // namespace socf
