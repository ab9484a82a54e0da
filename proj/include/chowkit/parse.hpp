#pragma once

// Recursive-descent parser for polynomial expressions.
//
//   sum     := signed { ('+' | '-') signed }
//   signed  := '-' signed | '+' signed | product
//   product := power { '*' power }
//   power   := atom [ '^' digits ]
//   atom    := digits [ '/' digits ] | identifier | '(' sum ')'
//
// Whitespace between tokens is ignored. Unary minus binds weakest, so -x^2 is
// -(x^2) and -a*b is -(a*b).

#include <cctype>
#include <string>
#include <string_view>

#include "chowkit/error.hpp"
#include "chowkit/poly.hpp"

namespace chowkit {

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, SignaturePtr sig) : s_(text), sig_(std::move(sig)) {}

  Poly parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Poly p = sum();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  static constexpr unsigned kMaxExponent = 4096;
  static constexpr int kMaxDepth = 256;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly sum() {
    Poly acc = signed_term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += signed_term();
      } else if (peek('-')) {
        ++pos_;
        acc -= signed_term();
      } else {
        return acc;
      }
    }
  }

  Poly signed_term() {
    if (++depth_ > kMaxDepth) throw ParseError("expression nested too deeply", pos_);
    Poly out;
    if (peek('-')) {
      ++pos_;
      out = -signed_term();
    } else if (peek('+')) {
      ++pos_;
      out = signed_term();
    } else {
      out = product();
    }
    --depth_;
    return out;
  }

  Poly product() {
    Poly acc = power();
    while (peek('*')) {
      ++pos_;
      acc *= power();
    }
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      const std::string e = digits();
      if (e.size() > 4 || std::stoul(e) > kMaxExponent) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (peek('/')) {
        ++pos_;
        skip();
        const std::size_t at = pos_;
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", at);
        num += "/" + den;
      }
      Rational r(num, 10);
      r.canonicalize();
      return Poly::constant(sig_, r);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      auto idx = sig_->find(name);
      if (!idx) throw UnknownVariable(name);
      return Poly::variable(sig_, *idx);
    }
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      if (++depth_ > kMaxDepth) throw ParseError("expression nested too deeply", open);
      Poly inner = sum();
      --depth_;
      if (!peek(')')) throw ParseError("missing ')'", pos_);
      ++pos_;
      return inner;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  SignaturePtr sig_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text, const SignaturePtr& sig) {
  Poly p = detail::PolyParser(text, sig).parse();
  if (!p.signature()) p = Poly(sig);
  return p;
}

}  // namespace chowkit
