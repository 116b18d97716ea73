#include <cctype>

#include "ybs/exactalg.hpp"

namespace ybs {

namespace {

// Recursive descent over + - * / ^ and parentheses; '/' goes through the
// localized division, so only linear-difference denominators are accepted.
class Parser {
 public:
  Parser(const VarSetPtr& vs, std::string_view s) : vs_(vs), s_(s) {}

  RatFunc run() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (eat('+')) {
        r += term();
      } else if (eat('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      if (eat('*')) {
        r *= unary();
      } else if (eat('/')) {
        r /= unary();
      } else {
        return r;
      }
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
    RatFunc r(MultiPoly(vs_, Rational(1)));
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
  }

  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFunc(MultiPoly(vs_, Rational(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      auto idx = vs_->find(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return RatFunc(MultiPoly::var(vs_, *idx));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const VarSetPtr& vs_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(const VarSetPtr& vs, std::string_view text) {
  if (!vs) throw ParseError("parse needs a varset");
  RatFunc r = Parser(vs, text).run();
  if (!r.varset()) return RatFunc(MultiPoly(vs) + r.num(), r.den());
  return r;
}

MultiPoly MultiPoly::parse(const VarSetPtr& vs, std::string_view text) {
  return RatFunc::parse(vs, text).to_poly();
}

}  // namespace ybs
