#include "pbw/text_io.hpp"

#include <cctype>

namespace pbw {

namespace {

// Recursive descent over
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (['*'] power)*
//   power  := atom ['^' digits]
//   atom   := number ['/' number] | 'h' | 'x' ['_'] digits | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, int n) : s_(text), n_(n) {}

  NCPoly<HPoly> parse() {
    NCPoly<HPoly> out = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::Parse, "column " + std::to_string(pos_ + 1) + " of \"" + std::string(s_) + "\": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'h' || c == 'x' || c == '(';
  }

  NCPoly<HPoly> constant(const HPoly& c) const { return NCPoly<HPoly>::monomial(n_, {}, c); }

  NCPoly<HPoly> expr() {
    NCPoly<HPoly> out(n_);
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      NCPoly<HPoly> t = term();
      out += sign > 0 ? t : -t;
      first = false;
    }
    return out;
  }

  NCPoly<HPoly> term() {
    NCPoly<HPoly> out = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        out = out * power();
      } else if (starts_atom()) {
        out = out * power();
      } else {
        return out;
      }
    }
  }

  NCPoly<HPoly> power() {
    NCPoly<HPoly> base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    const unsigned long e = digits("exponent");
    NCPoly<HPoly> out = constant(HPoly(1));
    for (unsigned long t = 0; t < e; ++t) out = out * base;
    return out;
  }

  unsigned long digits(const char* what) {
    skip();
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    if (pos_ - start > 9) fail(std::string(what) + " too large");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  NCPoly<HPoly> atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NCPoly<HPoly> inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'h') {
      ++pos_;
      return constant(HPoly::hbar());
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '_') ++pos_;
      if (n_ == 0) fail("x letters are not allowed here");
      const size_t at = pos_;
      const unsigned long i = digits("generator index");
      if (i < 1 || i > static_cast<unsigned long>(n_)) {
        pos_ = at;
        throw Error(Errc::BadIndex, "column " + std::to_string(at + 1) + ": x" + std::to_string(i) +
                                        " outside 1.." + std::to_string(n_));
      }
      return NCPoly<HPoly>::monomial(n_, {static_cast<int>(i)}, HPoly(1));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      // p/q is one rational literal; a '/' elsewhere is not supported.
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected denominator");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return constant(HPoly(parse_rational(s_.substr(start, pos_ - start))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  int n_;
  size_t pos_ = 0;
};

}  // namespace

HPoly parse_hpoly(std::string_view text) {
  NCPoly<HPoly> p = Parser(text, 0).parse();
  return p.coeff({});
}

NCPoly<HPoly> parse_ncpoly(std::string_view text, int n) {
  if (n < 1) throw Error(Errc::BadIndex, "generator count must be at least 1");
  return Parser(text, n).parse();
}

}  // namespace pbw
