#include "cmtilt/weighted_poly.hpp"

#include <cctype>

namespace cmtilt {

namespace {

using Terms = std::map<Exponent, Rational>;

Terms multiply(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

Terms add(Terms a, const Terms& b, int sign) {
  for (const auto& [e, c] : b) a[e] += sign > 0 ? c : Rational(-c);
  std::erase_if(a, [](const auto& t) { return t.second.is_zero(); });
  return a;
}

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := power (['*'] power)*
// power  := atom ['^' integer]
// atom   := number ['/' number] | 'x' | 'y' | '(' expr ')'
class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Terms parse() {
    Terms t = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
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
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
  }

  Terms expr() {
    int sign = 1;
    if (peek('+')) ++pos_;
    else if (peek('-')) {
      ++pos_;
      sign = -1;
    }
    Terms acc = add({}, term(), sign);
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = add(std::move(acc), term(), 1);
      } else if (peek('-')) {
        ++pos_;
        acc = add(std::move(acc), term(), -1);
      } else {
        return acc;
      }
    }
  }

  Terms term() {
    Terms acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = multiply(acc, power());
      } else if (starts_atom()) {
        acc = multiply(acc, power());
      } else {
        return acc;
      }
    }
  }

  Terms power() {
    Terms base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    const BigInt e = integer();
    if (e > 64) fail("exponent too large");
    Terms acc{{{0, 0}, Rational(1)}};
    for (int i = 0; i < e.convert_to<int>(); ++i) acc = multiply(acc, base);
    return acc;
  }

  BigInt integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(s_.substr(start, pos_ - start));
  }

  Terms atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      return {{c == 'x' ? Exponent{1, 0} : Exponent{0, 1}, Rational(1)}};
    }
    if (c == '(') {
      ++pos_;
      Terms inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer());
      if (peek('/')) {
        ++pos_;
        const BigInt den = integer();
        if (den == 0) fail("zero denominator");
        value /= Rational(den);
      }
      if (value.is_zero()) return {};
      return {{{0, 0}, value}};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::map<Exponent, Rational> parse_polynomial(const std::string& text) { return Parser(text).parse(); }

int WeightedPoly::degree() const {
  if (terms.empty()) throw Error(ErrorKind::InvalidInput, "polynomial is zero");
  int deg = -1;
  for (const auto& [e, c] : terms) {
    const int d = e.first * dx + e.second * dy;
    if (deg >= 0 && d != deg)
      throw Error(ErrorKind::NotHomogeneous, "'" + str() + "' is not homogeneous for weights (" +
                                                 std::to_string(dx) + "," + std::to_string(dy) + ")");
    deg = d;
  }
  return deg;
}

Exponent WeightedPoly::leading_exponent() const {
  if (terms.empty()) throw Error(ErrorKind::InvalidInput, "polynomial is zero");
  return terms.rbegin()->first;  // map order is lex on (x power, y power)
}

std::string WeightedPoly::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coeff = c.str();
    if (!out.empty()) {
      if (c < 0) {
        out += " - ";
        coeff = Rational(-c).str();
      } else {
        out += " + ";
      }
    } else if (c < 0) {
      out += "-";
      coeff = Rational(-c).str();
    }
    std::string mono;
    if (e.first > 0) mono += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
    if (e.second > 0) mono += std::string(mono.empty() ? "" : "*") + (e.second == 1 ? "y" : "y^" + std::to_string(e.second));
    if (mono.empty()) out += coeff;
    else if (coeff == "1") out += mono;
    else out += coeff + "*" + mono;
  }
  return out;
}

WeightedPoly make_weighted_poly(const std::string& text, int dx, int dy) {
  if (dx < 1 || dy < 1) throw Error(ErrorKind::InvalidInput, "weights must be positive");
  WeightedPoly f{parse_polynomial(text), dx, dy};
  if (f.terms.empty()) throw Error(ErrorKind::InvalidInput, "polynomial is zero");
  if (f.degree() == 0) throw Error(ErrorKind::InvalidInput, "polynomial is a unit");
  return f;
}

}  // namespace cmtilt
