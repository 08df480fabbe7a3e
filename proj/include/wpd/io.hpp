#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "wpd/errors.hpp"
#include "wpd/field.hpp"
#include "wpd/weyl.hpp"

namespace wpd {

// Text form of one monomial's generator factors: x0^2 x1 d0^3
inline std::string factors_str(const Monomial &m) {
  std::string out;
  auto emit = [&out](const char *name, std::size_t i, int e) {
    if (e == 0)
      return;
    if (!out.empty())
      out += " ";
    out += name + std::to_string(i);
    if (e > 1)
      out += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < m.x.size(); ++i)
    emit("x", i, m.x[i]);
  for (std::size_t i = 0; i < m.dx.size(); ++i)
    emit("d", i, m.dx[i]);
  return out;
}

namespace detail {
inline bool rat_is_negative(const Rat &c) { return c < 0; }
inline Rat rat_negate(const Rat &c) { return -c; }
inline bool rat_is_one(const Rat &c) { return c == 1; }
inline bool rat_is_negative(const RatFunc &c) {
  return !c.num.is_zero() && c.num.leading() < 0;
}
inline RatFunc rat_negate(const RatFunc &c) { return -c; }
inline bool rat_is_one(const RatFunc &c) { return c == RatFunc(1); }
} // namespace detail

// Sum of terms, highest joint degree first: `x0^2 d0 + 2*x0 - 1/2`.
// For rational coefficients the output re-parses to an equal element.
template <class F> std::string to_string(const WeylElement<F> &a) {
  if (a.is_zero())
    return "0";
  std::string out;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    F c = it->second;
    bool neg = detail::rat_is_negative(c);
    if (out.empty()) {
      if (neg) {
        out += "-";
        c = detail::rat_negate(c);
      }
    } else {
      out += neg ? " - " : " + ";
      if (neg)
        c = detail::rat_negate(c);
    }
    std::string fac = factors_str(it->first);
    if (fac.empty()) {
      out += field_str(c);
    } else if (detail::rat_is_one(c)) {
      out += fac;
    } else {
      out += field_str(c) + "*" + fac;
    }
  }
  return out;
}

template <class F>
std::string tuple_str(const std::vector<WeylElement<F>> &t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i)
      out += ", ";
    out += to_string(t[i]);
  }
  return out + ")";
}

// Expression evaluator over the rationals. Grammar:
//   expr    = term (('+'|'-') term)*
//   term    = factor (('*')? factor)*        juxtaposition multiplies
//   factor  = '-'* primary ('^' nat)?
//   primary = rational | 'x'i | 'd'i | 'E' | '(' expr ')' | '[' expr ',' expr ']'
// '[a,b]' is the commutator; 'E' is the weighted Euler operator.
class ExprParser {
public:
  ExprParser(std::string text, const WeightSystem &w)
      : text_(std::move(text)), w_(w) {}

  WeylElement<Rat> parse() {
    pos_ = 0;
    WeylElement<Rat> e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return e;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_primary() {
    skip_ws();
    if (pos_ >= text_.size())
      return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' ||
           c == 'd' || c == 'E' || c == '(' || c == '[';
  }

  WeylElement<Rat> expr() {
    WeylElement<Rat> acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  WeylElement<Rat> term() {
    WeylElement<Rat> acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (starts_primary()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  WeylElement<Rat> factor() {
    bool neg = false;
    while (eat('-'))
      neg = !neg;
    WeylElement<Rat> p = primary();
    if (eat('^')) {
      long e = nat();
      WeylElement<Rat> r = WeylElement<Rat>::constant(w_.size(), 1);
      for (long i = 0; i < e; ++i)
        r = r * p;
      p = r;
    }
    return neg ? -p : p;
  }

  WeylElement<Rat> primary() {
    skip_ws();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      WeylElement<Rat> e = expr();
      if (!eat(')'))
        throw ParseError("expected ')'", pos_);
      return e;
    }
    if (c == '[') {
      ++pos_;
      WeylElement<Rat> a = expr();
      if (!eat(','))
        throw ParseError("expected ',' in commutator", pos_);
      WeylElement<Rat> b = expr();
      if (!eat(']'))
        throw ParseError("expected ']'", pos_);
      return commutator(a, b);
    }
    if (c == 'E') {
      ++pos_;
      return euler_field<Rat>(w_);
    }
    if (c == 'x' || c == 'd') {
      ++pos_;
      long i = nat();
      if (i >= static_cast<long>(w_.size()))
        throw ParseError("variable index out of range", pos_);
      return c == 'x' ? WeylElement<Rat>::variable(w_.size(),
                                                   static_cast<std::size_t>(i))
                      : WeylElement<Rat>::derivation(
                            w_.size(), static_cast<std::size_t>(i));
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return WeylElement<Rat>::constant(w_.size(), rational());
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  long nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      throw ParseError("expected a number", pos_);
    return std::stol(text_.substr(start, pos_ - start));
  }

  Rat rational() {
    long num = nat();
    if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      long den = nat();
      Rat q(num, den);
      q.canonicalize();
      return q;
    }
    return Rat(num);
  }

  std::string text_;
  WeightSystem w_;
  std::size_t pos_ = 0;
};

inline WeylElement<Rat> parse_element(const std::string &text,
                                      const WeightSystem &w) {
  return ExprParser(text, w).parse();
}

} // namespace wpd
