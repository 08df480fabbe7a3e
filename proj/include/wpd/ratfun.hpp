#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "wpd/errors.hpp"
#include "wpd/rational.hpp"

namespace wpd {

// Dense univariate polynomial over Rat, coefficient i belongs to t^i.
// The trailing coefficient is kept nonzero; the zero polynomial is {}.
struct RatPoly {
  std::vector<Rat> coef;

  RatPoly() = default;
  RatPoly(const Rat &c) {
    if (c != 0)
      coef.push_back(c);
  }
  RatPoly(long c) : RatPoly(Rat(c)) {}

  static RatPoly variable() {
    RatPoly p;
    p.coef = {Rat(0), Rat(1)};
    return p;
  }

  bool is_zero() const { return coef.empty(); }
  int degree() const { return static_cast<int>(coef.size()) - 1; }

  void trim() {
    while (!coef.empty() && coef.back() == 0)
      coef.pop_back();
  }

  const Rat &leading() const { return coef.back(); }

  friend RatPoly operator+(const RatPoly &a, const RatPoly &b) {
    RatPoly r;
    r.coef.resize(std::max(a.coef.size(), b.coef.size()));
    for (std::size_t i = 0; i < r.coef.size(); ++i) {
      if (i < a.coef.size())
        r.coef[i] += a.coef[i];
      if (i < b.coef.size())
        r.coef[i] += b.coef[i];
    }
    r.trim();
    return r;
  }
  friend RatPoly operator-(const RatPoly &a, const RatPoly &b) {
    RatPoly r;
    r.coef.resize(std::max(a.coef.size(), b.coef.size()));
    for (std::size_t i = 0; i < r.coef.size(); ++i) {
      if (i < a.coef.size())
        r.coef[i] += a.coef[i];
      if (i < b.coef.size())
        r.coef[i] -= b.coef[i];
    }
    r.trim();
    return r;
  }
  friend RatPoly operator-(const RatPoly &a) {
    RatPoly r = a;
    for (auto &c : r.coef)
      c = -c;
    return r;
  }
  friend RatPoly operator*(const RatPoly &a, const RatPoly &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    RatPoly r;
    r.coef.assign(a.coef.size() + b.coef.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coef.size(); ++i)
      for (std::size_t j = 0; j < b.coef.size(); ++j)
        r.coef[i + j] += a.coef[i] * b.coef[j];
    r.trim();
    return r;
  }
  friend bool operator==(const RatPoly &a, const RatPoly &b) {
    return a.coef == b.coef;
  }
  friend bool operator!=(const RatPoly &a, const RatPoly &b) {
    return !(a == b);
  }

  // euclidean division, remainder returned, quotient optional
  RatPoly divmod(const RatPoly &d, RatPoly *quot = nullptr) const {
    RatPoly rem = *this, q;
    if (quot)
      q.coef.assign(
          coef.size() > d.coef.size() ? coef.size() - d.coef.size() + 1 : 1,
          Rat(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      Rat c = rem.leading() / d.leading();
      int shift = rem.degree() - d.degree();
      if (quot)
        q.coef[static_cast<std::size_t>(shift)] += c;
      for (std::size_t i = 0; i < d.coef.size(); ++i)
        rem.coef[i + static_cast<std::size_t>(shift)] -= c * d.coef[i];
      rem.trim();
    }
    if (quot) {
      quot->coef = q.coef;
      quot->trim();
    }
    return rem;
  }

  RatPoly monic() const {
    RatPoly r = *this;
    if (r.is_zero())
      return r;
    Rat l = r.leading();
    for (auto &c : r.coef)
      c /= l;
    return r;
  }

  Rat eval(const Rat &x) const {
    Rat v = 0;
    for (std::size_t i = coef.size(); i-- > 0;)
      v = v * x + coef[i];
    return v;
  }
};

inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b);
    a = b;
    b = r;
  }
  return a.monic();
}

// The field Q(t) of rational functions in one indeterminate, reduced form:
// gcd(num, den) = 1, den monic, den = 1 exactly when zero numerator.
struct RatFunc {
  RatPoly num;
  RatPoly den;

  RatFunc() : num(), den(1) {}
  RatFunc(const Rat &c) : num(c), den(1) {}
  RatFunc(long c) : num(Rat(c)), den(1) {}
  RatFunc(RatPoly n, RatPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero())
      throw Error("division by zero in Q(t)");
    reduce();
  }

  static RatFunc variable() { return RatFunc(RatPoly::variable(), RatPoly(1)); }

  void reduce() {
    if (num.is_zero()) {
      den = RatPoly(1);
      return;
    }
    RatPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
      RatPoly q;
      num.divmod(g, &q);
      num = q;
      den.divmod(g, &q);
      den = q;
    }
    Rat l = den.leading();
    if (l != 1) {
      for (auto &c : num.coef)
        c /= l;
      for (auto &c : den.coef)
        c /= l;
    }
  }

  bool is_zero() const { return num.is_zero(); }

  friend RatFunc operator+(const RatFunc &a, const RatFunc &b) {
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator-(const RatFunc &a, const RatFunc &b) {
    return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator-(const RatFunc &a) {
    RatFunc r = a;
    r.num = -r.num;
    return r;
  }
  friend RatFunc operator*(const RatFunc &a, const RatFunc &b) {
    return RatFunc(a.num * b.num, a.den * b.den);
  }
  friend RatFunc operator/(const RatFunc &a, const RatFunc &b) {
    if (b.is_zero())
      throw Error("division by zero in Q(t)");
    return RatFunc(a.num * b.den, a.den * b.num);
  }
  RatFunc &operator+=(const RatFunc &b) { return *this = *this + b; }
  RatFunc &operator-=(const RatFunc &b) { return *this = *this - b; }
  RatFunc &operator*=(const RatFunc &b) { return *this = *this * b; }
  RatFunc &operator/=(const RatFunc &b) { return *this = *this / b; }

  friend bool operator==(const RatFunc &a, const RatFunc &b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RatFunc &a, const RatFunc &b) {
    return !(a == b);
  }

  // substitute a rational value for the indeterminate; throws on a pole
  Rat specialize(const Rat &x) const {
    Rat d = den.eval(x);
    if (d == 0)
      throw Error("pole of a rational function under specialisation");
    return num.eval(x) / d;
  }
};

} // namespace wpd
