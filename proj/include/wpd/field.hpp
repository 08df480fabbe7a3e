#pragma once

#include <string>

#include "wpd/ratfun.hpp"
#include "wpd/rational.hpp"

namespace wpd {

// Scalar fields the graded linear algebra runs over: Rat for a concrete
// rational twist, RatFunc for the symbolic twist treated as a fresh
// transcendental.

template <class F> struct FieldOps;

template <> struct FieldOps<Rat> {
  static bool is_zero(const Rat &c) { return c == 0; }
  static Rat from_rat(const Rat &q) { return q; }
  static std::string str(const Rat &c) { return c.get_str(); }
  static constexpr bool symbolic = false;
};

inline std::string poly_str(const RatPoly &p, const std::string &var) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (std::size_t i = p.coef.size(); i-- > 0;) {
    const Rat &c = p.coef[i];
    if (c == 0)
      continue;
    Rat a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0)
        a = -a;
    }
    if (i == 0 || a != 1)
      out += a.get_str();
    if (i > 0) {
      if (a != 1)
        out += "*";
      out += var;
      if (i > 1)
        out += "^" + std::to_string(i);
    }
  }
  return out;
}

template <> struct FieldOps<RatFunc> {
  static bool is_zero(const RatFunc &c) { return c.is_zero(); }
  static RatFunc from_rat(const Rat &q) { return RatFunc(q); }
  static std::string str(const RatFunc &c) {
    std::string n = poly_str(c.num, "lam");
    if (c.den == RatPoly(1))
      return n;
    return "(" + n + ")/(" + poly_str(c.den, "lam") + ")";
  }
  static constexpr bool symbolic = true;
};

template <class F> bool is_zero(const F &c) { return FieldOps<F>::is_zero(c); }
template <class F> std::string field_str(const F &c) {
  return FieldOps<F>::str(c);
}

} // namespace wpd
