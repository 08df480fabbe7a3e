#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "wpd/errors.hpp"
#include "wpd/field.hpp"
#include "wpd/weights.hpp"

namespace wpd {

using Exps = std::vector<int>;

inline int exp_sum(const Exps &e) { return std::accumulate(e.begin(), e.end(), 0); }

inline long weighted_sum(const WeightSystem &w, const Exps &e) {
  long s = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    s += w[i] * e[i];
  return s;
}

// x^alpha d^beta in normal order (all x to the left of all d)
struct Monomial {
  Exps x;
  Exps dx;

  int order() const { return exp_sum(dx); }
  long degree(const WeightSystem &w) const {
    return weighted_sum(w, x) - weighted_sum(w, dx);
  }
};

// joint degree-lexicographic order: total degree first, then alpha, then beta
struct MonomialLess {
  bool operator()(const Monomial &a, const Monomial &b) const {
    int ta = exp_sum(a.x) + exp_sum(a.dx);
    int tb = exp_sum(b.x) + exp_sum(b.dx);
    if (ta != tb)
      return ta < tb;
    if (a.x != b.x)
      return a.x < b.x;
    return a.dx < b.dx;
  }
};

inline bool operator==(const Monomial &a, const Monomial &b) {
  return a.x == b.x && a.dx == b.dx;
}

// Finite sum of normal-ordered monomials with nonzero coefficients in F.
// The canonical form is unique: equal maps <=> equal operators.
template <class F> class WeylElement {
public:
  using TermMap = std::map<Monomial, F, MonomialLess>;

  WeylElement() = default;
  explicit WeylElement(std::size_t nvars) : nvars_(nvars) {}

  static WeylElement zero(std::size_t nvars) { return WeylElement(nvars); }

  static WeylElement constant(std::size_t nvars, const F &c) {
    WeylElement e(nvars);
    e.add_term(Monomial{Exps(nvars, 0), Exps(nvars, 0)}, c);
    return e;
  }

  static WeylElement variable(std::size_t nvars, std::size_t i) {
    WeylElement e(nvars);
    Exps a(nvars, 0);
    a[i] = 1;
    e.add_term(Monomial{a, Exps(nvars, 0)}, F(1));
    return e;
  }

  static WeylElement derivation(std::size_t nvars, std::size_t i) {
    WeylElement e(nvars);
    Exps b(nvars, 0);
    b[i] = 1;
    e.add_term(Monomial{Exps(nvars, 0), b}, F(1));
    return e;
  }

  static WeylElement monomial(Exps x, Exps dx, const F &c) {
    WeylElement e(x.size());
    e.add_term(Monomial{std::move(x), std::move(dx)}, c);
    return e;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial &m, const F &c) {
    if (wpd::is_zero(c))
      return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (wpd::is_zero(it->second))
        terms_.erase(it);
    }
  }

  friend WeylElement operator+(const WeylElement &a, const WeylElement &b) {
    WeylElement r = a;
    r.nvars_ = std::max(a.nvars_, b.nvars_);
    for (const auto &[m, c] : b.terms_)
      r.add_term(m, c);
    return r;
  }
  friend WeylElement operator-(const WeylElement &a, const WeylElement &b) {
    WeylElement r = a;
    r.nvars_ = std::max(a.nvars_, b.nvars_);
    for (const auto &[m, c] : b.terms_)
      r.add_term(m, -c);
    return r;
  }
  friend WeylElement operator-(const WeylElement &a) {
    WeylElement r(a.nvars_);
    for (const auto &[m, c] : a.terms_)
      r.terms_.emplace(m, -c);
    return r;
  }
  friend WeylElement operator*(const F &c, const WeylElement &a) {
    WeylElement r(a.nvars_);
    for (const auto &[m, co] : a.terms_)
      r.add_term(m, c * co);
    return r;
  }

  friend bool operator==(const WeylElement &a, const WeylElement &b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const WeylElement &a, const WeylElement &b) {
    return !(a == b);
  }

  // product in normal order via the per-variable contraction
  //   d^s x^t = sum_k k! C(s,k) C(t,k) x^(t-k) d^(s-k)
  friend WeylElement operator*(const WeylElement &a, const WeylElement &b) {
    std::size_t n = std::max(a.nvars_, b.nvars_);
    WeylElement r(n);
    for (const auto &[ma, ca] : a.terms_)
      for (const auto &[mb, cb] : b.terms_)
        multiply_terms(r, ma, ca, mb, cb, n);
    return r;
  }

private:
  static void multiply_terms(WeylElement &out, const Monomial &ma, const F &ca,
                             const Monomial &mb, const F &cb, std::size_t n) {
    Exps kmax(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      kmax[i] = std::min(ma.dx[i], mb.x[i]);
    Exps k(n, 0);
    F base = ca * cb;
    for (;;) {
      Int num = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (k[i] == 0)
          continue;
        num *= binomial(static_cast<unsigned long>(ma.dx[i]),
                        static_cast<unsigned long>(k[i])) *
               binomial(static_cast<unsigned long>(mb.x[i]),
                        static_cast<unsigned long>(k[i])) *
               factorial(static_cast<unsigned long>(k[i]));
      }
      Monomial m;
      m.x.resize(n);
      m.dx.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        m.x[i] = ma.x[i] + mb.x[i] - k[i];
        m.dx[i] = ma.dx[i] + mb.dx[i] - k[i];
      }
      out.add_term(m, base * FieldOps<F>::from_rat(Rat(num)));
      // odometer over 0 <= k <= kmax
      std::size_t i = 0;
      while (i < n && k[i] == kmax[i]) {
        k[i] = 0;
        ++i;
      }
      if (i == n)
        break;
      ++k[i];
    }
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

template <class F>
WeylElement<F> commutator(const WeylElement<F> &a, const WeylElement<F> &b) {
  return a * b - b * a;
}

template <class F> WeylElement<F> euler_field(const WeightSystem &w) {
  WeylElement<F> e(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Exps a(w.size(), 0), b(w.size(), 0);
    a[i] = 1;
    b[i] = 1;
    e.add_term(Monomial{a, b}, FieldOps<F>::from_rat(Rat(w[i])));
  }
  return e;
}

// max total d-exponent; undefined on zero
template <class F> int order(const WeylElement<F> &a) {
  if (a.is_zero())
    throw ZeroElementError("order of the zero operator");
  int o = 0;
  for (const auto &[m, c] : a.terms())
    o = std::max(o, m.order());
  return o;
}

template <class F> struct GradedPiece {
  long degree = 0;
  WeylElement<F> element;
};

template <class F>
std::map<long, GradedPiece<F>> graded_components(const WeylElement<F> &a,
                                                 const WeightSystem &w) {
  std::map<long, GradedPiece<F>> out;
  for (const auto &[m, c] : a.terms()) {
    long k = m.degree(w);
    auto it = out.find(k);
    if (it == out.end()) {
      GradedPiece<F> p;
      p.degree = k;
      p.element = WeylElement<F>::zero(a.nvars());
      it = out.emplace(k, std::move(p)).first;
    }
    it->second.element.add_term(m, c);
  }
  return out;
}

template <class F>
bool is_homogeneous(const WeylElement<F> &a, const WeightSystem &w, long *deg) {
  bool first = true;
  long k = 0;
  for (const auto &[m, c] : a.terms()) {
    long d = m.degree(w);
    if (first) {
      k = d;
      first = false;
    } else if (d != k) {
      return false;
    }
  }
  if (deg)
    *deg = k;
  return true;
}

// sparse polynomial in the x variables, the natural representation space
template <class F> class Polynomial {
public:
  using TermMap = std::map<Exps, F>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial monomial(Exps e, const F &c) {
    Polynomial p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exps &e, const F &c) {
    if (wpd::is_zero(c))
      return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (wpd::is_zero(it->second))
        terms_.erase(it);
    }
  }

  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.terms_ == b.terms_;
  }

private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

// x_i by multiplication, d_i by partial differentiation
template <class F>
Polynomial<F> apply_to_polynomial(const WeylElement<F> &a,
                                  const Polynomial<F> &f) {
  std::size_t n = std::max(a.nvars(), f.nvars());
  Polynomial<F> out(n);
  for (const auto &[m, c] : a.terms()) {
    for (const auto &[e, fc] : f.terms()) {
      Int fall = 1;
      bool dead = false;
      Exps r = e;
      for (std::size_t i = 0; i < n && !dead; ++i) {
        for (int s = 0; s < m.dx[i]; ++s) {
          if (r[i] == 0) {
            dead = true;
            break;
          }
          fall *= r[i];
          r[i] -= 1;
        }
      }
      if (dead)
        continue;
      for (std::size_t i = 0; i < n; ++i)
        r[i] += m.x[i];
      out.add_term(r, c * fc * FieldOps<F>::from_rat(Rat(fall)));
    }
  }
  return out;
}

} // namespace wpd
