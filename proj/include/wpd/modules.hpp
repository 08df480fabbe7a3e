#pragma once

#include <map>
#include <vector>

#include "wpd/field.hpp"
#include "wpd/weyl.hpp"

namespace wpd {

// Element of the torsion generator module: a polynomial in the d variables
// applied to the distinguished generator. d_i acts by multiplication, x_i by
// minus the partial derivative in d_i.
template <class F> class DeltaElement {
public:
  using TermMap = std::map<Exps, F>;

  DeltaElement() = default;
  explicit DeltaElement(std::size_t nvars) : nvars_(nvars) {}

  // the generator itself
  static DeltaElement generator(std::size_t nvars) {
    DeltaElement v(nvars);
    v.add_term(Exps(nvars, 0), F(1));
    return v;
  }

  static DeltaElement monomial(Exps beta, const F &c) {
    DeltaElement v(beta.size());
    v.add_term(std::move(beta), c);
    return v;
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

  friend DeltaElement operator+(const DeltaElement &a, const DeltaElement &b) {
    DeltaElement r = a;
    for (const auto &[e, c] : b.terms_)
      r.add_term(e, c);
    return r;
  }
  friend DeltaElement operator*(const F &c, const DeltaElement &a) {
    DeltaElement r(a.nvars_);
    for (const auto &[e, co] : a.terms_)
      r.add_term(e, c * co);
    return r;
  }
  friend bool operator==(const DeltaElement &a, const DeltaElement &b) {
    return a.terms_ == b.terms_;
  }

private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

template <class F>
DeltaElement<F> delta_action(const WeylElement<F> &a, const DeltaElement<F> &v) {
  std::size_t n = std::max(a.nvars(), v.nvars());
  DeltaElement<F> out(n);
  for (const auto &[m, c] : a.terms()) {
    for (const auto &[e, vc] : v.terms()) {
      // d^beta multiplies, then each x_i differentiates with a sign
      Exps r = e;
      for (std::size_t i = 0; i < n; ++i)
        r[i] += m.dx[i];
      Int fall = 1;
      bool dead = false;
      for (std::size_t i = 0; i < n && !dead; ++i) {
        for (int s = 0; s < m.x[i]; ++s) {
          if (r[i] == 0) {
            dead = true;
            break;
          }
          fall *= -r[i];
          r[i] -= 1;
        }
      }
      if (dead)
        continue;
      out.add_term(r, c * vc * FieldOps<F>::from_rat(Rat(fall)));
    }
  }
  return out;
}

// eigenvalue of the weighted Euler operator on d^beta applied to the generator
inline long delta_weight(const WeightSystem &w, const Exps &beta) {
  return -w.sum() - weighted_sum(w, beta);
}

// Span of formal monomials x^(base + m), m integral. x_i shifts the offset up,
// d_i multiplies by the current exponent and shifts down; every exponent stays
// in the coset base + Z^(n+1).
template <class F> class FormalMonomialElement {
public:
  using TermMap = std::map<Exps, F>;

  FormalMonomialElement() = default;
  explicit FormalMonomialElement(std::vector<F> base)
      : base_(std::move(base)) {}

  static FormalMonomialElement generator(std::vector<F> base) {
    FormalMonomialElement v(std::move(base));
    v.add_term(Exps(v.base_.size(), 0), F(1));
    return v;
  }

  std::size_t nvars() const { return base_.size(); }
  const std::vector<F> &base() const { return base_; }
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

  // exponent of variable i in the offset-m monomial
  F exponent(std::size_t i, const Exps &m) const {
    return base_[i] + FieldOps<F>::from_rat(Rat(m[i]));
  }

  friend FormalMonomialElement operator+(const FormalMonomialElement &a,
                                         const FormalMonomialElement &b) {
    FormalMonomialElement r = a;
    for (const auto &[e, c] : b.terms_)
      r.add_term(e, c);
    return r;
  }
  friend FormalMonomialElement operator*(const F &c,
                                         const FormalMonomialElement &a) {
    FormalMonomialElement r(a.base_);
    for (const auto &[e, co] : a.terms_)
      r.add_term(e, c * co);
    return r;
  }
  friend bool operator==(const FormalMonomialElement &a,
                         const FormalMonomialElement &b) {
    return a.base_ == b.base_ && a.terms_ == b.terms_;
  }

private:
  std::vector<F> base_;
  TermMap terms_;
};

template <class F>
FormalMonomialElement<F> formal_action(const WeylElement<F> &a,
                                       const FormalMonomialElement<F> &v) {
  FormalMonomialElement<F> out(v.base());
  std::size_t n = v.nvars();
  for (const auto &[m, c] : a.terms()) {
    for (const auto &[e, vc] : v.terms()) {
      // d^beta: falling product of exponents, offsets shift down
      F coef = c * vc;
      Exps r = e;
      for (std::size_t i = 0; i < n; ++i) {
        for (int s = 0; s < m.dx[i]; ++s) {
          coef = coef * out.exponent(i, r);
          r[i] -= 1;
        }
      }
      if (wpd::is_zero(coef))
        continue;
      for (std::size_t i = 0; i < n; ++i)
        r[i] += m.x[i];
      out.add_term(r, coef);
    }
  }
  return out;
}

// Euler eigenvalue of the offset-m monomial: sum d_i (base_i + m_i)
template <class F>
F formal_weight(const WeightSystem &w, const std::vector<F> &base,
                const Exps &m) {
  F s(0);
  for (std::size_t i = 0; i < w.size(); ++i)
    s += FieldOps<F>::from_rat(Rat(w[i])) *
         (base[i] + FieldOps<F>::from_rat(Rat(m[i])));
  return s;
}

} // namespace wpd
