#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "wpd/errors.hpp"
#include "wpd/twist.hpp"
#include "wpd/weights.hpp"

namespace wpd {

struct MemberResult {
  bool member = false;
  std::vector<long> rep; // b with sum b_i d_i = k, set iff member
};

// Additive span of the weights. Membership and the Frobenius number run on
// the minimal-member-per-residue table modulo the smallest weight; when the
// gcd g exceeds 1 everything happens in the scaled span of d_i / g.
class Semigroup {
public:
  explicit Semigroup(WeightSystem w) : w_(std::move(w)) {
    long g = w_.gcd();
    scaled_.reserve(w_.size());
    for (long d : w_.weights())
      scaled_.push_back(d / g);
    build_residue_table();
  }

  const WeightSystem &weights() const { return w_; }

  MemberResult member(long k) const {
    MemberResult res;
    if (k < 0)
      return res;
    if (k % w_.gcd() != 0)
      return res;
    long ks = k / w_.gcd();
    long m = scaled_[0];
    long r = ks % m;
    if (ks < min_member_[r])
      return res;
    res.member = true;
    res.rep.assign(w_.size(), 0);
    res.rep[0] = (ks - min_member_[r]) / m;
    while (r != 0 || min_member_[r] != 0) {
      int i = via_gen_[r];
      res.rep[static_cast<std::size_t>(i)] += 1;
      long prev = min_member_[r] - scaled_[static_cast<std::size_t>(i)];
      r = prev % m;
    }
    return res;
  }

  bool contains(long k) const {
    if (k < 0 || k % w_.gcd() != 0)
      return false;
    long ks = k / w_.gcd();
    return ks >= min_member_[ks % scaled_[0]];
  }

  // largest integer outside the span, -1 when there is none; only defined
  // for coprime weights
  long frobenius() const {
    if (w_.gcd() != 1)
      throw NotCoprimeError("Frobenius number undefined for gcd " +
                            std::to_string(w_.gcd()));
    long top = *std::max_element(min_member_.begin(), min_member_.end());
    return top - scaled_[0];
  }

  std::vector<long> gaps() const {
    long f = frobenius(); // throws NotCoprime when gcd > 1
    std::vector<long> out;
    for (long k = 0; k <= f; ++k)
      if (!contains(k))
        out.push_back(k);
    return out;
  }

private:
  void build_residue_table() {
    long m = scaled_[0];
    const long unset = -1;
    min_member_.assign(static_cast<std::size_t>(m), unset);
    via_gen_.assign(static_cast<std::size_t>(m), -1);
    min_member_[0] = 0;
    // relax until stable; every weight walks the residue cycle it generates
    bool changed = true;
    while (changed) {
      changed = false;
      for (long r = 0; r < m; ++r) {
        if (min_member_[static_cast<std::size_t>(r)] == unset)
          continue;
        for (std::size_t i = 0; i < scaled_.size(); ++i) {
          long cand = min_member_[static_cast<std::size_t>(r)] + scaled_[i];
          long rr = cand % m;
          long &slot = min_member_[static_cast<std::size_t>(rr)];
          if (slot == unset || cand < slot) {
            slot = cand;
            via_gen_[static_cast<std::size_t>(rr)] = static_cast<int>(i);
            changed = true;
          }
        }
      }
    }
    // scaled weights are coprime, so every residue class is reached
  }

  WeightSystem w_;
  std::vector<long> scaled_;
  std::vector<long> min_member_;
  std::vector<int> via_gen_;
};

// Boolean membership table on 0..bound with one representation per member.
struct SemigroupTable {
  long bound = 0;
  std::vector<char> member;
  std::vector<std::vector<long>> rep;

  static SemigroupTable build(const WeightSystem &w, long bound) {
    Semigroup s(w);
    SemigroupTable t;
    t.bound = bound;
    t.member.assign(static_cast<std::size_t>(bound) + 1, 0);
    t.rep.resize(static_cast<std::size_t>(bound) + 1);
    for (long k = 0; k <= bound; ++k) {
      MemberResult r = s.member(k);
      t.member[static_cast<std::size_t>(k)] = r.member ? 1 : 0;
      if (r.member)
        t.rep[static_cast<std::size_t>(k)] = std::move(r.rep);
    }
    return t;
  }

  // covers every degree probe the windowed graded computations make
  static long default_bound(const WeightSystem &w) {
    long b = 4 * w.sum();
    if (w.gcd() == 1) {
      long f = Semigroup(w).frobenius();
      b = std::max(b, f + 1);
    }
    return b;
  }
};

inline long gcd_all(const WeightSystem &w) { return w.gcd(); }

inline MemberResult is_member(const WeightSystem &w, long k) {
  return Semigroup(w).member(k);
}

inline long frobenius(const WeightSystem &w) { return Semigroup(w).frobenius(); }

inline std::vector<long> gaps(const WeightSystem &w) {
  return Semigroup(w).gaps();
}

struct MixedSignRep {
  std::vector<long> r;
  bool degenerate = false; // single generator, or c_0 already equals the gcd
};

// Integers r with r_0 <= 0, r_1..r_k >= 0 and sum r_i c_i = gcd(c).
// Extended Euclid first, then zero-sum lcm shifts push the tail nonnegative.
inline MixedSignRep mixed_sign_rep(const std::vector<long> &c) {
  if (c.empty())
    throw Error("mixed_sign_rep needs a nonempty generator list");
  for (long v : c)
    if (v < 1)
      throw Error("generators must be positive");

  auto ext_gcd = [](long a, long b, long &x, long &y) {
    long r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      long q = r0 / r1;
      long tmp;
      tmp = r0 - q * r1; r0 = r1; r1 = tmp;
      tmp = s0 - q * s1; s0 = s1; s1 = tmp;
      tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    x = s0;
    y = t0;
    return r0;
  };

  long g = c[0];
  std::vector<long> s{1};
  for (std::size_t i = 1; i < c.size(); ++i) {
    long u, v;
    long g2 = ext_gcd(g, c[i], u, v);
    for (long &sv : s)
      sv *= u;
    s.push_back(v);
    g = g2;
  }

  MixedSignRep out;
  out.r = std::move(s);
  if (c.size() == 1 || c[0] == g) {
    // the unique shape here has r_0 = g / c_0 > 0; flag it instead of
    // forcing the sign pattern
    out.r.assign(c.size(), 0);
    out.r[0] = g / c[0];
    out.degenerate = true;
    return out;
  }

  long l = c[0];
  for (std::size_t i = 1; i < c.size(); ++i)
    l = std::lcm(l, c[i]);
  for (std::size_t i = 1; i < c.size(); ++i) {
    long step = l / c[i];
    if (out.r[i] < 0) {
      long t = (-out.r[i] + step - 1) / step;
      out.r[i] += t * step;
      out.r[0] -= t * (l / c[0]);
    }
  }
  return out;
}

// every n of the n+1 weights jointly coprime
inline bool is_well_formed(const WeightSystem &w) {
  for (std::size_t j = 0; j < w.size(); ++j) {
    long g = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (i != j)
        g = std::gcd(g, w[i]);
    if (g != 1)
      return false;
  }
  return true;
}

// true iff the twist is one of the eigenvalues the torsion generator module
// takes, i.e. an integer with -lam - sum(d) in the span
inline bool is_delta_weight(const WeightSystem &w, const TwistParameter &lam) {
  if (!lam.is_integer())
    return false;
  return Semigroup(w).contains(-lam.integer() - w.sum());
}

} // namespace wpd
