#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wpd/errors.hpp"
#include "wpd/field.hpp"
#include "wpd/io.hpp"
#include "wpd/linalg.hpp"
#include "wpd/twist.hpp"
#include "wpd/weyl.hpp"

namespace wpd {

struct Window {
  long degree_lo = 0;
  long degree_hi = 0;
  int order_bound = 0;
  long padding = 0;

  Window() = default;
  Window(long lo, long hi, int ord, long pad)
      : degree_lo(lo), degree_hi(hi), order_bound(ord), padding(pad) {
    if (lo > hi)
      throw Error("empty degree window");
    if (ord < 0)
      throw Error("negative order bound");
  }

  static Window default_for(const WeightSystem &w) {
    return Window(-2 * w.sum(), 2 * w.sum(), 4, w.max());
  }
};

// dim of the weight-k slice of the polynomial ring: the number of monomials
// x^alpha with sum alpha_i d_i = k
inline long hilbert_dim(const WeightSystem &w, long k) {
  if (k < 0)
    return 0;
  std::vector<long> dp(static_cast<std::size_t>(k) + 1, 0);
  dp[0] = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (long m = w[i]; m <= k; ++m)
      dp[static_cast<std::size_t>(m)] += dp[static_cast<std::size_t>(m - w[i])];
  return dp[static_cast<std::size_t>(k)];
}

// graded sections of the k-twist; zero exactly off the weight span
inline long twisted_sheaf_sections(const WeightSystem &w, long k) {
  return hilbert_dim(w, k);
}

namespace detail {

// all alpha >= 0 with sum alpha_i d_i = target, lexicographic from the left
inline void enum_weighted(const WeightSystem &w, long target, std::size_t i,
                          Exps &cur, std::vector<Exps> &out) {
  if (i + 1 == w.size()) {
    if (target >= 0 && target % w[i] == 0) {
      cur[i] = static_cast<int>(target / w[i]);
      out.push_back(cur);
      cur[i] = 0;
    }
    return;
  }
  for (long a = 0; a * w[i] <= target; ++a) {
    cur[i] = static_cast<int>(a);
    enum_weighted(w, target - a * w[i], i + 1, cur, out);
  }
  cur[i] = 0;
}

inline std::vector<Exps> weighted_exponents(const WeightSystem &w, long target) {
  std::vector<Exps> out;
  if (target < 0)
    return out;
  Exps cur(w.size(), 0);
  enum_weighted(w, target, 0, cur, out);
  return out;
}

// all beta >= lo with |beta - lo| <= slack
inline std::vector<Exps> shifted_simplex(const Exps &lo, int slack) {
  std::vector<Exps> out;
  if (slack < 0)
    return out;
  std::size_t n = lo.size();
  Exps g(n, 0);
  for (;;) {
    Exps b = lo;
    for (std::size_t i = 0; i < n; ++i)
      b[i] += g[i];
    out.push_back(std::move(b));
    // odometer over |g| <= slack
    std::size_t i = 0;
    for (;;) {
      ++g[i];
      if (exp_sum(g) <= slack)
        break;
      g[i] = 0;
      ++i;
      if (i == n)
        return out;
    }
  }
}

struct ExpsLess {
  bool operator()(const Exps &a, const Exps &b) const {
    int sa = exp_sum(a), sb = exp_sum(b);
    if (sa != sb)
      return sa < sb;
    return a < b;
  }
};

} // namespace detail

// monomial basis of the degree-k slice of the algebra up to d-order bound
inline std::vector<Monomial> basis_of_D_degree(const WeightSystem &w, long k,
                                               int order_bound) {
  if (order_bound < 0)
    throw Error("negative order bound");
  std::vector<Monomial> out;
  for (const Exps &beta : detail::shifted_simplex(Exps(w.size(), 0), order_bound)) {
    long target = k + weighted_sum(w, beta);
    for (Exps &alpha : detail::weighted_exponents(w, target))
      out.push_back(Monomial{std::move(alpha), beta});
  }
  std::sort(out.begin(), out.end(), [](const Monomial &a, const Monomial &b) {
    return MonomialLess{}(a, b);
  });
  return out;
}

// One multidegree slice of the quotient by the right Euler ideal. The slice
// at v has basis f_beta = x^(v+beta) d^beta over beta >= max(0,-v), and
//   f_beta (E - lam) = sum_i d_i f_(beta+e_i) + (<d,beta> - lam) f_beta ,
// which raises the d-order by exactly one. Membership of an order-r element
// therefore needs cofactors of order r-1 only, so the echelon of rows from
// cofactors of order <= B-1 decides ideal membership exactly for elements of
// order <= B.
template <class F> struct EulerBlock {
  Exps v;
  std::vector<Exps> betas;
  std::map<Exps, std::size_t> index;
  std::vector<Exps> cof_betas; // cofactor basis, order <= B-1
  Echelon<F> ideal{0, true};
  std::vector<std::size_t> free_idx;

  std::size_t dim() const { return betas.size(); }
  std::size_t qdim() const { return free_idx.size(); }
};

template <class F> class EulerContext {
public:
  EulerContext(WeightSystem w, F lam, int order_bound)
      : w_(std::move(w)), lam_(std::move(lam)), bound_(order_bound) {}

  const WeightSystem &weights() const { return w_; }
  const F &lam() const { return lam_; }
  int order_bound() const { return bound_; }

  const EulerBlock<F> &block(const Exps &v) {
    auto it = cache_.find(v);
    if (it != cache_.end())
      return it->second;
    EulerBlock<F> b;
    b.v = v;
    Exps lo(v.size(), 0);
    int drop = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] < 0) {
        lo[i] = -v[i];
        drop += -v[i];
      }
    b.betas = detail::shifted_simplex(lo, bound_ - drop);
    // descending, so elimination rewrites high order into low order and the
    // canonical residues keep their natural low-order shape
    std::sort(b.betas.begin(), b.betas.end(),
              [](const Exps &x, const Exps &y) { return detail::ExpsLess{}(y, x); });
    for (std::size_t j = 0; j < b.betas.size(); ++j)
      b.index.emplace(b.betas[j], j);
    b.ideal = Echelon<F>(b.betas.size(), true);
    for (const Exps &beta : b.betas) {
      if (exp_sum(beta) > bound_ - 1)
        continue;
      Vec<F> row(b.betas.size(), F(0));
      row[b.index.at(beta)] +=
          FieldOps<F>::from_rat(Rat(weighted_sum(w_, beta))) - lam_;
      for (std::size_t i = 0; i < v.size(); ++i) {
        Exps up = beta;
        up[i] += 1;
        row[b.index.at(up)] += FieldOps<F>::from_rat(Rat(w_[i]));
      }
      b.cof_betas.push_back(beta);
      b.ideal.insert(std::move(row));
    }
    b.free_idx = b.ideal.free_columns();
    return cache_.emplace(v, std::move(b)).first->second;
  }

  // coordinates of the multidegree-v part of an element in the block basis
  Vec<F> coords(const EulerBlock<F> &b, const WeylElement<F> &a) const {
    Vec<F> out(b.dim(), F(0));
    for (const auto &[m, c] : a.terms()) {
      Exps v(m.x.size());
      bool match = true;
      for (std::size_t i = 0; i < m.x.size(); ++i) {
        v[i] = m.x[i] - m.dx[i];
        if (v[i] != b.v[i])
          match = false;
      }
      if (match)
        out[b.index.at(m.dx)] += c;
    }
    return out;
  }

  WeylElement<F> element(const EulerBlock<F> &b, const Vec<F> &coords) const {
    WeylElement<F> e(w_.size());
    for (std::size_t j = 0; j < b.dim(); ++j) {
      if (wpd::is_zero(coords[j]))
        continue;
      Exps alpha(b.v.size());
      for (std::size_t i = 0; i < alpha.size(); ++i)
        alpha[i] = b.v[i] + b.betas[j][i];
      e.add_term(Monomial{alpha, b.betas[j]}, coords[j]);
    }
    return e;
  }

  struct Reduced {
    WeylElement<F> residue;
    bool in_ideal = false;
    WeylElement<F> cofactor;
  };

  // canonical residue mod the right Euler ideal plus an exact cofactor for
  // the part that reduced away
  Reduced reduce(const WeylElement<F> &a) {
    Reduced out;
    out.residue = WeylElement<F>(w_.size());
    out.cofactor = WeylElement<F>(w_.size());
    // split by multidegree
    std::map<Exps, WeylElement<F>> parts;
    for (const auto &[m, c] : a.terms()) {
      if (m.order() > bound_)
        throw WindowTooSmallError(
            "element order exceeds the window order bound");
      Exps v(m.x.size());
      for (std::size_t i = 0; i < m.x.size(); ++i)
        v[i] = m.x[i] - m.dx[i];
      auto it = parts.find(v);
      if (it == parts.end())
        it = parts.emplace(v, WeylElement<F>(w_.size())).first;
      it->second.add_term(m, c);
    }
    out.in_ideal = true;
    for (const auto &[v, part] : parts) {
      const EulerBlock<F> &b = block(v);
      Vec<F> tag;
      Vec<F> res = b.ideal.reduce(coords(b, part), &tag);
      WeylElement<F> rese = element(b, res);
      if (!rese.is_zero())
        out.in_ideal = false;
      out.residue = out.residue + rese;
      for (std::size_t j = 0; j < tag.size(); ++j) {
        if (wpd::is_zero(tag[j]))
          continue;
        Exps alpha(v.size());
        for (std::size_t i = 0; i < alpha.size(); ++i)
          alpha[i] = v[i] + b.cof_betas[j][i];
        out.cofactor.add_term(Monomial{alpha, b.cof_betas[j]}, tag[j]);
      }
    }
    return out;
  }

private:
  WeightSystem w_;
  F lam_;
  int bound_;
  std::map<Exps, EulerBlock<F>> cache_;
};

template <class F> F twist_value(const TwistParameter &t);

template <> inline Rat twist_value<Rat>(const TwistParameter &t) {
  return t.value();
}
template <> inline RatFunc twist_value<RatFunc>(const TwistParameter &t) {
  return t.is_symbolic() ? RatFunc::variable() : RatFunc(t.value());
}

// residue of an operator in the twisted quotient
template <class F> struct DQuotientResidue {
  WeylElement<F> rep;
  TwistParameter twist = TwistParameter::rational(0);
  long degree = 0;
};

template <class F> struct ReduceResult {
  DQuotientResidue<F> residue;
  bool in_ideal = false;
  WeylElement<F> cofactor;
};

template <class F>
ReduceResult<F> reduce_mod_euler(const WeylElement<F> &a, const WeightSystem &w,
                                 const TwistParameter &twist, const Window &win) {
  long deg = 0;
  if (!is_homogeneous(a, w, &deg))
    throw NotHomogeneousError("reduce_mod_euler needs a homogeneous operator");
  EulerContext<F> ctx(w, twist_value<F>(twist), win.order_bound);
  auto red = ctx.reduce(a);
  ReduceResult<F> out;
  out.residue.rep = std::move(red.residue);
  out.residue.twist = twist;
  out.residue.degree = deg;
  out.in_ideal = red.in_ideal;
  out.cofactor = std::move(red.cofactor);
  return out;
}

// residues agree exactly when the difference of representatives reduces away
template <class F>
bool residues_equal(const DQuotientResidue<F> &a, const DQuotientResidue<F> &b,
                    const WeightSystem &w, const Window &win) {
  if (!(a.twist == b.twist))
    return false;
  EulerContext<F> ctx(w, twist_value<F>(a.twist), win.order_bound);
  return ctx.reduce(a.rep - b.rep).in_ideal;
}

// ordered pairs (i0 < i1), lexicographic
inline std::vector<std::pair<std::size_t, std::size_t>>
index_pairs(std::size_t nvars) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i + 1 < nvars; ++i)
    for (std::size_t j = i + 1; j < nvars; ++j)
      out.emplace_back(i, j);
  return out;
}

// m |-> (x_i m)_i on representatives
template <class F>
std::vector<WeylElement<F>> koszul_phi1(const WeylElement<F> &m,
                                        std::size_t nvars) {
  std::vector<WeylElement<F>> out;
  out.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i)
    out.push_back(WeylElement<F>::variable(nvars, i) * m);
  return out;
}

// (m_i)_i |-> (x_i0 m_i1 - x_i1 m_i0)_(i0<i1) on representatives
template <class F>
std::vector<WeylElement<F>> koszul_phi2(const std::vector<WeylElement<F>> &ms) {
  std::size_t n = ms.size();
  std::vector<WeylElement<F>> out;
  for (auto [i0, i1] : index_pairs(n))
    out.push_back(WeylElement<F>::variable(n, i0) * ms[i1] -
                  WeylElement<F>::variable(n, i1) * ms[i0]);
  return out;
}

namespace detail {

// negativity of a multidegree: how much d-order its block minimally carries
inline int neg_sum(const Exps &u) {
  int s = 0;
  for (int c : u)
    s += c < 0 ? -c : 0;
  return s;
}

// all u with <d,u> = k whose complex column can be nonempty at order B
inline void enum_multidegrees(const WeightSystem &w, long k, int budget,
                              std::size_t i, Exps &cur, long partial,
                              std::vector<Exps> &out) {
  std::size_t n = w.size();
  if (i + 1 == n) {
    long rest = k - partial;
    if (rest % w[i] != 0)
      return;
    long u = rest / w[i];
    if (u < -static_cast<long>(budget - neg_sum(cur)))
      return;
    cur[i] = static_cast<int>(u);
    out.push_back(cur);
    cur[i] = 0;
    return;
  }
  int room = budget - neg_sum(cur);
  long hi = (k - partial);
  // suffix can still dip by at most max weight times the remaining budget
  hi += w.max() * room;
  hi = hi / w[i];
  for (long u = -room; u <= hi; ++u) {
    cur[i] = static_cast<int>(u);
    enum_multidegrees(w, k, budget, i + 1, cur, partial + u * w[i], out);
  }
  cur[i] = 0;
}

} // namespace detail

template <class F> struct KoszulBlockResult {
  long degree = 0;
  Exps u;
  long ker_phi1_dim = 0;
  long homology_dim = 0;
  std::vector<WeylElement<F>> ker_phi1_witnesses;
  std::vector<std::vector<WeylElement<F>>> homology_witnesses;
};

namespace detail {

// the quotient-space complex of one multidegree column
template <class F> struct BlockComplex {
  const EulerBlock<F> *c0 = nullptr;
  std::vector<const EulerBlock<F> *> c1;
  std::vector<const EulerBlock<F> *> c2;
  std::vector<std::size_t> c1_offset;
  std::vector<std::size_t> c2_offset;
  std::size_t q0 = 0, q1 = 0, q2 = 0;
  Mat<F> m1; // rows q1, cols q0
  Mat<F> m2; // rows q2, cols q1
};

template <class F>
BlockComplex<F> build_block_complex(EulerContext<F> &ctx, const Exps &u) {
  const WeightSystem &w = ctx.weights();
  std::size_t n = w.size();
  BlockComplex<F> bc;
  bc.c0 = &ctx.block(u);
  bc.q0 = bc.c0->qdim();
  auto pairs = index_pairs(n);
  bc.c1.resize(n);
  bc.c1_offset.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Exps v = u;
    v[i] += 1;
    bc.c1[i] = &ctx.block(v);
    bc.c1_offset[i] = bc.q1;
    bc.q1 += bc.c1[i]->qdim();
  }
  bc.c2.resize(pairs.size());
  bc.c2_offset.resize(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    Exps v = u;
    v[pairs[p].first] += 1;
    v[pairs[p].second] += 1;
    bc.c2[p] = &ctx.block(v);
    bc.c2_offset[p] = bc.q2;
    bc.q2 += bc.c2[p]->qdim();
  }

  // class coordinates of f_beta inside a target block: reduce the unit
  // vector, then read the free positions
  auto class_coords = [](const EulerBlock<F> &b, const Exps &beta) {
    Vec<F> unit(b.dim(), F(0));
    unit[b.index.at(beta)] = F(1);
    Vec<F> res = b.ideal.reduce(std::move(unit));
    Vec<F> out(b.free_idx.size(), F(0));
    for (std::size_t j = 0; j < b.free_idx.size(); ++j)
      out[j] = res[b.free_idx[j]];
    return out;
  };

  bc.m1.assign(bc.q1, Vec<F>(bc.q0, F(0)));
  for (std::size_t col = 0; col < bc.q0; ++col) {
    const Exps &beta = bc.c0->betas[bc.c0->free_idx[col]];
    for (std::size_t i = 0; i < n; ++i) {
      Vec<F> cc = class_coords(*bc.c1[i], beta);
      for (std::size_t j = 0; j < cc.size(); ++j)
        bc.m1[bc.c1_offset[i] + j][col] += cc[j];
    }
  }

  bc.m2.assign(bc.q2, Vec<F>(bc.q1, F(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < bc.c1[i]->qdim(); ++f) {
      std::size_t col = bc.c1_offset[i] + f;
      const Exps &beta = bc.c1[i]->betas[bc.c1[i]->free_idx[f]];
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        int sign = 0;
        if (pairs[p].second == i)
          sign = 1; // x_{i0} acts on component i1
        else if (pairs[p].first == i)
          sign = -1; // -x_{i1} acts on component i0
        else
          continue;
        Vec<F> cc = class_coords(*bc.c2[p], beta);
        for (std::size_t j = 0; j < cc.size(); ++j) {
          if (sign > 0)
            bc.m2[bc.c2_offset[p] + j][col] += cc[j];
          else
            bc.m2[bc.c2_offset[p] + j][col] -= cc[j];
        }
      }
    }
  }
  return bc;
}

} // namespace detail

// Exact kernels and homology of one multidegree column of the Koszul-shaped
// complex on the twisted quotient. Kernel membership is exact at the given
// order bound. A nonzero homology class is certified outright: a preimage
// under phi1 would have a representative of order at most the class order
// because the ideal's top symbol is irreducible, and all such candidates
// lie inside the computed span.
template <class F>
KoszulBlockResult<F> koszul_block(EulerContext<F> &ctx, const Exps &u) {
  detail::BlockComplex<F> bc = detail::build_block_complex(ctx, u);
  KoszulBlockResult<F> out;
  out.u = u;
  out.degree = weighted_sum(ctx.weights(), u);
  if (bc.q0 == 0 && bc.q1 == 0)
    return out;

  const std::size_t n = ctx.weights().size();

  // kernel of phi1
  Mat<F> k1 = kernel_basis(bc.m1, bc.q0);
  out.ker_phi1_dim = static_cast<long>(k1.size());
  for (const auto &kv : k1) {
    Vec<F> full(bc.c0->dim(), F(0));
    for (std::size_t j = 0; j < bc.q0; ++j)
      full[bc.c0->free_idx[j]] = kv[j];
    out.ker_phi1_witnesses.push_back(ctx.element(*bc.c0, full));
  }

  // homology at the middle
  Mat<F> k2 = kernel_basis(bc.m2, bc.q1);
  Echelon<F> image(bc.q1);
  for (std::size_t col = 0; col < bc.q0; ++col) {
    Vec<F> v(bc.q1, F(0));
    for (std::size_t r = 0; r < bc.q1; ++r)
      v[r] = bc.m1[r][col];
    image.insert(std::move(v));
  }
  Echelon<F> span = image;
  for (const auto &kv : k2) {
    if (!span.insert(kv))
      continue;
    out.homology_dim += 1;
    std::vector<WeylElement<F>> tuple;
    for (std::size_t i = 0; i < n; ++i) {
      Vec<F> full(bc.c1[i]->dim(), F(0));
      for (std::size_t j = 0; j < bc.c1[i]->qdim(); ++j)
        full[bc.c1[i]->free_idx[j]] = kv[bc.c1_offset[i] + j];
      tuple.push_back(ctx.element(*bc.c1[i], full));
    }
    out.homology_witnesses.push_back(std::move(tuple));
  }
  return out;
}

template <class F>
std::vector<KoszulBlockResult<F>>
koszul_scan(const WeightSystem &w, const F &lam, const Window &win) {
  if (win.padding < w.max())
    throw WindowTooSmallError("padding below the largest weight");
  EulerContext<F> ctx(w, lam, win.order_bound);
  std::vector<KoszulBlockResult<F>> out;
  for (long k = win.degree_lo; k <= win.degree_hi; ++k) {
    std::vector<Exps> us;
    Exps cur(w.size(), 0);
    // any column whose middle level is nonempty has negativity <= B+1
    detail::enum_multidegrees(w, k, win.order_bound + 1, 0, cur, 0, us);
    std::sort(us.begin(), us.end());
    for (const Exps &u : us) {
      KoszulBlockResult<F> r = koszul_block(ctx, u);
      if (r.ker_phi1_dim != 0 || r.homology_dim != 0)
        out.push_back(std::move(r));
    }
  }
  return out;
}

// membership checks for an explicit middle-level tuple
struct KoszulClassCheck {
  bool in_kernel = false;
  bool in_image = false;
};

namespace detail {

// split a middle-level tuple into its multidegree columns
template <class F>
std::map<Exps, std::map<std::size_t, WeylElement<F>>>
middle_columns(std::size_t nvars, const std::vector<WeylElement<F>> &cls) {
  std::map<Exps, std::map<std::size_t, WeylElement<F>>> columns;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (const auto &[m, c] : cls[i].terms()) {
      Exps u(m.x.size());
      for (std::size_t j = 0; j < u.size(); ++j)
        u[j] = m.x[j] - m.dx[j];
      u[i] -= 1; // component i of the column at u lives at u + e_i
      auto it = columns.find(u);
      if (it == columns.end())
        it = columns.emplace(u, std::map<std::size_t, WeylElement<F>>()).first;
      auto jt = it->second.find(i);
      if (jt == it->second.end())
        jt = it->second.emplace(i, WeylElement<F>(nvars)).first;
      jt->second.add_term(m, c);
    }
  }
  return columns;
}

// class coordinates of the u-part of a tuple, concatenated over components
template <class F>
Vec<F> middle_coords(EulerContext<F> &ctx, const BlockComplex<F> &bc,
                     const std::map<std::size_t, WeylElement<F>> &comps) {
  Vec<F> target(bc.q1, F(0));
  for (const auto &[i, elem] : comps) {
    Vec<F> res = bc.c1[i]->ideal.reduce(ctx.coords(*bc.c1[i], elem));
    for (std::size_t j = 0; j < bc.c1[i]->qdim(); ++j)
      target[bc.c1_offset[i] + j] = res[bc.c1[i]->free_idx[j]];
  }
  return target;
}

template <class F>
Echelon<F> image_echelon(const BlockComplex<F> &bc) {
  Echelon<F> image(bc.q1);
  for (std::size_t col = 0; col < bc.q0; ++col) {
    Vec<F> v(bc.q1, F(0));
    for (std::size_t r = 0; r < bc.q1; ++r)
      v[r] = bc.m1[r][col];
    image.insert(std::move(v));
  }
  return image;
}

} // namespace detail

template <class F>
KoszulClassCheck check_koszul_class(const WeightSystem &w, const F &lam,
                                    const Window &win,
                                    const std::vector<WeylElement<F>> &cls) {
  EulerContext<F> ctx(w, lam, win.order_bound);
  KoszulClassCheck out;

  // kernel: reduce phi2 of the representatives
  out.in_kernel = true;
  for (const auto &img : koszul_phi2(cls))
    if (!ctx.reduce(img).in_ideal)
      out.in_kernel = false;

  // image: per multidegree column, test the class coordinates against the
  // span of phi1
  out.in_image = true;
  for (const auto &[u, comps] : detail::middle_columns(w.size(), cls)) {
    detail::BlockComplex<F> bc = detail::build_block_complex(ctx, u);
    Vec<F> target = detail::middle_coords(ctx, bc, comps);
    bool nonzero = false;
    for (const F &c : target)
      if (!wpd::is_zero(c))
        nonzero = true;
    if (!nonzero)
      continue;
    if (!detail::image_echelon(bc).contains(target))
      out.in_image = false;
  }
  return out;
}

// does the target tuple lie in the span of the phi1 image together with the
// given classes? with target certified off the image, a positive answer pins
// the target to the span classes modulo the image
template <class F>
bool koszul_class_in_span(const WeightSystem &w, const F &lam,
                          const Window &win,
                          const std::vector<WeylElement<F>> &target,
                          const std::vector<std::vector<WeylElement<F>>> &span) {
  EulerContext<F> ctx(w, lam, win.order_bound);
  auto target_cols = detail::middle_columns(w.size(), target);
  std::set<Exps> keys;
  for (const auto &[u, comps] : target_cols)
    keys.insert(u);
  std::vector<std::map<Exps, std::map<std::size_t, WeylElement<F>>>> span_cols;
  for (const auto &cls : span) {
    span_cols.push_back(detail::middle_columns(w.size(), cls));
    for (const auto &[u, comps] : span_cols.back())
      keys.insert(u);
  }
  for (const Exps &u : keys) {
    detail::BlockComplex<F> bc = detail::build_block_complex(ctx, u);
    Echelon<F> e = detail::image_echelon(bc);
    for (auto &sc : span_cols) {
      auto it = sc.find(u);
      if (it != sc.end())
        e.insert(detail::middle_coords(ctx, bc, it->second));
    }
    auto it = target_cols.find(u);
    if (it == target_cols.end())
      continue;
    if (!e.contains(detail::middle_coords(ctx, bc, it->second)))
      return false;
  }
  return true;
}

// the middle-level pair tied together by the Euler relation
// d_0 x_0 d_0 + d_1 x_1 d_1 = E in two variables
template <class F>
std::vector<WeylElement<F>> euler_relation_class(const WeightSystem &w) {
  if (w.size() != 2)
    throw Error("the relation class needs exactly two variables");
  WeylElement<F> m0 =
      FieldOps<F>::from_rat(Rat(-w[1])) * WeylElement<F>::derivation(2, 1);
  WeylElement<F> m1 =
      FieldOps<F>::from_rat(Rat(w[0])) * WeylElement<F>::derivation(2, 0);
  return {m0, m1};
}

// field-independent report
struct KoszulDegreeReport {
  long degree = 0;
  long ker_phi1_dim = 0;
  long homology_dim = 0;
  std::vector<std::vector<std::string>> witnesses;
};

struct KoszulReport {
  std::string twist;
  Window window;
  long ker_phi1_total = 0;
  long homology_total = 0;
  std::vector<KoszulDegreeReport> degrees;
};

namespace detail {

template <class F>
KoszulReport scan_to_report(const WeightSystem &w, const F &lam,
                            const TwistParameter &twist, const Window &win) {
  KoszulReport rep;
  rep.twist = twist.str();
  rep.window = win;
  std::map<long, KoszulDegreeReport> per_degree;
  for (const auto &blk : koszul_scan(w, lam, win)) {
    auto it = per_degree.find(blk.degree);
    if (it == per_degree.end()) {
      KoszulDegreeReport d;
      d.degree = blk.degree;
      it = per_degree.emplace(blk.degree, std::move(d)).first;
    }
    it->second.ker_phi1_dim += blk.ker_phi1_dim;
    it->second.homology_dim += blk.homology_dim;
    for (const auto &tup : blk.homology_witnesses) {
      std::vector<std::string> strs;
      for (const auto &e : tup)
        strs.push_back(to_string(e));
      it->second.witnesses.push_back(std::move(strs));
    }
  }
  for (auto &[k, d] : per_degree) {
    rep.ker_phi1_total += d.ker_phi1_dim;
    rep.homology_total += d.homology_dim;
    rep.degrees.push_back(std::move(d));
  }
  return rep;
}

} // namespace detail

inline KoszulReport koszul_homology_window(const WeightSystem &w,
                                           const TwistParameter &twist,
                                           const Window &win) {
  if (twist.is_symbolic())
    return detail::scan_to_report(w, RatFunc::variable(), twist, win);
  return detail::scan_to_report(w, twist.value(), twist, win);
}

// specialisation of symbolic-coefficient operators at a rational twist
inline WeylElement<Rat> specialize(const WeylElement<RatFunc> &a, const Rat &x) {
  WeylElement<Rat> out(a.nvars());
  for (const auto &[m, c] : a.terms())
    out.add_term(m, c.specialize(x));
  return out;
}

} // namespace wpd
