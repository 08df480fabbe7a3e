#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wpd/classify.hpp"
#include "wpd/graded.hpp"
#include "wpd/io.hpp"
#include "wpd/sampling.hpp"
#include "wpd/semigroup.hpp"

namespace wpd {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto &c : checks)
      if (!c.pass)
        return false;
    return true;
  }

  void add(const std::string &name, bool ok, const std::string &detail = "") {
    checks.push_back(CheckResult{name, ok, detail});
  }
};

// commutation against the Euler operator reads off the degree
inline SuiteResult verify_euler(const WeightSystem &w, const Window &win,
                                unsigned long seed) {
  SuiteResult out;
  out.suite = "euler";
  auto rng = seeded_rng(seed);
  WeylElement<Rat> E = euler_field<Rat>(w);
  long lo = std::max(win.degree_lo, -8L), hi = std::min(win.degree_hi, 8L);
  int failures = 0;
  int count = 0;
  std::string example;
  for (long k = lo; k <= hi; ++k) {
    for (int rep = 0; rep < 4; ++rep) {
      WeylElement<Rat> a =
          random_homogeneous(w, k, win.order_bound, 3, rng);
      if (a.is_zero())
        continue;
      ++count;
      if (commutator(E, a) != FieldOps<Rat>::from_rat(Rat(k)) * a) {
        ++failures;
        if (example.empty())
          example = to_string(a);
      }
    }
  }
  out.add("euler-commutator-grades",
          failures == 0,
          failures == 0 ? std::to_string(count) + " homogeneous samples"
                        : "counterexample: " + example);

  // graded pieces reassemble and grade correctly
  int bad = 0;
  for (int rep = 0; rep < 20; ++rep) {
    WeylElement<Rat> a = random_element(w.size(), 3, 4, rng);
    auto comps = graded_components(a, w);
    WeylElement<Rat> sum(w.size());
    for (const auto &[k, piece] : comps) {
      sum = sum + piece.element;
      if (commutator(E, piece.element) !=
          FieldOps<Rat>::from_rat(Rat(k)) * piece.element)
        ++bad;
    }
    if (sum != a)
      ++bad;
  }
  out.add("graded-components-reassemble", bad == 0,
          "20 random elements");
  return out;
}

// eigenvalue law on the torsion generator module, cross-checked against the
// weight span arithmetic
inline SuiteResult verify_delta(const WeightSystem &w,
                                const TwistParameter &twist,
                                const Window &win) {
  SuiteResult out;
  out.suite = "delta";
  Semigroup sg(w);
  int bound = std::max(win.order_bound, 2);
  bool eigen_ok = true;
  WeylElement<Rat> E = euler_field<Rat>(w);
  for (const Exps &beta : detail::shifted_simplex(Exps(w.size(), 0), bound)) {
    DeltaElement<Rat> v = DeltaElement<Rat>::monomial(beta, Rat(1));
    long mu = delta_weight(w, beta);
    if (!(delta_action(E, v) == Rat(mu) * v))
      eigen_ok = false;
  }
  out.add("delta-eigenvectors", eigen_ok,
          "exponents up to order " + std::to_string(bound));

  // the attained eigenvalues in the window are exactly -sum(d) - span;
  // deciding the whole window needs exponents up to window span / min weight
  long floor = -w.sum() - bound * w.max();
  int deep = static_cast<int>(bound * w.max() / w.min());
  std::set<long> seen;
  for (const Exps &beta : detail::shifted_simplex(Exps(w.size(), 0), deep))
    seen.insert(delta_weight(w, beta));
  bool set_ok = true;
  for (long mu = -w.sum(); mu >= floor; --mu)
    if (seen.count(mu) != (sg.contains(-mu - w.sum()) ? 1u : 0u))
      set_ok = false;
  out.add("delta-weights-match-span", set_ok,
          "window floor " + std::to_string(floor));

  DeltaCertificate cert = delta_exactness_certificate(w, twist, win);
  out.add("delta-certificate-agrees", cert.found == is_delta_weight(w, twist),
          cert.found ? "twist found among eigenvalues"
                     : "twist not an eigenvalue");
  return out;
}

namespace detail {

template <class F>
void koszul_checks(SuiteResult &out, const WeightSystem &w, const F &lam,
                   const TwistParameter &twist, const Window &win,
                   unsigned long seed, std::optional<long> expect_homology) {
  auto rng = seeded_rng(seed);

  // phi2 . phi1 vanishes identically on representatives
  bool comp_ok = true;
  for (int rep = 0; rep < 10; ++rep) {
    WeylElement<Rat> mq = random_element(w.size(), 2, 3, rng);
    WeylElement<F> m(w.size());
    for (const auto &[mono, c] : mq.terms())
      m.add_term(mono, FieldOps<F>::from_rat(c));
    for (const auto &img : koszul_phi2(koszul_phi1(m, w.size())))
      if (!img.is_zero())
        comp_ok = false;
  }
  out.add("phi2-after-phi1-vanishes", comp_ok, "10 random operators");

  auto blocks = koszul_scan<F>(w, lam, win);
  long k1 = 0, hom = 0;
  bool witness_ok = true;
  for (const auto &b : blocks) {
    k1 += b.ker_phi1_dim;
    hom += b.homology_dim;
    for (const auto &tup : b.homology_witnesses) {
      KoszulClassCheck chk = check_koszul_class<F>(w, lam, win, tup);
      if (!chk.in_kernel || chk.in_image)
        witness_ok = false;
    }
  }
  out.add("homology-witnesses-certified", witness_ok,
          "ker_phi1 " + std::to_string(k1) + ", homology " +
              std::to_string(hom));

  if (w.size() >= 3) {
    out.add("kernel-dims-vanish", k1 == 0 && hom == 0,
            "expected zero in every block for three or more variables");
  } else if (!twist.is_symbolic() && twist.value() == 0) {
    auto cls = euler_relation_class<F>(w);
    KoszulClassCheck chk = check_koszul_class<F>(w, lam, win, cls);
    out.add("relation-class-in-kernel", chk.in_kernel, tuple_str(cls));
    out.add("relation-class-off-image", !chk.in_image, tuple_str(cls));
    out.add("homology-detected", hom >= 1, "total " + std::to_string(hom));
  }

  if (expect_homology)
    out.add("homology-total-expected", hom == *expect_homology,
            "computed " + std::to_string(hom) + ", expected " +
                std::to_string(*expect_homology));
}

} // namespace detail

inline SuiteResult verify_koszul(const WeightSystem &w,
                                 const TwistParameter &twist, const Window &win,
                                 unsigned long seed,
                                 std::optional<long> expect_homology = {}) {
  SuiteResult out;
  out.suite = "koszul";
  if (twist.is_symbolic())
    detail::koszul_checks<RatFunc>(out, w, RatFunc::variable(), twist, win,
                                   seed, expect_homology);
  else
    detail::koszul_checks<Rat>(out, w, twist.value(), twist, win, seed,
                               expect_homology);
  return out;
}

inline SuiteResult verify_witnesses(const WeightSystem &w,
                                    const TwistParameter &twist,
                                    const Window &win) {
  SuiteResult out;
  out.suite = "witnesses";
  Classification c = classify(w, twist);

  // three routes to the exactness verdict
  bool path_a = c.exactness == Exactness::Guaranteed;
  bool path_b = !delta_exactness_certificate(w, twist, win).found;
  bool path_c = !(twist.is_integer() &&
                  Semigroup(w).contains(-twist.integer() - w.sum()));
  out.add("exactness-three-routes-agree", path_a == path_b && path_b == path_c,
          std::string(str(c.exactness)));

  if (c.kernel == KernelStatus::NonzeroWitness) {
    try {
      KernelWitness wit = make_witness(w, twist);
      WitnessReport rep = verify_witness(wit, w, twist, win);
      std::string detail = rep.kind;
      for (const auto &s : rep.checks)
        detail += "; " + s;
      out.add("kernel-witness-verified", true, detail);
    } catch (const Error &e) {
      out.add("kernel-witness-verified", false, e.what());
    }
  } else if (c.kernel == KernelStatus::Zero && twist.is_integer()) {
    long k = twist.integer();
    out.add("span-twist-has-sections", twisted_sheaf_sections(w, k) > 0,
            "degree " + std::to_string(k));
  }

  // verdicts only depend on the weight multiset
  std::vector<long> shuffled = w.weights();
  std::rotate(shuffled.begin(), shuffled.begin() + 1, shuffled.end());
  Classification c2 = classify(WeightSystem(shuffled), twist);
  out.add("verdict-permutation-invariant",
          c.exactness == c2.exactness && c.kernel == c2.kernel &&
              c.stack_equivalence == c2.stack_equivalence &&
              c.pushforward_equivalence == c2.pushforward_equivalence,
          "");
  return out;
}

inline std::vector<SuiteResult>
verify_all(const WeightSystem &w, const TwistParameter &twist,
           const Window &win, unsigned long seed) {
  std::vector<SuiteResult> out;
  out.push_back(verify_euler(w, win, seed));
  out.push_back(verify_delta(w, twist, win));
  out.push_back(verify_koszul(w, twist, win, seed));
  out.push_back(verify_witnesses(w, twist, win));
  return out;
}

} // namespace wpd
