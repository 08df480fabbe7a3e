#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wpd/errors.hpp"
#include "wpd/graded.hpp"
#include "wpd/modules.hpp"
#include "wpd/semigroup.hpp"
#include "wpd/twist.hpp"
#include "wpd/weights.hpp"

namespace wpd {

enum class Exactness { Guaranteed, NotGuaranteedByPaper };
enum class KernelStatus { Zero, NonzeroWitness, UnknownByPaper };
enum class StackEquivalence { Yes, QuotientEquivalenceOnly, No, OutsidePaperScope };
enum class PushforwardEquivalence { Yes, NotWellFormed, NotApplicable };

inline const char *str(Exactness e) {
  return e == Exactness::Guaranteed ? "Guaranteed" : "NotGuaranteedByPaper";
}
inline const char *str(KernelStatus k) {
  switch (k) {
  case KernelStatus::Zero:
    return "Zero";
  case KernelStatus::NonzeroWitness:
    return "NonzeroWitness";
  default:
    return "UnknownByPaper";
  }
}
inline const char *str(StackEquivalence s) {
  switch (s) {
  case StackEquivalence::Yes:
    return "Yes";
  case StackEquivalence::QuotientEquivalenceOnly:
    return "QuotientEquivalenceOnly";
  case StackEquivalence::No:
    return "No";
  default:
    return "OutsidePaperScope";
  }
}
inline const char *str(PushforwardEquivalence p) {
  switch (p) {
  case PushforwardEquivalence::Yes:
    return "Yes";
  case PushforwardEquivalence::NotWellFormed:
    return "NotWellFormed";
  default:
    return "NotApplicable";
  }
}

enum class WitnessKind { TwistingSheaf, FractionalModule };

struct KernelWitness {
  WitnessKind kind = WitnessKind::TwistingSheaf;
  long sheaf_twist = 0;     // TwistingSheaf: the k of the sections-free twist
  Rat base_exponent = 0;    // FractionalModule: (lam - 1) / d_0
  Window verification_window;
};

struct Classification {
  TwistParameter twist = TwistParameter::rational(0);
  std::vector<long> weights;
  Exactness exactness = Exactness::NotGuaranteedByPaper;
  KernelStatus kernel = KernelStatus::UnknownByPaper;
  std::optional<KernelWitness> witness;
  StackEquivalence stack_equivalence = StackEquivalence::OutsidePaperScope;
  PushforwardEquivalence pushforward_equivalence =
      PushforwardEquivalence::NotApplicable;
  bool n_caveat = false; // two variables: the retraction argument needs three
};

// The decision procedure. Exactness is the complement of the torsion-weight
// condition; the kernel verdict follows the coprime/integrality split, with
// explicit witnesses where the constructions apply.
inline Classification classify(const WeightSystem &w,
                               const TwistParameter &lam) {
  Classification out;
  out.twist = lam;
  out.weights = w.weights();
  out.n_caveat = (w.size() == 2);

  out.exactness = is_delta_weight(w, lam) ? Exactness::NotGuaranteedByPaper
                                          : Exactness::Guaranteed;

  Semigroup sg(w);
  if (w.gcd() == 1) {
    if (!lam.is_integer() || sg.contains(lam.integer())) {
      out.kernel = KernelStatus::Zero;
    } else {
      out.kernel = KernelStatus::NonzeroWitness;
      KernelWitness wit;
      wit.kind = WitnessKind::TwistingSheaf;
      wit.sheaf_twist = lam.integer();
      wit.verification_window = Window::default_for(w);
      out.witness = wit;
    }
  } else {
    if (lam.is_symbolic()) {
      // the construction needs the concrete exponent (lam-1)/d_0
      out.kernel = KernelStatus::UnknownByPaper;
    } else {
      out.kernel = KernelStatus::NonzeroWitness;
      KernelWitness wit;
      wit.kind = WitnessKind::FractionalModule;
      wit.base_exponent = (lam.value() - 1) / w[0];
      wit.verification_window = Window::default_for(w);
      out.witness = wit;
    }
  }

  if (out.exactness != Exactness::Guaranteed) {
    out.stack_equivalence = StackEquivalence::OutsidePaperScope;
  } else if (out.kernel == KernelStatus::Zero) {
    out.stack_equivalence = w.size() >= 3 ? StackEquivalence::Yes
                                          : StackEquivalence::OutsidePaperScope;
  } else if (out.kernel == KernelStatus::NonzeroWitness) {
    out.stack_equivalence = out.witness->kind == WitnessKind::TwistingSheaf
                                ? StackEquivalence::QuotientEquivalenceOnly
                                : StackEquivalence::No;
  } else {
    out.stack_equivalence = StackEquivalence::OutsidePaperScope;
  }

  if (out.stack_equivalence == StackEquivalence::Yes)
    out.pushforward_equivalence = is_well_formed(w)
                                      ? PushforwardEquivalence::Yes
                                      : PushforwardEquivalence::NotWellFormed;
  else
    out.pushforward_equivalence = PushforwardEquivalence::NotApplicable;

  return out;
}

inline KernelWitness make_witness(const WeightSystem &w,
                                  const TwistParameter &lam) {
  Classification c = classify(w, lam);
  if (c.kernel != KernelStatus::NonzeroWitness)
    throw NoWitnessApplicableError("kernel verdict is " +
                                   std::string(str(c.kernel)));
  return *c.witness;
}

struct WitnessReport {
  std::string kind;
  std::vector<std::string> checks;
};

// Machine verification of a kernel witness.
//   TwistingSheaf(k): no sections in degree k, yet some degree in the window
//   is nonzero.
//   FractionalModule: generate from the base monomial and confirm every
//   Euler eigenvalue stays off lam modulo the gcd, so degree zero is empty.
inline WitnessReport verify_witness(const KernelWitness &wit,
                                    const WeightSystem &w,
                                    const TwistParameter &lam,
                                    const Window &win) {
  WitnessReport rep;
  if (wit.kind == WitnessKind::TwistingSheaf) {
    rep.kind = "TwistingSheaf";
    long k = wit.sheaf_twist;
    if (Semigroup(w).contains(k))
      throw VerificationFailedError("twist " + std::to_string(k) +
                                    " has nonzero sections");
    long secs = twisted_sheaf_sections(w, k);
    if (secs != 0)
      throw VerificationFailedError("sections dimension " +
                                    std::to_string(secs) + " in degree " +
                                    std::to_string(k));
    rep.checks.push_back("sections dim in degree " + std::to_string(k) +
                         " = 0");
    // internal degree -k holds the constants, so the scan always terminates
    long last = std::max(win.degree_hi, -k);
    for (long m = win.degree_lo; m <= last; ++m) {
      long d = hilbert_dim(w, k + m);
      if (d > 0) {
        rep.checks.push_back("module nonzero: dim " + std::to_string(d) +
                             " in internal degree " + std::to_string(m));
        return rep;
      }
    }
    throw VerificationFailedError("no nonzero degree found in the window");
  }

  rep.kind = "FractionalModule";
  if (w.gcd() <= 1)
    throw VerificationFailedError("fractional witness needs gcd > 1");
  if (lam.is_symbolic())
    throw VerificationFailedError("fractional witness needs a concrete twist");
  long g = w.gcd();
  std::vector<Rat> base(w.size(), Rat(0));
  base[0] = wit.base_exponent;

  // breadth-first closure of the generator under all 2(n+1) actions
  FormalMonomialElement<Rat> gen = FormalMonomialElement<Rat>::generator(base);
  std::set<Exps> seen;
  std::vector<FormalMonomialElement<Rat>> frontier{gen};
  seen.insert(Exps(w.size(), 0));
  long steps = std::max<long>(win.order_bound, 2);
  long checked = 0;
  for (long s = 0; s < steps; ++s) {
    std::vector<FormalMonomialElement<Rat>> next;
    for (const auto &v : frontier) {
      for (std::size_t i = 0; i < 2 * w.size(); ++i) {
        WeylElement<Rat> gele =
            i < w.size()
                ? WeylElement<Rat>::variable(w.size(), i)
                : WeylElement<Rat>::derivation(w.size(), i - w.size());
        FormalMonomialElement<Rat> img = formal_action(gele, v);
        if (img.is_zero())
          continue;
        for (const auto &[m, c] : img.terms()) {
          if (!seen.insert(m).second)
            continue;
          // eigenvalue off the action route must match the exponent formula
          FormalMonomialElement<Rat> mono(base);
          mono.add_term(m, Rat(1));
          FormalMonomialElement<Rat> em =
              formal_action(euler_field<Rat>(w), mono);
          Rat expect = formal_weight<Rat>(w, base, m);
          if (!(em == expect * mono))
            throw VerificationFailedError("monomial is not an eigenvector");
          // degree-zero part stays empty: eigenvalue != lam mod gcd
          Rat diff = lam.value() - expect;
          bool congruent = wpd::is_integer(diff) &&
                           diff.get_num() % g == 0;
          if (congruent)
            throw VerificationFailedError(
                "eigenvalue " + expect.get_str() +
                " is congruent to the twist modulo " + std::to_string(g));
          ++checked;
          next.push_back(mono);
        }
      }
    }
    frontier = std::move(next);
  }
  rep.checks.push_back("module nonzero: " + std::to_string(seen.size()) +
                       " monomials generated");
  rep.checks.push_back("all " + std::to_string(checked) +
                       " eigenvalues noncongruent to the twist mod " +
                       std::to_string(g));
  return rep;
}

struct DeltaCertificate {
  bool found = false;
  std::optional<Exps> witness_exponent; // beta with eigenvalue lam
  std::vector<long> weights_in_window;  // eigenvalues enumerated, descending
  int order_used = 0;
};

// Enumerates Euler eigenvalues of the torsion generator module through the
// module action itself, deep enough to decide the membership question for
// an integer twist.
inline DeltaCertificate delta_exactness_certificate(const WeightSystem &w,
                                                    const TwistParameter &lam,
                                                    const Window &win) {
  DeltaCertificate out;
  long need = 0;
  if (lam.is_integer()) {
    long target = -lam.integer() - w.sum();
    if (target >= 0)
      need = target / w.min() + 1;
  }
  out.order_used = static_cast<int>(std::max<long>(win.order_bound, need));

  WeylElement<Rat> E = euler_field<Rat>(w);
  std::set<long> values;
  for (const Exps &beta :
       detail::shifted_simplex(Exps(w.size(), 0), out.order_used)) {
    DeltaElement<Rat> v = DeltaElement<Rat>::monomial(beta, Rat(1));
    DeltaElement<Rat> ev = delta_action(E, v);
    long mu = delta_weight(w, beta);
    if (!(ev == Rat(mu) * v))
      throw VerificationFailedError("delta monomial is not an eigenvector");
    values.insert(mu);
    if (lam.is_integer() && mu == lam.integer() && !out.witness_exponent)
      out.witness_exponent = beta;
  }
  out.found = out.witness_exponent.has_value();
  out.weights_in_window.assign(values.rbegin(), values.rend());
  return out;
}

} // namespace wpd
