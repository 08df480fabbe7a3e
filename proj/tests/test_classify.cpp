#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "wpd/classify.hpp"

using namespace wpd;

TEST_CASE("classification rows from the theorem conditions") {
  {
    // the classical unweighted plane
    Classification c = classify(WeightSystem({1, 1, 1}),
                                TwistParameter::rational(0));
    CHECK(c.exactness == Exactness::Guaranteed);
    CHECK(c.kernel == KernelStatus::Zero);
    CHECK(c.stack_equivalence == StackEquivalence::Yes);
    CHECK(c.pushforward_equivalence == PushforwardEquivalence::Yes);
    CHECK(!c.n_caveat);
  }
  {
    Classification c = classify(WeightSystem({2, 3}),
                                TwistParameter::rational(1));
    CHECK(c.exactness == Exactness::Guaranteed);
    CHECK(c.kernel == KernelStatus::NonzeroWitness);
    REQUIRE(c.witness);
    CHECK(c.witness->kind == WitnessKind::TwistingSheaf);
    CHECK(c.witness->sheaf_twist == 1);
    CHECK(c.stack_equivalence == StackEquivalence::QuotientEquivalenceOnly);
    CHECK(c.n_caveat);
  }
  {
    Classification c = classify(WeightSystem({2, 4}),
                                TwistParameter::rational(3));
    CHECK(c.exactness == Exactness::Guaranteed);
    CHECK(c.kernel == KernelStatus::NonzeroWitness);
    REQUIRE(c.witness);
    CHECK(c.witness->kind == WitnessKind::FractionalModule);
    CHECK(c.witness->base_exponent == Rat(1));
    CHECK(c.stack_equivalence == StackEquivalence::No);
  }
  {
    Classification c = classify(WeightSystem({1, 1, 1}),
                                TwistParameter::rational(-5));
    CHECK(c.exactness == Exactness::NotGuaranteedByPaper);
    CHECK(c.stack_equivalence == StackEquivalence::OutsidePaperScope);
    CHECK(c.kernel == KernelStatus::NonzeroWitness); // O(-5) has no sections
  }
  {
    Classification c = classify(WeightSystem({1, 2, 2}),
                                TwistParameter::rational(Rat(1, 2)));
    CHECK(c.exactness == Exactness::Guaranteed);
    CHECK(c.kernel == KernelStatus::Zero);
    CHECK(c.stack_equivalence == StackEquivalence::Yes);
    CHECK(c.pushforward_equivalence == PushforwardEquivalence::NotWellFormed);
  }
  {
    // symbolic twist with a common factor: the construction has no concrete
    // exponent to build on
    Classification c = classify(WeightSystem({2, 4}), TwistParameter::generic());
    CHECK(c.exactness == Exactness::Guaranteed);
    CHECK(c.kernel == KernelStatus::UnknownByPaper);
    CHECK(c.stack_equivalence == StackEquivalence::OutsidePaperScope);
  }
  {
    // two variables, both conditions positive: the supporting lemma is
    // hypothesised away, so no equivalence claim
    Classification c = classify(WeightSystem({2, 3}),
                                TwistParameter::generic());
    CHECK(c.exactness == Exactness::Guaranteed);
    CHECK(c.kernel == KernelStatus::Zero);
    CHECK(c.stack_equivalence == StackEquivalence::OutsidePaperScope);
    CHECK(c.n_caveat);
  }
}

TEST_CASE("witness construction") {
  KernelWitness w1 = make_witness(WeightSystem({2, 3}),
                                  TwistParameter::rational(1));
  CHECK(w1.kind == WitnessKind::TwistingSheaf);
  CHECK(w1.sheaf_twist == 1);

  KernelWitness w2 = make_witness(WeightSystem({2, 4}),
                                  TwistParameter::rational(3));
  CHECK(w2.kind == WitnessKind::FractionalModule);
  CHECK(w2.base_exponent == Rat(1));

  KernelWitness w3 = make_witness(WeightSystem({3, 6, 9}),
                                  TwistParameter::rational(Rat(1, 3)));
  CHECK(w3.kind == WitnessKind::FractionalModule);
  CHECK(w3.base_exponent == Rat(-2, 9));

  CHECK_THROWS_AS(make_witness(WeightSystem({1, 1, 1}),
                               TwistParameter::rational(0)),
                  NoWitnessApplicableError);
  CHECK_THROWS_AS(make_witness(WeightSystem({2, 4}), TwistParameter::generic()),
                  NoWitnessApplicableError);
}

TEST_CASE("witness verification") {
  WeightSystem w23({2, 3});
  Window win = Window::default_for(w23);
  {
    KernelWitness wit = make_witness(w23, TwistParameter::rational(1));
    WitnessReport rep = verify_witness(wit, w23, TwistParameter::rational(1), win);
    CHECK(rep.kind == "TwistingSheaf");
    CHECK(rep.checks.size() == 2);
  }
  {
    WeightSystem w24({2, 4});
    KernelWitness wit = make_witness(w24, TwistParameter::rational(3));
    WitnessReport rep = verify_witness(wit, w24, TwistParameter::rational(3),
                                       Window::default_for(w24));
    CHECK(rep.kind == "FractionalModule");
  }
  {
    // 0 is always in the span: the sheaf witness must be rejected
    KernelWitness bad;
    bad.kind = WitnessKind::TwistingSheaf;
    bad.sheaf_twist = 0;
    CHECK_THROWS_AS(verify_witness(bad, w23, TwistParameter::rational(0), win),
                    VerificationFailedError);
  }
}

TEST_CASE("delta certificates") {
  Window win111 = Window::default_for(WeightSystem({1, 1, 1}));
  {
    DeltaCertificate c = delta_exactness_certificate(
        WeightSystem({1, 1, 1}), TwistParameter::rational(-3), win111);
    CHECK(c.found);
    REQUIRE(c.witness_exponent);
    CHECK(*c.witness_exponent == Exps{0, 0, 0}); // the generator itself
  }
  {
    WeightSystem w23({2, 3});
    DeltaCertificate c = delta_exactness_certificate(
        w23, TwistParameter::rational(-6), Window::default_for(w23));
    CHECK(!c.found); // 1 is off the span of (2,3)
  }
  {
    DeltaCertificate c = delta_exactness_certificate(
        WeightSystem({1, 1, 1}), TwistParameter::generic(), win111);
    CHECK(!c.found);
  }
  {
    // twists below the reach of the default order bound are still decided
    WeightSystem w111({1, 1, 1});
    DeltaCertificate c = delta_exactness_certificate(
        w111, TwistParameter::rational(-20), win111);
    CHECK(c.found);
    CHECK(c.order_used > win111.order_bound);
  }
}

TEST_CASE("verdicts agree with an independent derivation over a grid") {
  std::vector<std::vector<long>> systems{{1, 1, 1}, {2, 3},   {2, 4},
                                         {1, 2, 2}, {2, 3, 5}, {3, 6, 9}};
  for (const auto &weights : systems) {
    WeightSystem w(weights);
    Window win = Window::default_for(w);
    std::vector<TwistParameter> twists;
    for (long v = -7; v <= 7; ++v)
      twists.push_back(TwistParameter::rational(v));
    twists.push_back(TwistParameter::rational(Rat(1, 2)));
    twists.push_back(TwistParameter::generic());

    for (const TwistParameter &lam : twists) {
      Classification c = classify(w, lam);

      // route 1: the span formula via the brute-force oracle
      bool delta_hit = lam.is_integer() &&
                       oracle::member(w.weights(), -lam.integer() - w.sum());
      CHECK((c.exactness == Exactness::Guaranteed) == !delta_hit);

      // route 2: eigenvalue enumeration through the module action
      DeltaCertificate cert = delta_exactness_certificate(w, lam, win);
      CHECK(cert.found == delta_hit);

      // kernel verdict from the theorem conditions
      if (w.gcd() == 1) {
        bool zero = !lam.is_integer() ||
                    oracle::member(w.weights(), lam.integer());
        CHECK((c.kernel == KernelStatus::Zero) == zero);
      } else {
        CHECK(c.kernel == (lam.is_symbolic() ? KernelStatus::UnknownByPaper
                                             : KernelStatus::NonzeroWitness));
      }

      // witness totality
      if (c.kernel == KernelStatus::NonzeroWitness) {
        KernelWitness wit = make_witness(w, lam);
        CHECK_NOTHROW(verify_witness(wit, w, lam, win));
      }

      // equivalence wiring
      if (c.exactness == Exactness::Guaranteed &&
          c.kernel == KernelStatus::Zero && w.size() >= 3)
        CHECK(c.stack_equivalence == StackEquivalence::Yes);
      if (c.stack_equivalence == StackEquivalence::Yes)
        CHECK((c.pushforward_equivalence == PushforwardEquivalence::Yes) ==
              is_well_formed(w));
    }
  }
}

TEST_CASE("verdict stabilises past the frobenius number") {
  for (const auto &weights :
       std::vector<std::vector<long>>{{1, 1, 1}, {2, 3, 5}, {1, 2, 2}}) {
    WeightSystem w(weights);
    long f = frobenius(w);
    for (long lam = f + 1; lam <= f + 3 * w.max(); ++lam) {
      Classification c = classify(w, TwistParameter::rational(lam));
      CHECK(c.stack_equivalence == StackEquivalence::Yes);
    }
  }
}

TEST_CASE("verdicts depend only on the weight multiset") {
  std::vector<long> base{2, 3, 5};
  std::vector<std::vector<long>> perms{{2, 3, 5}, {5, 3, 2}, {3, 5, 2}};
  for (const char *tw : {"0", "4", "-8", "1/2", "generic"}) {
    TwistParameter lam = TwistParameter::parse(tw);
    Classification ref = classify(WeightSystem(base), lam);
    for (const auto &p : perms) {
      Classification c = classify(WeightSystem(p), lam);
      CHECK(c.exactness == ref.exactness);
      CHECK(c.kernel == ref.kernel);
      CHECK(c.stack_equivalence == ref.stack_equivalence);
      CHECK(c.pushforward_equivalence == ref.pushforward_equivalence);
    }
  }
}
