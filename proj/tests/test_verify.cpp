#include <catch_amalgamated.hpp>

#include "wpd/verify.hpp"

using namespace wpd;

TEST_CASE("euler suite passes on assorted systems") {
  for (const auto &weights : std::vector<std::vector<long>>{
           {1, 1}, {2, 3}, {1, 2, 3}, {2, 3, 5}, {3, 6, 9}}) {
    WeightSystem w(weights);
    SuiteResult r = verify_euler(w, Window::default_for(w), 2024);
    INFO(w.str());
    CHECK(r.pass());
  }
}

TEST_CASE("delta suite passes for integral, fractional and symbolic twists") {
  WeightSystem w({2, 3, 5});
  Window win = Window::default_for(w);
  for (const char *tw : {"0", "-10", "-12", "1/2", "generic"}) {
    SuiteResult r = verify_delta(w, TwistParameter::parse(tw), win);
    INFO(tw);
    CHECK(r.pass());
  }
}

TEST_CASE("koszul suite expectations by variable count") {
  {
    WeightSystem w({1, 1, 1});
    SuiteResult r = verify_koszul(w, TwistParameter::rational(0),
                                  Window(-3, 3, 3, 1), 7);
    CHECK(r.pass());
  }
  {
    WeightSystem w({2, 3});
    SuiteResult r = verify_koszul(w, TwistParameter::rational(0),
                                  Window::default_for(w), 7);
    CHECK(r.pass());
    bool saw_class_checks = false;
    for (const auto &c : r.checks)
      if (c.name == "relation-class-in-kernel")
        saw_class_checks = true;
    CHECK(saw_class_checks);
  }
  {
    // a wrong homology expectation must fail the suite
    WeightSystem w({2, 3});
    SuiteResult r = verify_koszul(w, TwistParameter::rational(0),
                                  Window::default_for(w), 7, 99);
    CHECK(!r.pass());
  }
  {
    // symbolic twist on two variables: certificates only, no dim expectation
    WeightSystem w({2, 3});
    SuiteResult r = verify_koszul(w, TwistParameter::generic(),
                                  Window(-5, 5, 2, 3), 7);
    CHECK(r.pass());
  }
}

TEST_CASE("witness suite across the verdict kinds") {
  Window win111 = Window::default_for(WeightSystem({1, 1, 1}));
  for (const char *tw : {"0", "3", "-5", "1/2", "generic"}) {
    SuiteResult r = verify_witnesses(WeightSystem({1, 1, 1}),
                                     TwistParameter::parse(tw), win111);
    INFO(tw);
    CHECK(r.pass());
  }
  for (const char *tw : {"0", "3", "generic"}) {
    WeightSystem w24({2, 4});
    SuiteResult r = verify_witnesses(w24, TwistParameter::parse(tw),
                                     Window::default_for(w24));
    INFO(tw);
    CHECK(r.pass());
  }
}

TEST_CASE("combined run") {
  WeightSystem w({1, 2, 2});
  auto all = verify_all(w, TwistParameter::rational(Rat(1, 2)),
                        Window::default_for(w), 31);
  CHECK(all.size() == 4);
  for (const auto &s : all) {
    INFO(s.suite);
    CHECK(s.pass());
  }
}
