#include <catch_amalgamated.hpp>

#include "wpd/linalg.hpp"
#include "wpd/ratfun.hpp"

using namespace wpd;

TEST_CASE("rank and kernel over the rationals") {
  Mat<Rat> m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);

  Mat<Rat> k = kernel_basis(m, 3);
  REQUIRE(k.size() == 1);
  // check M k = 0
  for (const auto &row : m) {
    Rat s = 0;
    for (std::size_t j = 0; j < 3; ++j)
      s += row[j] * k[0][j];
    CHECK(s == 0);
  }

  Mat<Rat> id = {{1, 0}, {0, 1}};
  CHECK(rank(id) == 2);
  CHECK(kernel_basis(id, 2).empty());
}

TEST_CASE("echelon membership with certificates") {
  Echelon<Rat> e(3, true);
  e.insert({1, 1, 0});
  e.insert({0, 1, 1});
  Vec<Rat> tag;
  CHECK(e.contains({1, 2, 1}, &tag));
  REQUIRE(tag.size() == 2);
  // 1*(1,1,0) + 1*(0,1,1) = (1,2,1)
  CHECK(tag[0] == 1);
  CHECK(tag[1] == 1);
  CHECK(!e.contains({1, 0, 0}));

  // inserting a dependent vector does not change the rank
  CHECK(!e.insert({1, 2, 1}));
  CHECK(e.rank() == 2);
  // certificates still reconstruct the target from the inserted vectors
  std::vector<Vec<Rat>> orig = {{1, 1, 0}, {0, 1, 1}, {1, 2, 1}};
  Vec<Rat> target = {2, 3, 1};
  Vec<Rat> tag2;
  CHECK(e.contains(target, &tag2));
  REQUIRE(tag2.size() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < orig.size(); ++i)
      s += tag2[i] * orig[i][j];
    CHECK(s == target[j]);
  }
}

TEST_CASE("canonical residues") {
  Echelon<Rat> e(3);
  e.insert({1, 2, 0});
  Vec<Rat> r1 = e.reduce({1, 2, 5});
  Vec<Rat> r2 = e.reduce({2, 4, 5});
  CHECK(r1 == Vec<Rat>{0, 0, 5});
  CHECK(r2 == Vec<Rat>{0, 0, 5});
}

TEST_CASE("rank over the rational function field") {
  RatFunc lam = RatFunc::variable();
  Mat<RatFunc> m = {{lam, RatFunc(1)}, {lam * lam, lam}};
  CHECK(rank(m) == 1);

  Mat<RatFunc> m2 = {{lam, RatFunc(1)}, {RatFunc(1), lam}};
  CHECK(rank(m2) == 2); // det = lam^2 - 1 is a nonzero rational function

  Mat<RatFunc> k = kernel_basis(m, 2);
  REQUIRE(k.size() == 1);
  for (const auto &row : m) {
    RatFunc s(0);
    for (std::size_t j = 0; j < 2; ++j)
      s += row[j] * k[0][j];
    CHECK(s.is_zero());
  }
}
