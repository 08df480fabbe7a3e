#pragma once

#include <random>
#include <vector>

#include "wpd/graded.hpp"
#include "wpd/weyl.hpp"

namespace wpd {

inline std::mt19937_64 seeded_rng(unsigned long seed) {
  return std::mt19937_64(seed);
}

inline Rat random_coeff(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  long n = num(rng);
  if (n == 0)
    n = 1;
  Rat q(n, den(rng));
  q.canonicalize();
  return q;
}

// random combination of degree-k basis monomials
inline WeylElement<Rat> random_homogeneous(const WeightSystem &w, long degree,
                                           int order_bound, int max_terms,
                                           std::mt19937_64 &rng) {
  std::vector<Monomial> basis = basis_of_D_degree(w, degree, order_bound);
  WeylElement<Rat> e(w.size());
  if (basis.empty())
    return e;
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (int t = 0; t < max_terms; ++t)
    e.add_term(basis[pick(rng)], random_coeff(rng));
  return e;
}

// random element with per-variable exponents <= cap
inline WeylElement<Rat> random_element(std::size_t nvars, int cap,
                                       int max_terms, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> ex(0, cap);
  WeylElement<Rat> e(nvars);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Exps a(nvars), b(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
      a[i] = ex(rng);
      b[i] = ex(rng);
    }
    e.add_term(Monomial{a, b}, random_coeff(rng));
  }
  return e;
}

inline Polynomial<Rat> random_polynomial(std::size_t nvars, int cap,
                                         int max_terms, std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> ex(0, cap);
  Polynomial<Rat> p(nvars);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Exps a(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
      a[i] = ex(rng);
    p.add_term(a, random_coeff(rng));
  }
  return p;
}

} // namespace wpd
