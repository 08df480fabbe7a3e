#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>

#include "wpd/errors.hpp"

namespace wpd {

// Exact rational scalar. All coefficient arithmetic in the library runs on
// these; no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_integer(const Rat &q) { return q.get_den() == 1; }

inline Int floor_div(const Int &a, const Int &b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// "p", "-p", "p/q" with q > 0 after canonicalisation
inline Rat parse_rational(const std::string &text) {
  if (text.empty())
    throw ParseError("empty rational literal", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok)
      throw ParseError("bad character '" + std::string(1, c) +
                           "' in rational literal",
                       i);
  }
  if (text.back() == '/' || text.front() == '/')
    throw ParseError("malformed rational literal", 0);
  Rat q;
  if (q.set_str(text, 10) != 0)
    throw ParseError("malformed rational literal", 0);
  if (q.get_den() == 0)
    throw ParseError("zero denominator", 0);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat &q) { return q.get_str(); }

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  if (k > n)
    return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

} // namespace wpd
