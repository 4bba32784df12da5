#pragma once

#include <utility>
#include <vector>

#include "macias/rings.hpp"

namespace macias {

struct Factorization {
  Element unit;  // x = unit * prod parts[i].first ^ parts[i].second
  std::vector<std::pair<Element, int>> parts;  // canonical irreducibles, sorted
};

// Unique factorization in the four UFDs: Z, Z[i], F_p[x], Z[x].
// Irreducibles come back canonical-associate normalized, pairwise
// non-associated, in the canonical element order.
Factorization factor(const Element& x);

bool is_irreducible(const Element& x);

// Distinct canonical irreducible divisors of x (radical support).
std::vector<Element> distinct_irreducible_factors(const Element& x);

// One canonical irreducible divisor, without forcing a full factorization
// (the integer path only splits as far as needed).
Element some_irreducible_factor(const Element& x);

// The canonical Gaussian prime above a rational prime p, i.e. 1+1i for 2,
// the first-quadrant a+bi with a^2+b^2 = p for p = 1 (mod 4), p itself for
// p = 3 (mod 4).  For split p the conjugate prime is the second return.
std::vector<Element> gauss_primes_above(const Int& p);

// Monic irreducible factors of f modulo a prime p (arbitrary word-size p;
// the public F_p[x] ring keeps p <= 97 but the ideal layer needs more).
// Coefficients are mpz reduced into [0, p).
std::vector<std::pair<PolyPayload, int>> factor_mod_p(const PolyPayload& f,
                                                      const Int& p);
PolyPayload poly_mod_p(const Element& f, const Int& p);
PolyPayload gcd_mod_p(PolyPayload a, PolyPayload b, const Int& p);
// g = u*a + v*b (monic g) over F_p.
void ext_gcd_mod_p(const PolyPayload& a, const PolyPayload& b, const Int& p,
                   PolyPayload& g, PolyPayload& u, PolyPayload& v);

}  // namespace macias
