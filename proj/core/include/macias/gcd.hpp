#pragma once

#include <variant>

#include "macias/rings.hpp"

namespace macias {

struct ExtGcd {
  Element g, u, v;  // g = u*a + v*b, g canonical-associate normalized
};

// Euclidean rings only: Z, Z[i], F_p[x].  Not both operands zero.
ExtGcd extended_gcd(const Element& a, const Element& b);

// Carried when no gcd exists in Z[w]: two common divisors whose principal
// ideals are incomparable minimal covers of <a, b>.
struct NoGcdWitness {
  Element d1, d2;
};

using GcdResult = std::variant<Element, NoGcdWitness>;

// Greatest common divisor where it exists.  Z / Z[i] / F_p[x] go through the
// extended gcd; Z[x] splits content and primitive part; Z[w] searches all
// common divisors by norm descent; Z x Z is componentwise.
GcdResult gcd(const Element& a, const Element& b);

// gcd that is known to exist (throws if a NoGcdWitness comes back).
Element gcd_or_throw(const Element& a, const Element& b);

// Common divisors of a and b in Z[w] up to associates, canonical order.
// Includes 1, excludes associates of each other.
std::vector<Element> common_divisors_quad(const Element& a, const Element& b);

// Quotient-remainder in the three Euclidean rings (b != 0); |r| < |b| in the
// appropriate norm.
std::pair<Element, Element> euclidean_divmod(const Element& a,
                                             const Element& b);

// Z[x] helpers used by the factorization and comaximality layers.
Int poly_content(const Element& f);          // nonnegative gcd of coefficients
Element poly_primitive_part(const Element& f);  // positive leading coefficient
Element poly_gcd_rational(const Element& f, const Element& g);  // primitive

}  // namespace macias
