#pragma once

#include <optional>
#include <variant>

#include "macias/ideals.hpp"

namespace macias {

// How a rational prime meets Z[w], w^2 = -5: inert (p) stays prime, the
// ramified primes are 2 and 5 with (p, a + w) squared above them, and an odd
// split prime gives the conjugate pair (p, w + a), (p, w - a) for the
// canonical root a of t^2 + 5 (mod p), 0 < a < p/2 (a = 0 for p = 5, a = 1
// for p = 2).
enum class SplitKind { inert, ramified, split_plus, split_minus };

struct IntPrimeDesc {
  Int p;
  bool operator==(const IntPrimeDesc&) const = default;
};
struct GaussPrimeDesc {
  Element pi;  // canonical first-quadrant Gaussian prime
  bool operator==(const GaussPrimeDesc&) const = default;
};
struct QuadPrimeDesc {
  Int p;
  SplitKind kind;
  Int a;  // root parameter; 0 unless split or ramified-at-2
  bool operator==(const QuadPrimeDesc&) const = default;
};
struct PolyFpPrimeDesc {
  Element h;  // monic irreducible
  bool operator==(const PolyFpPrimeDesc&) const = default;
};
struct ZxPrimeDesc {
  Int p;
  Element h;  // monic lift to Z[x] with coefficients in [0, p)
  bool operator==(const ZxPrimeDesc&) const = default;
};
enum class ProdSide { left, right };
struct ProdPrimeDesc {
  ProdSide side;
  Int p;
  bool operator==(const ProdPrimeDesc&) const = default;
};

struct MaximalIdealDescriptor {
  RingDescriptor ring;
  std::variant<IntPrimeDesc, GaussPrimeDesc, QuadPrimeDesc, PolyFpPrimeDesc,
               ZxPrimeDesc, ProdPrimeDesc>
      name;
  bool operator==(const MaximalIdealDescriptor&) const = default;
};

Ideal ideal_of(const MaximalIdealDescriptor& m);
std::string describe(const MaximalIdealDescriptor& m);
int compare_descriptors(const MaximalIdealDescriptor& a,
                        const MaximalIdealDescriptor& b);
struct DescriptorLess {
  bool operator()(const MaximalIdealDescriptor& a,
                  const MaximalIdealDescriptor& b) const {
    return compare_descriptors(a, b) < 0;
  }
};

// The primes of Z[w] above a rational prime p, canonical order.
std::vector<MaximalIdealDescriptor> dedekind_primes_above(const Int& p);

struct MaximalIdealSet {
  std::vector<MaximalIdealDescriptor> ideals;
  // Z x Z: a zero coordinate lies in the one-sided maximal ideal for every
  // prime; the bounded enumeration is then paired with these markers.
  bool all_primes_left = false;
  bool all_primes_right = false;
  std::optional<Int> prime_bound;
};

// Exactly the maximal ideals containing <x>.  Units give the empty set,
// zero is an error, Z[x] is an error (the containing set is infinite), and
// a zero coordinate in Z x Z needs prod_prime_bound.
MaximalIdealSet maximal_ideals_containing(
    const Element& x, std::optional<Int> prod_prime_bound = std::nullopt);

// Intersection of the maximal ideals over <x> (Gilmer's radical of <x>).
// Units give <1>, zero gives the Jacobson radical of the ring itself, which
// is the zero ideal for all six rings.
Ideal jacobson_radical_principal(const Element& x);

// sqrt(<x>) = <product of the distinct irreducible factors> in the UFDs.
Ideal radical_principal(const Element& x);

}  // namespace macias
