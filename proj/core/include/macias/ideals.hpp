#pragma once

#include <optional>
#include <variant>

#include "macias/rings.hpp"

namespace macias {

// Column-style Hermite normal form of a rank-2 sublattice of Z^2 written on
// the basis {1, w} (w = i for Z[i], w^2 = -5 for Z[w]).  Columns are (d, 0)
// and (c, e): the ideal is spanned over Z by the ring elements d and c + ew,
// with d, e > 0 and 0 <= c < d.  Unique per lattice; d*e is the additive
// index [R : I].
struct HnfMat {
  Int d, c, e;
  bool operator==(const HnfMat&) const = default;
};

inline Int hnf_index(const HnfMat& m) { return m.d * m.e; }

struct PrincipalIdeal {
  Element g;
  bool operator==(const PrincipalIdeal&) const = default;
};
struct TwoGenIdeal {
  Element a, b;
  bool operator==(const TwoGenIdeal&) const = default;
};
struct HnfIdeal {
  HnfMat m;
  bool operator==(const HnfIdeal&) const = default;
};

struct Ideal {
  RingDescriptor ring;
  std::variant<PrincipalIdeal, TwoGenIdeal, HnfIdeal> rep;
  bool operator==(const Ideal&) const = default;
};

Ideal principal(Element g);
Ideal two_gen(Element a, Element b);
Ideal hnf_ideal(const RingDescriptor& ring, HnfMat m);

bool is_zero_ideal(const Ideal& I);
// Proper means != R.
bool is_proper(const Ideal& I);

// Canonical presentation: Z and F_p[x] collapse to a principal generator in
// canonical-associate form; Z[i] and Z[w] go to HNF; Z[x] keeps its
// generators (sign-normalized, zeros dropped -- no canonical form claimed);
// Z x Z collapses componentwise.
Ideal normalize_ideal(const Ideal& I);

// Equality through normalize_ideal.
bool ideal_equal(const Ideal& I, const Ideal& J);

// y in I.  Principal ideals via exact division, HNF via the triangular
// solve.  Z[x] two-generator membership is decided when one generator is an
// integer constant whose reduction leaves the other with an invertible
// leading coefficient; everything else is Unsupported.
bool ideal_membership(const Ideal& I, const Element& y);

// HNF of the ideal generated by the given ring elements (GaussInt/QuadM5;
// at least one generator nonzero).
HnfMat hnf_of_elements(const RingDescriptor& ring,
                       const std::vector<Element>& gens);

// When <a, b> is the full ring, a Bezout pair u, v with u*a + v*b = 1,
// recovered from the tracked HNF reduction.
std::optional<std::pair<Element, Element>> hnf_express_one(const Element& a,
                                                           const Element& b);

// Ideal product of two HNF ideals.
HnfMat hnf_mul(const RingDescriptor& ring, const HnfMat& x, const HnfMat& y);

// Basis elements d and c + e*w of an HNF ideal.
std::pair<Element, Element> hnf_generators(const RingDescriptor& ring,
                                           const HnfMat& m);

// Lattice inclusion J >= I (both over the same ring).
bool hnf_contains(const RingDescriptor& ring, const HnfMat& outer,
                  const HnfMat& inner);

}  // namespace macias
