#pragma once

#include <variant>

#include "macias/maximal.hpp"

namespace macias {

// Machine-checkable evidence for a comaximality verdict.
struct BezoutCertificate {
  Element u, v;  // u*a + v*b = 1
  bool operator==(const BezoutCertificate&) const = default;
};
struct CommonMaximalCertificate {
  MaximalIdealDescriptor m;  // a and b both lie in m
  bool operator==(const CommonMaximalCertificate&) const = default;
};
struct HnfIndexCertificate {
  HnfMat m;  // HNF of <a, b>, index >= 2
  Int index;
  bool operator==(const HnfIndexCertificate&) const = default;
};
using Certificate =
    std::variant<BezoutCertificate, CommonMaximalCertificate,
                 HnfIndexCertificate>;

struct ComaximalResult {
  bool verdict;
  Certificate certificate;
};

// <a> + <b> = R?  Decided by extended gcd over Z / Z[i] / F_p[x], by the
// HNF index over Z[w], by the resultant candidate-prime procedure over Z[x],
// and componentwise over Z x Z.  Every verdict carries its certificate.
ComaximalResult comaximal(const Element& a, const Element& b);

// Re-derive the certificate's claim from scratch: Bezout pairs recombine to
// 1, common maximal ideals contain both inputs, HNF certificates reproduce
// under recomputation.
bool verify_certificate(const Element& a, const Element& b,
                        const ComaximalResult& r);

// Resultant of two Z[x] polynomials (Sylvester determinant, fraction-free).
Int resultant(const Element& f, const Element& g);

// Some maximal ideal of Z[x] containing the nonzero nonunit f.
MaximalIdealDescriptor polyz_maximal_above(const Element& f);

}  // namespace macias
