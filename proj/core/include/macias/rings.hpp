#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "macias/numbers.hpp"

namespace macias {

// The six supported coefficient structures.  They were picked to separate
// the hypotheses that matter downstream: two Euclidean PIDs (Z, Z[i]), the
// PID family F_p[x], a UFD that is not a PID (Z[x]), a Furstenberg domain
// that is neither a GCD domain nor a UFD (Z[w], w^2 = -5), and one ring
// with zero divisors (Z x Z).
enum class RingKind { Int, GaussInt, QuadM5, PolyFp, PolyZ, ProdIntInt };

struct RingDescriptor {
  RingKind kind = RingKind::Int;
  int modulus = 0;  // prime p; present iff kind == PolyFp, 2 <= p <= 97

  static RingDescriptor integers() { return {RingKind::Int, 0}; }
  static RingDescriptor gauss() { return {RingKind::GaussInt, 0}; }
  static RingDescriptor quad_m5() { return {RingKind::QuadM5, 0}; }
  static RingDescriptor poly_fp(int p);
  static RingDescriptor poly_z() { return {RingKind::PolyZ, 0}; }
  static RingDescriptor prod_int_int() { return {RingKind::ProdIntInt, 0}; }

  // Spec strings: Z, Zi, Zw5, Fp[x]:<p>, Z[x], ZxZ.
  static RingDescriptor parse(const std::string& spec);
  std::string to_string() const;

  bool operator==(const RingDescriptor&) const = default;

  bool is_domain() const { return kind != RingKind::ProdIntInt; }
  bool is_poly() const {
    return kind == RingKind::PolyFp || kind == RingKind::PolyZ;
  }
  bool is_pair() const {
    return kind == RingKind::GaussInt || kind == RingKind::QuadM5 ||
           kind == RingKind::ProdIntInt;
  }
  // Rings where the Euclidean extended gcd is available.
  bool is_euclidean() const {
    return kind == RingKind::Int || kind == RingKind::GaussInt ||
           kind == RingKind::PolyFp;
  }
  bool is_ufd() const {
    return kind == RingKind::Int || kind == RingKind::GaussInt ||
           kind == RingKind::PolyFp || kind == RingKind::PolyZ;
  }
};

struct PairPayload {
  Int a, b;  // a + b*i, a + b*w, or the coordinate pair (a, b)
  bool operator==(const PairPayload&) const = default;
};

// Coefficients low-to-high degree; canonical form has no trailing zeros and,
// for PolyFp, entries reduced into [0, p).
using PolyPayload = std::vector<Int>;

struct Element {
  RingDescriptor ring;
  std::variant<Int, PairPayload, PolyPayload> payload;
  bool operator==(const Element&) const = default;
};

// --- construction -----------------------------------------------------------

Element zero(const RingDescriptor& ring);
Element one(const RingDescriptor& ring);
// Image of the rational integer n under the canonical map into the ring
// (diagonal for Z x Z, constant polynomial for the polynomial rings).
Element from_int(const RingDescriptor& ring, const Int& n);
Element make_pair(const RingDescriptor& ring, Int a, Int b);
Element make_poly(const RingDescriptor& ring, PolyPayload coeffs);

// --- literals ---------------------------------------------------------------

// Grammar (ASCII, no whitespace): Int -?[0-9]+; GaussInt a, bi, a+bi, a-bi
// (w for QuadM5); polynomials are +/- joined terms c, x, cx, x^k, cx^k in any
// order (** accepted for ^); ProdIntInt (a,b).  PolyFp coefficients are
// reduced mod p, never rejected.
Element parse_element(const RingDescriptor& ring, const std::string& text);
std::string render_element(const Element& x);

// --- arithmetic -------------------------------------------------------------

Element neg(const Element& x);
Element add(const Element& x, const Element& y);
Element sub(const Element& x, const Element& y);
Element mul(const Element& x, const Element& y);

bool is_zero(const Element& x);
bool is_one(const Element& x);
bool is_unit(const Element& x);
Element unit_inverse(const Element& u);  // u must be a unit

// d | x, with 0 | x iff x = 0.  Z x Z is componentwise.
bool divides(const Element& d, const Element& x);
// Exact quotient x / d in the five domains (d != 0); nullopt if not exact.
std::optional<Element> divide_exact(const Element& x, const Element& d);

// Distinguished representative of the associate class, and the unit u with
// canonical = u * x: |x| over Z, first-quadrant rotation over Z[i], first
// nonzero coordinate positive over Z[w], monic over F_p[x], positive leading
// coefficient over Z[x], componentwise |.| over Z x Z.
Element canonical_associate(const Element& x);
std::pair<Element, Element> canonical_associate_with_unit(const Element& x);
std::vector<Element> units_of(const RingDescriptor& ring);

// --- enumeration ------------------------------------------------------------

// Height: |x| over Z; max(|a|, |b|) for the pair rings; the base-p encoding
// of the coefficient tuple over F_p[x]; max(deg, max |c_i|) over Z[x].
Int height(const Element& x);

struct Window {
  std::optional<Int> height;  // Int, GaussInt, QuadM5, PolyZ, ProdIntInt
  std::optional<int> degree;  // PolyFp, PolyZ

  static Window by_height(Int h) { return {std::move(h), std::nullopt}; }
  static Window by_degree(int d) { return {std::nullopt, d}; }
  static Window poly_z(int d, Int h) { return {std::move(h), d}; }
};

void validate_window(const RingDescriptor& ring, const Window& w);

enum class WindowFilter { all, nonzero, nonunit_nonzero };

// Total deterministic order: ascending height, ties broken lexicographically
// on the payload tuple.  enumerate_window lists exactly the window in this
// order, duplicate-free.
int compare_elements(const Element& x, const Element& y);
struct ElementLess {
  bool operator()(const Element& x, const Element& y) const {
    return compare_elements(x, y) < 0;
  }
};
std::vector<Element> enumerate_window(const RingDescriptor& ring,
                                      const Window& w,
                                      WindowFilter filter = WindowFilter::all);

// Scan order used by the theorem checks when reporting a canonical witness:
// ascending height, ties by |coefficient| with the nonnegative value first.
int compare_scan(const Element& x, const Element& y);

// --- polynomial views (PolyFp / PolyZ payloads) -----------------------------

int poly_degree(const Element& x);       // -1 for the zero polynomial
Int poly_coeff(const Element& x, int i); // 0 beyond the degree
Element poly_derivative(const Element& x);
Element poly_monomial(const RingDescriptor& ring, const Int& c, int k);

// Gauss / QuadM5 norm a^2 + b^2 resp. a^2 + 5 b^2.
Int pair_norm(const Element& x);
Element pair_conjugate(const Element& x);

void require_same_ring(const Element& x, const Element& y);

}  // namespace macias
