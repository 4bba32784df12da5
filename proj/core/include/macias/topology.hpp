#pragma once

#include "macias/comaximal.hpp"

namespace macias {

// The comaximality topology lives on the whole ring (0 included) or on the
// punctured set of nonzero elements; the punctured basis only indexes by
// nonzero elements.
enum class Space { with_zero, punctured };

// s in sigma_r, i.e. <r> + <s> = R.
bool sigma_membership(const Element& r, const Element& s,
                      Space space = Space::with_zero);

// sigma_r intersected with the window, canonical order.
std::vector<Element> sigma_window(const Element& r, const Window& w,
                                  Space space = Space::with_zero);

enum class ClosureMethod { exact_j, sandwich, oracle, auto_pick };
const char* method_name(ClosureMethod m);

struct ClosureResult {
  ClosureMethod method;              // the method actually used
  std::optional<Ideal> ideal_form;   // exact-j only
  std::vector<Element> lower, upper; // window traces, lower <= upper
  bool exact_on_window;              // lower == upper
};

// Upper bound for cl({x}) on the element window: keep y whenever every
// separator k in the separator window with y in sigma_k also has x in
// sigma_k.  Shrinks as the separator window grows; over Z it is exact once
// the separator height reaches |x| (every prime divisor of x separates).
std::vector<Element> closure_oracle(const Element& x, const Window& elem_w,
                                    const Window& sep_w);

// Closure of the singleton {x} on a window.  exact_j goes through the
// radical of <x> in Gilmer's sense; sandwich (Z[x]) brackets between the
// radical members and the oracle bound; oracle is available everywhere.
ClosureResult closure_singleton(const Element& x, const Window& w,
                                ClosureMethod method = ClosureMethod::auto_pick,
                                std::optional<Window> sep_w = std::nullopt);

// cl(I) for a proper ideal: intersection of the maximal ideals over I.
ClosureResult closure_of_ideal(const Ideal& I, const Window& w);

// cl({x}) = <x>?  Equivalent to x squarefree-or-unit in the PID rings.
bool is_closed_principal(const Element& x);

// --- density ---------------------------------------------------------------

struct DensityTarget {
  enum class Kind { non_units, ideal_trace, custom } kind;
  RingDescriptor ring;
  std::optional<Ideal> ideal;    // ideal_trace
  std::vector<Element> custom;   // custom finite set, canonical order

  static DensityTarget non_units(const RingDescriptor& r) {
    return {Kind::non_units, r, {}, {}};
  }
  static DensityTarget ideal_trace(Ideal I) {
    RingDescriptor r = I.ring;
    return {Kind::ideal_trace, r, std::move(I), {}};
  }
  static DensityTarget custom_set(std::vector<Element> v) {
    RingDescriptor r = v.front().ring;
    return {Kind::custom, r, {}, std::move(v)};
  }
};

enum class DensityProperty { dense, nowhere_dense };

struct DensityWitness {
  Element basic_open;               // the r of sigma_r
  std::optional<Element> witness;   // member found (or unit for nowhere-dense)
  std::string note;
};

struct DensityVerdict {
  DensityProperty property;
  bool holds;
  std::vector<DensityWitness> witnesses;
};

// Window-level density verdicts with explicit budgets; never a claim about
// the infinite space.  Dense mode scans every basic open sigma_r for r in
// the separator window and hunts for a target member inside it under a
// growing height budget (BudgetExceeded reports the unresolved open rather
// than guessing).  Nowhere-dense mode takes a proper ideal, computes its
// closure, and exhibits a unit witness in each sampled sigma_k outside it.
DensityVerdict density_check(DensityProperty property,
                             const DensityTarget& target, const Window& sep_w,
                             Space space = Space::punctured,
                             int budget_doublings = 6);

// --- arithmetic-progression structure of sigma_k over Z ---------------------

struct GolombResult {
  bool holds;                // membership depends only on s mod k
  Int modulus;
  std::vector<Int> residues; // the residue classes inside sigma_k
};

// Finite content of "sigma_k is open in the coprime-coset topology":
// sigma_k cut to the window is a union of full residue classes mod k.
GolombResult golomb_coset_invariant(const Element& k, const Window& w);

}  // namespace macias
