#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "macias/rng.hpp"
#include "macias/topology.hpp"

namespace macias {

enum class Expectation { holds, fails_with_witness };
enum class Verdict { pass, fail, expected_fail };
const char* verdict_name(Verdict v);

struct Violation {
  std::vector<Element> inputs;
  std::string observed;
  std::string expected;
};

struct CheckReport {
  std::string id;
  RingDescriptor ring;
  long cases_run = 0;
  std::vector<Violation> violations;
  Verdict verdict = Verdict::pass;
  std::string diagnostic;
  std::uint64_t replay_seed = 0;
};

struct CheckSpec {
  std::string id;         // stable identifier
  std::string statement;  // the law being exercised
  std::vector<RingKind> rings;
  std::vector<RingKind> expected_fail_rings;  // predicted counterexamples

  Expectation expectation_for(RingKind k) const;
};

// The registered checks, stable order.
const std::vector<CheckSpec>& check_registry();

struct SuiteConfig {
  std::vector<RingDescriptor> rings;
  Int height = 12;
  int degree = 3;
  std::uint64_t seed = 0;
  long cases = 1000;
  std::vector<std::string> only_ids;  // empty = every registered check

  Window window_for(const RingDescriptor& ring) const;
};

// Deterministic for a fixed (seed, windows, case count); each report carries
// a replayable seed.  Check-internal errors become Fail verdicts with a
// diagnostic instead of aborting the run.
std::vector<CheckReport> run_suite(const SuiteConfig& cfg);

// --- hypothesis separation ---------------------------------------------------

struct Counterexample {
  Element a, b;
  ComaximalResult cert;
};

// Scans all window pairs for coprime-but-not-comaximal witnesses and, when
// found, returns the counterexample in canonical form: the canonical
// generating pair of the smallest witnessing obstruction (HNF ideal over
// Z[w], maximal ideal (p, h) over Z[x]) together with its verified
// certificate.  nullopt once the window is exhausted without a witness.
std::optional<Counterexample> find_coprime_not_comaximal(
    const RingDescriptor& ring, const Window& w);

// --- constructive infinitude -------------------------------------------------

// One extension step: s_t = 1 + t * prod(x_i) lies outside every known
// maximal ideal, so any maximal ideal over s_t is new.
MaximalIdealDescriptor extend_maximal_ideals(
    const RingDescriptor& ring,
    const std::vector<MaximalIdealDescriptor>& known);

// Same engine for irreducibles: an irreducible factor of 1 + t * prod(known)
// is comaximal with, hence non-associated to, every known irreducible.
Element extend_irreducibles(const RingDescriptor& ring,
                            const std::vector<Element>& known);

struct UnitsNotOpenRow {
  Element k;
  Element witness;  // nonunit inside sigma_k, of the form 1 + r k
};

// For each nonzero k in the window, a nonunit member of sigma_k: no basic
// open fits inside the unit group.
std::vector<UnitsNotOpenRow> units_not_open_evidence(const RingDescriptor& ring,
                                                     const Window& w);

// --- open-problem scans ------------------------------------------------------

struct ClosedPrincipalScan {
  std::vector<Element> closed;      // canonical x with cl({x}) = <x>
  std::vector<Element> not_closed;
};
ClosedPrincipalScan scan_closed_principals(const RingDescriptor& ring,
                                           const Window& w);

struct IrreducibleClosureScan {
  std::vector<Element> equal;      // irreducible p with cl({p}) = <p>
  std::vector<Element> not_equal;
};
IrreducibleClosureScan scan_irreducible_closures(const RingDescriptor& ring,
                                                 const Window& w);

}  // namespace macias
