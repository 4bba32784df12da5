#include "macias/checks.hpp"

#include <algorithm>
#include <sstream>

#include "macias/errors.hpp"
#include "macias/factor.hpp"
#include "macias/gcd.hpp"

namespace macias {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "Pass";
    case Verdict::fail: return "Fail";
    case Verdict::expected_fail: return "ExpectedFail";
  }
  return "?";
}

Expectation CheckSpec::expectation_for(RingKind k) const {
  for (RingKind r : expected_fail_rings)
    if (r == k) return Expectation::fails_with_witness;
  return Expectation::holds;
}

Window SuiteConfig::window_for(const RingDescriptor& ring) const {
  switch (ring.kind) {
    case RingKind::Int:
    case RingKind::GaussInt:
    case RingKind::QuadM5:
    case RingKind::ProdIntInt: return Window::by_height(height);
    case RingKind::PolyFp: return Window::by_degree(degree);
    case RingKind::PolyZ: return Window::poly_z(degree, height);
  }
  return Window::by_height(height);
}

namespace {

std::string show(const Element& e) { return render_element(e); }

struct Ctx {
  RingDescriptor ring;
  Window window;
  long cases;
  SplitRng rng;
  CheckReport* report;
  std::vector<Element> pool;          // full window, canonical order
  std::vector<Element> nonunit_pool;  // nonzero nonunits

  const Element& any() {
    ++report->cases_run;
    return rng.pick(pool);
  }
  const Element& nonunit() {
    ++report->cases_run;
    return rng.pick(nonunit_pool);
  }
  void violation(std::vector<Element> inputs, std::string observed,
                 std::string expected) {
    if (report->violations.size() < 16)
      report->violations.push_back(
          {std::move(inputs), std::move(observed), std::move(expected)});
  }
};

std::vector<Element> scan_sorted(std::vector<Element> v) {
  std::sort(v.begin(), v.end(), [](const Element& a, const Element& b) {
    return compare_scan(a, b) < 0;
  });
  return v;
}

// Pair-ring windows in the suite are kept small enough that the exhaustive
// checks stay O(seconds); the acceptance harness raises the bounds where the
// criteria demand it.
long pool_cap(const Ctx& c, long want) {
  return std::min<long>(want, static_cast<long>(c.pool.size()));
}

// --- individual checks -----------------------------------------------------

void check_product_law(Ctx& c) {
  const bool exhaustive = c.ring.kind == RingKind::Int &&
                          c.pool.size() <= 81;  // height <= 40
  auto probe = [&](const Element& r, const Element& s, const Element& k) {
    const bool lhs = comaximal(mul(r, s), k).verdict;
    const bool rhs = comaximal(r, k).verdict && comaximal(s, k).verdict;
    if (lhs != rhs)
      c.violation({r, s, k},
                  std::string("sigma_(rs) membership ") + (lhs ? "yes" : "no"),
                  std::string("sigma_r and sigma_s agree ") +
                      (rhs ? "yes" : "no"));
  };
  if (exhaustive) {
    for (const Element& r : c.pool)
      for (const Element& s : c.pool)
        for (const Element& k : c.pool) {
          ++c.report->cases_run;
          probe(r, s, k);
        }
  } else {
    for (long i = 0; i < c.cases; ++i) {
      const Element r = c.any(), s = c.any(), k = c.any();
      probe(r, s, k);
    }
  }
}

void check_sigma_unit_full(Ctx& c) {
  for (long i = 0; i < c.cases; ++i) {
    const Element u = c.any();
    if (is_unit(u)) {
      for (const Element& s : c.pool)
        if (!comaximal(u, s).verdict)
          c.violation({u, s}, "nonmember of sigma_u", "sigma_u = window");
    } else {
      // u itself witnesses sigma_u != window (unless u = 0, where any
      // nonunit nonzero element is missing)
      const Element& w = is_zero(u) ? c.nonunit_pool.front() : u;
      if (comaximal(u, w).verdict)
        c.violation({u, w}, "sigma_u contains its own nonunit index",
                    "nonunits never comaximal with themselves");
    }
  }
}

void check_units_everywhere(Ctx& c) {
  const std::vector<Element> units = units_of(c.ring);
  for (long i = 0; i < c.cases; ++i) {
    const Element r = c.any();
    for (const Element& u : units)
      if (!comaximal(r, u).verdict)
        c.violation({r, u}, "unit outside sigma_r", "units in every sigma_r");
  }
}

void check_zero_membership(Ctx& c) {
  const Element z = zero(c.ring);
  for (long i = 0; i < c.cases; ++i) {
    const Element k = c.any();
    const bool member = comaximal(k, z).verdict;
    if (member != is_unit(k))
      c.violation({k}, member ? "0 in sigma_k" : "0 outside sigma_k",
                  "0 in sigma_k iff k is a unit");
  }
}

void check_self_membership(Ctx& c) {
  for (long i = 0; i < c.cases; ++i) {
    const Element k = c.any();
    const bool member = comaximal(k, k).verdict;
    if (member != is_unit(k))
      c.violation({k}, member ? "k in sigma_k" : "k outside sigma_k",
                  "k in sigma_k iff k is a unit");
  }
}

void check_one_plus_rk(Ctx& c) {
  for (long i = 0; i < c.cases; ++i) {
    const Element r = c.any();
    Element k = c.any();
    if (is_zero(k)) k = c.nonunit_pool.front();
    const Element s = add(one(c.ring), mul(r, k));
    if (!comaximal(k, s).verdict)
      c.violation({r, k}, "1 + r k outside sigma_k", "1 + r k in sigma_k");
  }
}

void check_associate_closures(Ctx& c) {
  const std::vector<Element> units = units_of(c.ring);
  const long n = std::min<long>(c.cases, 200);
  for (long i = 0; i < n; ++i) {
    const Element x = c.any();
    if (is_zero(x)) continue;
    Ideal jx = jacobson_radical_principal(x);
    for (const Element& u : units) {
      Ideal ju = jacobson_radical_principal(mul(u, x));
      if (!ideal_equal(jx, ju))
        c.violation({x, u}, "cl({u x}) differs from cl({x})",
                    "associates share closures");
    }
  }
}

void check_closed_iff_ideal_closed(Ctx& c) {
  const long n = std::min<long>(c.cases, 200);
  for (long i = 0; i < n; ++i) {
    const Element x = c.nonunit();
    const bool closed = is_closed_principal(x);
    // independent route on the UFDs: closed iff squarefree
    if (c.ring.is_ufd() && c.ring.kind != RingKind::PolyZ) {
      bool squarefree = true;
      for (auto& [p, e] : factor(x).parts)
        if (e > 1) squarefree = false;
      if (closed != squarefree)
        c.violation({x}, closed ? "closure is <x>" : "closure exceeds <x>",
                    squarefree ? "squarefree, expect closed"
                               : "not squarefree, expect not closed");
    } else {
      // window route: closure trace equals the <x> trace iff closed
      ClosureResult cl = closure_singleton(x, c.window);
      std::vector<Element> xs;
      for (const Element& y : c.pool)
        if (divides(x, y)) xs.push_back(y);
      const bool trace_equal = cl.lower == xs;
      if (closed && !trace_equal)
        c.violation({x}, "closure trace exceeds <x> on the window",
                    "closed principal ideal");
      // !closed with equal traces is possible on narrow windows; skip
    }
  }
}

void check_sandwich(Ctx& c) {
  const long n = std::min<long>(c.cases, 100);
  for (long i = 0; i < n; ++i) {
    const Element x = c.nonunit();
    ClosureResult cl = closure_singleton(x, c.window);
    for (const Element& y : c.pool) {
      const bool in_ideal = divides(x, y);
      const bool in_trace =
          std::binary_search(cl.lower.begin(), cl.lower.end(), y, ElementLess{});
      if (in_ideal && !in_trace)
        c.violation({x, y}, "<x> member outside the closure trace",
                    "<x> inside cl({x})");
      if (in_trace && comaximal(x, y).verdict)
        c.violation({x, y}, "closure member inside sigma_x",
                    "cl({x}) inside complement of sigma_x");
    }
  }
}

void check_ultraconnected(Ctx& c) {
  for (long i = 0; i < std::min<long>(c.cases, 500); ++i) {
    const Element x = c.nonunit(), y = c.nonunit();
    const Element xy = mul(x, y);
    if (c.ring.kind == RingKind::PolyZ) {
      if (!divides(x, xy) || !divides(y, xy))
        c.violation({x, y}, "xy escapes <x> or <y>", "xy in both closures");
      continue;
    }
    if (!ideal_membership(jacobson_radical_principal(x), xy) ||
        !ideal_membership(jacobson_radical_principal(y), xy))
      c.violation({x, y}, "xy outside cl({x}) or cl({y})",
                  "xy in cl({x}) and cl({y})");
  }
}

void check_product_closure(Ctx& c) {
  if (c.ring.kind == RingKind::ProdIntInt) {
    // The worked counterexample with zero divisors: the punctured closures
    // of (2,0) and (0,3) are disjoint, yet (2,0)*(0,3) = (0,0) closes to
    // {(0,0)}.
    const Element x = make_pair(c.ring, 2, 0), y = make_pair(c.ring, 0, 3);
    const Element xy = mul(x, y);
    const Window w = Window::by_height(10);
    ClosureResult cx = closure_singleton(x, w), cy = closure_singleton(y, w);
    ClosureResult cxy = closure_singleton(xy, w);
    std::vector<Element> inter;
    for (const Element& e : cx.lower) {
      if (is_zero(e)) continue;  // punctured comparison
      if (std::binary_search(cy.lower.begin(), cy.lower.end(), e,
                             ElementLess{}))
        inter.push_back(e);
    }
    ++c.report->cases_run;
    if (inter.empty() && !cxy.lower.empty()) {
      c.violation({x, y},
                  "punctured cl({x}) and cl({y}) have empty intersection",
                  "cl({xy}) = {(0,0)} is nonempty");
    }
    return;
  }
  const long n = std::min<long>(c.cases, 150);
  for (long i = 0; i < n; ++i) {
    const Element x = c.nonunit(), y = c.nonunit();
    const Element xy = mul(x, y);
    Ideal jx = jacobson_radical_principal(x);
    Ideal jy = jacobson_radical_principal(y);
    Ideal jxy = jacobson_radical_principal(xy);
    for (const Element& e : c.pool) {
      const bool lhs = ideal_membership(jxy, e);
      const bool rhs = ideal_membership(jx, e) && ideal_membership(jy, e);
      if (lhs != rhs)
        c.violation({x, y, e}, lhs ? "in cl({xy}) only" : "in both closures only",
                    "cl({xy}) = cl({x}) intersect cl({y})");
    }
  }
}

void check_exactj_vs_oracle(Ctx& c) {
  // Z only: the oracle with separator height |x| reproduces the exact trace.
  const long n = std::min<long>(c.cases, 12);
  const Window elem_w = Window::by_height(Int(200));
  for (long i = 0; i < n; ++i) {
    const long xv = c.rng.range(2, 50);
    const Element x = from_int(c.ring, xv);
    ++c.report->cases_run;
    ClosureResult exact = closure_singleton(x, elem_w, ClosureMethod::exact_j);
    std::vector<Element> upper =
        closure_oracle(x, elem_w, Window::by_height(Int(xv)));
    if (exact.lower != upper)
      c.violation({x}, "oracle bound differs from the exact trace",
                  "oracle exact at separator height |x|");
  }
}

void check_radical_inside_closure(Ctx& c) {
  const long n = std::min<long>(c.cases, 200);
  for (long i = 0; i < n; ++i) {
    const Element x = c.nonunit();
    Ideal rad = radical_principal(x);
    Ideal j = jacobson_radical_principal(x);
    const Element& rg = std::get<PrincipalIdeal>(rad.rep).g;
    if (!ideal_membership(j, rg))
      c.violation({x}, "radical generator escapes the closure",
                  "sqrt(<x>) inside cl({x})");
    if (!ideal_equal(rad, j))
      c.violation({x}, "radical and closure differ",
                  "PID rings: sqrt(<x>) = cl({x})");
  }
}

void check_prime_closure(Ctx& c) {
  // primes have cl({p}) = <p>
  long done = 0;
  for (const Element& x : c.nonunit_pool) {
    if (done >= std::min<long>(c.cases, 100)) break;
    bool prime = false;
    if (c.ring.kind == RingKind::QuadM5) {
      const Int n = pair_norm(x);
      if (is_probable_prime(n)) {
        prime = true;
      } else if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        prime = is_probable_prime(r) && r != 2 && r != 5 &&
                sqrt_minus5_mod(r.get_si()) < 0 &&
                canonical_associate(x) == from_int(c.ring, r);
      }
    } else {
      prime = is_irreducible(x);
    }
    if (!prime) continue;
    ++done;
    ++c.report->cases_run;
    if (!ideal_equal(jacobson_radical_principal(x), principal(x)))
      c.violation({x}, "cl({p}) differs from <p>", "primes close to <p>");
  }
}

void check_irred_ideal_closed(Ctx& c) {
  const bool expect_fail = c.ring.kind == RingKind::PolyZ;
  std::vector<Element> elems = scan_sorted(c.pool);
  std::vector<Element> irreducibles;
  for (const Element& x : elems) {
    if (is_zero(x) || is_unit(x)) continue;
    if (!(canonical_associate(x) == x)) continue;
    if (is_irreducible(x)) irreducibles.push_back(x);
  }
  for (const Element& p : irreducibles) {
    for (const Element& s : elems) {
      ++c.report->cases_run;
      const bool not_comax = !comaximal(p, s).verdict;
      const bool in_ideal = divides(p, s);
      if (not_comax != in_ideal) {
        c.violation({p, s},
                    not_comax ? "s outside sigma_p yet outside <p>"
                              : "s in <p> yet comaximal with p",
                    "window minus sigma_p equals the <p> trace");
        if (expect_fail) return;  // the first witness is the counterexample
      }
    }
  }
}

void check_coprime_converse(Ctx& c) {
  ++c.report->cases_run;
  std::optional<Counterexample> found;
  Window w = c.window;
  if (c.ring.kind == RingKind::QuadM5) w = Window::by_height(Int(3));
  if (c.ring.kind == RingKind::PolyZ) w = Window::poly_z(1, Int(2));
  if (c.ring.kind == RingKind::Int)
    w = Window::by_height(c.window.height && *c.window.height > 60
                              ? *c.window.height
                              : Int(60));
  found = find_coprime_not_comaximal(c.ring, w);
  const bool pid_like = c.ring.is_euclidean();
  if (pid_like && found)
    c.violation({found->a, found->b},
                "coprime pair that is not comaximal in a PID",
                "coprimality implies comaximality here");
  if (!pid_like && !found)
    c.violation({}, "no coprime non-comaximal pair in the window",
                "the classical counterexample appears at these bounds");
  if (found && !verify_certificate(found->a, found->b, found->cert))
    c.violation({found->a, found->b}, "certificate failed re-verification",
                "sound certificate");
}

void check_nowhere_dense_union(Ctx& c) {
  // finitely many proper-ideal traces never swallow a basic open: the unit
  // 1 sits in every sigma_k and in none of the ideals
  std::vector<Ideal> ideals;
  std::vector<Element> gens;
  for (const Element& x : c.nonunit_pool) {
    if (gens.size() >= 4) break;
    if (canonical_associate(x) == x) {
      gens.push_back(x);
      ideals.push_back(principal(x));
    }
  }
  const Element u = one(c.ring);
  for (long i = 0; i < std::min<long>(c.cases, 300); ++i) {
    Element k = c.any();
    if (is_zero(k)) continue;
    bool covered = false;
    for (const Ideal& I : ideals)
      if (ideal_membership(I, u)) covered = true;
    if (covered || !comaximal(k, u).verdict)
      c.violation({k}, "unit swallowed by the nowhere dense union",
                  "unit stays outside every proper ideal");
  }
}

void check_units_not_open(Ctx& c) {
  Window w = c.window;
  if (c.ring.kind == RingKind::Int || c.ring.is_pair())
    w = Window::by_height(std::min(Int(8), *c.window.height));
  auto rows = units_not_open_evidence(c.ring, w);
  c.report->cases_run += static_cast<long>(rows.size());
  for (const auto& row : rows) {
    if (is_unit(row.witness) || !comaximal(row.k, row.witness).verdict)
      c.violation({row.k, row.witness}, "witness not a nonunit of sigma_k",
                  "nonunit witness inside sigma_k");
  }
}

void check_extension_maximal(Ctx& c) {
  std::vector<MaximalIdealDescriptor> known;
  switch (c.ring.kind) {
    case RingKind::Int: known.push_back({c.ring, IntPrimeDesc{Int(2)}}); break;
    case RingKind::GaussInt:
      known.push_back({c.ring, GaussPrimeDesc{make_pair(c.ring, 1, 1)}});
      break;
    case RingKind::PolyFp:
      known.push_back({c.ring, PolyFpPrimeDesc{poly_monomial(c.ring, 1, 1)}});
      break;
    case RingKind::QuadM5:
      known.push_back(
          {c.ring, QuadPrimeDesc{Int(2), SplitKind::ramified, Int(1)}});
      break;
    default: return;
  }
  for (int step = 0; step < 5; ++step) {
    ++c.report->cases_run;
    MaximalIdealDescriptor next = extend_maximal_ideals(c.ring, known);
    for (const auto& k : known)
      if (compare_descriptors(k, next) == 0)
        c.violation({}, "extension repeated " + describe(next),
                    "fresh maximal ideal each step");
    known.push_back(next);
  }
}

void check_extension_irreducible(Ctx& c) {
  std::vector<Element> known;
  switch (c.ring.kind) {
    case RingKind::Int: known.push_back(from_int(c.ring, 2)); break;
    case RingKind::GaussInt: known.push_back(make_pair(c.ring, 1, 1)); break;
    case RingKind::PolyFp:
    case RingKind::PolyZ:
      known.push_back(poly_monomial(c.ring, 1, 1));
      break;
    default: return;
  }
  for (int step = 0; step < 5; ++step) {
    ++c.report->cases_run;
    Element next = extend_irreducibles(c.ring, known);
    if (!is_irreducible(next))
      c.violation({next}, "extension produced a reducible element",
                  "irreducible output");
    for (const Element& k : known)
      if (canonical_associate(k) == next)
        c.violation({next}, "extension repeated an associate",
                    "pairwise non-associated outputs");
    known.push_back(next);
  }
}

struct CheckDef {
  CheckSpec spec;
  std::function<void(Ctx&)> run;
};

const std::vector<CheckDef>& check_defs() {
  using K = RingKind;
  static const std::vector<CheckDef> defs = {
      {{"T2.1-1", "sigma(r s) = sigma(r) intersect sigma(s)",
        {K::Int, K::GaussInt, K::QuadM5, K::PolyFp, K::PolyZ, K::ProdIntInt},
        {}},
       check_product_law},
      {{"T2.1-2", "sigma_u is the whole window iff u is a unit",
        {K::Int, K::GaussInt, K::QuadM5, K::PolyFp, K::PolyZ, K::ProdIntInt},
        {}},
       check_sigma_unit_full},
      {{"T2.1-3", "units lie in every sigma_r",
        {K::Int, K::GaussInt, K::QuadM5, K::PolyFp, K::PolyZ, K::ProdIntInt},
        {}},
       check_units_everywhere},
      {{"T2.1-4", "0 lies in sigma_k iff k is a unit",
        {K::Int, K::GaussInt, K::QuadM5, K::PolyFp, K::PolyZ, K::ProdIntInt},
        {}},
       check_zero_membership},
      {{"T2.1-6", "associates have equal singleton closures",
        {K::Int, K::GaussInt, K::QuadM5, K::PolyFp, K::ProdIntInt}, {}},
       check_associate_closures},
      {{"Lem3.3", "k lies in sigma_k iff k is a unit",
        {K::Int, K::GaussInt, K::QuadM5, K::PolyFp, K::PolyZ, K::ProdIntInt},
        {}},
       check_self_membership},
      {{"T3.2", "cl({x}) = <x> iff <x> is closed",
        {K::Int, K::GaussInt, K::QuadM5, K::PolyFp, K::ProdIntInt}, {}},
       check_closed_iff_ideal_closed},
      {{"T3.4", "<x> inside cl({x}) inside the complement of sigma_x",
        {K::Int, K::GaussInt, K::QuadM5, K::PolyFp, K::ProdIntInt}, {}},
       check_sandwich},
      {{"T3.6", "xy lies in cl({x}) and cl({y})",
        {K::Int, K::GaussInt, K::QuadM5, K::PolyFp, K::PolyZ, K::ProdIntInt},
        {}},
       check_ultraconnected},
      {{"Cor3.5", "cl({xy}) = cl({x}) intersect cl({y})",
        {K::Int, K::GaussInt, K::QuadM5, K::PolyFp, K::ProdIntInt},
        {K::ProdIntInt}},
       check_product_closure},
      {{"P3.7", "exact closure matches the oracle at separator height |x|",
        {K::Int}, {}},
       check_exactj_vs_oracle},
      {{"CorRad", "sqrt(<x>) sits inside cl({x}), with equality in PIDs",
        {K::Int, K::GaussInt, K::PolyFp}, {}},
       check_radical_inside_closure},
      {{"CorPrime", "cl({p}) = <p> for prime p",
        {K::Int, K::GaussInt, K::PolyFp, K::QuadM5}, {}},
       check_prime_closure},
      {{"IrredIdealClosed",
        "window minus sigma_p equals the <p> trace for irreducible p",
        {K::Int, K::GaussInt, K::PolyFp, K::PolyZ}, {K::PolyZ}},
       check_irred_ideal_closed},
      {{"T3.9-converse",
        "coprime non-comaximal pairs exist off the PID rings only",
        {K::Int, K::GaussInt, K::PolyFp, K::QuadM5, K::PolyZ}, {}},
       check_coprime_converse},
      {{"T4.4-inj", "1 + r k lies in sigma_k for every r and nonzero k",
        {K::Int, K::GaussInt, K::QuadM5, K::PolyFp, K::PolyZ, K::ProdIntInt},
        {}},
       check_one_plus_rk},
      {{"UnitsNotOpen", "every sigma_k owns a nonunit 1 + r k",
        {K::Int, K::GaussInt, K::QuadM5, K::PolyFp, K::PolyZ}, {}},
       check_units_not_open},
      {{"L4.6", "finitely many ideal traces never cover a basic open",
        {K::Int, K::GaussInt, K::PolyFp}, {}},
       check_nowhere_dense_union},
      {{"P4.1", "maximal-ideal extension yields fresh ideals",
        {K::Int, K::GaussInt, K::PolyFp, K::QuadM5}, {}},
       check_extension_maximal},
      {{"P4.2", "irreducible extension yields non-associated irreducibles",
        {K::Int, K::GaussInt, K::PolyFp, K::PolyZ}, {}},
       check_extension_irreducible},
  };
  return defs;
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> specs = [] {
    std::vector<CheckSpec> out;
    for (const CheckDef& d : check_defs()) out.push_back(d.spec);
    return out;
  }();
  return specs;
}

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
  std::vector<CheckReport> reports;
  for (const CheckDef& def : check_defs()) {
    if (!cfg.only_ids.empty() &&
        std::find(cfg.only_ids.begin(), cfg.only_ids.end(), def.spec.id) ==
            cfg.only_ids.end())
      continue;
    for (const RingDescriptor& ring : cfg.rings) {
      if (std::find(def.spec.rings.begin(), def.spec.rings.end(), ring.kind) ==
          def.spec.rings.end())
        continue;
      CheckReport report;
      report.id = def.spec.id;
      report.ring = ring;
      const std::string label = def.spec.id + "|" + ring.to_string();
      SplitRng rng = SplitRng::derive(cfg.seed, label);
      report.replay_seed = cfg.seed;
      Ctx ctx{ring,
              cfg.window_for(ring),
              cfg.cases,
              rng,
              &report,
              {},
              {}};
      try {
        ctx.pool = enumerate_window(ring, ctx.window, WindowFilter::all);
        ctx.nonunit_pool =
            enumerate_window(ring, ctx.window, WindowFilter::nonunit_nonzero);
        def.run(ctx);
        const Expectation exp = def.spec.expectation_for(ring.kind);
        if (report.violations.empty()) {
          report.verdict =
              exp == Expectation::holds ? Verdict::pass : Verdict::fail;
          if (report.verdict == Verdict::fail)
            report.diagnostic = "expected a counterexample, none found";
        } else {
          report.verdict = exp == Expectation::fails_with_witness
                               ? Verdict::expected_fail
                               : Verdict::fail;
        }
      } catch (const error& e) {
        report.verdict = Verdict::fail;
        report.diagnostic =
            std::string(errc_name(e.code())) + ": " + e.what();
      }
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

std::optional<Counterexample> find_coprime_not_comaximal(
    const RingDescriptor& ring, const Window& w) {
  if (ring.kind == RingKind::ProdIntInt)
    fail(errc::unsupported, "gcd search needs a domain");
  std::vector<Element> elems;
  for (const Element& x :
       enumerate_window(ring, w, WindowFilter::nonunit_nonzero))
    if (canonical_associate(x) == x) elems.push_back(x);
  struct Best {
    Certificate cert;
    bool present = false;
  } best;
  auto cert_rank = [](const Certificate& c) {
    return c.index();  // Bezout never appears here
  };
  auto cert_less = [&](const Certificate& a, const Certificate& b) {
    if (cert_rank(a) != cert_rank(b)) return cert_rank(a) < cert_rank(b);
    if (const auto* ha = std::get_if<HnfIndexCertificate>(&a)) {
      const auto& hb = std::get<HnfIndexCertificate>(b);
      if (ha->index != hb.index) return ha->index < hb.index;
      if (ha->m.d != hb.m.d) return ha->m.d < hb.m.d;
      if (ha->m.c != hb.m.c) return ha->m.c < hb.m.c;
      return ha->m.e < hb.m.e;
    }
    const auto& ca = std::get<CommonMaximalCertificate>(a);
    const auto& cb = std::get<CommonMaximalCertificate>(b);
    return compare_descriptors(ca.m, cb.m) < 0;
  };
  for (const Element& a : elems) {
    for (const Element& b : elems) {
      GcdResult g = gcd(a, b);
      const Element* ge = std::get_if<Element>(&g);
      if (!ge || !is_unit(*ge)) continue;  // not coprime (or no gcd at all)
      ComaximalResult r = comaximal(a, b);
      if (r.verdict) continue;
      if (!best.present || cert_less(r.certificate, best.cert)) {
        best.cert = r.certificate;
        best.present = true;
      }
    }
  }
  if (!best.present) return std::nullopt;
  // canonical generating pair of the minimal obstruction
  Element ca = zero(ring), cb = zero(ring);
  if (const auto* h = std::get_if<HnfIndexCertificate>(&best.cert)) {
    auto [g1, g2] = hnf_generators(ring, h->m);
    ca = g1;
    cb = g2;
  } else {
    const auto& cm = std::get<CommonMaximalCertificate>(best.cert);
    const auto& zx = std::get<ZxPrimeDesc>(cm.m.name);
    ca = from_int(ring, zx.p);
    cb = zx.h;
  }
  ComaximalResult cert = comaximal(ca, cb);
  if (cert.verdict || !verify_certificate(ca, cb, cert))
    fail(errc::unsupported, "obstruction pair failed to certify");
  GcdResult g = gcd(ca, cb);
  const Element* ge = std::get_if<Element>(&g);
  if (!ge || !is_unit(*ge))
    fail(errc::unsupported, "obstruction pair is not coprime");
  return Counterexample{ca, cb, cert};
}

namespace {

Element descriptor_member(const MaximalIdealDescriptor& m) {
  // a canonical nonzero element of the ideal
  if (const auto* ip = std::get_if<IntPrimeDesc>(&m.name))
    return from_int(m.ring, ip->p);
  if (const auto* gp = std::get_if<GaussPrimeDesc>(&m.name)) return gp->pi;
  if (const auto* qp = std::get_if<QuadPrimeDesc>(&m.name))
    return from_int(m.ring, qp->p);
  if (const auto* fp = std::get_if<PolyFpPrimeDesc>(&m.name)) return fp->h;
  fail(errc::unsupported, "descriptor_member");
}

}  // namespace

MaximalIdealDescriptor extend_maximal_ideals(
    const RingDescriptor& ring,
    const std::vector<MaximalIdealDescriptor>& known) {
  if (ring.kind != RingKind::Int && ring.kind != RingKind::GaussInt &&
      ring.kind != RingKind::PolyFp && ring.kind != RingKind::QuadM5)
    fail(errc::unsupported,
         "maximal-ideal extension unavailable on " + ring.to_string());
  if (known.empty()) fail(errc::empty_known_set, "extension needs a seed ideal");
  Element prod = one(ring);
  for (const MaximalIdealDescriptor& m : known) {
    if (!(m.ring == ring)) fail(errc::ring_mismatch, "descriptor ring");
    prod = mul(prod, descriptor_member(m));
  }
  Element s = zero(ring);
  bool found = false;
  for (long t = 1; t <= 64; ++t) {
    s = add(one(ring), mul(from_int(ring, t), prod));
    if (!is_zero(s) && !is_unit(s)) {
      found = true;
      break;
    }
  }
  if (!found)
    fail(errc::budget_exceeded, "no nonunit 1 + t * prod within 64 steps");
  // s = 1 (mod m) for every known m, so any maximal ideal over s is new
  switch (ring.kind) {
    case RingKind::Int: {
      const Int p = some_prime_factor(std::get<Int>(s.payload));
      return {ring, IntPrimeDesc{p}};
    }
    case RingKind::GaussInt: {
      const Int q = some_prime_factor(pair_norm(s));
      for (const Element& pi : gauss_primes_above(q))
        if (divides(pi, s)) return {ring, GaussPrimeDesc{pi}};
      fail(errc::unsupported, "no Gauss prime above the norm divisor");
    }
    case RingKind::PolyFp:
      return {ring, PolyFpPrimeDesc{factor(s).parts.front().first}};
    case RingKind::QuadM5: {
      const Int q = some_prime_factor(pair_norm(s));
      for (const MaximalIdealDescriptor& d : dedekind_primes_above(q))
        if (ideal_membership(ideal_of(d), s)) return d;
      fail(errc::unsupported, "no prime above the norm divisor contains s");
    }
    default: fail(errc::unsupported, "extend_maximal_ideals");
  }
}

Element extend_irreducibles(const RingDescriptor& ring,
                            const std::vector<Element>& known) {
  if (!ring.is_ufd())
    fail(errc::unsupported,
         "irreducible extension needs factorization support on " +
             ring.to_string());
  if (known.empty()) fail(errc::empty_known_set, "extension needs a seed");
  for (std::size_t i = 0; i < known.size(); ++i) {
    if (!is_irreducible(known[i]))
      fail(errc::not_irreducible, "seed element " + show(known[i]));
    for (std::size_t j = i + 1; j < known.size(); ++j)
      if (canonical_associate(known[i]) == canonical_associate(known[j]))
        fail(errc::not_irreducible,
             "seed elements " + show(known[i]) + ", " + show(known[j]) +
                 " are associates");
  }
  Element prod = one(ring);
  for (const Element& k : known) prod = mul(prod, k);
  for (long t = 1; t <= 64; ++t) {
    Element s = add(one(ring), mul(from_int(ring, t), prod));
    if (is_zero(s) || is_unit(s)) continue;
    return canonical_associate(some_irreducible_factor(s));
  }
  fail(errc::budget_exceeded, "no nonunit 1 + t * prod within 64 steps");
}

std::vector<UnitsNotOpenRow> units_not_open_evidence(
    const RingDescriptor& ring, const Window& w) {
  std::vector<UnitsNotOpenRow> rows;
  Window probe = w;
  if (ring.kind == RingKind::PolyFp) probe = Window::by_degree(1);
  if (ring.kind == RingKind::PolyZ) probe = Window::poly_z(1, Int(2));
  if (ring.is_pair() || ring.kind == RingKind::Int)
    probe = Window::by_height(Int(3));
  std::vector<Element> multipliers =
      enumerate_window(ring, probe, WindowFilter::nonzero);
  for (const Element& k : enumerate_window(ring, w, WindowFilter::nonzero)) {
    bool found = false;
    for (const Element& r : multipliers) {
      Element s = add(one(ring), mul(r, k));
      if (is_zero(s) || is_unit(s)) continue;
      if (!comaximal(k, s).verdict)
        fail(errc::budget_exceeded, "1 + r k escaped sigma_k");
      rows.push_back({k, s});
      found = true;
      break;
    }
    if (!found)
      fail(errc::budget_exceeded,
           "no nonunit 1 + r k found for k = " + show(k));
  }
  return rows;
}

ClosedPrincipalScan scan_closed_principals(const RingDescriptor& ring,
                                           const Window& w) {
  ClosedPrincipalScan out;
  for (const Element& x :
       enumerate_window(ring, w, WindowFilter::nonunit_nonzero)) {
    if (!(canonical_associate(x) == x)) continue;
    if (is_closed_principal(x))
      out.closed.push_back(x);
    else
      out.not_closed.push_back(x);
  }
  return out;
}

IrreducibleClosureScan scan_irreducible_closures(const RingDescriptor& ring,
                                                 const Window& w) {
  IrreducibleClosureScan out;
  for (const Element& x :
       enumerate_window(ring, w, WindowFilter::nonunit_nonzero)) {
    if (!(canonical_associate(x) == x)) continue;
    if (!is_irreducible(x)) continue;
    if (ideal_equal(jacobson_radical_principal(x), principal(x)))
      out.equal.push_back(x);
    else
      out.not_equal.push_back(x);
  }
  return out;
}

}  // namespace macias
