#include "macias/maximal.hpp"

#include <algorithm>

#include "macias/errors.hpp"
#include "macias/factor.hpp"
#include "macias/gcd.hpp"

namespace macias {

Ideal ideal_of(const MaximalIdealDescriptor& m) {
  const RingDescriptor& ring = m.ring;
  if (const auto* ip = std::get_if<IntPrimeDesc>(&m.name))
    return principal(from_int(ring, ip->p));
  if (const auto* gp = std::get_if<GaussPrimeDesc>(&m.name))
    return principal(gp->pi);
  if (const auto* qp = std::get_if<QuadPrimeDesc>(&m.name)) {
    switch (qp->kind) {
      case SplitKind::inert:
        return hnf_ideal(ring, HnfMat{qp->p, Int(0), qp->p});
      case SplitKind::ramified:
      case SplitKind::split_plus:
        // (p, a + w)
        return hnf_ideal(ring, HnfMat{qp->p, qp->a, Int(1)});
      case SplitKind::split_minus:
        // (p, w - a) = (p, (p - a) + w)
        return hnf_ideal(ring, HnfMat{qp->p, Int(qp->p - qp->a), Int(1)});
    }
  }
  if (const auto* fp = std::get_if<PolyFpPrimeDesc>(&m.name))
    return principal(fp->h);
  if (const auto* zx = std::get_if<ZxPrimeDesc>(&m.name))
    return two_gen(from_int(ring, zx->p), zx->h);
  const auto& pp = std::get<ProdPrimeDesc>(m.name);
  // p Z x Z is generated by (p, 1); Z x p Z by (1, p)
  if (pp.side == ProdSide::left) return principal(make_pair(ring, pp.p, 1));
  return principal(make_pair(ring, Int(1), pp.p));
}

std::string describe(const MaximalIdealDescriptor& m) {
  if (const auto* ip = std::get_if<IntPrimeDesc>(&m.name))
    return "(" + ip->p.get_str() + ")";
  if (const auto* gp = std::get_if<GaussPrimeDesc>(&m.name))
    return "(" + render_element(gp->pi) + ")";
  if (const auto* qp = std::get_if<QuadPrimeDesc>(&m.name)) {
    switch (qp->kind) {
      case SplitKind::inert: return "(" + qp->p.get_str() + ")";
      case SplitKind::ramified:
        if (qp->p == 5) return "(5,w)";
        return "(" + qp->p.get_str() + "," + qp->a.get_str() + "+1w)";
      case SplitKind::split_plus:
        return "(" + qp->p.get_str() + "," + qp->a.get_str() + "+1w)";
      case SplitKind::split_minus:
        return "(" + qp->p.get_str() + ",-" + qp->a.get_str() + "+1w)";
    }
  }
  if (const auto* fp = std::get_if<PolyFpPrimeDesc>(&m.name))
    return "(" + render_element(fp->h) + ")";
  if (const auto* zx = std::get_if<ZxPrimeDesc>(&m.name))
    return "(" + zx->p.get_str() + "," + render_element(zx->h) + ")";
  const auto& pp = std::get<ProdPrimeDesc>(m.name);
  if (pp.side == ProdSide::left) return "(" + pp.p.get_str() + ")xZ";
  return "Zx(" + pp.p.get_str() + ")";
}

int compare_descriptors(const MaximalIdealDescriptor& a,
                        const MaximalIdealDescriptor& b) {
  if (a.name.index() != b.name.index())
    return a.name.index() < b.name.index() ? -1 : 1;
  auto cmp_int3 = [](const Int& x, const Int& y) {
    return mpz_cmp(x.get_mpz_t(), y.get_mpz_t());
  };
  if (const auto* x = std::get_if<IntPrimeDesc>(&a.name))
    return cmp_int3(x->p, std::get<IntPrimeDesc>(b.name).p);
  if (const auto* x = std::get_if<GaussPrimeDesc>(&a.name))
    return compare_elements(x->pi, std::get<GaussPrimeDesc>(b.name).pi);
  if (const auto* x = std::get_if<QuadPrimeDesc>(&a.name)) {
    const auto& y = std::get<QuadPrimeDesc>(b.name);
    if (int c = cmp_int3(x->p, y.p)) return c;
    if (x->kind != y.kind)
      return static_cast<int>(x->kind) < static_cast<int>(y.kind) ? -1 : 1;
    return cmp_int3(x->a, y.a);
  }
  if (const auto* x = std::get_if<PolyFpPrimeDesc>(&a.name))
    return compare_elements(x->h, std::get<PolyFpPrimeDesc>(b.name).h);
  if (const auto* x = std::get_if<ZxPrimeDesc>(&a.name)) {
    const auto& y = std::get<ZxPrimeDesc>(b.name);
    if (int c = cmp_int3(x->p, y.p)) return c;
    return compare_elements(x->h, y.h);
  }
  const auto& x = std::get<ProdPrimeDesc>(a.name);
  const auto& y = std::get<ProdPrimeDesc>(b.name);
  if (x.side != y.side) return x.side == ProdSide::left ? -1 : 1;
  return cmp_int3(x.p, y.p);
}

std::vector<MaximalIdealDescriptor> dedekind_primes_above(const Int& p) {
  const RingDescriptor ring = RingDescriptor::quad_m5();
  std::vector<MaximalIdealDescriptor> out;
  if (p == 2) {
    out.push_back({ring, QuadPrimeDesc{p, SplitKind::ramified, Int(1)}});
    return out;
  }
  if (p == 5) {
    out.push_back({ring, QuadPrimeDesc{p, SplitKind::ramified, Int(0)}});
    return out;
  }
  const long pl = p.get_si();
  const long a = sqrt_minus5_mod(pl);
  if (a < 0) {
    out.push_back({ring, QuadPrimeDesc{p, SplitKind::inert, Int(0)}});
  } else {
    out.push_back({ring, QuadPrimeDesc{p, SplitKind::split_plus, Int(a)}});
    out.push_back({ring, QuadPrimeDesc{p, SplitKind::split_minus, Int(a)}});
  }
  return out;
}

MaximalIdealSet maximal_ideals_containing(const Element& x,
                                          std::optional<Int> prod_prime_bound) {
  const RingDescriptor& ring = x.ring;
  if (is_zero(x)) fail(errc::zero_input, "maximal_ideals_containing(0)");
  MaximalIdealSet out;
  out.prime_bound = prod_prime_bound;
  if (is_unit(x)) return out;  // units lie in no maximal ideal
  switch (ring.kind) {
    case RingKind::Int: {
      for (const Int& p : distinct_prime_factors(std::get<Int>(x.payload)))
        out.ideals.push_back({ring, IntPrimeDesc{p}});
      return out;
    }
    case RingKind::GaussInt: {
      for (const Element& pi : distinct_irreducible_factors(x))
        out.ideals.push_back({ring, GaussPrimeDesc{pi}});
      return out;
    }
    case RingKind::PolyFp: {
      for (const Element& h : distinct_irreducible_factors(x))
        out.ideals.push_back({ring, PolyFpPrimeDesc{h}});
      return out;
    }
    case RingKind::QuadM5: {
      for (const Int& p : distinct_prime_factors(pair_norm(x)))
        for (const MaximalIdealDescriptor& m : dedekind_primes_above(p))
          if (ideal_membership(ideal_of(m), x)) out.ideals.push_back(m);
      std::sort(out.ideals.begin(), out.ideals.end(), DescriptorLess{});
      return out;
    }
    case RingKind::PolyZ: {
      std::string why;
      if (poly_degree(x) <= 0) {
        why = "(" + poly_coeff(x, 0).get_str() +
              ",h) for every irreducible h mod each prime divisor";
      } else {
        why = "(p," + render_element(x) +
              "-style pairs over infinitely many primes p";
      }
      fail(errc::infinite_set,
           "maximal ideals over Z[x] form an infinite set: " + why);
    }
    case RingKind::ProdIntInt: {
      const auto& pp = std::get<PairPayload>(x.payload);
      auto side = [&](const Int& coord, ProdSide which, bool& all_marker) {
        if (coord == 0) {
          all_marker = true;
          if (!prod_prime_bound)
            fail(errc::infinite_set,
                 "a zero coordinate lies in the one-sided maximal ideal for "
                 "every prime; pass a prime bound for the enumeration");
          for (long p : primes_up_to(prod_prime_bound->get_si()))
            out.ideals.push_back({ring, ProdPrimeDesc{which, Int(p)}});
          return;
        }
        if (abs(coord) == 1) return;
        for (const Int& p : distinct_prime_factors(coord))
          out.ideals.push_back({ring, ProdPrimeDesc{which, p}});
      };
      side(pp.a, ProdSide::left, out.all_primes_left);
      side(pp.b, ProdSide::right, out.all_primes_right);
      return out;
    }
  }
  fail(errc::unsupported, "maximal_ideals_containing");
}

Ideal jacobson_radical_principal(const Element& x) {
  const RingDescriptor& ring = x.ring;
  if (is_unit(x)) return principal(one(ring));
  // J(R) is the zero ideal for every supported ring: Z, Z[i], Z[w], F_p[x]
  // and Z[x] are semiprimitive, and J(Z x Z) = J(Z) x J(Z) = 0 x 0.
  if (is_zero(x)) return principal(zero(ring));
  switch (ring.kind) {
    case RingKind::Int:
    case RingKind::GaussInt:
    case RingKind::PolyFp: {
      Element acc = one(ring);
      for (const Element& p : distinct_irreducible_factors(x))
        acc = mul(acc, p);
      return principal(canonical_associate(acc));
    }
    case RingKind::QuadM5: {
      MaximalIdealSet ms = maximal_ideals_containing(x);
      // distinct maximal ideals are pairwise comaximal, so the intersection
      // equals the product
      HnfMat acc{Int(1), Int(0), Int(1)};
      for (const MaximalIdealDescriptor& m : ms.ideals) {
        const auto& h = std::get<HnfIdeal>(ideal_of(m).rep);
        acc = hnf_mul(ring, acc, h.m);
      }
      return hnf_ideal(ring, acc);
    }
    case RingKind::ProdIntInt: {
      const auto& pp = std::get<PairPayload>(x.payload);
      auto coord_radical = [](const Int& c) -> Int {
        if (c == 0) return 0;
        if (abs(c) == 1) return 1;
        Int acc = 1;
        for (const Int& p : distinct_prime_factors(c)) acc *= p;
        return acc;
      };
      return principal(
          make_pair(ring, coord_radical(pp.a), coord_radical(pp.b)));
    }
    case RingKind::PolyZ:
      // forces the InfiniteSet error with the explanatory payload
      maximal_ideals_containing(x);
      fail(errc::infinite_set, "unreachable");
  }
  fail(errc::unsupported, "jacobson_radical_principal");
}

Ideal radical_principal(const Element& x) {
  if (is_zero(x)) fail(errc::zero_input, "radical_principal(0)");
  if (is_unit(x)) return principal(one(x.ring));
  if (!x.ring.is_ufd())
    fail(errc::unsupported,
         "radical via factorization needs a UFD, not " + x.ring.to_string());
  Element acc = one(x.ring);
  for (const Element& p : distinct_irreducible_factors(x)) acc = mul(acc, p);
  return principal(canonical_associate(acc));
}

}  // namespace macias
