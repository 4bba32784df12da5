#include "macias/gcd.hpp"

#include <algorithm>

#include "macias/errors.hpp"

namespace macias {

namespace {

// Nearest-integer rounding of n/d for d > 0, halves toward +infinity.
Int round_nearest(const Int& n, const Int& d) {
  Int q;
  Int num = 2 * n + d;
  Int den = 2 * d;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

std::pair<Element, Element> euclidean_divmod(const Element& a,
                                             const Element& b) {
  require_same_ring(a, b);
  if (is_zero(b)) fail(errc::zero_input, "euclidean_divmod by zero");
  switch (a.ring.kind) {
    case RingKind::Int: {
      Int q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(),
                  std::get<Int>(a.payload).get_mpz_t(),
                  std::get<Int>(b.payload).get_mpz_t());
      return {Element{a.ring, q}, Element{a.ring, r}};
    }
    case RingKind::GaussInt: {
      const Int n = pair_norm(b);
      const Element t = mul(a, pair_conjugate(b));
      const auto& tp = std::get<PairPayload>(t.payload);
      const Element q =
          make_pair(a.ring, round_nearest(tp.a, n), round_nearest(tp.b, n));
      return {q, sub(a, mul(q, b))};
    }
    case RingKind::PolyFp: {
      const auto& bb = std::get<PolyPayload>(b.payload);
      const int p = a.ring.modulus;
      const long lc_inv = inverse_mod(bb.back().get_si(), p);
      PolyPayload r = std::get<PolyPayload>(a.payload);
      PolyPayload q(r.size() >= bb.size() ? r.size() - bb.size() + 1 : 0,
                    Int(0));
      while (r.size() >= bb.size() && !r.empty()) {
        Int coef = (r.back() * lc_inv) % p;
        if (coef < 0) coef += p;
        const std::size_t shift = r.size() - bb.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < bb.size(); ++i) {
          Int v = (r[shift + i] - coef * bb[i]) % p;
          if (v < 0) v += p;
          r[shift + i] = v;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
      }
      return {make_poly(a.ring, std::move(q)), make_poly(a.ring, std::move(r))};
    }
    default:
      fail(errc::unsupported,
           "euclidean division unavailable on " + a.ring.to_string());
  }
}

ExtGcd extended_gcd(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (!a.ring.is_euclidean())
    fail(errc::unsupported,
         "extended_gcd unavailable on " + a.ring.to_string());
  if (is_zero(a) && is_zero(b))
    fail(errc::both_zero, "extended_gcd(0, 0)");
  Element old_r = a, r = b;
  Element old_s = one(a.ring), s = zero(a.ring);
  Element old_t = zero(a.ring), t = one(a.ring);
  while (!is_zero(r)) {
    auto [q, rem] = euclidean_divmod(old_r, r);
    Element ns = sub(old_s, mul(q, s));
    Element nt = sub(old_t, mul(q, t));
    old_r = r;
    r = rem;
    old_s = s;
    s = ns;
    old_t = t;
    t = nt;
  }
  auto [g, u] = canonical_associate_with_unit(old_r);
  return {g, mul(u, old_s), mul(u, old_t)};
}

Int poly_content(const Element& f) {
  Int c = 0;
  for (const auto& v : std::get<PolyPayload>(f.payload))
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
  return c;
}

Element poly_primitive_part(const Element& f) {
  if (is_zero(f)) return f;
  Int c = poly_content(f);
  if (std::get<PolyPayload>(f.payload).back() < 0) c = -c;
  PolyPayload out;
  for (const auto& v : std::get<PolyPayload>(f.payload)) {
    Int q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    out.push_back(q);
  }
  return make_poly(f.ring, std::move(out));
}

namespace {

// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, exact over Z.
Element pseudo_rem(const Element& f, const Element& g) {
  const auto& gg = std::get<PolyPayload>(g.payload);
  Element r = f;
  const Int lc = gg.back();
  while (!is_zero(r) &&
         std::get<PolyPayload>(r.payload).size() >= gg.size()) {
    const auto& rr = std::get<PolyPayload>(r.payload);
    const std::size_t shift = rr.size() - gg.size();
    const Int head = rr.back();
    PolyPayload next(rr.size(), Int(0));
    for (std::size_t i = 0; i < rr.size(); ++i) next[i] = rr[i] * lc;
    for (std::size_t i = 0; i < gg.size(); ++i) next[shift + i] -= head * gg[i];
    r = make_poly(f.ring, std::move(next));
  }
  return r;
}

}  // namespace

Element poly_gcd_rational(const Element& f_in, const Element& g_in) {
  // primitive PRS on the primitive parts
  Element f = poly_primitive_part(f_in);
  Element g = poly_primitive_part(g_in);
  if (is_zero(f)) return canonical_associate(g);
  if (is_zero(g)) return canonical_associate(f);
  if (poly_degree(f) < poly_degree(g)) std::swap(f, g);
  while (!is_zero(g)) {
    Element r = poly_primitive_part(pseudo_rem(f, g));
    f = g;
    g = r;
  }
  return canonical_associate(f);
}

std::vector<Element> common_divisors_quad(const Element& a, const Element& b) {
  const RingDescriptor& ring = a.ring;
  Int bound;
  mpz_gcd(bound.get_mpz_t(), pair_norm(a).get_mpz_t(),
          pair_norm(b).get_mpz_t());
  std::vector<Element> out;
  // divisors have norm dividing gcd(N(a), N(b)); enumerate norm candidates
  for (Int m = 1; m <= bound; ++m) {
    if (!mpz_divisible_p(bound.get_mpz_t(), m.get_mpz_t())) continue;
    for (Int v = 0; 5 * v * v <= m; ++v) {
      Int rest = m - 5 * v * v;
      Int u;
      if (mpz_perfect_square_p(rest.get_mpz_t())) {
        mpz_sqrt(u.get_mpz_t(), rest.get_mpz_t());
        std::vector<Element> cands;
        if (u == 0 && v == 0) continue;
        if (u == 0) {
          cands.push_back(make_pair(ring, 0, v));
        } else if (v == 0) {
          cands.push_back(make_pair(ring, u, 0));
        } else {
          cands.push_back(make_pair(ring, u, v));
          cands.push_back(make_pair(ring, u, -v));
        }
        for (const Element& d : cands)
          if (divides(d, a) && divides(d, b)) out.push_back(d);
      }
    }
  }
  std::sort(out.begin(), out.end(), ElementLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GcdResult gcd(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (is_zero(a) && is_zero(b)) fail(errc::both_zero, "gcd(0, 0)");
  switch (a.ring.kind) {
    case RingKind::Int:
    case RingKind::GaussInt:
    case RingKind::PolyFp:
      return extended_gcd(a, b).g;
    case RingKind::PolyZ: {
      if (is_zero(a)) return canonical_associate(b);
      if (is_zero(b)) return canonical_associate(a);
      Int c;
      mpz_gcd(c.get_mpz_t(), poly_content(a).get_mpz_t(),
              poly_content(b).get_mpz_t());
      Element prim = poly_gcd_rational(a, b);
      return canonical_associate(mul(from_int(a.ring, c), prim));
    }
    case RingKind::QuadM5: {
      if (is_zero(a)) return canonical_associate(b);
      if (is_zero(b)) return canonical_associate(a);
      std::vector<Element> cd = common_divisors_quad(a, b);
      // maximal under divisibility = minimal principal ideals over <a, b>
      std::vector<Element> maximal;
      for (const Element& d : cd) {
        bool dominated = false;
        for (const Element& e : cd) {
          if (e == d) continue;
          if (divides(d, e)) {
            dominated = true;
            break;
          }
        }
        if (!dominated) maximal.push_back(d);
      }
      if (maximal.size() == 1) return maximal.front();
      return NoGcdWitness{maximal[0], maximal[1]};
    }
    case RingKind::ProdIntInt: {
      const auto& pa = std::get<PairPayload>(a.payload);
      const auto& pb = std::get<PairPayload>(b.payload);
      Int ga, gb;
      mpz_gcd(ga.get_mpz_t(), pa.a.get_mpz_t(), pb.a.get_mpz_t());
      mpz_gcd(gb.get_mpz_t(), pa.b.get_mpz_t(), pb.b.get_mpz_t());
      return make_pair(a.ring, ga, gb);
    }
  }
  fail(errc::unsupported, "gcd");
}

Element gcd_or_throw(const Element& a, const Element& b) {
  GcdResult r = gcd(a, b);
  if (auto* e = std::get_if<Element>(&r)) return *e;
  fail(errc::unsupported, "gcd does not exist for these operands");
}

}  // namespace macias
