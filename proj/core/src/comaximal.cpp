#include "macias/comaximal.hpp"

#include <algorithm>

#include "macias/errors.hpp"
#include "macias/factor.hpp"
#include "macias/gcd.hpp"

namespace macias {

namespace {

// Fraction-free Bareiss determinant of a square mpz matrix.
Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Element lift_mod_vec(const RingDescriptor& ring, const PolyPayload& v) {
  return make_poly(ring, v);
}

// Monic lift of an irreducible factor of f mod p into Z[x], coefficients in
// [0, p), leading coefficient literally 1.
Element lift_monic(const RingDescriptor& ring, PolyPayload v) {
  if (!v.empty()) v.back() = 1;
  return make_poly(ring, std::move(v));
}

MaximalIdealDescriptor zx_prime(const Int& p, const PolyPayload& hbar) {
  const RingDescriptor ring = RingDescriptor::poly_z();
  return MaximalIdealDescriptor{ring, ZxPrimeDesc{p, lift_monic(ring, hbar)}};
}

// The canonical smallest maximal ideal of each ring, used to witness that
// <0, 0> is proper.
MaximalIdealDescriptor first_maximal(const RingDescriptor& ring) {
  switch (ring.kind) {
    case RingKind::Int: return {ring, IntPrimeDesc{Int(2)}};
    case RingKind::GaussInt:
      return {ring, GaussPrimeDesc{make_pair(ring, 1, 1)}};
    case RingKind::QuadM5:
      return {ring, QuadPrimeDesc{Int(2), SplitKind::ramified, Int(1)}};
    case RingKind::PolyFp:
      return {ring, PolyFpPrimeDesc{poly_monomial(ring, 1, 1)}};
    case RingKind::PolyZ:
      return zx_prime(Int(2), PolyPayload{Int(0), Int(1)});
    case RingKind::ProdIntInt:
      return {ring, ProdPrimeDesc{ProdSide::left, Int(2)}};
  }
  fail(errc::unsupported, "first_maximal");
}

// --- Z[x]: candidate primes, witnesses, and Bezout assembly ---------------

// Extended euclid over Q[x] with exact rationals; returns (u, v) with
// u f + v g = 1, deg u < deg g, deg v < deg f (f, g coprime over Q).
using QPoly = std::vector<mpq_class>;

QPoly qpoly(const Element& f) {
  QPoly out;
  for (const Int& c : std::get<PolyPayload>(f.payload)) out.emplace_back(c);
  return out;
}

void qstrip(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  qstrip(c);
  return c;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qstrip(a);
  return a;
}

void qdivmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (r.size() >= b.size() && !r.empty()) {
    mpq_class coef = r.back() / b.back();
    const std::size_t shift = r.size() - b.size();
    q[shift] = coef;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= coef * b[i];
    qstrip(r);
  }
  qstrip(q);
}

void qext_gcd_unit(const Element& f, const Element& g, QPoly& u, QPoly& v) {
  QPoly old_r = qpoly(f), r = qpoly(g);
  QPoly old_s = {mpq_class(1)}, s = {};
  QPoly old_t = {}, t = {mpq_class(1)};
  while (!r.empty()) {
    QPoly q, rem;
    qdivmod(old_r, r, q, rem);
    QPoly ns = qsub(old_s, qmul(q, s));
    QPoly nt = qsub(old_t, qmul(q, t));
    old_r = std::move(r);
    r = std::move(rem);
    old_s = std::move(s);
    s = std::move(ns);
    old_t = std::move(t);
    t = std::move(nt);
  }
  if (old_r.size() != 1)
    fail(errc::unsupported, "qext_gcd_unit: inputs share a factor");
  const mpq_class inv = 1 / old_r[0];
  u = old_s;
  v = old_t;
  for (auto& c : u) c *= inv;
  for (auto& c : v) c *= inv;
}

Element scale_to_int(const RingDescriptor& ring, const QPoly& q,
                     const Int& n) {
  PolyPayload out;
  for (const mpq_class& c : q) {
    mpq_class scaled = c * mpq_class(n);
    scaled.canonicalize();
    if (scaled.get_den() != 1)
      fail(errc::unsupported, "resultant cofactors failed to clear");
    out.push_back(scaled.get_num());
  }
  return make_poly(ring, std::move(out));
}

struct PolyzPrimeData {
  Int p;
  int k;               // p^k || n
  Element a, b;        // a f + b g = 1 (mod p), small integer lifts
};

// Builds Bezout cofactors for comaximal f, g in Z[x] from the resultant
// relation u0 f + v0 g = n and per-prime liftings.
BezoutCertificate polyz_bezout(const Element& f, const Element& g) {
  const RingDescriptor& ring = f.ring;
  const Int res = resultant(f, g);
  Int n = abs(res);
  QPoly uq, vq;
  qext_gcd_unit(f, g, uq, vq);
  Element u0 = scale_to_int(ring, uq, n);
  Element v0 = scale_to_int(ring, vq, n);
  // u0 f + v0 g = n with integer cofactors (Sylvester cofactor identity)
  if (n == 1) return {u0, v0};
  Element U = zero(ring), V = zero(ring);
  const Element one_p = one(ring);
  std::vector<std::pair<Int, int>> pks = factor_integer(n);
  for (auto& [p, k] : pks) {
    PolyPayload fb = poly_mod_p(f, p), gb = poly_mod_p(g, p);
    PolyPayload gc, A, B;
    ext_gcd_mod_p(fb, gb, p, gc, A, B);
    if (gc.size() != 1)
      fail(errc::unsupported, "polyz_bezout: obstruction prime slipped through");
    Element Ae = lift_mod_vec(ring, A), Be = lift_mod_vec(ring, B);
    // W = (A f + B g - 1) / p exactly
    Element rel = sub(add(mul(Ae, f), mul(Be, g)), one_p);
    Element W = *divide_exact(rel, from_int(ring, p));
    // S = sum_{j<k} (-p W)^j lifts the relation to 1 (mod p^k)
    Element S = one_p, T = one_p;
    const Element minus_pw = neg(mul(from_int(ring, p), W));
    for (int j = 1; j < k; ++j) {
      T = mul(T, minus_pw);
      S = add(S, T);
    }
    Element Ak = mul(Ae, S), Bk = mul(Be, S);
    Int pk = power(p, static_cast<unsigned long>(k));
    Int m = n / pk;
    Int minv;
    mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), pk.get_mpz_t());
    Element cp = from_int(ring, m * minv);
    U = add(U, mul(cp, Ak));
    V = add(V, mul(cp, Bk));
  }
  // E = U f + V g = 1 (mod n); subtract the resultant relation
  Element E = add(mul(U, f), mul(V, g));
  Element Q = *divide_exact(sub(E, one_p), from_int(ring, n));
  Element u = sub(U, mul(Q, u0));
  Element v = sub(V, mul(Q, v0));
  return {u, v};
}

ComaximalResult polyz_comaximal(const Element& f, const Element& g) {
  const RingDescriptor& ring = f.ring;
  if (poly_degree(f) == 0 && poly_degree(g) == 0) {
    // two integer constants
    Int gg, u, v;
    mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
               poly_coeff(f, 0).get_mpz_t(), poly_coeff(g, 0).get_mpz_t());
    if (gg == 1)
      return {true, BezoutCertificate{from_int(ring, u), from_int(ring, v)}};
    return {false, CommonMaximalCertificate{
                       zx_prime(some_prime_factor(gg), {Int(0), Int(1)})}};
  }
  const Int res = resultant(f, g);
  if (res == 0) {
    // common rational factor; any prime preserving its degree witnesses
    Element h = poly_gcd_rational(f, g);
    Int p = 2;
    while (mpz_divisible_p(poly_coeff(h, poly_degree(h)).get_mpz_t(),
                           p.get_mpz_t()))
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    PolyPayload hbar = poly_mod_p(h, p);
    PolyPayload q = factor_mod_p(hbar, p).front().first;
    return {false, CommonMaximalCertificate{zx_prime(p, q)}};
  }
  std::vector<Int> candidates = distinct_prime_factors(res);
  Int lcg;
  mpz_gcd(lcg.get_mpz_t(), poly_coeff(f, poly_degree(f)).get_mpz_t(),
          poly_coeff(g, poly_degree(g)).get_mpz_t());
  if (lcg > 1)
    for (const Int& p : distinct_prime_factors(lcg))
      candidates.push_back(p);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const Int& p : candidates) {
    PolyPayload fb = poly_mod_p(f, p), gb = poly_mod_p(g, p);
    if (fb.empty() && gb.empty())
      return {false,
              CommonMaximalCertificate{zx_prime(p, {Int(0), Int(1)})}};
    PolyPayload d = gcd_mod_p(fb, gb, p);
    if (d.size() >= 2) {
      PolyPayload q = factor_mod_p(d, p).front().first;
      return {false, CommonMaximalCertificate{zx_prime(p, q)}};
    }
  }
  return {true, polyz_bezout(f, g)};
}

}  // namespace

Int resultant(const Element& f, const Element& g) {
  if (f.ring.kind != RingKind::PolyZ)
    fail(errc::unsupported, "resultant is a Z[x] helper");
  const int m = poly_degree(f), n = poly_degree(g);
  if (m < 0 || n < 0) return 0;
  if (m == 0) return power(poly_coeff(f, 0), static_cast<unsigned long>(n));
  if (n == 0) return power(poly_coeff(g, 0), static_cast<unsigned long>(m));
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Int>> s(size, std::vector<Int>(size, Int(0)));
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
          poly_coeff(f, m - j);
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] =
          poly_coeff(g, n - j);
  return bareiss_det(std::move(s));
}

MaximalIdealDescriptor polyz_maximal_above(const Element& f) {
  if (is_zero(f) || is_unit(f))
    fail(errc::zero_input, "polyz_maximal_above needs a nonzero nonunit");
  const Int content = poly_content(f);
  if (content > 1) {
    const Int p = some_prime_factor(content);
    PolyPayload fbar = poly_mod_p(f, p);
    if (fbar.size() >= 2)
      return zx_prime(p, factor_mod_p(fbar, p).front().first);
    return zx_prime(p, PolyPayload{Int(0), Int(1)});
  }
  // primitive nonconstant: pick the first prime keeping the degree
  Int p = 2;
  while (mpz_divisible_p(poly_coeff(f, poly_degree(f)).get_mpz_t(),
                         p.get_mpz_t()))
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  PolyPayload fbar = poly_mod_p(f, p);
  return zx_prime(p, factor_mod_p(fbar, p).front().first);
}

ComaximalResult comaximal(const Element& a, const Element& b) {
  require_same_ring(a, b);
  const RingDescriptor& ring = a.ring;
  if (is_unit(a)) return {true, BezoutCertificate{unit_inverse(a), zero(ring)}};
  if (is_unit(b)) return {true, BezoutCertificate{zero(ring), unit_inverse(b)}};
  if (is_zero(a) && is_zero(b))
    return {false, CommonMaximalCertificate{first_maximal(ring)}};
  // <0, b> = <b> with b a nonunit: never the whole ring
  if ((is_zero(a) || is_zero(b)) && ring.kind != RingKind::QuadM5 &&
      ring.kind != RingKind::ProdIntInt) {
    const Element& nz = is_zero(a) ? b : a;
    if (ring.kind == RingKind::PolyZ)
      return {false, CommonMaximalCertificate{polyz_maximal_above(nz)}};
    return {false, CommonMaximalCertificate{
                       maximal_ideals_containing(nz).ideals.front()}};
  }
  switch (ring.kind) {
    case RingKind::Int:
    case RingKind::GaussInt:
    case RingKind::PolyFp: {
      ExtGcd eg = extended_gcd(a, b);
      if (is_one(eg.g)) return {true, BezoutCertificate{eg.u, eg.v}};
      return {false, CommonMaximalCertificate{
                         maximal_ideals_containing(eg.g).ideals.front()}};
    }
    case RingKind::QuadM5: {
      HnfMat m = hnf_of_elements(ring, {a, b});
      const Int index = hnf_index(m);
      if (index == 1) {
        auto uv = hnf_express_one(a, b);
        if (!uv) fail(errc::unsupported, "hnf_express_one failed at index 1");
        return {true, BezoutCertificate{uv->first, uv->second}};
      }
      return {false, HnfIndexCertificate{m, index}};
    }
    case RingKind::PolyZ:
      return polyz_comaximal(a, b);
    case RingKind::ProdIntInt: {
      const auto& pa = std::get<PairPayload>(a.payload);
      const auto& pb = std::get<PairPayload>(b.payload);
      auto coord = [](const Int& x, const Int& y, Int& u, Int& v) {
        Int gg;
        mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                   x.get_mpz_t(), y.get_mpz_t());
        return gg;
      };
      Int u1, v1, u2, v2;
      Int g1 = coord(pa.a, pb.a, u1, v1);
      Int g2 = coord(pa.b, pb.b, u2, v2);
      if (g1 == 1 && g2 == 1)
        return {true, BezoutCertificate{make_pair(ring, u1, u2),
                                        make_pair(ring, v1, v2)}};
      // pick the failing side's witness prime (gcd 0 means both coords 0)
      if (g1 != 1) {
        Int p = g1 == 0 ? Int(2) : some_prime_factor(g1);
        return {false, CommonMaximalCertificate{
                           {ring, ProdPrimeDesc{ProdSide::left, p}}}};
      }
      Int p = g2 == 0 ? Int(2) : some_prime_factor(g2);
      return {false, CommonMaximalCertificate{
                         {ring, ProdPrimeDesc{ProdSide::right, p}}}};
    }
  }
  fail(errc::unsupported, "comaximal");
}

bool verify_certificate(const Element& a, const Element& b,
                        const ComaximalResult& r) {
  if (const auto* bz = std::get_if<BezoutCertificate>(&r.certificate)) {
    if (!r.verdict) return false;
    return is_one(add(mul(bz->u, a), mul(bz->v, b)));
  }
  if (const auto* cm = std::get_if<CommonMaximalCertificate>(&r.certificate)) {
    if (r.verdict) return false;
    if (!(cm->m.ring == a.ring)) return false;
    const Ideal I = ideal_of(cm->m);
    return ideal_membership(I, a) && ideal_membership(I, b);
  }
  const auto& hc = std::get<HnfIndexCertificate>(r.certificate);
  if (r.verdict) return false;
  if (hc.index < 2 || hnf_index(hc.m) != hc.index) return false;
  if (is_zero(a) && is_zero(b)) return false;
  return hnf_of_elements(a.ring, {a, b}) == hc.m;
}

}  // namespace macias
