#include "macias/factor.hpp"

#include <algorithm>
#include <map>

#include "macias/errors.hpp"
#include "macias/gcd.hpp"

namespace macias {

// ---------------------------------------------------------------------------
// F_p[x] arithmetic on raw coefficient vectors (any word-size prime p).
// ---------------------------------------------------------------------------

namespace {

void strip(PolyPayload& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyPayload reduce_vec(PolyPayload f, const Int& p) {
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  }
  strip(f);
  return f;
}

PolyPayload mul_mod(const PolyPayload& a, const PolyPayload& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  PolyPayload c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return reduce_vec(std::move(c), p);
}

Int inv_mod(const Int& a, const Int& p) {
  Int out;
  if (!mpz_invert(out.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
    fail(errc::zero_input, "inv_mod: not invertible");
  return out;
}

void divmod_mod(const PolyPayload& a, const PolyPayload& b, const Int& p,
                PolyPayload& q, PolyPayload& r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
  const Int lci = inv_mod(b.back(), p);
  while (r.size() >= b.size() && !r.empty()) {
    Int coef = (r.back() * lci) % p;
    const std::size_t shift = r.size() - b.size();
    q[shift] = coef;
    for (std::size_t i = 0; i < b.size(); ++i) {
      r[shift + i] -= coef * b[i];
      mpz_fdiv_r(r[shift + i].get_mpz_t(), r[shift + i].get_mpz_t(),
                 p.get_mpz_t());
    }
    strip(r);
  }
  strip(q);
}

PolyPayload monic_mod(PolyPayload f, const Int& p) {
  if (f.empty()) return f;
  const Int lci = inv_mod(f.back(), p);
  for (auto& c : f) c = (c * lci) % p;
  return f;
}

PolyPayload powmod_mod(const PolyPayload& base, const Int& e,
                       const PolyPayload& f, const Int& p) {
  PolyPayload acc = {Int(1)};
  PolyPayload b = base;
  PolyPayload q, r;
  divmod_mod(b, f, p, q, r);
  b = r;
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1;
       bit >= 0; --bit) {
    acc = mul_mod(acc, acc, p);
    divmod_mod(acc, f, p, q, r);
    acc = r;
    if (mpz_tstbit(e.get_mpz_t(), static_cast<unsigned long>(bit))) {
      acc = mul_mod(acc, b, p);
      divmod_mod(acc, f, p, q, r);
      acc = r;
    }
  }
  return acc;
}

PolyPayload deriv_mod(const PolyPayload& f, const Int& p) {
  PolyPayload d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back((f[i] * static_cast<long>(i)) % p);
  strip(d);
  return d;
}

int cmp_vec(const PolyPayload& a, const PolyPayload& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    int c = mpz_cmp(a[i].get_mpz_t(), b[i].get_mpz_t());
    if (c) return c;
  }
  return 0;
}

// Squarefree decomposition in characteristic p.
void sff_mod(const PolyPayload& f_in, const Int& p, int mult,
             std::map<PolyPayload, int, bool (*)(const PolyPayload&, const PolyPayload&)>& out);

bool vec_less(const PolyPayload& a, const PolyPayload& b) {
  return cmp_vec(a, b) < 0;
}

PolyPayload pth_root_mod(const PolyPayload& f, const Int& p) {
  // coefficients live in the prime field, so c^(1/p) = c
  PolyPayload g;
  const unsigned long pl = p.get_ui();
  for (std::size_t i = 0; i < f.size(); i += pl) g.push_back(f[i]);
  strip(g);
  return g;
}

void sff_mod(const PolyPayload& f_in, const Int& p, int mult,
             std::map<PolyPayload, int, bool (*)(const PolyPayload&, const PolyPayload&)>& out) {
  PolyPayload f = monic_mod(f_in, p);
  if (f.size() <= 1) return;
  PolyPayload fp = deriv_mod(f, p);
  if (fp.empty()) {
    sff_mod(pth_root_mod(f, p), p, mult * static_cast<int>(p.get_ui()), out);
    return;
  }
  PolyPayload c = monic_mod(gcd_mod_p(f, fp, p), p);
  PolyPayload w, q, r;
  divmod_mod(f, c, p, w, r);
  int i = 1;
  while (w.size() > 1) {
    PolyPayload y = gcd_mod_p(w, c, p);
    PolyPayload z;
    divmod_mod(w, y, p, z, r);
    if (z.size() > 1) out[monic_mod(z, p)] += mult * i;
    w = y;
    divmod_mod(c, y, p, c, r);
    ++i;
  }
  if (c.size() > 1) sff_mod(pth_root_mod(c, p), p, mult * static_cast<int>(p.get_ui()), out);
}

// Berlekamp splitting of a monic squarefree polynomial.
std::vector<PolyPayload> berlekamp(const PolyPayload& f, const Int& p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  // rows of Q: x^(p*i) mod f
  PolyPayload xp = powmod_mod({Int(0), Int(1)}, p, f, p);
  std::vector<PolyPayload> rows(static_cast<std::size_t>(n));
  rows[0] = {Int(1)};
  for (int i = 1; i < n; ++i) {
    rows[static_cast<std::size_t>(i)] =
        mul_mod(rows[static_cast<std::size_t>(i - 1)], xp, p);
    PolyPayload q, r;
    divmod_mod(rows[static_cast<std::size_t>(i)], f, p, q, r);
    rows[static_cast<std::size_t>(i)] = r;
  }
  // B = (Q - I)^T; right null space gives the Berlekamp subalgebra
  std::vector<std::vector<Int>> B(static_cast<std::size_t>(n),
                                  std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      Int v = j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)] : Int(0);
      if (i == j) v -= 1;
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
      B[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  }
  // Gaussian elimination, tracking free columns.
  std::vector<int> pivot_of_col(static_cast<std::size_t>(n), -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int sel = -1;
    for (int row = rank; row < n; ++row)
      if (B[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    std::swap(B[static_cast<std::size_t>(sel)], B[static_cast<std::size_t>(rank)]);
    const Int inv = inv_mod(B[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)], p);
    for (int j = 0; j < n; ++j)
      B[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] =
          (B[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] * inv) % p;
    for (int row = 0; row < n; ++row) {
      if (row == rank) continue;
      const Int fmul = B[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      if (fmul == 0) continue;
      for (int j = 0; j < n; ++j) {
        Int v = B[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -
                fmul * B[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        B[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] = v;
      }
    }
    pivot_of_col[static_cast<std::size_t>(col)] = rank;
    ++rank;
  }
  const int nullity = n - rank;
  std::vector<PolyPayload> basis;
  for (int col = 0; col < n; ++col) {
    if (pivot_of_col[static_cast<std::size_t>(col)] >= 0) continue;
    std::vector<Int> v(static_cast<std::size_t>(n), Int(0));
    v[static_cast<std::size_t>(col)] = 1;
    for (int c2 = 0; c2 < n; ++c2) {
      const int piv = pivot_of_col[static_cast<std::size_t>(c2)];
      if (piv < 0) continue;
      Int val = -B[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)];
      mpz_fdiv_r(val.get_mpz_t(), val.get_mpz_t(), p.get_mpz_t());
      v[static_cast<std::size_t>(c2)] = val;
    }
    PolyPayload g(v.begin(), v.end());
    strip(g);
    if (g.size() > 1) basis.push_back(std::move(g));  // skip the constants
  }
  std::vector<PolyPayload> factors = {f};
  const std::size_t target = static_cast<std::size_t>(nullity);
  const bool small_p = p <= 3000;
  for (const PolyPayload& g : basis) {
    if (factors.size() >= target) break;
    std::vector<PolyPayload> next;
    for (PolyPayload& h : factors) {
      if (h.size() <= 2 || factors.size() + next.size() >= target + 1) {
        next.push_back(std::move(h));
        continue;
      }
      std::vector<PolyPayload> pieces = {h};
      if (small_p) {
        for (Int c = 0; c < p; ++c) {
          PolyPayload gc = g;
          if (gc.empty()) gc.push_back(Int(0));
          gc[0] = gc[0] - c;
          mpz_fdiv_r(gc[0].get_mpz_t(), gc[0].get_mpz_t(), p.get_mpz_t());
          strip(gc);
          std::vector<PolyPayload> split;
          for (PolyPayload& piece : pieces) {
            if (piece.size() <= 2) {
              split.push_back(std::move(piece));
              continue;
            }
            PolyPayload d = monic_mod(gcd_mod_p(piece, gc, p), p);
            if (d.size() > 1 && d.size() < piece.size()) {
              PolyPayload q, r;
              divmod_mod(piece, d, p, q, r);
              split.push_back(monic_mod(q, p));
              split.push_back(d);
            } else {
              split.push_back(std::move(piece));
            }
          }
          pieces = std::move(split);
        }
      } else {
        // large p: split with (g + a)^((p-1)/2) - 1, a scanned deterministically
        const Int e = (p - 1) / 2;
        for (long a = 0; a < 512; ++a) {
          std::vector<PolyPayload> split;
          bool progressed = false;
          for (PolyPayload& piece : pieces) {
            if (piece.size() <= 2) {
              split.push_back(std::move(piece));
              continue;
            }
            PolyPayload ga = g;
            if (ga.empty()) ga.push_back(Int(0));
            ga[0] = (ga[0] + a) % p;
            PolyPayload pw = powmod_mod(ga, e, piece, p);
            if (pw.empty())
              pw.push_back(Int(p - 1));
            else
              pw[0] = (pw[0] - 1 + p) % p;
            strip(pw);
            PolyPayload d = pw.empty() ? PolyPayload{} : monic_mod(gcd_mod_p(piece, pw, p), p);
            if (d.size() > 1 && d.size() < piece.size()) {
              PolyPayload q, r;
              divmod_mod(piece, d, p, q, r);
              split.push_back(monic_mod(q, p));
              split.push_back(d);
              progressed = true;
            } else {
              split.push_back(std::move(piece));
            }
          }
          pieces = std::move(split);
          bool done = true;
          for (auto& piece : pieces)
            if (piece.size() > 2) done = false;
          if (done || (progressed && pieces.size() >= 2)) break;
        }
      }
      for (auto& piece : pieces) next.push_back(std::move(piece));
    }
    factors = std::move(next);
  }
  std::sort(factors.begin(), factors.end(), vec_less);
  return factors;
}

}  // namespace

PolyPayload poly_mod_p(const Element& f, const Int& p) {
  return reduce_vec(std::get<PolyPayload>(f.payload), p);
}

PolyPayload gcd_mod_p(PolyPayload a, PolyPayload b, const Int& p) {
  a = reduce_vec(std::move(a), p);
  b = reduce_vec(std::move(b), p);
  while (!b.empty()) {
    PolyPayload q, r;
    divmod_mod(a, b, p, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic_mod(std::move(a), p);
}

void ext_gcd_mod_p(const PolyPayload& a_in, const PolyPayload& b_in,
                   const Int& p, PolyPayload& g, PolyPayload& u,
                   PolyPayload& v) {
  PolyPayload old_r = reduce_vec(a_in, p), r = reduce_vec(b_in, p);
  PolyPayload old_s = {Int(1)}, s = {};
  PolyPayload old_t = {}, t = {Int(1)};
  auto submul = [&](const PolyPayload& x, const PolyPayload& q,
                    const PolyPayload& y) {
    PolyPayload qy = mul_mod(q, y, p);
    PolyPayload out(std::max(x.size(), qy.size()), Int(0));
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
    for (std::size_t i = 0; i < qy.size(); ++i) out[i] -= qy[i];
    return reduce_vec(std::move(out), p);
  };
  while (!r.empty()) {
    PolyPayload q, rem;
    divmod_mod(old_r, r, p, q, rem);
    PolyPayload ns = submul(old_s, q, s);
    PolyPayload nt = submul(old_t, q, t);
    old_r = std::move(r);
    r = std::move(rem);
    old_s = std::move(s);
    s = std::move(ns);
    old_t = std::move(t);
    t = std::move(nt);
  }
  if (old_r.empty()) {
    g = {};
    u = {};
    v = {};
    return;
  }
  const Int lci = inv_mod(old_r.back(), p);
  auto scale = [&](PolyPayload x) {
    for (auto& c : x) c = (c * lci) % p;
    strip(x);
    return x;
  };
  g = scale(old_r);
  u = scale(old_s);
  v = scale(old_t);
}

std::vector<std::pair<PolyPayload, int>> factor_mod_p(const PolyPayload& f_in,
                                                      const Int& p) {
  PolyPayload f = reduce_vec(f_in, p);
  if (f.size() <= 1) fail(errc::unit_or_zero, "factor_mod_p of a constant");
  f = monic_mod(std::move(f), p);
  std::map<PolyPayload, int, bool (*)(const PolyPayload&, const PolyPayload&)>
      acc(vec_less);
  // powers of x split off cheaply
  std::size_t k = 0;
  while (k < f.size() && f[k] == 0) ++k;
  if (k > 0) {
    acc[PolyPayload{Int(0), Int(1)}] += static_cast<int>(k);
    f.erase(f.begin(), f.begin() + static_cast<long>(k));
  }
  if (f.size() > 1) {
    std::map<PolyPayload, int, bool (*)(const PolyPayload&, const PolyPayload&)>
        sff(vec_less);
    sff_mod(f, p, 1, sff);
    for (auto& [part, mult] : sff)
      for (const PolyPayload& irr : berlekamp(part, p)) acc[irr] += mult;
  }
  return {acc.begin(), acc.end()};
}

// ---------------------------------------------------------------------------
// Gaussian integers.
// ---------------------------------------------------------------------------

std::vector<Element> gauss_primes_above(const Int& p) {
  const RingDescriptor ring = RingDescriptor::gauss();
  if (p == 2) return {make_pair(ring, 1, 1)};
  if (p % 4 == 3) return {make_pair(ring, p, 0)};
  // p = 1 (mod 4): c^2 = -1 via a quadratic non-residue
  Int c = 0;
  const Int e = (p - 1) / 4;
  for (Int q = 2;; ++q) {
    Int t;
    mpz_powm(t.get_mpz_t(), q.get_mpz_t(), Int((p - 1) / 2).get_mpz_t(),
             p.get_mpz_t());
    if (t == p - 1) {
      mpz_powm(c.get_mpz_t(), q.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
      break;
    }
  }
  const Element pi =
      extended_gcd(from_int(ring, p), make_pair(ring, c, 1)).g;
  const Element pib = canonical_associate(pair_conjugate(pi));
  std::vector<Element> out = {pi, pib};
  std::sort(out.begin(), out.end(), ElementLess{});
  return out;
}

// ---------------------------------------------------------------------------
// Z[x] factorization: content, rational roots, then Kronecker interpolation
// for the higher-degree squarefree leftovers (desk-scale inputs only).
// ---------------------------------------------------------------------------

namespace {

Int eval_scaled(const Element& f, const Int& num, const Int& den) {
  // f(num/den) * den^deg, exact
  const auto& c = std::get<PolyPayload>(f.payload);
  Int acc = 0;
  Int npow = 1;
  std::vector<Int> dpows(c.size());
  Int d = 1;
  for (std::size_t i = c.size(); i-- > 0;) {
    dpows[i] = d;
    d *= den;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    acc += c[i] * npow * dpows[i];
    npow *= num;
  }
  return acc;
}

Int eval_at(const Element& f, const Int& t) {
  const auto& c = std::get<PolyPayload>(f.payload);
  Int acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
  return acc;
}

std::vector<Int> signed_divisors(const Int& n) {
  // by |d| ascending, positive first
  std::vector<Int> mags;
  Int an = abs(n);
  for (Int d = 1; d * d <= an; ++d) {
    if (mpz_divisible_p(an.get_mpz_t(), d.get_mpz_t())) {
      mags.push_back(d);
      Int other = an / d;
      if (other != d) mags.push_back(other);
    }
  }
  std::sort(mags.begin(), mags.end());
  std::vector<Int> out;
  for (const Int& d : mags) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

std::vector<Element> factor_squarefree_primitive(const Element& h);

// h: squarefree, primitive, positive lc, no rational roots, deg >= 2.
std::vector<Element> kronecker(const Element& h) {
  const int deg = poly_degree(h);
  for (int m = 2; m <= deg / 2; ++m) {
    std::vector<Int> points;
    for (long t = 0; static_cast<int>(points.size()) < m + 1; ++t) {
      points.push_back(Int(t));
      if (t > 0 && static_cast<int>(points.size()) < m + 1)
        points.push_back(Int(-t));
    }
    std::vector<std::vector<Int>> divs;
    double combos = 1;
    for (const Int& pt : points) {
      divs.push_back(signed_divisors(eval_at(h, pt)));
      combos *= static_cast<double>(divs.back().size());
    }
    combos /= 2;  // first divisor restricted to positive values
    if (combos > 3e6)
      fail(errc::unsupported,
           "polynomial factor search exceeds the desk-scale budget");
    std::vector<std::size_t> idx(points.size(), 0);
    const RingDescriptor ring = h.ring;
    for (;;) {
      // interpolate through (points[i], divs[i][idx[i]]) with exact rationals
      std::vector<mpq_class> coef(points.size(), mpq_class(0));
      bool ok = true;
      for (std::size_t i = 0; i < points.size() && ok; ++i) {
        // Lagrange basis polynomial for point i, accumulated into coef
        std::vector<mpq_class> basis = {mpq_class(1)};
        mpq_class denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
          if (j == i) continue;
          basis.resize(basis.size() + 1, mpq_class(0));
          for (std::size_t k2 = basis.size() - 1; k2 > 0; --k2)
            basis[k2] = basis[k2 - 1] - mpq_class(points[j]) * basis[k2];
          basis[0] = -mpq_class(points[j]) * basis[0];
          denom *= mpq_class(points[i]) - mpq_class(points[j]);
        }
        const mpq_class scale = mpq_class(divs[i][idx[i]]) / denom;
        for (std::size_t k2 = 0; k2 < basis.size(); ++k2)
          coef[k2] += basis[k2] * scale;
      }
      PolyPayload cand;
      for (auto& q : coef) {
        q.canonicalize();
        if (q.get_den() != 1) {
          ok = false;
          break;
        }
        cand.push_back(q.get_num());
      }
      if (ok) {
        while (!cand.empty() && cand.back() == 0) cand.pop_back();
        if (cand.size() >= 2) {  // degree >= 1
          Element q = make_poly(ring, cand);
          q = canonical_associate(q);
          if (!is_unit(q) && poly_degree(q) < deg) {
            if (auto quot = divide_exact(h, q)) {
              std::vector<Element> out = factor_squarefree_primitive(q);
              std::vector<Element> rest =
                  factor_squarefree_primitive(canonical_associate(*quot));
              out.insert(out.end(), rest.begin(), rest.end());
              return out;
            }
          }
        }
      }
      // advance the mixed-radix combination counter
      std::size_t pos = 0;
      for (; pos < idx.size(); ++pos) {
        ++idx[pos];
        const std::size_t lim =
            pos + 1 == idx.size() ? divs[pos].size() / 2 : divs[pos].size();
        if (idx[pos] < lim) break;
        idx[pos] = 0;
      }
      if (pos == idx.size()) break;
    }
  }
  return {h};
}

std::vector<Element> factor_squarefree_primitive(const Element& h_in) {
  Element h = h_in;
  std::vector<Element> out;
  if (poly_degree(h) <= 0) return out;
  const RingDescriptor ring = h.ring;
  // root at 0
  if (poly_coeff(h, 0) == 0) {
    out.push_back(poly_monomial(ring, 1, 1));
    h = *divide_exact(h, poly_monomial(ring, 1, 1));
  }
  // rational roots p/q: p | constant, q | leading
  bool again = true;
  while (again && poly_degree(h) >= 1) {
    again = false;
    const Int a0 = poly_coeff(h, 0), lc = poly_coeff(h, poly_degree(h));
    if (poly_degree(h) == 1) {
      out.push_back(canonical_associate(h));
      return out;
    }
    for (const Int& num : signed_divisors(a0)) {
      for (const Int& den : signed_divisors(lc)) {
        if (den < 0) continue;
        Int g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (g != 1) continue;
        if (eval_scaled(h, num, den) == 0) {
          Element lin = make_poly(ring, {-num, den});
          out.push_back(canonical_associate(lin));
          h = *divide_exact(h, lin);
          again = true;
          break;
        }
      }
      if (again) break;
    }
  }
  if (poly_degree(h) >= 2) {
    std::vector<Element> rest = kronecker(canonical_associate(h));
    out.insert(out.end(), rest.begin(), rest.end());
  } else if (poly_degree(h) == 1) {
    out.push_back(canonical_associate(h));
  }
  return out;
}

std::vector<std::pair<Element, int>> factor_primitive_polyz(const Element& f) {
  // f primitive, positive lc, deg >= 1
  const Element fp = poly_derivative(f);
  Element g = poly_gcd_rational(f, fp);
  Element w = poly_degree(g) == 0 ? f : *divide_exact(f, g);
  // w is the squarefree radical of f; recover exponents by division
  std::vector<Element> primes = factor_squarefree_primitive(w);
  std::sort(primes.begin(), primes.end(), ElementLess{});
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<std::pair<Element, int>> out;
  Element rest = f;
  for (const Element& q : primes) {
    int e = 0;
    while (auto quotient = divide_exact(rest, q)) {
      rest = *quotient;
      ++e;
    }
    out.emplace_back(q, e);
  }
  return out;
}

}  // namespace

Factorization factor(const Element& x) {
  if (!x.ring.is_ufd())
    fail(errc::unsupported, "factor: " + x.ring.to_string() +
                                " is not a unique factorization domain; use "
                                "ideal factorization instead");
  if (is_zero(x) || is_unit(x))
    fail(errc::unit_or_zero, "factor of a unit or zero");
  Factorization fz{one(x.ring), {}};
  switch (x.ring.kind) {
    case RingKind::Int: {
      const Int& v = std::get<Int>(x.payload);
      if (v < 0) fz.unit = from_int(x.ring, -1);
      for (auto& [p, e] : factor_integer(v))
        fz.parts.emplace_back(from_int(x.ring, p), e);
      break;
    }
    case RingKind::GaussInt: {
      Element work = x;
      const Int norm = pair_norm(x);
      std::map<Element, int, ElementLess> acc;
      for (auto& [p, e] : factor_integer(norm)) {
        for (const Element& pi : gauss_primes_above(p)) {
          while (auto q = divide_exact(work, pi)) {
            work = *q;
            acc[pi] += 1;
          }
        }
      }
      if (!is_unit(work)) fail(errc::unsupported, "gauss factor leftover");
      fz.unit = work;
      fz.parts.assign(acc.begin(), acc.end());
      break;
    }
    case RingKind::PolyFp: {
      const Int p(x.ring.modulus);
      auto [canon, u] = canonical_associate_with_unit(x);
      fz.unit = unit_inverse(u);
      for (auto& [vec, e] : factor_mod_p(std::get<PolyPayload>(canon.payload), p))
        fz.parts.emplace_back(make_poly(x.ring, vec), e);
      break;
    }
    case RingKind::PolyZ: {
      auto [canon, u] = canonical_associate_with_unit(x);
      fz.unit = unit_inverse(u);
      const Int content = poly_content(canon);
      if (content > 1)
        for (auto& [p, e] : factor_integer(content))
          fz.parts.emplace_back(from_int(x.ring, p), e);
      if (poly_degree(canon) >= 1) {
        Element prim = poly_primitive_part(canon);
        auto parts = factor_primitive_polyz(prim);
        fz.parts.insert(fz.parts.end(), parts.begin(), parts.end());
      }
      std::sort(fz.parts.begin(), fz.parts.end(),
                [](const auto& a, const auto& b) {
                  return compare_elements(a.first, b.first) < 0;
                });
      break;
    }
    default: fail(errc::unsupported, "factor");
  }
  return fz;
}

std::vector<Element> distinct_irreducible_factors(const Element& x) {
  std::vector<Element> out;
  for (auto& [p, e] : factor(x).parts) out.push_back(p);
  return out;
}

Element some_irreducible_factor(const Element& x) {
  if (is_zero(x) || is_unit(x))
    fail(errc::unit_or_zero, "some_irreducible_factor of unit or zero");
  switch (x.ring.kind) {
    case RingKind::Int:
      return from_int(x.ring, some_prime_factor(std::get<Int>(x.payload)));
    case RingKind::GaussInt: {
      const Int p = some_prime_factor(pair_norm(x));
      for (const Element& pi : gauss_primes_above(p))
        if (divides(pi, x)) return pi;
      fail(errc::unsupported, "gauss prime lookup failed");
    }
    case RingKind::PolyFp:
    case RingKind::PolyZ: {
      if (x.ring.kind == RingKind::PolyZ) {
        const Int content = poly_content(x);
        if (content > 1) return from_int(x.ring, some_prime_factor(content));
        if (poly_degree(x) >= 1 && poly_coeff(x, 0) == 0)
          return poly_monomial(x.ring, 1, 1);
      }
      return factor(x).parts.front().first;
    }
    default: fail(errc::unsupported, "some_irreducible_factor");
  }
}

bool is_irreducible(const Element& x) {
  if (is_zero(x) || is_unit(x)) return false;
  switch (x.ring.kind) {
    case RingKind::Int:
      return is_probable_prime(abs(std::get<Int>(x.payload)));
    case RingKind::GaussInt: {
      const Int n = pair_norm(x);
      if (is_probable_prime(n)) return true;
      Int root;
      if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
      mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
      return is_probable_prime(root) && root % 4 == 3 &&
             canonical_associate(x) == make_pair(x.ring, root, 0);
    }
    case RingKind::QuadM5: {
      // irreducible iff the only proper divisors are units: scan by norm
      const Int n = pair_norm(x);
      for (Int m = 2; m < n; ++m) {
        if (!mpz_divisible_p(n.get_mpz_t(), m.get_mpz_t())) continue;
        for (Int v = 0; 5 * v * v <= m; ++v) {
          Int rest = m - 5 * v * v;
          if (!mpz_perfect_square_p(rest.get_mpz_t())) continue;
          Int u;
          mpz_sqrt(u.get_mpz_t(), rest.get_mpz_t());
          if (u == 0 && v == 0) continue;
          std::vector<Element> cands;
          if (u == 0)
            cands.push_back(make_pair(x.ring, 0, v));
          else if (v == 0)
            cands.push_back(make_pair(x.ring, u, 0));
          else {
            cands.push_back(make_pair(x.ring, u, v));
            cands.push_back(make_pair(x.ring, u, -v));
          }
          for (const Element& d : cands)
            if (divides(d, x)) return false;
        }
      }
      return true;
    }
    case RingKind::PolyFp:
    case RingKind::PolyZ: {
      const auto fz = factor(x);
      return fz.parts.size() == 1 && fz.parts.front().second == 1;
    }
    default:
      fail(errc::unsupported,
           "irreducibility test unavailable on " + x.ring.to_string());
  }
}

}  // namespace macias
