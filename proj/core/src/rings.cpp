#include "macias/rings.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "macias/errors.hpp"

namespace macias {

namespace {

bool is_prime_long(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

const Int& as_int(const Element& x) { return std::get<Int>(x.payload); }
const PairPayload& as_pair(const Element& x) {
  return std::get<PairPayload>(x.payload);
}
const PolyPayload& as_poly(const Element& x) {
  return std::get<PolyPayload>(x.payload);
}

Int mod_p(const Int& c, int p) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
  return r;
}

PolyPayload canonical_poly(PolyPayload c, const RingDescriptor& ring) {
  if (ring.kind == RingKind::PolyFp)
    for (auto& v : c) v = mod_p(v, ring.modulus);
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

int cmp_int(const Int& a, const Int& b) { return mpz_cmp(a.get_mpz_t(), b.get_mpz_t()); }

// |v| ascending, nonnegative value first on ties: 0 < 1 < -1 < 2 < -2 < ...
int cmp_scan_value(const Int& a, const Int& b) {
  Int aa = abs(a), ab = abs(b);
  if (int c = cmp_int(aa, ab)) return c;
  int sa = a < 0 ? 1 : 0, sb = b < 0 ? 1 : 0;
  return sa - sb;
}

int cmp_payload(const Element& x, const Element& y,
                int (*value_cmp)(const Int&, const Int&)) {
  if (x.payload.index() != y.payload.index())
    fail(errc::ring_mismatch, "payload kinds differ");
  if (std::holds_alternative<Int>(x.payload))
    return value_cmp(as_int(x), as_int(y));
  if (std::holds_alternative<PairPayload>(x.payload)) {
    const auto &a = as_pair(x), &b = as_pair(y);
    if (int c = value_cmp(a.a, b.a)) return c;
    return value_cmp(a.b, b.b);
  }
  const auto &a = as_poly(x), &b = as_poly(y);
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = value_cmp(a[i], b[i])) return c;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

// Literal scanning helpers -----------------------------------------------

bool scan_integer(const std::string& s, std::size_t& pos, Int& out,
                  bool allow_sign) {
  std::size_t start = pos;
  if (allow_sign && pos < s.size() && s[pos] == '-') ++pos;
  std::size_t digits = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (pos == digits) {
    pos = start;
    return false;
  }
  out = Int(s.substr(start, pos - start));
  return true;
}

Element parse_int_literal(const RingDescriptor& ring, const std::string& s) {
  std::size_t pos = 0;
  Int v;
  if (!scan_integer(s, pos, v, true) || pos != s.size())
    fail(errc::syntax, "bad integer literal: '" + s + "'");
  return Element{ring, v};
}

Element parse_pair_ring_literal(const RingDescriptor& ring,
                                const std::string& s, char unit) {
  // Forms: a | bi | a+bi | a-bi, with b optionally implicit 1.
  auto bad = [&]() -> void {
    fail(errc::syntax, std::string("bad literal for ") + ring.to_string() +
                           ": '" + s + "'");
  };
  if (s.empty()) bad();
  if (s.back() != unit) {
    std::size_t pos = 0;
    Int a;
    if (!scan_integer(s, pos, a, true) || pos != s.size()) bad();
    return make_pair(ring, a, 0);
  }
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last top-level +/- that is not the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < body.size(); ++i)
    if (body[i] == '+' || body[i] == '-') split = i;
  if (split == std::string::npos) {
    // pure imaginary: body is the (possibly signed, possibly empty) b
    Int b = 1;
    if (!body.empty() && body != "-") {
      std::size_t pos = 0;
      if (!scan_integer(body, pos, b, true) || pos != body.size()) bad();
    } else if (body == "-") {
      b = -1;
    }
    return make_pair(ring, 0, b);
  }
  std::size_t pos = 0;
  Int a;
  if (!scan_integer(body, pos, a, true) || pos != split) bad();
  const char sign = body[split];
  std::string bpart = body.substr(split + 1);
  Int b = 1;
  if (!bpart.empty()) {
    std::size_t bpos = 0;
    if (!scan_integer(bpart, bpos, b, false) || bpos != bpart.size()) bad();
  }
  if (sign == '-') b = -b;
  return make_pair(ring, a, b);
}

Element parse_poly_literal(const RingDescriptor& ring, const std::string& raw) {
  auto bad = [&]() -> void {
    fail(errc::syntax, "bad polynomial literal: '" + raw + "'");
  };
  // Normalize the ** power spelling to ^ before scanning.
  std::string s;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '*' && i + 1 < raw.size() && raw[i + 1] == '*') {
      s += '^';
      ++i;
    } else {
      s += raw[i];
    }
  }
  if (s.empty()) bad();
  PolyPayload coeffs;
  auto install = [&](const Int& c, long k) {
    if (k < 0 || k > 4096) bad();
    if (coeffs.size() <= static_cast<std::size_t>(k))
      coeffs.resize(static_cast<std::size_t>(k) + 1, Int(0));
    coeffs[static_cast<std::size_t>(k)] += c;
  };
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (first && s[pos] == '+') bad();
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      bad();
    }
    first = false;
    Int c = 1;
    bool have_digits = scan_integer(s, pos, c, false);
    long k = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      k = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        Int kk;
        if (!scan_integer(s, pos, kk, false)) bad();
        if (!kk.fits_slong_p()) bad();
        k = kk.get_si();
      }
    } else if (!have_digits) {
      bad();
    }
    install(sign < 0 ? Int(-c) : c, k);
  }
  return make_poly(ring, std::move(coeffs));
}

Element parse_prod_literal(const RingDescriptor& ring, const std::string& s) {
  auto bad = [&]() -> void {
    fail(errc::syntax, "bad pair literal for ZxZ: '" + s + "'");
  };
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') bad();
  std::size_t pos = 1;
  Int a, b;
  if (!scan_integer(s, pos, a, true)) bad();
  if (pos >= s.size() || s[pos] != ',') bad();
  ++pos;
  if (!scan_integer(s, pos, b, true)) bad();
  if (pos + 1 != s.size()) bad();
  return make_pair(ring, a, b);
}

std::string render_pair(const Element& x, char unit) {
  const auto& p = as_pair(x);
  if (p.a == 0 && p.b == 0) return "0";
  if (p.b == 0) return p.a.get_str();
  if (p.a == 0) return p.b.get_str() + unit;
  std::string out = p.a.get_str();
  out += p.b < 0 ? '-' : '+';
  Int ab = abs(p.b);
  out += ab.get_str();
  out += unit;
  return out;
}

std::string render_poly(const Element& x) {
  const auto& c = as_poly(x);
  if (c.empty()) return "0";
  std::string out;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
    const Int& v = c[static_cast<std::size_t>(k)];
    if (v == 0) continue;
    const bool neg = v < 0;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    Int av = abs(v);
    if (k == 0) {
      out += av.get_str();
    } else {
      if (av != 1) out += av.get_str();
      out += 'x';
      if (k >= 2) {
        out += '^';
        out += std::to_string(k);
      }
    }
  }
  return out;
}

}  // namespace

RingDescriptor RingDescriptor::poly_fp(int p) {
  if (p < 2 || p > 97 || !is_prime_long(p))
    fail(errc::syntax, "Fp[x] modulus must be a prime in [2, 97], got " +
                           std::to_string(p));
  return {RingKind::PolyFp, p};
}

RingDescriptor RingDescriptor::parse(const std::string& spec) {
  if (spec == "Z") return integers();
  if (spec == "Zi") return gauss();
  if (spec == "Zw5") return quad_m5();
  if (spec == "Z[x]") return poly_z();
  if (spec == "ZxZ") return prod_int_int();
  const std::string prefix = "Fp[x]:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string digits = spec.substr(prefix.size());
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char ch) { return std::isdigit(ch); }))
      fail(errc::syntax, "bad ring spec: '" + spec + "'");
    return poly_fp(std::stoi(digits));
  }
  fail(errc::syntax, "unknown ring spec: '" + spec + "'");
}

std::string RingDescriptor::to_string() const {
  switch (kind) {
    case RingKind::Int: return "Z";
    case RingKind::GaussInt: return "Zi";
    case RingKind::QuadM5: return "Zw5";
    case RingKind::PolyFp: return "Fp[x]:" + std::to_string(modulus);
    case RingKind::PolyZ: return "Z[x]";
    case RingKind::ProdIntInt: return "ZxZ";
  }
  return "?";
}

Element zero(const RingDescriptor& ring) { return from_int(ring, 0); }
Element one(const RingDescriptor& ring) { return from_int(ring, 1); }

Element from_int(const RingDescriptor& ring, const Int& n) {
  switch (ring.kind) {
    case RingKind::Int: return Element{ring, n};
    case RingKind::GaussInt:
    case RingKind::QuadM5: return make_pair(ring, n, 0);
    case RingKind::ProdIntInt: return make_pair(ring, n, n);
    case RingKind::PolyFp:
    case RingKind::PolyZ: return make_poly(ring, {n});
  }
  fail(errc::unsupported, "from_int");
}

Element make_pair(const RingDescriptor& ring, Int a, Int b) {
  if (!ring.is_pair()) fail(errc::unsupported, "make_pair: not a pair ring");
  return Element{ring, PairPayload{std::move(a), std::move(b)}};
}

Element make_poly(const RingDescriptor& ring, PolyPayload coeffs) {
  if (!ring.is_poly()) fail(errc::unsupported, "make_poly: not a polynomial ring");
  return Element{ring, canonical_poly(std::move(coeffs), ring)};
}

Element parse_element(const RingDescriptor& ring, const std::string& text) {
  switch (ring.kind) {
    case RingKind::Int: return parse_int_literal(ring, text);
    case RingKind::GaussInt: return parse_pair_ring_literal(ring, text, 'i');
    case RingKind::QuadM5: return parse_pair_ring_literal(ring, text, 'w');
    case RingKind::PolyFp:
    case RingKind::PolyZ: return parse_poly_literal(ring, text);
    case RingKind::ProdIntInt: return parse_prod_literal(ring, text);
  }
  fail(errc::syntax, "parse_element: bad ring");
}

std::string render_element(const Element& x) {
  switch (x.ring.kind) {
    case RingKind::Int: return as_int(x).get_str();
    case RingKind::GaussInt: return render_pair(x, 'i');
    case RingKind::QuadM5: return render_pair(x, 'w');
    case RingKind::PolyFp:
    case RingKind::PolyZ: return render_poly(x);
    case RingKind::ProdIntInt: {
      const auto& p = as_pair(x);
      return "(" + p.a.get_str() + "," + p.b.get_str() + ")";
    }
  }
  return "?";
}

void require_same_ring(const Element& x, const Element& y) {
  if (!(x.ring == y.ring))
    fail(errc::ring_mismatch, "operands from different rings: " +
                                  x.ring.to_string() + " vs " +
                                  y.ring.to_string());
}

Element neg(const Element& x) {
  switch (x.ring.kind) {
    case RingKind::Int: return Element{x.ring, Int(-as_int(x))};
    case RingKind::PolyFp:
    case RingKind::PolyZ: {
      PolyPayload c = as_poly(x);
      for (auto& v : c) v = -v;
      return make_poly(x.ring, std::move(c));
    }
    default: {
      const auto& p = as_pair(x);
      return make_pair(x.ring, -p.a, -p.b);
    }
  }
}

Element add(const Element& x, const Element& y) {
  require_same_ring(x, y);
  switch (x.ring.kind) {
    case RingKind::Int: return Element{x.ring, Int(as_int(x) + as_int(y))};
    case RingKind::PolyFp:
    case RingKind::PolyZ: {
      const auto &a = as_poly(x), &b = as_poly(y);
      PolyPayload c(std::max(a.size(), b.size()), Int(0));
      for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
      for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
      return make_poly(x.ring, std::move(c));
    }
    default: {
      const auto &a = as_pair(x), &b = as_pair(y);
      return make_pair(x.ring, a.a + b.a, a.b + b.b);
    }
  }
}

Element sub(const Element& x, const Element& y) { return add(x, neg(y)); }

Element mul(const Element& x, const Element& y) {
  require_same_ring(x, y);
  switch (x.ring.kind) {
    case RingKind::Int: return Element{x.ring, Int(as_int(x) * as_int(y))};
    case RingKind::GaussInt:
    case RingKind::QuadM5: {
      const auto &a = as_pair(x), &b = as_pair(y);
      const long m = x.ring.kind == RingKind::GaussInt ? -1 : -5;
      return make_pair(x.ring, a.a * b.a + m * a.b * b.b,
                       a.a * b.b + a.b * b.a);
    }
    case RingKind::ProdIntInt: {
      const auto &a = as_pair(x), &b = as_pair(y);
      return make_pair(x.ring, a.a * b.a, a.b * b.b);
    }
    case RingKind::PolyFp:
    case RingKind::PolyZ: {
      const auto &a = as_poly(x), &b = as_poly(y);
      if (a.empty() || b.empty()) return zero(x.ring);
      PolyPayload c(a.size() + b.size() - 1, Int(0));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
      return make_poly(x.ring, std::move(c));
    }
  }
  fail(errc::unsupported, "mul");
}

bool is_zero(const Element& x) {
  switch (x.ring.kind) {
    case RingKind::Int: return as_int(x) == 0;
    case RingKind::PolyFp:
    case RingKind::PolyZ: return as_poly(x).empty();
    default: {
      const auto& p = as_pair(x);
      return p.a == 0 && p.b == 0;
    }
  }
}

bool is_one(const Element& x) { return x == one(x.ring); }

bool is_unit(const Element& x) {
  switch (x.ring.kind) {
    case RingKind::Int: return abs(as_int(x)) == 1;
    case RingKind::GaussInt: return pair_norm(x) == 1;
    case RingKind::QuadM5: return pair_norm(x) == 1;
    case RingKind::PolyFp: return as_poly(x).size() == 1;
    case RingKind::PolyZ: {
      const auto& c = as_poly(x);
      return c.size() == 1 && abs(c[0]) == 1;
    }
    case RingKind::ProdIntInt: {
      const auto& p = as_pair(x);
      return abs(p.a) == 1 && abs(p.b) == 1;
    }
  }
  return false;
}

Element unit_inverse(const Element& u) {
  if (!is_unit(u)) fail(errc::zero_input, "unit_inverse: not a unit");
  switch (u.ring.kind) {
    case RingKind::Int:
    case RingKind::PolyZ:
    case RingKind::QuadM5:
    case RingKind::ProdIntInt: return u;  // self-inverse unit groups
    case RingKind::GaussInt: return pair_conjugate(u);
    case RingKind::PolyFp: {
      const long c = as_poly(u)[0].get_si();
      return make_poly(u.ring, {Int(inverse_mod(c, u.ring.modulus))});
    }
  }
  fail(errc::unsupported, "unit_inverse");
}

std::vector<Element> units_of(const RingDescriptor& ring) {
  switch (ring.kind) {
    case RingKind::Int: return {from_int(ring, 1), from_int(ring, -1)};
    case RingKind::GaussInt:
      return {make_pair(ring, 1, 0), make_pair(ring, -1, 0),
              make_pair(ring, 0, 1), make_pair(ring, 0, -1)};
    case RingKind::QuadM5:
      return {make_pair(ring, 1, 0), make_pair(ring, -1, 0)};
    case RingKind::PolyFp: {
      std::vector<Element> out;
      for (int c = 1; c < ring.modulus; ++c)
        out.push_back(make_poly(ring, {Int(c)}));
      return out;
    }
    case RingKind::PolyZ:
      return {from_int(ring, 1), from_int(ring, -1)};
    case RingKind::ProdIntInt:
      return {make_pair(ring, 1, 1), make_pair(ring, 1, -1),
              make_pair(ring, -1, 1), make_pair(ring, -1, -1)};
  }
  return {};
}

bool divides(const Element& d, const Element& x) {
  require_same_ring(d, x);
  if (is_zero(d)) return is_zero(x);
  if (x.ring.kind == RingKind::ProdIntInt) {
    const auto &dp = as_pair(d), &xp = as_pair(x);
    auto coord = [](const Int& dd, const Int& xx) {
      if (dd == 0) return xx == 0;
      return mpz_divisible_p(xx.get_mpz_t(), dd.get_mpz_t()) != 0;
    };
    return coord(dp.a, xp.a) && coord(dp.b, xp.b);
  }
  return divide_exact(x, d).has_value();
}

std::optional<Element> divide_exact(const Element& x, const Element& d) {
  require_same_ring(x, d);
  if (is_zero(d)) fail(errc::zero_input, "divide_exact by zero");
  switch (x.ring.kind) {
    case RingKind::Int: {
      if (!mpz_divisible_p(as_int(x).get_mpz_t(), as_int(d).get_mpz_t()))
        return std::nullopt;
      Int q;
      mpz_divexact(q.get_mpz_t(), as_int(x).get_mpz_t(), as_int(d).get_mpz_t());
      return Element{x.ring, q};
    }
    case RingKind::GaussInt:
    case RingKind::QuadM5: {
      const Int n = pair_norm(d);
      const Element t = mul(x, pair_conjugate(d));
      const auto& tp = as_pair(t);
      if (!mpz_divisible_p(tp.a.get_mpz_t(), n.get_mpz_t()) ||
          !mpz_divisible_p(tp.b.get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
      Int qa, qb;
      mpz_divexact(qa.get_mpz_t(), tp.a.get_mpz_t(), n.get_mpz_t());
      mpz_divexact(qb.get_mpz_t(), tp.b.get_mpz_t(), n.get_mpz_t());
      return make_pair(x.ring, qa, qb);
    }
    case RingKind::ProdIntInt: {
      const auto &xp = as_pair(x), &dp = as_pair(d);
      auto coord = [](const Int& xx, const Int& dd) -> std::optional<Int> {
        if (dd == 0) {
          if (xx == 0) return Int(0);
          return std::nullopt;
        }
        if (!mpz_divisible_p(xx.get_mpz_t(), dd.get_mpz_t()))
          return std::nullopt;
        Int q;
        mpz_divexact(q.get_mpz_t(), xx.get_mpz_t(), dd.get_mpz_t());
        return q;
      };
      auto qa = coord(xp.a, dp.a), qb = coord(xp.b, dp.b);
      if (!qa || !qb) return std::nullopt;
      return make_pair(x.ring, *qa, *qb);
    }
    case RingKind::PolyFp: {
      // long division, leading coefficient invertible
      PolyPayload r = as_poly(x);
      const auto& dd = as_poly(d);
      const int p = x.ring.modulus;
      const long lc_inv = inverse_mod(dd.back().get_si(), p);
      PolyPayload q(r.size() >= dd.size() ? r.size() - dd.size() + 1 : 0,
                    Int(0));
      while (r.size() >= dd.size() && !r.empty()) {
        Int coef = mod_p(r.back() * lc_inv, p);
        const std::size_t shift = r.size() - dd.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < dd.size(); ++i)
          r[shift + i] = mod_p(r[shift + i] - coef * dd[i], p);
        while (!r.empty() && r.back() == 0) r.pop_back();
      }
      if (!r.empty()) return std::nullopt;
      return make_poly(x.ring, std::move(q));
    }
    case RingKind::PolyZ: {
      PolyPayload r = as_poly(x);
      const auto& dd = as_poly(d);
      PolyPayload q(r.size() >= dd.size() ? r.size() - dd.size() + 1 : 0,
                    Int(0));
      while (r.size() >= dd.size() && !r.empty()) {
        if (!mpz_divisible_p(r.back().get_mpz_t(), dd.back().get_mpz_t()))
          return std::nullopt;
        Int coef;
        mpz_divexact(coef.get_mpz_t(), r.back().get_mpz_t(),
                     dd.back().get_mpz_t());
        const std::size_t shift = r.size() - dd.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < dd.size(); ++i) r[shift + i] -= coef * dd[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
      }
      if (!r.empty()) return std::nullopt;
      return make_poly(x.ring, std::move(q));
    }
  }
  fail(errc::unsupported, "divide_exact");
}

std::pair<Element, Element> canonical_associate_with_unit(const Element& x) {
  const RingDescriptor& ring = x.ring;
  if (is_zero(x)) return {x, one(ring)};
  switch (ring.kind) {
    case RingKind::Int: {
      if (as_int(x) < 0) return {neg(x), from_int(ring, -1)};
      return {x, one(ring)};
    }
    case RingKind::GaussInt: {
      for (const Element& u : units_of(ring)) {
        Element c = mul(u, x);
        const auto& p = as_pair(c);
        if (p.a > 0 && p.b >= 0) return {c, u};
      }
      fail(errc::zero_input, "gauss associate: unreachable");
    }
    case RingKind::QuadM5: {
      const auto& p = as_pair(x);
      const Int& lead = p.a != 0 ? p.a : p.b;
      if (lead < 0) return {neg(x), from_int(ring, -1)};
      return {x, one(ring)};
    }
    case RingKind::PolyFp: {
      const Int& lc = as_poly(x).back();
      const Element u =
          make_poly(ring, {Int(inverse_mod(lc.get_si(), ring.modulus))});
      return {mul(u, x), u};
    }
    case RingKind::PolyZ: {
      if (as_poly(x).back() < 0) return {neg(x), from_int(ring, -1)};
      return {x, one(ring)};
    }
    case RingKind::ProdIntInt: {
      const auto& p = as_pair(x);
      const Int ua = p.a < 0 ? -1 : 1, ub = p.b < 0 ? -1 : 1;
      const Element u = make_pair(ring, ua, ub);
      return {mul(u, x), u};
    }
  }
  fail(errc::unsupported, "canonical_associate");
}

Element canonical_associate(const Element& x) {
  return canonical_associate_with_unit(x).first;
}

Int height(const Element& x) {
  switch (x.ring.kind) {
    case RingKind::Int: return abs(as_int(x));
    case RingKind::GaussInt:
    case RingKind::QuadM5:
    case RingKind::ProdIntInt: {
      const auto& p = as_pair(x);
      Int aa = abs(p.a), ab = abs(p.b);
      return aa > ab ? aa : ab;
    }
    case RingKind::PolyFp: {
      const auto& c = as_poly(x);
      Int acc = 0;
      for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * x.ring.modulus + c[i];
      return acc;
    }
    case RingKind::PolyZ: {
      const auto& c = as_poly(x);
      if (c.empty()) return 0;
      Int h = Int(static_cast<long>(c.size()) - 1);
      for (const auto& v : c) {
        Int av = abs(v);
        if (av > h) h = av;
      }
      return h;
    }
  }
  fail(errc::unsupported, "height");
}

int compare_elements(const Element& x, const Element& y) {
  require_same_ring(x, y);
  Int hx = height(x), hy = height(y);
  if (int c = cmp_int(hx, hy)) return c;
  return cmp_payload(x, y, cmp_int);
}

int compare_scan(const Element& x, const Element& y) {
  require_same_ring(x, y);
  Int hx = height(x), hy = height(y);
  if (int c = cmp_int(hx, hy)) return c;
  return cmp_payload(x, y, cmp_scan_value);
}

void validate_window(const RingDescriptor& ring, const Window& w) {
  auto need_height = [&]() {
    if (!w.height || *w.height < 0)
      fail(errc::window_invalid,
           "window for " + ring.to_string() + " needs a height bound");
  };
  auto need_degree = [&]() {
    if (!w.degree || *w.degree < 0)
      fail(errc::window_invalid,
           "window for " + ring.to_string() + " needs a degree bound");
  };
  switch (ring.kind) {
    case RingKind::Int:
    case RingKind::GaussInt:
    case RingKind::QuadM5:
    case RingKind::ProdIntInt: need_height(); break;
    case RingKind::PolyFp: need_degree(); break;
    case RingKind::PolyZ:
      need_height();
      need_degree();
      break;
  }
}

namespace {

const long kWindowCap = 4000000;  // elements per enumerated window

void check_window_size(const Int& count) {
  if (count > kWindowCap)
    fail(errc::budget_exceeded,
         "window holds " + count.get_str() + " elements (cap " +
             std::to_string(kWindowCap) + "); shrink the bounds");
}

}  // namespace

std::vector<Element> enumerate_window(const RingDescriptor& ring,
                                      const Window& w, WindowFilter filter) {
  validate_window(ring, w);
  std::vector<Element> out;
  auto keep = [&](Element e) {
    if (filter != WindowFilter::all && is_zero(e)) return;
    if (filter == WindowFilter::nonunit_nonzero && is_unit(e)) return;
    out.push_back(std::move(e));
  };
  switch (ring.kind) {
    case RingKind::Int: {
      const Int& H = *w.height;
      check_window_size(Int(2 * H + 1));
      keep(from_int(ring, 0));
      for (Int h = 1; h <= H; ++h) {
        keep(from_int(ring, -h));
        keep(from_int(ring, h));
      }
      return out;
    }
    case RingKind::GaussInt:
    case RingKind::QuadM5:
    case RingKind::ProdIntInt: {
      const Int& H = *w.height;
      check_window_size(Int((2 * H + 1) * (2 * H + 1)));
      keep(make_pair(ring, 0, 0));
      for (Int h = 1; h <= H; ++h)
        for (Int a = -h; a <= h; ++a) {
          if (abs(a) == h) {
            for (Int b = -h; b <= h; ++b) keep(make_pair(ring, a, b));
          } else {
            keep(make_pair(ring, a, -h));
            keep(make_pair(ring, a, h));
          }
        }
      return out;
    }
    case RingKind::PolyFp: {
      const int D = *w.degree;
      const Int p = ring.modulus;
      Int count = power(p, static_cast<unsigned long>(D) + 1);
      check_window_size(count);
      // height equals the base-p encoding, so counting upward is already
      // the canonical order
      for (Int code = 0; code < count; ++code) {
        Int rest = code;
        PolyPayload c;
        while (rest > 0) {
          Int digit;
          mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(),
                      p.get_mpz_t());
          c.push_back(digit);
        }
        keep(make_poly(ring, std::move(c)));
      }
      return out;
    }
    case RingKind::PolyZ: {
      const int D = *w.degree;
      const Int& H = *w.height;
      Int span = 2 * H + 1;
      check_window_size(power(span, static_cast<unsigned long>(D) + 1));
      std::vector<Element> all;
      PolyPayload cur;
      // all coefficient tuples (c_0..c_d), c_d != 0, entries |c| <= H
      auto rec = [&](auto&& self, int idx, int deg) -> void {
        if (idx > deg) {
          if (cur.empty() || cur.back() != 0)
            all.push_back(make_poly(ring, cur));
          return;
        }
        for (Int c = -H; c <= H; ++c) {
          cur.push_back(c);
          self(self, idx + 1, deg);
          cur.pop_back();
        }
      };
      all.push_back(zero(ring));
      for (int deg = 0; deg <= D; ++deg) {
        cur.clear();
        rec(rec, 0, deg);
      }
      std::sort(all.begin(), all.end(), ElementLess{});
      all.erase(std::unique(all.begin(), all.end()), all.end());
      for (auto& e : all) keep(std::move(e));
      return out;
    }
  }
  fail(errc::unsupported, "enumerate_window");
}

int poly_degree(const Element& x) {
  return static_cast<int>(as_poly(x).size()) - 1;
}

Int poly_coeff(const Element& x, int i) {
  const auto& c = as_poly(x);
  if (i < 0 || static_cast<std::size_t>(i) >= c.size()) return 0;
  return c[static_cast<std::size_t>(i)];
}

Element poly_derivative(const Element& x) {
  const auto& c = as_poly(x);
  PolyPayload d;
  for (std::size_t i = 1; i < c.size(); ++i)
    d.push_back(c[i] * static_cast<long>(i));
  return make_poly(x.ring, std::move(d));
}

Element poly_monomial(const RingDescriptor& ring, const Int& c, int k) {
  PolyPayload v(static_cast<std::size_t>(k) + 1, Int(0));
  v.back() = c;
  return make_poly(ring, std::move(v));
}

Int pair_norm(const Element& x) {
  const auto& p = as_pair(x);
  const long m = x.ring.kind == RingKind::GaussInt ? 1 : 5;
  if (x.ring.kind == RingKind::ProdIntInt)
    fail(errc::unsupported, "pair_norm on ZxZ");
  return p.a * p.a + m * p.b * p.b;
}

Element pair_conjugate(const Element& x) {
  const auto& p = as_pair(x);
  return make_pair(x.ring, p.a, -p.b);
}

}  // namespace macias
