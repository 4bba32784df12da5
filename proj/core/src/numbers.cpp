#include "macias/numbers.hpp"

#include <algorithm>
#include <map>

#include "macias/errors.hpp"

namespace macias {

namespace {

// Miller-Rabin with a fixed base set.  The first twelve primes are a proven
// deterministic witness set below 3.3 * 10^24; beyond that the test is
// (overwhelmingly) probable, which is fine at desk scale.
const long kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(const Int& n, const Int& base) {
  if (mpz_divisible_p(n.get_mpz_t(), base.get_mpz_t())) return n == base;
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

const long kTrialBound = 1000000;

// Brent's cycle-finding rho with a fixed schedule of increments.
Int brent_rho(const Int& n) {
  for (long c = 1;; c += 2) {
    Int x = 2, y = 2, d = 1, q = 1, ys = y;
    long r = 1;
    const long m = 128;
    while (d == 1) {
      x = y;
      for (long i = 0; i < r; ++i) y = (y * y + c) % n;
      long k = 0;
      while (k < r && d == 1) {
        ys = y;
        const long count = std::min(m, r - k);
        for (long i = 0; i < count; ++i) {
          y = (y * y + c) % n;
          Int diff = x > y ? x - y : y - x;
          q = (q * diff) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (d == n) {  // backtrack one step at a time
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        Int diff = x > ys ? x - ys : ys - x;
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n) return d;
    // whole cycle collapsed; retry with next increment
  }
}

void factor_into(const Int& n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  Int f = brent_rho(n);
  Int g = n / f;
  if (f > g) std::swap(f, g);
  factor_into(f, out);
  factor_into(g, out);
}

}  // namespace

bool is_probable_prime(const Int& n) {
  if (n < 2) return false;
  for (long p : kMrBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)))
      return false;
  }
  for (long p : kMrBases) {
    if (!miller_rabin(n, Int(p))) return false;
  }
  return true;
}

Int some_prime_factor(const Int& n_in) {
  Int n = abs(n_in);
  if (n < 2) fail(errc::zero_input, "some_prime_factor needs |n| >= 2");
  for (long p = 2; p <= kTrialBound && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)))
      return Int(p);
  }
  if (n <= Int(kTrialBound) * kTrialBound || is_probable_prime(n)) return n;
  Int f = brent_rho(n);
  Int g = n / f;
  return some_prime_factor(f < g ? f : g);
}

std::vector<std::pair<Int, int>> factor_integer(const Int& n_in) {
  Int n = abs(n_in);
  if (n < 2) fail(errc::unit_or_zero, "factor_integer needs |n| >= 2");
  std::map<Int, int> acc;
  for (long p = 2; p <= kTrialBound; p = (p == 2 ? 3 : p + 2)) {
    if (Int(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
      acc[Int(p)] += 1;
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
    }
  }
  if (n > 1) factor_into(n, acc);
  return {acc.begin(), acc.end()};
}

std::vector<Int> distinct_prime_factors(const Int& n) {
  std::vector<Int> out;
  for (auto& [p, e] : factor_integer(n)) out.push_back(p);
  return out;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(bound) + 1, true);
  for (long i = 2; i <= bound; ++i) {
    if (!sieve[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long j = 2 * i; j <= bound; j += i) sieve[static_cast<std::size_t>(j)] = false;
  }
  return out;
}

long inverse_mod(long a, long m) {
  long r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    long t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) fail(errc::zero_input, "inverse_mod: not invertible");
  return ((t0 % m) + m) % m;
}

long sqrt_minus5_mod(long p) {
  const long a = ((-5 % p) + p) % p;
  Int pw;
  Int pz(p);
  // Euler criterion
  Int e = (pz - 1) / 2;
  mpz_powm(pw.get_mpz_t(), Int(a).get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
  if (pw != 1) return -1;
  // Tonelli-Shanks with ascending non-residue scan.
  long q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  long z = 2;
  for (;; ++z) {
    mpz_powm(pw.get_mpz_t(), Int(z).get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
    if (pw == pz - 1) break;
  }
  Int c, x, t, b;
  mpz_powm(c.get_mpz_t(), Int(z).get_mpz_t(), Int(q).get_mpz_t(), pz.get_mpz_t());
  mpz_powm(x.get_mpz_t(), Int(a).get_mpz_t(), Int((q + 1) / 2).get_mpz_t(), pz.get_mpz_t());
  mpz_powm(t.get_mpz_t(), Int(a).get_mpz_t(), Int(q).get_mpz_t(), pz.get_mpz_t());
  long m = s;
  while (t != 1) {
    Int tt = t;
    long i = 0;
    while (tt != 1) {
      tt = (tt * tt) % pz;
      ++i;
    }
    b = c;
    for (long j = 0; j < m - i - 1; ++j) b = (b * b) % pz;
    x = (x * b) % pz;
    c = (b * b) % pz;
    t = (t * c) % pz;
    m = i;
  }
  long r = static_cast<long>(x.get_si());
  if (r > (p - 1) / 2) r = p - r;
  return r;
}

Int power(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::syntax: return "SyntaxError";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::unsupported: return "Unsupported";
    case errc::both_zero: return "BothZero";
    case errc::zero_input: return "ZeroInput";
    case errc::unit_or_zero: return "UnitOrZero";
    case errc::infinite_set: return "InfiniteSet";
    case errc::method_unavailable: return "MethodUnavailable";
    case errc::improper_ideal: return "ImproperIdeal";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::zero_in_punctured: return "ZeroInPunctured";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::empty_known_set: return "EmptyKnownSet";
    case errc::window_invalid: return "WindowInvalid";
  }
  return "UnknownError";
}

}  // namespace macias
