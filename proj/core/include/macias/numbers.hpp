#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace macias {

using Int = mpz_class;

// Rational-integer number theory used throughout the ring and ideal layers.
// Everything here is deterministic: fixed Miller-Rabin bases, fixed Brent-rho
// parameter schedule, so two runs always factor the same way.

bool is_probable_prime(const Int& n);

// Some prime divisor of |n| (|n| >= 2).  Trial division first, then a
// deterministic Brent rho split, recursing into the smaller half.  Finds the
// smallest prime whenever it is below the trial-division bound.
Int some_prime_factor(const Int& n);

// Full factorization of |n| (n != 0, |n| != 1), ascending primes.
std::vector<std::pair<Int, int>> factor_integer(const Int& n);

// Distinct primes of |n|, ascending.
std::vector<Int> distinct_prime_factors(const Int& n);

std::vector<long> primes_up_to(long bound);

// x with x^2 = -5 (mod p) for odd prime p not dividing 5, canonicalized to
// 0 < x <= (p-1)/2; returns -1 if -5 is a non-residue.
long sqrt_minus5_mod(long p);

// Modular inverse for word-sized operands; m > 1, gcd(a, m) = 1.
long inverse_mod(long a, long m);

Int power(const Int& base, unsigned long exp);

}  // namespace macias
