// Shared integer arithmetic: Kronecker symbol, factorization, divisor sums,
// and exact rationals (GMP). Everything here is exact; no floating point
// enters any counting path.
#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <utility>
#include <vector>

namespace coreforms {

// Exact rational used across all modules. Identities are checked bit-exactly.
using Rat = mpq_class;

inline Rat rat(long long num, long long den = 1) {
  Rat r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// Floor of sqrt(n) for n >= 0, exact.
long long isqrt_ll(long long n);

// True iff n is a perfect square; stores the nonnegative root.
bool is_square_ll(long long n, long long* root = nullptr);

// Kronecker symbol (a/n), the extension of the Jacobi symbol to all
// integers n: (a/2) is 0 for even a, +1 for a = +-1 (mod 8), -1 for
// a = +-3 (mod 8); (a/-1) is -1 for a < 0 and +1 otherwise; (a/0) is
// nonzero only for a = +-1.
int kronecker(long long a, long long n);

// Trial-division factorization of n >= 1, primes ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

std::vector<long long> divisors(long long n);

long long sigma1(long long n);          // sum of divisors of n >= 1
int mobius(long long n);                // Moebius function
long long sigma5_twisted(long long n);  // sum over d|n of (d/5) * n/d
bool is_squarefree(long long n);
int omega_distinct(long long n);        // number of distinct prime divisors
long long odd_part(long long n, int* two_exponent = nullptr);

long long gcd_ll(long long a, long long b);

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
long long ext_gcd(long long a, long long b, long long& x, long long& y);

// Primes up to n inclusive.
std::vector<long long> primes_up_to(long long n);
bool is_prime_ll(long long n);

}  // namespace coreforms
